//! Exact combinatorics of orchard relations.
//!
//! A generic symmetric or antisymmetric sign function on the `(d + 1)`-subsets
//! of a finite set splits that set into at most two classes, according to the
//! parity of how many `d`-subsets separate each pair of elements. This crate
//! computes that partition by direct enumeration, along with the operators
//! that change the arity of a function, the GF(2) chain complex they induce,
//! and the two classical sources of such functions: tournaments and generic
//! point configurations.
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adapters;
pub mod combinatorics;
pub mod error;
pub mod gf2;
pub mod operators;
pub mod orchard;
pub mod random;
pub mod sign;
pub mod signfn;

pub use adapters::{PointConfiguration, Tournament};
pub use combinatorics::SubsetCode;
pub use error::{Error, Result};
pub use operators::F2Complex;
pub use orchard::{OrchardPartition, OrchardRelation, SeparationProfile};
pub use sign::Sign;
pub use signfn::{SignFunction, SymmetryKind};
