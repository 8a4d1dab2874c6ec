//! Generic symmetric and antisymmetric sign functions on `k`-subsets.
//!
//! A function on `C([1, n], k)` is stored as one sign per subset, in colex
//! order, holding its value on the increasing ordering of that subset. For an
//! antisymmetric function the value on any other ordering picks up the sign of
//! the sorting permutation.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use rand_core::Rng;

use crate::combinatorics::{binomial, checked_binomial, permutation_parity, SubsetCode};
use crate::error::{Error, Result};
use crate::random;
use crate::sign::Sign;

/// Behaviour under swapping two arguments.
///
/// Multiplies like `{-1, +1}` with `Symmetric` as the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    Symmetric,
    Antisymmetric,
}

impl SymmetryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryKind::Symmetric => "symmetric",
            SymmetryKind::Antisymmetric => "antisymmetric",
        }
    }

    /// Sign picked up by one transposition of arguments.
    pub fn transposition_sign(self) -> Sign {
        match self {
            SymmetryKind::Symmetric => Sign::Positive,
            SymmetryKind::Antisymmetric => Sign::Negative,
        }
    }

    fn from_transposition_sign(s: Sign) -> SymmetryKind {
        match s {
            Sign::Positive => SymmetryKind::Symmetric,
            Sign::Negative => SymmetryKind::Antisymmetric,
        }
    }
}

impl Mul for SymmetryKind {
    type Output = SymmetryKind;

    fn mul(self, rhs: SymmetryKind) -> SymmetryKind {
        SymmetryKind::from_transposition_sign(self.transposition_sign() * rhs.transposition_sign())
    }
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Error for an unrecognised kind name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseKindError;

impl fmt::Display for ParseKindError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("kind must be \"symmetric\" or \"antisymmetric\"")
    }
}

impl FromStr for SymmetryKind {
    type Err = ParseKindError;

    fn from_str(s: &str) -> core::result::Result<SymmetryKind, ParseKindError> {
        match s {
            "symmetric" => Ok(SymmetryKind::Symmetric),
            "antisymmetric" => Ok(SymmetryKind::Antisymmetric),
            _ => Err(ParseKindError),
        }
    }
}

/// A generic sign function `C([1, n], arity) -> {-1, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignFunction {
    n: u32,
    arity: u32,
    kind: SymmetryKind,
    signs: Vec<Sign>,
}

fn check_arity(n: u32, arity: u32) -> Result<u64> {
    if arity == 0 || arity > n {
        return Err(Error::ArityOutOfRange { arity, n });
    }
    let len =
        checked_binomial(u64::from(n), u64::from(arity)).ok_or(Error::TooLarge { n, k: arity })?;
    usize::try_from(len).map_err(|_| Error::TooLarge { n, k: arity })?;
    Ok(len)
}

impl SignFunction {
    /// Builds a function from its signs on increasing tuples, in colex order.
    pub fn new(n: u32, arity: u32, kind: SymmetryKind, signs: Vec<Sign>) -> Result<SignFunction> {
        let len = check_arity(n, arity)?;
        if signs.len() as u64 != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: signs.len(),
            });
        }
        Ok(SignFunction {
            n,
            arity,
            kind,
            signs,
        })
    }

    /// Like [`SignFunction::new`] from raw integers, rejecting anything but `±1`.
    pub fn from_values(
        n: u32,
        arity: u32,
        kind: SymmetryKind,
        values: &[i64],
    ) -> Result<SignFunction> {
        let signs = values
            .iter()
            .map(|&v| Sign::try_from(v))
            .collect::<Result<Vec<_>>>()?;
        SignFunction::new(n, arity, kind, signs)
    }

    /// The function that is `+1` on every increasing tuple.
    pub fn constant_one(n: u32, arity: u32, kind: SymmetryKind) -> Result<SignFunction> {
        let len = check_arity(n, arity)?;
        Ok(SignFunction {
            n,
            arity,
            kind,
            signs: alloc::vec![Sign::Positive; len as usize],
        })
    }

    /// Independent uniform signs; slot `r` takes bit 0 of keystream word `r`.
    pub fn random(n: u32, arity: u32, kind: SymmetryKind, seed: u64) -> Result<SignFunction> {
        let len = check_arity(n, arity)?;
        let mut rng = random::rng(seed);
        let signs = (0..len)
            .map(|_| {
                if rng.next_u32() & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect();
        Ok(SignFunction {
            n,
            arity,
            kind,
            signs,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// `arity - 1`.
    pub fn d(&self) -> u32 {
        self.arity - 1
    }

    pub fn kind(&self) -> SymmetryKind {
        self.kind
    }

    /// Signs on increasing tuples, indexed by colex rank.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_at_rank(&self, rank: u64) -> Sign {
        self.signs[rank as usize]
    }

    /// Value on the increasing ordering of `subset`.
    pub fn sign_of(&self, subset: &SubsetCode) -> Result<Sign> {
        self.check_subset(subset)?;
        Ok(self.signs[subset.colex_rank() as usize])
    }

    fn check_subset(&self, subset: &SubsetCode) -> Result<()> {
        if subset.n() != self.n {
            return Err(Error::ShapeMismatch);
        }
        if subset.k() != self.arity {
            return Err(Error::WrongSize {
                expected: self.arity as usize,
                found: subset.k() as usize,
            });
        }
        Ok(())
    }

    /// Value on an arbitrary ordering of distinct elements.
    pub fn evaluate(&self, args: &[u32]) -> Result<Sign> {
        if args.len() != self.arity as usize {
            return Err(Error::WrongSize {
                expected: self.arity as usize,
                found: args.len(),
            });
        }
        if let Some(&x) = args.iter().find(|&&x| x == 0 || x > self.n) {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        let parity = permutation_parity(args)?;
        let sorted = SubsetCode::from_unsorted(self.n, args.to_vec())?;
        let stored = self.signs[sorted.colex_rank() as usize];
        Ok(match self.kind {
            SymmetryKind::Symmetric => stored,
            SymmetryKind::Antisymmetric => stored * parity,
        })
    }

    /// Value on `rest` with `extra` placed first (`front`) or last.
    ///
    /// `rest` must be strictly increasing and avoid `extra`; unchecked.
    pub(crate) fn eval_with_extra(&self, rest: &[u32], extra: u32, front: bool) -> Sign {
        let mut rank = 0u64;
        let mut below = 0u64;
        let mut pos = 1u64;
        let mut placed = false;
        for &r in rest {
            if !placed && extra < r {
                rank += binomial(u64::from(extra - 1), pos);
                pos += 1;
                placed = true;
            }
            if r < extra {
                below += 1;
            }
            rank += binomial(u64::from(r - 1), pos);
            pos += 1;
        }
        if !placed {
            rank += binomial(u64::from(extra - 1), pos);
        }
        let stored = self.signs[rank as usize];
        match self.kind {
            SymmetryKind::Symmetric => stored,
            SymmetryKind::Antisymmetric => {
                let moves = if front {
                    below
                } else {
                    rest.len() as u64 - below
                };
                stored * Sign::from_parity(moves)
            }
        }
    }

    /// Negates the single stored sign at `flipset`.
    pub fn flip(&self, flipset: &SubsetCode) -> Result<SignFunction> {
        self.check_subset(flipset)?;
        let mut out = self.clone();
        let slot = &mut out.signs[flipset.colex_rank() as usize];
        *slot = -*slot;
        Ok(out)
    }

    /// Pointwise product; the kinds multiply like `{-1, +1}`.
    pub fn product(&self, other: &SignFunction) -> Result<SignFunction> {
        if self.n != other.n || self.arity != other.arity {
            return Err(Error::ShapeMismatch);
        }
        Ok(SignFunction {
            n: self.n,
            arity: self.arity,
            kind: self.kind * other.kind,
            signs: self
                .signs
                .iter()
                .zip(&other.signs)
                .map(|(&a, &b)| a * b)
                .collect(),
        })
    }

    /// Colex ranks where the stored signs of two same-shaped functions differ.
    pub fn differing_ranks(&self, other: &SignFunction) -> Result<Vec<u64>> {
        if self.n != other.n || self.arity != other.arity {
            return Err(Error::ShapeMismatch);
        }
        Ok(self
            .signs
            .iter()
            .zip(&other.signs)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i as u64)
            .collect())
    }

    /// True when every stored sign is `+1`.
    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|s| s.is_positive())
    }
}

pub fn evaluate(f: &SignFunction, args: &[u32]) -> Result<Sign> {
    f.evaluate(args)
}

pub fn constant_one(n: u32, arity: u32, kind: SymmetryKind) -> Result<SignFunction> {
    SignFunction::constant_one(n, arity, kind)
}

pub fn flip(f: &SignFunction, flipset: &SubsetCode) -> Result<SignFunction> {
    f.flip(flipset)
}

pub fn product(f: &SignFunction, g: &SignFunction) -> Result<SignFunction> {
    f.product(g)
}

pub fn random_sign_function(
    n: u32,
    arity: u32,
    kind: SymmetryKind,
    seed: u64,
) -> Result<SignFunction> {
    SignFunction::random(n, arity, kind, seed)
}
