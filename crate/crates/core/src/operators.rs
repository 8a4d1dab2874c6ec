//! Arity-changing operators on sign functions and the induced GF(2) complex.
//!
//! `reduce` multiplies all one-point extensions of a subset,
//! `Rf(T) = prod_{x not in T} f(x, T)`, lowering the arity by one.
//! `augment` multiplies all facets, `Af(Y) = prod_i f(Y \ y_i)`, raising it by
//! one. On exponents (`f = (-1)^s`) reduction is the linear map summing `s`
//! over supersets, which is the simplicial boundary of the full simplex.

use alloc::vec::Vec;

use crate::combinatorics::{binomial, rank_sorted, ColexSubsets, SubsetCode};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::sign::Sign;
use crate::signfn::{SignFunction, SymmetryKind};

/// Kind of `reduce(f)`.
pub fn reduce_kind(n: u32, d: u32, kind: SymmetryKind) -> SymmetryKind {
    match kind {
        SymmetryKind::Symmetric => SymmetryKind::Symmetric,
        // each of the n - d factors picks up the transposition sign
        SymmetryKind::Antisymmetric if (n - d).is_multiple_of(2) => SymmetryKind::Symmetric,
        SymmetryKind::Antisymmetric => SymmetryKind::Antisymmetric,
    }
}

/// Kind of `augment(f)`.
pub fn augment_kind(d: u32, kind: SymmetryKind) -> SymmetryKind {
    match kind {
        SymmetryKind::Symmetric => SymmetryKind::Symmetric,
        SymmetryKind::Antisymmetric if d.is_multiple_of(2) => SymmetryKind::Symmetric,
        SymmetryKind::Antisymmetric => SymmetryKind::Antisymmetric,
    }
}

/// Lowers the arity by one: `Rf(T) = prod_{x not in T} f(x, T)`.
pub fn reduce(f: &SignFunction) -> Result<SignFunction> {
    if f.arity() < 2 {
        return Err(Error::ArityOutOfRange {
            arity: f.arity(),
            n: f.n(),
        });
    }
    let (n, d) = (f.n(), f.d());
    let mut signs = Vec::with_capacity(binomial(n.into(), d.into()) as usize);
    let mut it = ColexSubsets::new(n, d);
    while let Some(t) = it.next_subset() {
        let mut inside = t.iter().peekable();
        let mut acc = Sign::Positive;
        for x in 1..=n {
            if inside.peek() == Some(&&x) {
                inside.next();
                continue;
            }
            acc *= f.eval_with_extra(t, x, true);
        }
        signs.push(acc);
    }
    SignFunction::new(n, d, reduce_kind(n, d, f.kind()), signs)
}

/// Raises the arity by one: `Af(Y) = prod_i f(Y \ y_i)` on increasing `Y`.
pub fn augment(f: &SignFunction) -> Result<SignFunction> {
    if f.arity() + 1 > f.n() {
        return Err(Error::ArityOutOfRange {
            arity: f.arity() + 1,
            n: f.n(),
        });
    }
    let (n, k) = (f.n(), f.arity());
    let mut signs = Vec::with_capacity(binomial(n.into(), u64::from(k + 1)) as usize);
    let mut facet = Vec::with_capacity(k as usize);
    let mut it = ColexSubsets::new(n, k + 1);
    while let Some(y) = it.next_subset() {
        let mut acc = Sign::Positive;
        for skip in 0..y.len() {
            facet.clear();
            facet.extend(
                y.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            acc *= f.sign_at_rank(rank_sorted(&facet));
        }
        signs.push(acc);
    }
    SignFunction::new(n, k + 1, augment_kind(f.d(), f.kind()), signs)
}

/// Computes `reduce(reduce(f))` and checks it is the constant
/// `eps^C(n - d + 1, 2)`, with `eps = -1` exactly for antisymmetric `f`.
pub fn double_reduce_constant(f: &SignFunction) -> Result<Sign> {
    if f.arity() < 3 {
        return Err(Error::ArityOutOfRange {
            arity: f.arity(),
            n: f.n(),
        });
    }
    let expected = match f.kind() {
        SymmetryKind::Symmetric => Sign::Positive,
        SymmetryKind::Antisymmetric => Sign::from_parity(binomial(u64::from(f.n() - f.d() + 1), 2)),
    };
    let rr = reduce(&reduce(f)?)?;
    if rr.signs().iter().any(|&s| s != expected) {
        return Err(Error::Inconsistent(
            "double reduction is not the predicted constant",
        ));
    }
    Ok(expected)
}

/// Whether `augment(augment(f))` is identically `+1`.
pub fn double_augment_positive(f: &SignFunction) -> Result<bool> {
    if f.arity() + 2 > f.n() {
        return Err(Error::ArityOutOfRange {
            arity: f.arity() + 2,
            n: f.n(),
        });
    }
    Ok(augment(&augment(f)?)?.is_all_positive())
}

/// Slots of `reduce(f)` that change when `f` is flipped at `flipset`: the
/// `d`-subsets of the flipset, in colex order.
pub fn reduce_flip_image(flipset: &SubsetCode) -> Result<Vec<SubsetCode>> {
    let k = flipset.k();
    if k < 2 {
        return Err(Error::ArityOutOfRange {
            arity: k,
            n: flipset.n(),
        });
    }
    let e = flipset.elements();
    // Dropping a later element gives a smaller colex rank.
    Ok((0..e.len())
        .rev()
        .map(|skip| {
            let rest = e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            SubsetCode::from_sorted_unchecked(flipset.n(), rest)
        })
        .collect())
}

/// Slots of `augment(f)` that change when `f` is flipped at `flipset`: the
/// supersets `F ∪ {x}`, in colex order.
pub fn augment_flip_image(flipset: &SubsetCode, n: u32) -> Result<Vec<SubsetCode>> {
    let flipset = SubsetCode::new(n, flipset.elements().to_vec())?;
    if flipset.k() == 0 || flipset.k() + 1 > n {
        return Err(Error::ArityOutOfRange {
            arity: flipset.k() + 1,
            n,
        });
    }
    let mut out: Vec<SubsetCode> = (1..=n)
        .filter(|&x| !flipset.contains(x))
        .map(|x| {
            let mut v = flipset.elements().to_vec();
            let at = v.partition_point(|&e| e < x);
            v.insert(at, x);
            SubsetCode::from_sorted_unchecked(n, v)
        })
        .collect();
    out.sort_by_key(SubsetCode::colex_rank);
    Ok(out)
}

/// The chain complex of exponent vectors under linearised reduction.
///
/// Degree `j` holds functions on `(j + 1)`-subsets. `boundary(k)` is the
/// `C(n, k - 1) x C(n, k)` incidence matrix `rho_k` with entry `(T, S)` set
/// iff `T ⊂ S`, for `k = 1..=n`.
#[derive(Debug, Clone)]
pub struct F2Complex {
    n: u32,
    boundary_maps: Vec<BitMatrix>,
    homology_dims: Vec<usize>,
}

/// Largest ground set for which the complex is built.
pub const MAX_COMPLEX_N: u32 = 20;

impl F2Complex {
    pub fn build(n: u32) -> Result<F2Complex> {
        if n < 1 {
            return Err(Error::ArityOutOfRange { arity: 1, n });
        }
        if n > MAX_COMPLEX_N {
            return Err(Error::TooLarge { n, k: n / 2 });
        }
        let boundary_maps: Vec<BitMatrix> = (1..=n).map(|k| incidence(n, k)).collect();
        let ranks: Vec<usize> = boundary_maps.iter().map(BitMatrix::rank).collect();
        // rank of rho_k, with rho_{n+1} = 0
        let rank_of = |k: u32| if k > n { 0 } else { ranks[k as usize - 1] };
        let homology_dims = (0..n)
            .map(|j| {
                // No augmentation: the degree 0 cycles are all of C_0.
                let cycles = if j == 0 {
                    n as usize
                } else {
                    boundary_maps[j as usize].cols() - ranks[j as usize]
                };
                cycles - rank_of(j + 2)
            })
            .collect();
        Ok(F2Complex {
            n,
            boundary_maps,
            homology_dims,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `rho_k` for `1 <= k <= n`.
    pub fn boundary(&self, k: u32) -> &BitMatrix {
        &self.boundary_maps[k as usize - 1]
    }

    pub fn boundary_maps(&self) -> &[BitMatrix] {
        &self.boundary_maps
    }

    /// Homology dimension per degree `0..n`.
    pub fn homology_dims(&self) -> &[usize] {
        &self.homology_dims
    }

    /// `rho_{k-1} rho_k = 0` for every `k` in `2..=n`.
    pub fn compositions_vanish(&self) -> bool {
        (2..=self.n).all(|k| self.boundary(k - 1).mul(self.boundary(k)).is_zero())
    }
}

pub fn build_f2_complex(n: u32) -> Result<F2Complex> {
    F2Complex::build(n)
}

fn incidence(n: u32, k: u32) -> BitMatrix {
    let mut m = BitMatrix::zeros(
        binomial(n.into(), u64::from(k - 1)) as usize,
        binomial(n.into(), k.into()) as usize,
    );
    let mut facet = Vec::with_capacity(k as usize);
    let mut it = ColexSubsets::new(n, k);
    let mut col = 0;
    while let Some(s) = it.next_subset() {
        for skip in 0..s.len() {
            facet.clear();
            facet.extend(
                s.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            m.set(rank_sorted(&facet) as usize, col, true);
        }
        col += 1;
    }
    m
}
