//! Separation counts and the orchard relation.
//!
//! For a sign function on `(d + 1)`-subsets, a `d`-subset `X` avoiding `a` and
//! `b` separates them when `f(X, a)` and `f(X, b)` have opposite signs. Two
//! elements are related when the number of separating subsets has the parity
//! fixed by the function's kind: even for symmetric functions, and
//! `C(n - 3, d - 1) mod 2` for antisymmetric ones. The relation is an
//! equivalence with at most two classes.

use alloc::vec::Vec;

use crate::combinatorics::{binomial, binomial_parity, rank_sorted, ColexSubsets, SubsetCode};
use crate::error::{Error, Result};
use crate::signfn::{SignFunction, SymmetryKind};

/// Class labels of a partition of `[1, n]` into at most two parts.
///
/// Element 1 always carries label 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrchardPartition {
    labels: Vec<u8>,
}

impl OrchardPartition {
    /// Canonicalises arbitrary 0/1 labels so that element 1 gets label 0.
    pub fn from_labels(mut labels: Vec<u8>) -> Option<OrchardPartition> {
        if labels.iter().any(|&l| l > 1) {
            return None;
        }
        if labels.first() == Some(&1) {
            labels.iter_mut().for_each(|l| *l ^= 1);
        }
        Some(OrchardPartition { labels })
    }

    pub fn single_class(n: u32) -> OrchardPartition {
        OrchardPartition {
            labels: alloc::vec![0; n as usize],
        }
    }

    pub fn n(&self) -> u32 {
        self.labels.len() as u32
    }

    /// Labels indexed by `element - 1`.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, element: u32) -> u8 {
        self.labels[element as usize - 1]
    }

    pub fn same_class(&self, a: u32, b: u32) -> bool {
        self.label(a) == self.label(b)
    }

    pub fn is_single_class(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Members of class 0 and class 1, each increasing.
    pub fn classes(&self) -> (Vec<u32>, Vec<u32>) {
        let mut zero = Vec::new();
        let mut one = Vec::new();
        for (i, &l) in self.labels.iter().enumerate() {
            if l == 0 { &mut zero } else { &mut one }.push(i as u32 + 1);
        }
        (zero, one)
    }
}

fn check_element(x: u32, n: u32) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::ElementOutOfRange { element: x, n })
    } else {
        Ok(())
    }
}

fn check_pair(f: &SignFunction, a: u32, b: u32) -> Result<()> {
    check_element(a, f.n())?;
    check_element(b, f.n())?;
    if a == b {
        return Err(Error::RepeatedElement(a));
    }
    Ok(())
}

fn check_supported(f: &SignFunction) -> Result<()> {
    if f.n() < f.d() + 2 {
        Err(Error::Unsupported { n: f.n(), d: f.d() })
    } else {
        Ok(())
    }
}

fn pair_rank(a: u32, b: u32) -> u64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    rank_sorted(&[lo, hi])
}

/// Whether the `d`-subset `x` separates `a` from `b`.
pub fn separates(f: &SignFunction, x: &SubsetCode, a: u32, b: u32) -> Result<bool> {
    check_pair(f, a, b)?;
    if x.n() != f.n() {
        return Err(Error::ShapeMismatch);
    }
    if x.k() != f.d() {
        return Err(Error::WrongSize {
            expected: f.d() as usize,
            found: x.k() as usize,
        });
    }
    if x.contains(a) {
        return Err(Error::RepeatedElement(a));
    }
    if x.contains(b) {
        return Err(Error::RepeatedElement(b));
    }
    Ok(f.eval_with_extra(x.elements(), a, false) != f.eval_with_extra(x.elements(), b, false))
}

/// `n(a, b)`: the number of separating `d`-subsets of `E \ {a, b}`.
///
/// Enumerates all `C(n - 2, d)` candidates.
pub fn separation_count(f: &SignFunction, a: u32, b: u32) -> Result<u64> {
    check_pair(f, a, b)?;
    check_supported(f)?;
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    // Enumerate d-subsets of [1, n - 2] and lift past the removed pair.
    let lift = |y: u32| {
        let mut v = y;
        if v >= lo {
            v += 1;
        }
        if v >= hi {
            v += 1;
        }
        v
    };
    let mut count = 0;
    let mut buf = Vec::with_capacity(f.d() as usize);
    let mut it = ColexSubsets::new(f.n() - 2, f.d());
    while let Some(s) = it.next_subset() {
        buf.clear();
        buf.extend(s.iter().map(|&y| lift(y)));
        if f.eval_with_extra(&buf, a, false) != f.eval_with_extra(&buf, b, false) {
            count += 1;
        }
    }
    Ok(count)
}

/// Parity that `n(a, b)` must have for `a ~ b`.
pub fn threshold_parity(f: &SignFunction) -> Result<u8> {
    check_supported(f)?;
    Ok(match f.kind() {
        SymmetryKind::Symmetric => 0,
        // C(n - 3, -1) = 0 when d = 0
        SymmetryKind::Antisymmetric if f.d() == 0 => 0,
        SymmetryKind::Antisymmetric => binomial_parity(u64::from(f.n() - 3), u64::from(f.d() - 1)),
    })
}

/// All `C(n, 2)` separation counts of a function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationProfile {
    n: u32,
    d: u32,
    counts: Vec<u64>,
}

impl SeparationProfile {
    /// Enumerates every `d`-subset once and charges it to each pair it separates.
    pub fn compute(f: &SignFunction) -> Result<SeparationProfile> {
        check_supported(f)?;
        let n = f.n();
        let mut counts = alloc::vec![0u64; binomial(u64::from(n), 2) as usize];
        let mut values = alloc::vec![None; n as usize + 1];
        let mut it = ColexSubsets::new(n, f.d());
        while let Some(x) = it.next_subset() {
            values.iter_mut().for_each(|v| *v = None);
            let mut inside = x.iter().peekable();
            for a in 1..=n {
                if inside.peek() == Some(&&a) {
                    inside.next();
                    continue;
                }
                values[a as usize] = Some(f.eval_with_extra(x, a, false));
            }
            for b in 2..=n {
                let Some(vb) = values[b as usize] else {
                    continue;
                };
                for a in 1..b {
                    if let Some(va) = values[a as usize] {
                        if va != vb {
                            counts[pair_rank(a, b) as usize] += 1;
                        }
                    }
                }
            }
        }
        Ok(SeparationProfile {
            n,
            d: f.d(),
            counts,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `n(a, b)` for distinct `a`, `b` in `[1, n]`.
    pub fn count(&self, a: u32, b: u32) -> u64 {
        assert!(
            a != b && a >= 1 && b >= 1 && a.max(b) <= self.n,
            "invalid pair ({a}, {b})"
        );
        self.counts[pair_rank(a, b) as usize]
    }

    /// `(a, b, n(a, b))` for all `a < b`, ordered by `a` then `b`.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        (1..=self.n).flat_map(move |a| (a + 1..=self.n).map(move |b| (a, b, self.count(a, b))))
    }
}

/// The orchard relation of one function, with all counts precomputed.
#[derive(Debug, Clone)]
pub struct OrchardRelation {
    threshold: u8,
    profile: SeparationProfile,
}

impl OrchardRelation {
    pub fn new(f: &SignFunction) -> Result<OrchardRelation> {
        Ok(OrchardRelation {
            threshold: threshold_parity(f)?,
            profile: SeparationProfile::compute(f)?,
        })
    }

    pub fn threshold(&self) -> u8 {
        self.threshold
    }

    pub fn profile(&self) -> &SeparationProfile {
        &self.profile
    }

    pub fn related(&self, a: u32, b: u32) -> bool {
        a == b || (self.profile.count(a, b) % 2) as u8 == self.threshold
    }

    /// Parity check of `n(a,b) + n(b,c) + n(a,c)` against the kind's threshold.
    pub fn triple_identity_holds(&self, a: u32, b: u32, c: u32) -> bool {
        let p = &self.profile;
        ((p.count(a, b) + p.count(b, c) + p.count(a, c)) % 2) as u8 == self.threshold
    }

    /// Labels every element by its relation to element 1 and verifies the
    /// result against every pair.
    pub fn partition(&self) -> Result<OrchardPartition> {
        let n = self.profile.n;
        let labels: Vec<u8> = (1..=n).map(|x| u8::from(!self.related(1, x))).collect();
        for b in 2..=n {
            for a in 1..b {
                if (labels[a as usize - 1] == labels[b as usize - 1]) != self.related(a, b) {
                    return Err(Error::Inconsistent(
                        "orchard relation is not a two-class equivalence",
                    ));
                }
            }
        }
        Ok(OrchardPartition { labels })
    }
}

pub fn related(f: &SignFunction, a: u32, b: u32) -> Result<bool> {
    check_element(a, f.n())?;
    check_element(b, f.n())?;
    check_supported(f)?;
    if a == b {
        return Ok(true);
    }
    Ok((separation_count(f, a, b)? % 2) as u8 == threshold_parity(f)?)
}

pub fn partition(f: &SignFunction) -> Result<OrchardPartition> {
    OrchardRelation::new(f)?.partition()
}

/// Number of `d`-subsets `X` of `E \ {x}` with `f(x, X) > 0`; symmetric only.
pub fn mu(f: &SignFunction, x: u32) -> Result<u64> {
    if f.kind() != SymmetryKind::Symmetric {
        return Err(Error::KindMismatch {
            expected: SymmetryKind::Symmetric,
        });
    }
    check_element(x, f.n())?;
    let mut count = 0;
    let mut buf = Vec::with_capacity(f.d() as usize);
    let mut it = ColexSubsets::new(f.n() - 1, f.d());
    while let Some(s) = it.next_subset() {
        buf.clear();
        buf.extend(s.iter().map(|&y| if y >= x { y + 1 } else { y }));
        if f.eval_with_extra(&buf, x, true).is_positive() {
            count += 1;
        }
    }
    Ok(count)
}

/// Checks the triple parity identity by direct counting.
pub fn check_triple_identity(f: &SignFunction, a: u32, b: u32, c: u32) -> Result<bool> {
    check_pair(f, a, b)?;
    check_pair(f, b, c)?;
    check_pair(f, a, c)?;
    let total =
        separation_count(f, a, b)? + separation_count(f, b, c)? + separation_count(f, a, c)?;
    Ok((total % 2) as u8 == threshold_parity(f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_subsets;
    use crate::signfn::constant_one;
    use alloc::vec;
    use SymmetryKind::*;

    fn set(n: u32, e: &[u32]) -> SubsetCode {
        SubsetCode::new(n, e.to_vec()).unwrap()
    }

    /// Separation by evaluating on explicit argument lists.
    fn separates_oracle(f: &SignFunction, x: &[u32], a: u32, b: u32) -> bool {
        let mut xa = x.to_vec();
        xa.push(a);
        let mut xb = x.to_vec();
        xb.push(b);
        f.evaluate(&xa).unwrap() != f.evaluate(&xb).unwrap()
    }

    fn count_oracle(f: &SignFunction, a: u32, b: u32) -> u64 {
        enumerate_subsets(f.n(), f.d())
            .unwrap()
            .iter()
            .filter(|x| !x.contains(a) && !x.contains(b))
            .filter(|x| separates_oracle(f, x.elements(), a, b))
            .count() as u64
    }

    #[test]
    fn separates_examples() {
        let f = constant_one(3, 2, Antisymmetric).unwrap();
        assert!(!separates(&f, &set(3, &[3]), 1, 2).unwrap());
        assert!(separates(&f, &set(3, &[2]), 1, 3).unwrap());
        let s = constant_one(5, 3, Symmetric).unwrap();
        for x in enumerate_subsets(5, 2).unwrap() {
            let rest: Vec<u32> = (1..=5).filter(|e| !x.contains(*e)).collect();
            assert!(!separates(&s, &x, rest[0], rest[1]).unwrap());
        }
    }

    #[test]
    fn separates_rejects_bad_inputs() {
        let f = constant_one(4, 2, Antisymmetric).unwrap();
        assert_eq!(
            separates(&f, &set(4, &[3]), 1, 1),
            Err(Error::RepeatedElement(1))
        );
        assert_eq!(
            separates(&f, &set(4, &[1]), 1, 2),
            Err(Error::RepeatedElement(1))
        );
        assert_eq!(
            separates(&f, &set(4, &[3, 4]), 1, 2),
            Err(Error::WrongSize {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn separation_count_examples() {
        let f = constant_one(3, 2, Antisymmetric).unwrap();
        assert_eq!(separation_count(&f, 1, 2), Ok(0));
        assert_eq!(separation_count(&f, 1, 3), Ok(1));
        assert_eq!(separation_count(&f, 2, 3), Ok(0));
        let s = constant_one(6, 3, Symmetric).unwrap();
        for a in 1..=6 {
            for b in (a + 1)..=6 {
                assert_eq!(separation_count(&s, a, b), Ok(0));
            }
        }
        assert_eq!(separation_count(&f, 2, 2), Err(Error::RepeatedElement(2)));
        let tight = constant_one(3, 3, Symmetric).unwrap();
        assert_eq!(
            separation_count(&tight, 1, 2),
            Err(Error::Unsupported { n: 3, d: 2 })
        );
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            threshold_parity(&constant_one(7, 3, Symmetric).unwrap()),
            Ok(0)
        );
        assert_eq!(
            threshold_parity(&constant_one(3, 2, Antisymmetric).unwrap()),
            Ok(1)
        );
        // C(7, 2) = 21
        assert_eq!(
            threshold_parity(&constant_one(10, 4, Antisymmetric).unwrap()),
            Ok(1)
        );
        // C(5, 2) = 10
        assert_eq!(
            threshold_parity(&constant_one(8, 4, Antisymmetric).unwrap()),
            Ok(0)
        );
        assert_eq!(
            threshold_parity(&constant_one(5, 1, Antisymmetric).unwrap()),
            Ok(0)
        );
    }

    #[test]
    fn related_examples() {
        let f = constant_one(3, 2, Antisymmetric).unwrap();
        assert_eq!(related(&f, 2, 2), Ok(true));
        assert_eq!(related(&f, 1, 3), Ok(true));
        assert_eq!(related(&f, 1, 2), Ok(false));
        let s = constant_one(6, 3, Symmetric).unwrap();
        assert!((1..=6).all(|a| (1..=6).all(|b| related(&s, a, b).unwrap())));
    }

    #[test]
    fn partition_examples() {
        assert!(partition(&constant_one(6, 3, Symmetric).unwrap())
            .unwrap()
            .is_single_class());
        let p = partition(&constant_one(3, 2, Antisymmetric).unwrap()).unwrap();
        assert_eq!(p.classes(), (vec![1, 3], vec![2]));
        let g = constant_one(4, 2, Symmetric)
            .unwrap()
            .flip(&set(4, &[1, 2]))
            .unwrap();
        assert_eq!(separation_count(&g, 1, 3), Ok(1));
        assert_eq!(separation_count(&g, 1, 2), Ok(0));
        assert_eq!(partition(&g).unwrap().classes(), (vec![1, 2], vec![3, 4]));
        assert_eq!(
            partition(&constant_one(3, 3, Symmetric).unwrap()),
            Err(Error::Unsupported { n: 3, d: 2 })
        );
    }

    #[test]
    fn mu_examples() {
        let f = constant_one(4, 2, Symmetric).unwrap();
        assert!((1..=4).all(|x| mu(&f, x) == Ok(3)));
        let g = f.flip(&set(4, &[1, 2])).unwrap();
        let got: Vec<u64> = (1..=4).map(|x| mu(&g, x).unwrap()).collect();
        assert_eq!(got, vec![2, 2, 3, 3]);
        let a = constant_one(4, 2, Antisymmetric).unwrap();
        assert_eq!(
            mu(&a, 1),
            Err(Error::KindMismatch {
                expected: Symmetric
            })
        );
    }

    #[test]
    fn triple_identity_examples() {
        let f = constant_one(3, 2, Antisymmetric).unwrap();
        assert_eq!(check_triple_identity(&f, 1, 2, 3), Ok(true));
        let s = constant_one(5, 2, Symmetric).unwrap();
        assert_eq!(check_triple_identity(&s, 1, 4, 5), Ok(true));
        assert_eq!(
            check_triple_identity(&s, 1, 4, 1),
            Err(Error::RepeatedElement(1))
        );
    }

    #[test]
    fn counts_agree_with_explicit_evaluation() {
        for kind in [Symmetric, Antisymmetric] {
            for (n, arity) in [(5, 2), (6, 3), (7, 4), (5, 1), (7, 2)] {
                let f = SignFunction::random(n, arity, kind, u64::from(n * 10 + arity)).unwrap();
                let profile = SeparationProfile::compute(&f).unwrap();
                for (a, b, c) in profile.pairs() {
                    let oracle = count_oracle(&f, a, b);
                    assert_eq!(c, oracle);
                    assert_eq!(separation_count(&f, b, a).unwrap(), oracle);
                    assert!(c <= binomial(u64::from(n - 2), u64::from(arity - 1)));
                }
            }
        }
    }

    #[test]
    fn partition_canonicalisation() {
        let p = OrchardPartition::from_labels(vec![1, 0, 1]).unwrap();
        assert_eq!(p.labels(), &[0, 1, 0]);
        assert!(OrchardPartition::from_labels(vec![0, 2]).is_none());
    }

    #[test]
    fn relation_is_two_class_equivalence_on_random_functions() {
        for seed in 0..40 {
            for kind in [Symmetric, Antisymmetric] {
                let f = SignFunction::random(7, 3, kind, seed).unwrap();
                let rel = OrchardRelation::new(&f).unwrap();
                let p = rel.partition().unwrap();
                for a in 1..=7 {
                    for b in 1..=7 {
                        assert_eq!(rel.related(a, b), p.same_class(a, b));
                        assert_eq!(rel.related(a, b), related(&f, a, b).unwrap());
                    }
                }
            }
        }
    }
}
