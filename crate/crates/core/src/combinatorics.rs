//! Subset indexing on the ground set `[1, n]`.
//!
//! Every `k`-subset is identified with its colexicographic rank
//! `sum_i C(s_i - 1, i)` over the sorted elements `s_1 < ... < s_k`. Colex
//! order is prefix-stable in `n`: the `k`-subsets of `[1, n]` are exactly the
//! first `C(n, k)` subsets of `[1, n + 1]`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// `C(n, k)`, or `None` on overflow. Zero when `k > n`.
pub fn checked_binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` for arguments small enough that the result fits in a `u64`.
///
/// Panics on overflow; callers validate sizes with [`checked_binomial`].
pub fn binomial(n: u64, k: u64) -> u64 {
    checked_binomial(n, k).expect("binomial coefficient overflows u64")
}

/// `C(n, k) mod 2` by bit domination: odd iff every binary digit of `k` is
/// also set in `n`.
pub fn binomial_parity(n: u64, k: u64) -> u8 {
    if k > n {
        0
    } else {
        u8::from(k & !n == 0)
    }
}

/// Sign of the permutation sorting `seq`, i.e. `(-1)^inversions`.
pub fn permutation_parity(seq: &[u32]) -> Result<Sign> {
    let mut inversions = 0u64;
    for (i, &x) in seq.iter().enumerate() {
        for &y in &seq[i + 1..] {
            if x == y {
                return Err(Error::RepeatedElement(x));
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    Ok(Sign::from_parity(inversions))
}

/// Colex rank of a strictly increasing slice of elements in `[1, n]`.
///
/// No validation; see [`SubsetCode`] for the checked form.
pub(crate) fn rank_sorted(elements: &[u32]) -> u64 {
    elements
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(u64::from(s - 1), i as u64 + 1))
        .sum()
}

/// A `k`-subset of `[1, n]`, stored as its strictly increasing elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetCode {
    n: u32,
    elements: Vec<u32>,
}

impl SubsetCode {
    /// Validates strict increase and range.
    pub fn new(n: u32, elements: Vec<u32>) -> Result<SubsetCode> {
        for (i, &x) in elements.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            if i > 0 {
                let prev = elements[i - 1];
                if prev == x {
                    return Err(Error::RepeatedElement(x));
                }
                if prev > x {
                    return Err(Error::NotIncreasing);
                }
            }
        }
        Ok(SubsetCode { n, elements })
    }

    /// Sorts arbitrary distinct elements into a subset code.
    pub fn from_unsorted(n: u32, mut elements: Vec<u32>) -> Result<SubsetCode> {
        elements.sort_unstable();
        SubsetCode::new(n, elements)
    }

    pub(crate) fn from_sorted_unchecked(n: u32, elements: Vec<u32>) -> SubsetCode {
        debug_assert!(SubsetCode::new(n, elements.clone()).is_ok());
        SubsetCode { n, elements }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.elements.len() as u32
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<u32> {
        self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position in the colex enumeration of all `k`-subsets of `[1, n]`.
    pub fn colex_rank(&self) -> u64 {
        rank_sorted(&self.elements)
    }

    /// Inverse of [`SubsetCode::colex_rank`].
    pub fn colex_unrank(rank: u64, n: u32, k: u32) -> Result<SubsetCode> {
        if k > n {
            return Err(Error::SubsetTooLarge { n, k });
        }
        let total = checked_binomial(u64::from(n), u64::from(k)).ok_or(Error::TooLarge { n, k })?;
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, n, k });
        }
        let mut elements = alloc::vec![0u32; k as usize];
        let mut rest = rank;
        let mut top = n;
        // Greedy from the largest position: s_i is the largest s with C(s - 1, i) <= rest.
        for i in (1..=k).rev() {
            let mut s = top;
            while binomial(u64::from(s - 1), u64::from(i)) > rest {
                s -= 1;
            }
            rest -= binomial(u64::from(s - 1), u64::from(i));
            elements[i as usize - 1] = s;
            top = s - 1;
        }
        Ok(SubsetCode { n, elements })
    }
}

impl fmt::Display for SubsetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub fn colex_rank(subset: &SubsetCode) -> u64 {
    subset.colex_rank()
}

pub fn colex_unrank(rank: u64, n: u32, k: u32) -> Result<SubsetCode> {
    SubsetCode::colex_unrank(rank, n, k)
}

/// All `k`-subsets of `[1, n]` in colex order.
pub fn enumerate_subsets(n: u32, k: u32) -> Result<Vec<SubsetCode>> {
    if k > n {
        return Err(Error::SubsetTooLarge { n, k });
    }
    checked_binomial(u64::from(n), u64::from(k)).ok_or(Error::TooLarge { n, k })?;
    let mut out = Vec::new();
    let mut it = ColexSubsets::new(n, k);
    while let Some(s) = it.next_subset() {
        out.push(SubsetCode::from_sorted_unchecked(n, s.to_vec()));
    }
    Ok(out)
}

/// Streaming colex enumeration of `k`-subsets of `[1, n]` over a reused buffer.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: u32,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl ColexSubsets {
    pub fn new(n: u32, k: u32) -> ColexSubsets {
        ColexSubsets {
            n,
            current: (1..=k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Advances and returns the next subset, or `None` when exhausted.
    pub fn next_subset(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        // Smallest position that can move up without colliding with its successor.
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                return None;
            }
            let limit = if i + 1 < k {
                self.current[i + 1]
            } else {
                self.n + 1
            };
            if self.current[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        self.current[i] += 1;
        for (j, slot) in self.current[..i].iter_mut().enumerate() {
            *slot = j as u32 + 1;
        }
        Some(&self.current)
    }
}
