use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::orchard::OrchardPartition;
use crate::sign::Sign;
use crate::signfn::{SignFunction, SymmetryKind};

/// A tournament on players `1..=n` as a skew-symmetric `±1` matrix with zero
/// diagonal. `entry(i, j) = +1` means `i` beats `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u32,
    entries: Vec<i8>,
}

impl Tournament {
    /// Validates a full row-major matrix.
    pub fn from_matrix(matrix: &[Vec<i64>]) -> Result<Tournament> {
        let n = matrix.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                let ok = if i == j {
                    v == 0
                } else {
                    (v == 1 || v == -1) && matrix[j][i] == -v
                };
                if !ok {
                    return Err(Error::InvalidTournament {
                        row: i as u32 + 1,
                        col: j as u32 + 1,
                    });
                }
                entries.push(v as i8);
            }
        }
        Ok(Tournament {
            n: n as u32,
            entries,
        })
    }

    /// Reads an arity-2 antisymmetric function as a tournament.
    pub fn from_signfn(f: &SignFunction) -> Result<Tournament> {
        if f.arity() != 2 {
            return Err(Error::ArityOutOfRange {
                arity: f.arity(),
                n: f.n(),
            });
        }
        if f.kind() != SymmetryKind::Antisymmetric {
            return Err(Error::KindMismatch {
                expected: SymmetryKind::Antisymmetric,
            });
        }
        let n = f.n();
        let mut entries = alloc::vec![0i8; (n * n) as usize];
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    entries[((i - 1) * n + j - 1) as usize] = f.evaluate(&[i, j])?.to_i8();
                }
            }
        }
        Ok(Tournament { n, entries })
    }

    /// Tournament given by uniformly random arc orientations.
    pub fn random(n: u32, seed: u64) -> Result<Tournament> {
        Tournament::from_signfn(&SignFunction::random(
            n,
            2,
            SymmetryKind::Antisymmetric,
            seed,
        )?)
    }

    /// `i` beats `j` whenever `i < j`.
    pub fn transitive(n: u32) -> Tournament {
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| match i.cmp(&j) {
                core::cmp::Ordering::Less => 1,
                core::cmp::Ordering::Equal => 0,
                core::cmp::Ordering::Greater => -1,
            })
            .collect();
        Tournament { n, entries }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Entry `a_{ij}` for players in `1..=n`.
    pub fn entry(&self, i: u32, j: u32) -> i8 {
        self.entries[((i - 1) * self.n + j - 1) as usize]
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| i64::from(self.entry(i, j))).collect())
            .collect()
    }

    /// `sum_{k != i, j} a_ik a_jk`.
    pub fn common_sum(&self, i: u32, j: u32) -> i64 {
        (1..=self.n)
            .filter(|&k| k != i && k != j)
            .map(|k| i64::from(self.entry(i, k)) * i64::from(self.entry(j, k)))
            .sum()
    }

    /// Relatedness through `sum_k a_ik a_jk ≡ n (mod 4)`.
    pub fn mod4_related(&self, i: u32, j: u32) -> bool {
        i == j || (self.common_sum(i, j) - i64::from(self.n)).rem_euclid(4) == 0
    }
}

pub fn tournament_to_signfn(t: &Tournament) -> Result<SignFunction> {
    let n = t.n;
    if n < 2 {
        return Err(Error::ArityOutOfRange { arity: 2, n });
    }
    let mut signs = Vec::new();
    // colex order on pairs: (1,2), (1,3), (2,3), (1,4), ...
    for j in 2..=n {
        for i in 1..j {
            signs.push(if t.entry(i, j) > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            });
        }
    }
    SignFunction::new(n, 2, SymmetryKind::Antisymmetric, signs)
}

/// `n(i, j) = (n - 2 - sum_{k != i, j} a_ik a_jk) / 2`.
pub fn closed_form_separation(t: &Tournament, i: u32, j: u32) -> Result<u64> {
    for x in [i, j] {
        if x == 0 || x > t.n {
            return Err(Error::ElementOutOfRange { element: x, n: t.n });
        }
    }
    if i == j {
        return Err(Error::RepeatedElement(i));
    }
    let twice = i64::from(t.n) - 2 - t.common_sum(i, j);
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok((twice / 2) as u64)
}

/// Wins per player.
pub fn score_vector(t: &Tournament) -> Vec<u32> {
    (1..=t.n)
        .map(|i| (1..=t.n).filter(|&j| t.entry(i, j) == 1).count() as u32)
        .collect()
}

/// Partition by score parity, canonicalised so player 1 is in class 0.
pub fn score_parity_partition(t: &Tournament) -> Result<OrchardPartition> {
    if t.n < 3 {
        return Err(Error::Unsupported { n: t.n, d: 1 });
    }
    let labels = score_vector(t).iter().map(|s| (s % 2) as u8).collect();
    Ok(OrchardPartition::from_labels(labels).expect("parities are 0 or 1"))
}
