use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::ColexSubsets;
use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::signfn::{SignFunction, SymmetryKind};

/// `n > dim` points of `Q^dim` with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointConfiguration {
    /// Checks shape only; genericity is checked by [`points_to_signfn`].
    pub fn new(dim: usize, points: Vec<Vec<BigRational>>) -> Result<PointConfiguration> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        if points.len() <= dim {
            return Err(Error::TooFewPoints {
                n: points.len(),
                dim,
            });
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn from_integers(dim: usize, points: &[&[i64]]) -> Result<PointConfiguration> {
        let points = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&c| BigRational::from_integer(BigInt::from(c)))
                    .collect()
            })
            .collect();
        PointConfiguration::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in input order; point `i` is element `i + 1` of the ground set.
    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    /// Applies `p -> scale * p + shift` to every point.
    pub fn transformed(&self, scale: &BigRational, shift: &[BigRational]) -> PointConfiguration {
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(shift).map(|(c, s)| c * scale + s).collect())
            .collect();
        PointConfiguration {
            dim: self.dim,
            points,
        }
    }
}

/// Sign of `det(p_1 - p_0, ..., p_d - p_0)` for `d + 1` points of `Q^d`;
/// `None` when the points are affinely dependent.
pub fn orientation_sign(points: &[Vec<BigRational>]) -> Result<Option<Sign>> {
    let Some((origin, rest)) = points.split_first() else {
        return Err(Error::WrongSize {
            expected: 1,
            found: 0,
        });
    };
    let d = rest.len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.len(),
        });
    }
    // Scaling a row by the positive lcm of its denominators keeps the sign.
    let mut m: Vec<Vec<BigInt>> = rest
        .iter()
        .map(|p| {
            let diff: Vec<BigRational> = p.iter().zip(origin).map(|(a, b)| a - b).collect();
            let lcm = diff.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            diff.iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        })
        .collect();
    Ok(bareiss_sign(&mut m))
}

/// Determinant sign by fraction-free elimination; every division is exact.
fn bareiss_sign(m: &mut [Vec<BigInt>]) -> Option<Sign> {
    let d = m.len();
    if d == 0 {
        return Some(Sign::Positive);
    }
    let mut sign = Sign::Positive;
    let mut prev = BigInt::one();
    for k in 0..d {
        let pivot = (k..d).find(|&r| !m[r][k].is_zero())?;
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let last = &m[d - 1][d - 1];
    Some(if last.is_negative() { -sign } else { sign })
}

/// The antisymmetric function of orientation signs on `(d + 1)`-subsets.
pub fn points_to_signfn(config: &PointConfiguration) -> Result<SignFunction> {
    let n = config.len() as u32;
    let arity = config.dim as u32 + 1;
    let mut signs = Vec::new();
    let mut tuple = Vec::with_capacity(arity as usize);
    let mut it = ColexSubsets::new(n, arity);
    while let Some(s) = it.next_subset() {
        tuple.clear();
        tuple.extend(s.iter().map(|&i| config.points[i as usize - 1].clone()));
        match orientation_sign(&tuple)? {
            Some(sign) => signs.push(sign),
            None => return Err(Error::Degenerate { subset: s.to_vec() }),
        }
    }
    SignFunction::new(n, arity, SymmetryKind::Antisymmetric, signs)
}
