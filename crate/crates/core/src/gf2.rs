//! Dense matrices over GF(2) with rows packed into 64-bit words.

use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            words: alloc::vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.words[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.words_per_row + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set entries.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Rank by row reduction on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.words.clone();
        let wpr = self.words_per_row;
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * wpr + word] & bit != 0) else {
                continue;
            };
            if pivot != rank {
                for w in 0..wpr {
                    m.swap(pivot * wpr + w, rank * wpr + w);
                }
            }
            for r in rank + 1..self.rows {
                if m[r * wpr + word] & bit != 0 {
                    // Columns before `word` are already clear in both rows.
                    for w in word..wpr {
                        m[r * wpr + w] ^= m[rank * wpr + w];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Product over GF(2); `self.cols` must equal `rhs.rows`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        let wpr = out.words_per_row;
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = rhs.row(k);
                    for (dst, &s) in out.words[r * wpr..(r + 1) * wpr].iter_mut().zip(src) {
                        *dst ^= s;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[u8]]) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows.len(), rows.first().map_or(0, |r| r.len()));
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v == 1);
            }
        }
        m
    }

    /// Rank by brute force: the largest r with some r linearly independent rows,
    /// found by counting the distinct vectors in the row span (2^rank of them).
    fn span_rank(m: &BitMatrix) -> usize {
        let rows: Vec<Vec<bool>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
            .collect();
        let mut span = alloc::collections::BTreeSet::new();
        for mask in 0u32..1 << rows.len() {
            let mut v = alloc::vec![false; m.cols()];
            for (i, row) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.iter_mut().zip(row).for_each(|(a, &b)| *a ^= b);
                }
            }
            span.insert(v);
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn small_ranks() {
        assert_eq!(from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 2);
        assert_eq!(from_rows(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 5).nullity(), 5);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = BitMatrix::zeros(3, 200);
        m.set(0, 63, true);
        m.set(0, 64, true);
        m.set(1, 64, true);
        m.set(1, 199, true);
        m.set(2, 63, true);
        m.set(2, 199, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.weight(), 6);
    }

    proptest! {
        #[test]
        fn rank_matches_span_oracle(rows in 1usize..7, cols in 1usize..70, bits in proptest::collection::vec(any::<bool>(), 7 * 70)) {
            let mut m = BitMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, bits[r * 70 + c]);
                }
            }
            prop_assert_eq!(m.rank(), span_rank(&m));
        }

        #[test]
        fn product_matches_entrywise_sum(bits in proptest::collection::vec(any::<bool>(), 4 * 5 + 5 * 3)) {
            let mut a = BitMatrix::zeros(4, 5);
            let mut b = BitMatrix::zeros(5, 3);
            for r in 0..4 { for c in 0..5 { a.set(r, c, bits[r * 5 + c]); } }
            for r in 0..5 { for c in 0..3 { b.set(r, c, bits[20 + r * 3 + c]); } }
            let p = a.mul(&b);
            for r in 0..4 {
                for c in 0..3 {
                    let s = (0..5).filter(|&k| a.get(r, k) && b.get(k, c)).count() % 2 == 1;
                    prop_assert_eq!(p.get(r, c), s);
                }
            }
        }
    }
}
