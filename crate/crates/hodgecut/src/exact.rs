//! Exact integer matrices and rank computation over the rationals.
//!
//! Betti numbers need ranks of boundary matrices with no floating-point
//! error and no torsion ambiguity, so ranks here are computed by
//! fraction-free (Bareiss) elimination on arbitrary-precision integers.
//! A GF(2) rank is available as a fast path; it can undercount the
//! rational rank when 2-torsion is present, never overcount.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Integer matrix product. Entries stay well within i64 at the scales
    /// this crate works at; overflow is checked rather than wrapped.
    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let product = a.checked_mul(other.get(k, j)).expect("matmul overflow");
                    let sum = out.get(i, j).checked_add(product).expect("matmul overflow");
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank over the rationals via fraction-free Bareiss elimination on
    /// arbitrary-precision integers. Exact; no floating point anywhere.
    pub fn rank_exact(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut prev_pivot = BigInt::from(1);
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            // Pick the smallest-magnitude nonzero pivot to slow entry growth.
            let pivot_row = (rank..self.rows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].magnitude().clone());
            let Some(pivot_row) = pivot_row else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            for i in rank + 1..self.rows {
                let factor = m[i][col].clone();
                for j in col..self.cols {
                    let numerator = &pivot * &m[i][j] - &factor * &m[rank][j];
                    debug_assert!(
                        (&numerator % &prev_pivot).is_zero(),
                        "Bareiss division must be exact"
                    );
                    m[i][j] = numerator / &prev_pivot;
                }
            }
            prev_pivot = pivot;
            rank += 1;
        }
        rank
    }

    /// Rank of the matrix reduced mod 2. Fast path only; can be strictly
    /// smaller than `rank_exact` in the presence of 2-torsion.
    pub fn rank_gf2(&self) -> usize {
        let words = (self.cols + 63) / 64;
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in 0..self.cols {
                    if self.get(i, j) % 2 != 0 {
                        row[j / 64] |= 1u64 << (j % 64);
                    }
                }
                row
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, 1u64 << (col % 64));
            let Some(pivot) = (rank..self.rows).find(|&i| rows[i][word] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[word] & bit != 0 {
                    for (dst, src) in row.iter_mut().zip(&pivot_row) {
                        *dst ^= src;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force rank oracle: largest k with a nonsingular k x k minor,
    /// determinants expanded recursively over BigInt.
    fn rank_by_minor_enumeration(m: &IntMatrix) -> usize {
        fn det(m: &Vec<Vec<BigInt>>) -> BigInt {
            let n = m.len();
            if n == 0 {
                return BigInt::from(1);
            }
            if n == 1 {
                return m[0][0].clone();
            }
            let mut total = BigInt::from(0);
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }

        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combinations(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut c = vec![first];
                        c.append(&mut rest);
                        out.push(c);
                    }
                }
            }
            out
        }

        let max_k = m.rows().min(m.cols());
        for k in (1..=max_k).rev() {
            for rows in combinations(m.rows(), k) {
                for cols in combinations(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| BigInt::from(m.get(i, j))).collect())
                        .collect();
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(IntMatrix::zeros(3, 4).rank_exact(), 0);
        assert_eq!(IntMatrix::zeros(0, 0).rank_exact(), 0);
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![1, 2]]);
        assert_eq!(m.rank_exact(), 1);
    }

    #[test]
    fn full_rank_square() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        assert_eq!(m.rank_exact(), 3);
        assert_eq!(rank_by_minor_enumeration(&m), 3);
    }

    #[test]
    fn path_incidence_rank_matches_minor_oracle() {
        // Oriented incidence matrices of paths on up to 5 vertices: rank n-1.
        for n in 2..=5usize {
            let mut m = IntMatrix::zeros(n, n - 1);
            for e in 0..n - 1 {
                m.set(e, e, -1);
                m.set(e + 1, e, 1);
            }
            assert_eq!(m.rank_exact(), n - 1, "path on {n} vertices");
            assert_eq!(rank_by_minor_enumeration(&m), n - 1);
        }
    }

    #[test]
    fn star_incidence_rank_matches_minor_oracle() {
        // Star K_{1,4}: 5 vertices, 4 edges, rank 4.
        let mut m = IntMatrix::zeros(5, 4);
        for e in 0..4 {
            m.set(0, e, -1);
            m.set(e + 1, e, 1);
        }
        assert_eq!(m.rank_exact(), 4);
        assert_eq!(rank_by_minor_enumeration(&m), 4);
    }

    #[test]
    fn gf2_rank_detects_parity_collapse() {
        // [[2]] has rational rank 1 but is zero mod 2.
        let m = IntMatrix::from_rows(vec![vec![2]]);
        assert_eq!(m.rank_exact(), 1);
        assert_eq!(m.rank_gf2(), 0);
    }

    #[test]
    fn matmul_against_hand_computation() {
        let a = IntMatrix::from_rows(vec![vec![1, -1], vec![0, 2]]);
        let b = IntMatrix::from_rows(vec![vec![3, 1], vec![1, 0]]);
        let c = a.matmul(&b);
        assert_eq!(c, IntMatrix::from_rows(vec![vec![2, 1], vec![2, 0]]));
    }

    proptest! {
        #[test]
        fn bareiss_matches_minor_enumeration(
            rows in 1usize..5,
            cols in 1usize..5,
            entries in prop::collection::vec(-4i64..=4, 16),
        ) {
            let mut m = IntMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, entries[(i * cols + j) % entries.len()]);
                }
            }
            prop_assert_eq!(m.rank_exact(), rank_by_minor_enumeration(&m));
        }

        #[test]
        fn gf2_rank_never_exceeds_rational_rank(
            rows in 1usize..6,
            cols in 1usize..6,
            entries in prop::collection::vec(-3i64..=3, 36),
        ) {
            let mut m = IntMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, entries[(i * cols + j) % entries.len()]);
                }
            }
            prop_assert!(m.rank_gf2() <= m.rank_exact());
        }

        #[test]
        fn rank_invariant_under_transpose(
            rows in 1usize..5,
            cols in 1usize..5,
            entries in prop::collection::vec(-4i64..=4, 16),
        ) {
            let mut m = IntMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, entries[(i * cols + j) % entries.len()]);
                }
            }
            prop_assert_eq!(m.rank_exact(), m.transpose().rank_exact());
        }
    }
}
