//! Dense row reduction over F_p.
//!
//! All higher layers reduce to the two primitives here: `rank` and
//! `kernel_basis`. Pivoting is deterministic (columns left to right, first
//! nonzero row from the top), so reduced bases are reproducible across runs
//! and platforms.

use crate::error::Error;
use crate::field::{Prime, Reducer};

/// A dense matrix with entries in F_p, row-major, immutable dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    /// Builds a matrix from row slices, reducing every entry mod p.
    pub fn from_rows(p: Prime, rows: &[Vec<u64>]) -> Result<FpMatrix, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter("ragged matrix rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row.iter().map(|&v| p.reduce(v)));
        }
        Ok(FpMatrix { p, rows: r, cols: c, data })
    }

    pub fn from_rows_signed(p: Prime, rows: &[Vec<i64>]) -> Result<FpMatrix, Error> {
        let converted: Vec<Vec<u64>> =
            rows.iter().map(|row| row.iter().map(|&v| p.reduce_signed(v)).collect()).collect();
        FpMatrix::from_rows(p, &converted)
    }

    pub fn identity(p: Prime, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p.value();
        }
        m
    }

    /// Horizontal concatenation; all blocks must share the row count.
    pub fn hstack(p: Prime, blocks: &[FpMatrix]) -> FpMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack: row mismatch");
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = FpMatrix::zeros(p, rows, cols);
        for r in 0..rows {
            let mut off = 0;
            for b in blocks {
                out.data[r * cols + off..r * cols + off + b.cols]
                    .copy_from_slice(&b.data[r * b.cols..(r + 1) * b.cols]);
                off += b.cols;
            }
        }
        out
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.p.reduce(v);
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let red = Reducer::new(self.p);
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(v) {
                    acc = red.reduce(acc + a * b);
                }
                acc
            })
            .collect()
    }

    /// Row rank over F_p (forward elimination only).
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        echelonize(&mut work, self.rows, self.cols, self.p, false).len()
    }

    /// A basis of the right kernel {v : M v = 0}.
    ///
    /// Basis vectors are indexed by the free columns in ascending order and
    /// carry 1 in their own free coordinate and 0 in every other free
    /// coordinate, i.e. the basis is in reduced echelon form over the free
    /// variables.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut work = self.data.clone();
        let pivots = echelonize(&mut work, self.rows, self.cols, self.p, true);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                // RREF row: v[pc] = -work[row][free]
                v[pc] = self.p.neg(work[row * self.cols + free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// In-place elimination. Returns pivot columns in order. With `full` the
/// matrix is brought to reduced row echelon form, otherwise elimination only
/// clears entries below each pivot.
fn echelonize(data: &mut [u64], rows: usize, cols: usize, p: Prime, full: bool) -> Vec<usize> {
    let red = Reducer::new(p);
    let pv = p.value();
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // First nonzero entry scanning rows top to bottom.
        let Some(found) = (pivot_row..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if found != pivot_row {
            for j in col..cols {
                data.swap(found * cols + j, pivot_row * cols + j);
            }
        }
        let inv = p.inv(data[pivot_row * cols + col]);
        if inv != 1 {
            for j in col..cols {
                data[pivot_row * cols + j] = red.reduce(data[pivot_row * cols + j] * inv);
            }
        }
        let lo = if full { 0 } else { pivot_row + 1 };
        for r in lo..rows {
            if r == pivot_row {
                continue;
            }
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            let nf = pv - f;
            let (head, tail) = data.split_at_mut(pivot_row.max(r) * cols);
            let (prow, trow) = if pivot_row < r {
                (&head[pivot_row * cols..pivot_row * cols + cols], &mut tail[..cols])
            } else {
                (&tail[..cols], &mut head[r * cols..r * cols + cols])
            };
            for j in col..cols {
                trow[j] = red.reduce(trow[j] + nf * prow[j]);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn rank_identity() {
        assert_eq!(FpMatrix::identity(p(5), 2).rank(), 2);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(FpMatrix::zeros(p(3), 3, 4).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // second row is 2x the first
        let m = FpMatrix::from_rows(p(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(FpMatrix::identity(p(7), 2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_row_is_standard_basis() {
        let m = FpMatrix::zeros(p(3), 1, 3);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_of_sum_row_mod_2() {
        let m = FpMatrix::from_rows(p(2), &[vec![1, 1, 1]]).unwrap();
        let basis = m.kernel_basis();
        // Independent oracle: enumerate all 8 vectors of F_2^3.
        let solutions: Vec<[u64; 3]> = (0..8u64)
            .map(|b| [b & 1, (b >> 1) & 1, (b >> 2) & 1])
            .filter(|v| (v[0] + v[1] + v[2]) % 2 == 0)
            .collect();
        assert_eq!(solutions.len(), 4); // 2-dimensional space
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
        // The basis spans exactly the solution set.
        let mut spanned: Vec<[u64; 3]> = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                let v = [
                    (a * basis[0][0] + b * basis[1][0]) % 2,
                    (a * basis[0][1] + b * basis[1][1]) % 2,
                    (a * basis[0][2] + b * basis[1][2]) % 2,
                ];
                spanned.push(v);
            }
        }
        spanned.sort();
        let mut sols = solutions.clone();
        sols.sort();
        assert_eq!(spanned, sols);
    }

    fn random_matrix(rng: &mut StdRng, p: Prime, rows: usize, cols: usize) -> FpMatrix {
        let data: Vec<Vec<u64>> =
            (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..p.value())).collect()).collect();
        FpMatrix::from_rows(p, &data).unwrap()
    }

    #[test]
    fn rank_nullity_and_kernel_membership() {
        let mut rng = StdRng::seed_from_u64(42);
        for &pv in &[2u64, 3, 5] {
            let p = p(pv);
            for _ in 0..60 {
                let rows = rng.gen_range(0..6);
                let cols = rng.gen_range(1..6);
                let m = random_matrix(&mut rng, p, rows, cols);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.len(), cols, "rank-nullity");
                for v in &k {
                    assert!(m.mul_vec(v).iter().all(|&x| x == 0), "kernel vector");
                }
            }
        }
    }

    #[test]
    fn rank_invariant_under_row_permutation_and_scaling() {
        let mut rng = StdRng::seed_from_u64(7);
        let p = p(5);
        for _ in 0..40 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m = random_matrix(&mut rng, p, rows, cols);
            let r0 = m.rank();

            let mut perm: Vec<Vec<u64>> = (0..rows)
                .map(|r| (0..cols).map(|c| m.get(r, c)).collect())
                .collect();
            let i = rng.gen_range(0..rows);
            let j = rng.gen_range(0..rows);
            perm.swap(i, j);
            let scale = rng.gen_range(1..5u64);
            for e in perm[i.min(j)].iter_mut() {
                *e = (*e * scale) % 5;
            }
            let m2 = FpMatrix::from_rows(p, &perm).unwrap();
            assert_eq!(m2.rank(), r0);
        }
    }
}
