//! Dense exact linear algebra over the rationals: row reduction, rank,
//! nullspace and subspace comparison. Dimensions here are tiny (tens of
//! rows), so fraction-free tricks are not worth the complexity.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let piv = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            if piv != row {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.at(row, col).clone().recip();
            for j in col..self.cols {
                let v = self.at(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = self.at(r, j) - &factor * self.at(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one vector per free column, with the
    /// free coordinate set to 1. Deterministic.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Do two row-span generating sets span the same subspace?
pub fn same_row_span(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() == b.is_empty();
    }
    let ra = QMatrix::from_rows(a.to_vec()).rank();
    let rb = QMatrix::from_rows(b.to_vec()).rank();
    let mut all: Vec<Vec<BigRational>> = a.to_vec();
    all.extend(b.to_vec());
    let rab = QMatrix::from_rows(all).rank();
    ra == rb && rb == rab
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rref_and_rank() {
        let mut m = QMatrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn nullspace_is_kernel() {
        let m = QMatrix::from_rows(vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for i in 0..m.rows {
                let dot: BigRational =
                    (0..m.cols).map(|j| m.at(i, j) * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_comparison() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let c = vec![vec![q(1), q(1)]];
        assert!(same_row_span(&a, &b));
        assert!(!same_row_span(&a, &c));
    }
}
