//! Dense matrices over exact rationals, sized for character oracles and
//! Gram tests.

use std::ops::Mul;

use num::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            &self[(i / other.rows, j / other.cols)] * &other[(i % other.rows, j % other.cols)]
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Exact determinant by Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[(r, col)] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &a[(col, j)] * &f;
                    a[(r, j)] -= v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Outcome of an exact semidefiniteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdOutcome {
    Psd,
    /// `indices` select a principal submatrix certifying failure: either an
    /// asymmetric pair, or a principal minor with negative determinant.
    NotPsd { indices: Vec<usize>, reason: String },
}

/// Symmetric Gaussian elimination without pivoting. A negative pivot, or a
/// zero pivot whose remaining row is nonzero, rejects the matrix; the pivots
/// eliminated so far plus the offending indices form the witness minor.
pub fn exact_psd(m: &RatMatrix) -> PsdOutcome {
    let n = m.rows();
    for i in 0..n {
        for j in 0..i {
            if m[(i, j)] != m[(j, i)] {
                return PsdOutcome::NotPsd {
                    indices: vec![j, i],
                    reason: format!("entries ({j},{i}) and ({i},{j}) differ"),
                };
            }
        }
    }
    let mut a = m.clone();
    let mut used: Vec<usize> = Vec::new();
    for p in 0..n {
        let pivot = a[(p, p)].clone();
        if pivot.is_negative() {
            used.push(p);
            return PsdOutcome::NotPsd {
                indices: used,
                reason: format!("negative pivot at {p}"),
            };
        }
        if pivot.is_zero() {
            if let Some(q) = (p + 1..n).find(|&q| !a[(p, q)].is_zero()) {
                used.push(p);
                used.push(q);
                return PsdOutcome::NotPsd {
                    indices: used,
                    reason: format!("zero pivot at {p} with nonzero coupling to {q}"),
                };
            }
            continue;
        }
        used.push(p);
        for r in p + 1..n {
            let f = &a[(r, p)] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in p..n {
                let v = &a[(p, c)] * &f;
                a[(r, c)] -= v;
            }
        }
    }
    PsdOutcome::Psd
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_fn(rows.len(), rows[0].len(), |i, j| int(rows[i][j]))
    }

    #[test]
    fn products_and_kron() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, mat(&[&[2, 1], &[4, 3]]));
        assert_eq!(&a * &RatMatrix::identity(2), a);
        let k = RatMatrix::identity(2).kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.trace(), int(0));
        assert_eq!(a.determinant(), int(-2));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn psd_decisions() {
        assert_eq!(exact_psd(&mat(&[&[1]])), PsdOutcome::Psd);
        assert_eq!(exact_psd(&mat(&[&[1, 1], &[1, 1]])), PsdOutcome::Psd);
        assert_eq!(exact_psd(&mat(&[&[0, 0], &[0, 2]])), PsdOutcome::Psd);
        let PsdOutcome::NotPsd { indices, .. } = exact_psd(&mat(&[&[1, 2], &[2, 1]])) else {
            panic!("indefinite matrix accepted");
        };
        assert_eq!(indices, vec![0, 1]);
        let m = mat(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1]]);
        let PsdOutcome::NotPsd { indices, .. } = exact_psd(&m) else {
            panic!("indefinite matrix accepted");
        };
        assert!(m.submatrix(&indices).determinant() < int(0));
        assert!(matches!(exact_psd(&mat(&[&[1, 2], &[0, 1]])), PsdOutcome::NotPsd { .. }));
    }
}
