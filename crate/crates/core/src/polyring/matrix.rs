use num_bigint::BigInt;

use super::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    /// A Bareiss step produced a non-exact quotient. Cannot happen for a
    /// correct elimination; reported instead of panicking.
    #[error("internal error: inexact division during fraction-free elimination")]
    InexactDivision,
}

/// Square matrix over `Z[X]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Vec<IntPolynomial>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<IntPolynomial>>) -> Result<Self, MatrixError> {
        let n = entries.len();
        if let Some((row, r)) = entries.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(MatrixError::NotSquare { row, len: r.len(), n });
        }
        Ok(Self { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![vec![IntPolynomial::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i][i] = IntPolynomial::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: IntPolynomial) {
        self.entries[i][j] = value;
    }

    pub fn rows(&self) -> &[Vec<IntPolynomial>] {
        &self.entries
    }

    /// Entry-wise evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.eval(x)).collect())
            .collect()
    }

    /// Determinant by Bareiss fraction-free elimination. Every division is
    /// checked to be exact.
    pub fn det(&self) -> Result<IntPolynomial, MatrixError> {
        let n = self.n;
        if n == 0 {
            return Ok(IntPolynomial::one());
        }
        let mut m = self.entries.clone();
        let mut prev = IntPolynomial::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(IntPolynomial::zero());
                };
                m.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.div_exact(&prev).ok_or(MatrixError::InexactDivision)?;
                }
                m[i][k] = IntPolynomial::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}
