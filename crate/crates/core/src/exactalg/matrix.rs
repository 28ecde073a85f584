use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BigRational, Polynomial};
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Kronecker (tensor) product; block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &RationalMatrix) -> RationalMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// `det(xI - self)` as a monic polynomial in `x`.
    ///
    /// Faddeev-LeVerrier over the integers after clearing denominators:
    /// if `self = B / L` then `c_k(self) = c_k(B) / L^(n-k)`.
    pub fn charpoly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let scale = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let b: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| (e * BigRational::from_integer(scale.clone())).to_integer())
            .collect();
        // sparse rows of B for the repeated products
        let b_rows: Vec<Vec<(usize, BigInt)>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !b[i * n + j].is_zero())
                    .map(|j| (j, b[i * n + j].clone()))
                    .collect()
            })
            .collect();

        // coeffs[k] multiplies x^k
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = vec![BigInt::zero(); n * n];
        for k in 1..=n {
            // M_k = B M_{k-1} + c_{n-k+1} I, then c_{n-k} = -tr(B M_k) / k
            for i in 0..n {
                m[i * n + i] += &coeffs[n - k + 1];
            }
            let bm = sparse_mul(&b_rows, &m, n);
            let trace: BigInt = (0..n).map(|i| &bm[i * n + i]).sum();
            let (q, r) = (-trace).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
            coeffs[n - k] = q;
            m = bm;
        }

        let mut out = Vec::with_capacity(n + 1);
        let mut pow = BigInt::one();
        for k in (0..=n).rev() {
            out.push(BigRational::new(coeffs[k].clone(), pow.clone()));
            pow *= &scale;
        }
        out.reverse();
        Ok(Polynomial::new(out))
    }
}

fn sparse_mul(a_rows: &[Vec<(usize, BigInt)>], m: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for (i, row) in a_rows.iter().enumerate() {
        let dst = &mut out[i * n..(i + 1) * n];
        for (j, a) in row {
            let src = &m[j * n..(j + 1) * n];
            for (d, s) in dst.iter_mut().zip(src) {
                if !s.is_zero() {
                    *d += a * s;
                }
            }
        }
    }
    out
}
