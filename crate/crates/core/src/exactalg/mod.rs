//! Exact rational arithmetic: polynomials, reduced rational functions,
//! power-series expansion and characteristic polynomials.

mod matrix;
pub(crate) mod poly;
mod ratfunc;

pub use matrix::RationalMatrix;
pub use num_rational::BigRational;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use crate::error::Result;

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

pub fn poly_divrem(p: &Polynomial, q: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    p.divrem(q)
}

pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.gcd(q)
}

pub fn ratfunc_reduce(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::reduce(num, den)
}

pub fn series_prefix(f: &RationalFunction, n: usize) -> Vec<BigRational> {
    f.series_prefix(n)
}

pub fn charpoly(m: &RationalMatrix) -> Result<Polynomial> {
    m.charpoly()
}

pub fn kronecker(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    a.kronecker(b)
}

/// Rational from a machine integer.
pub fn rat(n: i64) -> BigRational {
    poly::int(n)
}

/// Rational `n / d`.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
