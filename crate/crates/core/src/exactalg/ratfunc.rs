use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRational, Polynomial};
use crate::error::{Error, Result};

/// A rational generating function `num(z) / den(z)` in canonical form.
///
/// `gcd(num, den) = 1` and `den(0) = 1`, so two values are equal exactly when
/// they denote the same rational function and `PartialEq` is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Cancel common factors and rescale so that `den(0) = 1`.
    pub fn reduce(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NoSeriesAtOrigin);
        }
        let inv = d0.recip();
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// `1/(1 - z)`, the generating function of the all-ones sequence.
    pub fn ones() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::from_ints([1, -1]),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num < deg den`; the zero function counts as proper.
    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => unreachable!("denominator is never zero"),
        }
    }

    /// Split into polynomial part and proper part.
    pub fn split_polynomial_part(&self) -> (Polynomial, RationalFunction) {
        let (q, r) = self
            .num
            .divrem(&self.den)
            .expect("denominator is never zero");
        let proper = RationalFunction {
            num: r,
            den: self.den.clone(),
        };
        // remainder shares no factor with den since num did not
        (q, proper)
    }

    /// The first `n` power-series coefficients.
    ///
    /// Uses the recurrence `den(0) a_k = num_k - sum_{i>=1} den_i a_{k-i}`.
    pub fn series_prefix(&self, n: usize) -> Vec<BigRational> {
        let den = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut a = self.num.coeff(k);
            for (i, d) in den.iter().enumerate().skip(1).take(k) {
                if !d.is_zero() {
                    a -= d * &out[k - i];
                }
            }
            out.push(a);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        RationalFunction {
            num: self.num.shift_up(k),
            den: self.den.clone(),
        }
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    fn combine(num: Polynomial, den: Polynomial) -> Self {
        Self::reduce(num, den).expect("product of den(0) = 1 denominators stays nonzero at 0")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::combine(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::combine(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::combine(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.coeffs().len() == 1 && self.den.coeff(0).is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}
