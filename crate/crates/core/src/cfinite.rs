//! Sequences satisfying linear recurrences with constant coefficients, and
//! their rational generating functions.
//!
//! Terms at negative indices are zero throughout the crate. Shifting a
//! generating function up by `k` therefore describes `n -> a_(n-k)` with the
//! first `k` terms padded by zeros.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{BigRational, Polynomial, RationalFunction};

/// `u_(n+h) = c_1 u_(n+h-1) + ... + c_h u_n` with initial values `u_0 .. u_(h-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFiniteSequence {
    recurrence: Vec<BigRational>,
    initial: Vec<BigRational>,
}

impl CFiniteSequence {
    pub fn new(recurrence: Vec<BigRational>, initial: Vec<BigRational>) -> Result<Self> {
        if recurrence.is_empty() {
            return Err(Error::InvalidRecurrence("order must be positive".into()));
        }
        if recurrence.len() != initial.len() {
            return Err(Error::InvalidRecurrence(format!(
                "{} recurrence coefficients but {} initial values",
                recurrence.len(),
                initial.len()
            )));
        }
        if recurrence.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidRecurrence(
                "trailing recurrence coefficient must be nonzero".into(),
            ));
        }
        Ok(CFiniteSequence {
            recurrence,
            initial,
        })
    }

    pub fn order(&self) -> usize {
        self.recurrence.len()
    }

    pub fn recurrence(&self) -> &[BigRational] {
        &self.recurrence
    }

    pub fn initial(&self) -> &[BigRational] {
        &self.initial
    }

    /// The denominator `1 - c_1 z - ... - c_h z^h`.
    pub fn denominator(&self) -> Polynomial {
        let mut d = vec![BigRational::from_integer(1.into())];
        d.extend(self.recurrence.iter().map(|c| -c));
        Polynomial::new(d)
    }

    /// `u_n`, zero for negative `n`.
    pub fn term(&self, n: i64) -> BigRational {
        if n < 0 {
            return BigRational::zero();
        }
        self.terms(n as usize + 1).pop().expect("at least one term")
    }

    /// `u_0 .. u_(count-1)`.
    pub fn terms(&self, count: usize) -> Vec<BigRational> {
        let h = self.order();
        let mut out: Vec<BigRational> = self.initial.iter().take(count).cloned().collect();
        while out.len() < count {
            let n = out.len();
            let next = self
                .recurrence
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, c)| acc + c * &out[n - 1 - i]);
            out.push(next);
        }
        debug_assert!(count < h || out.len() == count);
        out
    }

    /// `N(z) / (1 - c_1 z - ... - c_h z^h)` reduced to lowest terms.
    pub fn to_gf(&self) -> RationalFunction {
        let den = self.denominator();
        let init = Polynomial::new(self.initial.clone());
        let num = (&den * &init).truncate(self.order());
        RationalFunction::reduce(num, den).expect("den(0) = 1")
    }

    /// Inverse of [`to_gf`](Self::to_gf) for proper generating functions.
    pub fn from_gf(f: &RationalFunction) -> Result<Self> {
        if !f.is_proper() {
            return Err(Error::Improper);
        }
        let h = match f.den().degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantDenominator),
        };
        let recurrence = f.den().coeffs()[1..].iter().map(|c| -c).collect();
        let initial = f.series_prefix(h);
        Self::new(recurrence, initial)
    }
}

/// The order-`h` Fibonacci analogue with generating function
/// `z / (1 - z - ... - z^h)`.
///
/// Initial values are `0, 1` followed by `2^(n-2)` up to index `h - 1`.
/// Order 1 is rejected: `z/(1-z)` has no order-1 recurrence valid from `n = 0`.
pub fn kbonacci(h: usize) -> Result<CFiniteSequence> {
    if h < 2 {
        return Err(Error::InvalidOrder(h as i64));
    }
    let one = BigRational::from_integer(1.into());
    let mut initial = vec![BigRational::zero(), one.clone()];
    for n in 2..h {
        let prev = initial[n - 1].clone();
        initial.push(if n == 2 { prev } else { &prev + &prev });
    }
    CFiniteSequence::new(vec![one; h], initial)
}

pub fn to_gf(s: &CFiniteSequence) -> RationalFunction {
    s.to_gf()
}

pub fn from_gf(f: &RationalFunction) -> Result<CFiniteSequence> {
    CFiniteSequence::from_gf(f)
}

pub fn term(s: &CFiniteSequence, n: i64) -> BigRational {
    s.term(n)
}

/// `k >= 0`: generating function of `a_(n-k)`; `k < 0`: of `a_(n+|k|)`.
pub fn shift_gf(f: &RationalFunction, k: i64) -> RationalFunction {
    if k >= 0 {
        return f.shift_up(k as usize);
    }
    let k = k.unsigned_abs() as usize;
    let head = Polynomial::new(f.series_prefix(k));
    let num = f.num() - &(&head * f.den());
    RationalFunction::reduce(num.shift_down(k), f.den().clone()).expect("den(0) = 1")
}

/// `f / (1 - z)`: coefficient `n` becomes the sum of coefficients `0..=n`.
pub fn partial_sum(f: &RationalFunction) -> RationalFunction {
    f * &RationalFunction::ones()
}
