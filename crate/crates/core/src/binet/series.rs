//! Generalized binomial series `B_t(x)^r = Σ binom(tn + r, n) r/(tn + r) x^n`.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::BigRational;

pub const MAX_TERMS: usize = 100_000;
const REL_TOL: f64 = 1e-18;
/// Consecutive negligible terms required before stopping.
const QUIET_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenBinomialParams {
    pub t: Rational64,
    pub r: Rational64,
    pub x: Complex64,
}

impl GenBinomialParams {
    pub fn new(t: Rational64, r: Rational64, x: Complex64) -> Self {
        GenBinomialParams { t, r, x }
    }
}

/// `(t-1)^(t-1) / t^t`, the radius of convergence for `t >= 1`.
pub fn convergence_radius(t: f64) -> Result<f64> {
    if t.is_nan() || t < 1.0 || !t.is_finite() {
        return Err(Error::InvalidParameter(format!("t = {t} must be >= 1")));
    }
    Ok((t - 1.0).powf(t - 1.0) / t.powf(t))
}

/// Evaluate the series, stopping once `|term| < 1e-18 |sum|` holds for a few
/// consecutive terms.
pub fn gen_binom_series(p: &GenBinomialParams) -> Result<Complex64> {
    let t = to_f64(p.t);
    let r = to_f64(p.r);
    let x = p.x;
    if !x.re.is_finite() || !x.im.is_finite() {
        return Err(Error::NonFinite);
    }
    let radius = convergence_radius(t)?;
    let ax = x.norm();
    if ax == 0.0 || p.r.is_zero() {
        return Ok(Complex64::one());
    }
    if ax >= radius {
        return Err(Error::OutsideRadius { abs_x: ax, radius });
    }
    // terms decay roughly like (|x|/radius)^n; refuse up front if the cap
    // cannot be enough
    let needed = (REL_TOL.ln() / (ax / radius).ln()).ceil();
    if needed > MAX_TERMS as f64 {
        return Err(Error::TermCap(MAX_TERMS));
    }

    let (ln_ax, arg) = (ax.ln(), x.arg());
    let mut sum = Complex64::one();
    let mut quiet = 0;
    for n in 1..MAX_TERMS {
        let term = series_term(t, r, n, ln_ax, arg);
        sum += term;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(Error::NonFinite);
        }
        if term.norm() < REL_TOL * sum.norm() {
            quiet += 1;
            if quiet >= QUIET_RUN {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::TermCap(MAX_TERMS))
}

/// `(r/n) x^n Π_{k=1}^{n-1} (tn + r - k)/k`, accumulated in log space.
fn series_term(t: f64, r: f64, n: usize, ln_ax: f64, arg: f64) -> Complex64 {
    let a = t * n as f64 + r;
    let mut log_mag = (r.abs() / n as f64).ln() + n as f64 * ln_ax;
    let mut negative = r < 0.0;
    for k in 1..n {
        let f = a - k as f64;
        if f == 0.0 {
            return Complex64::zero();
        }
        negative ^= f < 0.0;
        log_mag += f.abs().ln() - (k as f64).ln();
    }
    let mag = if negative {
        -log_mag.exp()
    } else {
        log_mag.exp()
    };
    Complex64::from_polar(mag, n as f64 * arg)
}

/// Exact coefficient `binom(tn + r, n) r/(tn + r)` of `x^n`.
pub fn gen_binom_coefficient(t: &BigRational, r: &BigRational, n: usize) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let a = t * BigRational::from_integer(n.into()) + r;
    let mut acc = r / BigRational::from_integer(n.into());
    for k in 1..n {
        let k = BigRational::from_integer(k.into());
        acc = acc * (&a - &k) / k;
    }
    acc
}

/// `|B - 1 - x B^t|` with `B = B_t(x)` and the principal branch of `B^t`.
pub fn functional_equation_check(t: Rational64, x: Complex64) -> Result<f64> {
    let b = gen_binom_series(&GenBinomialParams::new(t, Rational64::one(), x))?;
    let bt = if t.is_integer() {
        b.powi(t.to_integer() as i32)
    } else {
        b.powf(to_f64(t))
    };
    Ok((b - 1.0 - x * bt).norm())
}

pub(crate) fn to_f64(q: Rational64) -> f64 {
    q.to_f64().expect("finite rational")
}
