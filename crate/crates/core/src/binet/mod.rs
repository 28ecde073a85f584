//! Binet-type closed forms for k-bonacci numbers.
//!
//! The generating function `z/(1 - z - ... - z^h)` equals
//! `z(1-z)/(1 - 2z + z^(h+1))`. The `h + 1` roots of the denominator are
//!
//! ```text
//! r_h = B_(h+1)(2^-(h+1)) / 2
//! r_j = ζ^-j 2^(1/h) B_((h+1)/h)(ζ^j 2^-((h+1)/h))^(-1/h),   0 <= j < h,  ζ = exp(2πi/h)
//! ```
//!
//! with `B_t` the generalized binomial series and principal branches
//! throughout. Terms are then `u_n = Σ c_i r_i^-n`.

mod series;

pub use series::{
    convergence_radius, functional_equation_check, gen_binom_coefficient, gen_binom_series,
    GenBinomialParams, MAX_TERMS,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::cfinite::CFiniteSequence;
use crate::error::{Error, Result};
use crate::exactalg::{frac, BigRational, Polynomial};

pub type ComplexValue = Complex64;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 12;

/// Root certificate tolerance `|1 - 2r + r^(h+1)|`.
pub const ROOT_TOLERANCE: f64 = 1e-10;
const PIVOT_FLOOR: f64 = 1e-12;
const CONJUGATE_TOLERANCE: f64 = 1e-9;
const MIN_SEPARATION: f64 = 1e-8;
/// Relative bound on the imaginary part of an evaluated Binet sum.
pub const IMAGINARY_RESIDUE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct BinetData {
    pub order: usize,
    /// `r_0, ..., r_(h-1), r_h`.
    pub roots: Vec<ComplexValue>,
    /// `coefficients[i]` multiplies `roots[i]^-n`.
    pub coefficients: Vec<ComplexValue>,
    pub tolerance: f64,
}

/// `1 - 2z + z^(h+1)`.
pub fn denominator(h: usize) -> Polynomial {
    let mut c = vec![0i64; h + 2];
    c[0] = 1;
    c[1] = -2;
    c[h + 1] = 1;
    Polynomial::from_ints(c)
}

fn check_order(h: usize) -> Result<()> {
    if (MIN_ORDER..=MAX_ORDER).contains(&h) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            order: h,
            min: MIN_ORDER,
            max: MAX_ORDER,
        })
    }
}

/// Evaluate `1 - 2r + r^(h+1)`.
pub fn denominator_residual(h: usize, r: ComplexValue) -> f64 {
    (1.0 - 2.0 * r + r.powi(h as i32 + 1)).norm()
}

/// All roots of `1 - 2z + z^(h+1)` as `[r_0, ..., r_(h-1), r_h]`.
pub fn roots(h: usize) -> Result<Vec<ComplexValue>> {
    check_order(h)?;
    let hi = h as i64;
    let mut out = Vec::with_capacity(h + 1);
    let base = 0.5f64.powf((h + 1) as f64 / h as f64);
    let scale = 2f64.powf(1.0 / h as f64);
    for j in 0..h {
        let zeta_j = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / h as f64);
        let params = GenBinomialParams::new(
            Rational64::new(hi + 1, hi),
            Rational64::new(-1, hi),
            zeta_j * base,
        );
        let b = gen_binom_series(&params)?;
        out.push(zeta_j.conj() * scale * b);
    }
    let x = Complex64::new(0.5f64.powi(h as i32 + 1), 0.0);
    let b = gen_binom_series(&GenBinomialParams::new(
        Rational64::from_integer(hi + 1),
        Rational64::one(),
        x,
    ))?;
    out.push(0.5 * b);
    Ok(out)
}

/// Whether the multiset is closed under complex conjugation.
pub fn conjugate_root_pairing(roots: &[ComplexValue]) -> bool {
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        let target = roots[i].conj();
        let partner = (0..roots.len())
            .filter(|&j| !used[j] && (j != i || roots[i].im.abs() < CONJUGATE_TOLERANCE))
            .find(|&j| (roots[j] - target).norm() < CONJUGATE_TOLERANCE);
        match partner {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => return false,
        }
    }
    true
}

fn min_separation(roots: &[ComplexValue]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

/// Coefficients `c_i` with `u_n = Σ c_i r_i^-n`, fitted to `u_0 .. u_h`.
///
/// `seq` must have a proper generating function whose denominator divides
/// `1 - 2z + z^(h+1)`; `kbonacci(h)` is the intended input.
pub fn binet_coefficients(h: usize, seq: &CFiniteSequence) -> Result<BinetData> {
    check_order(h)?;
    let gf = seq.to_gf();
    let (_, rem) = denominator(h).divrem(gf.den())?;
    if !rem.is_zero() || !gf.is_proper() || gf.den().degree() > Some(h + 1) {
        return Err(Error::UnsupportedSequence(h));
    }
    let rts = roots(h)?;
    for r in &rts {
        let res = denominator_residual(h, *r);
        if res.is_nan() || res >= ROOT_TOLERANCE {
            return Err(Error::InvalidParameter(format!(
                "root certificate failed: residual {res:e}"
            )));
        }
    }
    let sep = min_separation(&rts);
    if sep < MIN_SEPARATION {
        return Err(Error::DuplicateRoots(sep));
    }

    let size = h + 1;
    let mut a: Vec<Vec<Complex64>> = (0..size)
        .map(|n| rts.iter().map(|r| r.powi(-(n as i32))).collect())
        .collect();
    let mut b: Vec<Complex64> = seq
        .terms(size)
        .iter()
        .map(|u| Complex64::new(rat_to_f64(u), 0.0))
        .collect();
    let coefficients = solve(&mut a, &mut b)?;

    Ok(BinetData {
        order: h,
        roots: rts,
        coefficients,
        tolerance: ROOT_TOLERANCE,
    })
}

/// Gaussian elimination with partial pivoting.
fn solve(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> Result<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("non-empty range");
        let mag = a[piv][col].norm();
        if mag < PIVOT_FLOOR {
            return Err(Error::SingularSystem(mag));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f.is_zero() {
                continue;
            }
            let (top, rest) = a.split_at_mut(row);
            for (x, v) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for row in (0..n).rev() {
        let s: Complex64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

/// `Σ c_i r_i^-n`; errors if the imaginary part is not negligible.
pub fn binet_eval(d: &BinetData, n: u32) -> Result<ComplexValue> {
    let v: Complex64 = d
        .coefficients
        .iter()
        .zip(&d.roots)
        .map(|(c, r)| c * r.powi(-(n as i32)))
        .sum();
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::NonFinite);
    }
    if v.im.abs() > IMAGINARY_RESIDUE * v.re.abs().max(1.0) {
        return Err(Error::ImaginaryResidue { re: v.re, im: v.im });
    }
    Ok(v)
}

/// `[z^n] 1/(1 - 2z + z^(h+1)) = -Σ_i r_i^-(n+1) Π_{j≠i} (r_i - r_j)^-1`.
pub fn resolvent_coefficient(h: usize, n: u32) -> Result<ComplexValue> {
    let rts = roots(h)?;
    let sep = min_separation(&rts);
    if sep < MIN_SEPARATION {
        return Err(Error::DuplicateRoots(sep));
    }
    let mut total = Complex64::zero();
    for (i, ri) in rts.iter().enumerate() {
        let prod: Complex64 = rts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, rj)| ri - rj)
            .product();
        total -= ri.powi(-(n as i32 + 1)) / prod;
    }
    Ok(total)
}

/// Residual of the `j = 0` root check written with general `u`:
/// `1 - u^(-(h+1)/h) B^(-1/h) + u^(-(h+1)/h) B^(-(h+1)/h)` where
/// `B = B_((h+1)/h)(u^((h+1)/h))`, both powers taken from their own series.
pub fn unit_root_expansion_residual(h: usize, u: f64) -> Result<f64> {
    check_order(h)?;
    let hi = h as i64;
    let t = Rational64::new(hi + 1, hi);
    let e = (h + 1) as f64 / h as f64;
    let x = Complex64::new(u.powf(e), 0.0);
    let b1 = gen_binom_series(&GenBinomialParams::new(t, Rational64::new(-1, hi), x))?;
    let b2 = gen_binom_series(&GenBinomialParams::new(
        t,
        Rational64::new(-(hi + 1), hi),
        x,
    ))?;
    let w = u.powf(-e);
    Ok((1.0 - w * b1 + w * b2).norm())
}

/// Exact form of the same check: with `a_n` the coefficients of
/// `B^(-1/h)` and `b_n` those of `B^(-(h+1)/h)`, the sum vanishes iff
/// `a_0 = b_0`, `1 - a_1 + b_1 = 0` and `a_n = b_n` for `n >= 2`.
pub fn unit_root_expansion_exact(h: usize, n_max: usize) -> Result<bool> {
    check_order(h)?;
    let hi = h as i64;
    let t = frac(hi + 1, hi);
    let ra = frac(-1, hi);
    let rb = frac(-(hi + 1), hi);
    let a = |n| gen_binom_coefficient(&t, &ra, n);
    let b = |n| gen_binom_coefficient(&t, &rb, n);
    if a(0) != b(0) || !(BigRational::one() - a(1) + b(1)).is_zero() {
        return Ok(false);
    }
    Ok((2..=n_max).all(|n| a(n) == b(n)))
}

fn rat_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
