//! Sum-of-squares identities for k-bonacci numbers.
//!
//! The partial sums `S_n = u_0^2 + ... + u_n^2` have a rational generating
//! function with a simple pole at `z = 1`. Splitting that pole off leaves a
//! remainder over the same denominator as the products `u_n u_(n+k)`, so for a
//! suitable shift `k` the remainder is a polynomial combination of shifted
//! copies of `t_n = scale * u_n * u_(n+k)`:
//!
//! ```text
//! S_n = constant + global_factor * (λ_0 t_n + λ_1 t_(n-1) + ... + λ_m t_(n-m)),   n >= 1
//! ```

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cfinite::{kbonacci, partial_sum, CFiniteSequence};
use crate::error::{Error, Result};
use crate::exactalg::{frac, BigRational, Polynomial, RationalFunction};
use crate::hadamard::{hadamard_product, shifted_product_gf};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 8;

/// Upper end of the term-wise check run by [`sum_of_squares_identity`].
pub const TERMWISE_LIMIT: i64 = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub order: usize,
    pub constant: BigRational,
    pub scale: BigRational,
    pub basis_shift: usize,
    pub coefficients: Vec<BigRational>,
    pub global_factor: BigRational,
    /// Generating function `z / D(z)` of `t_n`.
    pub basis_gf: RationalFunction,
    pub termwise: TermwiseCheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermwiseCheck {
    pub range_checked: (i64, i64),
    pub max_abs_discrepancy: BigRational,
}

impl IdentityReport {
    /// `constant * z/(1-z) + global_factor * (Σ λ_i z^i) * basis_gf`.
    pub fn rhs_gf(&self) -> RationalFunction {
        let carrier = RationalFunction::reduce(Polynomial::z(), Polynomial::from_ints([1, -1]))
            .expect("den(0) = 1");
        let lambda = RationalFunction::from(Polynomial::new(self.coefficients.clone()));
        &carrier.scale(&self.constant) + &(&lambda * &self.basis_gf).scale(&self.global_factor)
    }

    /// Right-hand side at index `n` (the constant applies from `n = 1`).
    pub fn rhs_term(&self, u: &CFiniteSequence, n: i64) -> BigRational {
        let terms = u.terms((n + self.basis_shift as i64 + 1).max(0) as usize);
        self.rhs_from_terms(&terms, n)
    }

    fn rhs_from_terms(&self, u: &[BigRational], n: i64) -> BigRational {
        let k = self.basis_shift as i64;
        let t = |m: i64| &self.scale * at(u, m) * at(u, m + k);
        let body = self
            .coefficients
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (i, l)| acc + l * t(n - i as i64));
        let constant = if n >= 1 {
            self.constant.clone()
        } else {
            BigRational::zero()
        };
        constant + &self.global_factor * body
    }

    /// Plain-text rendering of the identity, e.g.
    /// `sum_{k<=n} u_k^2 = 1/3 + 1/3*(2*t_n + t_(n-1) - ...)` with `t_n = 1/2*u_n*u_(n+2)`.
    pub fn formula(&self) -> String {
        let mut body = String::new();
        for (i, l) in self.coefficients.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let idx = if i == 0 {
                "t_n".to_string()
            } else {
                format!("t_(n-{i})")
            };
            let mag = l.abs();
            let sign = if l.is_negative() { "-" } else { "+" };
            if body.is_empty() {
                if l.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                body.push_str(&format!("{mag}*"));
            }
            body.push_str(&idx);
        }
        format!(
            "sum_{{k<=n}} u_k^2 = {} + {}*({})  for n >= 1, where t_n = {}*u_n*u_(n+{})",
            self.constant, self.global_factor, body, self.scale, self.basis_shift
        )
    }
}

/// Split `f = c * z/(1-z) + g` where `g` has no pole at `z = 1`.
///
/// `c` is the residue `lim_{z->1} (1-z) f(z) = num(1) / q(1)` for
/// `den = (1-z) q`. `deg num <= deg den` is required; the remainder may then
/// have numerator degree equal to its denominator degree, as happens for the
/// k-bonacci partial sums.
pub fn split_pole_at_one(f: &RationalFunction) -> Result<(BigRational, RationalFunction)> {
    if f.num().degree() > f.den().degree() {
        return Err(Error::Improper);
    }
    let one = BigRational::one();
    if !f.den().eval(&one).is_zero() {
        return Err(Error::PoleAbsent);
    }
    let (q, r) = f.den().divrem(&Polynomial::from_ints([1, -1]))?;
    debug_assert!(r.is_zero());
    let q1 = q.eval(&one);
    if q1.is_zero() {
        return Err(Error::MultiplePole);
    }
    let c = f.num().eval(&one) / q1;
    let carrier = RationalFunction::reduce(Polynomial::z(), Polynomial::from_ints([1, -1]))?;
    let rest = f - &carrier.scale(&c);
    Ok((c, rest))
}

/// Write `target = global_factor * (Σ λ_i z^i) * basis` for a basis `m*z / D`.
///
/// `global_factor` is positive and the λ are coprime integers whenever the
/// quotient has rational coefficients at all; a zero target yields `(0, [])`.
pub fn express_in_shift_basis(
    target: &RationalFunction,
    basis: &RationalFunction,
) -> Result<(BigRational, Vec<BigRational>)> {
    if target.is_zero() {
        return Ok((BigRational::zero(), Vec::new()));
    }
    if target.den() != basis.den() {
        return Err(Error::DenominatorMismatch);
    }
    let m = monomial_coefficient(basis.num()).ok_or(Error::NonMonomialBasis)?;
    if !target.num().coeff(0).is_zero() {
        return Err(Error::NotInBasis);
    }
    let quotient = target.num().shift_down(1).scale(&m.recip());
    let global = content(quotient.coeffs());
    let lambda = quotient.scale(&global.recip()).into_coeffs();
    Ok((global, lambda))
}

/// `m` when `p = m*z`.
fn monomial_coefficient(p: &Polynomial) -> Option<BigRational> {
    (p.degree() == Some(1) && p.coeff(0).is_zero()).then(|| p.coeff(1))
}

/// Positive rational `g` such that every `c / g` is an integer and the
/// resulting integers are coprime.
fn content(coeffs: &[BigRational]) -> BigRational {
    let num_gcd = coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
    let den_lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    BigRational::new(num_gcd, den_lcm)
}

/// Derive and verify the sum-of-squares identity for the order-`h` sequence.
///
/// The basis shift is the smallest `k` in `1..=h` whose product
/// `u_n u_(n+k)` has a generating function `m*z / D` over the remainder's
/// denominator; `scale = 1/m`. When the partial sums have no pole at `z = 1`
/// (as for Fibonacci numbers) the constant is zero.
pub fn sum_of_squares_identity(h: usize) -> Result<IdentityReport> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&h) {
        return Err(Error::OrderOutOfRange {
            order: h,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    let s = kbonacci(h)?;
    let f = s.to_gf();
    let squares = hadamard_product(&f, &f)?.gf;
    let sums = partial_sum(&squares);
    let (constant, remainder) = match split_pole_at_one(&sums) {
        Ok(split) => split,
        Err(Error::PoleAbsent) => (BigRational::zero(), sums.clone()),
        Err(e) => return Err(e),
    };

    let (basis_shift, m, den) = find_basis(&s, &remainder)?;
    let basis_gf = RationalFunction::reduce(Polynomial::z(), den)?;
    let (global_factor, coefficients) = express_in_shift_basis(&remainder, &basis_gf)?;

    let mut report = IdentityReport {
        order: h,
        constant,
        scale: m.recip(),
        basis_shift,
        coefficients,
        global_factor,
        basis_gf,
        termwise: TermwiseCheck {
            range_checked: (1, TERMWISE_LIMIT),
            max_abs_discrepancy: BigRational::zero(),
        },
    };
    if report.rhs_gf() != sums {
        return Err(Error::Discrepancy {
            n: first_difference(&report.rhs_gf(), &sums) as i64,
            lhs: "partial-sum generating function".into(),
            rhs: report.rhs_gf().to_string(),
        });
    }
    let terms = s.terms((TERMWISE_LIMIT as usize) + basis_shift + 1);
    report.termwise = check_termwise(&terms, 1, TERMWISE_LIMIT, |n| {
        report.rhs_from_terms(&terms, n)
    })?;
    Ok(report)
}

fn find_basis(
    s: &CFiniteSequence,
    remainder: &RationalFunction,
) -> Result<(usize, BigRational, Polynomial)> {
    for k in 1..=s.order() {
        let g = shifted_product_gf(s, 0, -(k as i64))?;
        let Some(m) = monomial_coefficient(g.num()) else {
            continue;
        };
        if remainder.is_zero() || remainder.den() == g.den() {
            return Ok((k, m, g.den().clone()));
        }
    }
    Err(Error::NonMonomialBasis)
}

fn first_difference(a: &RationalFunction, b: &RationalFunction) -> usize {
    let n = a.num().coeffs().len()
        + a.den().coeffs().len()
        + b.num().coeffs().len()
        + b.den().coeffs().len();
    let (sa, sb) = (a.series_prefix(n), b.series_prefix(n));
    sa.iter().zip(&sb).position(|(x, y)| x != y).unwrap_or(n)
}

/// `u_n` from a precomputed prefix, zero at negative indices.
fn at(u: &[BigRational], n: i64) -> BigRational {
    if n < 0 {
        BigRational::zero()
    } else {
        u[n as usize].clone()
    }
}

/// Compare `Σ_{k<=n} u_k^2` against `rhs(n)` for `n_lo <= n <= n_hi`.
fn check_termwise(
    terms: &[BigRational],
    n_lo: i64,
    n_hi: i64,
    rhs: impl Fn(i64) -> BigRational,
) -> Result<TermwiseCheck> {
    let mut lhs = BigRational::zero();
    let mut worst = BigRational::zero();
    for (n, u) in terms.iter().take(n_hi.max(0) as usize + 1).enumerate() {
        lhs += u * u;
        let n = n as i64;
        if n < n_lo {
            continue;
        }
        let r = rhs(n);
        if r != lhs {
            return Err(Error::Discrepancy {
                n,
                lhs: lhs.to_string(),
                rhs: r.to_string(),
            });
        }
        let d = (&r - &lhs).abs();
        if d > worst {
            worst = d;
        }
    }
    Ok(TermwiseCheck {
        range_checked: (n_lo, n_hi),
        max_abs_discrepancy: worst,
    })
}

/// `coeff * u_(n-i) * u_(n-j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductTerm {
    pub coeff: BigRational,
    pub i: i64,
    pub j: i64,
}

/// A right-hand side `constant + Σ coeff * u_(n-i) * u_(n-j)` for the partial
/// sums of squares; the constant applies for every `n >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductIdentity {
    pub constant: BigRational,
    pub terms: Vec<ProductTerm>,
}

impl ProductIdentity {
    /// The Tetranacci evaluation
    /// `1/3 + u_n u_(n+1) - (u_(n+1) - u_(n-1))^2/3 + u_n u_(n-2)/3 + u_(n-2) u_(n-3)/3`,
    /// with the square expanded.
    pub fn schumacher() -> Self {
        let t = |coeff, i, j| ProductTerm { coeff, i, j };
        ProductIdentity {
            constant: frac(1, 3),
            terms: vec![
                t(frac(1, 1), 0, -1),
                t(frac(-1, 3), -1, -1),
                t(frac(2, 3), -1, 1),
                t(frac(-1, 3), 1, 1),
                t(frac(1, 3), 0, 2),
                t(frac(1, 3), 2, 3),
            ],
        }
    }

    pub fn rhs_term(&self, u: &CFiniteSequence, n: i64) -> BigRational {
        let terms = u.terms((n + self.max_lead() + 1).max(0) as usize);
        self.rhs_from_terms(&terms, n)
    }

    /// Largest forward offset `-i` or `-j` used by any term.
    fn max_lead(&self) -> i64 {
        self.terms
            .iter()
            .map(|t| (-t.i).max(-t.j))
            .max()
            .unwrap_or(0)
            .max(0)
    }

    fn rhs_from_terms(&self, u: &[BigRational], n: i64) -> BigRational {
        self.terms.iter().fold(self.constant.clone(), |acc, t| {
            acc + &t.coeff * at(u, n - t.i) * at(u, n - t.j)
        })
    }

    /// Generating function of the right-hand side, built from shifted products.
    pub fn rhs_gf(&self, u: &CFiniteSequence) -> Result<RationalFunction> {
        let mut acc = RationalFunction::ones().scale(&self.constant);
        for t in &self.terms {
            acc = &acc + &shifted_product_gf(u, t.i, t.j)?.scale(&t.coeff);
        }
        Ok(acc)
    }

    /// Term-wise check on `1..=n_max` followed by the generating-function check.
    pub fn verify(&self, u: &CFiniteSequence, n_max: i64) -> Result<TermwiseCheck> {
        let terms = u.terms((n_max + self.max_lead() + 1).max(0) as usize);
        let check = check_termwise(&terms, 1, n_max, |n| self.rhs_from_terms(&terms, n))?;
        let f = u.to_gf();
        let sums = partial_sum(&hadamard_product(&f, &f)?.gf);
        let rhs = self.rhs_gf(u)?;
        if rhs != sums {
            let n = first_difference(&rhs, &sums);
            return Err(Error::Discrepancy {
                n: n as i64,
                lhs: sums.series_prefix(n + 1)[n].to_string(),
                rhs: rhs.series_prefix(n + 1)[n].to_string(),
            });
        }
        Ok(check)
    }
}

/// Check the Tetranacci sum-of-squares evaluation term-wise for
/// `1 <= n <= n_max` and as an identity of generating functions.
pub fn verify_schumacher(n_max: i64) -> Result<TermwiseCheck> {
    if n_max < 1 {
        return Err(Error::InvalidRecurrence("n_max must be >= 1".into()));
    }
    ProductIdentity::schumacher().verify(&kbonacci(4)?, n_max)
}

/// Generating function of the Tetranacci evaluation's right-hand side.
pub fn schumacher_rhs_gf() -> Result<RationalFunction> {
    ProductIdentity::schumacher().rhs_gf(&kbonacci(4)?)
}

/// Whether the report's right-hand side and `rhs_gf` are the same rational function.
pub fn equivalence_check(report: &IdentityReport, rhs_gf: &RationalFunction) -> bool {
    report.rhs_gf() == *rhs_gf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c.iter().copied())
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::reduce(p(n), p(d)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    const D4: [i64; 11] = [1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1];
    const D5: [i64; 16] = [1, -2, -4, -7, -14, -28, 4, 6, 0, 4, 10, 0, -1, 0, 0, -1];

    fn partial_sum_of_squares(h: usize) -> RationalFunction {
        let f = kbonacci(h).unwrap().to_gf();
        partial_sum(&hadamard_product(&f, &f).unwrap().gf)
    }

    #[test]
    fn split_tetranacci() {
        let (c, rest) = split_pole_at_one(&partial_sum_of_squares(4)).unwrap();
        assert_eq!(c, frac(1, 3));
        let d4 = p(&D4).scale(&rat(3));
        let want = RationalFunction::reduce(p(&[0, 2, 1, -1, -1, 5, 4, 1, 1, -1, -1]), d4).unwrap();
        assert_eq!(rest, want);
    }

    #[test]
    fn split_pentanacci_constant() {
        let f = partial_sum_of_squares(5);
        let (c, rest) = split_pole_at_one(&f).unwrap();
        assert_eq!(c, frac(3, 8));
        // reconstruction
        let carrier = rf(&[0, 1], &[1, -1]);
        assert_eq!(&carrier.scale(&c) + &rest, f);
    }

    #[test]
    fn split_edge_cases() {
        let (c, rest) = split_pole_at_one(&rf(&[0, 1], &[1, -1])).unwrap();
        assert_eq!(c, rat(1));
        assert!(rest.is_zero());
        assert_eq!(
            split_pole_at_one(&rf(&[1], &[1, -2])),
            Err(Error::PoleAbsent)
        );
        assert_eq!(
            split_pole_at_one(&rf(&[0, 1], &[1, -2, 1])),
            Err(Error::MultiplePole)
        );
        assert_eq!(
            split_pole_at_one(&rf(&[0, 0, 1], &[1, -1])),
            Err(Error::Improper)
        );
        // numerator degree equal to denominator degree is accepted
        assert!(split_pole_at_one(&rf(&[0, 1, 1], &[1, 0, -1])).is_ok());
    }

    #[test]
    fn express_tetranacci() {
        let (_, rest) = split_pole_at_one(&partial_sum_of_squares(4)).unwrap();
        let basis = rf(&[0, 1], &D4);
        let (g, lambda) = express_in_shift_basis(&rest, &basis).unwrap();
        assert_eq!(g, frac(1, 3));
        assert_eq!(lambda, ints(&[2, 1, -1, -1, 5, 4, 1, 1, -1, -1]));
    }

    #[test]
    fn express_pentanacci() {
        let (_, rest) = split_pole_at_one(&partial_sum_of_squares(5)).unwrap();
        let basis = rf(&[0, 1], &D5);
        let (g, lambda) = express_in_shift_basis(&rest, &basis).unwrap();
        assert_eq!(g, frac(1, 8));
        // sign fixed by the n = 1 value: the sum is 1 and t_1 > 0
        assert_eq!(
            lambda,
            ints(&[5, 3, -1, -4, -2, 34, 30, 20, 20, 16, -6, -6, -3, -3, -3])
        );
    }

    #[test]
    fn express_errors_and_trivial() {
        let b = rf(&[0, 1], &D4);
        assert_eq!(
            express_in_shift_basis(&b, &b).unwrap(),
            (rat(1), ints(&[1]))
        );
        assert_eq!(
            express_in_shift_basis(&rf(&[0, 1], &D5), &b),
            Err(Error::DenominatorMismatch)
        );
        assert_eq!(
            express_in_shift_basis(&b, &rf(&[0, 1, 1], &D4)),
            Err(Error::NonMonomialBasis)
        );
        assert_eq!(
            express_in_shift_basis(&rf(&[1], &D4), &b),
            Err(Error::NotInBasis)
        );
        assert_eq!(
            express_in_shift_basis(&RationalFunction::zero(), &b).unwrap(),
            (rat(0), vec![])
        );
    }

    #[test]
    fn report_h4() {
        let r = sum_of_squares_identity(4).unwrap();
        assert_eq!(r.constant, frac(1, 3));
        assert_eq!(r.scale, frac(1, 2));
        assert_eq!(r.basis_shift, 2);
        assert_eq!(r.global_factor, frac(1, 3));
        assert_eq!(r.coefficients, ints(&[2, 1, -1, -1, 5, 4, 1, 1, -1, -1]));
        assert_eq!(r.termwise.range_checked, (1, 200));
        assert!(r.termwise.max_abs_discrepancy.is_zero());
        assert_eq!(r.rhs_gf(), partial_sum_of_squares(4));
    }

    #[test]
    fn report_h5() {
        let r = sum_of_squares_identity(5).unwrap();
        assert_eq!(r.constant, frac(3, 8));
        assert_eq!(r.scale, frac(1, 4));
        assert_eq!(r.basis_shift, 3);
        assert_eq!(r.global_factor, frac(1, 8));
        assert_eq!(
            r.coefficients,
            ints(&[5, 3, -1, -4, -2, 34, 30, 20, 20, 16, -6, -6, -3, -3, -3])
        );
    }

    #[test]
    fn report_h2_and_h3() {
        // Fibonacci: sum of squares is F_n F_(n+1), no pole at 1
        let r = sum_of_squares_identity(2).unwrap();
        assert!(r.constant.is_zero());
        assert_eq!(r.basis_shift, 1);
        assert_eq!(r.coefficients, ints(&[1]));
        assert_eq!(r.global_factor, rat(1));

        let r = sum_of_squares_identity(3).unwrap();
        assert_eq!(r.constant, frac(1, 4));
        assert_eq!(r.basis_shift, 2);
        assert_eq!(r.scale, frac(1, 2));
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(
            sum_of_squares_identity(1),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            sum_of_squares_identity(9),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn formula_text() {
        let r = sum_of_squares_identity(4).unwrap();
        assert_eq!(
            r.formula(),
            "sum_{k<=n} u_k^2 = 1/3 + 1/3*(2*t_n + t_(n-1) - t_(n-2) - t_(n-3) + 5*t_(n-4) \
             + 4*t_(n-5) + t_(n-6) + t_(n-7) - t_(n-8) - t_(n-9))  for n >= 1, where t_n = 1/2*u_n*u_(n+2)"
        );
    }

    #[test]
    fn schumacher_small_cases() {
        let u = kbonacci(4).unwrap();
        let id = ProductIdentity::schumacher();
        assert_eq!(id.rhs_term(&u, 1), rat(1));
        assert_eq!(id.rhs_term(&u, 4), rat(22));
        assert!(verify_schumacher(1).is_ok());
        let c = verify_schumacher(200).unwrap();
        assert_eq!(c.range_checked, (1, 200));
        assert!(c.max_abs_discrepancy.is_zero());
    }

    #[test]
    fn schumacher_sign_flip_is_caught() {
        let u = kbonacci(4).unwrap();
        let mut id = ProductIdentity::schumacher();
        id.terms[2].coeff = -id.terms[2].coeff.clone();
        match id.verify(&u, 50) {
            Err(Error::Discrepancy { n, .. }) => assert_eq!(n, 2),
            other => panic!("expected discrepancy, got {other:?}"),
        }
    }

    #[test]
    fn equivalence() {
        let r4 = sum_of_squares_identity(4).unwrap();
        let sch = schumacher_rhs_gf().unwrap();
        assert!(equivalence_check(&r4, &sch));
        assert!(equivalence_check(&r4, &r4.rhs_gf()));
        let r5 = sum_of_squares_identity(5).unwrap();
        assert!(!equivalence_check(&r4, &r5.rhs_gf()));
    }
}
