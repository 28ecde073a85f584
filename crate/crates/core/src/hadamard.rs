//! Coefficientwise (Hadamard) products of rational generating functions.
//!
//! For proper `f = N1/D1` and `g = N2/D2` the sequences are `x1^T C1^n y1` and
//! `x2^T C2^n y2` for the companion matrices `Ci`, so the product sequence is
//! `(x1⊗x2)^T (C1⊗C2)^n (y1⊗y2)`. Its generating function has denominator
//! `det(I - z (C1⊗C2))`, the reversal of the characteristic polynomial of the
//! Kronecker product, and a numerator of degree below `deg D1 * deg D2`.

use crate::cfinite::{shift_gf, CFiniteSequence};
use crate::error::{Error, Result};
use crate::exactalg::{BigRational, Polynomial, RationalFunction, RationalMatrix};

/// Extra prefix terms checked beyond `deg num + deg den + 1`.
const VERIFY_MARGIN: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct HadamardResult {
    pub gf: RationalFunction,
    /// Number of leading coefficients checked against pointwise products.
    pub verified_to: usize,
    /// Denominator produced by the Kronecker construction before cancellation.
    pub candidate_den: Polynomial,
}

/// Companion matrix of `x^d - c_1 x^(d-1) - ... - c_d` for
/// `den = 1 - c_1 z - ... - c_d z^d`.
///
/// Ones on the superdiagonal, last row `c_d, ..., c_1`, so the matrix maps
/// `(a_n, ..., a_(n+d-1))` to `(a_(n+1), ..., a_(n+d))`.
pub fn companion(den: &Polynomial) -> Result<RationalMatrix> {
    let d = match den.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantDenominator),
    };
    if den.coeff(0) != BigRational::from_integer(1.into()) {
        return Err(Error::InvalidRecurrence(
            "denominator must satisfy den(0) = 1".into(),
        ));
    }
    let mut m = RationalMatrix::zeros(d, d);
    for i in 0..d - 1 {
        m.set(i, i + 1, BigRational::from_integer(1.into()));
    }
    for j in 0..d {
        // entry (d-1, j) multiplies a_(n+j) and carries c_(d-j)
        m.set(d - 1, j, -den.coeff(d - j));
    }
    Ok(m)
}

/// Generating function of `n -> [z^n]f * [z^n]g`.
pub fn hadamard_product(f: &RationalFunction, g: &RationalFunction) -> Result<HadamardResult> {
    let (pf, ff) = f.split_polynomial_part();
    let (pg, gg) = g.split_polynomial_part();

    let (core, candidate_den) = proper_product(&ff, &gg)?;

    // (pf + F) ⊙ (pg + G) = pf ⊙ g + F ⊙ pg + F ⊙ G
    let poly_part = {
        let gs = g.series_prefix(pf.coeffs().len());
        let from_pf = Polynomial::new(pf.coeffs().iter().zip(&gs).map(|(a, b)| a * b).collect());
        let fs = ff.series_prefix(pg.coeffs().len());
        let from_pg = Polynomial::new(pg.coeffs().iter().zip(&fs).map(|(a, b)| a * b).collect());
        &from_pf + &from_pg
    };
    let gf = &core + &RationalFunction::from(poly_part);

    let verified_to =
        gf.num().degree().unwrap_or(0) + gf.den().degree().unwrap_or(0) + 1 + VERIFY_MARGIN;
    let lhs = gf.series_prefix(verified_to);
    let fs = f.series_prefix(verified_to);
    let gs = g.series_prefix(verified_to);
    for (n, ((h, a), b)) in lhs.iter().zip(&fs).zip(&gs).enumerate() {
        if *h != a * b {
            return Err(Error::HadamardMismatch { n });
        }
    }

    Ok(HadamardResult {
        gf,
        verified_to,
        candidate_den,
    })
}

fn proper_product(
    f: &RationalFunction,
    g: &RationalFunction,
) -> Result<(RationalFunction, Polynomial)> {
    if f.is_zero() || g.is_zero() {
        return Ok((RationalFunction::zero(), Polynomial::one()));
    }
    let kron = companion(f.den())?.kronecker(&companion(g.den())?);
    let d = kron.rows();
    let den = kron.charpoly()?.reversal(d);

    let fs = f.series_prefix(d);
    let gs = g.series_prefix(d);
    let head = Polynomial::new(fs.iter().zip(&gs).map(|(a, b)| a * b).collect());
    let num = (&head * &den).truncate(d);
    Ok((RationalFunction::reduce(num, den.clone())?, den))
}

/// Generating function of `n -> u_(n-i) * u_(n-j)` with `u` zero at negative indices.
pub fn shifted_product_gf(s: &CFiniteSequence, i: i64, j: i64) -> Result<RationalFunction> {
    let f = s.to_gf();
    Ok(hadamard_product(&shift_gf(&f, i), &shift_gf(&f, j))?.gf)
}
