//! Rendered command results.
//!
//! JSON encodes exact rationals as `"p/q"` strings (integers without the
//! denominator), polynomials as ascending coefficient arrays and complex
//! numbers as `{"re", "im"}` objects. Text output prints floats with 12
//! decimals.

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use seqlab_core::{BigRational, Polynomial, RationalFunction};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub const TEXT_DIGITS: usize = 12;

pub fn rat_str(q: &BigRational) -> String {
    q.to_string()
}

pub fn parse_rat(s: &str) -> Option<BigRational> {
    BigRational::from_str(s).ok()
}

pub fn poly_strs(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rat_str).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfDoc {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl GfDoc {
    pub fn new(f: &RationalFunction) -> Self {
        GfDoc {
            num: poly_strs(f.num()),
            den: poly_strs(f.den()),
        }
    }

    /// Rebuild the rational function; `None` on malformed entries.
    pub fn to_gf(&self) -> Option<RationalFunction> {
        let poly = |v: &[String]| -> Option<Polynomial> {
            v.iter()
                .map(|s| parse_rat(s))
                .collect::<Option<Vec<_>>>()
                .map(Polynomial::new)
        };
        RationalFunction::reduce(poly(&self.num)?, poly(&self.den)?).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexDoc {
    fn from(z: Complex64) -> Self {
        ComplexDoc { re: z.re, im: z.im }
    }
}

impl From<ComplexDoc> for Complex64 {
    fn from(z: ComplexDoc) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermsDoc {
    pub order: usize,
    pub terms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardDoc {
    pub f: GfDoc,
    pub g: GfDoc,
    pub product: GfDoc,
    pub verified_to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsqDoc {
    pub order: usize,
    pub constant: String,
    pub scale: String,
    pub basis_shift: usize,
    pub coefficients: Vec<String>,
    pub global_factor: String,
    pub basis_gf: GfDoc,
    pub range_checked: (i64, i64),
    pub max_abs_discrepancy: String,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinetRow {
    pub n: u32,
    pub exact: String,
    pub binet: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinetDoc {
    pub order: usize,
    pub roots: Vec<ComplexDoc>,
    pub coefficients: Vec<ComplexDoc>,
    pub rows: Vec<BinetRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub index: i64,
    pub file_value: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFileDoc {
    pub path: String,
    pub order: usize,
    pub shift: i64,
    pub entries: usize,
    pub checked: usize,
    pub mismatch: Option<MismatchDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub n_max: i64,
    pub checks: Vec<CheckLine>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Payload {
    Terms(TermsDoc),
    Hadamard(HadamardDoc),
    Sumsq(SumsqDoc),
    Binet(BinetDoc),
    CheckBfile(BFileDoc),
    VerifySchumacher(VerifyDoc),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub format: Format,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(format: Format, payload: Payload) -> Self {
        OutputDocument { format, payload }
    }

    /// False when a verification inside the payload failed.
    pub fn success(&self) -> bool {
        match &self.payload {
            Payload::CheckBfile(d) => d.mismatch.is_none(),
            Payload::VerifySchumacher(d) => d.checks.iter().all(|c| c.pass),
            _ => true,
        }
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.payload).expect("serializable payload");
                s.push('\n');
                s
            }
            Format::Text => render_text(&self.payload),
        }
    }

    pub fn from_json(s: &str) -> serde_json::Result<Payload> {
        serde_json::from_str(s)
    }
}

/// `x` with 12 digits after the decimal point; values that round to zero
/// print without a sign.
pub fn fmt_fixed(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.TEXT_DIGITS$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// Error magnitudes in scientific notation.
pub fn fmt_error(x: f64) -> String {
    format!("{x:.3e}")
}

pub fn fmt_complex(z: ComplexDoc) -> String {
    let im = fmt_fixed(z.im);
    match im.strip_prefix('-') {
        Some(abs) => format!("{} - {abs}i", fmt_fixed(z.re)),
        None => format!("{} + {im}i", fmt_fixed(z.re)),
    }
}

fn gf_text(d: &GfDoc) -> String {
    d.to_gf()
        .map_or_else(|| format!("{d:?}"), |f| f.to_string())
}

fn render_text(p: &Payload) -> String {
    let mut out = String::new();
    let o = &mut out;
    match p {
        Payload::Terms(d) => {
            let _ = writeln!(o, "{}", d.terms.join(" "));
        }
        Payload::Hadamard(d) => {
            let _ = writeln!(o, "{}", gf_text(&d.product));
            let _ = writeln!(
                o,
                "checked against pointwise products on {} terms",
                d.verified_to
            );
        }
        Payload::Sumsq(d) => {
            let rows = [
                ("order", d.order.to_string()),
                ("constant", d.constant.clone()),
                ("scale", d.scale.clone()),
                ("basis_shift", d.basis_shift.to_string()),
                ("global_factor", d.global_factor.clone()),
                ("coefficients", d.coefficients.join(" ")),
                ("basis_gf", gf_text(&d.basis_gf)),
                (
                    "termwise",
                    format!(
                        "n = {}..{}, max |discrepancy| {}",
                        d.range_checked.0, d.range_checked.1, d.max_abs_discrepancy
                    ),
                ),
            ];
            for (k, v) in rows {
                let _ = writeln!(o, "{k:<14} {v}");
            }
            let _ = writeln!(o, "{}", d.formula);
        }
        Payload::Binet(d) => {
            let _ = writeln!(o, "order {}: u_n = sum_j c_j r_j^(-n)", d.order);
            for (j, (r, c)) in d.roots.iter().zip(&d.coefficients).enumerate() {
                let _ = writeln!(
                    o,
                    "r_{j:<2} = {:<40} c_{j:<2} = {}",
                    fmt_complex(*r),
                    fmt_complex(*c)
                );
            }
            if !d.rows.is_empty() {
                let _ = writeln!(
                    o,
                    "{:>4}  {:>24}  {:>24}  {:>20}",
                    "n", "exact", "binet", "|error|"
                );
                for r in &d.rows {
                    let _ = writeln!(
                        o,
                        "{:>4}  {:>24}  {:>24}  {:>20}",
                        r.n,
                        r.exact,
                        fmt_fixed(r.binet),
                        fmt_error(r.abs_error)
                    );
                }
            }
        }
        Payload::CheckBfile(d) => match &d.mismatch {
            None => {
                let _ = writeln!(
                    o,
                    "agreement: {} entries of {} match order-{} terms (shift {})",
                    d.checked, d.path, d.order, d.shift
                );
            }
            Some(m) => {
                let _ = writeln!(
                    o,
                    "mismatch at index {}: file has {}, expected {} ({} entries matched before it)",
                    m.index, m.file_value, m.expected, d.checked
                );
            }
        },
        Payload::VerifySchumacher(d) => {
            for c in &d.checks {
                let _ = writeln!(
                    o,
                    "{} {}: {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
        }
    }
    out
}
