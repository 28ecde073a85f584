use std::path::Path;

use num_traits::{ToPrimitive, Zero};
use seqlab_core::binet::{binet_coefficients, binet_eval};
use seqlab_core::cfinite::{kbonacci, partial_sum};
use seqlab_core::hadamard::hadamard_product;
use seqlab_core::identity::{equivalence_check, sum_of_squares_identity, ProductIdentity};
use seqlab_core::{BigRational, CFiniteSequence};
use thiserror::Error;

use crate::bfile::{check_bfile, BFile, BFileError};
use crate::expr::{parse_gf, ExprError};
use crate::output::*;

/// Rows printed by `binet <h> table`.
pub const TABLE_ROWS: u32 = 31;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] seqlab_core::Error),
    #[error("{which}: {err}")]
    Parse { which: &'static str, err: ExprError },
    #[error("{path}: {err}")]
    BFile { path: String, err: BFileError },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Argument(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn order(h: i64) -> CliResult<usize> {
    usize::try_from(h).map_err(|_| seqlab_core::Error::InvalidOrder(h).into())
}

fn sequence(h: i64) -> CliResult<CFiniteSequence> {
    Ok(kbonacci(order(h)?)?)
}

pub fn terms(h: i64, count: i64) -> CliResult<Payload> {
    let s = sequence(h)?;
    if count < 1 {
        return Err(CliError::Argument(format!(
            "count must be >= 1, got {count}"
        )));
    }
    Ok(Payload::Terms(TermsDoc {
        order: s.order(),
        terms: s.terms(count as usize).iter().map(rat_str).collect(),
    }))
}

pub fn hadamard(f: &str, g: &str) -> CliResult<Payload> {
    let pf = parse_gf(f).map_err(|err| CliError::Parse {
        which: "first argument",
        err,
    })?;
    let pg = parse_gf(g).map_err(|err| CliError::Parse {
        which: "second argument",
        err,
    })?;
    let r = hadamard_product(&pf, &pg)?;
    Ok(Payload::Hadamard(HadamardDoc {
        f: GfDoc::new(&pf),
        g: GfDoc::new(&pg),
        product: GfDoc::new(&r.gf),
        verified_to: r.verified_to,
    }))
}

pub fn sumsq(h: i64) -> CliResult<Payload> {
    let r = sum_of_squares_identity(order(h)?)?;
    Ok(Payload::Sumsq(SumsqDoc {
        order: r.order,
        constant: rat_str(&r.constant),
        scale: rat_str(&r.scale),
        basis_shift: r.basis_shift,
        coefficients: r.coefficients.iter().map(rat_str).collect(),
        global_factor: rat_str(&r.global_factor),
        basis_gf: GfDoc::new(&r.basis_gf),
        range_checked: r.termwise.range_checked,
        max_abs_discrepancy: rat_str(&r.termwise.max_abs_discrepancy),
        formula: r.formula(),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinetRequest {
    None,
    Index(u32),
    Table,
}

impl std::str::FromStr for BinetRequest {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "table" {
            return Ok(BinetRequest::Table);
        }
        s.parse()
            .map(BinetRequest::Index)
            .map_err(|_| format!("expected a non-negative index or 'table', got {s:?}"))
    }
}

pub fn binet(h: i64, req: BinetRequest) -> CliResult<Payload> {
    let s = sequence(h)?;
    let d = binet_coefficients(s.order(), &s)?;
    let ns: Vec<u32> = match req {
        BinetRequest::None => Vec::new(),
        BinetRequest::Index(n) => vec![n],
        BinetRequest::Table => (0..TABLE_ROWS).collect(),
    };
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        let exact = s.term(i64::from(n));
        let v = binet_eval(&d, n)?.re;
        let e = exact.to_f64().unwrap_or(f64::INFINITY);
        rows.push(BinetRow {
            n,
            exact: rat_str(&exact),
            binet: v,
            abs_error: (v - e).abs(),
        });
    }
    Ok(Payload::Binet(BinetDoc {
        order: d.order,
        roots: d.roots.iter().map(|&z| z.into()).collect(),
        coefficients: d.coefficients.iter().map(|&z| z.into()).collect(),
        rows,
    }))
}

pub fn check_bfile_path(path: &Path, h: i64, shift: i64) -> CliResult<Payload> {
    let shown = path.display().to_string();
    let s = sequence(h)?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        msg: e.to_string(),
    })?;
    let file = BFile::parse(&text).map_err(|err| CliError::BFile {
        path: shown.clone(),
        err,
    })?;
    let r = check_bfile(&file, &s, shift);
    Ok(Payload::CheckBfile(BFileDoc {
        path: shown,
        order: s.order(),
        shift,
        entries: file.entries.len(),
        checked: r.checked,
        mismatch: r.mismatch.map(|m| MismatchDoc {
            index: m.index,
            file_value: m.file_value.to_string(),
            expected: rat_str(&m.expected),
        }),
    }))
}

pub fn verify_schumacher(n_max: i64) -> CliResult<Payload> {
    verify_product_identity(n_max, &ProductIdentity::schumacher())
}

/// Term-wise, generating-function and equivalence checks of an order-4
/// product identity for the running sums of squares.
pub fn verify_product_identity(n_max: i64, id: &ProductIdentity) -> CliResult<Payload> {
    if n_max < 1 {
        return Err(CliError::Argument(format!(
            "n_max must be >= 1, got {n_max}"
        )));
    }
    let u = kbonacci(4)?;
    let mut checks = Vec::new();

    let terms = u.terms(n_max as usize + 1);
    let mut lhs = BigRational::zero();
    let mut witness = None;
    for (n, t) in terms.iter().enumerate() {
        lhs += t * t;
        if n == 0 {
            continue;
        }
        let rhs = id.rhs_term(&u, n as i64);
        if rhs != lhs {
            witness = Some((n, lhs.clone(), rhs));
            break;
        }
    }
    checks.push(CheckLine {
        name: "term-wise".into(),
        pass: witness.is_none(),
        detail: match witness {
            None => format!("n = 1..{n_max}, zero discrepancy"),
            Some((n, l, r)) => format!("first discrepancy at n = {n}: lhs {l}, rhs {r}"),
        },
    });

    let f = u.to_gf();
    let sums = partial_sum(&hadamard_product(&f, &f)?.gf);
    let rhs_gf = id.rhs_gf(&u)?;
    checks.push(CheckLine {
        name: "generating function".into(),
        pass: rhs_gf == sums,
        detail: format!("rhs {rhs_gf}"),
    });

    let report = sum_of_squares_identity(4)?;
    checks.push(CheckLine {
        name: "equivalence with t_n form".into(),
        pass: equivalence_check(&report, &rhs_gf),
        detail: report.formula(),
    });

    Ok(Payload::VerifySchumacher(VerifyDoc { n_max, checks }))
}
