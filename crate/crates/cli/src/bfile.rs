//! OEIS b-files: one `index value` pair per line, `#` comments and blank
//! lines ignored.

use num_bigint::BigInt;
use seqlab_core::{BigRational, CFiniteSequence};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct BFileError {
    /// One-based line number.
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// Strictly increasing indices.
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let fail = |msg: String| BFileError { line, msg };
            let mut fields = s.split_whitespace();
            let (Some(a), Some(b)) = (fields.next(), fields.next()) else {
                return Err(fail(format!("expected 'index value', found {s:?}")));
            };
            if let Some(extra) = fields.next() {
                return Err(fail(format!("unexpected trailing field {extra:?}")));
            }
            let index: i64 = a
                .parse()
                .map_err(|_| fail(format!("invalid index {a:?}")))?;
            let value: BigInt = b
                .parse()
                .map_err(|_| fail(format!("invalid value {b:?}")))?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(fail(format!(
                        "index {index} does not increase (previous {prev})"
                    )));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Index as written in the file.
    pub index: i64,
    pub file_value: BigInt,
    pub expected: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileCheck {
    /// Entries compared before stopping.
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

/// Compare each entry `(n, v)` against `u_(n + shift)`; negative sequence
/// indices contribute zeros.
pub fn check_bfile(file: &BFile, seq: &CFiniteSequence, shift: i64) -> BFileCheck {
    let last = file
        .entries
        .iter()
        .map(|&(n, _)| n + shift)
        .max()
        .unwrap_or(-1);
    let terms = if last >= 0 {
        seq.terms(last as usize + 1)
    } else {
        Vec::new()
    };
    let at = |k: i64| -> BigRational {
        if k < 0 {
            BigRational::from_integer(0.into())
        } else {
            terms[k as usize].clone()
        }
    };
    for (checked, (n, v)) in file.entries.iter().enumerate() {
        let expected = at(n + shift);
        if expected != BigRational::from_integer(v.clone()) {
            return BFileCheck {
                checked,
                mismatch: Some(Mismatch {
                    index: *n,
                    file_value: v.clone(),
                    expected,
                }),
            };
        }
    }
    BFileCheck {
        checked: file.entries.len(),
        mismatch: None,
    }
}
