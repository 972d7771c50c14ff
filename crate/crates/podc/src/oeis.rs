//! OEIS-style b-file ingestion.
//!
//! A b-file is ASCII text with one `index value` pair per line; `#` starts a
//! comment and blank lines are skipped. Values parse as arbitrary-precision
//! integers.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// One `index value` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

/// Parses b-file text; errors carry 1-based line numbers.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let index_str = fields.next().expect("non-empty line has a first field");
        let value_str = fields.next().ok_or_else(|| Error::BFileParse {
            line,
            reason: "expected `index value`".to_string(),
        })?;
        if fields.next().is_some() {
            return Err(Error::BFileParse {
                line,
                reason: "trailing fields after `index value`".to_string(),
            });
        }
        let index = i64::from_str(index_str).map_err(|_| Error::BFileParse {
            line,
            reason: format!("bad index {index_str:?}"),
        })?;
        let value = BigInt::from_str(value_str).map_err(|_| Error::BFileParse {
            line,
            reason: format!("bad value {value_str:?}"),
        })?;
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Reads and parses a b-file from disk.
pub fn read_bfile(path: &Path) -> Result<Vec<BFileEntry>> {
    let text = std::fs::read_to_string(path)?;
    parse_bfile(&text)
}
