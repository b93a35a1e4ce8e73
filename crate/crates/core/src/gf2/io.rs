//! Code files.
//!
//! The text format holds one generator row per line as a string of `0` and
//! `1` characters. Everything after a `#` is a comment; blank lines are
//! skipped. The JSON form is `{"n": .., "k": .., "rows": ["0101..", ..]}`
//! with the canonical generator rows.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{BitVector, CodeError, LinearCode};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Row { line: usize, source: CodeError },
    #[error("line {line}: row has {found} bits, expected {expected}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no generator rows found")]
    Empty,
    #[error("invalid JSON code: {0}")]
    Json(#[from] serde_json::Error),
    #[error("JSON code: {0}")]
    JsonContent(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Parses the text format. The rows need not be independent.
pub fn parse_code(text: &str) -> Result<LinearCode, ParseError> {
    let mut rows: Vec<BitVector> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let row = BitVector::parse(body).map_err(|source| ParseError::Row { line, source })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError::RowLength {
                    line,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    let n = rows.first().ok_or(ParseError::Empty)?.len();
    Ok(LinearCode::new(n, rows).expect("row lengths checked"))
}

pub fn read_code(path: impl AsRef<Path>) -> Result<LinearCode, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if text.trim_start().starts_with('{') {
        from_json(&text)
    } else {
        parse_code(&text)
    }
}

/// Canonical generator rows in the text format, preceded by a comment line
/// when `comment` is given.
#[must_use]
pub fn format_code(code: &LinearCode, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    for row in code.generators() {
        let _ = writeln!(out, "{row}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<String>,
}

impl From<&LinearCode> for CodeJson {
    fn from(code: &LinearCode) -> Self {
        Self {
            n: code.length(),
            k: code.dimension(),
            rows: code.generators().iter().map(ToString::to_string).collect(),
        }
    }
}

#[must_use]
pub fn to_json(code: &LinearCode) -> String {
    serde_json::to_string(&CodeJson::from(code)).expect("serializable")
}

pub fn from_json(text: &str) -> Result<LinearCode, ParseError> {
    let parsed: CodeJson = serde_json::from_str(text)?;
    let mut rows = Vec::with_capacity(parsed.rows.len());
    for (i, r) in parsed.rows.iter().enumerate() {
        let row = BitVector::parse(r)
            .map_err(|e| ParseError::JsonContent(format!("row {}: {e}", i + 1)))?;
        if row.len() != parsed.n {
            return Err(ParseError::JsonContent(format!(
                "row {} has {} bits, expected n = {}",
                i + 1,
                row.len(),
                parsed.n
            )));
        }
        rows.push(row);
    }
    let code = LinearCode::new(parsed.n, rows).expect("row lengths checked");
    if code.dimension() != parsed.k {
        return Err(ParseError::JsonContent(format!(
            "rows have rank {}, but k = {}",
            code.dimension(),
            parsed.k
        )));
    }
    Ok(code)
}
