//! Plain-text map files.
//!
//! ```text
//! # comment lines start with '#'; blank lines are ignored
//! qhm <m> <n>
//! <n blocks of m rows with m whitespace-separated entries each>
//! ```
//!
//! Entries are integers, `p/q` rationals or decimals. A file with only
//! integers and rationals is read exactly; a single decimal (or exponent)
//! anywhere switches the whole file to `f64`. Exact maps are written as
//! reduced `p/q` tokens, floats with 17 significant digits, so writing and
//! reading back reproduces the map bit for bit.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::map::{ExactMap, FloatMap, QuadraticMap};
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::{is_exact_token, Scalar};

/// A map read from a file, in whichever arithmetic its entries call for.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMap {
    Exact(ExactMap),
    Float(FloatMap),
}

impl AnyMap {
    pub fn domain_dim(&self) -> usize {
        match self {
            AnyMap::Exact(m) => m.domain_dim(),
            AnyMap::Float(m) => m.domain_dim(),
        }
    }

    pub fn codomain_dim(&self) -> usize {
        match self {
            AnyMap::Exact(m) => m.codomain_dim(),
            AnyMap::Float(m) => m.codomain_dim(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnyMap::Exact(_))
    }

    pub fn to_f64(&self) -> FloatMap {
        match self {
            AnyMap::Exact(m) => m.to_f64(),
            AnyMap::Float(m) => m.clone(),
        }
    }
}

impl From<ExactMap> for AnyMap {
    fn from(m: ExactMap) -> Self {
        AnyMap::Exact(m)
    }
}

impl From<FloatMap> for AnyMap {
    fn from(m: FloatMap) -> Self {
        AnyMap::Float(m)
    }
}

pub fn write_map<T: Scalar>(map: &QuadraticMap<T>) -> String {
    let m = map.domain_dim();
    let mut out = format!("qhm {} {}\n", m, map.codomain_dim());
    for (k, a) in map.components().iter().enumerate() {
        let _ = writeln!(out, "# component {}", k + 1);
        for i in 0..m {
            let row: Vec<String> = (0..m).map(|j| a[(i, j)].to_token()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn write_any(map: &AnyMap) -> String {
    match map {
        AnyMap::Exact(m) => write_map(m),
        AnyMap::Float(m) => write_map(m),
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn build<T: Scalar>(m: usize, n: usize, rows: &[Line<'_>]) -> Result<QuadraticMap<T>> {
    let mut comps = Vec::with_capacity(n);
    for block in rows.chunks(m) {
        let data = block
            .iter()
            .map(|line| {
                line.tokens
                    .iter()
                    .map(|tok| T::parse_token(tok).map_err(|e| parse_err(line.number, e.to_string())))
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let first = block[0].number;
        let matrix = Matrix::from_rows(data).map_err(|e| parse_err(first, e.to_string()))?;
        let sym = SymMatrix::new(matrix).map_err(|e| parse_err(first, e.to_string()))?;
        comps.push(sym);
    }
    QuadraticMap::new(comps).map_err(|e| parse_err(1, e.to_string()))
}

pub fn read_map(text: &str) -> Result<AnyMap> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, tokens: l.split_whitespace().collect() })
        .filter(|l| !l.tokens.is_empty() && !l.tokens[0].starts_with('#'));

    let header = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (m, n) = match header.tokens.as_slice() {
        ["qhm", m, n] => {
            let dim = |s: &str| s.parse::<usize>().ok().filter(|&v| v > 0);
            match (dim(m), dim(n)) {
                (Some(m), Some(n)) => (m, n),
                _ => return Err(parse_err(header.number, "dimensions must be positive integers")),
            }
        }
        _ => return Err(parse_err(header.number, "expected header `qhm <m> <n>`")),
    };

    let rows: Vec<Line<'_>> = lines.collect();
    if rows.len() != m * n {
        let at = rows.last().map_or(header.number, |l| l.number);
        return Err(parse_err(at, format!("expected {} matrix rows ({n} blocks of {m}), found {}", m * n, rows.len())));
    }
    if let Some(bad) = rows.iter().find(|l| l.tokens.len() != m) {
        return Err(parse_err(bad.number, format!("expected {m} entries, found {}", bad.tokens.len())));
    }

    let exact = rows.iter().all(|l| l.tokens.iter().all(|t| is_exact_token(t)));
    if exact {
        build(m, n, &rows).map(AnyMap::Exact)
    } else {
        build(m, n, &rows).map(AnyMap::Float)
    }
}
