//! Plain-text facet files.
//!
//! ```text
//! n=4 mode=sorted
//! # the interval [12,24]
//! 1 2
//! 1 3
//! ```
//!
//! One facet per line as whitespace-separated positive integers; `#` starts a
//! comment. `mode=sorted` reads every line as a subset, `mode=tuple` keeps
//! the order of entries. Line order is kept, so the same file serves as a
//! complex or as a sequence.

use std::fs;
use std::io::Read;
use std::path::Path;

use thiserror::Error;

use crate::error::Error;
use crate::types::{Facet, FacetSequence, FlagTuple, KSubset, PureComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {source}")]
    Line { line: usize, source: Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `n=<int> mode=<sorted|tuple>`")]
    MissingHeader,
    #[error("empty complex")]
    Empty,
    #[error("expected {expected} input, found {found}")]
    WrongMode { expected: Mode, found: Mode },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sorted,
    Tuple,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Sorted => "sorted",
            Mode::Tuple => "tuple",
        })
    }
}

/// Parsed file contents, lines in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Subsets(FacetSequence<KSubset>),
    Tuples(FacetSequence<FlagTuple>),
}

impl Parsed {
    pub fn mode(&self) -> Mode {
        match self {
            Parsed::Subsets(_) => Mode::Sorted,
            Parsed::Tuples(_) => Mode::Tuple,
        }
    }

    pub fn subsets(self) -> Result<FacetSequence<KSubset>, FormatError> {
        match self {
            Parsed::Subsets(s) => Ok(s),
            Parsed::Tuples(_) => Err(FormatError::WrongMode {
                expected: Mode::Sorted,
                found: Mode::Tuple,
            }),
        }
    }

    pub fn tuples(self) -> Result<FacetSequence<FlagTuple>, FormatError> {
        match self {
            Parsed::Tuples(s) => Ok(s),
            Parsed::Subsets(_) => Err(FormatError::WrongMode {
                expected: Mode::Tuple,
                found: Mode::Sorted,
            }),
        }
    }
}

/// A facet type with a line encoding.
pub trait LineFacet: Facet {
    const MODE: Mode;

    fn from_line(n: usize, values: &[usize]) -> crate::Result<Self>;

    fn to_line(&self) -> String;
}

impl LineFacet for KSubset {
    const MODE: Mode = Mode::Sorted;

    fn from_line(n: usize, values: &[usize]) -> crate::Result<Self> {
        KSubset::new(n, values)
    }

    fn to_line(&self) -> String {
        self.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl LineFacet for FlagTuple {
    const MODE: Mode = Mode::Tuple;

    fn from_line(n: usize, values: &[usize]) -> crate::Result<Self> {
        FlagTuple::new(n, values)
    }

    fn to_line(&self) -> String {
        self.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_header(line: usize, text: &str) -> Result<(usize, Mode), FormatError> {
    let mut n = None;
    let mut mode = None;
    for field in text.split_whitespace() {
        let syntax = |message: String| FormatError::Syntax { line, message };
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| syntax(format!("malformed header field `{field}`")))?;
        match key {
            "n" => {
                n = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| syntax(format!("bad universe size `{value}`")))?,
                )
            }
            "mode" => {
                mode = Some(match value {
                    "sorted" => Mode::Sorted,
                    "tuple" => Mode::Tuple,
                    _ => return Err(syntax(format!("unknown mode `{value}`"))),
                })
            }
            _ => return Err(syntax(format!("unknown header key `{key}`"))),
        }
    }
    match (n, mode) {
        (Some(n), Some(mode)) => Ok((n, mode)),
        _ => Err(FormatError::Syntax {
            line,
            message: "header needs both n= and mode=".into(),
        }),
    }
}

fn parse_facets<F: LineFacet>(
    n: usize,
    lines: &[(usize, &str)],
) -> Result<FacetSequence<F>, FormatError> {
    let mut items: Vec<F> = Vec::with_capacity(lines.len());
    for &(line, text) in lines {
        let values = text
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FormatError::Syntax {
                line,
                message: format!("`{text}` is not a list of positive integers"),
            })?;
        let facet =
            F::from_line(n, &values).map_err(|source| FormatError::Line { line, source })?;
        if let Some(first) = items.first() {
            if facet.rank() != first.rank() {
                let source = Error::RaggedFacets {
                    facet: facet.to_string(),
                    expected: first.rank(),
                    found: facet.rank(),
                };
                return Err(FormatError::Line { line, source });
            }
        }
        if items.contains(&facet) {
            return Err(FormatError::Line {
                line,
                source: Error::DuplicateFacet(facet.to_string()),
            });
        }
        items.push(facet);
    }
    FacetSequence::new(items).map_err(|_| FormatError::Empty)
}

/// Parses a facet file. Errors carry 1-based line numbers.
pub fn parse_input(text: &str) -> Result<Parsed, FormatError> {
    let mut header = None;
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line, content)?);
        } else {
            body.push((line, content));
        }
    }
    let (n, mode) = header.ok_or(if text.trim().is_empty() {
        FormatError::Empty
    } else {
        FormatError::MissingHeader
    })?;
    if body.is_empty() {
        return Err(FormatError::Empty);
    }
    match mode {
        Mode::Sorted => parse_facets(n, &body).map(Parsed::Subsets),
        Mode::Tuple => parse_facets(n, &body).map(Parsed::Tuples),
    }
}

/// Reads a facet file; `-` reads standard input.
pub fn read_input(path: &Path) -> Result<Parsed, FormatError> {
    let io = |e: std::io::Error| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        fs::read_to_string(path).map_err(io)?
    };
    parse_input(&text)
}

fn serialize_items<F: LineFacet>(items: &[F]) -> String {
    let n = items.first().map_or(0, Facet::universe);
    let mut out = format!("n={n} mode={}\n", F::MODE);
    for f in items {
        out.push_str(&f.to_line());
        out.push('\n');
    }
    out
}

/// Serializes a sequence, keeping its order.
pub fn serialize_sequence<F: LineFacet>(c: &FacetSequence<F>) -> String {
    serialize_items(c.items())
}

/// Serializes a complex in canonical (sorted) facet order.
pub fn serialize_complex<F: LineFacet>(x: &PureComplex<F>) -> String {
    serialize_items(x.facets())
}
