//! Text formats: set literals such as `{0, 1, 2, 4, 15}` and witness files
//! holding one set per line.

use std::io::{self, Write};

use thiserror::Error;

use crate::gf2core::{mask, GF2Vector, Gf2Error, PointSet, MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("dimension {0} is outside 1..={MAX_DIM}")]
    DimensionOutOfRange(u32),
    #[error("`{token}` is not a non-negative integer")]
    InvalidToken { token: String },
    #[error("`{token}` does not fit in dimension {dim} (values must be below {})", 1u64 << dim)]
    ValueOutOfRange { token: String, dim: u32 },
    #[error("`{token}` appears more than once")]
    Duplicate { token: String },
    #[error("unbalanced braces in `{0}`")]
    UnbalancedBraces(String),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

/// Parses decimal integers separated by commas and/or whitespace, with
/// optional surrounding braces.
pub fn parse_set_literal(dim: u32, text: &str) -> Result<PointSet, ParseError> {
    if dim == 0 || dim > MAX_DIM {
        return Err(ParseError::DimensionOutOfRange(dim));
    }
    let trimmed = text.trim();
    let body = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => trimmed,
        _ => return Err(ParseError::UnbalancedBraces(trimmed.to_string())),
    };
    let mut values = Vec::new();
    let mut tokens = Vec::new();
    for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        if !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::InvalidToken {
                token: token.to_string(),
            });
        }
        let value = token
            .parse::<u32>()
            .ok()
            .filter(|&v| v <= mask(dim))
            .ok_or_else(|| ParseError::ValueOutOfRange {
                token: token.to_string(),
                dim,
            })?;
        values.push(value);
        tokens.push(token);
    }
    PointSet::new(dim, values.iter().copied()).map_err(|e| match e {
        Gf2Error::DuplicateElement(v) => {
            let token = tokens[values
                .iter()
                .position(|&x| x == v)
                .expect("value was parsed")];
            ParseError::Duplicate {
                token: token.to_string(),
            }
        }
        other => unreachable!("values were range-checked: {other}"),
    })
}

/// Parses a witness file: every non-blank line is one set literal.
pub fn parse_witness_file(dim: u32, text: &str) -> Result<Vec<PointSet>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            parse_set_literal(dim, line).map_err(|e| ParseError::Line {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

/// The witness-file line for a set: sorted decimals joined by commas.
pub fn format_set(m: &PointSet) -> String {
    m.to_string()
}

/// The elements as 0/1 strings, least significant coordinate first.
pub fn format_set_bits(m: &PointSet) -> String {
    m.vectors()
        .map(|v: GF2Vector| v.to_bit_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_witness<W: Write>(out: &mut W, m: &PointSet) -> io::Result<()> {
    writeln!(out, "{}", format_set(m))
}
