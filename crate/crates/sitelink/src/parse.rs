//! FASTA and raw (one row per line) alignment readers.

use sitelink_core::{Alphabet, System};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Fasta,
    Raw,
}

impl Format {
    /// FASTA when the first non-blank line is a `>` header, raw otherwise.
    pub fn sniff(bytes: &[u8]) -> Format {
        let first = bytes
            .split(|&b| b == b'\n')
            .map(|l| l.trim_ascii())
            .find(|l| !l.is_empty());
        match first {
            Some(l) if l.starts_with(b">") => Format::Fasta,
            _ => Format::Raw,
        }
    }
}

fn rows_fasta(bytes: &[u8]) -> Result<Vec<Vec<u8>>> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (n, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = line.trim_ascii();
        if line.is_empty() {
            continue;
        }
        if line.starts_with(b">") {
            rows.push(Vec::new());
            continue;
        }
        let Some(row) = rows.last_mut() else {
            return Err(Error::MissingHeader { line: n + 1 });
        };
        row.extend(
            line.iter()
                .filter(|b| !b.is_ascii_whitespace())
                .map(u8::to_ascii_uppercase),
        );
    }
    Ok(rows)
}

fn rows_raw(bytes: &[u8]) -> Vec<Vec<u8>> {
    bytes
        .split(|&b| b == b'\n')
        .map(|l| l.trim_ascii())
        .filter(|l| !l.is_empty())
        .map(|l| l.to_ascii_uppercase())
        .collect()
}

/// Parses an alignment. Symbols are upper-cased before lookup. With no
/// declared alphabet, the sorted set of observed symbols is used.
pub fn parse_input(bytes: &[u8], format: Format, alphabet: Option<&Alphabet>) -> Result<System> {
    let rows = match format {
        Format::Fasta => rows_fasta(bytes)?,
        Format::Raw => rows_raw(bytes),
    };
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = rows[0].len();
    if let Some((h, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::UnequalLength {
            label: h + 1,
            len: r.len(),
            expected: n,
        });
    }
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => Alphabet::infer(rows.iter().map(Vec::as_slice))?,
    };
    let mut codes = Vec::with_capacity(rows.len());
    for (h, row) in rows.iter().enumerate() {
        let coded = row
            .iter()
            .enumerate()
            .map(|(c, &b)| {
                alphabet.code(b).ok_or_else(|| Error::UnknownSymbol {
                    label: h + 1,
                    column: c + 1,
                    symbol: b as char,
                    alphabet: String::from_utf8_lossy(alphabet.symbols()).into_owned(),
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        codes.push(coded);
    }
    Ok(System::from_rows(alphabet, &codes)?)
}

/// Upper-cases a declared alphabet the same way input symbols are.
pub fn declared_alphabet(symbols: &str) -> Result<Alphabet> {
    Ok(Alphabet::new(symbols.to_ascii_uppercase().as_bytes())?)
}
