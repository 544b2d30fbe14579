//! Plain-text reference tables: zeta-zero heights and primes.
//!
//! Zero tables come in two layouts, told apart by the token count of the
//! first non-comment line:
//!
//! ```text
//! # bare: one height per line (the layout of Odlyzko's published tables)
//!       14.134725142
//!       21.022039639
//! # indexed: global index, then height
//! 9871 9767.289858684
//! ```
//!
//! Prime tables hold whitespace-separated integers. Lines starting with `#`
//! are comments in both.

use std::fs;
use std::io::BufRead;
use std::path::Path;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::DataError;
use crate::number_theory::{is_prime_trial_division, PrimeTable, ZeroSource, ZetaZeroTable};

pub const COMMENT_PREFIX: char = '#';
const SAMPLE_SEED: u64 = 0x6a6f_7374;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroLayout {
    Bare,
    Indexed,
}

fn content_lines<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<(usize, String), DataError>> {
    reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|s| (i + 1, s)).map_err(DataError::from))
        .filter(|r| match r {
            Ok((_, s)) => {
                let t = s.trim();
                !t.is_empty() && !t.starts_with(COMMENT_PREFIX)
            }
            Err(_) => true,
        })
}

fn malformed(line: usize, content: &str) -> DataError {
    DataError::MalformedLine {
        line,
        content: content.trim().to_owned(),
    }
}

/// Parses a zeta-zero table from any reader.
pub fn read_zero_table<R: BufRead>(reader: R) -> Result<(ZetaZeroTable, ZeroLayout), DataError> {
    let mut layout = None;
    let mut heights: Vec<f64> = Vec::new();
    let mut first_index = 1usize;
    let mut prev_line = 0usize;
    for item in content_lines(reader) {
        let (line, text) = item?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let lay = *layout.get_or_insert(match tokens.len() {
            1 => ZeroLayout::Bare,
            2 => ZeroLayout::Indexed,
            _ => return Err(malformed(line, &text)),
        });
        let height_tok = match (lay, tokens.as_slice()) {
            (ZeroLayout::Bare, [h]) => *h,
            (ZeroLayout::Indexed, [idx, h]) => {
                let idx: usize = idx.parse().map_err(|_| malformed(line, &text))?;
                if heights.is_empty() {
                    if idx == 0 {
                        return Err(malformed(line, &text));
                    }
                    first_index = idx;
                } else if idx != first_index + heights.len() {
                    return Err(DataError::NonContiguousIndex { line, index: idx });
                }
                *h
            }
            _ => return Err(malformed(line, &text)),
        };
        let h: f64 = height_tok.parse().map_err(|_| malformed(line, &text))?;
        if !h.is_finite() || h <= 0.0 {
            return Err(malformed(line, &text));
        }
        if let Some(&last) = heights.last() {
            if !(h > last) {
                let n = first_index + heights.len();
                return Err(DataError::NonMonotonic {
                    line,
                    prev_line,
                    indices: (n - 1, n),
                });
            }
        }
        heights.push(h);
        prev_line = line;
    }
    let layout = layout.ok_or(DataError::Empty)?;
    let table = ZetaZeroTable::new(heights, first_index, ZeroSource::Ingested)?;
    Ok((table, layout))
}

pub fn parse_zero_table(path: impl AsRef<Path>) -> Result<ZetaZeroTable, DataError> {
    let file = super::open(path.as_ref())?;
    read_zero_table(std::io::BufReader::new(file)).map(|(t, _)| t)
}

/// Parses a prime table and trial-divides a 1% random sample (at least one
/// entry, fixed seed) of its entries.
pub fn read_prime_table<R: BufRead>(reader: R) -> Result<PrimeTable, DataError> {
    let mut primes: Vec<u64> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for item in content_lines(reader) {
        let (line, text) = item?;
        for tok in text.split_whitespace() {
            let p: u64 = tok.parse().map_err(|_| malformed(line, &text))?;
            if let Some(&last) = primes.last() {
                if p <= last {
                    let n = primes.len() + 1;
                    return Err(DataError::NonMonotonic {
                        line,
                        prev_line: *lines.last().unwrap_or(&line),
                        indices: (n - 1, n),
                    });
                }
            }
            primes.push(p);
            lines.push(line);
        }
    }
    if primes.is_empty() {
        return Err(DataError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let amount = primes.len().div_ceil(100);
    let mut picks: Vec<usize> = sample(&mut rng, primes.len(), amount).into_vec();
    picks.sort_unstable();
    for i in picks {
        if !is_prime_trial_division(primes[i]) {
            return Err(DataError::SampleCheckFailed {
                line: lines[i],
                value: primes[i],
            });
        }
    }
    if primes[0] != 2 {
        return Err(DataError::PrimeTableStart(primes[0]));
    }
    Ok(PrimeTable::from_sorted(primes)?)
}

pub fn parse_prime_table(path: impl AsRef<Path>) -> Result<PrimeTable, DataError> {
    let file = super::open(path.as_ref())?;
    read_prime_table(std::io::BufReader::new(file))
}

/// Writes heights in the indexed layout with 12 decimals.
pub fn write_zero_table(path: impl AsRef<Path>, table: &ZetaZeroTable) -> Result<(), DataError> {
    let mut out = String::new();
    for (i, h) in table.heights().iter().enumerate() {
        out.push_str(&format!("{} {:.12}\n", table.first_index() + i, h));
    }
    fs::write(path, out).map_err(DataError::from)
}
