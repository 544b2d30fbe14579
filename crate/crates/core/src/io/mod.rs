//! Reading reference tables and writing comparison outputs and caches.

mod catalog;
mod rows;
mod tables;

use std::fs::File;
use std::path::{Path, PathBuf};

pub use catalog::{
    read_catalog, read_catalog_file, write_catalog, write_catalog_file, ZeroCatalog,
};
pub use rows::{
    format_sig, read_csv, read_csv_file, read_json, write_csv, write_csv_file, write_json,
    write_json_file, write_series_csv, write_series_csv_file, ComparisonRow, SeriesRow,
    COMPARISON_HEADER, SIGNIFICANT_DIGITS,
};
pub use tables::{
    parse_prime_table, parse_zero_table, read_prime_table, read_zero_table, write_zero_table,
    ZeroLayout, COMMENT_PREFIX,
};

use crate::number_theory::NumberTheoryError;

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: malformed entry `{content}`")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: index {index} breaks the contiguous numbering")]
    NonContiguousIndex { line: usize, index: usize },
    #[error("line {line} (after line {prev_line}): entries {} and {} are not strictly increasing", indices.0, indices.1)]
    NonMonotonic {
        line: usize,
        prev_line: usize,
        indices: (usize, usize),
    },
    #[error("line {line}: sampled entry {value} is not prime")]
    SampleCheckFailed { line: usize, value: u64 },
    #[error("prime table must start at 2, starts at {0}")]
    PrimeTableStart(u64),
    #[error("no data lines")]
    Empty,
    #[error("row {row} has n = {n}; rows must be numbered 1, 2, 3, …")]
    NonContiguousRows { row: usize, n: usize },
    #[error("unexpected CSV header `{0}`")]
    Header(String),
    #[error("catalog entry {entry}: {reason}")]
    CatalogInvalid { entry: usize, reason: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Table(#[from] NumberTheoryError),
}

fn open(path: &Path) -> Result<File, DataError> {
    File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => DataError::FileNotFound(path.to_owned()),
        _ => DataError::File {
            path: path.to_owned(),
            source: e,
        },
    })
}

fn create(path: &Path) -> Result<File, DataError> {
    File::create(path).map_err(|e| DataError::File {
        path: path.to_owned(),
        source: e,
    })
}
