//! Comparison rows joining Jost-zero estimates with ground truth, and their
//! CSV / JSON forms.
//!
//! CSV numbers carry 12 significant digits in the shortest `%g`-like form,
//! absent values are empty fields, and lines end in LF.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::DataError;
use crate::jost::JostZero;
use crate::spectral::ResonanceObservables;

pub const COMPARISON_HEADER: [&str; 12] = [
    "n", "re_beta", "im_beta", "residual", "E", "G", "t_hat", "p_hat", "t_true", "p_true",
    "ratio_t", "ratio_p",
];

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub re_beta: f64,
    pub im_beta: f64,
    pub residual: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "G")]
    pub width: f64,
    pub t_hat: f64,
    pub p_hat: f64,
    pub t_true: Option<f64>,
    pub p_true: Option<f64>,
    pub ratio_t: Option<f64>,
    pub ratio_p: Option<f64>,
}

impl ComparisonRow {
    /// Row for one zero; ratios are `truth / estimate`.
    pub fn new(
        zero: &JostZero<f64>,
        obs: &ResonanceObservables<f64>,
        t_true: Option<f64>,
        p_true: Option<f64>,
    ) -> Self {
        Self {
            n: zero.n,
            re_beta: zero.beta.re,
            im_beta: zero.beta.im,
            residual: zero.residual,
            energy: obs.energy,
            width: obs.width,
            t_hat: obs.t_hat,
            p_hat: obs.p_hat,
            t_true,
            p_true,
            ratio_t: t_true.map(|t| t / obs.t_hat),
            ratio_p: p_true.map(|p| p / obs.p_hat),
        }
    }

    fn fields(&self) -> [String; 12] {
        [
            self.n.to_string(),
            format_sig(self.re_beta),
            format_sig(self.im_beta),
            format_sig(self.residual),
            format_sig(self.energy),
            format_sig(self.width),
            format_sig(self.t_hat),
            format_sig(self.p_hat),
            format_opt(self.t_true),
            format_opt(self.p_true),
            format_opt(self.ratio_t),
            format_opt(self.ratio_p),
        ]
    }
}

/// `x` with 12 significant digits: fixed notation for decimal exponents in
/// `[-5, 12)`, scientific otherwise, trailing zeros removed.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_owned()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

fn check_contiguous(ns: impl Iterator<Item = usize>) -> Result<(), DataError> {
    for (i, n) in ns.enumerate() {
        if n != i + 1 {
            return Err(DataError::NonContiguousRows { row: i + 1, n });
        }
    }
    Ok(())
}

pub fn write_csv<W: Write>(rows: &[ComparisonRow], out: W) -> Result<(), DataError> {
    check_contiguous(rows.iter().map(|r| r.n))?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(COMPARISON_HEADER)?;
    for r in rows {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(rows: &[ComparisonRow], path: impl AsRef<Path>) -> Result<(), DataError> {
    let file = super::create(path.as_ref())?;
    write_csv(rows, std::io::BufWriter::new(file))
}

fn parse_field(record: &csv::StringRecord, idx: usize, line: usize) -> Result<Option<f64>, DataError> {
    let raw = record.get(idx).unwrap_or("");
    if raw.is_empty() {
        return Ok(None);
    }
    raw.parse::<f64>().map(Some).map_err(|_| DataError::MalformedLine {
        line,
        content: raw.to_owned(),
    })
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ComparisonRow>, DataError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(COMPARISON_HEADER.iter().copied()) {
        return Err(DataError::Header(header.iter().collect::<Vec<_>>().join(",")));
    }
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        let required = |idx: usize| {
            parse_field(&rec, idx, line)?.ok_or_else(|| DataError::MalformedLine {
                line,
                content: format!("missing {}", COMPARISON_HEADER[idx]),
            })
        };
        let n = rec
            .get(0)
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| DataError::MalformedLine {
                line,
                content: rec.get(0).unwrap_or("").to_owned(),
            })?;
        rows.push(ComparisonRow {
            n,
            re_beta: required(1)?,
            im_beta: required(2)?,
            residual: required(3)?,
            energy: required(4)?,
            width: required(5)?,
            t_hat: required(6)?,
            p_hat: required(7)?,
            t_true: parse_field(&rec, 8, line)?,
            p_true: parse_field(&rec, 9, line)?,
            ratio_t: parse_field(&rec, 10, line)?,
            ratio_p: parse_field(&rec, 11, line)?,
        });
    }
    check_contiguous(rows.iter().map(|r| r.n))?;
    Ok(rows)
}

pub fn read_csv_file(path: impl AsRef<Path>) -> Result<Vec<ComparisonRow>, DataError> {
    read_csv(super::open(path.as_ref())?)
}

pub fn write_json<W: Write>(rows: &[ComparisonRow], out: W) -> Result<(), DataError> {
    check_contiguous(rows.iter().map(|r| r.n))?;
    serde_json::to_writer_pretty(out, rows)?;
    Ok(())
}

pub fn write_json_file(rows: &[ComparisonRow], path: impl AsRef<Path>) -> Result<(), DataError> {
    let file = super::create(path.as_ref())?;
    write_json(rows, std::io::BufWriter::new(file))
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<ComparisonRow>, DataError> {
    let rows: Vec<ComparisonRow> = serde_json::from_reader(input)?;
    check_contiguous(rows.iter().map(|r| r.n))?;
    Ok(rows)
}

/// One point of a figure series: estimate, asymptotic curve and ground truth.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub n: usize,
    pub estimate: f64,
    pub asymptotic: Option<f64>,
    pub truth: Option<f64>,
}

/// Writes a three-series table under `header` (`n` followed by three names).
pub fn write_series_csv<W: Write>(
    rows: &[SeriesRow],
    header: [&str; 4],
    out: W,
) -> Result<(), DataError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            format_sig(r.estimate),
            format_opt(r.asymptotic),
            format_opt(r.truth),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_series_csv_file(
    rows: &[SeriesRow],
    header: [&str; 4],
    path: impl AsRef<Path>,
) -> Result<(), DataError> {
    let file = super::create(path.as_ref())?;
    write_series_csv(rows, header, std::io::BufWriter::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn row(n: usize) -> ComparisonRow {
        ComparisonRow {
            n,
            re_beta: 2.956_172_024_845_801_7,
            im_beta: -1.352_258_239_910_774,
            residual: 3.2e-17,
            energy: 6.910_216_847_201,
            width: 15.990_051_112_33,
            t_hat: 5.430_760_134_588_279,
            p_hat: 1.272_446_309_875_226_3,
            t_true: Some(14.134_725_141_734_693),
            p_true: Some(2.0),
            ratio_t: Some(2.602_714_390_1),
            ratio_p: None,
        }
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(2.0), "2");
        assert_eq!(format_sig(-1.352_258_239_910_774), "-1.35225823991");
        assert_eq!(format_sig(31_038.935_105_292_43), "31038.9351053");
        assert_eq!(format_sig(3.2e-17), "3.2e-17");
        assert_eq!(format_sig(1.0e-5), "0.00001");
        assert_eq!(format_sig(123_456_789_012_345.0), "1.23456789012e14");
        assert_eq!(format_sig(9.999_999_999_999_5), "10");
    }

    #[test]
    fn empty_sequence_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,re_beta,im_beta,residual,E,G,t_hat,p_hat,t_true,p_true,ratio_t,ratio_p\n"
        );
    }

    #[test]
    fn one_row_round_trip_keeps_twelve_digits() {
        let mut buf = Vec::new();
        write_csv(&[row(1)], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("2.95617202485,-1.35225823991,3.2e-17,"));
        assert!(text.ends_with(",2.6027143901,\n"));
        assert!(!text.contains('\r'));
        let back = read_csv(buf.as_slice()).unwrap();
        let mut again = Vec::new();
        write_csv(&back, &mut again).unwrap();
        assert_eq!(buf, again);
        assert_eq!(back[0].ratio_p, None);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let rows = vec![row(1), row(2)];
        let mut buf = Vec::new();
        write_json(&rows, &mut buf).unwrap();
        assert_eq!(read_json(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn rows_must_be_contiguous() {
        let mut buf = Vec::new();
        assert!(matches!(
            write_csv(&[row(1), row(3)], &mut buf),
            Err(DataError::NonContiguousRows { row: 2, n: 3 })
        ));
    }

    #[test]
    fn bad_header_rejected() {
        assert!(matches!(read_csv("a,b\n".as_bytes()), Err(DataError::Header(_))));
    }

    proptest! {
        #[test]
        fn decimal_text_is_a_fixed_point(x in proptest::num::f64::NORMAL) {
            let s = format_sig(x);
            let y: f64 = s.parse().unwrap();
            prop_assert_eq!(format_sig(y), s);
            prop_assert!(((y - x) / x).abs() <= 5e-12);
        }
    }
}
