//! Offline-first OEIS b-file access and sequence comparison.
//!
//! Sequences are fetched from a local cache, from snapshots bundled with the
//! crate, or (only when explicitly enabled) from the network. Comparisons
//! apply a transform to the reference sequence, auto-align the leading
//! offset within a small window, and report the longest matching prefix.

mod bundled;
mod fetch;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use bundled::BUNDLED_SEQUENCES;
pub use fetch::{fetch_bfile, parse_bfile, FetchConfig, Fetched};

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("invalid OEIS identifier {0:?} (expected 'A' followed by six digits)")]
    InvalidANumber(String),
    #[error("malformed b-file line {line}: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("b-file contains no terms")]
    NoTerms,
    #[error("no local copy of {a_number} and network access is disabled")]
    Unavailable { a_number: String },
    #[error("fetching {a_number} failed: {message}")]
    Network { a_number: String, message: String },
    #[error("cache io: {0}")]
    Cache(#[from] std::io::Error),
}

/// How a reference sequence is reshaped before comparison.
///
/// The two triangle transforms read the b-file as a centered triangle
/// (row r holds the 2r + 1 entries for heights -r..=r); rows that are only
/// partially present in the data are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Identity,
    /// Keep terms at positions 0, 2, 4, ...
    BisectEven,
    /// Keep terms at positions 1, 3, 5, ...
    BisectOdd,
    /// Column at signed height m of a centered triangle.
    Column(i64),
    /// Even-indexed rows of a centered triangle, re-linearised.
    RowBisect,
}

impl Transform {
    pub fn name(&self) -> String {
        match self {
            Transform::Identity => "identity".into(),
            Transform::BisectEven => "bisect-even".into(),
            Transform::BisectOdd => "bisect-odd".into(),
            Transform::Column(m) => format!("column({m})"),
            Transform::RowBisect => "row-bisect".into(),
        }
    }

    pub fn from_name(name: &str) -> Option<Transform> {
        match name {
            "identity" => Some(Transform::Identity),
            "bisect-even" => Some(Transform::BisectEven),
            "bisect-odd" => Some(Transform::BisectOdd),
            "row-bisect" => Some(Transform::RowBisect),
            _ => None,
        }
    }
}

/// A reference to an OEIS sequence plus the reshaping to apply to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRef {
    a_number: String,
    pub transform: Transform,
}

impl SequenceRef {
    pub fn new(a_number: &str, transform: Transform) -> Result<SequenceRef, OeisError> {
        if !is_valid_a_number(a_number) {
            return Err(OeisError::InvalidANumber(a_number.to_string()));
        }
        Ok(SequenceRef {
            a_number: a_number.to_string(),
            transform,
        })
    }

    pub fn a_number(&self) -> &str {
        &self.a_number
    }
}

pub fn is_valid_a_number(a_number: &str) -> bool {
    let bytes = a_number.as_bytes();
    bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(|b| b.is_ascii_digit())
}

/// Where a fetched sequence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Cache,
    Network,
    Bundled,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Cache => "cache",
            Source::Network => "network",
            Source::Bundled => "bundled",
        })
    }
}

/// Outcome of comparing a computed sequence against a reference.
///
/// `matched_terms` is the length of the agreeing prefix at the chosen
/// alignment; `first_mismatch` indexes into the computed sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub a_number: String,
    pub transform: Transform,
    pub matched_terms: usize,
    pub first_mismatch: Option<(usize, BigInt, BigInt)>,
    pub source: Source,
    pub offset_shift: i64,
}

impl ComparisonReport {
    pub fn is_match(&self, min_terms: usize) -> bool {
        self.first_mismatch.is_none() && self.matched_terms >= min_terms
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} terms matched (source {}, shift {:+})",
            self.a_number,
            self.transform.name(),
            self.matched_terms,
            self.source,
            self.offset_shift
        )?;
        if let Some((index, expected, got)) = &self.first_mismatch {
            write!(f, "; first mismatch at {index}: expected {expected}, got {got}")?;
        }
        Ok(())
    }
}

/// Reshape a reference sequence. Triangle transforms stop at the first row
/// not fully contained in the data.
pub fn apply_transform(values: &[BigInt], transform: &Transform) -> Vec<BigInt> {
    match transform {
        Transform::Identity => values.to_vec(),
        Transform::BisectEven => values.iter().step_by(2).cloned().collect(),
        Transform::BisectOdd => values.iter().skip(1).step_by(2).cloned().collect(),
        Transform::Column(m) => {
            let mut out = Vec::new();
            for (start, width) in triangle_rows(values.len()) {
                let r = (width as i64 - 1) / 2;
                if m.abs() <= r {
                    out.push(values[start + (m + r) as usize].clone());
                }
            }
            out
        }
        Transform::RowBisect => {
            let mut out = Vec::new();
            for (row, (start, width)) in triangle_rows(values.len()).into_iter().enumerate() {
                if row % 2 == 0 {
                    out.extend(values[start..start + width].iter().cloned());
                }
            }
            out
        }
    }
}

/// (start, width) spans of the complete centered-triangle rows within a
/// prefix of the given length.
fn triangle_rows(len: usize) -> Vec<(usize, usize)> {
    let mut rows = Vec::new();
    let mut start = 0;
    let mut width = 1;
    while start + width <= len {
        rows.push((start, width));
        start += width;
        width += 2;
    }
    rows
}

/// Align and compare a computed sequence against transformed reference
/// terms. Shifts are tried in a fixed order (0, +1, -1, +2, -2, where a
/// positive shift drops leading reference terms); the first shift with the
/// longest agreeing prefix wins.
pub fn compare_terms(
    computed: &[BigInt],
    transform: &Transform,
    fetched: &Fetched,
) -> ComparisonReport {
    let reference = apply_transform(&fetched.values(), transform);
    let mut best: Option<(usize, Option<(usize, BigInt, BigInt)>, i64)> = None;
    for shift in [0i64, 1, -1, 2, -2] {
        let (c_off, r_off) = if shift >= 0 {
            (0usize, shift as usize)
        } else {
            ((-shift) as usize, 0usize)
        };
        if c_off > computed.len() || r_off > reference.len() {
            continue;
        }
        let c = &computed[c_off..];
        let r = &reference[r_off..];
        let overlap = c.len().min(r.len());
        let mut matched = overlap;
        let mut mismatch = None;
        for i in 0..overlap {
            if c[i] != r[i] {
                matched = i;
                mismatch = Some((c_off + i, r[i].clone(), c[i].clone()));
                break;
            }
        }
        if best.as_ref().map_or(true, |(m, _, _)| matched > *m) {
            best = Some((matched, mismatch, shift));
        }
    }
    let (matched_terms, first_mismatch, offset_shift) = best.unwrap_or((0, None, 0));
    ComparisonReport {
        a_number: fetched.a_number.clone(),
        transform: transform.clone(),
        matched_terms,
        first_mismatch,
        source: fetched.source,
        offset_shift,
    }
}

/// Fetch the reference and compare in one step.
pub fn compare(
    computed: &[BigInt],
    reference: &SequenceRef,
    config: &FetchConfig,
) -> Result<ComparisonReport, OeisError> {
    let fetched = fetch_bfile(reference.a_number(), config)?;
    Ok(compare_terms(computed, &reference.transform, &fetched))
}
