//! OEIS b-files: plain text, one `index value` pair per line.
//!
//! Blank lines and lines starting with `#` are ignored. Indices must be
//! strictly increasing but need not start anywhere in particular.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
    pub source: Option<PathBuf>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::BFile { line, message };
            let mut fields = trimmed.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `index value`, got {trimmed:?}")));
            };
            let index: i64 = idx
                .parse()
                .map_err(|_| err(format!("bad index {idx:?}")))?;
            let value: BigInt = val
                .parse()
                .map_err(|_| err(format!("bad value {val:?}")))?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(err(format!("index {index} does not increase (previous {prev})")));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile {
            entries,
            source: None,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::BFile {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let mut b = Self::parse(&text)?;
        b.source = Some(path.to_path_buf());
        Ok(b)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Compares `computed[m]`, taken as term `m + 1` of the computed
    /// sequence, with b-file index `m + offset`.
    pub fn compare(&self, computed: &[BigInt], offset: i64) -> Comparison {
        let mut matched = 0;
        let mut first_index = None;
        for (m, value) in computed.iter().enumerate() {
            let index = m as i64 + offset;
            let Some(expected) = self.get(index) else {
                continue;
            };
            first_index.get_or_insert(index);
            if expected != value {
                return Comparison::Mismatch {
                    index,
                    expected: expected.clone(),
                    computed: value.clone(),
                    matched_before: matched,
                };
            }
            matched += 1;
        }
        match first_index {
            None => Comparison::NoOverlap,
            Some(first_index) => Comparison::Match {
                first_index,
                length: matched,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Match {
        first_index: i64,
        length: usize,
    },
    Mismatch {
        index: i64,
        expected: BigInt,
        computed: BigInt,
        matched_before: usize,
    },
    NoOverlap,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        matches!(self, Comparison::Match { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    const SAMPLE: &str = "# A000110 Bell numbers\n\n0 1\n1 1\n2 2\n3 5\n4 15\n5 52\n";

    #[test]
    fn parses_and_skips_comments() {
        let b = BFile::parse(SAMPLE).unwrap();
        assert_eq!(b.entries.len(), 6);
        assert_eq!(b.get(4), Some(&BigInt::from(15)));
        assert_eq!(b.get(9), None);
        let huge = BFile::parse("7 123456789012345678901234567890\n").unwrap();
        assert_eq!(huge.get(7).unwrap().to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn malformed_lines_cite_line_numbers() {
        assert!(matches!(BFile::parse("0 1\n1 x\n"), Err(Error::BFile { line: 2, .. })));
        assert!(matches!(BFile::parse("0 1\n\n3\n"), Err(Error::BFile { line: 3, .. })));
        assert!(matches!(BFile::parse("2 1\n1 1\n"), Err(Error::BFile { line: 2, .. })));
        assert!(matches!(BFile::parse("1 1 1\n"), Err(Error::BFile { line: 1, .. })));
    }

    #[test]
    fn comparison_outcomes() {
        let b = BFile::parse(SAMPLE).unwrap();
        assert_eq!(
            b.compare(&big(&[1, 2, 5, 15]), 1),
            Comparison::Match { first_index: 1, length: 4 }
        );
        assert_eq!(
            b.compare(&big(&[1, 1, 2, 5, 15, 52, 203]), 0),
            Comparison::Match { first_index: 0, length: 6 }
        );
        assert_eq!(
            b.compare(&big(&[1, 2, 6]), 1),
            Comparison::Mismatch {
                index: 3,
                expected: 5.into(),
                computed: 6.into(),
                matched_before: 2
            }
        );
        assert_eq!(b.compare(&big(&[1, 2]), 100), Comparison::NoOverlap);
    }
}
