//! Patterns, order isomorphism and containment testing.
//!
//! A [`Pattern`] is always stored in canonical form: its distinct values are
//! exactly `0..=m`. Containment is decided by [`Matcher`], which looks for an
//! occurrence of the pattern whose last entry is a given new value. Checking
//! every possible last position gives full containment, and checking only the
//! newest position is what the backtracking enumerator needs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A canonical pattern word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Pattern {
    entries: Vec<u32>,
}

impl Pattern {
    /// Builds a pattern from an arbitrary word, compressing its values to
    /// `0..=m` while preserving their relative order.
    pub fn new(word: &[u32]) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern {
            entries: canonicalize(word),
        })
    }

    /// The pattern `0 0 ... 0` of the given length.
    pub fn constant(len: usize) -> Self {
        assert!(len > 0, "pattern length must be positive");
        Pattern {
            entries: vec![0; len],
        }
    }

    /// The pattern `0 1 1 ... 1` with `ones` trailing ones.
    pub fn zero_then_ones(ones: usize) -> Self {
        let mut entries = vec![1; ones + 1];
        entries[0] = 0;
        Pattern::new(&entries).expect("nonempty")
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest value `m`; the pattern uses exactly the values `0..=m`.
    pub fn max_value(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.max_value() == 0
    }

    /// Concatenation of the two words, re-canonicalized.
    pub fn concat(&self, other: &Pattern) -> Pattern {
        let mut word = self.entries.clone();
        word.extend_from_slice(&other.entries);
        Pattern::new(&word).expect("nonempty")
    }

    /// Whether `seq` contains this pattern.
    pub fn is_contained_in(&self, seq: &[u32]) -> bool {
        contains(seq, self)
    }
}

impl From<Pattern> for Vec<u32> {
    fn from(p: Pattern) -> Self {
        p.entries
    }
}

impl TryFrom<Vec<u32>> for Pattern {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Pattern::new(&v)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.entries)
    }
}

/// Writes a word as a digit string when every value is a single digit, and
/// comma-separated otherwise.
pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[u32]) -> fmt::Result {
    if word.iter().all(|&v| v <= 9) {
        for v in word {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        for (i, v) in word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses `"0021"` (one digit per entry) or `"0,10,2"` (comma separated).
/// Errors report the 1-based position of the offending character or token.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if s.contains(',') {
        s.split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|_| Error::MalformedPattern {
                    position: i + 1,
                    token: tok.to_string(),
                })
            })
            .collect()
    } else {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10).ok_or_else(|| Error::MalformedPattern {
                    position: i + 1,
                    token: c.to_string(),
                })
            })
            .collect()
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(&parse_word(s)?)
    }
}

fn canonicalize(word: &[u32]) -> Vec<u32> {
    let mut distinct = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    word.iter()
        .map(|v| distinct.binary_search(v).expect("value present") as u32)
        .collect()
}

/// True iff `a` and `b` have the same length and every pair of positions
/// compares the same way in both.
pub fn order_isomorphic<T: Ord>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i].cmp(&a[j]) != b[i].cmp(&b[j]) {
                return false;
            }
        }
    }
    true
}

/// True iff some subsequence of `seq` is order isomorphic to `p`.
pub fn contains(seq: &[u32], p: &Pattern) -> bool {
    let matcher = Matcher::new(p);
    let mut scratch = Vec::with_capacity(p.len());
    (0..seq.len()).any(|end| matcher.completes_with(&seq[..end], seq[end], &mut scratch))
}

/// Given `prefix` avoiding `p`, reports whether `prefix · next` still avoids it.
pub fn extend_avoids(prefix: &[u32], next: u32, p: &Pattern) -> bool {
    let matcher = Matcher::new(p);
    !matcher.completes_with(prefix, next, &mut Vec::with_capacity(p.len()))
}

/// Precomputed occurrence finder for a single pattern.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: Pattern,
    kind: MatcherKind,
}

#[derive(Clone, Debug)]
enum MatcherKind {
    /// `0^k`: an occurrence ending at `x` is `k - 1` earlier copies of `x`.
    Constant,
    General {
        /// `against_last[d]` = relation of pattern entry `d` to the final entry.
        against_last: Vec<Ordering>,
    },
}

impl Matcher {
    pub fn new(p: &Pattern) -> Self {
        let kind = if p.is_constant() {
            MatcherKind::Constant
        } else {
            let last = *p.entries.last().expect("nonempty");
            MatcherKind::General {
                against_last: p.entries.iter().map(|v| v.cmp(&last)).collect(),
            }
        };
        Matcher {
            pattern: p.clone(),
            kind,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Whether `prefix · last` has an occurrence of the pattern that uses
    /// `last` as its final entry. `scratch` is working storage and is left
    /// empty on return.
    pub fn completes_with(&self, prefix: &[u32], last: u32, scratch: &mut Vec<u32>) -> bool {
        let need = self.pattern.len() - 1;
        if prefix.len() < need {
            return false;
        }
        match &self.kind {
            MatcherKind::Constant => prefix.iter().filter(|&&v| v == last).count() >= need,
            MatcherKind::General { against_last } => {
                scratch.clear();
                let found = self.search(prefix, last, against_last, 0, scratch);
                scratch.clear();
                found
            }
        }
    }

    fn search(
        &self,
        prefix: &[u32],
        last: u32,
        against_last: &[Ordering],
        start: usize,
        chosen: &mut Vec<u32>,
    ) -> bool {
        let depth = chosen.len();
        let need = self.pattern.len() - 1;
        if depth == need {
            return true;
        }
        let p = &self.pattern.entries;
        let remaining = need - depth;
        // Among candidates with equal value the leftmost dominates the rest.
        let mut tried: u128 = 0;
        for i in start..=prefix.len() - remaining {
            let v = prefix[i];
            if v < 128 {
                let bit = 1u128 << v;
                if tried & bit != 0 {
                    continue;
                }
                tried |= bit;
            }
            if v.cmp(&last) != against_last[depth] {
                continue;
            }
            if !chosen
                .iter()
                .zip(p)
                .all(|(&c, &pd)| c.cmp(&v) == pd.cmp(&p[depth]))
            {
                continue;
            }
            chosen.push(v);
            if self.search(prefix, last, against_last, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Full containment test for `seq`.
    pub fn occurs_in(&self, seq: &[u32]) -> bool {
        let mut scratch = Vec::with_capacity(self.pattern.len());
        (0..seq.len()).any(|end| self.completes_with(&seq[..end], seq[end], &mut scratch))
    }
}
