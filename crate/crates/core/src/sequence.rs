//! Bound sets, S-inversion sequences and the Lehmer code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{contains, write_word, Pattern};

/// A finite set of positive integers `s_1 < s_2 < ... < s_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundSet(Vec<u32>);

impl BoundSet {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        for (i, &s) in elements.iter().enumerate() {
            if s == 0 || (i > 0 && elements[i - 1] >= s) {
                return Err(Error::InvalidBoundSet { index: i });
            }
        }
        Ok(BoundSet(elements))
    }

    /// `{1, 2, ..., n}`, whose S-inversion sequences are the ordinary
    /// inversion sequences of length `n`.
    pub fn interval(n: usize) -> Self {
        BoundSet((1..=n as u32).collect())
    }

    pub fn empty() -> Self {
        BoundSet(Vec::new())
    }

    /// The subset of `{1..=n}` whose membership is given by the low `n` bits
    /// of `mask` (bit `i` selects `i + 1`).
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n <= 64);
        BoundSet(
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i as u32 + 1)
                .collect(),
        )
    }

    /// Every subset of `{1..=n}`, in mask order.
    pub fn subsets_of_interval(n: usize) -> impl Iterator<Item = BoundSet> {
        assert!(n < 64);
        (0..1u64 << n).map(move |mask| BoundSet::from_mask(mask, n))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{s - 1 : s in S}`, dropping a resulting zero.
    pub fn shifted_down(&self) -> BoundSet {
        BoundSet(self.0.iter().filter(|&&s| s > 1).map(|s| s - 1).collect())
    }

    /// `|I_S|`, the product of the bounds.
    pub fn total_sequences(&self) -> u128 {
        self.0.iter().map(|&s| s as u128).product()
    }
}

impl fmt::Display for BoundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// A sequence `e` together with its bound set, `0 <= e_i < s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SInvSeq {
    entries: Vec<u32>,
    bounds: BoundSet,
}

impl SInvSeq {
    pub fn new(entries: Vec<u32>, bounds: BoundSet) -> Result<Self> {
        if entries.len() != bounds.len() {
            return Err(Error::LengthMismatch {
                entries: entries.len(),
                bounds: bounds.len(),
            });
        }
        for (index, (&value, &bound)) in entries.iter().zip(bounds.elements()).enumerate() {
            if value >= bound {
                return Err(Error::EntryOutOfBounds {
                    index,
                    value,
                    bound,
                });
            }
        }
        Ok(SInvSeq { entries, bounds })
    }

    /// An ordinary inversion sequence, bounds `1..=n`.
    pub fn inversion(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        SInvSeq::new(entries, BoundSet::interval(n))
    }

    pub(crate) fn from_parts_unchecked(entries: Vec<u32>, bounds: BoundSet) -> Self {
        debug_assert!(SInvSeq::new(entries.clone(), bounds.clone()).is_ok());
        SInvSeq { entries, bounds }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn bounds(&self) -> &BoundSet {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_inversion_sequence(&self) -> bool {
        self.bounds == BoundSet::interval(self.len())
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        contains(&self.entries, p)
    }

    pub fn avoids(&self, p: &Pattern) -> bool {
        !self.contains(p)
    }

    /// The subsequence at the given 0-based indices, in increasing order.
    pub fn restrict(&self, indices: &[usize]) -> Vec<u32> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        idx.into_iter().map(|i| self.entries[i]).collect()
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }
}

impl fmt::Display for SInvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.entries)
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Lehmer code: `e_i` counts the earlier entries larger than `pi_i`.
pub fn lehmer_encode(p: &Permutation) -> SInvSeq {
    let pi = p.one_line();
    let entries = (0..pi.len())
        .map(|i| pi[..i].iter().filter(|&&v| v > pi[i]).count() as u32)
        .collect();
    SInvSeq::from_parts_unchecked(entries, BoundSet::interval(pi.len()))
}

/// Inverse of [`lehmer_encode`]. Fails unless `e` is an ordinary inversion
/// sequence.
pub fn lehmer_decode(e: &SInvSeq) -> Result<Permutation> {
    if !e.is_inversion_sequence() {
        return Err(Error::Hypothesis(
            "Lehmer decoding needs bounds 1..=n".into(),
        ));
    }
    let n = e.len();
    let mut remaining: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![0; n];
    // Position i holds the (e_i + 1)-th largest of the values not yet placed
    // to its right.
    for i in (0..n).rev() {
        let rank_from_top = e.entries()[i] as usize;
        let idx = remaining.len() - 1 - rank_from_top;
        out[i] = remaining.remove(idx);
    }
    Ok(Permutation(out))
}

/// Iterator over all of `I_S` in lexicographic order (no pruning).
pub fn all_sequences(bounds: &BoundSet) -> impl Iterator<Item = Vec<u32>> {
    let bounds = bounds.elements().to_vec();
    let n = bounds.len();
    let mut current: Option<Vec<u32>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if next[i] + 1 < bounds[i] {
                next[i] += 1;
                current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    })
}
