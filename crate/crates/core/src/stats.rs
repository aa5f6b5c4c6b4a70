//! Refined statistics on S-inversion sequences and the tables of avoider
//! counts they induce.
//!
//! Each statistic is a function of where the zeros sit relative to the
//! positive entries. Positions are 0-based throughout; "the r-th zero" is
//! 1-based, as usual.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::enumerate::fold_avoiders;
use crate::pattern::Pattern;
use crate::sequence::BoundSet;

fn zero_positions(e: &[u32]) -> Vec<usize> {
    e.iter()
        .enumerate()
        .filter(|(_, &v)| v == 0)
        .map(|(i, _)| i)
        .collect()
}

/// Whether some positive value occurs at least `h` times in `window`.
fn has_positive_repeat(window: &[u32], h: usize) -> bool {
    if h == 0 {
        return true;
    }
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in window.iter().filter(|&&v| v > 0) {
        let c = seen.entry(v).or_default();
        *c += 1;
        if *c >= h {
            return true;
        }
    }
    false
}

/// Largest `r` such that after the `r`-th zero some positive value occurs
/// at least `h` times; 0 when there is no such `r`.
pub fn terminal_h_repeat(e: &[u32], h: usize) -> usize {
    let zeros = zero_positions(e);
    (1..=zeros.len())
        .rev()
        .find(|&r| has_positive_repeat(&e[zeros[r - 1] + 1..], h))
        .unwrap_or(0)
}

/// Largest `r` such that before the `r`-th-to-last zero some positive value
/// occurs at least `h` times; 0 when there is no such `r`.
pub fn initial_h_repeat(e: &[u32], h: usize) -> usize {
    let zeros = zero_positions(e);
    let count = zeros.len();
    (1..=count)
        .rev()
        .find(|&r| has_positive_repeat(&e[..zeros[count - r]], h))
        .unwrap_or(0)
}

fn has_positive_ascent(window: &[u32]) -> bool {
    let mut min_positive = u32::MAX;
    for &v in window.iter().filter(|&&v| v > 0) {
        if v > min_positive {
            return true;
        }
        min_positive = min_positive.min(v);
    }
    false
}

/// Largest `z` (at most the number of zeros) such that no two positive
/// entries `0 < e_a < e_b` with `a < b` both precede the `z`-th zero.
pub fn initial_non_inversion(e: &[u32]) -> usize {
    let zeros = zero_positions(e);
    (1..=zeros.len())
        .rev()
        .find(|&z| !has_positive_ascent(&e[..zeros[z - 1]]))
        .unwrap_or(0)
}

/// The `i < z` (with `z` the initial non-inversion statistic) such that a
/// positive entry lies between the `i`-th and `(i+1)`-th zeros; `i = 0`
/// means strictly before the first zero.
pub fn initial_positive_set(e: &[u32]) -> BTreeSet<usize> {
    let zeros = zero_positions(e);
    let z = initial_non_inversion(e);
    (0..z)
        .filter(|&i| {
            let lo = if i == 0 { 0 } else { zeros[i - 1] + 1 };
            e[lo..zeros[i]].iter().any(|&v| v > 0)
        })
        .collect()
}

/// Which refinement a [`RefinedTable`] is keyed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RefinementMode {
    Terminal(usize),
    Initial(usize),
    NonInversion,
}

/// The statistic part of a refined key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Statistic {
    Repeat(usize),
    NonInversion { z: usize, positive: BTreeSet<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RefinedKey {
    pub zeros: usize,
    pub ones: usize,
    pub stat: Statistic,
}

impl RefinedKey {
    pub fn of(e: &[u32], mode: RefinementMode) -> Self {
        let zeros = e.iter().filter(|&&v| v == 0).count();
        let ones = e.iter().filter(|&&v| v == 1).count();
        let stat = match mode {
            RefinementMode::Terminal(h) => Statistic::Repeat(terminal_h_repeat(e, h)),
            RefinementMode::Initial(h) => Statistic::Repeat(initial_h_repeat(e, h)),
            RefinementMode::NonInversion => Statistic::NonInversion {
                z: initial_non_inversion(e),
                positive: initial_positive_set(e),
            },
        };
        RefinedKey { zeros, ones, stat }
    }
}

/// Avoider counts partitioned by [`RefinedKey`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedTable {
    pub counts: BTreeMap<RefinedKey, BigUint>,
}

impl RefinedTable {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn get(&self, key: &RefinedKey) -> BigUint {
        self.counts.get(key).cloned().unwrap_or_default()
    }
}

/// Counts of `I_S(p)` keyed by zeros, ones and the chosen statistic.
pub fn refined_table(bounds: &BoundSet, p: &Pattern, mode: RefinementMode) -> RefinedTable {
    let counts = fold_avoiders(
        bounds,
        p,
        BTreeMap::<RefinedKey, u64>::new,
        |acc, e| *acc.entry(RefinedKey::of(e, mode)).or_default() += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    RefinedTable {
        counts: counts.into_iter().map(|(k, v)| (k, v.into())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_avoiders;
    use crate::sequence::all_sequences;

    // Literal transcriptions of the definitions, quantifying over index tuples.
    fn terminal_oracle(e: &[u32], h: usize) -> usize {
        let zeros = zero_positions(e);
        let mut best = 0;
        for r in 1..=zeros.len() {
            let z = zeros[r - 1];
            let ok = h == 0
                || (1..e.len() as u32 + 1).any(|v| {
                    (z + 1..e.len()).filter(|&i| e[i] == v).count() >= h
                });
            if ok {
                best = r;
            }
        }
        best
    }

    fn initial_oracle(e: &[u32], h: usize) -> usize {
        let zeros = zero_positions(e);
        let mut best = 0;
        for r in 1..=zeros.len() {
            let z = zeros[zeros.len() - r];
            let ok = (1..e.len() as u32 + 1).any(|v| (0..z).filter(|&i| e[i] == v).count() >= h);
            if ok {
                best = r;
            }
        }
        best
    }

    fn non_inversion_oracle(e: &[u32]) -> usize {
        let zeros = zero_positions(e);
        let mut best = 0;
        for z in 1..=zeros.len() {
            let end = zeros[z - 1];
            let ascent = (0..end).any(|a| (a + 1..end).any(|b| 0 < e[a] && e[a] < e[b]));
            if !ascent {
                best = z;
            }
        }
        best
    }

    #[test]
    fn terminal_examples() {
        assert_eq!(terminal_h_repeat(&[0, 1, 0, 0], 1), 1);
        assert_eq!(terminal_h_repeat(&[0, 0, 0], 1), 0);
        assert_eq!(terminal_h_repeat(&[0, 0, 0], 3), 0);
        assert_eq!(terminal_h_repeat(&[0, 0, 1, 2, 2], 2), 2);
        assert_eq!(terminal_h_repeat(&[0, 0, 1, 2, 2], 2), terminal_oracle(&[0, 0, 1, 2, 2], 2));
        // no zeros at all
        assert_eq!(terminal_h_repeat(&[1, 2, 2], 1), 0);
    }

    #[test]
    fn initial_examples() {
        assert_eq!(initial_h_repeat(&[1, 1, 0, 0], 2), 2);
        assert_eq!(initial_h_repeat(&[0, 1, 0], 1), 1);
        assert_eq!(initial_h_repeat(&[0, 0], 1), 0);
        assert_eq!(initial_h_repeat(&[0, 0], 2), 0);
    }

    #[test]
    fn non_inversion_examples() {
        assert_eq!(initial_non_inversion(&[0, 0, 0]), 3);
        assert_eq!(initial_non_inversion(&[1, 2, 0, 0]), 0);
        assert_eq!(initial_non_inversion(&[2, 1, 0, 0, 3]), 2);
        assert_eq!(non_inversion_oracle(&[2, 1, 0, 0, 3]), 2);
        assert_eq!(initial_non_inversion(&[1, 2]), 0);
    }

    #[test]
    fn positive_set_examples() {
        assert!(initial_positive_set(&[0, 0, 0]).is_empty());
        assert_eq!(initial_positive_set(&[1, 0, 0]), BTreeSet::from([0]));
        assert_eq!(initial_positive_set(&[0, 2, 0, 0]), BTreeSet::from([1]));
    }

    #[test]
    fn one_repeat_counts_non_extremal_zeros() {
        for e in all_sequences(&BoundSet::interval(6)) {
            let zeros = zero_positions(&e);
            let non_terminal = zeros
                .iter()
                .filter(|&&z| e[z + 1..].iter().any(|&v| v > 0))
                .count();
            let non_initial = zeros.iter().filter(|&&z| e[..z].iter().any(|&v| v > 0)).count();
            assert_eq!(terminal_h_repeat(&e, 1), non_terminal);
            assert_eq!(initial_h_repeat(&e, 1), non_initial);
        }
    }

    #[test]
    fn statistics_match_definitions_exhaustively() {
        let s = BoundSet::new(vec![2, 3, 4, 5, 6, 7]).unwrap();
        for e in all_sequences(&s) {
            for h in 0..=3 {
                assert_eq!(terminal_h_repeat(&e, h), terminal_oracle(&e, h), "{e:?} h={h}");
                if h > 0 {
                    assert_eq!(initial_h_repeat(&e, h), initial_oracle(&e, h), "{e:?} h={h}");
                }
            }
            let z = initial_non_inversion(&e);
            assert_eq!(z, non_inversion_oracle(&e), "{e:?}");
            assert!(initial_positive_set(&e).iter().all(|&i| i < z));
        }
    }

    #[test]
    fn table_examples() {
        for mode in [
            RefinementMode::Terminal(1),
            RefinementMode::Initial(1),
            RefinementMode::NonInversion,
        ] {
            let t = refined_table(&BoundSet::empty(), &"0".parse().unwrap(), mode);
            assert_eq!(t.counts.len(), 1);
            let (key, count) = t.counts.iter().next().unwrap();
            assert_eq!((key.zeros, key.ones), (0, 0));
            assert_eq!(*count, 1u32.into());
        }
        let t = refined_table(&BoundSet::interval(3), &"1011".parse().unwrap(), RefinementMode::Terminal(1));
        assert_eq!(t.total(), 6u32.into());

        let s = BoundSet::interval(5);
        let a = refined_table(&s, &"2011".parse().unwrap(), RefinementMode::Initial(1));
        let b = refined_table(&s, &"2101".parse().unwrap(), RefinementMode::Initial(1));
        assert_eq!(a, b);
        assert_eq!(a.total(), count_avoiders(&s, &"2011".parse().unwrap()));
    }
}
