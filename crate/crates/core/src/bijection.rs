//! Layer characterizations of 3210- and 3201-avoiders and the bijection
//! between them.
//!
//! Positions are 0-based. The first layer of a sequence is its weak
//! left-to-right maxima; the second layer is the weak left-to-right maxima
//! of what remains after deleting the first; everything else is the rest.
//! A sequence avoids 3210 exactly when its rest is weakly increasing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{contains, Pattern};

/// Positions `j` with `e_i <= e_j` for every `i < j`.
pub fn weak_ltr_maxima(e: &[u32]) -> Vec<usize> {
    weak_ltr_maxima_of(e, 0..e.len())
}

fn weak_ltr_maxima_of(e: &[u32], positions: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut best: Option<u32> = None;
    positions
        .filter(|&j| {
            let keep = best.is_none_or(|b| e[j] >= b);
            if keep {
                best = Some(e[j]);
            }
            keep
        })
        .collect()
}

/// The three-layer decomposition of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximaLayers {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub rest: Vec<usize>,
}

impl MaximaLayers {
    pub fn rest_values(&self, e: &[u32]) -> Vec<u32> {
        self.rest.iter().map(|&i| e[i]).collect()
    }
}

pub fn maxima_layers(e: &[u32]) -> MaximaLayers {
    let first = weak_ltr_maxima(e);
    let mut in_first = vec![false; e.len()];
    first.iter().for_each(|&i| in_first[i] = true);
    let second = weak_ltr_maxima_of(e, (0..e.len()).filter(|&i| !in_first[i]));
    let mut layered = in_first;
    second.iter().for_each(|&i| layered[i] = true);
    let rest = (0..e.len()).filter(|&i| !layered[i]).collect();
    MaximaLayers {
        first,
        second,
        rest,
    }
}

/// Avoidance of 3210 via the layer decomposition: the rest must be weakly
/// increasing.
pub fn is_3210_by_partition(e: &[u32]) -> bool {
    let rest = maxima_layers(e).rest_values(e);
    rest.windows(2).all(|w| w[0] <= w[1])
}

/// Readings of "second largest value" of a prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SecondMaxRule {
    /// Second largest distinct value: `{3, 3, 1}` gives 1.
    Distinct,
    /// Second entry of the prefix sorted in decreasing order: `{3, 3, 1}` gives 3.
    Multiset,
    /// Largest prefix entry that is not a weak left-to-right maximum, i.e.
    /// the current value of the second layer. `(0, 0, 2, 1, 3)` gives 1.
    SecondLayer,
}

/// The rule under which the 3201 characterization agrees with containment.
/// Both value-based readings fail on `(0, 0, 2, 1, 3, 0, 1)`, which avoids
/// 3201 but has a later 1 sitting between `e_6 = 0` and their threshold 2.
pub const SECOND_MAX_RULE: SecondMaxRule = SecondMaxRule::SecondLayer;

/// Largest and second largest value among `e[..i]`.
pub fn second_max_values(e: &[u32], i: usize, rule: SecondMaxRule) -> (Option<u32>, Option<u32>) {
    let prefix = &e[..i];
    let top = prefix.iter().copied().max();
    let second = match rule {
        SecondMaxRule::Distinct => top.and_then(|m| prefix.iter().copied().filter(|&v| v < m).max()),
        SecondMaxRule::Multiset => {
            let mut sorted = prefix.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            sorted.get(1).copied()
        }
        SecondMaxRule::SecondLayer => {
            let mut running: Option<u32> = None;
            let mut best = None;
            for &v in prefix {
                match running {
                    Some(m) if v < m => best = best.max(Some(v)),
                    _ => running = Some(v),
                }
            }
            best
        }
    };
    (top, second)
}

/// Avoidance of 3201 via the layer characterization, under the given
/// second-maximum rule.
pub fn is_3201_by_characterization_with(e: &[u32], rule: SecondMaxRule) -> bool {
    let layers = maxima_layers(e);
    layers.rest.iter().all(|&i| {
        let m2 = second_max_values(e, i, rule).1;
        e[i + 1..]
            .iter()
            .all(|&later| later <= e[i] || m2.is_some_and(|m| later >= m))
    })
}

pub fn is_3201_by_characterization(e: &[u32]) -> bool {
    is_3201_by_characterization_with(e, SECOND_MAX_RULE)
}

fn p3210() -> Pattern {
    "3210".parse().expect("valid")
}

fn p3201() -> Pattern {
    "3201".parse().expect("valid")
}

/// Sends a 3210-avoider to a 3201-avoider. The first two layers are kept;
/// rest positions are refilled left to right, each taking the largest unused
/// rest value strictly below the prefix's second maximum.
pub fn map_3210_to_3201(e: &[u32]) -> Result<Vec<u32>> {
    if contains(e, &p3210()) {
        return Err(Error::ContainsPattern("3210".into()));
    }
    let layers = maxima_layers(e);
    let mut pool = layers.rest_values(e);
    pool.sort_unstable();
    let mut f = e.to_vec();
    for &i in &layers.rest {
        let bound = second_max_values(e, i, SECOND_MAX_RULE)
            .1
            .ok_or(Error::NoCandidate { index: i })?;
        let pick = pool
            .iter()
            .rposition(|&v| v < bound)
            .ok_or(Error::NoCandidate { index: i })?;
        f[i] = pool.remove(pick);
    }
    Ok(f)
}

/// Inverse of [`map_3210_to_3201`]: the rest values of `f` are put back in
/// weakly increasing order.
pub fn map_3201_to_3210(f: &[u32]) -> Result<Vec<u32>> {
    if contains(f, &p3201()) {
        return Err(Error::ContainsPattern("3201".into()));
    }
    let layers = maxima_layers(f);
    let mut values = layers.rest_values(f);
    values.sort_unstable();
    let mut e = f.to_vec();
    for (&i, v) in layers.rest.iter().zip(values) {
        e[i] = v;
    }
    Ok(e)
}
