//! Empirical Wilf classes.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::count_by_length;
use crate::pattern::Pattern;
use crate::sequence::BoundSet;

/// `|I_n(p)|` for `n = 1..=n_max`; `counts[0]` is `n = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountVector {
    pub pattern: Pattern,
    pub counts: Vec<BigUint>,
}

/// Patterns sharing one count vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfClass {
    pub patterns: Vec<Pattern>,
    pub counts: Vec<BigUint>,
}

impl WilfClass {
    pub fn contains(&self, p: &Pattern) -> bool {
        self.patterns.contains(p)
    }
}

/// Every canonical word of the given length, in lexicographic order.
pub fn canonical_patterns(length: usize) -> Vec<Pattern> {
    fn extend(word: &mut Vec<u32>, length: usize, out: &mut Vec<Pattern>) {
        if word.len() == length {
            let max = word.iter().copied().max().unwrap_or(0);
            let mut present = vec![false; max as usize + 1];
            word.iter().for_each(|&v| present[v as usize] = true);
            if present.into_iter().all(|b| b) {
                out.push(Pattern::new(word).expect("nonempty"));
            }
            return;
        }
        for v in 0..length as u32 {
            word.push(v);
            extend(word, length, out);
            word.pop();
        }
    }
    assert!(length > 0, "pattern length must be positive");
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(length), length, &mut out);
    out
}

pub fn count_vector(p: &Pattern, n_max: usize) -> CountVector {
    let levels = count_by_length(&BoundSet::interval(n_max), p);
    CountVector {
        pattern: p.clone(),
        counts: levels[1..].iter().map(|&c| BigUint::from(c)).collect(),
    }
}

/// Groups the given patterns by exact equality of their count vectors.
/// Classes are sorted by their smallest pattern, and patterns within a class
/// are sorted, so the result does not depend on input order.
pub fn classify_patterns(patterns: &[Pattern], n_max: usize) -> Vec<WilfClass> {
    let vectors: Vec<CountVector> = patterns
        .par_iter()
        .map(|p| count_vector(p, n_max))
        .collect();
    let mut groups: BTreeMap<Vec<BigUint>, Vec<Pattern>> = BTreeMap::new();
    for v in vectors {
        groups.entry(v.counts).or_default().push(v.pattern);
    }
    let mut classes: Vec<WilfClass> = groups
        .into_iter()
        .map(|(counts, mut patterns)| {
            patterns.sort();
            patterns.dedup();
            WilfClass { patterns, counts }
        })
        .collect();
    classes.sort_by(|a, b| a.patterns[0].cmp(&b.patterns[0]));
    classes
}

pub fn classify(length: usize, n_max: usize) -> Vec<WilfClass> {
    classify_patterns(&canonical_patterns(length), n_max)
}

/// Smallest `n <= n_max` with `|I_n(p)| != |I_n(q)|`.
pub fn first_divergence(p: &Pattern, q: &Pattern, n_max: usize) -> Option<usize> {
    if p == q {
        return None;
    }
    let a = count_by_length(&BoundSet::interval(n_max), p);
    let b = count_by_length(&BoundSet::interval(n_max), q);
    (1..=n_max).find(|&n| a[n] != b[n])
}
