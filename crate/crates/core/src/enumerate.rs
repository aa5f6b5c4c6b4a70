//! Counting and enumerating pattern avoiders by pruned backtracking.
//!
//! Avoidance is hereditary, so the depth-first search only ever extends
//! prefixes that still avoid the pattern, and only has to test occurrences
//! ending at the newly appended entry. Parallel runs expand the first few
//! levels breadth-first and hand each surviving prefix to a rayon task; every
//! aggregate is a sum, so results do not depend on scheduling.

use num_bigint::BigUint;
use num_integer::binomial;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::{Matcher, Pattern};
use crate::sequence::{BoundSet, SInvSeq};

/// Rough lower bound on the number of parallel tasks to split into.
const MIN_TASKS: usize = 256;

/// Largest `n` accepted by [`theorem31_rhs`]; it sums over `2^(n-1)` subsets.
pub const MAX_SUBSET_SUM_N: usize = 25;

struct Search<'a> {
    bounds: &'a [u32],
    matcher: &'a Matcher,
}

impl Search<'_> {
    fn children(&self, prefix: &[u32], scratch: &mut Vec<u32>) -> impl Iterator<Item = u32> + '_ {
        let depth = prefix.len();
        let bound = self.bounds[depth];
        let admissible: Vec<u32> = (0..bound)
            .filter(|&v| !self.matcher.completes_with(prefix, v, scratch))
            .collect();
        admissible.into_iter()
    }

    /// Adds, for each depth `d >= prefix.len()`, the number of avoiders of
    /// length `d` extending `prefix`.
    fn count_levels(&self, prefix: &mut Vec<u32>, levels: &mut [u64], scratch: &mut Vec<u32>) {
        let depth = prefix.len();
        levels[depth] += 1;
        if depth == self.bounds.len() {
            return;
        }
        for v in 0..self.bounds[depth] {
            if self.matcher.completes_with(prefix, v, scratch) {
                continue;
            }
            prefix.push(v);
            self.count_levels(prefix, levels, scratch);
            prefix.pop();
        }
    }

    fn visit_leaves<F: FnMut(&[u32])>(&self, prefix: &mut Vec<u32>, scratch: &mut Vec<u32>, f: &mut F) {
        let depth = prefix.len();
        if depth == self.bounds.len() {
            f(prefix);
            return;
        }
        for v in 0..self.bounds[depth] {
            if self.matcher.completes_with(prefix, v, scratch) {
                continue;
            }
            prefix.push(v);
            self.visit_leaves(prefix, scratch, f);
            prefix.pop();
        }
    }

    /// Breadth-first expansion until there are enough prefixes to spread
    /// across threads. Returns the prefixes and the per-level counts of all
    /// levels strictly above them.
    fn frontier(&self) -> (Vec<Vec<u32>>, Vec<u64>) {
        let mut above = vec![0u64; self.bounds.len() + 1];
        let mut layer = vec![Vec::new()];
        let mut scratch = Vec::new();
        while layer.len() < MIN_TASKS && layer.first().is_some_and(|p| p.len() < self.bounds.len()) {
            above[layer[0].len()] += layer.len() as u64;
            let mut next = Vec::new();
            for prefix in &layer {
                for v in self.children(prefix, &mut scratch) {
                    let mut child = prefix.clone();
                    child.push(v);
                    next.push(child);
                }
            }
            if next.is_empty() {
                return (Vec::new(), above);
            }
            layer = next;
        }
        (layer, above)
    }
}

/// Avoider counts of every prefix length: entry `d` is `|I_{S_d}(p)|` where
/// `S_d` is the first `d` elements of `bounds`.
pub fn count_by_length(bounds: &BoundSet, p: &Pattern) -> Vec<u64> {
    let matcher = Matcher::new(p);
    let search = Search {
        bounds: bounds.elements(),
        matcher: &matcher,
    };
    let (frontier, above) = search.frontier();
    let n = bounds.len();
    let below = frontier
        .into_par_iter()
        .map(|mut prefix| {
            let mut levels = vec![0u64; n + 1];
            let mut scratch = Vec::new();
            search.count_levels(&mut prefix, &mut levels, &mut scratch);
            levels
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    above.iter().zip(below).map(|(a, b)| a + b).collect()
}

/// `|I_S(p)|`.
pub fn count_avoiders(bounds: &BoundSet, p: &Pattern) -> BigUint {
    BigUint::from(*count_by_length(bounds, p).last().expect("n + 1 levels"))
}

/// Single-threaded count, used inside already-parallel loops.
pub fn count_avoiders_serial(bounds: &BoundSet, p: &Pattern) -> u64 {
    let matcher = Matcher::new(p);
    let search = Search {
        bounds: bounds.elements(),
        matcher: &matcher,
    };
    let mut count = 0u64;
    search.visit_leaves(&mut Vec::new(), &mut Vec::new(), &mut |_| count += 1);
    count
}

/// Parallel fold over every avoider of full length. `merge` must be
/// associative and commutative.
pub fn fold_avoiders<T, I, V, M>(bounds: &BoundSet, p: &Pattern, init: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[u32]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let matcher = Matcher::new(p);
    let search = Search {
        bounds: bounds.elements(),
        matcher: &matcher,
    };
    let (frontier, _) = search.frontier();
    frontier
        .into_par_iter()
        .map(|mut prefix| {
            let mut acc = init();
            let mut scratch = Vec::new();
            search.visit_leaves(&mut prefix, &mut scratch, &mut |leaf| visit(&mut acc, leaf));
            acc
        })
        .reduce(&init, &merge)
}

/// Lazily yields `I_S(p)` in lexicographic order.
pub fn enumerate_avoiders(bounds: &BoundSet, p: &Pattern) -> Avoiders {
    Avoiders {
        bounds: bounds.clone(),
        matcher: Matcher::new(p),
        prefix: Vec::with_capacity(bounds.len()),
        cursor: vec![0; bounds.len() + 1],
        scratch: Vec::new(),
        done: false,
    }
}

/// Iterator returned by [`enumerate_avoiders`].
pub struct Avoiders {
    bounds: BoundSet,
    matcher: Matcher,
    prefix: Vec<u32>,
    /// Next value to try at each depth.
    cursor: Vec<u32>,
    scratch: Vec<u32>,
    done: bool,
}

impl Avoiders {
    fn backtrack(&mut self) -> bool {
        match self.prefix.pop() {
            Some(last) => {
                self.cursor[self.prefix.len()] = last + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for Avoiders {
    type Item = SInvSeq;

    fn next(&mut self) -> Option<SInvSeq> {
        if self.done {
            return None;
        }
        let n = self.bounds.len();
        loop {
            let depth = self.prefix.len();
            if depth == n {
                let out = SInvSeq::from_parts_unchecked(self.prefix.clone(), self.bounds.clone());
                if !self.backtrack() {
                    self.done = true;
                }
                return Some(out);
            }
            let bound = self.bounds.elements()[depth];
            let mut v = self.cursor[depth];
            while v < bound && self.matcher.completes_with(&self.prefix, v, &mut self.scratch) {
                v += 1;
            }
            if v < bound {
                self.prefix.push(v);
                self.cursor[depth + 1] = 0;
            } else if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Right-hand side of the subset-sum identity: for `pi = 0 · suffix` with
/// every suffix entry positive, `|I_n(pi)| = sum over S ⊆ [n-1] of |I_S(suffix)|`.
///
/// `suffix` is given as a raw word; a zero entry violates the hypothesis.
pub fn theorem31_rhs(n: usize, suffix: &[u32]) -> Result<BigUint> {
    if n == 0 || n > MAX_SUBSET_SUM_N {
        return Err(Error::OutOfRange(format!(
            "subset sum needs 1 <= n <= {MAX_SUBSET_SUM_N}, got {n}"
        )));
    }
    if suffix.is_empty() || suffix.contains(&0) {
        return Err(Error::Hypothesis(
            "suffix must be nonempty with strictly positive entries".into(),
        ));
    }
    let p = Pattern::new(suffix)?;
    let total: u64 = (0..1u64 << (n - 1))
        .into_par_iter()
        .map(|mask| count_avoiders_serial(&BoundSet::from_mask(mask, n - 1), &p))
        .sum();
    Ok(BigUint::from(total))
}

/// The pattern `0 · (suffix)` whose count the subset sum reproduces.
pub fn lift_suffix(suffix: &[u32]) -> Result<Pattern> {
    let mut word = vec![0];
    word.extend(suffix.iter().map(|v| v + 1));
    Pattern::new(&word)
}

/// Number of binary words with `zeros` zeros and `ones` ones avoiding a
/// binary pattern of length `ell` that has exactly one zero:
/// `C(zeros + min(ones, ell - 2), zeros)`.
pub fn binary_avoider_formula(zeros: u64, ones: u64, ell: u64) -> Result<u64> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("pattern length {ell} < 2")));
    }
    Ok(binomial(zeros + ones.min(ell - 2), zeros))
}

/// Exhaustive count of the binary words with the given letter counts that
/// avoid `p`, which must be a binary pattern with exactly one zero.
pub fn count_binary_avoiders_bruteforce(zeros: usize, ones: usize, p: &Pattern) -> Result<u64> {
    let e = p.entries();
    if e.len() < 2 || e.iter().any(|&v| v > 1) || e.iter().filter(|&&v| v == 0).count() != 1 {
        return Err(Error::Hypothesis(format!(
            "{p} is not a binary pattern with exactly one zero"
        )));
    }
    let len = zeros + ones;
    if len > 63 {
        return Err(Error::OutOfRange(format!("word length {len} > 63")));
    }
    let matcher = Matcher::new(p);
    let mut word = vec![0u32; len];
    let mut count = 0;
    for mask in 0..1u64 << len {
        if mask.count_ones() as usize != ones {
            continue;
        }
        for (i, w) in word.iter_mut().enumerate() {
            *w = (mask >> i & 1) as u32;
        }
        if !matcher.occurs_in(&word) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::contains;
    use crate::sequence::all_sequences;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn brute_count(bounds: &BoundSet, p: &Pattern) -> u64 {
        all_sequences(bounds).filter(|e| !contains(e, p)).count() as u64
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_avoiders(&BoundSet::interval(3), &pat("000")), 5u32.into());
        assert_eq!(brute_count(&BoundSet::interval(3), &pat("000")), 5);
        assert_eq!(count_avoiders(&BoundSet::empty(), &pat("0")), 1u32.into());
        assert_eq!(count_avoiders(&BoundSet::empty(), &pat("3201")), 1u32.into());
        assert_eq!(count_avoiders(&BoundSet::interval(4), &pat("0000")), 23u32.into());
        assert_eq!(brute_count(&BoundSet::interval(4), &pat("0000")), 23);
        assert_eq!(count_avoiders(&BoundSet::interval(3), &pat("0")), 0u32.into());
    }

    #[test]
    fn counts_match_bruteforce_on_small_sets() {
        let patterns = ["000", "011", "021", "110", "201", "210", "0021", "1012", "3201"];
        for mask in 0..1u64 << 7 {
            let s = BoundSet::from_mask(mask, 7);
            for p in patterns.iter().map(|s| pat(s)) {
                let brute = brute_count(&s, &p);
                assert_eq!(count_avoiders_serial(&s, &p), brute, "{s} {p}");
                assert_eq!(count_avoiders(&s, &p), brute.into(), "{s} {p}");
            }
        }
    }

    #[test]
    fn count_by_length_matches_prefix_counts() {
        let p = pat("0021");
        let levels = count_by_length(&BoundSet::interval(8), &p);
        for (n, &c) in levels.iter().enumerate() {
            assert_eq!(c, brute_count(&BoundSet::interval(n), &p));
        }
    }

    #[test]
    fn enumeration_examples() {
        let one: Vec<_> = enumerate_avoiders(&BoundSet::interval(1), &pat("0000"))
            .map(SInvSeq::into_entries)
            .collect();
        assert_eq!(one, vec![vec![0]]);
        let two: Vec<_> = enumerate_avoiders(&BoundSet::interval(2), &pat("00"))
            .map(SInvSeq::into_entries)
            .collect();
        assert_eq!(two, vec![vec![0, 1]]);
        let three: Vec<_> = enumerate_avoiders(&BoundSet::interval(3), &pat("000"))
            .map(SInvSeq::into_entries)
            .collect();
        let expected: Vec<_> = all_sequences(&BoundSet::interval(3))
            .filter(|e| e != &[0, 0, 0])
            .collect();
        assert_eq!(three, expected);
        let empty: Vec<_> = enumerate_avoiders(&BoundSet::empty(), &pat("0")).collect();
        assert_eq!(empty.len(), 1);
        assert!(enumerate_avoiders(&BoundSet::interval(2), &pat("0")).next().is_none());
    }

    #[test]
    fn enumeration_is_strictly_increasing_and_complete() {
        let s = BoundSet::new(vec![1, 3, 4, 6, 7]).unwrap();
        for p in ["0212", "110", "3201", "0000"] {
            let p = pat(p);
            let items: Vec<Vec<u32>> = enumerate_avoiders(&s, &p).map(SInvSeq::into_entries).collect();
            assert!(items.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(items.len() as u64, count_avoiders_serial(&s, &p));
            let brute: Vec<_> = all_sequences(&s).filter(|e| !contains(e, &p)).collect();
            assert_eq!(items, brute);
            // hereditary: every prefix avoids
            for e in &items {
                for k in 0..e.len() {
                    assert!(!contains(&e[..k], &p));
                }
            }
        }
    }

    #[test]
    fn fold_visits_every_avoider_once() {
        let s = BoundSet::interval(7);
        let p = pat("2101");
        let (count, sum) = fold_avoiders(
            &s,
            &p,
            || (0u64, 0u64),
            |acc, e| {
                acc.0 += 1;
                acc.1 += e.iter().map(|&v| v as u64).sum::<u64>();
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        let brute: Vec<_> = enumerate_avoiders(&s, &p).collect();
        assert_eq!(count, brute.len() as u64);
        assert_eq!(
            sum,
            brute.iter().flat_map(|e| e.entries()).map(|&v| v as u64).sum::<u64>()
        );
    }

    #[test]
    fn subset_sum_examples() {
        assert_eq!(theorem31_rhs(1, &[1, 1]).unwrap(), 1u32.into());
        assert_eq!(count_avoiders(&BoundSet::interval(1), &pat("011")), 1u32.into());
        for (n, suffix) in [(4, vec![2, 1, 2]), (5, vec![2, 1])] {
            let lifted = lift_suffix(&suffix).unwrap();
            let direct = brute_count(&BoundSet::interval(n), &lifted);
            assert_eq!(theorem31_rhs(n, &suffix).unwrap(), direct.into());
        }
        assert!(matches!(theorem31_rhs(3, &[0, 1]), Err(Error::Hypothesis(_))));
        assert!(matches!(theorem31_rhs(0, &[1]), Err(Error::OutOfRange(_))));
        assert!(matches!(theorem31_rhs(26, &[1]), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn binary_formula_examples() {
        assert_eq!(binary_avoider_formula(2, 3, 3).unwrap(), 3);
        assert_eq!(count_binary_avoiders_bruteforce(2, 3, &pat("110")).unwrap(), 3);
        for k in 0..6 {
            for ell in 2..6 {
                assert_eq!(binary_avoider_formula(0, k, ell).unwrap(), 1);
            }
        }
        assert_eq!(binary_avoider_formula(5, 1, 4).unwrap(), 6);
        assert_eq!(count_binary_avoiders_bruteforce(1, 1, &pat("10")).unwrap(), 1);
        assert_eq!(count_binary_avoiders_bruteforce(3, 0, &pat("101")).unwrap(), 1);
        assert!(count_binary_avoiders_bruteforce(1, 1, &pat("100")).is_err());
        assert!(count_binary_avoiders_bruteforce(1, 1, &pat("012")).is_err());
        assert!(binary_avoider_formula(1, 1, 1).is_err());
    }
}
