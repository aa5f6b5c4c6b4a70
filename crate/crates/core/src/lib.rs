//! Pattern avoidance in inversion sequences.
//!
//! An inversion sequence of length `n` is a word `e_1 ... e_n` with
//! `0 <= e_i < i`; more generally, for a set `S = {s_1 < ... < s_n}` of
//! positive integers an S-inversion sequence has `0 <= e_i < s_i`. This crate
//! counts and enumerates the sequences avoiding a pattern, partitions
//! patterns into empirical Wilf classes, implements the layer
//! characterizations of 3210- and 3201-avoiders with the bijection between
//! them, and relates `0^k`- and `01^k`-avoiders to label-increasing trees
//! through exact rational generating functions.
//!
//! ```
//! use invseq::{count_avoiders, BoundSet, Pattern};
//!
//! let p: Pattern = "000".parse().unwrap();
//! assert_eq!(count_avoiders(&BoundSet::interval(5), &p), 61u32.into());
//! ```

pub mod bfile;
pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod pattern;
pub mod sequence;
pub mod series;
pub mod stats;
pub mod trees;
pub mod wilf;

pub use bfile::{BFile, Comparison};
pub use bijection::{
    is_3201_by_characterization, is_3210_by_partition, map_3201_to_3210, map_3210_to_3201,
    maxima_layers, second_max_values, weak_ltr_maxima, MaximaLayers, SecondMaxRule,
};
pub use enumerate::{
    binary_avoider_formula, count_avoiders, count_binary_avoiders_bruteforce, count_by_length,
    enumerate_avoiders, theorem31_rhs,
};
pub use error::{Error, Result};
pub use pattern::{contains, extend_avoids, order_isomorphic, Matcher, Pattern};
pub use sequence::{lehmer_decode, lehmer_encode, BoundSet, Permutation, SInvSeq};
pub use series::{Flavor, RationalSeries};
pub use stats::{
    initial_h_repeat, initial_non_inversion, initial_positive_set, refined_table,
    terminal_h_repeat, RefinedKey, RefinedTable, RefinementMode, Statistic,
};
pub use trees::{
    c_coefficients, check_0021_conjecture, count_trees_bounded, count_trees_root_unbounded,
    series_rk, series_tk, LabelTree,
};
pub use wilf::{canonical_patterns, classify, count_vector, first_divergence, CountVector, WilfClass};
