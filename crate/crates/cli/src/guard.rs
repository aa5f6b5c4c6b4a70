//! Rough size estimates used to refuse long runs unless asked for.

/// Estimated node count above which `--allow-long` is required.
pub const LONG_RUN_NODES: f64 = 5.0e7;

/// Upper bound on the search nodes for `I_1, ..., I_n`: the sum of `m!`.
pub fn interval_nodes(n: usize) -> f64 {
    (1..=n).scan(1.0, |f, m| {
        *f *= m as f64;
        Some(*f)
    })
    .sum()
}

/// Total size of `I_S` over all `S ⊆ [n - 1]`, which is `n!`.
pub fn subset_nodes(n: usize) -> f64 {
    (1..=n).map(|m| m as f64).product()
}

/// Total size of `I_S` for one bound set.
pub fn set_nodes(bounds: &[u32]) -> f64 {
    bounds
        .iter()
        .scan(1.0, |p, &s| {
            *p *= s as f64;
            Some(*p)
        })
        .sum()
}

pub fn refuse(estimate: f64, allow_long: bool) -> Result<(), String> {
    if estimate > LONG_RUN_NODES && !allow_long {
        Err(format!(
            "estimated {estimate:.2e} search nodes exceeds {LONG_RUN_NODES:.0e}; pass --allow-long to run anyway"
        ))
    } else {
        Ok(())
    }
}
