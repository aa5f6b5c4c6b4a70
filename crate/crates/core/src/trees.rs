//! Label-increasing trees with bounded branching and their generating
//! functions.
//!
//! A tree on labels `0..n` with root `0` is stored as its parent map; parents
//! are always smaller than their children, so a parent map is literally an
//! inversion sequence of length `n - 1`. Bounding the number of children by
//! `k` is the same as letting each value occur at most `k` times, which is
//! avoidance of `0^(k+1)`; bounding every vertex except the root is
//! avoidance of `0 1^(k+1)`.
//!
//! `T_k` is the EGF of the bounded trees and solves `T' = sum_{i<=k} (T-1)^i / i!`
//! with `T(0) = 1`. Trees whose root is unbounded are a root over a set of
//! bounded trees, so `exp(T_k - 1)` has `n! [x^n] = |L'_{n+1,k}|`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::count_by_length;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::sequence::{all_sequences, BoundSet, SInvSeq};
use crate::series::{factorial, Flavor, RationalSeries};

/// A rooted label-increasing tree on labels `0..vertex_count()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelTree {
    /// `parents[v - 1]` is the parent of label `v`.
    parents: Vec<u32>,
}

impl LabelTree {
    pub fn new(parents: Vec<u32>) -> Result<Self> {
        for (i, &p) in parents.iter().enumerate() {
            let label = i + 1;
            if p as usize >= label {
                return Err(Error::InvalidParent { label, parent: p });
            }
        }
        Ok(LabelTree { parents })
    }

    /// The single-vertex tree.
    pub fn root_only() -> Self {
        LabelTree { parents: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn parent(&self, label: usize) -> Option<u32> {
        label.checked_sub(1).and_then(|i| self.parents.get(i).copied())
    }

    pub fn child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.vertex_count()];
        self.parents.iter().for_each(|&p| counts[p as usize] += 1);
        counts
    }

    pub fn max_branching(&self) -> usize {
        self.child_counts().into_iter().max().unwrap_or(0)
    }

    /// Largest child count over the non-root vertices.
    pub fn max_nonroot_branching(&self) -> usize {
        self.child_counts().into_iter().skip(1).max().unwrap_or(0)
    }

    /// The inversion sequence `e` with `e_i = parent(i)`.
    pub fn to_invseq(&self) -> SInvSeq {
        SInvSeq::inversion(self.parents.clone()).expect("parents precede children")
    }

    pub fn from_invseq(e: &SInvSeq) -> Result<Self> {
        if !e.is_inversion_sequence() {
            return Err(Error::Hypothesis("tree encoding needs bounds 1..=n".into()));
        }
        LabelTree::new(e.entries().to_vec())
    }
}

/// Exhaustive count of trees on `vertices` labels whose branching is at
/// most `k` (at every vertex, or at every non-root vertex when
/// `root_unbounded`). Zero vertices count as one empty tree.
pub fn count_trees_exhaustive(vertices: usize, k: usize, root_unbounded: bool) -> u64 {
    if vertices == 0 {
        return 1;
    }
    all_sequences(&BoundSet::interval(vertices - 1))
        .filter(|parents| {
            let tree = LabelTree::new(parents.clone()).expect("inversion sequence");
            if root_unbounded {
                tree.max_nonroot_branching() <= k
            } else {
                tree.max_branching() <= k
            }
        })
        .count() as u64
}

/// `T_k` to the given order, solved coefficient by coefficient.
pub fn series_tk(k: usize, order: usize) -> RationalSeries {
    let inv_fact: Vec<BigRational> = (0..=k)
        .map(|i| BigRational::new(BigInt::one(), factorial(i).into()))
        .collect();
    let mut coeffs = vec![BigRational::one()];
    for n in 0..order {
        // [x^n] T' depends only on t_0..t_n.
        let mut shifted = coeffs.clone();
        shifted[0] = BigRational::zero();
        let u = RationalSeries::new(shifted, Flavor::Exponential);
        let mut power = RationalSeries::one(n, Flavor::Exponential);
        let mut rhs = BigRational::zero();
        for c in &inv_fact {
            rhs += c * &power.coeffs()[n];
            power = &power * &u;
        }
        coeffs.push(rhs / BigRational::from_integer(BigInt::from(n + 1)));
    }
    RationalSeries::new(coeffs, Flavor::Exponential)
}

/// `R_k = exp(T_k - 1)`.
pub fn series_rk(k: usize, order: usize) -> RationalSeries {
    let t = series_tk(k, order);
    (&t - &RationalSeries::one(order, Flavor::Exponential))
        .exp()
        .expect("zero constant term")
}

/// `|L_{n,k}| = n! [x^n] T_k`.
pub fn count_trees_bounded(n: usize, k: usize) -> BigUint {
    series_tk(k, n)
        .egf_integer(n)
        .and_then(|v| v.to_biguint())
        .expect("tree counts are nonnegative integers")
}

/// `|L'_{n,k}| = (n-1)! [x^(n-1)] R_k`, for `n >= 1`.
pub fn count_trees_root_unbounded(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("a tree with an unbounded root needs a root".into()));
    }
    Ok(series_rk(k, n - 1)
        .egf_integer(n - 1)
        .and_then(|v| v.to_biguint())
        .expect("tree counts are nonnegative integers"))
}

/// `c_{m,k} = (1/m!) sum_{j=0}^{k-m} (-1)^j k!/j!` for `m = 0..=k-2`.
pub fn c_coefficients(k: usize) -> Result<Vec<BigRational>> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("c coefficients need k >= 2, got {k}")));
    }
    let k_fact = BigInt::from(factorial(k));
    Ok((0..=k - 2)
        .map(|m| {
            let sum: BigInt = (0..=k - m)
                .map(|j| {
                    let term = &k_fact / BigInt::from(factorial(j));
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            BigRational::new(sum, factorial(m).into())
        })
        .collect())
}

fn binomial_power(m: usize, order: usize) -> RationalSeries {
    // (x + 1)^m
    let x_plus_one = &RationalSeries::x(order, Flavor::Ordinary) + &RationalSeries::one(order, Flavor::Ordinary);
    x_plus_one.pow(m)
}

/// Checks `k! sum_{j<=k} x^j/j! = (x+1)^k + sum_m c_{m,k} (x+1)^m` as an
/// exact polynomial identity.
pub fn c_identity_holds(k: usize) -> Result<bool> {
    let c = c_coefficients(k)?;
    let k_fact = BigInt::from(factorial(k));
    let lhs = RationalSeries::new(
        (0..=k)
            .map(|j| BigRational::new(k_fact.clone(), factorial(j).into()))
            .collect(),
        Flavor::Ordinary,
    );
    let mut rhs = binomial_power(k, k);
    for (m, cm) in c.iter().enumerate() {
        rhs = &rhs + &binomial_power(m, k).scale(cm);
    }
    Ok(lhs == rhs)
}

/// Checks `k! T_k' = T_k^k + sum_m c_{m,k} T_k^m` coefficientwise up to `order`.
pub fn c_form_matches_ode(k: usize, order: usize) -> Result<bool> {
    let c = c_coefficients(k)?;
    let t = series_tk(k, order + 1);
    let lhs = t.derivative().scale(&BigRational::from_integer(factorial(k).into()));
    let t = t.truncate(order);
    let mut rhs = t.pow(k);
    for (m, cm) in c.iter().enumerate() {
        rhs = &rhs + &t.pow(m).scale(cm);
    }
    Ok(lhs == rhs)
}

/// `D^n(e^x)` at `x = 0` for `n = 0..=n_max`, where
/// `D = (sum_{j<=k} x^j/j!) d/dx`. Computed on polynomials `p_n` with
/// `D^n e^x = p_n e^x`, independently of the series route; the values are
/// `|L'_{n+1,k}|`.
pub fn operator_counts(k: usize, n_max: usize) -> Vec<BigInt> {
    let q: Vec<BigRational> = (0..=k)
        .map(|j| BigRational::new(BigInt::one(), factorial(j).into()))
        .collect();
    let mut p: Vec<BigRational> = vec![BigRational::one()];
    let mut out = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        let value = &p[0];
        assert!(value.is_integer());
        out.push(value.to_integer());
        // p <- q (p' + p)
        let mut inner = p.clone();
        for i in 1..p.len() {
            inner[i - 1] += &p[i] * BigRational::from_integer(BigInt::from(i));
        }
        let mut next = vec![BigRational::zero(); inner.len() + q.len() - 1];
        for (i, a) in inner.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        p = next;
    }
    out
}

/// Outcome of checking `1/((1 - A)(1 + A)^2) = 1 - x` for the ordinary
/// generating function of `A_n = |I_n(0021)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquationReport {
    /// `A_1..=A_{n_max}`.
    pub terms: Vec<BigUint>,
    /// Coefficients `0..=n_max` of the left-hand side.
    pub lhs: Vec<BigRational>,
    /// First coefficient that differs from `1 - x`.
    pub first_failure: Option<usize>,
}

impl FunctionalEquationReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn functional_equation_report(terms: &[BigUint]) -> FunctionalEquationReport {
    let n_max = terms.len();
    let mut coeffs = vec![BigRational::zero()];
    coeffs.extend(terms.iter().map(|t| BigRational::from_integer(BigInt::from(t.clone()))));
    let a = RationalSeries::new(coeffs, Flavor::Ordinary);
    let one = RationalSeries::one(n_max, Flavor::Ordinary);
    let one_plus = &one + &a;
    let denominator = &(&one - &a) * &(&one_plus * &one_plus);
    let lhs = denominator.inverse().expect("constant term is 1");
    let target = &one - &RationalSeries::x(n_max, Flavor::Ordinary);
    let first_failure = (0..=n_max).find(|&n| lhs.coeffs()[n] != target.coeffs()[n]);
    FunctionalEquationReport {
        terms: terms.to_vec(),
        lhs: lhs.coeffs().to_vec(),
        first_failure,
    }
}

/// Enumerates `|I_n(0021)|` for `n <= n_max` and checks the functional
/// equation modulo `x^(n_max+1)`.
pub fn check_0021_conjecture(n_max: usize) -> Result<FunctionalEquationReport> {
    if n_max == 0 {
        return Err(Error::OutOfRange("n_max must be at least 1".into()));
    }
    let p: Pattern = "0021".parse()?;
    let levels = count_by_length(&BoundSet::interval(n_max), &p);
    let terms: Vec<BigUint> = levels[1..].iter().map(|&c| c.into()).collect();
    Ok(functional_equation_report(&terms))
}
