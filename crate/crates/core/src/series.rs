//! Truncated power series with exact rational coefficients.
//!
//! A series of order `N` knows its coefficients `c_0..=c_N` and nothing
//! beyond. Every operation returns a series whose order is the largest one
//! that is still exact: products take the smaller order, differentiation
//! loses one, integration gains one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the series is read as a generating function. Stored coefficients are
/// always `[x^n]`; an exponential series reports `n! [x^n]` as its counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    Ordinary,
    Exponential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
    flavor: Flavor,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalSeries {
    /// Coefficients `c_0..=c_N`; at least one must be given.
    pub fn new(coeffs: Vec<BigRational>, flavor: Flavor) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        RationalSeries { coeffs, flavor }
    }

    pub fn from_integers<I: Into<BigInt>>(values: impl IntoIterator<Item = I>, flavor: Flavor) -> Self {
        Self::new(
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
            flavor,
        )
    }

    /// EGF whose `n`-th normalized coefficient `n! c_n` is `values[n]`.
    pub fn from_egf_counts<I: Into<BigInt>>(values: impl IntoIterator<Item = I>) -> Self {
        Self::new(
            values
                .into_iter()
                .enumerate()
                .map(|(n, v)| BigRational::new(v.into(), BigInt::from(factorial(n))))
                .collect(),
            Flavor::Exponential,
        )
    }

    pub fn zero(order: usize, flavor: Flavor) -> Self {
        Self::new(vec![BigRational::zero(); order + 1], flavor)
    }

    pub fn constant(c: BigRational, order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize, flavor: Flavor) -> Self {
        Self::constant(BigRational::one(), order, flavor)
    }

    /// The series `x`.
    pub fn x(order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// `sin x` to the given order.
    pub fn sine(order: usize, flavor: Flavor) -> Self {
        Self::trig(order, 1, flavor)
    }

    /// `cos x` to the given order.
    pub fn cosine(order: usize, flavor: Flavor) -> Self {
        Self::trig(order, 0, flavor)
    }

    fn trig(order: usize, parity: usize, flavor: Flavor) -> Self {
        let coeffs = (0..=order)
            .map(|n| {
                if n % 2 != parity {
                    return BigRational::zero();
                }
                let sign = if n / 2 % 2 == 0 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), factorial(n).into())
            })
            .collect();
        Self::new(coeffs, flavor)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `[x^n]`, or `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), self.flavor)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.flavor)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0, self.flavor);
        }
        Self::new(
            (1..=self.order())
                .map(|n| &self.coeffs[n] * rat(n as i64))
                .collect(),
            self.flavor,
        )
    }

    /// Antiderivative with the given constant term; order grows by one.
    pub fn integral(&self, constant: BigRational) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(constant);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a / rat(n as i64 + 1)),
        );
        Self::new(coeffs, self.flavor)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.order(), self.flavor);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `exp(self)` for a series with zero constant term, via `E' = S' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let n_max = self.order();
        let mut e: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        e.push(BigRational::one());
        for n in 0..n_max {
            let mut acc = BigRational::zero();
            for i in 0..=n {
                acc += &self.coeffs[i + 1] * rat(i as i64 + 1) * &e[n - i];
            }
            e.push(acc / rat(n as i64 + 1));
        }
        Ok(Self::new(e, self.flavor))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Series("series with zero constant term is not a unit".into()));
        }
        let inv0 = a0.recip();
        let mut b: Vec<BigRational> = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &b[n - i];
            }
            b.push(-acc * &inv0);
        }
        Ok(Self::new(b, self.flavor))
    }

    /// `self(inner(x))` for `inner` with zero constant term.
    pub fn compose(&self, inner: &RationalSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series("inner series must have zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut out = Self::constant(self.coeffs[order].clone(), order, inner.flavor);
        for c in self.coeffs[..order].iter().rev() {
            out = &out * &inner;
            out.coeffs[0] += c;
        }
        out.flavor = self.flavor;
        Ok(out)
    }

    /// `n! [x^n]` when it is an integer.
    pub fn egf_integer(&self, n: usize) -> Option<BigInt> {
        let scaled = self.coeffs.get(n)? * BigRational::from_integer(factorial(n).into());
        scaled.is_integer().then(|| scaled.to_integer())
    }

    /// `n! [x^n]` for every `n` up to the order; fails on the first
    /// non-integral value.
    pub fn egf_counts(&self) -> Result<Vec<BigInt>> {
        (0..=self.order())
            .map(|n| {
                self.egf_integer(n)
                    .ok_or_else(|| Error::Series(format!("n! [x^{n}] is not an integer")))
            })
            .collect()
    }

    /// Ordinary coefficients as integers; fails on the first non-integer.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                c.is_integer()
                    .then(|| c.to_integer())
                    .ok_or_else(|| Error::Series(format!("[x^{n}] is not an integer")))
            })
            .collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        assert_eq!(self.flavor, other.flavor, "mixing ordinary and exponential series");
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
            self.flavor,
        )
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;

    fn neg(self) -> RationalSeries {
        RationalSeries::new(self.coeffs.iter().map(|c| -c).collect(), self.flavor)
    }
}

/// Cauchy product of the coefficient sequences. Both flavors use the same
/// product since the `n!` normalization is only an interpretation.
impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        assert_eq!(self.flavor, rhs.flavor, "mixing ordinary and exponential series");
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalSeries::new(out, self.flavor)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let c = c.abs();
            match (n, self.flavor) {
                (0, _) => write!(f, "{c}")?,
                (_, Flavor::Ordinary) => write!(f, "{c} x^{n}")?,
                (_, Flavor::Exponential) => write!(f, "{c} x^{n}/{n}!")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
