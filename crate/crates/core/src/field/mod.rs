//! Field abstraction and its three realizations.
//!
//! Every algorithm in this crate is generic over [`Field`]. A field value
//! carries its own [`Field::Context`] (for `F_p` that is the modulus), so
//! nothing is ambient: constants such as zero and one are always built from
//! an explicit context.

mod float;
mod prime;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use float::Float64;
pub use prime::{PrimeField, PrimeModulus, MERSENNE_61};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("prime modulus {p} is too small for {n} distinct nodes")]
    ModulusTooSmall { p: u64, n: usize },
    #[error("{value} has a denominator divisible by {p}")]
    DenominatorVanishes { value: String, p: u64 },
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
}

/// Which realization a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Prime,
    Float64,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Rational => "rational",
            FieldKind::Prime => "prime",
            FieldKind::Float64 => "float64",
        })
    }
}

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Context: Clone + fmt::Debug + PartialEq + Send + Sync;

    const KIND: FieldKind;

    fn context(&self) -> Self::Context;

    fn zero(ctx: &Self::Context) -> Self;

    fn one(ctx: &Self::Context) -> Self;

    fn from_i64(value: i64, ctx: &Self::Context) -> Self;

    /// Image of an exact rational. Fails in `F_p` when the denominator is a
    /// multiple of `p`.
    fn from_rational(value: &Rational, ctx: &Self::Context) -> Result<Self, FieldError>;

    fn is_zero(&self) -> bool;

    /// Multiplicative inverse; `a * a.inverse()? == 1`.
    fn inverse(&self) -> Result<Self, FieldError>;

    /// Parses the textual form produced by `Display`, plus `p/q` fractions.
    fn parse(text: &str, ctx: &Self::Context) -> Result<Self, FieldError> {
        let q: Rational = text.trim().parse()?;
        Self::from_rational(&q, ctx)
    }

    /// Nearest `f64`, where the realization has one (not in `F_p`).
    fn approx(&self) -> Option<f64> {
        None
    }

    fn is_exact() -> bool {
        Self::KIND != FieldKind::Float64
    }

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * rhs.inverse()?)
    }

    /// `self^k` by square and multiply. `0^0 = 1`.
    fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::one(&self.context());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `(-1)^k` in this field.
    fn sign(k: usize, ctx: &Self::Context) -> Self {
        if k.is_multiple_of(2) {
            Self::one(ctx)
        } else {
            -Self::one(ctx)
        }
    }
}

/// Runtime choice of field, as selected on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum FieldConfig {
    #[default]
    Rational,
    Prime(PrimeModulus),
    Float64,
}

impl FieldConfig {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Ok(FieldConfig::Prime(PrimeModulus::new(p)?))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldConfig::Rational => FieldKind::Rational,
            FieldConfig::Prime(_) => FieldKind::Prime,
            FieldConfig::Float64 => FieldKind::Float64,
        }
    }

    /// A prime field needs more than `n` elements to host `n` distinct nodes.
    pub fn check_node_count(&self, n: usize) -> Result<(), FieldError> {
        match self {
            FieldConfig::Prime(m) if (m.get() as u128) <= n as u128 => {
                Err(FieldError::ModulusTooSmall { p: m.get(), n })
            }
            _ => Ok(()),
        }
    }
}
