use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, FieldError, FieldKind, Rational};

/// `f64` behind the field interface. Only the stability benchmark computes
/// with it; exact identity checks never compare floats for equality.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Float64(pub f64);

impl Float64 {
    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Float64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Float64 {
    type Output = Float64;
    fn add(self, rhs: Float64) -> Float64 {
        Float64(self.0 + rhs.0)
    }
}

impl Sub for Float64 {
    type Output = Float64;
    fn sub(self, rhs: Float64) -> Float64 {
        Float64(self.0 - rhs.0)
    }
}

impl Mul for Float64 {
    type Output = Float64;
    fn mul(self, rhs: Float64) -> Float64 {
        Float64(self.0 * rhs.0)
    }
}

impl Neg for Float64 {
    type Output = Float64;
    fn neg(self) -> Float64 {
        Float64(-self.0)
    }
}

impl Field for Float64 {
    type Context = ();

    const KIND: FieldKind = FieldKind::Float64;

    fn context(&self) {}

    fn zero(_: &()) -> Self {
        Float64(0.0)
    }

    fn one(_: &()) -> Self {
        Float64(1.0)
    }

    fn from_i64(value: i64, _: &()) -> Self {
        Float64(value as f64)
    }

    fn from_rational(value: &Rational, _: &()) -> Result<Self, FieldError> {
        Ok(Float64(value.to_f64()))
    }

    fn approx(&self) -> Option<f64> {
        Some(self.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.0 == 0.0 {
            return Err(FieldError::NotInvertible);
        }
        Ok(Float64(1.0 / self.0))
    }

    fn parse(text: &str, _: &()) -> Result<Self, FieldError> {
        let text = text.trim();
        if let Ok(v) = text.parse::<f64>() {
            return Ok(Float64(v));
        }
        let q: Rational = text.parse()?;
        Ok(Float64(q.to_f64()))
    }
}
