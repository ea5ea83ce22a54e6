use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Field, FieldError, FieldKind};

/// Arbitrary precision fraction, always fully reduced with a positive
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the reduced representative of `num / den`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, FieldError> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Correctly rounded `f64`; out of range values become infinite.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The exact dyadic rational represented by a finite `f64`.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Rational)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int =
            |t: &str| BigInt::from_str(t.trim()).map_err(|_| FieldError::Parse(s.to_string()));
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    type Context = ();

    const KIND: FieldKind = FieldKind::Rational;

    fn context(&self) {}

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Self::from_integer(1)
    }

    fn from_i64(value: i64, _: &()) -> Self {
        Self::from_integer(value)
    }

    fn from_rational(value: &Rational, _: &()) -> Result<Self, FieldError> {
        Ok(value.clone())
    }

    fn approx(&self) -> Option<f64> {
        Some(self.to_f64())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> Result<Self, FieldError> {
        if self.0.is_zero() {
            return Err(FieldError::NotInvertible);
        }
        Ok(Rational(self.0.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalize_sign_and_gcd() {
        let r = q(6, -4);
        assert_eq!(
            (r.numer().clone(), r.denom().clone()),
            (BigInt::from(-3), BigInt::from(2))
        );
        assert_eq!(q(6, -4).to_string(), "-3/2");
        assert_eq!(q(21, 14).to_string(), "3/2");
    }

    #[test]
    fn zero_is_unique() {
        let z = q(0, 7);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z, q(0, -3));
        assert_eq!(q(1, 2) - q(2, 4), Rational::zero(&()));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(1, 0), Err(FieldError::DivisionByZero));
        assert!("3/0".parse::<Rational>().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(q(3, 2).inverse().unwrap(), q(2, 3));
        assert_eq!(q(-3, 2).inverse().unwrap(), q(-2, 3));
        assert_eq!(q(1, 1).inverse().unwrap(), q(1, 1));
        assert_eq!(
            Rational::zero(&()).inverse(),
            Err(FieldError::NotInvertible)
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(q(2, 1).pow(10), q(1024, 1));
        assert_eq!(Rational::zero(&()).pow(0), q(1, 1));
        assert_eq!(q(-1, 2).pow(3), q(-1, 8));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-6/4".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!(" 12 ".parse::<Rational>().unwrap(), q(12, 1));
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(q(7, 1).to_string(), "7");
    }

    #[test]
    fn f64_conversions() {
        assert_eq!(Rational::from_f64(0.75).unwrap(), q(3, 4));
        assert_eq!(Rational::from_f64(-1024.0).unwrap(), q(-1024, 1));
        assert_eq!(
            Rational::from_f64(f64::MIN_POSITIVE * 0.5)
                .unwrap()
                .to_f64(),
            f64::MIN_POSITIVE * 0.5
        );
        assert!(Rational::from_f64(f64::NAN).is_none());
        assert_eq!(q(1, 3).to_f64(), 1.0 / 3.0);
        assert_eq!(q(-25, 1).to_f64(), -25.0);
    }

    proptest! {
        #[test]
        fn add_matches_cross_multiplication(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            prop_assert_eq!(q(a, b) + q(c, d), q(a * d + c * b, b * d));
        }

        #[test]
        fn field_axioms(a in (-30i64..30, 1i64..30), b in (-30i64..30, 1i64..30), c in (-30i64..30, 1i64..30)) {
            let (a, b, c) = (q(a.0, a.1), q(b.0, b.1), q(c.0, c.1));
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
            prop_assert!((a.clone() + (-a.clone())).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inverse().unwrap(), q(1, 1));
            }
        }

        #[test]
        fn f64_round_trip(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            prop_assert_eq!(Rational::from_f64(x).unwrap().to_f64(), x);
        }
    }
}
