use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{Field, FieldError, FieldKind, Rational};

/// `2^61 - 1`, the default modulus.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// An odd prime, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn element(self, value: u64) -> PrimeField {
        PrimeField {
            residue: value % self.0,
            modulus: self,
        }
    }
}

impl Default for PrimeModulus {
    fn default() -> Self {
        PrimeModulus(MERSENNE_61)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Residue modulo an odd prime. The modulus travels with the value; mixing
/// residues of different moduli is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    residue: u64,
    modulus: PrimeModulus,
}

impl PrimeField {
    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    fn p(self) -> u64 {
        self.modulus.0
    }

    fn same_field(self, other: Self) {
        assert_eq!(self.modulus, other.modulus, "mixed prime moduli");
    }

    fn from_bigint(value: &BigInt, m: PrimeModulus) -> Self {
        let r = value.mod_floor_u64(m.0);
        m.element(r)
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        let r = (self.abs() % m).to_u64().expect("remainder below modulus");
        if self.is_negative() && r != 0 {
            m - r
        } else {
            r
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus.0)
    }
}

impl Add for PrimeField {
    type Output = PrimeField;

    fn add(self, rhs: PrimeField) -> PrimeField {
        self.same_field(rhs);
        let s = self.residue as u128 + rhs.residue as u128;
        PrimeField {
            residue: (s % self.p() as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeField {
    type Output = PrimeField;

    fn sub(self, rhs: PrimeField) -> PrimeField {
        self + (-rhs)
    }
}

impl Mul for PrimeField {
    type Output = PrimeField;

    fn mul(self, rhs: PrimeField) -> PrimeField {
        self.same_field(rhs);
        PrimeField {
            residue: mul_mod(self.residue, rhs.residue, self.p()),
            modulus: self.modulus,
        }
    }
}

impl Neg for PrimeField {
    type Output = PrimeField;

    fn neg(self) -> PrimeField {
        let residue = if self.residue == 0 {
            0
        } else {
            self.p() - self.residue
        };
        PrimeField { residue, ..self }
    }
}

impl Field for PrimeField {
    type Context = PrimeModulus;

    const KIND: FieldKind = FieldKind::Prime;

    fn context(&self) -> PrimeModulus {
        self.modulus
    }

    fn zero(ctx: &PrimeModulus) -> Self {
        ctx.element(0)
    }

    fn one(ctx: &PrimeModulus) -> Self {
        ctx.element(1)
    }

    fn from_i64(value: i64, ctx: &PrimeModulus) -> Self {
        let r = (value as i128).rem_euclid(ctx.0 as i128) as u64;
        ctx.element(r)
    }

    fn from_rational(value: &Rational, ctx: &PrimeModulus) -> Result<Self, FieldError> {
        let num = Self::from_bigint(value.numer(), *ctx);
        let den = Self::from_bigint(value.denom(), *ctx);
        let inv = den.inverse().map_err(|_| FieldError::DenominatorVanishes {
            value: value.to_string(),
            p: ctx.0,
        })?;
        Ok(num * inv)
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    /// Extended Euclid on `(residue, p)`.
    fn inverse(&self) -> Result<Self, FieldError> {
        if self.residue == 0 {
            return Err(FieldError::NotInvertible);
        }
        let (mut r0, mut r1) = (self.p() as i128, self.residue as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(PrimeField {
            residue: t0.rem_euclid(self.p() as i128) as u64,
            modulus: self.modulus,
        })
    }

    fn pow(&self, k: u64) -> Self {
        PrimeField {
            residue: pow_mod(self.residue, k, self.p()),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7(v: u64) -> PrimeField {
        PrimeModulus::new(7).unwrap().element(v)
    }

    #[test]
    fn primality() {
        assert!(PrimeModulus::new(MERSENNE_61).is_ok());
        assert!(PrimeModulus::new(7).is_ok());
        assert_eq!(PrimeModulus::new(2), Err(FieldError::NotPrime(2)));
        assert_eq!(PrimeModulus::new(91), Err(FieldError::NotPrime(91)));
        // Strong pseudoprime to bases 2, 3, 5, 7.
        assert!(PrimeModulus::new(3_215_031_751).is_err());
        assert!(PrimeModulus::new(18_446_744_073_709_551_557).is_ok());
        assert!(PrimeModulus::new(u64::MAX).is_err());
    }

    #[test]
    fn inverse_mod_7() {
        assert_eq!(f7(3).inverse().unwrap(), f7(5));
        assert_eq!(f7(3) * f7(5), f7(1));
        assert_eq!(f7(0).inverse(), Err(FieldError::NotInvertible));
    }

    #[test]
    fn fermat_mod_7() {
        assert_eq!(f7(3).pow(6), f7(1));
        let mut acc = f7(1);
        for _ in 0..6 {
            acc = acc * f7(3);
        }
        assert_eq!(acc, f7(1));
        assert_eq!(f7(0).pow(0), f7(1));
    }

    #[test]
    fn negative_integers_reduce() {
        let m = PrimeModulus::new(7).unwrap();
        assert_eq!(PrimeField::from_i64(-1, &m), f7(6));
        assert_eq!(PrimeField::from_i64(-14, &m), f7(0));
    }

    #[test]
    fn rational_image() {
        let m = PrimeModulus::new(7).unwrap();
        let half = PrimeField::from_rational(&Rational::new(1, 2).unwrap(), &m).unwrap();
        assert_eq!(half, f7(4));
        let bad = PrimeField::from_rational(&Rational::new(1, 14).unwrap(), &m);
        assert!(matches!(bad, Err(FieldError::DenominatorVanishes { .. })));
        assert_eq!(PrimeField::parse("-3/2", &m).unwrap(), f7(2));
    }

    #[test]
    #[should_panic(expected = "mixed prime moduli")]
    fn mixed_moduli_panic() {
        let _ = f7(1) + PrimeModulus::new(11).unwrap().element(1);
    }

    fn big() -> PrimeModulus {
        PrimeModulus::default()
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0..MERSENNE_61, b in 0..MERSENNE_61, c in 0..MERSENNE_61) {
            let m = big();
            let (a, b, c) = (m.element(a), m.element(b), m.element(c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert!((a + (-a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inverse().unwrap(), PrimeField::one(&m));
                prop_assert_eq!(a.inverse().unwrap(), a.pow(MERSENNE_61 - 2));
            }
        }

        #[test]
        fn rationals_map_homomorphically(
            a in (-1000i64..1000, 1i64..1000),
            b in (-1000i64..1000, 1i64..1000),
        ) {
            let m = big();
            let qa = Rational::new(a.0, a.1).unwrap();
            let qb = Rational::new(b.0, b.1).unwrap();
            let img = |q: &Rational| PrimeField::from_rational(q, &m).unwrap();
            prop_assert_eq!(img(&(qa.clone() + qb.clone())), img(&qa) + img(&qb));
            prop_assert_eq!(img(&(qa.clone() * qb.clone())), img(&qa) * img(&qb));
            if !qa.is_zero() {
                prop_assert_eq!(img(&qa.inverse().unwrap()), img(&qa).inverse().unwrap());
            }
        }
    }
}
