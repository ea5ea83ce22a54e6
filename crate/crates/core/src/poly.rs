//! Dense univariate polynomials over a [`Field`], low degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division by zero")]
    DivisionByZero,
}

/// Degree of a polynomial. The zero polynomial sits below every finite
/// degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// `coeffs[i]` is the coefficient of `X^i`. The highest stored coefficient is
/// never zero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    coeffs: Vec<F>,
    ctx: F::Context,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>, ctx: &F::Context) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        Polynomial {
            coeffs,
            ctx: ctx.clone(),
        }
    }

    /// Coefficients given as small integers, low degree first.
    pub fn from_i64s(coeffs: &[i64], ctx: &F::Context) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c, ctx)).collect(), ctx)
    }

    pub fn zero(ctx: &F::Context) -> Self {
        Self::new(Vec::new(), ctx)
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.context();
        Self::new(vec![c], &ctx)
    }

    /// `c * X^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.context();
        let mut coeffs = vec![F::zero(&ctx); k];
        coeffs.push(c);
        Self::new(coeffs, &ctx)
    }

    /// Vieta expansion `prod_i (X - x_i) = sum_k (-1)^k e_k X^{n-k}`. Roots
    /// need not be distinct; the empty product is `1`.
    pub fn from_roots(roots: &[F], ctx: &F::Context) -> Self {
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(F::one(ctx));
        for r in roots {
            // multiply in place by (X - r)
            coeffs.push(F::zero(ctx));
            for i in (0..coeffs.len()).rev() {
                let lower = if i == 0 {
                    F::zero(ctx)
                } else {
                    coeffs[i - 1].clone()
                };
                coeffs[i] = lower - r.clone() * coeffs[i].clone();
            }
        }
        Self::new(coeffs, ctx)
    }

    pub fn context(&self) -> &F::Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            &self.ctx,
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(&self.ctx), |acc, c| acc * x.clone() + c.clone())
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lead = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = lead
            .inverse()
            .expect("leading coefficient of a trimmed polynomial is nonzero");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(&self.ctx); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top * lead_inv.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j].clone() - q.clone() * d.clone();
            }
            quot[shift] = q;
        }
        rem.truncate(dlen - 1);
        Ok((Self::new(quot, &self.ctx), Self::new(rem, &self.ctx)))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})X")?,
                _ => write!(f, "({c})X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs, &self.ctx)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs, &self.ctx)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial::new(
            self.coeffs.iter().cloned().map(Neg::neg).collect(),
            &self.ctx,
        )
    }
}

/// Schoolbook convolution.
impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out, &self.ctx)
    }
}
