use serde::{Deserialize, Serialize};

use super::IdentityKind;
use crate::field::{Field, FieldError, FieldKind};

/// Denominator floor for relative errors against a zero exact value.
pub const REL_ERROR_FLOOR: f64 = 1e-300;

/// `|approx - exact| / max(|exact|, REL_ERROR_FLOOR)`.
pub fn relative_error(approx: f64, exact: f64) -> f64 {
    (approx - exact).abs() / exact.abs().max(REL_ERROR_FLOOR)
}

/// One side of an identity: a single field element, or a coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub enum Value<F> {
    Scalar(F),
    Vector(Vec<F>),
}

impl<F: Field> Value<F> {
    fn components(&self) -> &[F] {
        match self {
            Value::Scalar(x) => std::slice::from_ref(x),
            Value::Vector(v) => v,
        }
    }

    pub fn as_scalar(&self) -> Option<&F> {
        match self {
            Value::Scalar(x) => Some(x),
            Value::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[F]> {
        match self {
            Value::Scalar(_) => None,
            Value::Vector(v) => Some(v),
        }
    }

    fn to_record(&self) -> RecordValue {
        match self {
            Value::Scalar(x) => RecordValue::Scalar(x.to_string()),
            Value::Vector(v) => RecordValue::Vector(v.iter().map(ToString::to_string).collect()),
        }
    }

    fn from_record(rec: &RecordValue, ctx: &F::Context) -> Result<Self, FieldError> {
        Ok(match rec {
            RecordValue::Scalar(s) => Value::Scalar(F::parse(s, ctx)?),
            RecordValue::Vector(v) => Value::Vector(
                v.iter()
                    .map(|s| F::parse(s, ctx))
                    .collect::<Result<_, _>>()?,
            ),
        })
    }

    fn max_relative_error(&self, exact: &Self) -> f64 {
        let (a, b) = (self.components(), exact.components());
        if a.len() != b.len() {
            return f64::INFINITY;
        }
        a.iter()
            .zip(b)
            .map(|(x, y)| match (x.approx(), y.approx()) {
                (Some(x), Some(y)) => relative_error(x, y),
                _ => f64::NAN,
            })
            .fold(0.0, |acc: f64, e| {
                if e.is_nan() {
                    f64::INFINITY
                } else {
                    acc.max(e)
                }
            })
    }
}

/// A secondary comparison carried alongside the main one, e.g. an
/// independent recurrence that must land on the same value.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck<F> {
    pub label: String,
    pub lhs: Value<F>,
    pub rhs: Value<F>,
}

impl<F> CrossCheck<F> {
    pub fn new(label: impl Into<String>, lhs: Value<F>, rhs: Value<F>) -> Self {
        CrossCheck {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Params<F> {
    pub n: usize,
    pub d: Option<i64>,
    pub m: Option<i64>,
    pub a: Option<F>,
    pub k: Option<usize>,
    pub nodes: Vec<F>,
}

impl<F> Params<F> {
    pub fn new(n: usize) -> Self {
        Params {
            n,
            d: None,
            m: None,
            a: None,
            k: None,
            nodes: Vec::new(),
        }
    }

    pub fn with_d(mut self, d: i64) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_a(mut self, a: F) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_nodes(mut self, nodes: &[F]) -> Self
    where
        F: Clone,
    {
        self.nodes = nodes.to_vec();
        self
    }
}

/// Outcome of one identity evaluation.
///
/// In exact fields `pass` is `lhs == rhs` together with every cross check.
/// In `f64` there is no pass/fail; `relative_error` holds the worst
/// component-wise relative error instead (infinite when something
/// overflowed).
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<F: Field> {
    pub identity: IdentityKind,
    pub params: Params<F>,
    pub lhs: Value<F>,
    pub rhs: Value<F>,
    pub checks: Vec<CrossCheck<F>>,
    pub pass: Option<bool>,
    pub relative_error: Option<f64>,
    pub field_kind: FieldKind,
}

impl<F: Field> IdentityReport<F> {
    pub fn evaluate(
        identity: IdentityKind,
        params: Params<F>,
        lhs: Value<F>,
        rhs: Value<F>,
        checks: Vec<CrossCheck<F>>,
    ) -> Self {
        let (pass, relative_error) = if F::is_exact() {
            let ok = lhs == rhs && checks.iter().all(|c| c.lhs == c.rhs);
            (Some(ok), None)
        } else {
            let worst = checks
                .iter()
                .map(|c| c.lhs.max_relative_error(&c.rhs))
                .fold(lhs.max_relative_error(&rhs), f64::max);
            let worst = if worst.is_finite() {
                worst
            } else {
                f64::INFINITY
            };
            (None, Some(worst))
        };
        IdentityReport {
            identity,
            params,
            lhs,
            rhs,
            checks,
            pass,
            relative_error,
            field_kind: F::KIND,
        }
    }

    /// `true` unless an exact comparison failed.
    pub fn passed(&self) -> bool {
        self.pass != Some(false)
    }

    pub fn to_record(&self) -> ReportRecord {
        let overflow = self.relative_error.is_some_and(|e| !e.is_finite());
        ReportRecord {
            identity: self.identity,
            field: self.field_kind,
            n: self.params.n,
            d: self.params.d,
            m: self.params.m,
            a: self.params.a.as_ref().map(ToString::to_string),
            k: self.params.k,
            nodes: self.params.nodes.iter().map(ToString::to_string).collect(),
            lhs: self.lhs.to_record(),
            rhs: self.rhs.to_record(),
            checks: self
                .checks
                .iter()
                .map(|c| RecordCheck {
                    label: c.label.clone(),
                    lhs: c.lhs.to_record(),
                    rhs: c.rhs.to_record(),
                })
                .collect(),
            pass: self.pass,
            relative_error: self.relative_error.filter(|e| e.is_finite()),
            overflow,
        }
    }

    pub fn from_record(rec: &ReportRecord, ctx: &F::Context) -> Result<Self, FieldError> {
        let parse = |s: &String| F::parse(s, ctx);
        Ok(IdentityReport {
            identity: rec.identity,
            params: Params {
                n: rec.n,
                d: rec.d,
                m: rec.m,
                a: rec.a.as_ref().map(parse).transpose()?,
                k: rec.k,
                nodes: rec.nodes.iter().map(parse).collect::<Result<_, _>>()?,
            },
            lhs: Value::from_record(&rec.lhs, ctx)?,
            rhs: Value::from_record(&rec.rhs, ctx)?,
            checks: rec
                .checks
                .iter()
                .map(|c| {
                    Ok(CrossCheck {
                        label: c.label.clone(),
                        lhs: Value::from_record(&c.lhs, ctx)?,
                        rhs: Value::from_record(&c.rhs, ctx)?,
                    })
                })
                .collect::<Result<_, FieldError>>()?,
            pass: rec.pass,
            relative_error: if rec.overflow {
                Some(f64::INFINITY)
            } else {
                rec.relative_error
            },
            field_kind: rec.field,
        })
    }
}

/// Serialized form of [`IdentityReport`]; field values are rendered as
/// strings (`p/q` for rationals, residues for `F_p`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: IdentityKind,
    pub field: FieldKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nodes: Vec<String>,
    pub lhs: RecordValue,
    pub rhs: RecordValue,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<RecordCheck>,
    pub pass: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_error: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub overflow: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecordValue {
    Scalar(String),
    Vector(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordCheck {
    pub label: String,
    pub lhs: RecordValue,
    pub rhs: RecordValue,
}
