//! Executable forms of Sylvester's identity and its relatives.
//!
//! Everything here takes a [`NodeSet`] of pairwise distinct field elements
//! `x_1..x_n` (with `n >= 2`) and either computes one side of an identity or
//! produces an [`IdentityReport`] comparing both sides.

mod interpolation;
mod power_sums;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::poly::PolyError;
use crate::symfun::SymError;

pub use interpolation::{
    division_remainder, extended_sylvester_check, lagrange_interpolate, remainder_closed_form,
    verify_extended_euler, verify_f2, verify_remainder,
};
pub use power_sums::{
    barycentric_weights, dilcher_check, dilcher_lhs, egf_truncated_check, lagrange_denominators,
    s_via_order_n_recurrence, s_via_sylvester_recurrence, verify_euler, verify_sylvester,
    weighted_power_sum, BRUTE_FORCE_CHECK_LIMIT,
};
pub use report::{
    relative_error, CrossCheck, IdentityReport, Params, RecordCheck, RecordValue, ReportRecord,
    Value, REL_ERROR_FLOOR,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("need at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("nodes {first} and {second} coincide (1-based positions)")]
    DuplicateNodes { first: usize, second: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("this check needs an exact field")]
    InexactField,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Pairwise distinct nodes `x_1..x_n`, `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet<F: Field> {
    nodes: Vec<F>,
    ctx: F::Context,
}

impl<F: Field> NodeSet<F> {
    pub fn new(nodes: Vec<F>, ctx: &F::Context) -> Result<Self, IdentityError> {
        if nodes.len() < 2 {
            return Err(IdentityError::TooFewNodes(nodes.len()));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if (nodes[i].clone() - nodes[j].clone()).is_zero() {
                    return Err(IdentityError::DuplicateNodes {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(NodeSet {
            nodes,
            ctx: ctx.clone(),
        })
    }

    pub fn from_i64s(values: &[i64], ctx: &F::Context) -> Result<Self, IdentityError> {
        Self::new(values.iter().map(|&v| F::from_i64(v, ctx)).collect(), ctx)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[F] {
        &self.nodes
    }

    pub fn ctx(&self) -> &F::Context {
        &self.ctx
    }

    /// The same nodes in another order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len());
        NodeSet {
            nodes: order.iter().map(|&i| self.nodes[i].clone()).collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// First `len` nodes.
    pub(crate) fn prefix(&self, len: usize) -> &[F] {
        &self.nodes[..len]
    }
}

impl NodeSet<crate::field::Float64> {
    /// Smallest gap `|x_i - x_j|` over all pairs.
    pub fn min_gap(&self) -> f64 {
        let mut gap = f64::INFINITY;
        for (i, a) in self.nodes.iter().enumerate() {
            for b in &self.nodes[i + 1..] {
                gap = gap.min((a.get() - b.get()).abs());
            }
        }
        gap
    }
}

/// Names accepted by `--identity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    Euler,
    Sylvester,
    ExtendedEuler,
    F2,
    Dilcher,
    Egf,
    ExtendedSylvester,
    Remainder,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::Euler,
        IdentityKind::Sylvester,
        IdentityKind::ExtendedEuler,
        IdentityKind::F2,
        IdentityKind::Dilcher,
        IdentityKind::Egf,
        IdentityKind::ExtendedSylvester,
        IdentityKind::Remainder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Euler => "euler",
            IdentityKind::Sylvester => "sylvester",
            IdentityKind::ExtendedEuler => "extended_euler",
            IdentityKind::F2 => "f2",
            IdentityKind::Dilcher => "dilcher",
            IdentityKind::Egf => "egf",
            IdentityKind::ExtendedSylvester => "extended_sylvester",
            IdentityKind::Remainder => "remainder",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityKind::Euler => "S_d = 0 for d <= n-2 and S_{n-1} = 1",
            IdentityKind::Sylvester => {
                "S_d = h_{d-n+1}, with both recurrences and the brute-force h"
            }
            IdentityKind::ExtendedEuler => {
                "sum_i x_i^d e_m(omit i) / prod (x_i - x_j) = (-1)^m [d+m = n-1]"
            }
            IdentityKind::F2 => {
                "sum_i prod_{j != i} (1 - a x_i x_j)/(x_i - x_j) = a^{(n-1)/2} for odd n, else 0"
            }
            IdentityKind::Dilcher => "sum_i (-1)^{i-1} C(n,i)/i^d = h_d(1, 1/2, .., 1/n)",
            IdentityKind::Egf => {
                "sum_i w_i e^{x_i z} = sum_d h_{d-n+1} z^d/d!, coefficientwise to z^K"
            }
            IdentityKind::ExtendedSylvester => {
                "closed-form remainder of X^d vs the Lagrange expansion, all coefficients"
            }
            IdentityKind::Remainder => {
                "closed-form remainder = division remainder = Lagrange interpolant"
            }
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}
