//! Exact verification of Sylvester's identity and its relatives.
//!
//! The weighted power sum
//!
//! ```text
//! S_d(x_1..x_n) = sum_i x_i^d / prod_{j != i} (x_i - x_j)
//! ```
//!
//! equals the complete homogeneous symmetric function `h_{d-n+1}(x_1..x_n)`
//! for distinct nodes. This crate evaluates both sides, and the machinery
//! around them (Lagrange interpolation, Vieta expansion, polynomial
//! remainders, elementary symmetric functions), over exact rationals, a
//! prime field, or `f64`.

pub mod cli;
pub mod field;
pub mod identities;
pub mod poly;
pub mod sampling;
pub mod symfun;

pub use field::{Field, FieldConfig, FieldKind, Float64, PrimeField, PrimeModulus, Rational};
pub use identities::{IdentityKind, IdentityReport, NodeSet};
pub use poly::{Degree, Polynomial};
