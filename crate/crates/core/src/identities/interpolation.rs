//! Lagrange interpolation, the remainder of `X^d` modulo `prod (X - x_i)`,
//! and the coefficient identities that come from comparing them.

use super::power_sums::{barycentric_weights, lagrange_denominators, weighted_power_sum};
use super::{CrossCheck, IdentityError, IdentityKind, IdentityReport, NodeSet, Params, Value};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::symfun::{e_omit, e_via_vieta, h_table};

fn without<F: Clone>(xs: &[F], i: usize) -> Vec<F> {
    xs.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, x)| x.clone())
        .collect()
}

/// Coefficients of `X^0..X^{len-1}`, zero padded.
fn padded<F: Field>(p: &Polynomial<F>, len: usize) -> Vec<F> {
    (0..len).map(|i| p.coeff(i)).collect()
}

/// The unique polynomial of degree `< n` through `(x_i, values_i)`, built as
/// `sum_i values_i prod_{j != i} (X - x_j) / (x_i - x_j)`.
pub fn lagrange_interpolate<F: Field>(
    ns: &NodeSet<F>,
    values: &[F],
) -> Result<Polynomial<F>, IdentityError> {
    if values.len() != ns.len() {
        return Err(IdentityError::Parameter(format!(
            "expected {} values, got {}",
            ns.len(),
            values.len()
        )));
    }
    let ctx = ns.ctx();
    let weights = barycentric_weights(ns);
    let mut acc = Polynomial::zero(ctx);
    for (i, (y, w)) in values.iter().zip(&weights).enumerate() {
        let basis = Polynomial::from_roots(&without(ns.nodes(), i), ctx);
        acc = &acc + &basis.scale(&(y.clone() * w.clone()));
    }
    Ok(acc)
}

/// Remainder of `X^d` on division by `prod (X - x_i)`.
pub fn division_remainder<F: Field>(ns: &NodeSet<F>, d: u64) -> Polynomial<F> {
    let ctx = ns.ctx();
    let monomial = Polynomial::monomial(F::one(ctx), d as usize);
    let modulus = Polynomial::from_roots(ns.nodes(), ctx);
    monomial
        .div_rem(&modulus)
        .expect("node polynomial is monic")
        .1
}

/// The remainder of `X^d` modulo `prod (X - x_i)` in closed form:
///
/// ```text
/// R(X) = sum_{m=0}^{n-1} ( sum_{k=n-m}^{n} (-1)^{k-1} e_k h_{d-m-k} ) X^m
/// ```
///
/// with `h` of negative index taken as zero. Requires `d >= n`.
pub fn remainder_closed_form<F: Field>(
    ns: &NodeSet<F>,
    d: u64,
) -> Result<Polynomial<F>, IdentityError> {
    let n = ns.len();
    if d < n as u64 {
        return Err(IdentityError::Parameter(format!(
            "closed-form remainder needs d >= n = {n}, got d = {d}"
        )));
    }
    let ctx = ns.ctx();
    let d = d as usize;
    let e = e_via_vieta(ns.nodes(), ctx);
    let h = h_table(d, ns.nodes(), ctx);
    let coeffs = (0..n)
        .map(|m| {
            (n - m..=n).fold(F::zero(ctx), |acc, k| match (d - m).checked_sub(k) {
                Some(idx) => acc + F::sign(k - 1, ctx) * e[k].clone() * h[idx].clone(),
                None => acc,
            })
        })
        .collect();
    Ok(Polynomial::new(coeffs, ctx))
}

/// Three constructions of the remainder of `X^d` agree: the closed form
/// (lhs), long division (rhs) and Lagrange interpolation of `x_i^d`. Also
/// checks `R(x_i) = x_i^d` and that the top coefficient is `S_d`.
pub fn verify_remainder<F: Field>(
    ns: &NodeSet<F>,
    d: u64,
) -> Result<IdentityReport<F>, IdentityError> {
    let n = ns.len();
    let closed = remainder_closed_form(ns, d)?;
    let divided = division_remainder(ns, d);
    let powers: Vec<F> = ns.nodes().iter().map(|x| x.pow(d)).collect();
    let interpolant = lagrange_interpolate(ns, &powers)?;
    let at_nodes = ns.nodes().iter().map(|x| closed.eval(x)).collect();
    let checks = vec![
        CrossCheck::new(
            "lagrange_interpolant",
            Value::Vector(padded(&interpolant, n)),
            Value::Vector(padded(&divided, n)),
        ),
        CrossCheck::new(
            "values_at_nodes",
            Value::Vector(at_nodes),
            Value::Vector(powers),
        ),
        CrossCheck::new(
            "top_coefficient",
            Value::Scalar(closed.coeff(n - 1)),
            Value::Scalar(weighted_power_sum(ns, d)),
        ),
    ];
    Ok(IdentityReport::evaluate(
        IdentityKind::Remainder,
        Params::new(n).with_d(d as i64).with_nodes(ns.nodes()),
        Value::Vector(padded(&closed, n)),
        Value::Vector(padded(&divided, n)),
        checks,
    ))
}

/// `sum_i x_i^d e_m(x without x_i) / prod_{j != i} (x_i - x_j)`.
fn omit_weighted_sum<F: Field>(
    ns: &NodeSet<F>,
    dens: &[F],
    d: u64,
    m: i64,
) -> Result<F, IdentityError> {
    let ctx = ns.ctx();
    let mut acc = F::zero(ctx);
    for (i, (x, den)) in ns.nodes().iter().zip(dens).enumerate() {
        let e = e_omit(m, ns.nodes(), i + 1, ctx)?;
        acc = acc + x.pow(d) * e * den.inverse()?;
    }
    Ok(acc)
}

/// Extended Euler identity: for `0 <= d, m <= n-1`,
/// `sum_i x_i^d e_m(omit i) / prod_{j != i} (x_i - x_j)` is `(-1)^m` when
/// `d + m = n - 1` and zero otherwise.
pub fn verify_extended_euler<F: Field>(
    ns: &NodeSet<F>,
    d: i64,
    m: i64,
) -> Result<IdentityReport<F>, IdentityError> {
    let n = ns.len() as i64;
    if !(0..n).contains(&d) || !(0..n).contains(&m) {
        return Err(IdentityError::Parameter(format!(
            "extended euler needs 0 <= d, m <= n-1 = {}, got d = {d}, m = {m}",
            n - 1
        )));
    }
    let ctx = ns.ctx();
    let lhs = omit_weighted_sum(ns, &lagrange_denominators(ns), d as u64, m)?;
    let rhs = if d + m == n - 1 {
        F::sign(m as usize, ctx)
    } else {
        F::zero(ctx)
    };
    Ok(IdentityReport::evaluate(
        IdentityKind::ExtendedEuler,
        Params::new(n as usize)
            .with_d(d)
            .with_m(m)
            .with_nodes(ns.nodes()),
        Value::Scalar(lhs),
        Value::Scalar(rhs),
        Vec::new(),
    ))
}

/// `sum_i prod_{j != i} (1 - a x_i x_j) / (x_i - x_j)` is `a^{(n-1)/2}` for
/// odd `n` and zero for even `n`. The cross check re-expands the product
/// as `sum_m (-a x_i)^m e_m(omit i)`, the route through extended Euler.
pub fn verify_f2<F: Field>(ns: &NodeSet<F>, a: &F) -> IdentityReport<F> {
    let ctx = ns.ctx();
    let n = ns.len();
    let xs = ns.nodes();
    let dens = lagrange_denominators(ns);

    let mut lhs = F::zero(ctx);
    for (i, (xi, den)) in xs.iter().zip(&dens).enumerate() {
        let num = xs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(F::one(ctx), |acc, (_, xj)| {
                acc * (F::one(ctx) - a.clone() * xi.clone() * xj.clone())
            });
        lhs = lhs + num * den.inverse().expect("distinct nodes");
    }

    let rhs = if n % 2 == 1 {
        a.pow((n as u64 - 1) / 2)
    } else {
        F::zero(ctx)
    };

    let mut expansion = F::zero(ctx);
    for m in 0..n {
        let inner = (0..n).fold(F::zero(ctx), |acc, i| {
            let e = e_omit(m as i64, xs, i + 1, ctx).expect("index in range");
            let w = dens[i].inverse().expect("distinct nodes");
            acc + (-a.clone() * xs[i].clone()).pow(m as u64) * e * w
        });
        expansion = expansion + inner;
    }

    IdentityReport::evaluate(
        IdentityKind::F2,
        Params::new(n).with_a(a.clone()).with_nodes(xs),
        Value::Scalar(lhs),
        Value::Scalar(rhs.clone()),
        vec![CrossCheck::new(
            "extended_euler_expansion",
            Value::Scalar(expansion),
            Value::Scalar(rhs),
        )],
    )
}

/// Coefficient-wise comparison of two constructions of the remainder of
/// `X^d`, for `d >= n`: the closed form (lhs) against the Lagrange
/// expansion (rhs), whose `X^m` coefficient is
/// `(-1)^{n-1-m} sum_i x_i^d e_{n-1-m}(omit i) / prod_{j != i} (x_i - x_j)`.
/// The `X^{n-1}` coefficient is Sylvester's `S_d`, carried as a cross check.
pub fn extended_sylvester_check<F: Field>(
    ns: &NodeSet<F>,
    d: u64,
) -> Result<IdentityReport<F>, IdentityError> {
    let n = ns.len();
    let ctx = ns.ctx();
    let closed = remainder_closed_form(ns, d)?;
    let dens = lagrange_denominators(ns);
    let expansion = (0..n)
        .map(|m| {
            let idx = n - 1 - m;
            Ok(F::sign(idx, ctx) * omit_weighted_sum(ns, &dens, d, idx as i64)?)
        })
        .collect::<Result<Vec<F>, IdentityError>>()?;
    let top = expansion[n - 1].clone();
    Ok(IdentityReport::evaluate(
        IdentityKind::ExtendedSylvester,
        Params::new(n).with_d(d as i64).with_nodes(ns.nodes()),
        Value::Vector(padded(&closed, n)),
        Value::Vector(expansion),
        vec![CrossCheck::new(
            "sylvester",
            Value::Scalar(top),
            Value::Scalar(weighted_power_sum(ns, d)),
        )],
    ))
}
