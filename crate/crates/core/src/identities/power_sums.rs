//! The weighted power sums `S_d = sum_i x_i^d / prod_{j != i} (x_i - x_j)`
//! and the identities read off them.

use num_bigint::BigInt;

use super::{CrossCheck, IdentityError, IdentityKind, IdentityReport, NodeSet, Params, Value};
use crate::field::{Field, Rational};
use crate::symfun::{e_via_vieta, h_bruteforce_with_budget, h_fast, h_table};

/// Largest monomial count for which reports also enumerate `h` directly.
pub const BRUTE_FORCE_CHECK_LIMIT: u128 = 100_000;

/// `prod_{j != i} (x_i - x_j)` for each `i`.
pub fn lagrange_denominators<F: Field>(ns: &NodeSet<F>) -> Vec<F> {
    let xs = ns.nodes();
    xs.iter()
        .enumerate()
        .map(|(i, xi)| {
            xs.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(F::one(ns.ctx()), |acc, (_, xj)| {
                    acc * (xi.clone() - xj.clone())
                })
        })
        .collect()
}

/// Partial-fraction weights `w_i = 1 / prod_{j != i} (x_i - x_j)`, i.e. the
/// residues of `1 / prod_j (X - x_j)`. They sum to zero.
pub fn barycentric_weights<F: Field>(ns: &NodeSet<F>) -> Vec<F> {
    lagrange_denominators(ns)
        .iter()
        .map(|den| {
            den.inverse()
                .expect("distinct nodes give nonzero denominators")
        })
        .collect()
}

/// `S_d` straight from its definition.
pub fn weighted_power_sum<F: Field>(ns: &NodeSet<F>, d: u64) -> F {
    ns.nodes()
        .iter()
        .zip(lagrange_denominators(ns))
        .fold(F::zero(ns.ctx()), |acc, (x, den)| {
            let w = den
                .inverse()
                .expect("distinct nodes give nonzero denominators");
            acc + x.pow(d) * w
        })
}

/// `S_d` through the adjoin-one-node recurrence
///
/// ```text
/// S_d(x_1..x_j) = sum_{e=0}^{d-1} S_e(x_1..x_{j-1}) x_j^{d-e-1}
/// ```
///
/// starting from two nodes, where `S_e(x_1, x_2)` is the geometric sum
/// `sum_{a+b=e-1} x_1^a x_2^b`. The memo table is indexed by
/// (prefix length, degree) and filled in `O(n d^2)`.
pub fn s_via_sylvester_recurrence<F: Field>(ns: &NodeSet<F>, d: u64) -> F {
    let ctx = ns.ctx();
    let d = d as usize;
    let powers = |x: &F| {
        let mut p = vec![F::one(ctx)];
        for i in 1..=d {
            let next = p[i - 1].clone() * x.clone();
            p.push(next);
        }
        p
    };

    let base = ns.prefix(2);
    let (p1, p2) = (powers(&base[0]), powers(&base[1]));
    let mut prev: Vec<F> = (0..=d)
        .map(|e| {
            (0..e).fold(F::zero(ctx), |acc, a| {
                acc + p1[a].clone() * p2[e - 1 - a].clone()
            })
        })
        .collect();

    for x in &ns.nodes()[2..] {
        let px = powers(x);
        let next: Vec<F> = (0..=d)
            .map(|deg| {
                (0..deg).fold(F::zero(ctx), |acc, e| {
                    acc + prev[e].clone() * px[deg - e - 1].clone()
                })
            })
            .collect();
        prev = next;
    }
    prev.swap_remove(d)
}

/// `S_d` through the order-`n` linear recurrence
/// `W_d = sum_{k=1}^n (-1)^{k-1} e_k W_{d-k}` that every weighted power
/// sum obeys, seeded with Euler's values `(0, .., 0, 1)`.
pub fn s_via_order_n_recurrence<F: Field>(ns: &NodeSet<F>, d: u64) -> F {
    let ctx = ns.ctx();
    let n = ns.len();
    let d = d as usize;
    let mut w = vec![F::zero(ctx); n.max(d + 1)];
    w[n - 1] = F::one(ctx);
    let coeffs: Vec<F> = e_via_vieta(ns.nodes(), ctx)
        .into_iter()
        .enumerate()
        .map(|(k, e)| F::sign(k + 1, ctx) * e)
        .collect();
    for t in n..=d {
        w[t] = (1..=n).fold(F::zero(ctx), |acc, k| {
            acc + coeffs[k].clone() * w[t - k].clone()
        });
    }
    w.swap_remove(d)
}

/// Euler's identity: `S_d = 0` for `d <= n - 2` and `S_{n-1} = 1`.
pub fn verify_euler<F: Field>(ns: &NodeSet<F>, d: i64) -> Result<IdentityReport<F>, IdentityError> {
    let n = ns.len();
    if d < 0 || d as usize > n - 1 {
        return Err(IdentityError::Parameter(format!(
            "euler needs 0 <= d <= n-1 = {}, got d = {d}",
            n - 1
        )));
    }
    let ctx = ns.ctx();
    let lhs = weighted_power_sum(ns, d as u64);
    let rhs = if d as usize == n - 1 {
        F::one(ctx)
    } else {
        F::zero(ctx)
    };
    Ok(IdentityReport::evaluate(
        IdentityKind::Euler,
        Params::new(n).with_d(d).with_nodes(ns.nodes()),
        Value::Scalar(lhs),
        Value::Scalar(rhs),
        Vec::new(),
    ))
}

/// Sylvester's identity `S_d = h_{d-n+1}`. Both recurrences for `S_d` are
/// carried as cross checks, and so is the brute-force `h` when it has at
/// most [`BRUTE_FORCE_CHECK_LIMIT`] monomials.
pub fn verify_sylvester<F: Field>(ns: &NodeSet<F>, d: u64) -> IdentityReport<F> {
    sylvester_report(ns, d, true)
}

fn sylvester_report<F: Field>(ns: &NodeSet<F>, d: u64, brute_force: bool) -> IdentityReport<F> {
    let ctx = ns.ctx();
    let n = ns.len();
    let k = d as i64 - n as i64 + 1;
    let lhs = weighted_power_sum(ns, d);
    let rhs = h_fast(k, ns.nodes(), ctx);
    let mut checks = vec![
        CrossCheck::new(
            "sylvester_recurrence",
            Value::Scalar(s_via_sylvester_recurrence(ns, d)),
            Value::Scalar(rhs.clone()),
        ),
        CrossCheck::new(
            "order_n_recurrence",
            Value::Scalar(s_via_order_n_recurrence(ns, d)),
            Value::Scalar(rhs.clone()),
        ),
    ];
    if let Some(Ok(h)) =
        brute_force.then(|| h_bruteforce_with_budget(k, ns.nodes(), ctx, BRUTE_FORCE_CHECK_LIMIT))
    {
        checks.push(CrossCheck::new(
            "h_bruteforce",
            Value::Scalar(h),
            Value::Scalar(rhs.clone()),
        ));
    }
    IdentityReport::evaluate(
        IdentityKind::Sylvester,
        Params::new(n).with_d(d as i64).with_nodes(ns.nodes()),
        Value::Scalar(lhs),
        Value::Scalar(rhs),
        checks,
    )
}

/// Coefficients of `z^0..z^K` on both sides of
///
/// ```text
/// sum_i w_i e^{x_i z} = sum_{d >= n-1} h_{d-n+1} z^d / d!
/// ```
///
/// The left side expands each exponential; the right side uses `h`
/// directly. Factorials stay exact.
pub fn egf_truncated_check<F: Field>(
    ns: &NodeSet<F>,
    k: usize,
) -> Result<IdentityReport<F>, IdentityError> {
    if !F::is_exact() {
        return Err(IdentityError::InexactField);
    }
    let n = ns.len();
    if k < n - 1 {
        return Err(IdentityError::Parameter(format!(
            "egf needs K >= n-1 = {}, got K = {k}",
            n - 1
        )));
    }
    let ctx = ns.ctx();
    let mut inv_fact = Vec::with_capacity(k + 1);
    let mut fact = F::one(ctx);
    for d in 0..=k {
        if d > 0 {
            fact = fact * F::from_i64(d as i64, ctx);
        }
        inv_fact.push(fact.inverse()?);
    }

    let weights = barycentric_weights(ns);
    let mut lhs = vec![F::zero(ctx); k + 1];
    for (x, w) in ns.nodes().iter().zip(&weights) {
        let mut term = w.clone();
        for (d, c) in lhs.iter_mut().enumerate() {
            *c = c.clone() + term.clone() * inv_fact[d].clone();
            term = term * x.clone();
        }
    }

    let h = h_table((k + 1).saturating_sub(n), ns.nodes(), ctx);
    let rhs = (0..=k)
        .map(|d| match d.checked_sub(n - 1) {
            Some(j) => h[j].clone() * inv_fact[d].clone(),
            None => F::zero(ctx),
        })
        .collect();

    Ok(IdentityReport::evaluate(
        IdentityKind::Egf,
        Params::new(n).with_k(k).with_nodes(ns.nodes()),
        Value::Vector(lhs),
        Value::Vector(rhs),
        Vec::new(),
    ))
}

/// Row `n` of Pascal's triangle.
fn pascal_row(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::from(1));
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row
}

/// The alternating binomial terms `(-1)^{i-1} C(n,i) / i^d`, `i = 1..n`.
fn dilcher_terms(n: u64, d: u64) -> Vec<Rational> {
    let row = pascal_row(n);
    (1..=n)
        .map(|i| {
            let den = BigInt::from(i).pow(d as u32);
            let q = Rational::new(row[i as usize].clone(), den).expect("i >= 1");
            if i % 2 == 1 {
                q
            } else {
                -q
            }
        })
        .collect()
}

/// `sum_{i=1}^n (-1)^{i-1} C(n,i) / i^d`.
pub fn dilcher_lhs(n: u64, d: u64) -> Rational {
    dilcher_terms(n, d)
        .into_iter()
        .fold(Rational::from_integer(0), |acc, t| acc + t)
}

/// Dilcher's identity: the alternating binomial sum equals
/// `h_d(1, 1/2, .., 1/n)`. For `n >= 2` it is also rebuilt as Sylvester's
/// identity at nodes `x_i = 1/i` in degree `d + n - 1`, term by term.
pub fn dilcher_check(n: u64, d: u64) -> Result<IdentityReport<Rational>, IdentityError> {
    if n < 1 || d < 1 {
        return Err(IdentityError::Parameter(format!(
            "dilcher needs n >= 1 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let terms = dilcher_terms(n, d);
    let lhs = terms
        .iter()
        .cloned()
        .fold(Rational::from_integer(0), |acc, t| acc + t);
    let recips: Vec<Rational> = (1..=n as i64)
        .map(|i| Rational::new(1, i).expect("i >= 1"))
        .collect();
    let rhs = h_fast(d as i64, &recips, &());

    let mut checks = Vec::new();
    if n >= 2 {
        let ns = NodeSet::new(recips, &())?;
        let degree = d + n - 1;
        let sylvester_terms: Vec<Rational> = ns
            .nodes()
            .iter()
            .zip(lagrange_denominators(&ns))
            .map(|(x, den)| x.pow(degree) * den.inverse().expect("distinct nodes"))
            .collect();
        // Enumerating monomials over 1/i is slow and adds nothing over h_fast.
        let syl = sylvester_report(&ns, degree, false);
        checks.push(CrossCheck::new(
            "sylvester_terms",
            Value::Vector(sylvester_terms),
            Value::Vector(terms),
        ));
        checks.push(CrossCheck::new(
            "sylvester_lhs",
            syl.lhs,
            Value::Scalar(lhs.clone()),
        ));
        checks.push(CrossCheck::new(
            "sylvester_rhs",
            syl.rhs,
            Value::Scalar(rhs.clone()),
        ));
    }
    Ok(IdentityReport::evaluate(
        IdentityKind::Dilcher,
        Params::new(n as usize).with_d(d as i64),
        Value::Scalar(lhs),
        Value::Scalar(rhs),
        checks,
    ))
}
