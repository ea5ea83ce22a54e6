//! Complete homogeneous (`h_k`) and elementary (`e_k`) symmetric functions,
//! evaluated at a vector of field elements.
//!
//! Each family has a brute-force evaluator that literally enumerates the
//! monomials (the oracle) and a fast one. Out-of-range indices follow the
//! usual conventions: `h_0 = e_0 = 1`, `h_k = 0` for `k < 0`, and `e_k = 0`
//! for `k < 0` or `k > n`.

use thiserror::Error;

use crate::field::Field;
use crate::poly::Polynomial;

/// Largest number of monomials a brute-force evaluator will enumerate.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("enumeration of {count} terms exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("index {index} out of range for {len} variables (1-based)")]
    IndexOutOfRange { index: usize, len: usize },
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// Number of compositions of `k` into `n` non-negative parts,
/// `C(k + n - 1, n - 1)`.
pub fn composition_count(k: u64, n: u64) -> u128 {
    match n {
        0 => u128::from(k == 0),
        _ => binomial(k + n - 1, n - 1),
    }
}

/// Exponent vector `(λ_1, ..., λ_n)` of one monomial of `h_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Streams the compositions of `k` into exactly `n` parts in lexicographic
/// order, from `(0, .., 0, k)` to `(k, 0, .., 0)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u64>>,
}

pub fn enum_compositions(k: u64, n: usize) -> Compositions {
    let next = match n {
        0 if k == 0 => Some(Vec::new()),
        0 => None,
        _ => {
            let mut parts = vec![0; n];
            parts[n - 1] = k;
            Some(parts)
        }
    };
    Compositions { next }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // Successor: move one unit from the last nonzero part (past index 0)
        // into its left neighbour and push the remainder to the end.
        if let Some(t) = (1..current.len()).rev().find(|&t| current[t] > 0) {
            let mut succ = current.clone();
            let tail = succ[t];
            succ[t - 1] += 1;
            succ[t] = 0;
            let last = succ.len() - 1;
            succ[last] = tail - 1;
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

fn check_budget(count: u128, budget: u128) -> Result<(), SymError> {
    if count > budget {
        return Err(SymError::BudgetExceeded { count, budget });
    }
    Ok(())
}

/// `h_k` as the literal sum of `x_1^λ_1 ... x_n^λ_n` over all compositions.
pub fn h_bruteforce<F: Field>(k: i64, xs: &[F], ctx: &F::Context) -> Result<F, SymError> {
    h_bruteforce_with_budget(k, xs, ctx, DEFAULT_BUDGET)
}

pub fn h_bruteforce_with_budget<F: Field>(
    k: i64,
    xs: &[F],
    ctx: &F::Context,
    budget: u128,
) -> Result<F, SymError> {
    if k < 0 {
        return Ok(F::zero(ctx));
    }
    let k = k as u64;
    check_budget(composition_count(k, xs.len() as u64), budget)?;
    let powers: Vec<Vec<F>> = xs.iter().map(|x| power_table(x, k as usize, ctx)).collect();
    let mut total = F::zero(ctx);
    for comp in enum_compositions(k, xs.len()) {
        let term = comp
            .parts()
            .iter()
            .zip(&powers)
            .fold(F::one(ctx), |acc, (&lambda, pw)| {
                acc * pw[lambda as usize].clone()
            });
        total = total + term;
    }
    Ok(total)
}

fn power_table<F: Field>(x: &F, max: usize, ctx: &F::Context) -> Vec<F> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(F::one(ctx));
    for i in 1..=max {
        let next = out[i - 1].clone() * x.clone();
        out.push(next);
    }
    out
}

/// `h_k` by adjoining one variable at a time:
/// `h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j * h_{m-1}(x_1..x_j)`.
/// Costs `O(n k)` field operations.
pub fn h_fast<F: Field>(k: i64, xs: &[F], ctx: &F::Context) -> F {
    if k < 0 {
        return F::zero(ctx);
    }
    h_table(k as usize, xs, ctx)
        .pop()
        .expect("table has k + 1 entries")
}

/// `[h_0, h_1, ..., h_k]` of `xs`.
pub fn h_table<F: Field>(k: usize, xs: &[F], ctx: &F::Context) -> Vec<F> {
    let mut h = vec![F::zero(ctx); k + 1];
    h[0] = F::one(ctx);
    for x in xs {
        for m in 1..=k {
            h[m] = h[m].clone() + x.clone() * h[m - 1].clone();
        }
    }
    h
}

/// `e_k` as the literal sum over all `k`-subsets of the variables.
pub fn e_bruteforce<F: Field>(k: i64, xs: &[F], ctx: &F::Context) -> Result<F, SymError> {
    e_bruteforce_with_budget(k, xs, ctx, DEFAULT_BUDGET)
}

pub fn e_bruteforce_with_budget<F: Field>(
    k: i64,
    xs: &[F],
    ctx: &F::Context,
    budget: u128,
) -> Result<F, SymError> {
    let n = xs.len();
    if k < 0 || k as usize > n {
        return Ok(F::zero(ctx));
    }
    let k = k as usize;
    check_budget(binomial(n as u64, k as u64), budget)?;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut total = F::zero(ctx);
    loop {
        let term = idx.iter().fold(F::one(ctx), |acc, &i| acc * xs[i].clone());
        total = total + term;
        // advance to the next increasing index tuple
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Ok(total)
}

/// All of `e_0..e_n` at once, read off the Vieta expansion of
/// `prod (X - x_i)`: `e_k = (-1)^k [X^{n-k}]`.
pub fn e_via_vieta<F: Field>(xs: &[F], ctx: &F::Context) -> Vec<F> {
    let n = xs.len();
    let v = Polynomial::from_roots(xs, ctx);
    (0..=n).map(|k| F::sign(k, ctx) * v.coeff(n - k)).collect()
}

/// `e_m` of the variables with the 1-based position `i` left out.
pub fn e_omit<F: Field>(m: i64, xs: &[F], i: usize, ctx: &F::Context) -> Result<F, SymError> {
    if i == 0 || i > xs.len() {
        return Err(SymError::IndexOutOfRange {
            index: i,
            len: xs.len(),
        });
    }
    let rest: Vec<F> = xs
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i - 1)
        .map(|(_, x)| x.clone())
        .collect();
    if m < 0 || m as usize > rest.len() {
        return Ok(F::zero(ctx));
    }
    Ok(e_via_vieta(&rest, ctx).swap_remove(m as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, PrimeModulus, Rational};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn rs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    fn r(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    fn parts(k: u64, n: usize) -> Vec<Vec<u64>> {
        enum_compositions(k, n)
            .map(|c| c.parts().to_vec())
            .collect()
    }

    #[test]
    fn compositions_lex_order() {
        assert_eq!(parts(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(parts(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(parts(3, 2).len(), 4);
        assert_eq!(parts(3, 1), vec![vec![3]]);
        assert_eq!(parts(0, 0), vec![Vec::<u64>::new()]);
        assert!(parts(2, 0).is_empty());
    }

    #[test]
    fn compositions_exhaustive_small() {
        for n in 1..=5 {
            for k in 0..=6u64 {
                let all = parts(k, n);
                assert_eq!(all.len() as u128, composition_count(k, n as u64));
                assert!(
                    all.windows(2).all(|w| w[0] < w[1]),
                    "strictly increasing lex"
                );
                assert!(all.iter().all(|c| c.iter().sum::<u64>() == k));
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        assert_eq!(composition_count(2, 2), 3);
        assert_eq!(binomial(400, 200), u128::MAX);
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_bruteforce(1, &rs(&[1, 2]), &()).unwrap(), r(3));
        assert_eq!(h_bruteforce(2, &rs(&[1, 2, 3]), &()).unwrap(), r(25));
        assert_eq!(h_bruteforce(-1, &rs(&[1, 2]), &()).unwrap(), r(0));
        assert_eq!(h_fast(2, &rs(&[1, 2, 3]), &()), r(25));
        assert_eq!(h_fast(0, &rs(&[4, 9]), &()), r(1));
        assert_eq!(h_fast(0, &rs(&[]), &()), r(1));
        assert_eq!(h_fast(3, &rs(&[2]), &()), r(8));
        assert_eq!(h_fast(-4, &rs(&[2]), &()), r(0));
    }

    #[test]
    fn h_budget() {
        let xs = rs(&[1, 2, 3, 4]);
        let err = h_bruteforce_with_budget(10, &xs, &(), 100).unwrap_err();
        assert_eq!(
            err,
            SymError::BudgetExceeded {
                count: 286,
                budget: 100
            }
        );
        assert!(h_bruteforce_with_budget(10, &xs, &(), 286).is_ok());
    }

    #[test]
    fn e_examples() {
        let xs = rs(&[1, 2, 3]);
        assert_eq!(e_bruteforce(2, &xs, &()).unwrap(), r(11));
        assert_eq!(e_bruteforce(4, &xs, &()).unwrap(), r(0));
        assert_eq!(e_bruteforce(0, &xs, &()).unwrap(), r(1));
        assert_eq!(e_bruteforce(-1, &xs, &()).unwrap(), r(0));
        assert_eq!(e_via_vieta(&xs, &()), rs(&[1, 6, 11, 6]));
        assert_eq!(e_via_vieta::<Rational>(&[], &()), rs(&[1]));
        assert_eq!(e_via_vieta(&rs(&[5]), &()), rs(&[1, 5]));
    }

    #[test]
    fn e_omit_examples() {
        assert_eq!(e_omit(1, &rs(&[1, 2, 3]), 2, &()).unwrap(), r(4));
        assert_eq!(e_omit(0, &rs(&[1, 2, 3]), 3, &()).unwrap(), r(1));
        assert_eq!(e_omit(2, &rs(&[1, 2]), 1, &()).unwrap(), r(0));
        assert_eq!(
            e_omit(1, &rs(&[1, 2]), 3, &()),
            Err(SymError::IndexOutOfRange { index: 3, len: 2 })
        );
        assert!(e_omit(1, &rs(&[1, 2]), 0, &()).is_err());
    }

    fn fp_vec(raw: Vec<u64>) -> (Vec<PrimeField>, PrimeModulus) {
        let m = PrimeModulus::default();
        (raw.into_iter().map(|v| m.element(v)).collect(), m)
    }

    proptest! {
        #[test]
        fn fast_paths_match_oracles(raw in proptest::collection::vec(any::<u64>(), 0..=8), k in 0i64..=12) {
            let (xs, m) = fp_vec(raw);
            prop_assert_eq!(h_fast(k, &xs, &m), h_bruteforce(k, &xs, &m).unwrap());
            let es = e_via_vieta(&xs, &m);
            let e_k = es.get(k as usize).copied().unwrap_or_else(|| PrimeField::zero(&m));
            prop_assert_eq!(e_k, e_bruteforce(k, &xs, &m).unwrap());
        }

        #[test]
        fn complete_elementary_relation(raw in proptest::collection::vec(any::<u64>(), 1..=8), d in 1i64..=15) {
            let (xs, m) = fp_vec(raw);
            let n = xs.len();
            let es = e_via_vieta(&xs, &m);
            let rhs = (1..=n).fold(PrimeField::zero(&m), |acc, k| {
                acc + PrimeField::sign(k - 1, &m) * es[k] * h_fast(d - k as i64, &xs, &m)
            });
            prop_assert_eq!(h_fast(d, &xs, &m), rhs);
        }

        #[test]
        fn symmetric_under_permutation(raw in proptest::collection::vec(any::<u64>(), 1..=7), k in 0i64..=8, seed in any::<u64>()) {
            let (xs, m) = fp_vec(raw);
            let mut shuffled = xs.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(h_fast(k, &xs, &m), h_fast(k, &shuffled, &m));
            prop_assert_eq!(h_bruteforce(k, &xs, &m).unwrap(), h_bruteforce(k, &shuffled, &m).unwrap());
            prop_assert_eq!(e_bruteforce(k, &xs, &m).unwrap(), e_bruteforce(k, &shuffled, &m).unwrap());
        }

        #[test]
        fn e_omit_matches_reduced_bruteforce(raw in proptest::collection::vec(any::<u64>(), 1..=7), m_idx in -1i64..=8, pick in any::<prop::sample::Index>()) {
            let (xs, m) = fp_vec(raw);
            let i = pick.index(xs.len()) + 1;
            let mut rest = xs.clone();
            rest.remove(i - 1);
            prop_assert_eq!(e_omit(m_idx, &xs, i, &m).unwrap(), e_bruteforce(m_idx, &rest, &m).unwrap());
        }
    }
}
