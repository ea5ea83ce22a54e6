//! Seeded random inputs for randomized trials.
//!
//! Every trial draws from its own ChaCha stream, selected by
//! `(master seed, trial index)`, so results do not depend on which thread
//! runs which trial.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField, PrimeModulus, Rational};
use crate::identities::NodeSet;

/// Numerators and denominators of random rationals stay within this bound.
pub const RATIONAL_BOUND: i64 = 50;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Field elements that can be drawn at random.
pub trait Sample: Field {
    fn sample<R: Rng + ?Sized>(rng: &mut R, ctx: &Self::Context) -> Self;
}

impl Sample for PrimeField {
    fn sample<R: Rng + ?Sized>(rng: &mut R, ctx: &PrimeModulus) -> Self {
        ctx.element(rng.gen_range(0..ctx.get()))
    }
}

impl Sample for Rational {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _: &()) -> Self {
        let num = rng.gen_range(-RATIONAL_BOUND..=RATIONAL_BOUND);
        let den = rng.gen_range(1..=RATIONAL_BOUND);
        Rational::new(num, den).expect("positive denominator")
    }
}

/// `n` pairwise distinct random nodes; a draw that repeats an earlier node
/// is rejected and redrawn. The field must have more than `n` elements.
pub fn random_nodes<F: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    ctx: &F::Context,
) -> NodeSet<F> {
    let mut nodes: Vec<F> = Vec::with_capacity(n);
    while nodes.len() < n {
        let x = F::sample(rng, ctx);
        if nodes.iter().all(|y| !(y.clone() - x.clone()).is_zero()) {
            nodes.push(x);
        }
    }
    NodeSet::new(nodes, ctx).expect("nodes drawn distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| trial_rng(42, 3).gen()).collect();
        let b: Vec<u64> = (0..4).map(|_| trial_rng(42, 3).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(trial_rng(42, 3).gen::<u64>(), trial_rng(42, 4).gen::<u64>());
    }

    #[test]
    fn tiny_prime_still_yields_distinct_nodes() {
        let m = PrimeModulus::new(7).unwrap();
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            let ns = random_nodes::<PrimeField, _>(&mut rng, 6, &m);
            assert_eq!(ns.len(), 6);
        }
    }

    #[test]
    fn rational_nodes_are_bounded() {
        let mut rng = trial_rng(9, 9);
        let ns = random_nodes::<Rational, _>(&mut rng, 5, &());
        for x in ns.nodes() {
            assert!(x.denom() <= &RATIONAL_BOUND.into());
            assert!(x.numer().magnitude() <= &(RATIONAL_BOUND as u64).into());
        }
    }
}
