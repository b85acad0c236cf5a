//! Random graph generation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Attempts allowed before a generator gives up.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("cubic graphs need an even vertex count >= 4 (and <= {MAX_VERTICES}), got {0}")]
    InvalidOrder(usize),
    #[error("edge probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("no acceptable sample after {0} attempts")]
    RejectionCapExceeded(usize),
}

/// Samples a simple connected cubic graph on `n` vertices.
///
/// Configuration model: the `3n` stubs are shuffled and paired off; samples
/// with a loop, a parallel edge or more than one component are rejected.
/// The result is a function of `(n, seed)` only.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 4 || n % 2 == 1 || n > MAX_VERTICES {
        return Err(GenerateError::InvalidOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut g = Graph::empty(n).expect("n checked");
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.insert_edge(u, v);
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenerateError::RejectionCapExceeded(MAX_ATTEMPTS))
}

/// Samples `G(n, p)` conditioned on being connected with minimum degree at
/// least `min_degree`.
pub fn random_connected<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    min_degree: usize,
    rng: &mut R,
) -> Result<Graph, GenerateError> {
    if n > MAX_VERTICES {
        return Err(GenerateError::InvalidOrder(n));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenerateError::InvalidProbability(p));
    }
    for _ in 0..MAX_ATTEMPTS {
        let mut g = Graph::empty(n).expect("n checked");
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.insert_edge(u, v);
                }
            }
        }
        if g.is_connected() && g.min_degree() >= min_degree {
            return Ok(g);
        }
    }
    Err(GenerateError::RejectionCapExceeded(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::k4;

    #[test]
    fn order_four_is_k4() {
        for seed in 0..5 {
            assert_eq!(random_cubic(4, seed).unwrap(), k4());
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_cubic(10, 42).unwrap(), random_cubic(10, 42).unwrap());
    }

    #[test]
    fn outputs_are_connected_cubic() {
        for seed in 0..100 {
            let g = random_cubic(8, seed).unwrap();
            assert!(g.is_cubic() && g.is_connected(), "seed {seed}");
        }
    }

    #[test]
    fn invalid_orders() {
        for n in [0, 2, 3, 7, 66] {
            assert_eq!(random_cubic(n, 0), Err(GenerateError::InvalidOrder(n)));
        }
    }

    #[test]
    fn connected_min_degree_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_connected(8, 0.4, 2, &mut rng).unwrap();
            assert!(g.is_connected() && g.min_degree() >= 2);
        }
        assert_eq!(
            random_connected(5, 0.0, 1, &mut rng),
            Err(GenerateError::InvalidProbability(0.0))
        );
        // Two vertices can never reach minimum degree 2.
        assert_eq!(
            random_connected(2, 0.5, 2, &mut rng),
            Err(GenerateError::RejectionCapExceeded(MAX_ATTEMPTS))
        );
    }
}
