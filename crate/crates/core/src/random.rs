//! Seeded random instance generators for property suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::Hypergraph3;
use crate::multigraph::Multigraph;

/// Binomial random 3-uniform hypergraph: each triple kept with probability `p`.
pub fn random_hypergraph(n: usize, p: f64, seed: u64) -> Hypergraph3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.random_bool(p) {
                    edges.push([a, b, c]);
                }
            }
        }
    }
    Hypergraph3::new(n, edges).expect("generated triples are valid")
}

/// Random multigraph with uniform multiplicities in `0..=max_mult`.
pub fn random_multigraph(n: usize, max_mult: u32, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_mult(u, v, rng.random_range(0..=max_mult));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_hypergraph(8, 0.3, 7);
        let b = random_hypergraph(8, 0.3, 7);
        assert_eq!(a, b);
        let g = random_multigraph(6, 5, 3);
        let h = random_multigraph(6, 5, 3);
        assert_eq!(g, h);
        assert!(g.max_mult() <= 5);
    }
}
