//! Octahedron counting: 4-cycles in link graphs, the exact count with a
//! brute-force oracle, the low-degree deletion process, and the explicit
//! `(3^7/2^11) * alpha^8 * n^6` lower bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::hypergraph::{Hypergraph3, HypergraphError, VertexSet};
use crate::parallel;

/// Exact number of 4-cycle subgraphs, via the common-neighborhood pair
/// identity: twice the count is the sum of `C(|N(x) ∩ N(y)|, 2)` over all
/// vertex pairs {x, y}.
pub fn count_c4(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    let mut twice = 0u64;
    for x in 0..n {
        for y in x + 1..n {
            let t = g.common_neighbors(x, y) as u64;
            if t >= 2 {
                twice += t * (t - 1) / 2;
            }
        }
    }
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// Sum over vertex pairs {u, v} of the number of 4-cycles common to both
/// link graphs. Each octahedron is counted exactly three times, once per
/// pair class.
pub(crate) fn common_c4_pair_total(h: &Hypergraph3) -> u64 {
    let n = h.vertex_count();
    let links: Vec<SimpleGraph> = (0..n).map(|v| h.link_graph(v)).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    parallel::sum_over(&pairs, |&(u, v)| count_c4(&links[u].intersection(&links[v])))
}

/// Exact number of octahedron copies (unordered triples of pair classes
/// with all eight transversal triples present). Aggregates common 4-cycles
/// of link-graph pairs and divides the triple-counted total by three.
pub fn count_octahedra(h: &Hypergraph3) -> u64 {
    let total = common_c4_pair_total(h);
    debug_assert_eq!(total % 3, 0);
    total / 3
}

/// All 15 perfect matchings of {0,...,5} into three pairs.
fn six_pairings() -> Vec<[[usize; 2]; 3]> {
    let mut out = Vec::new();
    // pair 0 with a; pair the least remaining with b; the rest is forced
    for a in 1..6usize {
        let rem: Vec<usize> = (1..6).filter(|&v| v != a).collect();
        for j in 1..4 {
            let b = rem[j];
            let others: Vec<usize> = rem[1..]
                .iter()
                .copied()
                .filter(|&v| v != b)
                .collect();
            out.push([[0, a], [rem[0], b], [others[0], others[1]]]);
        }
    }
    out
}

/// Brute-force oracle: enumerates all 6-subsets and the 15 pairings of
/// each, checking the eight transversal triples directly.
pub fn oracle_count_octahedra(h: &Hypergraph3) -> u64 {
    let n = h.vertex_count();
    if n < 6 {
        return 0;
    }
    let pairings = six_pairings();
    let mut count = 0u64;
    let mut six = [0usize; 6];
    fn rec(
        h: &Hypergraph3,
        pairings: &[[[usize; 2]; 3]],
        six: &mut [usize; 6],
        depth: usize,
        start: usize,
        count: &mut u64,
    ) {
        if depth == 6 {
            'pairing: for p in pairings {
                for a in 0..2 {
                    for b in 0..2 {
                        for c in 0..2 {
                            let mut t = [six[p[0][a]], six[p[1][b]], six[p[2][c]]];
                            t.sort_unstable();
                            if !h.has_triple(t) {
                                continue 'pairing;
                            }
                        }
                    }
                }
                *count += 1;
            }
            return;
        }
        for v in start..h.vertex_count() {
            six[depth] = v;
            rec(h, pairings, six, depth + 1, v + 1, count);
        }
    }
    rec(h, &pairings, &mut six, 0, 0, &mut count);
    count
}

/// 4-cycle census: per-apex counts and, for each 4-set and each of its
/// three diagonal pairings, the number of link graphs containing that
/// specific 4-cycle. Built by direct enumeration; test-scale hosts only.
#[derive(Clone, Debug)]
pub struct C4Census {
    /// m_i(C4): 4-cycles in the link graph of vertex i.
    pub per_apex: Vec<u64>,
    /// Key: (sorted 4-set, pairing index). Pairing p on [a,b,c,d] puts the
    /// diagonals at p = 0: {a,b}|{c,d}, 1: {a,c}|{b,d}, 2: {a,d}|{b,c};
    /// the 4-cycle's edges are the four cross pairs between the diagonals.
    pub per_quad: BTreeMap<([usize; 4], u8), u64>,
}

/// Cycle edges of pairing `p` on a sorted 4-set.
fn pairing_cycle_edges(q: [usize; 4], p: u8) -> [[usize; 2]; 4] {
    let (d1, d2) = match p {
        0 => ([q[0], q[1]], [q[2], q[3]]),
        1 => ([q[0], q[2]], [q[1], q[3]]),
        _ => ([q[0], q[3]], [q[1], q[2]]),
    };
    [
        [d1[0], d2[0]],
        [d1[0], d2[1]],
        [d1[1], d2[0]],
        [d1[1], d2[1]],
    ]
}

pub fn c4_census(h: &Hypergraph3) -> C4Census {
    let n = h.vertex_count();
    let links: Vec<SimpleGraph> = (0..n).map(|v| h.link_graph(v)).collect();
    let mut per_apex = vec![0u64; n];
    let mut per_quad = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    for p in 0..3u8 {
                        let cycle = pairing_cycle_edges(q, p);
                        let mut apexes = 0u64;
                        for (i, l) in links.iter().enumerate() {
                            if q.contains(&i) {
                                continue;
                            }
                            if cycle.iter().all(|e| l.has_edge(e[0], e[1])) {
                                apexes += 1;
                                per_apex[i] += 1;
                            }
                        }
                        if apexes > 0 {
                            per_quad.insert((q, p), apexes);
                        }
                    }
                }
            }
        }
    }
    C4Census { per_apex, per_quad }
}

/// Threshold for the low-degree deletion process.
#[derive(Clone, Debug)]
pub enum PeelThreshold {
    /// Delete while degree <= r.
    Rational(BigRational),
    /// Delete while degree <= n^(3/2) for the original n, compared exactly
    /// as d^2 <= n^3.
    NPow32,
}

#[derive(Clone, Debug)]
pub struct PeelOutcome {
    /// Induced subhypergraph on the surviving vertices, relabeled.
    pub survivor: Hypergraph3,
    /// Surviving vertices in original labels (`kept[new] = old`).
    pub kept: Vec<usize>,
    pub deleted: VertexSet,
}

/// Repeatedly deletes the least-indexed vertex whose current degree is at
/// or below the threshold; degrees are recomputed after each deletion.
pub fn peel_low_degree(h: &Hypergraph3, threshold: &PeelThreshold) -> PeelOutcome {
    let n = h.vertex_count();
    let at_or_below = |d: usize| -> bool {
        match threshold {
            PeelThreshold::Rational(r) => {
                !r.is_negative() && BigRational::from_integer(BigInt::from(d)) <= *r
            }
            PeelThreshold::NPow32 => BigInt::from(d) * BigInt::from(d) <= BigInt::from(n).pow(3),
        }
    };
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(ei);
        }
    }
    let mut edge_alive = vec![true; h.edge_count()];
    let mut deleted = Vec::new();
    loop {
        let Some(v) = (0..n).find(|&v| alive[v] && at_or_below(degree[v])) else {
            break;
        };
        alive[v] = false;
        deleted.push(v);
        for &ei in &incident[v] {
            if !edge_alive[ei] {
                continue;
            }
            edge_alive[ei] = false;
            for &u in &h.edges()[ei] {
                degree[u] -= 1;
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let keep_set = VertexSet::new(kept.clone()).unwrap();
    let (survivor, _) = h.induced(&keep_set).expect("kept vertices are valid");
    PeelOutcome {
        survivor,
        kept,
        deleted: VertexSet::new(deleted).unwrap(),
    }
}

/// The constant `c' = 3^7 / 2^11`.
pub fn lemma26_cprime() -> BigRational {
    BigRational::new(BigInt::from(3u32).pow(7), BigInt::from(2u32).pow(11))
}

/// Exact value of `(3^7/2^11) * alpha^8 * n^6`. Rejects alpha outside the
/// open interval (0, 1/6).
pub fn lemma26_bound(alpha: &BigRational, n: usize) -> Result<BigRational, HypergraphError> {
    let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
    if !alpha.is_positive() || *alpha >= sixth {
        return Err(HypergraphError::InvalidVertexSet);
    }
    let mut a8 = BigRational::one();
    for _ in 0..8 {
        a8 *= alpha.clone();
    }
    Ok(lemma26_cprime() * a8 * BigRational::from_integer(BigInt::from(n).pow(6)))
}

/// Comparison of the octahedron count against the explicit lower bound at
/// `alpha = |E| / n^3`. Below the proof's `n >= 4/alpha^2` guard the bound
/// is not asserted by the lemma, so `guard_met` is informational.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma26Report {
    pub alpha: String,
    pub bound: String,
    pub octahedra: u64,
    pub holds: bool,
    pub guard_met: bool,
}

pub fn empirical_check(h: &Hypergraph3) -> Result<Lemma26Report, HypergraphError> {
    let n = h.vertex_count();
    let alpha = BigRational::new(BigInt::from(h.edge_count()), BigInt::from(n).pow(3));
    let bound = lemma26_bound(&alpha, n)?;
    let count = count_octahedra(h);
    let holds = BigRational::from_integer(BigInt::from(count)) >= bound;
    // n >= 4 / alpha^2
    let guard_met = BigRational::from_integer(BigInt::from(n))
        >= BigRational::from_integer(BigInt::from(4)) / (alpha.clone() * alpha.clone());
    Ok(Lemma26Report {
        alpha: alpha.to_string(),
        bound: bound.to_string(),
        octahedra: count,
        holds,
        guard_met,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{binomial, Generator};
    use crate::random::random_hypergraph;
    use num_traits::{ToPrimitive, Zero};

    fn cycle4() -> SimpleGraph {
        let mut g = SimpleGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        g
    }

    #[test]
    fn c4_counts() {
        assert_eq!(count_c4(&cycle4()), 1);
        let mut k4 = cycle4();
        k4.add_edge(0, 2);
        k4.add_edge(1, 3);
        assert_eq!(count_c4(&k4), 3);
        let mut k33 = SimpleGraph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v);
            }
        }
        assert_eq!(count_c4(&k33), 9);
    }

    #[test]
    fn octahedron_generator_counts() {
        let o = Hypergraph3::generate(Generator::Octahedron).unwrap();
        assert_eq!(count_octahedra(&o), 1);
        assert_eq!(oracle_count_octahedra(&o), 1);
        let k6 = Hypergraph3::generate(Generator::Complete(6)).unwrap();
        assert_eq!(count_octahedra(&k6), 15);
        assert_eq!(oracle_count_octahedra(&k6), 15);
        let b6 = Hypergraph3::generate(Generator::Bn(6)).unwrap();
        assert_eq!(count_octahedra(&b6), 9);
        assert_eq!(oracle_count_octahedra(&b6), 9);
    }

    #[test]
    fn fifteen_pairings() {
        let p = six_pairings();
        assert_eq!(p.len(), 15);
        let mut seen = std::collections::BTreeSet::new();
        for m in &p {
            let mut norm: Vec<[usize; 2]> =
                m.iter().map(|e| [e[0].min(e[1]), e[0].max(e[1])]).collect();
            norm.sort_unstable();
            let flat: Vec<usize> = norm.iter().flatten().copied().collect();
            let mut check = flat.clone();
            check.sort_unstable();
            assert_eq!(check, vec![0, 1, 2, 3, 4, 5]);
            assert!(seen.insert(norm));
        }
    }

    #[test]
    fn oracle_equivalence_on_randoms_and_generators() {
        for seed in 0..30 {
            let n = 6 + (seed as usize % 7); // 6..=12
            let h = random_hypergraph(n, 0.35, 400 + seed);
            assert_eq!(
                count_octahedra(&h),
                oracle_count_octahedra(&h),
                "seed {seed}"
            );
        }
        for gen in [
            Generator::Complete(8),
            Generator::Bn(9),
            Generator::Bn(12),
            Generator::Fano,
            Generator::Tetrahedron,
        ] {
            let h = Hypergraph3::generate(gen).unwrap();
            assert_eq!(count_octahedra(&h), oracle_count_octahedra(&h), "{gen:?}");
        }
    }

    #[test]
    fn census_routes_agree() {
        for (seed, n) in [(1u64, 8usize), (2, 9)] {
            let h = random_hypergraph(n, 0.4, seed);
            let census = c4_census(&h);
            for v in 0..n {
                assert_eq!(census.per_apex[v], count_c4(&h.link_graph(v)), "apex {v}");
            }
            let quad_total: u64 = census.per_quad.values().sum();
            let apex_total: u64 = census.per_apex.iter().sum();
            assert_eq!(quad_total, apex_total);
            // triple counting: sum over pairs of common 4-cycles = 3 * octahedra
            let total = common_c4_pair_total(&h);
            assert_eq!(total, 3 * count_octahedra(&h));
            // and the same total is the sum of C(per_quad, 2) over quads
            let via_census: u64 = census.per_quad.values().map(|&c| c * (c - 1) / 2).sum();
            assert_eq!(via_census, total);
        }
    }

    #[test]
    fn peel_examples() {
        let k4 = Hypergraph3::generate(Generator::Complete(4)).unwrap();
        let out = peel_low_degree(
            &k4,
            &PeelThreshold::Rational(BigRational::from_integer(8.into())),
        );
        assert_eq!(out.survivor.vertex_count(), 0);
        assert_eq!(out.deleted.len(), 4);

        let k30 = Hypergraph3::generate(Generator::Complete(30)).unwrap();
        let out = peel_low_degree(&k30, &PeelThreshold::NPow32);
        assert_eq!(out.survivor, k30);
        assert!(out.deleted.is_empty());
    }

    #[test]
    fn peel_postcondition_on_randoms() {
        for seed in 0..10 {
            let h = random_hypergraph(10, 0.2, 50 + seed);
            let thr = BigRational::from_integer(3.into());
            let out = peel_low_degree(&h, &PeelThreshold::Rational(thr));
            for v in 0..out.survivor.vertex_count() {
                assert!(out.survivor.degree(v) > 3);
            }
            assert_eq!(
                out.survivor.vertex_count() + out.deleted.len(),
                h.vertex_count()
            );
        }
    }

    #[test]
    fn cprime_value() {
        assert_eq!(lemma26_cprime(), BigRational::new(2187.into(), 2048.into()));
    }

    #[test]
    fn bound_rejects_alpha_outside_open_interval() {
        let sixth = BigRational::new(1.into(), 6.into());
        assert!(lemma26_bound(&sixth, 10).is_err());
        assert!(lemma26_bound(&BigRational::zero(), 10).is_err());
        assert!(lemma26_bound(&BigRational::new(1.into(), 7.into()), 10).is_ok());
    }

    #[test]
    fn complete20_bound_and_count() {
        let alpha = BigRational::new(1140.into(), 8000.into());
        let bound = lemma26_bound(&alpha, 20).unwrap();
        // exact: (2187/2048) * (57/400)^8 * 20^6, roughly 11.6
        let approx = bound.to_f64().unwrap();
        assert!((11.0..12.0).contains(&approx), "bound ~ {approx}");
        let actual = binomial(20, 6) * 15;
        assert_eq!(actual, 581400);
        assert!(BigRational::from_integer(BigInt::from(actual)) >= bound);
    }

    #[test]
    fn empirical_check_on_complete_range() {
        for n in 12..=24 {
            let h = Hypergraph3::generate(Generator::Complete(n)).unwrap();
            let rep = empirical_check(&h).unwrap();
            assert!(rep.holds, "n = {n}: {rep:?}");
        }
    }

    #[test]
    fn real_binomial_inequality() {
        // a * C(y/a, 2) >= y^2 / (4a) whenever y >= 2a > 0
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let a = BigRational::new(
                BigInt::from(rng.random_range(1..1000)),
                BigInt::from(rng.random_range(1..1000)),
            );
            let factor = BigRational::new(
                BigInt::from(rng.random_range(2000..9000)),
                BigInt::from(1000),
            );
            let y = a.clone() * factor; // y >= 2a
            let x = y.clone() / a.clone();
            let lhs = a.clone() * (x.clone() * (x - BigRational::one()))
                / BigRational::from_integer(2.into());
            let rhs = y.clone() * y / (BigRational::from_integer(4.into()) * a);
            assert!(lhs >= rhs);
        }
    }

    #[test]
    fn cherry_convexity_on_dense_links() {
        // for links with d = e(L(v)) >= n: sum_u C(deg(u), 2) >= d^2 / n
        for seed in 0..5 {
            let h = random_hypergraph(10, 0.5, 70 + seed);
            let n = h.vertex_count();
            for v in 0..n {
                let l = h.link_graph(v);
                let d = l.edge_count();
                if d < n {
                    continue;
                }
                let sum: u64 = (0..n)
                    .map(|u| {
                        let deg = l.degree(u) as u64;
                        if deg >= 2 {
                            deg * (deg - 1) / 2
                        } else {
                            0
                        }
                    })
                    .sum();
                let lhs = BigRational::from_integer(BigInt::from(sum));
                let rhs =
                    BigRational::new(BigInt::from((d * d) as u64), BigInt::from(n as u64));
                assert!(lhs >= rhs, "seed {seed} vertex {v}");
            }
        }
    }
}
