//! Verification of the link-membership conditions behind the partition:
//! A pairs live in the links of the first split half and avoid the second,
//! B pairs the reverse, crossing pairs in all four.

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::hypergraph::{Hypergraph3, HypergraphError, VertexSet};

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub viol_i: u64,
    pub viol_ii: u64,
    pub viol_iii: u64,
    /// The split among the three (oriented) alternatives minimizing the
    /// total violation count.
    pub best_split: ([usize; 2], [usize; 2]),
    pub best_viols: (u64, u64, u64),
}

fn count_viols(
    links: &[(usize, SimpleGraph)],
    split: &([usize; 2], [usize; 2]),
    a: &VertexSet,
    b: &VertexSet,
) -> (u64, u64, u64) {
    let graph_of = |x: usize| -> &SimpleGraph {
        &links.iter().find(|(v, _)| *v == x).expect("apex link").1
    };
    let (la, lb) = (graph_of(split.0[0]), graph_of(split.0[1]));
    let (lc, ld) = (graph_of(split.1[0]), graph_of(split.1[1]));
    let mut viols = (0u64, 0u64, 0u64);
    let av: Vec<usize> = a.iter().collect();
    let bv: Vec<usize> = b.iter().collect();
    for (i, &x) in av.iter().enumerate() {
        for &y in &av[i + 1..] {
            let good = la.has_edge(x, y)
                && lb.has_edge(x, y)
                && !lc.has_edge(x, y)
                && !ld.has_edge(x, y);
            if !good {
                viols.0 += 1;
            }
        }
    }
    for (i, &x) in bv.iter().enumerate() {
        for &y in &bv[i + 1..] {
            let good = lc.has_edge(x, y)
                && ld.has_edge(x, y)
                && !la.has_edge(x, y)
                && !lb.has_edge(x, y);
            if !good {
                viols.1 += 1;
            }
        }
    }
    for &x in &av {
        for &y in &bv {
            let good = la.has_edge(x, y)
                && lb.has_edge(x, y)
                && lc.has_edge(x, y)
                && ld.has_edge(x, y);
            if !good {
                viols.2 += 1;
            }
        }
    }
    viols
}

/// Counts pairs violating the three conditions for the given split, and
/// reports the minimizing split among all six oriented alternatives.
pub fn verify_claim(
    h: &Hypergraph3,
    s: &VertexSet,
    split: ([usize; 2], [usize; 2]),
    a: &VertexSet,
    b: &VertexSet,
) -> Result<ClaimReport, HypergraphError> {
    if s.len() != 4 {
        return Err(HypergraphError::InvalidVertexSet);
    }
    let links: Vec<(usize, SimpleGraph)> =
        s.iter().map(|x| (x, h.link_graph(x))).collect();
    let sv: Vec<usize> = s.iter().collect();
    let all_splits = [
        ([sv[0], sv[1]], [sv[2], sv[3]]),
        ([sv[2], sv[3]], [sv[0], sv[1]]),
        ([sv[0], sv[2]], [sv[1], sv[3]]),
        ([sv[1], sv[3]], [sv[0], sv[2]]),
        ([sv[0], sv[3]], [sv[1], sv[2]]),
        ([sv[1], sv[2]], [sv[0], sv[3]]),
    ];
    let given = count_viols(&links, &split, a, b);
    let mut best = all_splits[0];
    let mut best_viols = (0u64, 0u64, 0u64);
    let mut best_total = u64::MAX;
    for cand in all_splits {
        let v = count_viols(&links, &cand, a, b);
        let total = v.0 + v.1 + v.2;
        if total < best_total {
            best = cand;
            best_viols = v;
            best_total = total;
        }
    }
    Ok(ClaimReport {
        viol_i: given.0,
        viol_ii: given.1,
        viol_iii: given.2,
        best_split: best,
        best_viols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Generator;

    #[test]
    fn bn10_natural_split_has_zero_violations() {
        let b = Hypergraph3::generate(Generator::Bn(10)).unwrap();
        let s = VertexSet::new(vec![0, 1, 5, 6]).unwrap();
        // A pairs (inside part 0) are links of the part-1 apexes {5,6}
        let a = VertexSet::new(vec![2, 3, 4]).unwrap();
        let b_side = VertexSet::new(vec![7, 8, 9]).unwrap();
        let rep = verify_claim(&b, &s, ([5, 6], [0, 1]), &a, &b_side).unwrap();
        assert_eq!((rep.viol_i, rep.viol_ii, rep.viol_iii), (0, 0, 0));
        assert_eq!(rep.best_viols, (0, 0, 0));
    }

    #[test]
    fn swapped_sides_violate_and_minimizer_flips() {
        let b = Hypergraph3::generate(Generator::Bn(10)).unwrap();
        let s = VertexSet::new(vec![0, 1, 5, 6]).unwrap();
        let a = VertexSet::new(vec![2, 3, 4]).unwrap();
        let b_side = VertexSet::new(vec![7, 8, 9]).unwrap();
        // A against the wrong half: every intra pair violates (i)/(ii)
        let rep = verify_claim(&b, &s, ([0, 1], [5, 6]), &a, &b_side).unwrap();
        assert_eq!(rep.viol_i, 3);
        assert_eq!(rep.viol_ii, 3);
        assert_eq!(rep.viol_iii, 0);
        assert_eq!(rep.best_split, ([5, 6], [0, 1]));
        assert_eq!(rep.best_viols, (0, 0, 0));
    }

    #[test]
    fn violation_counts_are_bounded_by_pair_count() {
        let b = Hypergraph3::generate(Generator::Bn(8)).unwrap();
        let s = VertexSet::new(vec![0, 1, 4, 5]).unwrap();
        let a = VertexSet::new(vec![2, 6]).unwrap();
        let b_side = VertexSet::new(vec![3, 7]).unwrap();
        let rep = verify_claim(&b, &s, ([0, 1], [4, 5]), &a, &b_side).unwrap();
        let n1 = 4u64;
        assert!(rep.viol_i + rep.viol_ii + rep.viol_iii <= n1 * (n1 - 1) / 2 + n1 * n1);
    }
}
