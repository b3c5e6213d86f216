//! Link graphs, link multigraphs and their apex-removed reductions.

use crate::graph::SimpleGraph;
use crate::hypergraph::{Hypergraph3, HypergraphError, VertexSet};
use crate::multigraph::Multigraph;

/// Link structures of an apex set S of size at most 4:
/// per-apex link graphs L(x) on the full vertex set, the combined link
/// multigraph L(S), and the reduction G(S) on V minus S (relabeled; the map
/// `reduced_vertices[new] = old` is kept).
#[derive(Clone, Debug)]
pub struct LinkFamily {
    pub apex_set: VertexSet,
    pub per_apex: Vec<SimpleGraph>,
    pub combined: Multigraph,
    pub reduced: Multigraph,
    pub reduced_vertices: Vec<usize>,
}

impl LinkFamily {
    /// Multiplicity in G(S) addressed by original vertex labels.
    pub fn reduced_mult_by_old(&self, u: usize, v: usize) -> Option<u32> {
        let iu = self.reduced_vertices.binary_search(&u).ok()?;
        let iv = self.reduced_vertices.binary_search(&v).ok()?;
        Some(self.reduced.mult(iu, iv))
    }

    /// Apexes whose link contains the pair {u, v} (original labels).
    pub fn apexes_containing(&self, u: usize, v: usize) -> Vec<usize> {
        self.apex_set
            .iter()
            .zip(&self.per_apex)
            .filter(|(_, l)| l.has_edge(u, v))
            .map(|(x, _)| x)
            .collect()
    }
}

/// Builds the link structures of `s` in `h`.
pub fn link_structures(h: &Hypergraph3, s: &VertexSet) -> Result<LinkFamily, HypergraphError> {
    if s.len() > 4 || s.iter().any(|v| v >= h.vertex_count()) {
        return Err(HypergraphError::InvalidVertexSet);
    }
    let n = h.vertex_count();
    let per_apex: Vec<SimpleGraph> = s.iter().map(|x| h.link_graph(x)).collect();
    let mut combined = Multigraph::new(n);
    for l in &per_apex {
        for (u, v) in l.edges() {
            combined.add(u, v, 1);
        }
    }
    let keep: Vec<usize> = (0..n).filter(|v| !s.contains(*v)).collect();
    let (reduced, reduced_vertices) = combined.restrict(&keep);
    Ok(LinkFamily {
        apex_set: s.clone(),
        per_apex,
        combined,
        reduced,
        reduced_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Generator;

    #[test]
    fn bn8_reduced_multiplicities() {
        // two apexes per part: intra-part pairs get multiplicity 2, cross 4
        let b = Hypergraph3::generate(Generator::Bn(8)).unwrap();
        let s = VertexSet::new(vec![0, 1, 4, 5]).unwrap();
        let fam = link_structures(&b, &s).unwrap();
        assert_eq!(fam.reduced_vertices, vec![2, 3, 6, 7]);
        assert_eq!(fam.reduced_mult_by_old(2, 3), Some(2));
        assert_eq!(fam.reduced_mult_by_old(6, 7), Some(2));
        assert_eq!(fam.reduced_mult_by_old(2, 6), Some(4));
        assert_eq!(fam.reduced.max_mult(), 4);
    }

    #[test]
    fn complete5_reduction_has_no_pairs() {
        let k5 = Hypergraph3::generate(Generator::Complete(5)).unwrap();
        let s = VertexSet::new(vec![0, 1, 2, 3]).unwrap();
        let fam = link_structures(&k5, &s).unwrap();
        assert_eq!(fam.reduced.vertex_count(), 1);
        assert_eq!(fam.reduced.edge_count(), 0);
    }

    #[test]
    fn combined_edge_count_is_degree_sum() {
        let b = Hypergraph3::generate(Generator::Bn(9)).unwrap();
        let s = VertexSet::new(vec![0, 2, 5, 7]).unwrap();
        let fam = link_structures(&b, &s).unwrap();
        let deg_sum: u64 = s.iter().map(|x| b.degree(x) as u64).sum();
        assert_eq!(fam.combined.edge_count(), deg_sum);
    }

    #[test]
    fn link_identity_reduced_plus_meeting_s() {
        // sum of G(S) multiplicities + L(S) edges meeting S = sum of degrees
        for (gen, s) in [
            (Generator::Bn(10), vec![0, 1, 5, 6]),
            (Generator::Complete(8), vec![1, 3, 5, 7]),
        ] {
            let h = Hypergraph3::generate(gen).unwrap();
            let s = VertexSet::new(s).unwrap();
            let fam = link_structures(&h, &s).unwrap();
            let deg_sum: u64 = s.iter().map(|x| h.degree(x) as u64).sum();
            let meeting_s = fam.combined.edge_count() - fam.reduced.edge_count();
            assert_eq!(fam.reduced.edge_count() + meeting_s, deg_sum);
            assert!(fam.reduced.max_mult() <= 4);
        }
    }
}
