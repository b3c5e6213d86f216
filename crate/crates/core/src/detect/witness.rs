//! Fano-plane witnesses and the two direct construction lemmas.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detect::embed::is_fano_edge_set;
use crate::hypergraph::Hypergraph3;

/// Seven vertices and seven triples certifying a Fano copy inside a host.
///
/// Serializes as `{"vertices":[...7], "edges":[[a,b,c] x7]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 3]>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("hyperedge {0:?} is missing from the host")]
    MissingEdge([usize; 3]),
    #[error("base edge {0:?} is not a hyperedge")]
    BadBaseEdge([usize; 3]),
    #[error("quad {0:?} must be four distinct vertices disjoint from the base edge")]
    BadQuad([usize; 4]),
    #[error("matchings do not partition the six pairs of the quad into perfect matchings")]
    BadMatchings,
    #[error("pairs are not pairwise disjoint or touch the apex")]
    BadPairs,
    #[error("witness is not a Fano plane: {0}")]
    NotFano(&'static str),
}

impl FanoWitness {
    /// Builds from a full vertex map `phi[fano vertex] -> host vertex` and
    /// validates against the host.
    pub(crate) fn from_fano_map(h: &Hypergraph3, phi: &[usize]) -> Result<Self, WitnessError> {
        let mut vertices = phi.to_vec();
        vertices.sort_unstable();
        let mut edges = crate::detect::embed::fano_image_edges(phi);
        edges.sort_unstable();
        let w = FanoWitness { vertices, edges };
        w.validate(h)?;
        Ok(w)
    }

    pub(crate) fn from_edges(h: &Hypergraph3, mut edges: Vec<[usize; 3]>) -> Result<Self, WitnessError> {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let w = FanoWitness { vertices, edges };
        w.validate(h)?;
        Ok(w)
    }

    /// Checks both witness invariants: all seven triples are host edges, and
    /// the triples form a Fano plane on the seven vertices.
    pub fn validate(&self, h: &Hypergraph3) -> Result<(), WitnessError> {
        if self.vertices.len() != 7 {
            return Err(WitnessError::NotFano("expected 7 distinct vertices"));
        }
        for &e in &self.edges {
            if !h.has_triple(e) {
                return Err(WitnessError::MissingEdge(e));
            }
        }
        if !is_fano_edge_set(&self.edges) {
            return Err(WitnessError::NotFano(
                "triples do not cover every vertex pair exactly once",
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Assembles a Fano witness from a rainbow K4 over a base hyperedge: the
/// base edge {x1,x2,x3}, a disjoint quad, and three perfect matchings
/// M1,M2,M3 of the quad's pairs with Mi contained in the link of xi.
///
/// The witness is {x1,x2,x3} plus the six triples {xi} ∪ m for m in Mi.
pub fn fano_from_rainbow_k4(
    h: &Hypergraph3,
    base_edge: [usize; 3],
    quad: [usize; 4],
    matchings: [[[usize; 2]; 2]; 3],
) -> Result<FanoWitness, WitnessError> {
    let base = sorted3(base_edge[0], base_edge[1], base_edge[2]);
    if !h.has_triple(base) {
        return Err(WitnessError::BadBaseEdge(base));
    }
    let mut q = quad;
    q.sort_unstable();
    if q.windows(2).any(|w| w[0] == w[1]) || q.iter().any(|v| base.contains(v)) {
        return Err(WitnessError::BadQuad(quad));
    }
    // the three matchings must partition the six pairs into perfect matchings
    let mut pairs_seen: Vec<[usize; 2]> = Vec::new();
    for m in &matchings {
        let mut verts: Vec<usize> = m.iter().flatten().copied().collect();
        verts.sort_unstable();
        if verts != q {
            return Err(WitnessError::BadMatchings);
        }
        for p in m {
            let mut p = *p;
            p.sort_unstable();
            pairs_seen.push(p);
        }
    }
    pairs_seen.sort_unstable();
    pairs_seen.dedup();
    if pairs_seen.len() != 6 {
        return Err(WitnessError::BadMatchings);
    }
    let mut edges = vec![base];
    for (i, m) in matchings.iter().enumerate() {
        let apex = base_edge[i];
        for p in m {
            let t = sorted3(apex, p[0], p[1]);
            if !h.has_triple(t) {
                return Err(WitnessError::MissingEdge(t));
            }
            edges.push(t);
        }
    }
    FanoWitness::from_edges(h, edges)
}

/// Assembles a Fano witness from an apex over an octahedron: three pairwise
/// disjoint link edges e1,e2,e3 of the apex such that all eight transversal
/// triples are hyperedges.
///
/// The witness keeps the three apex triples and the four transversals
/// {u1,u2,u3}, {u1,w2,w3}, {w1,u2,w3}, {w1,w2,u3} with ei = {ui,wi}.
pub fn fano_from_apex_octahedron(
    h: &Hypergraph3,
    apex: usize,
    pairs: [[usize; 2]; 3],
) -> Result<FanoWitness, WitnessError> {
    let mut all: Vec<usize> = pairs.iter().flatten().copied().collect();
    all.push(apex);
    all.sort_unstable();
    all.dedup();
    if all.len() != 7 {
        return Err(WitnessError::BadPairs);
    }
    for p in &pairs {
        let t = sorted3(apex, p[0], p[1]);
        if !h.has_triple(t) {
            return Err(WitnessError::MissingEdge(t));
        }
    }
    let u: Vec<usize> = pairs.iter().map(|p| p[0].min(p[1])).collect();
    let w: Vec<usize> = pairs.iter().map(|p| p[0].max(p[1])).collect();
    // all eight transversals must be present even though only four are kept
    for a in [u[0], w[0]] {
        for b in [u[1], w[1]] {
            for c in [u[2], w[2]] {
                let t = sorted3(a, b, c);
                if !h.has_triple(t) {
                    return Err(WitnessError::MissingEdge(t));
                }
            }
        }
    }
    let mut edges = vec![
        sorted3(apex, u[0], w[0]),
        sorted3(apex, u[1], w[1]),
        sorted3(apex, u[2], w[2]),
        sorted3(u[0], u[1], u[2]),
        sorted3(u[0], w[1], w[2]),
        sorted3(w[0], u[1], w[2]),
        sorted3(w[0], w[1], u[2]),
    ];
    edges.sort_unstable();
    FanoWitness::from_edges(h, edges)
}
