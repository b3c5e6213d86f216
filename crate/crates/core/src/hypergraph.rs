//! 3-uniform hypergraphs on dense 0-based vertex labels.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{words_for, SimpleGraph};

/// A sorted set of distinct vertex indices, used for induced sets, apex sets
/// and partition classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and rejects duplicates.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, HypergraphError> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateVertex);
        }
        Ok(VertexSet(vertices))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex set contains a duplicate")]
    DuplicateVertex,
    #[error("triple {0:?} has a repeated vertex")]
    RepeatedVertex([usize; 3]),
    #[error("triple {0:?} has a vertex out of range (n = {1})")]
    VertexOutOfRange([usize; 3], usize),
    #[error("duplicate triple {0:?}")]
    DuplicateTriple([usize; 3]),
    #[error("vertex set not valid for this hypergraph")]
    InvalidVertexSet,
    #[error("{kind}, line {line}")]
    Parse { kind: ParseErrorKind, line: usize },
    #[error("n = {0} is below the minimum {1} for kind {2}")]
    TooSmall(usize, usize, &'static str),
}

#[derive(Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    BadHeader,
    MalformedLine,
    VertexOutOfRange,
    RepeatedVertex,
    DuplicateTriple,
    BadMultiplicity,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ParseErrorKind::MissingHeader => "missing vertex-count header",
            ParseErrorKind::BadHeader => "malformed vertex-count header",
            ParseErrorKind::MalformedLine => "malformed line",
            ParseErrorKind::VertexOutOfRange => "vertex out of range",
            ParseErrorKind::RepeatedVertex => "repeated vertex in triple",
            ParseErrorKind::DuplicateTriple => "duplicate triple",
            ParseErrorKind::BadMultiplicity => "multiplicity must be at least 1",
        };
        f.write_str(s)
    }
}

/// Canonical generator kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Fano,
    Complete(usize),
    Bn(usize),
    Tetrahedron,
    Octahedron,
}

/// The seven lines of the canonical labeled Fano plane on {0,…,6}.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5],
];

/// A 3-uniform hypergraph: `n` labeled vertices and a set of vertex triples.
///
/// Edges are kept sorted; per-vertex degrees, per-pair codegrees and a packed
/// membership cube are built eagerly so that pair-centric queries (link
/// extraction, embedding search) are cheap.
#[derive(Clone, Debug)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
    degrees: Vec<usize>,
    codegrees: Vec<u32>,
    /// membership cube: bit `w` of row (u,v) set iff {u,v,w} is an edge.
    cube: Vec<u64>,
}

impl PartialEq for Hypergraph3 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Hypergraph3 {}

fn sort3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

impl Hypergraph3 {
    pub fn new(n: usize, triples: Vec<[usize; 3]>) -> Result<Self, HypergraphError> {
        let mut edges: Vec<[usize; 3]> = Vec::with_capacity(triples.len());
        for t in triples {
            let t = sort3(t);
            if t[0] == t[1] || t[1] == t[2] {
                return Err(HypergraphError::RepeatedVertex(t));
            }
            if t[2] >= n {
                return Err(HypergraphError::VertexOutOfRange(t, n));
            }
            edges.push(t);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateTriple(w[0]));
        }
        Ok(Self::from_sorted_unique(n, edges))
    }

    fn from_sorted_unique(n: usize, edges: Vec<[usize; 3]>) -> Self {
        let words = words_for(n);
        let mut degrees = vec![0usize; n];
        let mut codegrees = vec![0u32; n * n];
        let mut cube = vec![0u64; n * n * words];
        for &[a, b, c] in &edges {
            degrees[a] += 1;
            degrees[b] += 1;
            degrees[c] += 1;
            for (u, v, w) in [(a, b, c), (a, c, b), (b, c, a)] {
                codegrees[u * n + v] += 1;
                codegrees[v * n + u] += 1;
                cube[(u * n + v) * words + w / 64] |= 1 << (w % 64);
                cube[(v * n + u) * words + w / 64] |= 1 << (w % 64);
            }
        }
        Hypergraph3 {
            n,
            edges,
            degrees,
            codegrees,
            cube,
        }
    }

    pub fn generate(kind: Generator) -> Result<Self, HypergraphError> {
        match kind {
            Generator::Fano => Ok(Self::from_sorted_unique(7, FANO_LINES.to_vec())),
            Generator::Tetrahedron => Self::generate(Generator::Complete(4)),
            Generator::Complete(n) => {
                if n < 3 {
                    return Err(HypergraphError::TooSmall(n, 3, "complete"));
                }
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            edges.push([a, b, c]);
                        }
                    }
                }
                Ok(Self::from_sorted_unique(n, edges))
            }
            Generator::Bn(n) => {
                if n < 3 {
                    return Err(HypergraphError::TooSmall(n, 3, "bn"));
                }
                // part 0 = low labels 0..ceil(n/2)
                let split = n.div_ceil(2);
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if a < split && c >= split {
                                edges.push([a, b, c]);
                            }
                        }
                    }
                }
                Ok(Self::from_sorted_unique(n, edges))
            }
            Generator::Octahedron => {
                // pair classes {0,1},{2,3},{4,5}; all 8 transversal triples
                let mut edges = Vec::new();
                for a in 0..2 {
                    for b in 2..4 {
                        for c in 4..6 {
                            edges.push([a, b, c]);
                        }
                    }
                }
                Ok(Self::from_sorted_unique(6, edges))
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize, c: usize) -> bool {
        let words = words_for(self.n);
        self.cube[(a * self.n + b) * words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn has_triple(&self, t: [usize; 3]) -> bool {
        self.has_edge(t[0], t[1], t[2])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn codegree(&self, u: usize, v: usize) -> u32 {
        self.codegrees[u * self.n + v]
    }

    /// Words of the membership row for the pair (u, v): bit w set iff
    /// {u,v,w} is an edge.
    #[inline]
    pub(crate) fn pair_row(&self, u: usize, v: usize) -> &[u64] {
        let words = words_for(self.n);
        &self.cube[(u * self.n + v) * words..(u * self.n + v + 1) * words]
    }

    /// Link graph of `x`: pairs {u,w} with {x,u,w} an edge, as a graph on
    /// the full vertex set.
    pub fn link_graph(&self, x: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for &[a, b, c] in &self.edges {
            if a == x {
                g.add_edge(b, c);
            } else if b == x {
                g.add_edge(a, c);
            } else if c == x {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Number of hyperedges entirely inside `a`.
    pub fn edges_within(&self, a: &VertexSet) -> Result<usize, HypergraphError> {
        if a.iter().any(|v| v >= self.n) {
            return Err(HypergraphError::InvalidVertexSet);
        }
        let mut mask = vec![false; self.n];
        for v in a.iter() {
            mask[v] = true;
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| mask[e[0]] && mask[e[1]] && mask[e[2]])
            .count())
    }

    /// True iff every two distinct edges share at most one vertex,
    /// equivalently all codegrees are at most 1.
    pub fn is_linear(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.codegree(u, v) > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Induced subhypergraph on `a`, relabeled to 0..|a|. Returns the
    /// relabeling map: `map[new] = old`.
    pub fn induced(&self, a: &VertexSet) -> Result<(Hypergraph3, Vec<usize>), HypergraphError> {
        if a.iter().any(|v| v >= self.n) {
            return Err(HypergraphError::InvalidVertexSet);
        }
        let map: Vec<usize> = a.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let edges: Vec<[usize; 3]> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| inv[v] != usize::MAX))
            .map(|e| sort3([inv[e[0]], inv[e[1]], inv[e[2]]]))
            .collect();
        let mut edges = edges;
        edges.sort_unstable();
        Ok((Self::from_sorted_unique(map.len(), edges), map))
    }

    /// Parse the text format: line 1 = n, then one triple per non-empty
    /// line; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<[usize; 3]> = Vec::new();
        let mut seen: HashSet<[usize; 3]> = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let parse_err = |kind| HypergraphError::Parse { kind, line };
            match n {
                None => {
                    n = Some(
                        s.parse::<usize>()
                            .map_err(|_| parse_err(ParseErrorKind::BadHeader))?,
                    );
                }
                Some(n) => {
                    let fields: Vec<&str> = s.split_whitespace().collect();
                    if fields.len() != 3 {
                        return Err(parse_err(ParseErrorKind::MalformedLine));
                    }
                    let mut t = [0usize; 3];
                    for (i, f) in fields.iter().enumerate() {
                        t[i] = f
                            .parse::<usize>()
                            .map_err(|_| parse_err(ParseErrorKind::MalformedLine))?;
                    }
                    let t = sort3(t);
                    if t[0] == t[1] || t[1] == t[2] {
                        return Err(parse_err(ParseErrorKind::RepeatedVertex));
                    }
                    if t[2] >= n {
                        return Err(parse_err(ParseErrorKind::VertexOutOfRange));
                    }
                    if !seen.insert(t) {
                        return Err(parse_err(ParseErrorKind::DuplicateTriple));
                    }
                    edges.push(t);
                }
            }
        }
        let n = n.ok_or(HypergraphError::Parse {
            kind: ParseErrorKind::MissingHeader,
            line: text.lines().count() + 1,
        })?;
        edges.sort_unstable();
        Ok(Self::from_sorted_unique(n, edges))
    }

    /// Canonical serialization: header, then sorted triples.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e[0], e[1], e[2]);
        }
        out
    }

    /// All vertices as a set.
    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }
}

/// Exact Turán number of the Fano plane for n >= 8:
/// `C(floor(n/2),2)*ceil(n/2) + C(ceil(n/2),2)*floor(n/2)`.
pub fn ex_fano(n: usize) -> Result<u64, HypergraphError> {
    if n < 8 {
        return Err(HypergraphError::TooSmall(n, 8, "ex_fano"));
    }
    let lo = (n / 2) as u64;
    let hi = n.div_ceil(2) as u64;
    Ok(lo * (lo - 1) / 2 * hi + hi * (hi - 1) / 2 * lo)
}

/// `C(n, k)` as u64; panics on overflow (callers stay far below it).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Per-vertex degrees, minimum degree and the codegree table.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    codegrees: Vec<u32>,
    n: usize,
}

impl DegreeProfile {
    pub fn codegree(&self, u: usize, v: usize) -> u32 {
        self.codegrees[u * self.n + v]
    }
}

pub fn degree_profile(h: &Hypergraph3) -> DegreeProfile {
    DegreeProfile {
        degrees: h.degrees.clone(),
        min_degree: h.degrees.iter().copied().min().unwrap_or(0),
        codegrees: h.codegrees.clone(),
        n: h.n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_is_the_linear_seven_line_plane() {
        let f = Hypergraph3::generate(Generator::Fano).unwrap();
        assert_eq!(f.vertex_count(), 7);
        assert_eq!(f.edge_count(), 7);
        assert!(f.is_linear());
        for u in 0..7 {
            assert_eq!(f.degree(u), 3);
            for v in u + 1..7 {
                assert_eq!(f.codegree(u, v), 1, "pair ({u},{v})");
            }
        }
    }

    #[test]
    fn octahedron_has_eight_edges() {
        let o = Hypergraph3::generate(Generator::Octahedron).unwrap();
        assert_eq!(o.vertex_count(), 6);
        assert_eq!(o.edge_count(), 8);
    }

    #[test]
    fn bn7_has_thirty_edges() {
        // C(7,3) - C(3,3) - C(4,3) = 35 - 1 - 4
        let b = Hypergraph3::generate(Generator::Bn(7)).unwrap();
        assert_eq!(b.edge_count(), 30);
    }

    #[test]
    fn bn_part_zero_takes_low_labels() {
        let b = Hypergraph3::generate(Generator::Bn(9)).unwrap();
        // part 0 = {0..4}, part 1 = {5..8}; intra-part triples absent
        assert!(!b.has_edge(0, 1, 2));
        assert!(!b.has_edge(5, 6, 7));
        assert!(b.has_edge(0, 1, 5));
    }

    #[test]
    fn generators_reject_small_n() {
        assert!(Hypergraph3::generate(Generator::Complete(2)).is_err());
        assert!(Hypergraph3::generate(Generator::Bn(2)).is_err());
    }

    #[test]
    fn ex_fano_small_values() {
        assert_eq!(ex_fano(8).unwrap(), 48);
        assert_eq!(ex_fano(9).unwrap(), 70);
        assert!(ex_fano(7).is_err());
    }

    #[test]
    fn ex_fano_equals_cross_triple_identity_up_to_500() {
        // C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3)
        for n in 8..=500 {
            let expect = binomial(n, 3) - binomial(n / 2, 3) - binomial(n.div_ceil(2), 3);
            assert_eq!(ex_fano(n).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn degree_sum_and_codegree_sum_are_triple_counts() {
        let b = Hypergraph3::generate(Generator::Bn(10)).unwrap();
        let deg_sum: usize = b.degrees().iter().sum();
        assert_eq!(deg_sum, 3 * b.edge_count());
        let mut codeg_sum: u64 = 0;
        for u in 0..10 {
            for v in u + 1..10 {
                codeg_sum += b.codegree(u, v) as u64;
            }
        }
        assert_eq!(codeg_sum, 3 * b.edge_count() as u64);
    }

    #[test]
    fn bn_degree_formula() {
        // a vertex in a part of size s has degree C(n-1,2) - C(s-1,2)
        for n in [8usize, 9, 12, 15] {
            let b = Hypergraph3::generate(Generator::Bn(n)).unwrap();
            let split = n.div_ceil(2);
            for v in 0..n {
                let s = if v < split { split } else { n - split };
                let expect = binomial(n - 1, 2) - binomial(s - 1, 2);
                assert_eq!(b.degree(v) as u64, expect, "n = {n}, v = {v}");
            }
        }
    }

    #[test]
    fn bn8_degree_is_eighteen() {
        let b = Hypergraph3::generate(Generator::Bn(8)).unwrap();
        for v in 0..8 {
            assert_eq!(b.degree(v), 18);
        }
    }

    #[test]
    fn min_degree_complete5() {
        let k5 = Hypergraph3::generate(Generator::Complete(5)).unwrap();
        let p = degree_profile(&k5);
        assert_eq!(p.min_degree, 6);
        assert_eq!(p.codegree(0, 1), 3);
    }

    #[test]
    fn linearity_cases() {
        assert!(!Hypergraph3::generate(Generator::Complete(4))
            .unwrap()
            .is_linear());
        assert!(Hypergraph3::new(5, vec![]).unwrap().is_linear());
    }

    #[test]
    fn edges_within_cases() {
        let b = Hypergraph3::generate(Generator::Bn(10)).unwrap();
        let part0 = VertexSet::new((0..5).collect()).unwrap();
        assert_eq!(b.edges_within(&part0).unwrap(), 0);
        assert_eq!(
            b.edges_within(&b.full_vertex_set()).unwrap(),
            b.edge_count()
        );
        let k6 = Hypergraph3::generate(Generator::Complete(6)).unwrap();
        let four = VertexSet::new(vec![1, 2, 4, 5]).unwrap();
        assert_eq!(k6.edges_within(&four).unwrap(), 4);
    }

    #[test]
    fn induced_matches_edges_within() {
        let k7 = Hypergraph3::generate(Generator::Complete(7)).unwrap();
        let a = VertexSet::new(vec![0, 2, 4, 6]).unwrap();
        let (sub, map) = k7.induced(&a).unwrap();
        assert_eq!(sub, Hypergraph3::generate(Generator::Complete(4)).unwrap());
        assert_eq!(map, vec![0, 2, 4, 6]);
        assert_eq!(sub.edge_count(), k7.edges_within(&a).unwrap());

        let (idem, _) = k7.induced(&k7.full_vertex_set()).unwrap();
        assert_eq!(idem, k7);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = Hypergraph3::parse("3\n0 1 5\n").unwrap_err();
        assert_eq!(e.to_string(), "vertex out of range, line 2");
        let e = Hypergraph3::parse("3\n0 1\n").unwrap_err();
        assert_eq!(e.to_string(), "malformed line, line 2");
        let e = Hypergraph3::parse("4\n0 1 2\n2 1 0\n").unwrap_err();
        assert_eq!(e.to_string(), "duplicate triple, line 3");
        assert!(Hypergraph3::parse("").is_err());
    }

    #[test]
    fn parse_basic_and_roundtrip() {
        let h = Hypergraph3::parse("3\n0 1 2\n").unwrap();
        assert_eq!(h, Hypergraph3::generate(Generator::Complete(3)).unwrap());
        let b = Hypergraph3::generate(Generator::Bn(9)).unwrap();
        let text = b.serialize();
        assert_eq!(Hypergraph3::parse(&text).unwrap(), b);
        // comments and unsorted triples are accepted
        let h = Hypergraph3::parse("# comment\n4\n\n2 1 0\n# more\n3 1 0\n").unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(0, 1, 3));
    }
}
