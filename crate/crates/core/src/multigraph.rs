//! Loopless multigraphs with integer edge multiplicities.

use std::fmt::Write as _;

use crate::hypergraph::{HypergraphError, ParseErrorKind};

/// A loopless multigraph on `n` vertices; multiplicities are stored densely
/// in the strict upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            mult: vec![0; n * (n.saturating_sub(1)) / 2],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v, "loops are not allowed");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // offset of row a in the packed strict upper triangle
        a * self.n - a * (a + 1) / 2 + (b - a - 1)
    }

    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[self.idx(u, v)]
    }

    pub fn set_mult(&mut self, u: usize, v: usize, m: u32) {
        assert!(u != v && u < self.n && v < self.n, "bad pair ({u},{v})");
        let i = self.idx(u, v);
        self.mult[i] = m;
    }

    pub fn add(&mut self, u: usize, v: usize, m: u32) {
        assert!(u != v && u < self.n && v < self.n, "bad pair ({u},{v})");
        let i = self.idx(u, v);
        self.mult[i] += m;
    }

    /// Total edge count (sum of multiplicities).
    pub fn edge_count(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    /// Sum of multiplicities at `v`.
    pub fn degree(&self, v: usize) -> u64 {
        (0..self.n)
            .filter(|&u| u != v)
            .map(|u| self.mult(u, v) as u64)
            .sum()
    }

    pub fn max_mult(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    /// Sum of the pair multiplicities spanned by `set`.
    pub fn span(&self, set: &[usize]) -> u64 {
        let mut total = 0u64;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                total += self.mult(u, v) as u64;
            }
        }
        total
    }

    /// Pairs with positive multiplicity, ascending.
    pub fn positive_pairs(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.mult(u, v);
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Restriction to `keep` (relabeled 0..len). Returns the map new -> old.
    pub fn restrict(&self, keep: &[usize]) -> (Multigraph, Vec<usize>) {
        let map = keep.to_vec();
        let mut g = Multigraph::new(map.len());
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                let m = self.mult(map[i], map[j]);
                if m > 0 {
                    g.set_mult(i, j, m);
                }
            }
        }
        (g, map)
    }

    /// Parse the text format: line 1 = n; then `u v m` per line with m >= 1.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut g: Option<Multigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let parse_err = |kind| HypergraphError::Parse { kind, line };
            match g {
                None => {
                    let n = s
                        .parse::<usize>()
                        .map_err(|_| parse_err(ParseErrorKind::BadHeader))?;
                    g = Some(Multigraph::new(n));
                }
                Some(ref mut g) => {
                    let fields: Vec<&str> = s.split_whitespace().collect();
                    if fields.len() != 3 {
                        return Err(parse_err(ParseErrorKind::MalformedLine));
                    }
                    let u = fields[0]
                        .parse::<usize>()
                        .map_err(|_| parse_err(ParseErrorKind::MalformedLine))?;
                    let v = fields[1]
                        .parse::<usize>()
                        .map_err(|_| parse_err(ParseErrorKind::MalformedLine))?;
                    let m = fields[2]
                        .parse::<u32>()
                        .map_err(|_| parse_err(ParseErrorKind::MalformedLine))?;
                    if m == 0 {
                        return Err(parse_err(ParseErrorKind::BadMultiplicity));
                    }
                    if u == v {
                        return Err(parse_err(ParseErrorKind::RepeatedVertex));
                    }
                    if u >= g.vertex_count() || v >= g.vertex_count() {
                        return Err(parse_err(ParseErrorKind::VertexOutOfRange));
                    }
                    if g.mult(u, v) != 0 {
                        return Err(parse_err(ParseErrorKind::DuplicateTriple));
                    }
                    g.set_mult(u, v, m);
                }
            }
        }
        g.ok_or(HypergraphError::Parse {
            kind: ParseErrorKind::MissingHeader,
            line: text.lines().count() + 1,
        })
    }

    /// Canonical serialization: header, then sorted `u v m` lines.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for (u, v, m) in self.positive_pairs() {
            let _ = writeln!(out, "{u} {v} {m}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mult_degree_and_span() {
        let mut g = Multigraph::new(5);
        g.set_mult(0, 1, 4);
        g.set_mult(1, 2, 3);
        g.add(2, 0, 2);
        assert_eq!(g.mult(1, 0), 4);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(1), 7);
        assert_eq!(g.span(&[0, 1, 2]), 9);
        assert_eq!(g.span(&[0, 3, 4]), 0);
    }

    #[test]
    fn restrict_relabels() {
        let mut g = Multigraph::new(6);
        g.set_mult(1, 4, 2);
        g.set_mult(4, 5, 7);
        let (r, map) = g.restrict(&[1, 4, 5]);
        assert_eq!(map, vec![1, 4, 5]);
        assert_eq!(r.mult(0, 1), 2);
        assert_eq!(r.mult(1, 2), 7);
        assert_eq!(r.mult(0, 2), 0);
    }

    #[test]
    fn parse_and_serialize_roundtrip() {
        let g = Multigraph::parse("4\n0 1 3\n2 3 1\n").unwrap();
        assert_eq!(g.mult(0, 1), 3);
        assert_eq!(Multigraph::parse(&g.serialize()).unwrap(), g);
        assert_eq!(
            Multigraph::parse("3\n0 1 0\n").unwrap_err().to_string(),
            "multiplicity must be at least 1, line 2"
        );
        assert!(Multigraph::parse("3\n1 1 2\n").is_err());
        assert!(Multigraph::parse("3\n0 9 2\n").is_err());
    }
}
