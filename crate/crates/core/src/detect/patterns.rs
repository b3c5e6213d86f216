//! Multiplicity-pattern checks on link multigraphs and the Fano
//! constructions they force.

use serde::Serialize;
use thiserror::Error;

use crate::detect::links::{link_structures, LinkFamily};
use crate::detect::matching::distinct_representatives;
use crate::detect::witness::{fano_from_rainbow_k4, FanoWitness, WitnessError};
use crate::hypergraph::{Hypergraph3, HypergraphError, VertexSet};
use crate::multigraph::Multigraph;

#[derive(Debug, Error)]
pub enum DetectError {
    #[error("apex set does not span a tetrahedron")]
    NotTetrahedron,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(
        "pattern {pattern:?} matched on {set:?} but no system of distinct representatives exists; \
         the lemma's arithmetic guarantees one, so this input state is contradictory"
    )]
    HallContradiction {
        pattern: Lemma25Pattern,
        set: Vec<usize>,
    },
}

/// Lexicographically least 4-set spanning at least 21 edges, or `None`.
pub fn heavy_quadruple(g: &Multigraph) -> Option<VertexSet> {
    let n = g.vertex_count();
    // remaining pairs are bounded by the actual maximum multiplicity
    let mm = g.max_mult() as u64;
    for a in 0..n {
        for b in a + 1..n {
            let mab = g.mult(a, b) as u64;
            if mab + 5 * mm < 21 {
                continue;
            }
            for c in b + 1..n {
                let m3 = mab + g.mult(a, c) as u64 + g.mult(b, c) as u64;
                if m3 + 3 * mm < 21 {
                    continue;
                }
                for d in c + 1..n {
                    let span =
                        m3 + g.mult(a, d) as u64 + g.mult(b, d) as u64 + g.mult(c, d) as u64;
                    if span >= 21 {
                        return Some(VertexSet::new(vec![a, b, c, d]).unwrap());
                    }
                }
            }
        }
    }
    None
}

/// Outcome of the 20-cap edge-bound check: `cap20` is true when no four
/// vertices span 21 or more edges; in that case the total edge count must
/// stay within `3*C(n,2) + n - 2`.
#[derive(Clone, Debug, Serialize)]
pub struct FkReport {
    pub cap20: bool,
    pub bound_holds: bool,
    pub witness: Option<VertexSet>,
}

/// The multigraph edge bound `3*C(n,2) + n - 2`.
pub fn fk_bound(n: usize) -> u64 {
    3 * (n as u64) * (n as u64 - 1) / 2 + n as u64 - 2
}

pub fn fk_check(g: &Multigraph) -> Result<FkReport, HypergraphError> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(HypergraphError::TooSmall(n, 4, "fk_check"));
    }
    let witness = heavy_quadruple(g);
    Ok(FkReport {
        cap20: witness.is_none(),
        bound_holds: g.edge_count() <= fk_bound(n),
        witness,
    })
}

/// Parts of the multiplicity-pattern lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lemma25Pattern {
    I,
    II,
    III,
    IV,
    V,
}

pub const LEMMA25_PATTERNS: [Lemma25Pattern; 5] = [
    Lemma25Pattern::I,
    Lemma25Pattern::II,
    Lemma25Pattern::III,
    Lemma25Pattern::IV,
    Lemma25Pattern::V,
];

fn mults_of(g: &Multigraph, q: [usize; 4]) -> impl Fn(usize, usize) -> u32 + '_ {
    move |i, j| g.mult(q[i], q[j])
}

fn pattern_matches(g: &Multigraph, q: [usize; 4], p: Lemma25Pattern) -> bool {
    let m = mults_of(g, q);
    let perms: Vec<[usize; 4]> = {
        let mut out = Vec::new();
        let idx = [0usize, 1, 2, 3];
        permute(&idx, &mut out);
        out
    };
    match p {
        Lemma25Pattern::I => {
            let all: Vec<u32> = (0..4)
                .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
                .map(|(i, j)| m(i, j))
                .collect();
            all.iter().all(|&x| x >= 3) && all.iter().any(|&x| x >= 4)
        }
        Lemma25Pattern::II => false, // five-vertex pattern, handled separately
        Lemma25Pattern::III => perms.iter().any(|&[y1, y2, y3, y4]| {
            if m(y1, y2) < 4 || m(y1, y3) < 4 || m(y2, y3) < 3 {
                return false;
            }
            let mut rest = [m(y1, y4), m(y2, y4), m(y3, y4)];
            rest.sort_unstable_by(|a, b| b.cmp(a));
            rest[0] >= 4 && rest[1] >= 3 && rest[2] >= 2
        }),
        Lemma25Pattern::IV => perms.iter().any(|&[y1, y2, y3, y4]| {
            m(y1, y2) >= 4
                && m(y3, y4) >= 2
                && m(y1, y3) >= 2
                && m(y2, y3) >= 4
                && m(y1, y4) >= 3
                && m(y2, y4) >= 3
        }),
        Lemma25Pattern::V => perms.iter().any(|&[y1, y2, y3, y4]| {
            m(y1, y2) >= 4
                && m(y1, y3) >= 4
                && m(y2, y3) >= 3
                && m(y1, y4) >= 4
                && m(y2, y4) >= 2
                && m(y3, y4) >= 1
        }),
    }
}

fn permute(items: &[usize; 4], out: &mut Vec<[usize; 4]>) {
    let mut idx = *items;
    // Heap's algorithm, iterative
    let mut c = [0usize; 4];
    out.push(idx);
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            out.push(idx);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The three perfect matchings of a 4-set's pairs.
fn quad_matchings(q: [usize; 4]) -> [[[usize; 2]; 2]; 3] {
    [
        [[q[0], q[1]], [q[2], q[3]]],
        [[q[0], q[2]], [q[1], q[3]]],
        [[q[0], q[3]], [q[1], q[2]]],
    ]
}

/// Attempts the rainbow-K4 construction on a quad of G(S) (reduced labels):
/// computes, per matching, the set of apexes whose link contains both
/// matching edges, finds distinct representatives, and assembles the
/// witness. `None` when Hall's condition fails for this quad.
pub fn rainbow_quad(
    h: &Hypergraph3,
    links: &LinkFamily,
    quad_reduced: [usize; 4],
) -> Result<Option<FanoWitness>, DetectError> {
    let old: Vec<usize> = quad_reduced
        .iter()
        .map(|&v| links.reduced_vertices[v])
        .collect();
    let q = [old[0], old[1], old[2], old[3]];
    let matchings = quad_matchings(q);
    let apexes: Vec<usize> = links.apex_set.iter().collect();
    let j_sets: Vec<Vec<usize>> = matchings
        .iter()
        .map(|m| {
            (0..apexes.len())
                .filter(|&xi| {
                    let l = &links.per_apex[xi];
                    m.iter().all(|p| l.has_edge(p[0], p[1]))
                })
                .collect()
        })
        .collect();
    let Some(rep) = distinct_representatives(&j_sets, apexes.len()) else {
        return Ok(None);
    };
    let base = [apexes[rep[0]], apexes[rep[1]], apexes[rep[2]]];
    let w = fano_from_rainbow_k4(h, base, q, matchings)?;
    Ok(Some(w))
}

/// Scans G(S) for the five multiplicity patterns in order; on the first hit
/// assembles a witness through the rainbow-K4 machinery. A matched pattern
/// with no distinct-representative assignment is a contradiction of the
/// lemma's arithmetic and is reported as [`DetectError::HallContradiction`].
pub fn pattern_scan_lemma25(
    h: &Hypergraph3,
    s: &VertexSet,
) -> Result<Option<(Lemma25Pattern, FanoWitness)>, DetectError> {
    if s.len() != 4 {
        return Err(DetectError::NotTetrahedron);
    }
    let sv: Vec<usize> = s.iter().collect();
    for (i, &a) in sv.iter().enumerate() {
        for (j, &b) in sv.iter().enumerate().skip(i + 1) {
            for &c in sv.iter().skip(j + 1) {
                if !h.has_edge(a, b, c) {
                    return Err(DetectError::NotTetrahedron);
                }
            }
        }
    }
    let links = link_structures(h, s)?;
    scan_with_links(h, &links)
}

pub(crate) fn scan_with_links(
    h: &Hypergraph3,
    links: &LinkFamily,
) -> Result<Option<(Lemma25Pattern, FanoWitness)>, DetectError> {
    let g = &links.reduced;
    let n = g.vertex_count();
    for pattern in LEMMA25_PATTERNS {
        if pattern == Lemma25Pattern::II {
            if let Some(found) = scan_k5(h, links)? {
                return Ok(Some((Lemma25Pattern::II, found)));
            }
            continue;
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        if !pattern_matches(g, q, pattern) {
                            continue;
                        }
                        match rainbow_quad(h, links, q)? {
                            Some(w) => return Ok(Some((pattern, w))),
                            None => {
                                return Err(DetectError::HallContradiction {
                                    pattern,
                                    set: q.to_vec(),
                                })
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Pattern (ii): a K5 whose edges all have multiplicity at least 3. Some
/// 4-subset must admit the rainbow assignment.
fn scan_k5(
    h: &Hypergraph3,
    links: &LinkFamily,
) -> Result<Option<FanoWitness>, DetectError> {
    let g = &links.reduced;
    let n = g.vertex_count();
    let ge3 = |u: usize, v: usize| g.mult(u, v) >= 3;
    for a in 0..n {
        for b in a + 1..n {
            if !ge3(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !(ge3(a, c) && ge3(b, c)) {
                    continue;
                }
                for d in c + 1..n {
                    if !(ge3(a, d) && ge3(b, d) && ge3(c, d)) {
                        continue;
                    }
                    for e in d + 1..n {
                        if !(ge3(a, e) && ge3(b, e) && ge3(c, e) && ge3(d, e)) {
                            continue;
                        }
                        let five = [a, b, c, d, e];
                        for skip in (0..5).rev() {
                            let mut q = [0usize; 4];
                            let mut k = 0;
                            for (i, &v) in five.iter().enumerate() {
                                if i != skip {
                                    q[k] = v;
                                    k += 1;
                                }
                            }
                            if let Some(w) = rainbow_quad(h, links, q)? {
                                return Ok(Some(w));
                            }
                        }
                        return Err(DetectError::HallContradiction {
                            pattern: Lemma25Pattern::II,
                            set: five.to_vec(),
                        });
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Smallest instances realizing each pattern of the multiplicity lemma:
/// a tetrahedron on {0,1,2,3} plus link edges over a quad (or 5-set for
/// pattern (ii)) chosen to meet the stated multiplicities exactly.
pub fn lemma25_minimal_instance(p: Lemma25Pattern) -> (Hypergraph3, VertexSet) {
    let s = VertexSet::new(vec![0, 1, 2, 3]).unwrap();
    let mut edges = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let all = [0usize, 1, 2, 3];
    let mut put = |apexes: &[usize], u: usize, v: usize| {
        for &x in apexes {
            let mut t = [x, u, v];
            t.sort_unstable();
            edges.push(t);
        }
    };
    let n = match p {
        Lemma25Pattern::I => {
            put(&all, 4, 5);
            for (u, v) in [(4, 6), (4, 7), (5, 6), (5, 7), (6, 7)] {
                put(&[0, 1, 2], u, v);
            }
            8
        }
        Lemma25Pattern::II => {
            for u in 4..9 {
                for v in (u + 1)..9 {
                    put(&[0, 1, 2], u, v);
                }
            }
            9
        }
        Lemma25Pattern::III => {
            put(&all, 4, 5);
            put(&all, 4, 6);
            put(&[0, 1, 2], 5, 6);
            put(&all, 4, 7);
            put(&[0, 1, 2], 5, 7);
            put(&[0, 1], 6, 7);
            8
        }
        Lemma25Pattern::IV => {
            put(&all, 4, 5);
            put(&[0, 1], 6, 7);
            put(&[2, 3], 4, 6);
            put(&all, 5, 6);
            put(&[1, 2, 3], 4, 7);
            put(&[0, 2, 3], 5, 7);
            8
        }
        Lemma25Pattern::V => {
            put(&all, 4, 5);
            put(&all, 4, 6);
            put(&[0, 1, 2], 5, 6);
            put(&all, 4, 7);
            put(&[0, 1], 5, 7);
            put(&[0], 6, 7);
            8
        }
    };
    (Hypergraph3::new(n, edges).unwrap(), s)
}
