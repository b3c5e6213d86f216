//! Backtracking subhypergraph embedding with bitset pruning.

use crate::graph::words_for;
use crate::hypergraph::{Hypergraph3, VertexSet, FANO_LINES};

/// Static search plan for embedding a pattern `F` into hosts.
struct Plan {
    /// Pattern vertices in placement order.
    order: Vec<usize>,
    /// For position i: pairs of earlier positions (pa, pb) such that
    /// {order[pa], order[pb], order[i]} is a pattern edge.
    constraints: Vec<Vec<(usize, usize)>>,
    /// Pattern degree of order[i].
    deg_req: Vec<usize>,
}

fn build_plan(f: &Hypergraph3) -> Plan {
    let n = f.vertex_count();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        // next vertex: most edges completed against placed, then degree, then index
        let mut best_v = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let completed = f
                .edges()
                .iter()
                .filter(|e| e.contains(&v) && e.iter().all(|&x| x == v || placed[x]))
                .count();
            let key = (completed, f.degree(v));
            if best_v == usize::MAX || key > best_key {
                best_v = v;
                best_key = key;
            }
        }
        order.push(best_v);
        placed[best_v] = true;
    }
    let pos_of: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let mut constraints = vec![Vec::new(); n];
    for e in f.edges() {
        let mut ps: Vec<usize> = e.iter().map(|&v| pos_of[v]).collect();
        ps.sort_unstable();
        constraints[ps[2]].push((ps[0], ps[1]));
    }
    let deg_req = order.iter().map(|&v| f.degree(v)).collect();
    Plan {
        order,
        constraints,
        deg_req,
    }
}

struct Search<'a> {
    h: &'a Hypergraph3,
    plan: &'a Plan,
    words: usize,
    phi: Vec<usize>,
    used: Vec<u64>,
    /// per-depth candidate buffers
    bufs: Vec<Vec<u64>>,
    count: u64,
    find_first: bool,
    found: Option<Vec<usize>>,
}

impl Search<'_> {
    fn fill_candidates(&mut self, pos: usize) {
        let cons = &self.plan.constraints[pos];
        if cons.is_empty() {
            for i in 0..self.words {
                self.bufs[pos][i] = !self.used[i];
            }
            let tail = self.h.vertex_count() % 64;
            if tail != 0 {
                self.bufs[pos][self.words - 1] &= (1u64 << tail) - 1;
            }
        } else {
            let (pa, pb) = cons[0];
            let row = self.h.pair_row(self.phi[pa], self.phi[pb]);
            for i in 0..self.words {
                self.bufs[pos][i] = row[i] & !self.used[i];
            }
            for &(pa, pb) in &cons[1..] {
                let row = self.h.pair_row(self.phi[pa], self.phi[pb]);
                for i in 0..self.words {
                    self.bufs[pos][i] &= row[i];
                }
            }
        }
    }

    fn run(&mut self, pos: usize) {
        if pos == self.plan.order.len() {
            self.count += 1;
            if self.find_first && self.found.is_none() {
                let mut map = vec![0usize; self.plan.order.len()];
                for (i, &fv) in self.plan.order.iter().enumerate() {
                    map[fv] = self.phi[i];
                }
                self.found = Some(map);
            }
            return;
        }
        self.fill_candidates(pos);
        let deg_req = self.plan.deg_req[pos];
        let unconstrained = self.plan.constraints[pos].is_empty();
        for wi in 0..self.words {
            let mut w = self.bufs[pos][wi];
            while w != 0 {
                let v = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                if unconstrained && self.h.degree(v) < deg_req {
                    continue;
                }
                self.phi[pos] = v;
                self.used[v / 64] |= 1 << (v % 64);
                self.run(pos + 1);
                self.used[v / 64] &= !(1 << (v % 64));
                if self.find_first && self.found.is_some() {
                    return;
                }
            }
        }
    }
}

fn search(h: &Hypergraph3, f: &Hypergraph3, find_first: bool) -> (u64, Option<Vec<usize>>) {
    if f.vertex_count() > h.vertex_count() {
        return (0, None);
    }
    let plan = build_plan(f);
    let words = words_for(h.vertex_count());
    let mut s = Search {
        h,
        plan: &plan,
        words,
        phi: vec![0; f.vertex_count()],
        used: vec![0; words],
        bufs: vec![vec![0; words]; f.vertex_count()],
        count: 0,
        find_first,
        found: None,
    };
    s.run(0);
    (s.count, s.found)
}

/// Number of injective vertex maps carrying every edge of `f` onto an edge
/// of `h`.
pub fn count_embeddings(h: &Hypergraph3, f: &Hypergraph3) -> u64 {
    search(h, f, false).0
}

/// Number of automorphisms of `f` (embeddings of `f` into itself).
pub fn automorphism_count(f: &Hypergraph3) -> u64 {
    count_embeddings(f, f)
}

/// Number of distinct copies of `f` in `h`: edge subsets of `h` isomorphic
/// to `f`. Each copy is hit by exactly `automorphism_count(f)` embeddings,
/// so this is the labeled count divided by it. (For the Fano plane the
/// divisor is 168.) Requires `f` to have no isolated vertices.
pub fn count_copies(h: &Hypergraph3, f: &Hypergraph3) -> u64 {
    assert!(
        (0..f.vertex_count()).all(|v| f.degree(v) > 0),
        "copy counting requires a pattern without isolated vertices"
    );
    let emb = count_embeddings(h, f);
    if emb == 0 {
        return 0;
    }
    let aut = automorphism_count(f);
    debug_assert_eq!(emb % aut, 0);
    emb / aut
}

/// One injective vertex map carrying edges of `f` into `h` (indexed by the
/// pattern vertex), or `None`. Deterministic: first map in search order.
pub fn find_embedding(h: &Hypergraph3, f: &Hypergraph3) -> Option<Vec<usize>> {
    search(h, f, true).1
}

/// Lexicographically least 4-set spanning all four triples, or `None`.
pub fn find_tetrahedron(h: &Hypergraph3) -> Option<VertexSet> {
    let n = h.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !h.has_edge(a, b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if h.has_edge(a, b, d) && h.has_edge(a, c, d) && h.has_edge(b, c, d) {
                        return Some(VertexSet::new(vec![a, b, c, d]).unwrap());
                    }
                }
            }
        }
    }
    None
}

/// Fano-specialized search. Returns the image map `phi[fano vertex] -> host
/// vertex` of one copy, or `None`.
///
/// Placement order is 0..6 against [`FANO_LINES`]; {0,1,3,6} is a
/// quadrilateral of the plane and the automorphism group is sharply
/// transitive on ordered quadrilaterals, so demanding
/// `phi0 < phi1 < phi3 < phi6` keeps exactly 7 embeddings per copy and
/// loses none. All 21 vertex pairs of a copy lie in a common line, so every
/// placed pair must have positive codegree in the host.
pub(crate) fn find_fano_map(h: &Hypergraph3) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    if n < 7 || h.edge_count() < 7 {
        return None;
    }
    let words = words_for(n);
    // rows of vertices with positive codegree
    let mut covered = vec![0u64; n * words];
    for u in 0..n {
        for v in 0..n {
            if v != u && h.codegree(u, v) > 0 {
                covered[u * words + v / 64] |= 1 << (v % 64);
            }
        }
    }
    // constraint rows per position: (pa, pb) earlier positions
    const CONS: [&[(usize, usize)]; 7] = [
        &[],
        &[],
        &[(0, 1)],
        &[],
        &[(0, 3)],
        &[(1, 3), (2, 4)],
        &[(0, 5), (1, 4), (2, 3)],
    ];
    // frame ordering: candidate must exceed phi of this earlier position
    const GT: [Option<usize>; 7] = [None, Some(0), None, Some(1), None, None, Some(3)];

    struct S<'a> {
        h: &'a Hypergraph3,
        covered: Vec<u64>,
        words: usize,
        phi: [usize; 7],
        used: Vec<u64>,
        /// cover_mask[d]: vertices with positive codegree to all placed before depth d
        cover_mask: Vec<Vec<u64>>,
        cand: Vec<Vec<u64>>,
    }
    impl S<'_> {
        fn go(&mut self, pos: usize) -> bool {
            if pos == 7 {
                return true;
            }
            let words = self.words;
            match CONS[pos] {
                [] => {
                    for i in 0..words {
                        self.cand[pos][i] = !self.used[i];
                    }
                    let tail = self.h.vertex_count() % 64;
                    if tail != 0 {
                        self.cand[pos][words - 1] &= (1u64 << tail) - 1;
                    }
                }
                [(pa, pb), rest @ ..] => {
                    let row = self.h.pair_row(self.phi[*pa], self.phi[*pb]);
                    for i in 0..words {
                        self.cand[pos][i] = row[i] & !self.used[i];
                    }
                    for &(pa, pb) in rest {
                        let row = self.h.pair_row(self.phi[pa], self.phi[pb]);
                        for i in 0..words {
                            self.cand[pos][i] &= row[i];
                        }
                    }
                }
            }
            // every pair of the copy needs positive codegree
            for i in 0..words {
                self.cand[pos][i] &= self.cover_mask[pos][i];
            }
            if let Some(gp) = GT[pos] {
                let lo = self.phi[gp] + 1;
                for i in 0..words {
                    if (i + 1) * 64 <= lo {
                        self.cand[pos][i] = 0;
                    } else if i * 64 < lo {
                        self.cand[pos][i] &= !((1u64 << (lo - i * 64)) - 1);
                    }
                }
            }
            for wi in 0..words {
                let mut w = self.cand[pos][wi];
                while w != 0 {
                    let v = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    if self.h.degree(v) < 3 {
                        continue;
                    }
                    self.phi[pos] = v;
                    self.used[v / 64] |= 1 << (v % 64);
                    if pos + 1 < 7 {
                        let row = &self.covered[v * words..(v + 1) * words];
                        for i in 0..words {
                            self.cover_mask[pos + 1][i] = self.cover_mask[pos][i] & row[i];
                        }
                    }
                    if self.go(pos + 1) {
                        return true;
                    }
                    self.used[v / 64] &= !(1 << (v % 64));
                }
            }
            false
        }
    }

    let full = {
        let mut m = vec![u64::MAX; words];
        let tail = n % 64;
        if tail != 0 {
            m[words - 1] = (1u64 << tail) - 1;
        }
        m
    };
    let mut s = S {
        h,
        covered,
        words,
        phi: [0; 7],
        used: vec![0; words],
        cover_mask: vec![full; 8],
        cand: vec![vec![0; words]; 7],
    };
    if s.go(0) {
        Some(s.phi.to_vec())
    } else {
        None
    }
}

/// Image of the seven Fano lines under a vertex map.
pub(crate) fn fano_image_edges(phi: &[usize]) -> Vec<[usize; 3]> {
    FANO_LINES
        .iter()
        .map(|line| {
            let mut t = [phi[line[0]], phi[line[1]], phi[line[2]]];
            t.sort_unstable();
            t
        })
        .collect()
}

/// Independent oracle: counts Fano copies by enumerating 7-edge subsets and
/// checking the pair-coverage characterization directly. Exponential; for
/// test-scale hosts only.
pub fn oracle_count_fano_copies(h: &Hypergraph3) -> u64 {
    let edges = h.edges();
    let mut count = 0u64;
    // chosen support so far, and pair coverage counts on it
    fn rec(
        edges: &[[usize; 3]],
        start: usize,
        chosen: &mut Vec<[usize; 3]>,
        support: &mut std::collections::BTreeSet<usize>,
        count: &mut u64,
    ) {
        if chosen.len() == 7 {
            if support.len() == 7 && is_fano_edge_set(chosen) {
                *count += 1;
            }
            return;
        }
        for i in start..edges.len() {
            let e = edges[i];
            // linearity: a Fano edge set is linear
            if chosen
                .iter()
                .any(|c| c.iter().filter(|v| e.contains(v)).count() > 1)
            {
                continue;
            }
            let mut added = Vec::new();
            for &v in &e {
                if support.insert(v) {
                    added.push(v);
                }
            }
            if support.len() <= 7 {
                chosen.push(e);
                rec(edges, i + 1, chosen, support, count);
                chosen.pop();
            }
            for v in added {
                support.remove(&v);
            }
        }
    }
    let mut chosen = Vec::new();
    let mut support = std::collections::BTreeSet::new();
    rec(edges, 0, &mut chosen, &mut support, &mut count);
    count
}

/// Seven triples on a 7-vertex support form a Fano plane iff every pair of
/// support vertices is covered exactly once.
pub(crate) fn is_fano_edge_set(triples: &[[usize; 3]]) -> bool {
    if triples.len() != 7 {
        return false;
    }
    let mut support: Vec<usize> = triples.iter().flatten().copied().collect();
    support.sort_unstable();
    support.dedup();
    if support.len() != 7 {
        return false;
    }
    let pos = |v: usize| support.binary_search(&v).unwrap();
    let mut cover = [[0u8; 7]; 7];
    for t in triples {
        for (i, &u) in t.iter().enumerate() {
            for &v in &t[i + 1..] {
                let (a, b) = (pos(u), pos(v));
                cover[a][b] += 1;
            }
        }
    }
    for a in 0..7 {
        for b in a + 1..7 {
            if cover[a][b] != 1 {
                return false;
            }
        }
    }
    true
}
