//! Simple graphs on dense 0-based vertices, stored as packed adjacency bitsets.
//!
//! These back the link graphs `L(x)` and the 4-cycle counting machinery, so
//! row intersection has to be cheap.

/// Words per bitset row for `n` vertices.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A fixed-capacity bitset over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(n: usize) -> Self {
        BitSet {
            words: vec![0; words_for(n)],
        }
    }

    /// All of `0..n` set.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; words_for(n)];
        let tail = n % 64;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        if n == 0 {
            words.clear();
        }
        BitSet { words }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Iterate set bits in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// An undirected simple graph on `n` labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            rows: vec![0; n * words_for(n)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn w(&self) -> usize {
        words_for(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        let w = self.w();
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.w() + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `u` as a word slice.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        let w = self.w();
        &self.rows[u * w..(u + 1) * w]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|u| self.degree(u)).sum();
        total / 2
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edgewise intersection with another graph on the same vertex set.
    pub fn intersection(&self, other: &SimpleGraph) -> SimpleGraph {
        assert_eq!(self.n, other.n);
        SimpleGraph {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for (wi, &w) in self.row(u).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let v = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    if v > u {
                        out.push((u, v));
                    }
                }
            }
        }
        out
    }
}
