//! Fixed-size bitset digraphs for the exhaustive searches.
//!
//! Each row is a `u16` neighbor set, so orders up to 16 fit; the searches
//! themselves never go past 11.

use crate::digraph::Digraph;

pub const MAX_ORDER: usize = 16;

/// Position of ordered pair `(u, v)` in the row-major, diagonal-skipping
/// enumeration of all `n(n-1)` ordered pairs.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < n && v < n);
    u * (n - 1) + if v < u { v } else { v - 1 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitDigraph {
    pub n: usize,
    pub out: [u16; MAX_ORDER],
    pub inn: [u16; MAX_ORDER],
}

impl BitDigraph {
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        BitDigraph {
            n,
            out: [0; MAX_ORDER],
            inn: [0; MAX_ORDER],
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// Decodes a row-major ordered-pair mask (`n ≤ 8`).
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        let width = n - 1;
        let row_bits = (1u64 << width) - 1;
        for u in 0..n {
            let row = (mask >> (u * width)) & row_bits;
            // Re-insert the skipped diagonal position.
            let low = row & ((1u64 << u) - 1);
            let high = (row >> u) << (u + 1);
            let bits = (low | high) as u16;
            g.out[u] = bits;
            let mut b = bits;
            while b != 0 {
                let v = b.trailing_zeros() as usize;
                g.inn[v] |= 1 << u;
                b &= b - 1;
            }
        }
        g
    }

    /// Decodes a tournament mask over unordered pairs `(i, j)`, `i < j`, in
    /// lexicographic order; a set bit means `i → j`.
    pub fn from_tournament_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_arc(i, j);
                } else {
                    g.add_arc(j, i);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        let mut g = Self::empty(d.order());
        for (u, v) in d.arcs() {
            g.add_arc(u, v);
        }
        g
    }

    pub fn to_digraph(&self) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                (0..self.n)
                    .filter(move |&v| self.has_arc(u, v))
                    .map(move |v| (u, v))
            })
            .collect();
        Digraph::from_sorted_arcs(self.n, &arcs)
    }

    /// Row-major ordered-pair mask (`n ≤ 8`).
    pub fn pair_mask(&self) -> u64 {
        let mut mask = 0u64;
        for u in 0..self.n {
            let row = u64::from(self.out[u]);
            let low = row & ((1u64 << u) - 1);
            let high = row >> (u + 1);
            mask |= (low | (high << u)) << (u * (self.n - 1));
        }
        mask
    }

    pub fn arc_count(&self) -> u32 {
        self.out[..self.n].iter().map(|r| r.count_ones()).sum()
    }

    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    fn closure(rows: &[u16], start: usize, all: u16) -> u16 {
        let mut reached = 1u16 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !reached & all;
            reached |= frontier;
        }
        reached
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = self.all();
        Self::closure(&self.out, 0, all) == all && Self::closure(&self.inn, 0, all) == all
    }

    /// Number of BFS levels needed to reach every vertex from `start`.
    /// Assumes strong connectivity.
    fn levels(rows: &[u16], start: usize, all: u16) -> u32 {
        let mut reached = 1u16 << start;
        let mut frontier = reached;
        let mut depth = 0;
        while reached != all {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !reached;
            debug_assert!(frontier != 0, "levels() on a non-strong digraph");
            reached |= frontier;
            depth += 1;
        }
        depth
    }

    /// Per-vertex m-eccentricities of a strongly connected bit digraph.
    pub fn mecc(&self) -> [u32; MAX_ORDER] {
        let all = self.all();
        let mut out = [0u32; MAX_ORDER];
        for (u, slot) in out.iter_mut().enumerate().take(self.n) {
            *slot = Self::levels(&self.out, u, all).max(Self::levels(&self.inn, u, all));
        }
        out
    }

    /// `(doubled index, mrad, mdiam)` of a strongly connected bit digraph.
    pub fn index_summary(&self) -> (u64, u32, u32) {
        let mecc = self.mecc();
        let mut doubled = 0u64;
        let (mut lo, mut hi) = (u32::MAX, 0);
        for (u, &m) in mecc.iter().enumerate().take(self.n) {
            let deg = self.out[u].count_ones() + self.inn[u].count_ones();
            doubled += u64::from(deg * m);
            lo = lo.min(m);
            hi = hi.max(m);
        }
        (doubled, lo, hi)
    }
}
