//! Brute-force canonical labeling for small digraphs.
//!
//! A vertex sequence `p_0, …, p_{n-1}` is scored by the bit string that
//! lists, for `k = 1..n` and `i = 0..k`, the pair `A[p_i][p_k], A[p_k][p_i]`.
//! Every prefix of that string depends only on the first vertices placed,
//! so a depth-first search over permutations can abandon a branch as soon
//! as its prefix exceeds the best complete string found so far. The minimum
//! over all `n!` sequences picks the canonical relabeling `p_k ↦ k`.

use super::bitgraph::BitDigraph;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 8;

struct Search<'a> {
    g: &'a BitDigraph,
    total_bits: u32,
    best: u64,
    best_perm: [usize; CANON_MAX_ORDER],
    perm: [usize; CANON_MAX_ORDER],
}

impl Search<'_> {
    fn descend(&mut self, k: usize, used: u16, code: u64) {
        let n = self.g.n;
        if k == n {
            if code < self.best {
                self.best = code;
                self.best_perm = self.perm;
            }
            return;
        }
        let placed_bits = (k * (k + 1)) as u32;
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut c = code;
            for i in 0..k {
                let p = self.perm[i];
                c = (c << 2)
                    | (u64::from(self.g.has_arc(p, v)) << 1)
                    | u64::from(self.g.has_arc(v, p));
            }
            let best_prefix = self.best >> (self.total_bits - placed_bits);
            if c > best_prefix {
                continue;
            }
            self.perm[k] = v;
            self.descend(k + 1, used | (1 << v), c);
        }
    }
}

/// Canonical relabeling as a permutation: entry `k` is the original vertex
/// that receives id `k`.
pub(crate) fn canonical_permutation(g: &BitDigraph) -> Vec<usize> {
    let n = g.n;
    assert!(n <= CANON_MAX_ORDER);
    let mut search = Search {
        g,
        total_bits: (n * (n - 1)) as u32,
        best: u64::MAX,
        best_perm: [0; CANON_MAX_ORDER],
        perm: [0; CANON_MAX_ORDER],
    };
    search.descend(0, 0, 0);
    search.best_perm[..n].to_vec()
}

pub(crate) fn relabel(g: &BitDigraph, order: &[usize]) -> BitDigraph {
    let mut h = BitDigraph::empty(g.n);
    for (a, &u) in order.iter().enumerate() {
        for (b, &v) in order.iter().enumerate() {
            if a != b && g.has_arc(u, v) {
                h.add_arc(a, b);
            }
        }
    }
    h
}

/// Row-major ordered-pair mask of the canonical relabeling.
pub(crate) fn canonical_mask(g: &BitDigraph) -> u64 {
    relabel(g, &canonical_permutation(g)).pair_mask()
}

/// Canonical form of a digraph with at most [`CANON_MAX_ORDER`] vertices:
/// the order as one byte followed by the canonical pair mask, big-endian.
/// Two digraphs have equal forms exactly when they are isomorphic.
pub fn canonical_form(d: &Digraph) -> Result<Vec<u8>> {
    if d.order() > CANON_MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            n: d.order(),
            cap: CANON_MAX_ORDER,
        });
    }
    let mask = canonical_mask(&BitDigraph::from_digraph(d));
    let mut bytes = vec![d.order() as u8];
    bytes.extend_from_slice(&mask.to_be_bytes());
    Ok(bytes)
}

/// Canonical relabeling of `d` itself.
pub fn canonical_digraph(d: &Digraph) -> Result<Digraph> {
    if d.order() > CANON_MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            n: d.order(),
            cap: CANON_MAX_ORDER,
        });
    }
    let g = BitDigraph::from_digraph(d);
    Ok(relabel(&g, &canonical_permutation(&g)).to_digraph())
}
