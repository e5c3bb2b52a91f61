//! Immutable simple digraphs and the structural transformations used
//! throughout the crate.
//!
//! Vertices are the ids `0..n`. Adjacency is stored in compressed sparse
//! row form, one array for out-neighbors and one for in-neighbors, each
//! sorted ascending per vertex. Two digraphs compare equal exactly when
//! they have the same order and the same arc set.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite digraph with no loops and no parallel arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_offsets: Vec<usize>,
    out_targets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_sources: Vec<usize>,
}

impl Digraph {
    /// Builds a validated digraph from an arc list in any order.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopArc { vertex: u });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc {
                tail: w[0].0,
                head: w[0].1,
            });
        }
        Ok(Self::from_sorted_arcs(n, &list))
    }

    /// `arcs` must be sorted, loop-free and duplicate-free.
    pub(crate) fn from_sorted_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for &(u, v) in arcs {
            out_offsets[u + 1] += 1;
            in_offsets[v + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets = arcs.iter().map(|&(_, v)| v).collect();
        // Scanning arcs in (tail, head) order keeps each in-list sorted.
        let mut in_sources = vec![0usize; arcs.len()];
        let mut cursor = in_offsets.clone();
        for &(u, v) in arcs {
            in_sources[cursor[v]] = u;
            cursor[v] += 1;
        }
        Digraph {
            n,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_targets[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// `(out-degree, in-degree)` of `v`.
    pub fn degree_pair(&self, v: usize) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        Ok((self.out_degree(v), self.in_degree(v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out_neighbors(u).binary_search(&v).is_ok()
    }

    /// All arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v)))
    }

    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<(usize, usize)> = self.arcs().map(|(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Digraph::from_sorted_arcs(self.n, &arcs)
    }

    /// Complement over the `n(n-1)` ordered pairs of distinct vertices.
    pub fn complement(&self) -> Digraph {
        let mut arcs = Vec::with_capacity(self.n * (self.n - 1) - self.arc_count());
        for u in 0..self.n {
            let mut present = self.out_neighbors(u).iter().peekable();
            for v in 0..self.n {
                if present.peek() == Some(&&v) {
                    present.next();
                    continue;
                }
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_sorted_arcs(self.n, &arcs)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|v| self.out_neighbors(v) == self.in_neighbors(v))
    }

    /// `Some(r)` when every vertex has out-degree and in-degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.out_degree(0);
        (0..self.n)
            .all(|v| self.out_degree(v) == r && self.in_degree(v) == r)
            .then_some(r)
    }

    /// Forward and backward search from vertex 0. A single vertex counts as
    /// strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all(0, |v| self.out_neighbors(v))
            && self.reaches_all(0, |v| self.in_neighbors(v))
    }

    fn reaches_all<'a, F>(&'a self, start: usize, next: F) -> bool
    where
        F: Fn(usize) -> &'a [usize],
    {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in next(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// A finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateArc { tail: a, head: b });
            }
        }
        Ok(UndirectedGraph { n, adj })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star with center 0.
    pub fn star(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (0, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall {
                family: "cycle",
                n,
                min: 3,
            });
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// Complete biorientation: each edge becomes a pair of opposite arcs.
pub fn biorient(g: &UndirectedGraph) -> Digraph {
    let mut arcs: Vec<(usize, usize)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    arcs.sort_unstable();
    Digraph::from_sorted_arcs(g.order(), &arcs)
}
