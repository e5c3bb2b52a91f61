//! Directed distances, the maximum-distance metric `md`, and the
//! eccentricity quantities derived from it.
//!
//! `md(u, v) = max(d(u, v), d(v, u))`, so the m-eccentricity of `u` is simply
//! `max(ecc_out(u), ecc_in(u))`. [`ecc_profile`] exploits this and never
//! materializes an `n × n` matrix; [`all_pairs_distances`] is the explicit,
//! on-demand route to the full matrices.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Marker for "no directed path".
pub const UNREACHABLE: u32 = u32::MAX;

/// Orders above this are refused by callers that would print or store the
/// full distance matrix.
pub const MATRIX_THRESHOLD: usize = 20_000;

/// All-pairs directed distances and the symmetric `md` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    md: Vec<u32>,
}

impl DistanceData {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Directed distance `u → v`, `None` when unreachable.
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        finite(self.dist[u * self.n + v])
    }

    /// `max(d(u,v), d(v,u))`, `None` when either direction is unreachable.
    pub fn md(&self, u: usize, v: usize) -> Option<u32> {
        finite(self.md[u * self.n + v])
    }

    /// Raw entries, with [`UNREACHABLE`] where no path exists.
    pub fn raw_dist(&self) -> &[u32] {
        &self.dist
    }

    pub fn raw_md(&self) -> &[u32] {
        &self.md
    }

    pub fn md_row(&self, u: usize) -> &[u32] {
        &self.md[u * self.n..(u + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.dist.iter().all(|&x| x != UNREACHABLE)
    }
}

fn finite(x: u32) -> Option<u32> {
    (x != UNREACHABLE).then_some(x)
}

/// Per-vertex eccentricities under the directed distance and under `md`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccProfile {
    pub ecc_out: Vec<u32>,
    pub ecc_in: Vec<u32>,
    pub mecc: Vec<u32>,
    pub mrad: u32,
    pub mdiam: u32,
    pub self_centered: bool,
}

impl EccProfile {
    fn from_out_in(ecc_out: Vec<u32>, ecc_in: Vec<u32>) -> Self {
        let mecc: Vec<u32> = ecc_out
            .iter()
            .zip(&ecc_in)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let mrad = mecc.iter().copied().min().unwrap_or(0);
        let mdiam = mecc.iter().copied().max().unwrap_or(0);
        EccProfile {
            ecc_out,
            ecc_in,
            mecc,
            mrad,
            mdiam,
            self_centered: mrad == mdiam,
        }
    }

    /// Profile read off a materialized distance matrix.
    pub fn from_distances(data: &DistanceData) -> Result<Self> {
        if !data.all_finite() {
            return Err(Error::NotStronglyConnected);
        }
        let n = data.n;
        let ecc_out = (0..n)
            .map(|u| (0..n).map(|v| data.dist[u * n + v]).max().unwrap_or(0))
            .collect();
        let ecc_in = (0..n)
            .map(|u| (0..n).map(|v| data.dist[v * n + u]).max().unwrap_or(0))
            .collect();
        Ok(Self::from_out_in(ecc_out, ecc_in))
    }
}

/// Breadth-first search from `source`, writing distances into `dist`.
/// Returns the largest finite distance reached.
fn bfs(d: &Digraph, source: usize, dist: &mut [u32], queue: &mut Vec<usize>) -> u32 {
    dist.fill(UNREACHABLE);
    queue.clear();
    dist[source] = 0;
    queue.push(source);
    let mut head = 0;
    let mut far = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let next = dist[v] + 1;
        for &w in d.out_neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                far = next;
                queue.push(w);
            }
        }
    }
    far
}

/// One BFS per source; fills both matrices.
pub fn all_pairs_distances(d: &Digraph) -> DistanceData {
    let n = d.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = Vec::with_capacity(n);
    for (s, row) in dist.chunks_mut(n).enumerate() {
        bfs(d, s, row, &mut queue);
    }
    let mut md = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            md[u * n + v] = dist[u * n + v].max(dist[v * n + u]);
        }
    }
    DistanceData { n, dist, md }
}

/// Eccentricity profile of a strongly connected digraph, single-threaded.
pub fn ecc_profile(d: &Digraph) -> Result<EccProfile> {
    ecc_profile_with_workers(d, 1)
}

/// Eccentricity profile with the per-source searches split across up to
/// `workers` threads. The result does not depend on `workers`.
pub fn ecc_profile_with_workers(d: &Digraph, workers: usize) -> Result<EccProfile> {
    if !d.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n = d.order();
    let workers = workers.clamp(1, n);
    let chunk = n.div_ceil(workers);

    let run = |sources: std::ops::Range<usize>| {
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = Vec::with_capacity(n);
        let mut ecc_out = Vec::with_capacity(sources.len());
        let mut ecc_in = vec![0u32; n];
        for s in sources {
            ecc_out.push(bfs(d, s, &mut dist, &mut queue));
            for (acc, &x) in ecc_in.iter_mut().zip(&dist) {
                debug_assert_ne!(x, UNREACHABLE);
                *acc = (*acc).max(x);
            }
        }
        (ecc_out, ecc_in)
    };

    let parts: Vec<(Vec<u32>, Vec<u32>)> = if workers == 1 {
        vec![run(0..n)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let range = (w * chunk).min(n)..((w + 1) * chunk).min(n);
                    scope.spawn(move || run(range))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let mut ecc_out = Vec::with_capacity(n);
    let mut ecc_in = vec![0u32; n];
    for (out, inn) in parts {
        ecc_out.extend(out);
        for (acc, x) in ecc_in.iter_mut().zip(inn) {
            *acc = (*acc).max(x);
        }
    }
    Ok(EccProfile::from_out_in(ecc_out, ecc_in))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{biorient, UndirectedGraph};

    fn fig1() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)]).unwrap()
    }

    fn dicycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn fig1_distances() {
        let data = all_pairs_distances(&fig1());
        assert_eq!(data.dist(0, 2), Some(1));
        assert_eq!(data.dist(2, 0), Some(2));
        assert_eq!(data.md(0, 2), Some(2));
    }

    #[test]
    fn fig1_profile() {
        let p = ecc_profile(&fig1()).unwrap();
        assert_eq!(p.mecc, vec![2, 1, 2]);
        assert_eq!((p.mrad, p.mdiam, p.self_centered), (1, 2, false));
    }

    #[test]
    fn directed_four_cycle() {
        let data = all_pairs_distances(&dicycle(4));
        assert_eq!(data.dist(0, 3), Some(3));
        assert_eq!(data.dist(3, 0), Some(1));
        assert_eq!(data.md(0, 3), Some(3));
        let p = ecc_profile(&dicycle(4)).unwrap();
        assert_eq!(p.mecc, vec![3; 4]);
        assert!(p.self_centered);
    }

    #[test]
    fn unreachable_pairs() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let data = all_pairs_distances(&path);
        assert_eq!(data.dist(2, 0), None);
        assert!(!data.all_finite());
        assert_eq!(ecc_profile(&path), Err(Error::NotStronglyConnected));
        assert_eq!(
            EccProfile::from_distances(&data),
            Err(Error::NotStronglyConnected)
        );
    }

    #[test]
    fn complete_is_self_centered() {
        let k = biorient(&UndirectedGraph::complete(6).unwrap());
        let p = ecc_profile(&k).unwrap();
        assert_eq!(p.mecc, vec![1; 6]);
        assert!(p.self_centered);
    }

    #[test]
    fn single_vertex_profile() {
        let p = ecc_profile(&Digraph::new(1, []).unwrap()).unwrap();
        assert_eq!(p.mecc, vec![0]);
        assert_eq!((p.mrad, p.mdiam, p.self_centered), (0, 0, true));
    }

    #[test]
    fn worker_count_does_not_change_profile() {
        let d = biorient(&UndirectedGraph::path(9).unwrap());
        let one = ecc_profile(&d).unwrap();
        for w in [2, 3, 8, 50] {
            assert_eq!(ecc_profile_with_workers(&d, w).unwrap(), one);
        }
        assert_eq!(
            EccProfile::from_distances(&all_pairs_distances(&d)).unwrap(),
            one
        );
    }
}
