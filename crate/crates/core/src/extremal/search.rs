use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use super::bitgraph::BitDigraph;
use super::canon::{canonical_mask, relabel, CANON_MAX_ORDER};
use super::{encode_digraph, ExtremalReport, Objective, SearchClass, SearchOptions};
use crate::error::{Error, Result};
use crate::index::XiValue;

/// Default order cap for tournament searches.
pub const TOURNAMENT_CAP: usize = 7;
/// `n(n-1)/2` tournament bits must fit a `u64`.
pub const TOURNAMENT_HARD_CAP: usize = 11;
/// Default order cap for searches over all arc subsets.
pub const STRONG_DIGRAPH_CAP: usize = 5;
/// `n(n-1)` pair bits must fit a `u64`.
pub const STRONG_DIGRAPH_HARD_CAP: usize = 8;

const MAX_CHUNKS: u64 = 256;

/// Per-chunk partial result. Merging is associative and commutative.
#[derive(Default)]
struct Partial {
    labeled: u64,
    strong: u64,
    best: Option<u64>,
    /// Labeled masks attaining `best` within this chunk.
    hits: Vec<u64>,
    violations: u64,
}

impl Partial {
    fn offer(&mut self, objective: Objective, value: u64, mask: u64) {
        let better = match (self.best, objective) {
            (None, _) => true,
            (Some(b), Objective::Min) => value < b,
            (Some(b), Objective::Max) => value > b,
        };
        if better {
            self.best = Some(value);
            self.hits.clear();
        }
        if self.best == Some(value) {
            self.hits.push(mask);
        }
    }

    fn merge(mut self, other: Partial, objective: Objective) -> Partial {
        self.labeled += other.labeled;
        self.strong += other.strong;
        self.violations += other.violations;
        match (self.best, other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.hits = other.hits;
            }
            (Some(a), Some(b)) if a == b => self.hits.extend(other.hits),
            (Some(a), Some(b)) => {
                let take_other = match objective {
                    Objective::Min => b < a,
                    Objective::Max => b > a,
                };
                if take_other {
                    self.best = other.best;
                    self.hits = other.hits;
                }
            }
        }
        self
    }
}

struct Space {
    class: SearchClass,
    n: usize,
    bits: u32,
}

impl Space {
    fn decode(&self, mask: u64) -> BitDigraph {
        match self.class {
            SearchClass::Tournaments => BitDigraph::from_tournament_mask(self.n, mask),
            SearchClass::StrongDigraphs => BitDigraph::from_pair_mask(self.n, mask),
        }
    }
}

fn check_order(n: usize, cap: usize, hard_cap: usize, allow_large: bool) -> Result<()> {
    if n < 3 {
        return Err(Error::PreconditionViolated(format!(
            "exhaustive search needs n >= 3, got {n}"
        )));
    }
    if n > hard_cap {
        return Err(Error::OrderCapExceeded { n, cap: hard_cap });
    }
    if n > cap && !allow_large {
        return Err(Error::OrderCapExceeded { n, cap });
    }
    Ok(())
}

/// All `2^(n(n-1)/2)` orientations of `K_n`, filtered to the strong ones.
pub fn enumerate_tournaments(
    n: usize,
    objective: Objective,
    opts: &SearchOptions,
) -> Result<ExtremalReport> {
    check_order(n, TOURNAMENT_CAP, TOURNAMENT_HARD_CAP, opts.allow_large)?;
    let space = Space {
        class: SearchClass::Tournaments,
        n,
        bits: (n * (n - 1) / 2) as u32,
    };
    Ok(run(&space, objective, opts.workers))
}

/// All `2^(n(n-1))` arc subsets, filtered to the strong ones.
pub fn enumerate_strong_digraphs(
    n: usize,
    objective: Objective,
    opts: &SearchOptions,
) -> Result<ExtremalReport> {
    check_order(
        n,
        STRONG_DIGRAPH_CAP,
        STRONG_DIGRAPH_HARD_CAP,
        opts.allow_large,
    )?;
    let space = Space {
        class: SearchClass::StrongDigraphs,
        n,
        bits: (n * (n - 1)) as u32,
    };
    Ok(run(&space, objective, opts.workers))
}

fn scan(space: &Space, objective: Objective, range: std::ops::Range<u64>) -> Partial {
    let mut part = Partial::default();
    for mask in range {
        part.labeled += 1;
        let g = space.decode(mask);
        if !g.is_strongly_connected() {
            continue;
        }
        part.strong += 1;
        let (doubled, mrad, mdiam) = g.index_summary();
        let a = u64::from(g.arc_count());
        if doubled < 2 * a * u64::from(mrad) || doubled > 2 * a * u64::from(mdiam) {
            part.violations += 1;
        }
        part.offer(objective, doubled, mask);
    }
    part
}

fn run(space: &Space, objective: Objective, workers: usize) -> ExtremalReport {
    let total = 1u64 << space.bits;
    let chunks = total.min(MAX_CHUNKS);
    let chunk_len = total / chunks;
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Partial>>> = Mutex::new((0..chunks).map(|_| None).collect());

    let work = || loop {
        let c = next.fetch_add(1, Ordering::Relaxed) as u64;
        if c >= chunks {
            break;
        }
        let part = scan(space, objective, c * chunk_len..(c + 1) * chunk_len);
        slots.lock().unwrap()[c as usize] = Some(part);
    };
    let workers = workers.max(1);
    if workers == 1 {
        work();
    } else {
        thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(work);
            }
        });
    }

    let merged = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|p| p.expect("every chunk is scanned"))
        .fold(Partial::default(), |acc, p| acc.merge(p, objective));

    let dedup = space.n <= CANON_MAX_ORDER;
    let graphs = merged.hits.iter().map(|&m| space.decode(m));
    let witnesses: Vec<String> = if dedup {
        canonical_classes(space.n, graphs)
            .into_iter()
            .map(|m| encode_digraph(&BitDigraph::from_pair_mask(space.n, m).to_digraph()))
            .collect()
    } else {
        let mut labeled: Vec<String> = graphs.map(|g| encode_digraph(&g.to_digraph())).collect();
        labeled.sort();
        labeled
    };

    ExtremalReport {
        search_class: space.class,
        n: space.n,
        objective,
        extremal_value: merged.best.map(XiValue::from_doubled),
        witnesses,
        dedup,
        labeled_count: merged.labeled,
        strong_count: merged.strong,
        witness_count_labeled: merged.hits.len() as u64,
        bound_violations: merged.violations,
        chunks: chunks as usize,
    }
}

/// Canonical masks of the isomorphism classes present in `graphs`, sorted.
///
/// Once a class is found all of its relabelings are remembered, so later
/// members of the same class skip the canonical search.
fn canonical_classes(n: usize, graphs: impl Iterator<Item = BitDigraph>) -> Vec<u64> {
    let mut classes = BTreeSet::new();
    let mut known: HashSet<u64> = HashSet::new();
    let perms = permutations(n);
    for g in graphs {
        let mask = g.pair_mask();
        if known.contains(&mask) {
            continue;
        }
        let canon = canonical_mask(&g);
        classes.insert(canon);
        let rep = BitDigraph::from_pair_mask(n, canon);
        for p in &perms {
            known.insert(relabel(&rep, p).pair_mask());
        }
    }
    classes.into_iter().collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn build(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                build(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    build(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::extremal::canonical_form;
    use crate::families::{gen_bidirected_family, BidirectedKind};
    use crate::index::ecci_digraph;

    fn opts(workers: usize) -> SearchOptions {
        SearchOptions {
            workers,
            allow_large: false,
        }
    }

    #[test]
    fn triangle_tournaments() {
        let r = enumerate_tournaments(3, Objective::Min, &opts(1)).unwrap();
        assert_eq!(r.labeled_count, 8);
        assert_eq!(r.strong_count, 2);
        assert_eq!(r.extremal_value, Some(XiValue::from_integer(6)));
        assert_eq!(r.witness_count_labeled, 2);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.bound_violations, 0);
    }

    #[test]
    fn star_is_the_unique_minimum_at_four() {
        let r = enumerate_strong_digraphs(4, Objective::Min, &opts(2)).unwrap();
        assert_eq!(r.labeled_count, 4096);
        assert_eq!(r.extremal_value, Some(XiValue::from_integer(9)));
        assert_eq!(r.witness_count_labeled, 4);
        let star = gen_bidirected_family(BidirectedKind::Star, 4).unwrap();
        let w = r.witness_digraphs().unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(
            canonical_form(&w[0]).unwrap(),
            canonical_form(&star).unwrap()
        );
    }

    #[test]
    fn witnesses_attain_the_reported_value() {
        for objective in [Objective::Min, Objective::Max] {
            let r = enumerate_strong_digraphs(4, objective, &opts(1)).unwrap();
            for w in r.witness_digraphs().unwrap() {
                assert_eq!(Some(ecci_digraph(&w).unwrap()), r.extremal_value);
            }
        }
    }

    #[test]
    fn worker_count_is_invisible() {
        let one = enumerate_tournaments(5, Objective::Max, &opts(1)).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(
                enumerate_tournaments(5, Objective::Max, &opts(w)).unwrap(),
                one
            );
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_strong_digraphs(6, Objective::Min, &opts(1)),
            Err(Error::OrderCapExceeded { n: 6, cap: 5 })
        ));
        assert!(matches!(
            enumerate_tournaments(8, Objective::Min, &opts(1)),
            Err(Error::OrderCapExceeded { n: 8, cap: 7 })
        ));
        let large = SearchOptions {
            workers: 1,
            allow_large: true,
        };
        assert!(matches!(
            enumerate_strong_digraphs(9, Objective::Min, &large),
            Err(Error::OrderCapExceeded { n: 9, cap: 8 })
        ));
        assert!(matches!(
            enumerate_tournaments(2, Objective::Min, &opts(1)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn class_dedup_against_brute_force() {
        // Every labeled strong digraph on 3 vertices, grouped by the
        // canonical search and by an n!-permutation minimum.
        let perms = permutations(3);
        let mut brute = BTreeSet::new();
        let mut fast = BTreeSet::new();
        for mask in 0..64u64 {
            let g = BitDigraph::from_pair_mask(3, mask);
            if !g.is_strongly_connected() {
                continue;
            }
            brute.insert(
                perms
                    .iter()
                    .map(|p| relabel(&g, p).pair_mask())
                    .min()
                    .unwrap(),
            );
            fast.insert(canonical_mask(&g));
        }
        assert_eq!(brute.len(), fast.len());
        let d = Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert!(fast.contains(&canonical_mask(&BitDigraph::from_digraph(&d))));
    }
}
