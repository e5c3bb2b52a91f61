//! Exhaustive searches over small digraph classes and the theorem checks
//! that run on top of them.

mod bitgraph;
mod canon;
mod search;
mod verify;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::index::XiValue;

pub use bitgraph::{pair_index, BitDigraph};
pub use canon::{canonical_digraph, canonical_form, CANON_MAX_ORDER};
pub use search::{
    enumerate_strong_digraphs, enumerate_tournaments, STRONG_DIGRAPH_CAP, STRONG_DIGRAPH_HARD_CAP,
    TOURNAMENT_CAP, TOURNAMENT_HARD_CAP,
};
pub use verify::{
    audit_fixture, verify_theorem, DeltaAuditRow, FixtureAudit, TheoremId, VerificationReport,
    VerifyParams,
};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "ECCI_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchClass {
    Tournaments,
    StrongDigraphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Min,
    Max,
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            _ => Err(Error::InvalidParameter(format!("unknown objective `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    /// Lifts the default order caps (the hard caps still apply).
    pub allow_large: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: threads_from_env(),
            allow_large: false,
        }
    }
}

/// Worker count from `ECCI_THREADS`, falling back to the machine's
/// available parallelism.
pub fn threads_from_env() -> usize {
    parse_threads(std::env::var(THREADS_ENV).ok().as_deref())
}

pub fn parse_threads(value: Option<&str>) -> usize {
    value
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

/// Outcome of an exhaustive search. Independent of worker count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub search_class: SearchClass,
    pub n: usize,
    pub objective: Objective,
    /// `None` only if no instance passed the strong filter.
    pub extremal_value: Option<XiValue>,
    /// Witness encodings (see [`encode_digraph`]), sorted. Canonical forms
    /// when `dedup` is set, labeled instances otherwise.
    pub witnesses: Vec<String>,
    pub dedup: bool,
    pub labeled_count: u64,
    pub strong_count: u64,
    pub witness_count_labeled: u64,
    /// Instances whose index fell outside `[a·mrad, a·mdiam]`.
    pub bound_violations: u64,
    /// Number of fixed mask ranges the search space was split into.
    pub chunks: usize,
}

impl ExtremalReport {
    pub fn witness_digraphs(&self) -> Result<Vec<Digraph>> {
        self.witnesses.iter().map(|w| decode_digraph(w)).collect()
    }
}

/// `n=<n>:<hex>`, where the hex number has bit `pair_index(n, u, v)` set for
/// every arc `(u, v)`. Works for any order.
pub fn encode_digraph(d: &Digraph) -> String {
    let n = d.order();
    let bits = n * n.saturating_sub(1);
    let mut nibbles = vec![0u8; bits.div_ceil(4).max(1)];
    for (u, v) in d.arcs() {
        let k = pair_index(n, u, v);
        nibbles[k / 4] |= 1 << (k % 4);
    }
    while nibbles.len() > 1 && *nibbles.last().unwrap() == 0 {
        nibbles.pop();
    }
    let hex: String = nibbles
        .iter()
        .rev()
        .map(|&x| char::from_digit(u32::from(x), 16).unwrap())
        .collect();
    format!("n={n}:{hex}")
}

pub fn decode_digraph(s: &str) -> Result<Digraph> {
    let bad = || Error::InvalidParameter(format!("malformed digraph encoding `{s}`"));
    let rest = s.strip_prefix("n=").ok_or_else(bad)?;
    let (n, hex) = rest.split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let bits = n * (n - 1);
    let mut arcs = Vec::new();
    for (pos, c) in hex.chars().rev().enumerate() {
        let x = c
            .to_digit(16)
            .filter(|_| !c.is_ascii_uppercase())
            .ok_or_else(bad)?;
        for b in 0..4 {
            if x >> b & 1 == 1 {
                let k = pos * 4 + b;
                if k >= bits {
                    return Err(bad());
                }
                let u = k / (n - 1);
                let r = k % (n - 1);
                let v = if r < u { r } else { r + 1 };
                arcs.push((u, v));
            }
        }
    }
    arcs.sort_unstable();
    Ok(Digraph::from_sorted_arcs(n, &arcs))
}
