//! Deterministic generators for the named digraph families and the
//! hand-transcribed fixtures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::{biorient, Digraph, UndirectedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BidirectedKind {
    Path,
    Star,
    Cycle,
    Complete,
}

/// Which endpoint arc closes `P_n*`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `0 → n-1`
    #[default]
    Forward,
    /// `n-1 → 0`
    Backward,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fwd" | "forward" => Ok(Direction::Forward),
            "bwd" | "backward" => Ok(Direction::Backward),
            _ => Err(Error::InvalidParameter(format!("unknown direction `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixtureId {
    /// Three vertices, two bidirected edges and one chord.
    Fig1,
    /// The circulant orientation of K5.
    T1,
    /// The second orientation of K5 drawn beside `T1`.
    T2,
    /// The K8 orientation built from the K7 circulant plus one vertex.
    Fig3,
}

impl FixtureId {
    pub const ALL: [FixtureId; 4] = [
        FixtureId::Fig1,
        FixtureId::T1,
        FixtureId::T2,
        FixtureId::Fig3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Fig1 => "fig1",
            FixtureId::T1 => "t1",
            FixtureId::T2 => "t2",
            FixtureId::Fig3 => "fig3",
        }
    }

    /// Index value printed next to the drawing, undoubled.
    pub fn reference_value(self) -> Option<u64> {
        match self {
            FixtureId::Fig1 => Some(8),
            FixtureId::T1 => Some(20),
            FixtureId::T2 => Some(24),
            FixtureId::Fig3 => None,
        }
    }
}

/// Every generator the crate knows, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    DirectedCycle {
        n: usize,
    },
    BidirectedPath {
        n: usize,
    },
    BidirectedStar {
        n: usize,
    },
    BidirectedCycle {
        n: usize,
    },
    BidirectedComplete {
        n: usize,
    },
    KnOrientation {
        n: usize,
    },
    Circulant {
        n: usize,
        connection_set: Vec<usize>,
    },
    PnStar {
        n: usize,
        direction: Direction,
    },
    PnPlus {
        n: usize,
    },
    Fixture {
        id: FixtureId,
    },
}

/// Family names accepted by [`FamilySpec::parse`].
pub const FAMILY_NAMES: &[&str] = &[
    "directed-cycle",
    "bidirected-path",
    "bidirected-star",
    "bidirected-cycle",
    "bidirected-complete",
    "kn-orientation",
    "circulant",
    "pn-star",
    "pn-plus",
    "fig1",
    "t1",
    "t2",
    "fig3",
];

impl FamilySpec {
    /// Builds a spec from a family name and loose parameters. Underscores
    /// and hyphens are interchangeable in `name`.
    pub fn parse(
        name: &str,
        n: Option<usize>,
        direction: Option<Direction>,
        connection_set: Option<Vec<usize>>,
    ) -> Result<Self> {
        let key = name.replace('_', "-");
        let need_n =
            || n.ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs --n")));
        let spec = match key.as_str() {
            "directed-cycle" => FamilySpec::DirectedCycle { n: need_n()? },
            "bidirected-path" => FamilySpec::BidirectedPath { n: need_n()? },
            "bidirected-star" => FamilySpec::BidirectedStar { n: need_n()? },
            "bidirected-cycle" => FamilySpec::BidirectedCycle { n: need_n()? },
            "bidirected-complete" => FamilySpec::BidirectedComplete { n: need_n()? },
            "kn-orientation" => FamilySpec::KnOrientation { n: need_n()? },
            "circulant" => FamilySpec::Circulant {
                n: need_n()?,
                connection_set: connection_set
                    .ok_or_else(|| Error::InvalidParameter("circulant needs --set".into()))?,
            },
            "pn-star" => FamilySpec::PnStar {
                n: need_n()?,
                direction: direction.unwrap_or_default(),
            },
            "pn-plus" => FamilySpec::PnPlus { n: need_n()? },
            "fig1" | "fixture-fig1" => FamilySpec::Fixture {
                id: FixtureId::Fig1,
            },
            "t1" | "fixture-t1" => FamilySpec::Fixture { id: FixtureId::T1 },
            "t2" | "fixture-t2" => FamilySpec::Fixture { id: FixtureId::T2 },
            "fig3" | "fixture-fig3" => FamilySpec::Fixture {
                id: FixtureId::Fig3,
            },
            _ => return Err(Error::InvalidParameter(format!("unknown family `{name}`"))),
        };
        Ok(spec)
    }

    pub fn generate(&self) -> Result<Digraph> {
        match self {
            FamilySpec::DirectedCycle { n } => gen_directed_cycle(*n),
            FamilySpec::BidirectedPath { n } => gen_bidirected_family(BidirectedKind::Path, *n),
            FamilySpec::BidirectedStar { n } => gen_bidirected_family(BidirectedKind::Star, *n),
            FamilySpec::BidirectedCycle { n } => gen_bidirected_family(BidirectedKind::Cycle, *n),
            FamilySpec::BidirectedComplete { n } => {
                gen_bidirected_family(BidirectedKind::Complete, *n)
            }
            FamilySpec::KnOrientation { n } => gen_kn_orientation(*n),
            FamilySpec::Circulant { n, connection_set } => gen_circulant(*n, connection_set),
            FamilySpec::PnStar { n, direction } => gen_pn_star(*n, *direction),
            FamilySpec::PnPlus { n } => gen_pn_plus(*n),
            FamilySpec::Fixture { id } => Ok(fixture(*id)),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::DirectedCycle { n } => write!(f, "directed-cycle n={n}"),
            FamilySpec::BidirectedPath { n } => write!(f, "bidirected-path n={n}"),
            FamilySpec::BidirectedStar { n } => write!(f, "bidirected-star n={n}"),
            FamilySpec::BidirectedCycle { n } => write!(f, "bidirected-cycle n={n}"),
            FamilySpec::BidirectedComplete { n } => write!(f, "bidirected-complete n={n}"),
            FamilySpec::KnOrientation { n } => write!(f, "kn-orientation n={n}"),
            FamilySpec::Circulant { n, connection_set } => {
                write!(f, "circulant n={n} set={connection_set:?}")
            }
            FamilySpec::PnStar { n, direction } => write!(f, "pn-star n={n} {direction:?}"),
            FamilySpec::PnPlus { n } => write!(f, "pn-plus n={n}"),
            FamilySpec::Fixture { id } => write!(f, "fixture {}", id.name()),
        }
    }
}

fn require(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OrderTooSmall { family, n, min })
    } else {
        Ok(())
    }
}

/// Biorientation of a path, star (center 0), cycle or complete graph.
pub fn gen_bidirected_family(kind: BidirectedKind, n: usize) -> Result<Digraph> {
    let g = match kind {
        BidirectedKind::Path => {
            require("bidirected-path", n, 1)?;
            UndirectedGraph::path(n)?
        }
        BidirectedKind::Star => {
            require("bidirected-star", n, 2)?;
            UndirectedGraph::star(n)?
        }
        BidirectedKind::Cycle => {
            require("bidirected-cycle", n, 3)?;
            UndirectedGraph::cycle(n)?
        }
        BidirectedKind::Complete => {
            require("bidirected-complete", n, 1)?;
            UndirectedGraph::complete(n)?
        }
    };
    Ok(biorient(&g))
}

/// `i → i+1 (mod n)`.
pub fn gen_directed_cycle(n: usize) -> Result<Digraph> {
    require("directed-cycle", n, 3)?;
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Arcs `i → i+s (mod n)` for every `s` in the connection set. Fails with
/// [`Error::NotStronglyConnected`] when the result is not strong.
pub fn gen_circulant(n: usize, connection_set: &[usize]) -> Result<Digraph> {
    require("circulant", n, 2)?;
    let mut set = connection_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::InvalidParameter(
            "circulant connection set is empty".into(),
        ));
    }
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::InvalidParameter(format!(
            "circulant step {bad} outside 1..={}",
            n - 1
        )));
    }
    let d = Digraph::new(
        n,
        (0..n).flat_map(|i| set.iter().map(move |s| (i, (i + s) % n))),
    )?;
    if !d.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(d)
}

/// An orientation of `K_n` whose index equals `n(n-1)`.
///
/// Odd `n` gives the circulant with steps `1..=(n-1)/2`. Even `n` takes the
/// odd construction on `0..n-1` and adds vertex `n-1`, which points at the
/// even ids and is pointed at by the odd ids. In 1-based labels that is
/// `v_n → v_i` for odd `i` and `v_i → v_n` for even `i`.
pub fn gen_kn_orientation(n: usize) -> Result<Digraph> {
    require("kn-orientation", n, 3)?;
    if n % 2 == 1 {
        let steps: Vec<usize> = (1..=(n - 1) / 2).collect();
        return gen_circulant(n, &steps);
    }
    let m = n - 1;
    let steps: Vec<usize> = (1..=(m - 1) / 2).collect();
    let mut arcs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| steps.iter().map(move |s| (i, (i + s) % m)))
        .collect();
    let apex = n - 1;
    for v in 0..m {
        let label = v + 1;
        if label % 2 == 1 {
            arcs.push((apex, v));
        } else {
            arcs.push((v, apex));
        }
    }
    Digraph::new(n, arcs)
}

/// Bidirected path plus one arc joining its endpoints.
pub fn gen_pn_star(n: usize, direction: Direction) -> Result<Digraph> {
    require("pn-star", n, 3)?;
    let closing = match direction {
        Direction::Forward => (0, n - 1),
        Direction::Backward => (n - 1, 0),
    };
    let path = (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]);
    Digraph::new(n, path.chain(std::iter::once(closing)))
}

/// Bidirected path plus every forward skip arc `i → j`, `j ≥ i + 2`.
pub fn gen_pn_plus(n: usize) -> Result<Digraph> {
    require("pn-plus", n, 3)?;
    let path = (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]);
    let skips = (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j)));
    Digraph::new(n, path.chain(skips))
}

/// Hand-transcribed arc sets, with `v_k` mapped to id `k - 1`.
pub fn fixture(id: FixtureId) -> Digraph {
    let (n, arcs): (usize, &[(usize, usize)]) = match id {
        // u1 <-> u2 <-> u3 plus u1 -> u3
        FixtureId::Fig1 => (3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)]),
        // v1->v2 v1->v3 v2->v3 v2->v4 v3->v4 v3->v5 v4->v5 v4->v1 v5->v1 v5->v2
        FixtureId::T1 => (
            5,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 0),
                (4, 0),
                (4, 1),
            ],
        ),
        // v1->v2 v1->v3 v1->v4 v5->v1 v2->v3 v2->v5 v4->v2 v3->v4 v3->v5 v4->v5
        FixtureId::T2 => (
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (4, 0),
                (1, 2),
                (1, 4),
                (3, 1),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        ),
        FixtureId::Fig3 => {
            // K7 drawn as i -> i+1, i+2, i+3 (mod 7); v8 -> v1,v3,v5,v7; v2,v4,v6 -> v8
            let mut arcs: Vec<(usize, usize)> = (0..7)
                .flat_map(|i| (1..=3).map(move |s| (i, (i + s) % 7)))
                .collect();
            arcs.extend([0, 2, 4, 6].map(|v| (7, v)));
            arcs.extend([1, 3, 5].map(|v| (v, 7)));
            return Digraph::new(8, arcs).expect("fixture arcs are valid");
        }
    };
    Digraph::new(n, arcs.iter().copied()).expect("fixture arcs are valid")
}
