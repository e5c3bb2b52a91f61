//! The eccentric connectivity index and the inequality checks built on it.
//!
//! For a digraph the index is `½ Σ (d⁺ + d⁻)·mecc`, which may be a
//! half-integer, so every value here is carried as the exact doubled integer
//! ([`XiValue`]). No floating point is involved.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::metrics::{ecc_profile, EccProfile};

/// An index value stored as twice its true value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XiValue(u64);

impl XiValue {
    pub fn from_doubled(doubled: u64) -> Self {
        XiValue(doubled)
    }

    pub fn from_integer(value: u64) -> Self {
        XiValue(2 * value)
    }

    pub fn doubled(self) -> u64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The value when it is an integer.
    pub fn as_integer(self) -> Option<u64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl fmt::Display for XiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct XiWire {
    doubled: u64,
    display: String,
}

impl Serialize for XiValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        XiWire {
            doubled: self.0,
            display: self.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XiValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = XiWire::deserialize(deserializer)?;
        let value = XiValue(wire.doubled);
        if value.to_string() != wire.display {
            return Err(serde::de::Error::custom(format!(
                "display `{}` does not match doubled value {}",
                wire.display, wire.doubled
            )));
        }
        Ok(value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexContribution {
    pub vertex: usize,
    pub degree_sum: u64,
    pub mecc: u32,
    /// `degree_sum · mecc`; these sum to the doubled index.
    pub contribution: u64,
}

/// Index value with its per-vertex breakdown and the `a·mrad ≤ ξ ≤ a·mdiam`
/// envelope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub xi: XiValue,
    pub per_vertex: Vec<VertexContribution>,
    pub arc_count: u64,
    pub mrad: u32,
    pub mdiam: u32,
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub self_centered: bool,
    pub bounds_hold: bool,
    pub bounds_tight: bool,
}

impl IndexReport {
    /// Rebuilds the doubled index from the breakdown alone.
    pub fn recomputed_doubled(&self) -> u64 {
        self.per_vertex
            .iter()
            .map(|c| c.degree_sum * u64::from(c.mecc))
            .sum()
    }

    /// Internal consistency, including the self-centered equality corollary.
    pub fn is_consistent(&self) -> bool {
        let sums = self.recomputed_doubled() == self.xi.doubled()
            && self
                .per_vertex
                .iter()
                .all(|c| c.contribution == c.degree_sum * u64::from(c.mecc));
        sums && self.bounds_hold && (self.bounds_tight == self.self_centered)
    }
}

/// Builds the report from an already-computed profile.
pub fn index_report(d: &Digraph, profile: &EccProfile) -> IndexReport {
    let per_vertex: Vec<VertexContribution> = (0..d.order())
        .map(|v| {
            let degree_sum = (d.out_degree(v) + d.in_degree(v)) as u64;
            let mecc = profile.mecc[v];
            VertexContribution {
                vertex: v,
                degree_sum,
                mecc,
                contribution: degree_sum * u64::from(mecc),
            }
        })
        .collect();
    let doubled: u64 = per_vertex.iter().map(|c| c.contribution).sum();
    let a = d.arc_count() as u64;
    let lower_bound = a * u64::from(profile.mrad);
    let upper_bound = a * u64::from(profile.mdiam);
    IndexReport {
        xi: XiValue(doubled),
        per_vertex,
        arc_count: a,
        mrad: profile.mrad,
        mdiam: profile.mdiam,
        lower_bound,
        upper_bound,
        self_centered: profile.self_centered,
        bounds_hold: 2 * lower_bound <= doubled && doubled <= 2 * upper_bound,
        bounds_tight: 2 * lower_bound == doubled && doubled == 2 * upper_bound,
    }
}

/// Eccentric connectivity index of a strongly connected digraph.
pub fn ecci_digraph(d: &Digraph) -> Result<XiValue> {
    let profile = ecc_profile(d)?;
    let doubled = (0..d.order())
        .map(|v| (d.out_degree(v) + d.in_degree(v)) as u64 * u64::from(profile.mecc[v]))
        .sum();
    Ok(XiValue(doubled))
}

/// `Σ deg(u)·ecc(u)` for a connected undirected graph, computed with
/// undirected searches only.
pub fn ecci_graph(g: &UndirectedGraph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut total = 0u64;
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            ecc = ecc.max(dist[v]);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        total += (g.degree(s) * ecc) as u64;
    }
    Ok(total)
}

/// Full report for the `a·mrad ≤ ξ ≤ a·mdiam` sandwich.
pub fn check_bound_theorem(d: &Digraph) -> Result<IndexReport> {
    let profile = ecc_profile(d)?;
    Ok(index_report(d, &profile))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementSumCheck {
    pub n: usize,
    pub xi: XiValue,
    pub xi_complement: XiValue,
    pub sum: XiValue,
    /// `2n(n-1)`, undoubled.
    pub bound: u64,
    pub holds: bool,
    pub equality: bool,
    pub both_self_centered_radius_two: bool,
}

/// `ξ(D) + ξ(D̄) ≥ 2n(n-1)` for `n ≥ 4` with both sides strong.
pub fn check_complement_sum(d: &Digraph) -> Result<ComplementSumCheck> {
    let n = d.order();
    if n < 4 {
        return Err(Error::PreconditionViolated(format!(
            "complement sum needs n >= 4, got {n}"
        )));
    }
    let comp = d.complement();
    if !d.is_strongly_connected() || !comp.is_strongly_connected() {
        return Err(Error::PreconditionViolated(
            "digraph and complement must both be strongly connected".into(),
        ));
    }
    let p = ecc_profile(d)?;
    let q = ecc_profile(&comp)?;
    let xi = index_report(d, &p).xi;
    let xi_complement = index_report(&comp, &q).xi;
    let sum = XiValue(xi.doubled() + xi_complement.doubled());
    let bound = 2 * (n * (n - 1)) as u64;
    Ok(ComplementSumCheck {
        n,
        xi,
        xi_complement,
        sum,
        bound,
        holds: sum.doubled() >= 2 * bound,
        equality: sum.doubled() == 2 * bound,
        both_self_centered_radius_two: p.self_centered
            && q.self_centered
            && p.mrad == 2
            && q.mrad == 2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularBoundsCheck {
    pub n: usize,
    pub r: usize,
    /// `2nr`, or `n(n-1)` when `r = n-1`.
    pub lower: u64,
    /// `nr(n-r)`, or `n(n-1)` when `r = n-1`.
    pub upper: u64,
    pub xi: XiValue,
    pub holds: bool,
}

/// `2nr ≤ ξ ≤ nr(n-r)` for an `r`-regular strong digraph. When `r = n-1`
/// the digraph is the complete symmetric digraph and both bounds collapse
/// to `n(n-1)`.
pub fn check_regular_bounds(d: &Digraph) -> Result<RegularBoundsCheck> {
    let r = d.regularity().ok_or(Error::NotRegular)?;
    let xi = ecci_digraph(d)?;
    let n = d.order();
    let (lower, upper) = if r + 1 == n {
        let v = (n * (n - 1)) as u64;
        (v, v)
    } else {
        ((2 * n * r) as u64, (n * r * (n - r)) as u64)
    };
    Ok(RegularBoundsCheck {
        n,
        r,
        lower,
        upper,
        xi,
        holds: 2 * lower <= xi.doubled() && xi.doubled() <= 2 * upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::biorient;

    fn fig1() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)]).unwrap()
    }

    fn dicycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn circulant(n: usize, set: &[usize]) -> Digraph {
        Digraph::new(
            n,
            (0..n).flat_map(|i| set.iter().map(move |s| (i, (i + s) % n))),
        )
        .unwrap()
    }

    #[test]
    fn display_renders_half_integers() {
        assert_eq!(XiValue::from_doubled(16).to_string(), "8");
        assert_eq!(XiValue::from_doubled(17).to_string(), "8.5");
        assert_eq!(XiValue::from_doubled(1).to_string(), "0.5");
        let json = serde_json::to_string(&XiValue::from_doubled(17)).unwrap();
        assert_eq!(json, r#"{"doubled":17,"display":"8.5"}"#);
        assert!(serde_json::from_str::<XiValue>(r#"{"doubled":17,"display":"9"}"#).is_err());
    }

    #[test]
    fn digraph_index_examples() {
        assert_eq!(ecci_digraph(&fig1()).unwrap(), XiValue::from_integer(8));
        assert_eq!(ecci_digraph(&dicycle(3)).unwrap(), XiValue::from_integer(6));
        let star = biorient(&UndirectedGraph::star(4).unwrap());
        assert_eq!(ecci_digraph(&star).unwrap(), XiValue::from_integer(9));
        assert_eq!(
            ecci_digraph(&circulant(5, &[1, 2])).unwrap(),
            XiValue::from_integer(20)
        );
        let not_strong = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(ecci_digraph(&not_strong), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn graph_index_examples() {
        assert_eq!(
            ecci_graph(&UndirectedGraph::complete(5).unwrap()).unwrap(),
            20
        );
        assert_eq!(ecci_graph(&UndirectedGraph::path(4).unwrap()).unwrap(), 14);
        assert_eq!(ecci_graph(&UndirectedGraph::path(2).unwrap()).unwrap(), 2);
        let disconnected = UndirectedGraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(ecci_graph(&disconnected), Err(Error::NotConnected));
    }

    #[test]
    fn bound_reports() {
        let r = check_bound_theorem(&dicycle(4)).unwrap();
        assert_eq!((r.arc_count, r.mrad, r.mdiam), (4, 3, 3));
        assert_eq!(r.xi, XiValue::from_integer(12));
        assert!(r.bounds_tight && r.self_centered && r.is_consistent());

        let r = check_bound_theorem(&fig1()).unwrap();
        assert_eq!((r.lower_bound, r.upper_bound), (5, 10));
        assert_eq!(r.xi, XiValue::from_integer(8));
        assert!(r.bounds_hold && !r.bounds_tight && r.is_consistent());

        let k3 = biorient(&UndirectedGraph::complete(3).unwrap());
        let r = check_bound_theorem(&k3).unwrap();
        assert_eq!((r.arc_count, r.lower_bound, r.upper_bound), (6, 6, 6));
        assert_eq!(r.xi, XiValue::from_integer(6));
    }

    #[test]
    fn per_vertex_breakdown_of_fig1() {
        let r = check_bound_theorem(&fig1()).unwrap();
        let contributions: Vec<u64> = r.per_vertex.iter().map(|c| c.contribution).collect();
        assert_eq!(contributions, vec![6, 4, 6]);
    }

    #[test]
    fn complement_sum_examples() {
        let t = circulant(5, &[1, 2]);
        let c = check_complement_sum(&t).unwrap();
        assert_eq!(c.sum, XiValue::from_integer(40));
        assert_eq!(c.bound, 40);
        assert!(c.holds && c.equality && c.both_self_centered_radius_two);

        let c5 = biorient(&UndirectedGraph::cycle(5).unwrap());
        let c = check_complement_sum(&c5).unwrap();
        assert!(c.holds);

        let k4 = biorient(&UndirectedGraph::complete(4).unwrap());
        assert!(matches!(
            check_complement_sum(&k4),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_complement_sum(&fig1()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn regular_bound_examples() {
        for n in 3..10 {
            let c = check_regular_bounds(&dicycle(n)).unwrap();
            assert_eq!(c.r, 1);
            assert_eq!(c.xi, XiValue::from_integer((n * (n - 1)) as u64));
            assert_eq!(c.upper, (n * (n - 1)) as u64);
            assert!(c.holds);
        }
        let k = biorient(&UndirectedGraph::complete(6).unwrap());
        let c = check_regular_bounds(&k).unwrap();
        assert_eq!((c.r, c.lower, c.upper), (5, 30, 30));
        assert!(c.holds);

        let c = check_regular_bounds(&circulant(5, &[1, 2])).unwrap();
        assert_eq!((c.lower, c.upper), (20, 30));
        assert_eq!(c.xi, XiValue::from_integer(20));

        assert_eq!(check_regular_bounds(&fig1()), Err(Error::NotRegular));
    }
}
