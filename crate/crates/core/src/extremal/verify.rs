//! Named theorem checks. Exhaustive where the instance space is small
//! enough, seeded sampling otherwise; every counterexample is reported as a
//! reproducible [`encode_digraph`] string.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    canonical_form, decode_digraph, encode_digraph, enumerate_strong_digraphs,
    enumerate_tournaments, ExtremalReport, Objective, SearchOptions, STRONG_DIGRAPH_CAP,
    STRONG_DIGRAPH_HARD_CAP, TOURNAMENT_CAP, TOURNAMENT_HARD_CAP,
};
use crate::digraph::{biorient, Digraph};
use crate::error::{Error, Result};
use crate::families::{
    fixture, gen_bidirected_family, gen_circulant, gen_directed_cycle, gen_kn_orientation,
    gen_pn_plus, gen_pn_star, BidirectedKind, Direction, FixtureId,
};
use crate::index::{
    check_bound_theorem, check_complement_sum, check_regular_bounds, ecci_digraph, ecci_graph,
    IndexReport, XiValue,
};
use crate::metrics::ecc_profile;
use crate::random::{bernoulli_digraph, random_connected_graph, random_strong_digraph, rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    #[serde(rename = "sameecc")]
    SameEcc,
    Reverse,
    Bounds,
    SelfCenteredEquality,
    ComplementSum,
    RegularBounds,
    KnMin,
    KnConstruction,
    StarMin,
    PnStarDelta,
    PnPlusDelta,
    FixtureValues,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::SameEcc,
        TheoremId::Reverse,
        TheoremId::Bounds,
        TheoremId::SelfCenteredEquality,
        TheoremId::ComplementSum,
        TheoremId::RegularBounds,
        TheoremId::KnMin,
        TheoremId::KnConstruction,
        TheoremId::StarMin,
        TheoremId::PnStarDelta,
        TheoremId::PnPlusDelta,
        TheoremId::FixtureValues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::SameEcc => "sameecc",
            TheoremId::Reverse => "reverse",
            TheoremId::Bounds => "bounds",
            TheoremId::SelfCenteredEquality => "self_centered_equality",
            TheoremId::ComplementSum => "complement_sum",
            TheoremId::RegularBounds => "regular_bounds",
            TheoremId::KnMin => "kn_min",
            TheoremId::KnConstruction => "kn_construction",
            TheoremId::StarMin => "star_min",
            TheoremId::PnStarDelta => "pn_star_delta",
            TheoremId::PnPlusDelta => "pn_plus_delta",
            TheoremId::FixtureValues => "fixture_values",
        }
    }

    /// Default order range.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            TheoremId::SameEcc => (2, 12),
            TheoremId::Reverse | TheoremId::Bounds | TheoremId::SelfCenteredEquality => (3, 12),
            TheoremId::ComplementSum => (5, 10),
            TheoremId::RegularBounds => (3, 30),
            TheoremId::KnMin => (3, 6),
            TheoremId::KnConstruction => (3, 12),
            TheoremId::StarMin => (4, 5),
            TheoremId::PnStarDelta => (3, 50),
            TheoremId::PnPlusDelta => (3, 12),
            TheoremId::FixtureValues => (3, 8),
        }
    }

    /// Default sample count for the sampled checks.
    pub fn default_samples(self) -> Option<usize> {
        match self {
            TheoremId::SameEcc
            | TheoremId::Reverse
            | TheoremId::Bounds
            | TheoremId::SelfCenteredEquality => Some(500),
            TheoremId::ComplementSum => Some(200),
            _ => None,
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyParams {
    /// Inclusive order range; `None` uses the theorem's default.
    pub n_range: Option<(usize, usize)>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub search: SearchOptions,
}

/// One row of the `P_n⁺` delta audit. Deltas are doubled values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaAuditRow {
    pub n: usize,
    /// `ξ(P_n⁺) − ξ(P↔_n)` from two engine runs.
    pub engine_delta: XiValue,
    /// `½ Σ (added degree)·mecc` from the path's eccentricities alone.
    pub tabulated_delta: XiValue,
    pub closed_form: String,
    /// Exact value of the closed form, as `p` or `p/q`.
    pub closed_form_value: String,
    pub closed_form_integral: bool,
    pub matches_closed_form: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureAudit {
    pub fixture: String,
    pub computed: XiValue,
    pub reference: Option<u64>,
    pub discrepancy: bool,
    pub report: IndexReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub parameter_range: String,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub instances_checked: u64,
    pub failures: Vec<String>,
    pub pass: bool,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extremal: Vec<ExtremalReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub delta_audit: Vec<DeltaAuditRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixture_audit: Vec<FixtureAudit>,
}

struct Run {
    checked: u64,
    failures: Vec<String>,
    notes: Vec<String>,
    extremal: Vec<ExtremalReport>,
    delta_audit: Vec<DeltaAuditRow>,
    fixture_audit: Vec<FixtureAudit>,
}

impl Run {
    fn new() -> Self {
        Run {
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            extremal: Vec::new(),
            delta_audit: Vec::new(),
            fixture_audit: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, d: &Digraph, what: &str) {
        self.checked += 1;
        if !ok {
            self.failures
                .push(format!("{} ({what})", encode_digraph(d)));
        }
    }
}

/// Cap on orders for the sampled and family checks without `allow_large`.
const SAMPLED_CAP: usize = 64;
/// Largest circulant order whose connection sets are all enumerated.
const CIRCULANT_CAP: usize = 12;
/// Family sweep range used by `bounds` when no range is given.
const FAMILY_RANGE: (usize, usize) = (3, 30);
/// Directed-cycle range used by `kn_construction` when no range is given.
const CYCLE_RANGE: (usize, usize) = (3, 50);

pub fn verify_theorem(theorem: TheoremId, params: &VerifyParams) -> Result<VerificationReport> {
    let (lo, hi) = params.n_range.unwrap_or_else(|| theorem.default_range());
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "empty order range {lo}..{hi}"
        )));
    }
    let samples = params.samples.or_else(|| theorem.default_samples());
    let allow = params.search.allow_large;
    let cap = |cap: usize, hard: usize| -> Result<()> {
        if hi > hard || (hi > cap && !allow) {
            Err(Error::OrderCapExceeded {
                n: hi,
                cap: if hi > hard { hard } else { cap },
            })
        } else {
            Ok(())
        }
    };

    let mut run = Run::new();
    let seed = params.seed;
    let explicit = params.n_range.is_some();
    match theorem {
        TheoremId::SameEcc => {
            cap(SAMPLED_CAP, usize::MAX)?;
            if lo < 1 {
                return Err(Error::InvalidParameter("orders start at 1".into()));
            }
            let mut r = rng(seed);
            for _ in 0..samples.unwrap_or(0) {
                let n = r.gen_range(lo..=hi);
                let p = r.gen_range(0.0..0.5);
                let g = random_connected_graph(n, p, r.gen())?;
                let d = biorient(&g);
                let undirected = ecci_graph(&g)?;
                run.check(
                    ecci_digraph(&d)? == XiValue::from_integer(undirected),
                    &d,
                    "graph != biorientation",
                );
            }
        }
        TheoremId::Reverse => {
            cap(SAMPLED_CAP, usize::MAX)?;
            for d in strong_corpus(lo.max(2), hi, samples.unwrap_or(0), seed)? {
                let rev = d.reverse();
                let same_xi = ecci_digraph(&d)? == ecci_digraph(&rev)?;
                let (p, q) = (ecc_profile(&d)?, ecc_profile(&rev)?);
                let swapped = p.ecc_out == q.ecc_in && p.ecc_in == q.ecc_out && p.mecc == q.mecc;
                run.check(same_xi && swapped, &d, "reverse changes the index");
            }
        }
        TheoremId::Bounds | TheoremId::SelfCenteredEquality => {
            cap(SAMPLED_CAP, usize::MAX)?;
            let mut corpus = strong_corpus(lo.max(2), hi, samples.unwrap_or(0), seed)?;
            let (flo, fhi) = if explicit { (lo, hi) } else { FAMILY_RANGE };
            corpus.extend(family_sweep(flo.max(3), fhi));
            for d in &corpus {
                let report = check_bound_theorem(d)?;
                let ok = if theorem == TheoremId::Bounds {
                    report.bounds_hold && report.recomputed_doubled() == report.xi.doubled()
                } else {
                    report.bounds_tight == report.self_centered
                };
                run.check(ok, d, theorem.name());
            }
        }
        TheoremId::ComplementSum => {
            cap(SAMPLED_CAP, usize::MAX)?;
            if lo < 4 {
                return Err(Error::PreconditionViolated(
                    "complement sum needs n >= 4".into(),
                ));
            }
            let mut r = rng(seed);
            for _ in 0..samples.unwrap_or(0) {
                let n = r.gen_range(lo..=hi);
                let d = strong_pair(n, &mut r)?;
                let c = check_complement_sum(&d)?;
                let ok = c.holds && (c.equality == c.both_self_centered_radius_two);
                run.check(ok, &d, "complement sum");
            }
        }
        TheoremId::RegularBounds => {
            cap(SAMPLED_CAP, usize::MAX)?;
            for n in lo.max(3)..=hi {
                let d = gen_directed_cycle(n)?;
                let c = check_regular_bounds(&d)?;
                run.check(
                    c.holds && c.xi == XiValue::from_integer(c.upper),
                    &d,
                    "cycle misses upper bound",
                );
            }
            let circ_hi = if allow {
                hi.min(16)
            } else {
                hi.min(CIRCULANT_CAP)
            };
            for n in lo.max(3)..=circ_hi {
                for d in all_circulants(n) {
                    let c = check_regular_bounds(&d)?;
                    run.check(c.holds, &d, "circulant outside regular bounds");
                }
            }
            run.notes.push(format!(
                "circulants enumerated for n in {}..={circ_hi}",
                lo.max(3)
            ));
        }
        TheoremId::KnMin => {
            cap(TOURNAMENT_CAP, TOURNAMENT_HARD_CAP)?;
            for n in lo.max(3)..=hi {
                let report = enumerate_tournaments(n, Objective::Min, &params.search)?;
                run.checked += report.strong_count;
                let target = XiValue::from_integer((n * (n - 1)) as u64);
                if report.extremal_value != Some(target) || report.bound_violations != 0 {
                    run.failures.push(format!(
                        "n={n}: tournament minimum {:?}, expected {target}",
                        report.extremal_value.map(|x| x.to_string())
                    ));
                }
                run.notes.push(format!(
                    "n={n}: min {} over {} strong tournaments, {} labeled minimizers in {} classes",
                    show(report.extremal_value),
                    report.strong_count,
                    report.witness_count_labeled,
                    report.witnesses.len()
                ));
                run.extremal.push(report);
            }
        }
        TheoremId::KnConstruction => {
            cap(SAMPLED_CAP, usize::MAX)?;
            for n in lo.max(3)..=hi {
                let d = gen_kn_orientation(n)?;
                let tournament =
                    (0..n).all(|u| (u + 1..n).all(|v| d.has_arc(u, v) != d.has_arc(v, u)));
                let profile = ecc_profile(&d)?;
                let mecc_ok = n < 4 || profile.mecc.iter().all(|&m| m == 2);
                let xi_ok = ecci_digraph(&d)? == XiValue::from_integer((n * (n - 1)) as u64);
                run.check(tournament && mecc_ok && xi_ok, &d, "K_n orientation");
            }
            let (clo, chi) = if explicit { (lo, hi) } else { CYCLE_RANGE };
            for n in clo.max(3)..=chi {
                let d = gen_directed_cycle(n)?;
                run.check(
                    ecci_digraph(&d)? == XiValue::from_integer((n * (n - 1)) as u64),
                    &d,
                    "directed cycle",
                );
            }
        }
        TheoremId::StarMin => {
            cap(STRONG_DIGRAPH_CAP, STRONG_DIGRAPH_HARD_CAP)?;
            if lo < 4 {
                return Err(Error::PreconditionViolated(
                    "star minimality needs n >= 4".into(),
                ));
            }
            for n in lo..=hi {
                let report = enumerate_strong_digraphs(n, Objective::Min, &params.search)?;
                run.checked += report.strong_count;
                let star = gen_bidirected_family(BidirectedKind::Star, n)?;
                let star_form = canonical_form(&star)?;
                let forms: Vec<Vec<u8>> = report
                    .witnesses
                    .iter()
                    .map(|w| decode_digraph(w).and_then(|d| canonical_form(&d)))
                    .collect::<Result<_>>()?;
                let value_ok =
                    report.extremal_value == Some(XiValue::from_integer(3 * (n as u64 - 1)));
                let class_ok = forms == [star_form];
                let count_ok = report.witness_count_labeled == n as u64;
                if !(value_ok && class_ok && count_ok && report.bound_violations == 0) {
                    run.failures.push(format!(
                        "n={n}: min {} with {} classes / {} labeled witnesses: {:?}",
                        show(report.extremal_value),
                        report.witnesses.len(),
                        report.witness_count_labeled,
                        report.witnesses
                    ));
                }
                run.notes.push(format!(
                    "n={n}: min={}, witnesses: {}",
                    show(report.extremal_value),
                    if class_ok {
                        "bidirected star".to_string()
                    } else {
                        report.witnesses.join(", ")
                    }
                ));
                run.extremal.push(report);
            }
        }
        TheoremId::PnStarDelta => {
            cap(SAMPLED_CAP, usize::MAX)?;
            for n in lo.max(3)..=hi {
                let base = ecci_digraph(&gen_bidirected_family(BidirectedKind::Path, n)?)?;
                for dir in [Direction::Forward, Direction::Backward] {
                    let d = gen_pn_star(n, dir)?;
                    let delta = ecci_digraph(&d)?.doubled() - base.doubled();
                    run.check(delta == 2 * (n as u64 - 1), &d, "P_n* delta != n-1");
                }
            }
        }
        TheoremId::PnPlusDelta => {
            cap(SAMPLED_CAP, usize::MAX)?;
            for n in lo.max(3)..=hi {
                let row = pn_plus_row(n)?;
                run.checked += 1;
                if row.engine_delta != row.tabulated_delta {
                    run.failures.push(format!(
                        "n={n}: engine delta {} != tabulated {}",
                        row.engine_delta, row.tabulated_delta
                    ));
                }
                run.delta_audit.push(row);
            }
            let agree = run
                .delta_audit
                .iter()
                .filter(|r| r.matches_closed_form)
                .count();
            run.notes.push(format!(
                "closed forms agree with the engine at {agree} of {} orders (informational)",
                run.delta_audit.len()
            ));
        }
        TheoremId::FixtureValues => {
            for id in FixtureId::ALL {
                let audit = audit_fixture(id)?;
                run.checked += 1;
                if !audit.report.is_consistent() {
                    run.failures
                        .push(format!("{}: inconsistent index report", audit.fixture));
                }
                if audit.discrepancy {
                    run.notes.push(format!(
                        "{}: computed {} but the recorded value is {}",
                        audit.fixture,
                        audit.computed,
                        audit.reference.unwrap_or_default()
                    ));
                }
                run.fixture_audit.push(audit);
            }
        }
    }

    let sampled = theorem.default_samples().is_some();
    Ok(VerificationReport {
        theorem_id: theorem,
        parameter_range: format!("n={lo}..={hi}"),
        seed: sampled.then_some(seed),
        samples: if sampled { samples } else { None },
        instances_checked: run.checked,
        pass: run.failures.is_empty(),
        failures: run.failures,
        notes: run.notes,
        extremal: run.extremal,
        delta_audit: run.delta_audit,
        fixture_audit: run.fixture_audit,
    })
}

fn show(x: Option<XiValue>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}

/// Seeded strong digraphs with uniform order in `lo..=hi` and arc
/// probability in `[0.3, 0.8)`.
pub(crate) fn strong_corpus(
    lo: usize,
    hi: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Digraph>> {
    let mut r = rng(seed);
    (0..samples)
        .map(|_| {
            let n = r.gen_range(lo..=hi);
            let p = r.gen_range(0.3..0.8);
            random_strong_digraph(n, p, r.gen())
        })
        .collect()
}

/// A `G(n, 1/2)` digraph whose complement is also strong.
fn strong_pair<R: Rng>(n: usize, r: &mut R) -> Result<Digraph> {
    const ATTEMPTS: u32 = 10_000;
    for _ in 0..ATTEMPTS {
        let d = bernoulli_digraph(n, 0.5, r);
        if d.is_strongly_connected() && d.complement().is_strongly_connected() {
            return Ok(d);
        }
    }
    Err(Error::RetriesExhausted { attempts: ATTEMPTS })
}

/// Every family generator at every order in `lo..=hi`.
pub(crate) fn family_sweep(lo: usize, hi: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.push(gen_directed_cycle(n).unwrap());
        for kind in [
            BidirectedKind::Path,
            BidirectedKind::Star,
            BidirectedKind::Cycle,
            BidirectedKind::Complete,
        ] {
            out.push(gen_bidirected_family(kind, n).unwrap());
        }
        out.push(gen_kn_orientation(n).unwrap());
        out.push(gen_pn_star(n, Direction::Forward).unwrap());
        out.push(gen_pn_star(n, Direction::Backward).unwrap());
        out.push(gen_pn_plus(n).unwrap());
        if let Ok(d) = gen_circulant(n, &[1, n / 2]) {
            out.push(d);
        }
    }
    out
}

/// Strong circulants over every nonempty connection set.
pub(crate) fn all_circulants(n: usize) -> Vec<Digraph> {
    (1u32..1 << (n - 1))
        .filter_map(|set| {
            let steps: Vec<usize> = (1..n).filter(|s| set >> (s - 1) & 1 == 1).collect();
            gen_circulant(n, &steps).ok()
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The printed closed form for the `P_n⁺` increment as an exact fraction.
fn closed_form_delta(n: usize) -> (&'static str, i64, i64) {
    let m = n as i64;
    if n % 2 == 1 {
        ("(n^3-4n^2+6n-3)/4", m * m * m - 4 * m * m + 6 * m - 3, 4)
    } else {
        (
            "(3n^3-5n^2-12n+16)/8",
            3 * m * m * m - 5 * m * m - 12 * m + 16,
            8,
        )
    }
}

fn pn_plus_row(n: usize) -> Result<DeltaAuditRow> {
    let path = gen_bidirected_family(BidirectedKind::Path, n)?;
    let plus = gen_pn_plus(n)?;
    let engine = ecci_digraph(&plus)?.doubled() - ecci_digraph(&path)?.doubled();

    let mecc = ecc_profile(&path)?.mecc;
    let tabulated: u64 = (0..n)
        .map(|v| {
            let added =
                (plus.out_degree(v) + plus.in_degree(v)) - (path.out_degree(v) + path.in_degree(v));
            added as u64 * u64::from(mecc[v])
        })
        .sum();

    let (formula, num, den) = closed_form_delta(n);
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);
    Ok(DeltaAuditRow {
        n,
        engine_delta: XiValue::from_doubled(engine),
        tabulated_delta: XiValue::from_doubled(tabulated),
        closed_form: formula.to_string(),
        closed_form_value: if den == 1 {
            num.to_string()
        } else {
            format!("{num}/{den}")
        },
        closed_form_integral: den == 1,
        // engine/2 == num/den
        matches_closed_form: engine as i64 * den == 2 * num,
    })
}

/// Recomputes a fixture's index and sets it beside its recorded value.
pub fn audit_fixture(id: FixtureId) -> Result<FixtureAudit> {
    let d = fixture(id);
    let report = check_bound_theorem(&d)?;
    let reference = id.reference_value();
    Ok(FixtureAudit {
        fixture: id.name().to_string(),
        computed: report.xi,
        reference,
        discrepancy: reference.is_some_and(|c| XiValue::from_integer(c) != report.xi),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(lo: usize, hi: usize, samples: Option<usize>) -> VerifyParams {
        VerifyParams {
            n_range: Some((lo, hi)),
            samples,
            seed: 11,
            search: SearchOptions {
                workers: 1,
                allow_large: false,
            },
        }
    }

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("star-min".parse::<TheoremId>().unwrap(), TheoremId::StarMin);
        assert!(matches!(
            "nope".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn sampled_checks_pass() {
        for t in [
            TheoremId::SameEcc,
            TheoremId::Reverse,
            TheoremId::Bounds,
            TheoremId::SelfCenteredEquality,
        ] {
            let r = verify_theorem(t, &params(3, 8, Some(40))).unwrap();
            assert!(r.pass, "{t}: {:?}", r.failures);
            assert_eq!(r.seed, Some(11));
        }
        let r = verify_theorem(TheoremId::ComplementSum, &params(5, 7, Some(20))).unwrap();
        assert!(r.pass && r.instances_checked == 20);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = verify_theorem(TheoremId::Reverse, &params(3, 9, Some(30))).unwrap();
        let b = verify_theorem(TheoremId::Reverse, &params(3, 9, Some(30))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn star_min_at_four() {
        let r = verify_theorem(TheoremId::StarMin, &params(4, 4, None)).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert_eq!(
            r.notes,
            vec!["n=4: min=9, witnesses: bidirected star".to_string()]
        );
        assert!(verify_theorem(TheoremId::StarMin, &params(3, 4, None)).is_err());
        assert!(matches!(
            verify_theorem(TheoremId::StarMin, &params(4, 6, None)),
            Err(Error::OrderCapExceeded { cap: 5, .. })
        ));
    }

    #[test]
    fn pn_plus_rows() {
        let row = pn_plus_row(5).unwrap();
        assert_eq!(row.engine_delta, XiValue::from_integer(20));
        assert_eq!(row.tabulated_delta, row.engine_delta);
        assert_eq!(row.closed_form_value, "13");
        assert!(!row.matches_closed_form);
        let row = pn_plus_row(6).unwrap();
        assert_eq!(row.closed_form_value, "103/2");
        assert!(!row.closed_form_integral);
    }

    #[test]
    fn t2_discrepancy_is_flagged() {
        let audit = audit_fixture(FixtureId::T2).unwrap();
        assert_eq!(audit.reference, Some(24));
        assert_eq!(audit.computed, XiValue::from_integer(20));
        assert!(audit.discrepancy);
        assert!(!audit_fixture(FixtureId::Fig1).unwrap().discrepancy);
    }

    #[test]
    fn circulant_enumeration_counts() {
        // n = 4: sets {1},{3},{1,2},{1,3},{2,3},{1,2,3} are strong; {2} is not.
        assert_eq!(all_circulants(4).len(), 6);
    }
}
