//! Index, eccentricities and bounds for the small worked fixtures.

use ecci::families::{fixture, FixtureId};
use ecci::index::index_report;
use ecci::metrics::ecc_profile;

fn main() -> ecci::Result<()> {
    for id in FixtureId::ALL {
        let d = fixture(id);
        let profile = ecc_profile(&d)?;
        let r = index_report(&d, &profile);
        println!(
            "{:<5} n={:<2} arcs={:<3} xi={:<4} mrad={} mdiam={} bounds=[{}, {}] self-centered={}",
            id.name(),
            d.order(),
            d.arc_count(),
            r.xi.to_string(),
            r.mrad,
            r.mdiam,
            r.lower_bound,
            r.upper_bound,
            r.self_centered
        );
    }
    Ok(())
}
