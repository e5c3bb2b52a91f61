//! Eccentricity profile of a sparse random strong digraph, streamed without
//! storing a distance matrix.
//!
//! `cargo run --release --example large_profile -- 5000`

use std::time::Instant;

use ecci::index::index_report;
use ecci::metrics::ecc_profile_with_workers;
use ecci::random::random_strong_sparse;

fn main() -> ecci::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let d = random_strong_sparse(n, 4, 1)?;
    let t = Instant::now();
    let p = ecc_profile_with_workers(&d, 1)?;
    let r = index_report(&d, &p);
    println!(
        "n={n} arcs={} xi={} mrad={} mdiam={} in {:.2?}",
        d.arc_count(),
        r.xi,
        r.mrad,
        r.mdiam,
        t.elapsed()
    );
    Ok(())
}
