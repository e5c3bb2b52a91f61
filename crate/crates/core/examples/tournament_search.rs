//! Exhaustive minimum over all tournaments, deduplicated up to isomorphism.
//!
//! `cargo run --release --example tournament_search -- 6`

use ecci::extremal::{enumerate_tournaments, Objective, SearchOptions};

fn main() -> ecci::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let opts = SearchOptions::default();
    for n in 3..=max_n {
        let r = enumerate_tournaments(n, Objective::Min, &opts)?;
        println!(
            "n={n} labeled={} strong={} min={} witnesses={} ({} labeled)",
            r.labeled_count,
            r.strong_count,
            r.extremal_value.map(|x| x.to_string()).unwrap_or_default(),
            r.witnesses.len(),
            r.witness_count_labeled
        );
    }
    Ok(())
}
