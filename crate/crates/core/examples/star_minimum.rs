//! Minimum over all strong digraphs of order 4 and 5; the unique class is
//! the bidirected star.

use ecci::digraph::{biorient, UndirectedGraph};
use ecci::extremal::{canonical_form, enumerate_strong_digraphs, Objective, SearchOptions};
use ecci::index::ecci_digraph;

fn main() -> ecci::Result<()> {
    for n in [4, 5] {
        let r = enumerate_strong_digraphs(n, Objective::Min, &SearchOptions::default())?;
        let star = biorient(&UndirectedGraph::star(n)?);
        let witness = &r.witness_digraphs()?[0];
        println!(
            "n={n} min={} star={} classes={} star-class={}",
            r.extremal_value.unwrap(),
            ecci_digraph(&star)?,
            r.witnesses.len(),
            canonical_form(witness)? == canonical_form(&star)?
        );
    }
    Ok(())
}
