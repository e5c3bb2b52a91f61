//! Parse an edge list, print the md matrix, and write it back out.

use ecci::io::{parse_edge_list, serialize_edge_list};
use ecci::metrics::all_pairs_distances;

const INPUT: &str = "\
# directed 4-cycle with one chord
4 5
0 1
1 2
2 3
3 0
0 2
";

fn main() -> ecci::Result<()> {
    let d = parse_edge_list(INPUT)?;
    let dist = all_pairs_distances(&d);
    println!("md matrix:");
    for u in 0..d.order() {
        let row: Vec<String> = dist.md_row(u).iter().map(|x| x.to_string()).collect();
        println!("  {}", row.join(" "));
    }
    println!("xi = {}", ecci::index::ecci_digraph(&d)?);
    print!("{}", serialize_edge_list(&d));

    // Errors carry the offending line.
    let err = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
