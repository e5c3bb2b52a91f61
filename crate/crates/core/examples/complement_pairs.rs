//! Random digraphs whose complement is also strong: xi(D) + xi(complement)
//! against the 2n(n-1) bound.

use ecci::index::check_complement_sum;
use ecci::random::{bernoulli_digraph, rng};

fn main() -> ecci::Result<()> {
    let mut r = rng(7);
    let mut shown = 0;
    while shown < 8 {
        let d = bernoulli_digraph(7, 0.5, &mut r);
        if let Ok(c) = check_complement_sum(&d) {
            println!(
                "n={} xi={:<4} xi(comp)={:<4} sum={:<4} bound={} holds={}",
                c.n,
                c.xi.to_string(),
                c.xi_complement.to_string(),
                c.sum.to_string(),
                c.bound,
                c.holds
            );
            shown += 1;
        }
    }
    Ok(())
}
