//! Strong orientations of K_n reaching the tournament minimum n(n-1).

use ecci::families::gen_kn_orientation;
use ecci::index::ecci_digraph;
use ecci::metrics::ecc_profile;

fn main() -> ecci::Result<()> {
    println!(
        "{:>3} {:>6} {:>8} {:>5} {:>6}",
        "n", "xi", "n(n-1)", "mrad", "mdiam"
    );
    for n in 3..=12 {
        let d = gen_kn_orientation(n)?;
        let p = ecc_profile(&d)?;
        println!(
            "{:>3} {:>6} {:>8} {:>5} {:>6}",
            n,
            ecci_digraph(&d)?.to_string(),
            n * (n - 1),
            p.mrad,
            p.mdiam
        );
    }
    Ok(())
}
