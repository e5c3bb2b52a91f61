//! Every named family at a few orders, with its index and radius/diameter.

use ecci::families::{Direction, FamilySpec, FAMILY_NAMES};
use ecci::index::ecci_digraph;
use ecci::metrics::ecc_profile;

fn main() -> ecci::Result<()> {
    for name in FAMILY_NAMES {
        for n in [4, 7] {
            let set = (*name == "circulant").then(|| vec![1, 3]);
            let spec = match FamilySpec::parse(name, Some(n), Some(Direction::Forward), set) {
                Ok(spec) => spec,
                Err(_) => continue,
            };
            let d = match spec.generate() {
                Ok(d) => d,
                Err(e) => {
                    println!("{spec:<32} {e}");
                    continue;
                }
            };
            let p = ecc_profile(&d)?;
            println!(
                "{:<32} n={:<2} arcs={:<3} xi={:<6} mrad={} mdiam={}",
                spec.to_string(),
                d.order(),
                d.arc_count(),
                ecci_digraph(&d)?.to_string(),
                p.mrad,
                p.mdiam
            );
        }
    }
    Ok(())
}
