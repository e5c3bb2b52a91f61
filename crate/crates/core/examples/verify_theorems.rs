//! Runs every theorem check at its default range.

use ecci::extremal::{verify_theorem, TheoremId, VerifyParams};

fn main() -> ecci::Result<()> {
    for id in TheoremId::ALL {
        let r = verify_theorem(id, &VerifyParams::default())?;
        println!(
            "{:<24} {:<4} instances={:<5} {}",
            id.to_string(),
            if r.pass { "ok" } else { "FAIL" },
            r.instances_checked,
            r.parameter_range
        );
        for f in r.failures.iter().take(3) {
            println!("    {f}");
        }
    }
    Ok(())
}
