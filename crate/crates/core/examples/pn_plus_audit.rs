//! Index deltas of P_n^+ against its base graph, next to the published
//! closed forms.

use ecci::extremal::{verify_theorem, TheoremId, VerifyParams};

fn main() -> ecci::Result<()> {
    let params = VerifyParams {
        n_range: Some((3, 12)),
        ..VerifyParams::default()
    };
    let report = verify_theorem(TheoremId::PnPlusDelta, &params)?;
    println!(
        "{:>3} {:>8} {:>10} {:>12}",
        "n", "engine", "tabulated", "closed-form"
    );
    for row in &report.delta_audit {
        println!(
            "{:>3} {:>8} {:>10} {:>12}",
            row.n,
            row.engine_delta.to_string(),
            row.tabulated_delta.to_string(),
            row.closed_form_value
        );
    }
    Ok(())
}
