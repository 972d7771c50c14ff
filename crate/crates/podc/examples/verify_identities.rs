//! Run the whole identity catalog, each identity by enumeration and by
//! series coefficients, and show the below-range probes.
//!
//! ```bash
//! cargo run -p podc --example verify_identities
//! ```

use podc::{verify_identity, IdentityTag, Method, VerifyConfig};

fn main() -> podc::Result<()> {
    let cfg = VerifyConfig::default();
    for tag in IdentityTag::ALL {
        let report = verify_identity(tag, 40, Method::Both, &cfg)?;
        println!(
            "identity {tag}  {statement:<28}  n = {lo}..={hi}: {status}",
            statement = tag.statement(),
            lo = report.range.0,
            hi = report.range.1,
            status = if report.passed { "PASS" } else { "FAIL" },
        );
        for probe in &report.below_range {
            println!(
                "    below range n={}: {} ({} vs {})",
                probe.n,
                if probe.holds { "holds" } else { "fails" },
                probe.lhs,
                probe.rhs
            );
        }
        assert!(report.passed);
    }
    Ok(())
}
