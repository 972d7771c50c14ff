//! Exhaustively audit both case-analysis maps over a range of levels:
//! totality, target membership, injectivity, exact cardinality, and
//! round-trips in both directions.
//!
//! ```bash
//! cargo run -p podc --example audit_bijections
//! ```

use podc::{verify_bijection_sweep, Theorem, VerifyConfig};

fn main() -> podc::Result<()> {
    let cfg = VerifyConfig::default();
    for (theorem, from, to) in [(Theorem::T31, 2, 25), (Theorem::T32, 3, 22)] {
        let report = verify_bijection_sweep(theorem, from, to, &cfg)?;
        print!("{}", report.render_plain());
        assert!(report.passed);
        println!();
    }
    Ok(())
}
