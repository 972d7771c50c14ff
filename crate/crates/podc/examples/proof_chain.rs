//! Verify the chain of series identities behind the o3 closed form,
//! coefficientwise and exactly.
//!
//! ```bash
//! cargo run -p podc --example proof_chain
//! ```

use podc::{verify_proof_chain, VerifyConfig};

fn main() -> podc::Result<()> {
    let report = verify_proof_chain(300, &VerifyConfig::default())?;
    print!("{}", report.render_plain());
    assert!(report.passed);
    Ok(())
}
