//! Cross-check series coefficients against a locally supplied b-file
//! (`index value` lines, `#` comments).
//!
//! ```bash
//! cargo run -p podc --example oeis_cross_check
//! ```

use std::path::Path;

use podc::{oeis_cross_check, read_bfile, FamilyTag, VerifyConfig};

fn main() -> podc::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/pod.bfile");
    let entries = read_bfile(&path)?;
    println!("read {} entries from {}", entries.len(), path.display());

    let report = oeis_cross_check(FamilyTag::Pod, &entries, 0, 1000, &VerifyConfig::default())?;
    print!("{}", report.render_plain());
    assert!(report.passed);
    Ok(())
}
