//! Check instances of the q-binomial theorem
//! `sum_n (a;q)_n / (q;q)_n z^n = (az;q)inf / (z;q)inf` exactly.
//!
//! ```bash
//! cargo run -p podc --example qbinomial
//! ```

use podc::{qbinomial_check, SignedMonomial};

fn main() -> podc::Result<()> {
    let order = 200;
    let m = |c, e| SignedMonomial::new(c, e).expect("valid monomial");
    let instances = [
        (m(-1, 1), m(1, 2)),
        (m(-1, 1), m(1, 4)),
        (m(-1, 1), m(1, 1)),
        (m(1, 1), m(1, 2)),
        (SignedMonomial::zero(), m(1, 1)),
    ];
    for (a, z) in instances {
        let report = qbinomial_check(a, z, order)?;
        println!(
            "a = {:>3}, z = {:>4}, order {order}: {}",
            report.a,
            report.z,
            if report.equal { "equal" } else { "MISMATCH" }
        );
        assert!(report.equal);
    }
    Ok(())
}
