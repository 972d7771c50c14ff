//! Build the named generating functions and read coefficients off them.
//!
//! ```bash
//! cargo run -p podc --example named_series
//! ```

use podc::{named_gf, SeriesName, TruncatedSeries};

fn main() -> podc::Result<()> {
    let order = 12;
    for name in SeriesName::ALL {
        let s = named_gf(name, order);
        println!("{name:>13}: {s}");
    }

    // The o3 partial sum and its closed form are different constructions;
    // their expansions agree.
    let sum = named_gf(SeriesName::O3Sum, 100);
    let closed = named_gf(SeriesName::O3Closed, 100);
    assert_eq!(sum, closed);
    println!("\no3 partial sum and closed form agree to order 100");

    // Series serialize as {order, coeffs} with decimal-string coefficients.
    let json = serde_json::to_string(&named_gf(SeriesName::Pod, 6)).expect("serializes");
    println!("pod as JSON: {json}");
    let back: TruncatedSeries = serde_json::from_str(&json).expect("parses");
    assert_eq!(back, named_gf(SeriesName::Pod, 6));
    Ok(())
}
