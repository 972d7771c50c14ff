//! Count every family two independent ways: exhaustive enumeration and
//! series coefficients.
//!
//! ```bash
//! cargo run -p podc --example count_families
//! ```

use podc::{count_family, family_series_name, named_gf, FamilyTag};

fn main() -> podc::Result<()> {
    let max_n = 20u64;
    let mut header = String::from("   n");
    for tag in FamilyTag::ALL {
        header.push_str(&format!(" {:>8}", tag.name()));
    }
    println!("{header}");

    let series: Vec<_> = FamilyTag::ALL
        .iter()
        .map(|&tag| named_gf(family_series_name(tag), max_n as usize))
        .collect();

    for n in 0..=max_n {
        let mut row = format!("{n:>4}");
        for (tag, gf) in FamilyTag::ALL.into_iter().zip(&series) {
            let by_enum = count_family(n, tag)?;
            let by_series = gf.coefficient(n as usize)?;
            assert_eq!(
                by_enum.to_string(),
                by_series.to_string(),
                "routes disagree for {tag} at n = {n}"
            );
            row.push_str(&format!(" {by_enum:>8}"));
        }
        println!("{row}");
    }
    println!("\nenumeration and series coefficients agree on every entry");
    Ok(())
}
