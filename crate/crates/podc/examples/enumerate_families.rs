//! Enumerate the restricted families at one level and show their members.
//!
//! ```bash
//! cargo run -p podc --example enumerate_families
//! ```

use podc::{family_partitions, partitions_of, FamilyTag};

fn main() -> podc::Result<()> {
    let n = 8;
    println!("all partitions of {n}:");
    for p in partitions_of(n)? {
        println!("  {p}");
    }

    for tag in FamilyTag::ALL {
        let members: Vec<String> = family_partitions(n, tag)?.map(|p| p.to_string()).collect();
        println!(
            "\n{tag}({n}) has {} member(s):\n  {}",
            members.len(),
            members.join("\n  ")
        );
    }
    Ok(())
}
