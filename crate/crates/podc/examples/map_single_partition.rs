//! Apply the case-analysis maps to single partitions and print the full
//! audit records, then undo them with the backward maps.
//!
//! ```bash
//! cargo run -p podc --example map_single_partition
//! ```

use podc::{
    thm31_backward, thm31_forward, thm32_backward, thm32_forward, MappingRecord, Partition,
    T31Source, T32Source,
};

fn show(record: &MappingRecord) {
    println!("  input:    {}", record.input);
    println!("  case:     {}", record.case);
    match &record.mu {
        Some(mu) => println!("  mu:       {mu}"),
        None => println!("  mu:       -"),
    }
    println!("  alpha:    {}", record.alpha);
    println!("  beta:     {}", record.beta);
    println!("  phi_beta: {}", record.phi_beta);
    println!("  output:   {}", record.output);
    println!("  target:   {}", record.target);
}

fn main() -> podc::Result<()> {
    let p: Partition = "11,8,5,5,5,4,3".parse()?;
    println!("seven-case map on ({p}):");
    let record = thm31_forward(&p)?;
    show(&record);

    let back = thm31_backward(&record.output, T31Source::O1AtNMinus1)?;
    println!("  backward: {back}");
    assert_eq!(back, p);

    let q: Partition = "12^2,11^4,8".parse()?;
    println!("\neleven-case map on ({q}):");
    let record = thm32_forward(&q)?;
    show(&record);

    let back = thm32_backward(&record.output, T32Source::O3AtNPlus2)?;
    println!("  backward: {back}");
    assert_eq!(back, q);
    Ok(())
}
