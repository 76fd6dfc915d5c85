// Per-term multiplication counts of the two schemes and measured times as
// the number of rows grows.
//
// cargo run --release --example cost_comparison

use embedded_triangles::bench::{count_ops, time_compare};
use embedded_triangles::{render, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FamilySpec::new(2, vec![2])?;
    println!("{:>4} {:>6} {:>6} {:>8} {:>12} {:>12}", "r", "G/term", "T/term", "k/(q+1)", "G total", "T total");
    for r in [1, 2, 5, 10, 20, 50] {
        let c = count_ops(&spec, r)?;
        println!(
            "{:>4} {:>6} {:>6} {:>8.2} {:>12} {:>12}",
            r, c.g_mults_per_term, c.t_mults_per_term, c.per_term_ratio, c.g_total_mults, c.t_total_mults
        );
    }
    println!();
    print!("{}", render::cost_table(&time_compare(&spec, 30, 3)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
