// Looks for embedded triangles in members built from other rational Taylor
// series. A geometric component keeps the rows delimited by zeros; steeper
// series fill them in.
//
// cargo run --example series_explorer

use embedded_triangles::series::{family_series, rational_series};
use embedded_triangles::verify::explore_general;
use embedded_triangles::{render, FamilySpec, LeadingPolicy};
use num_bigint::BigInt;

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // 2 - 1/(1-X) = (1 - 2X)/(1 - X)
    let degenerate = rational_series(&big(&[1, -2]), &big(&[1, -1]), 4)?;
    println!("2 - 1/(1-X), k = 4:");
    print!("{}", render::exploration_table(&explore_general(&degenerate, 4, 3, 4, LeadingPolicy::Strict)?));

    let spec = FamilySpec::new(3, vec![1, 25])?;
    println!("\nfamily {}, k = 10:", spec.to_json());
    let out = explore_general(&family_series(&spec, 10), 10, 3, 8, LeadingPolicy::Strict)?;
    print!("{}", render::exploration_table(&out));

    // 2 - 1/(1-2X) = (1 - 4X)/(1 - 2X); its degree-4 coefficient is -16, so
    // the strict policy refuses it
    let steep = rational_series(&big(&[1, -4]), &big(&[1, -2]), 4)?;
    if let Err(e) = explore_general(&steep, 4, 2, 2, LeadingPolicy::Strict) {
        println!("\n2 - 1/(1-2X), strict: {e}");
    }
    println!("2 - 1/(1-2X), k = 4, leading term pinned to -1:");
    print!("{}", render::exploration_table(&explore_general(&steep, 4, 2, 2, LeadingPolicy::Convention)?));

    // 2 - 1/(1 - X - bX^2) = (1 - 2X - 2bX^2)/(1 - X - bX^2)
    println!("\nscan of 2 - 1/(1 - X - bX^2), k = 7, 3 x 5, leading term pinned to -1:");
    for b in 0..=3 {
        let series = rational_series(&big(&[1, -2, -2 * b]), &big(&[1, -1, -b]), 7)?;
        let out = explore_general(&series, 7, 3, 5, LeadingPolicy::Convention)?;
        print!("b = {b}: {}", render::profile_line(&out.profile));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
