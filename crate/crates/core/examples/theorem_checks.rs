// Runs the full clause suite over a handful of families and prints each
// report.
//
// cargo run --example theorem_checks

use embedded_triangles::{render, FamilySpec};
use embedded_triangles::verify::verify_family;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let families = [
        FamilySpec::new(3, vec![1, 25])?,
        FamilySpec::degenerate(),
        FamilySpec::new(4, vec![1, 1, 2])?,
        FamilySpec::new(5, vec![6, 2, 4, 3])?,
    ];
    for spec in &families {
        let report = verify_family(spec, 6)?;
        print!("{}", render::report_table(&report));
        println!();
        if !report.pass {
            return Err(format!("verification failed: {}", report.to_json()).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
