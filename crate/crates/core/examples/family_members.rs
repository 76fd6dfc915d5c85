// Builds a family, prints the characteristic polynomials and recursions of a
// few members and writes the first terms of one member as an OEIS b-file.
//
// cargo run --example family_members

use embedded_triangles::{render, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FamilySpec::new(3, vec![1, 25])?;
    println!("family {}", spec.to_json());

    for r in 1..=3 {
        let k = spec.k_of_r(r)?;
        let poly = spec.char_poly(k)?;
        let weights: Vec<String> = poly
            .recurrence_coeffs()
            .iter()
            .enumerate()
            .map(|(m, b)| format!("{b}*G(n-{})", m + 1))
            .collect();
        println!("order {k:>2}: p = {:?}", poly.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("          G(n) = {}", weights.join(" + "));
    }

    let window = spec.generate_sequence(spec.k_of_r(2)?, 20)?;
    print!("{}", render::bfile(&window));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
