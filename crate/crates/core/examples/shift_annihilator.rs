// Multiplying a characteristic polynomial by `X - 1` gives another
// polynomial that annihilates the same sequence. For these families the
// product has only `q + 2` nonzero coefficients, which become the row
// recursion weights.
//
// cargo run --example shift_annihilator

use embedded_triangles::triangle::t_recursion_coeffs;
use embedded_triangles::verify::check_satisfies_recurrence;
use embedded_triangles::FamilySpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = FamilySpec::new(4, vec![2, 1, 3])?;
    let k = spec.k_of_r(3)?;
    let poly = spec.char_poly(k)?;
    let shifted = poly.mul_x_minus_1();
    let window = spec.generate_sequence(k, 120)?;

    let show = |c: &[num_bigint::BigInt]| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("p_{k}         = [{}]", show(poly.coeffs()));
    println!("(X - 1) p_{k} = [{}]", show(&shifted));
    println!("window satisfies p_{k}:         {}", check_satisfies_recurrence(&window, poly.coeffs())?);
    println!("window satisfies (X - 1) p_{k}: {}", check_satisfies_recurrence(&window, &shifted)?);

    let mut perturbed = poly.coeffs().to_vec();
    perturbed[1] += 1;
    println!("perturbed p_{k} rejected:       {}", !check_satisfies_recurrence(&window, &perturbed)?);

    let q = spec.q();
    let low: Vec<_> = (0..=q).map(|m| shifted[q - m].clone()).collect();
    println!("degrees q..0 of the product:   [{}]", show(&low));
    println!("row recursion weights:         [{}]", show(t_recursion_coeffs(&spec).as_slice()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
