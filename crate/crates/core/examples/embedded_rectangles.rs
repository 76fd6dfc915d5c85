// Lays out the rectangles of the first members of two families, once from
// the sequence and once with the row-to-row recursion, and shows that the
// triangles of different members agree.
//
// cargo run --example embedded_rectangles

use embedded_triangles::triangle::{
    compatible, extract_rectangle, fill_rectangle_fast, last_nonzero_profile, t_recursion_coeffs,
};
use embedded_triangles::{render, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [FamilySpec::new(3, vec![1, 25])?, FamilySpec::degenerate()] {
        let d: Vec<String> = t_recursion_coeffs(&spec).as_slice().iter().map(ToString::to_string).collect();
        println!("family {}: row recursion weights d = [{}]", spec.to_json(), d.join(", "));

        let mut previous = None;
        for r in 1..=3 {
            let k = spec.k_of_r(r)?;
            let c = spec.c_of_r(r)?;
            let window = spec.generate_sequence(k, k + r * c)?;
            let rect = extract_rectangle(&window, &spec, r)?;
            assert_eq!(rect, fill_rectangle_fast(&spec, r)?);

            println!("\norder {k}, {r} x {c}:");
            print!("{}", render::rectangle_table(&rect));
            print!("{}", render::profile_line(&last_nonzero_profile(&rect)));
            if let Some(prev) = &previous {
                println!("compatible with order {}: {}", k - spec.q(), compatible(prev, &rect)?);
            }
            previous = Some(rect);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
