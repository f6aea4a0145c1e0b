//! Basic forms of polar actions and their restriction to the section.

use polarforms::parse::parse_form;
use polarforms::polar::{injectivity_check, is_basic, lift_form, LiftData, LinearAction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for act in [LinearAction::so2(), LinearAction::so3_traceless_symmetric()] {
        println!("{act}");
        let data = LiftData::build(&act, 8)?;
        for (f, g) in data.ambient().iter().zip(data.section_system().generators()) {
            println!("  {f}  restricts to  {g}");
        }
        let m = act.section_dimension();
        let sample = if m == 1 { "x1^3 dx1" } else { "(x1 + 2*x1*x2) dx1 + (3*x2 + x1^2 - 3*x2^2) dx2" };
        let omega = parse_form(sample, m)?;
        let lifted = lift_form(&act, &data, &omega)?;
        println!("  lift of {omega}:\n    {lifted}");
        println!("  basic: {}", is_basic(&act, &lifted)?.basic);

        println!("  p  d  basic  section  kernel");
        for p in 0..=m {
            for row in injectivity_check(&act, p, 4)?.rows {
                println!(
                    "  {}  {}  {:>5}  {:>7}  {:>6}",
                    row.form_degree, row.coefficient_degree, row.basic_dimension,
                    row.section_invariant_dimension, row.kernel_dimension
                );
            }
        }
    }
    Ok(())
}
