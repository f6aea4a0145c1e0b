//! For the rotation group Z4 the pullbacks df_i ∧ df_j cannot produce dx∧dy.

use polarforms::groups::ReflectionGroup;
use polarforms::invariants::pullback_obstruction;
use polarforms::parse::parse_poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ReflectionGroup::builtin("Z4".parse()?)?;
    let gens = ["x^2 + y^2", "x^4 - 6*x^2*y^2 + y^4", "4*x^3*y - 4*x*y^3"]
        .iter()
        .map(|s| parse_poly(s, 2))
        .collect::<Result<Vec<_>, _>>()?;
    let r = pullback_obstruction(&w, &gens, 2)?;
    for wedge in &r.wedges {
        println!("df{:?} = {}   at 0: {}", wedge.indices, wedge.form, wedge.value_at_origin);
    }
    println!("invariant constant 2-forms: {}", r.invariant_constant_forms);
    println!("{}", r.conclusion);
    Ok(())
}
