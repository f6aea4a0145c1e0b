//! Fundamental invariants, the Jacobian and its hyperplane factorization,
//! and the degree identities.

use polarforms::groups::ReflectionGroup;
use polarforms::invariants::{fundamental_invariants, verify_degree_identities};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let w = ReflectionGroup::builtin(name.parse()?)?;
    let f = fundamental_invariants(&w, 12)?;
    println!("{name}: degrees {:?}", f.degrees());
    for (i, g) in f.generators().iter().enumerate() {
        println!("  f{} = {g}", i + 1);
    }
    println!("J = {}", f.jacobian());
    println!("J = ({}) * ({})", f.constant(), f.hyperplane_product());
    for c in verify_degree_identities(&f).checks {
        println!("  [{}] {}: {} vs {}", if c.pass { "ok" } else { "FAIL" }, c.identity, c.lhs, c.rhs);
    }
    Ok(())
}
