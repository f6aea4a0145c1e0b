//! The Cartan differential on equivariant polynomial maps g → Ω(V).

use polarforms::cartan::{cartan_d, check_element, ev0, j, EquivariantPool};
use polarforms::parse::parse_form;
use polarforms::polar::LinearAction;
use polarforms::random;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let act = LinearAction::so2();
    let pool = EquivariantPool::new(&act, 2)?;
    for g in &pool.generators {
        let dg = cartan_d(&act, g)?;
        println!("α = {g}\n  d_g α = {dg}\n  d_g² α = {}", cartan_d(&act, &dg)?);
    }

    let omega = parse_form("x1 dx1 + x2 dx2", 2)?;
    let jw = j(1, &omega);
    println!("\nj ω = {jw}, ev0(j ω) = {}", ev0(&jw));
    println!("d_g j ω = {}", cartan_d(&act, &jw)?);

    let so3 = LinearAction::so3_traceless_symmetric();
    let pool = EquivariantPool::new(&so3, 3)?;
    let mut rng = random::rng(0);
    for q in 0..=4 {
        let a = random::equivariant_element(&mut rng, &so3, &pool, q)?;
        let c = check_element(&so3, &a)?;
        println!("so(3) degree {q}: {} components, equivariant {}, d² = 0 {}", a.components().len(), c.equivariant, c.d_squared_zero);
    }
    Ok(())
}
