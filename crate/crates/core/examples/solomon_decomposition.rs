//! Writes invariant forms in the coframe df_1, ..., df_n.

use polarforms::groups::ReflectionGroup;
use polarforms::invariants::fundamental_invariants;
use polarforms::parse::parse_form;
use polarforms::random;
use polarforms::solomon::decompose;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s2 = ReflectionGroup::builtin("S2".parse()?)?;
    let f = fundamental_invariants(&s2, 4)?;
    println!("S2 generators: {:?}", f.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    for text in ["(x1 - x2) dx1^dx2", "x1 dx1 + x2 dx2", "x1^3 + x2^3"] {
        let d = decompose(&f, &parse_form(text, 2)?)?;
        println!("{text}");
        for e in d.entries() {
            println!("  df{:?}  sign {:+}  coefficient {}", e.indices, e.sign, e.coefficient);
        }
    }

    let b3 = ReflectionGroup::builtin("B3".parse()?)?;
    let f = fundamental_invariants(&b3, 8)?;
    let omega = random::invariant_form(&mut random::rng(1), &b3, 2, 6)?;
    let d = decompose(&f, &omega)?;
    println!("\nrandom invariant 2-form for B3 with {} terms", omega.num_terms());
    for (idx, c) in d.coefficients() {
        println!("  ω_{idx:?} = {c}");
    }
    assert_eq!(d.reconstruct(), omega);
    Ok(())
}
