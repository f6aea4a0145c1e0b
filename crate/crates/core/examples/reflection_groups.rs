//! Builtin and file-defined reflection groups: order, reflections, census.

use polarforms::cli::load_group;
use polarforms::groups::ReflectionGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["S3", "A2", "B2", "B3", "D4", "Z4"] {
        let w = ReflectionGroup::builtin(name.parse()?)?;
        println!(
            "{name:>3}: dim {} order {:>3} reflections {:>2} census {:?}",
            w.dimension(),
            w.order(),
            w.num_reflections(),
            w.census().counts
        );
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/a2_root_basis.json");
    let w = load_group(path)?;
    println!("\n{path}");
    println!("order {}; invariant form {}", w.order(), serde_json::to_string(w.form())?);
    for r in w.reflections() {
        println!("  reflection with hyperplane {} = 0", r.linear_form());
    }
    Ok(())
}
