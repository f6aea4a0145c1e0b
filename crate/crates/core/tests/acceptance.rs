//! Acceptance suite. Each test prints one PASS/FAIL line and asserts.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

use polarforms::cartan::{cartan_d, check_element, ev0, j, EquivariantPool};
use polarforms::groups::ReflectionGroup;
use polarforms::invariants::{
    anti_invariant_divide, fundamental_invariants, is_form_invariant, jacobian_factor,
    pullback_obstruction, verify_degree_identities, FundamentalSystem,
};
use polarforms::parse::parse_poly;
use polarforms::polar::{injectivity_check, is_basic, lift_form, LiftData, LinearAction};
use polarforms::random::{self, BasicFormPool};
use polarforms::solomon::decompose;
use polarforms::{MultiPoly, Rational};
use rand::Rng;

const GROUPS: [&str; 6] = ["S2", "S3", "S4", "B2", "B3", "D4"];

fn systems() -> Vec<FundamentalSystem> {
    GROUPS
        .iter()
        .map(|name| {
            let w = ReflectionGroup::builtin(name.parse().unwrap()).unwrap().with_name(*name);
            fundamental_invariants(&w, 12).unwrap()
        })
        .collect()
}

fn actions() -> Vec<LinearAction> {
    vec![LinearAction::so2(), LinearAction::so3_traceless_symmetric()]
}

fn verdict(n: u32, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {n}: PASS  {what}");
    } else {
        println!("criterion {n}: FAIL  {what}");
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

#[test]
fn criterion_1_degree_identities() {
    let mut failures = Vec::new();
    for f in systems() {
        let r = verify_degree_identities(&f);
        for c in r.checks.iter().filter(|c| !c.pass) {
            failures.push(format!("{}: {} ({} vs {})", f.group().name().unwrap_or("?"), c.identity, c.lhs, c.rhs));
        }
    }
    verdict(1, "degree product, degree sum and census polynomial", &failures);
}

#[test]
fn criterion_2_jacobian_anti_invariant() {
    let mut failures = Vec::new();
    for f in systems() {
        let w = f.group();
        for (i, s) in w.elements().iter().enumerate() {
            let lhs = f.jacobian().compose_linear(s).unwrap();
            let rhs = f.jacobian().scale(&w.det(i).recip());
            if lhs != rhs {
                failures.push(format!("{} element {i}", w.name().unwrap_or("?")));
            }
        }
    }
    verdict(2, "J(σx) = det(σ⁻¹) J(x) for every element", &failures);
}

#[test]
fn criterion_3_jacobian_factorization() {
    let mut failures = Vec::new();
    for f in systems() {
        match jacobian_factor(f.group(), f.generators()) {
            Ok((c, ls)) => {
                let mut prod = MultiPoly::constant(f.rank(), c);
                for l in &ls {
                    prod = &prod * l;
                }
                if &prod != f.jacobian() || ls.len() != f.group().num_reflections() {
                    failures.push(format!("{}: product mismatch", f.group().name().unwrap_or("?")));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", f.group().name().unwrap_or("?"))),
        }
    }
    let s2 = ReflectionGroup::builtin("S2".parse().unwrap()).unwrap();
    let gens = vec![parse_poly("x1 + x2", 2).unwrap(), parse_poly("x1^2 + x2^2", 2).unwrap()];
    let (c, _) = jacobian_factor(&s2, &gens).unwrap();
    if c != Rational::from(-2) {
        failures.push(format!("S2 constant {c}, expected -2"));
    }
    verdict(3, "J = c·ℓ_1⋯ℓ_N with constant residue; S2 gives c = -2", &failures);
}

#[test]
fn criterion_4_anti_invariant_division() {
    let mut failures = Vec::new();
    let mut rng = random::rng(4);
    for f in systems() {
        for k in 0..50 {
            let h = random::invariant_poly(&mut rng, f.group(), 4).unwrap();
            let g = f.jacobian() * &h;
            match anti_invariant_divide(&f, &g) {
                Ok(q) if q == h && f.group().is_invariant(&q).unwrap() => {}
                Ok(q) => failures.push(format!("{} sample {k}: quotient {q}", f.group().name().unwrap_or("?"))),
                Err(e) => failures.push(format!("{} sample {k}: {e}", f.group().name().unwrap_or("?"))),
            }
        }
    }
    verdict(4, "50 anti-invariants per group divide exactly by J", &failures);
}

#[test]
fn criterion_5_solomon_round_trip() {
    let mut failures = Vec::new();
    let mut rng = random::rng(5);
    for f in systems() {
        let n = f.rank();
        let (mut nonzero, mut draws) = (0, 0);
        // zero draws occur when no invariant p-form of that degree exists
        while nonzero < 50 && draws < 2000 {
            let p = draws % (n + 1);
            draws += 1;
            let deg = rng.gen_range(0..=6);
            let omega = random::invariant_form(&mut rng, f.group(), p, deg).unwrap();
            if omega.is_zero() {
                continue;
            }
            nonzero += 1;
            match decompose(&f, &omega) {
                Ok(d) => {
                    if d.reconstruct() != omega {
                        failures.push(format!("{} draw {draws}: reconstruction differs", f.group().name().unwrap_or("?")));
                    }
                    for c in d.coefficients().values() {
                        if !f.group().is_invariant(c).unwrap() {
                            failures.push(format!("{} draw {draws}: coefficient {c} not invariant", f.group().name().unwrap_or("?")));
                        }
                    }
                }
                Err(e) => failures.push(format!("{} draw {draws}: {e}", f.group().name().unwrap_or("?"))),
            }
        }
        println!("    {}: {nonzero} nonzero invariant forms in {draws} draws", f.group().name().unwrap_or("?"));
        if nonzero < 50 {
            failures.push(format!("{}: only {nonzero} nonzero samples", f.group().name().unwrap_or("?")));
        }
    }
    verdict(5, "reconstruct(decompose(ω)) = ω on 50 nonzero invariant forms per group", &failures);
}

#[test]
fn criterion_6_restriction_isomorphism() {
    let mut failures = Vec::new();
    let mut rng = random::rng(6);
    for act in actions() {
        let name = act.name().unwrap_or("action").to_string();
        let data = LiftData::build(&act, 8).unwrap();
        let m = act.section_dimension();
        let (mut nonzero, mut draws) = (0, 0);
        while nonzero < 20 && draws < 500 {
            let p = draws % (m + 1);
            draws += 1;
            let deg = rng.gen_range(0..=6);
            let omega = random::invariant_form(&mut rng, act.weyl(), p, deg).unwrap();
            if omega.is_zero() {
                continue;
            }
            nonzero += 1;
            match lift_form(&act, &data, &omega) {
                Ok(lifted) => {
                    if !is_basic(&act, &lifted).unwrap().basic {
                        failures.push(format!("{name} draw {draws}: lift not basic"));
                    }
                    if act.restrict(&lifted).unwrap() != omega {
                        failures.push(format!("{name} draw {draws}: restriction differs"));
                    }
                }
                Err(e) => failures.push(format!("{name} draw {draws}: {e}")),
            }
        }
        println!("    {name}: lifted {nonzero} nonzero section forms in {draws} draws");
        if nonzero < 20 {
            failures.push(format!("{name}: only {nonzero} nonzero samples"));
        }
        for p in 0..=act.dimension() {
            let report = injectivity_check(&act, p, 6).unwrap();
            for row in report.rows.iter().filter(|r| !r.pass) {
                failures.push(format!("{name}: {row:?}"));
            }
        }
    }
    verdict(6, "lifts are basic and restrict back; restriction injective with matching dimensions", &failures);
}

#[test]
fn criterion_7_z4_obstruction() {
    let w = ReflectionGroup::builtin("Z4".parse().unwrap()).unwrap();
    let gens: Vec<MultiPoly> = ["x^2 + y^2", "x^4 - 6*x^2*y^2 + y^4", "4*x^3*y - 4*x*y^3"]
        .iter()
        .map(|s| parse_poly(s, 2).unwrap())
        .collect();
    let mut failures = Vec::new();
    for g in &gens {
        if !w.is_invariant(g).unwrap() {
            failures.push(format!("{g} is not invariant"));
        }
    }
    let r = pullback_obstruction(&w, &gens, 2).unwrap();
    if r.wedges.len() != 3 || !r.wedges.iter().all(|x| x.vanishes_at_origin) {
        failures.push("some df_i∧df_j does not vanish at the origin".into());
    }
    if !r.obstruction_certified || r.conclusion != "volume form not in pullback image" {
        failures.push(format!("obstruction not certified: {}", r.conclusion));
    }
    verdict(7, "Z4: every df_i∧df_j vanishes at 0, so dx∧dy is not reached", &failures);
}

#[test]
fn criterion_8_d_preserves_basic() {
    let mut failures = Vec::new();
    let mut rng = random::rng(8);
    for act in actions() {
        let name = act.name().unwrap_or("action").to_string();
        let pool = BasicFormPool::new(&act, act.dimension(), 4).unwrap();
        for k in 0..50 {
            let omega = pool.sample(&mut rng);
            if !is_basic(&act, &omega).unwrap().basic {
                failures.push(format!("{name} sample {k}: sample not basic"));
            }
            if !is_basic(&act, &omega.exterior_d()).unwrap().basic {
                failures.push(format!("{name} sample {k}: d of {omega} not basic"));
            }
        }
    }
    verdict(8, "d maps 50 random basic forms per action to basic forms", &failures);
}

#[test]
fn criterion_9_cartan_model() {
    let mut failures = Vec::new();
    let mut rng = random::rng(9);
    for act in actions() {
        let name = act.name().unwrap_or("action").to_string();
        let r = act.lie_generators().len();
        let pool = EquivariantPool::new(&act, 3).unwrap();
        for k in 0..25 {
            let q = k % 5;
            let alpha = random::equivariant_element(&mut rng, &act, &pool, q).unwrap();
            if alpha.is_zero() {
                failures.push(format!("{name} sample {k}: zero element in degree {q}"));
            }
            let c = check_element(&act, &alpha).unwrap();
            if !c.equivariant || !c.d_squared_zero {
                failures.push(format!("{name} sample {k}: {c:?}"));
            }
        }
        let basic = BasicFormPool::new(&act, act.dimension(), 4).unwrap();
        for k in 0..25 {
            let omega = basic.sample(&mut rng);
            let jw = j(r, &omega);
            if ev0(&jw) != omega {
                failures.push(format!("{name} sample {k}: ev0(j ω) ≠ ω"));
            }
            if cartan_d(&act, &jw).unwrap() != j(r, &omega.exterior_d()) {
                failures.push(format!("{name} sample {k}: d_g j ω ≠ j dω"));
            }
        }
    }
    verdict(9, "d_g² = 0 on equivariant elements; ev0∘j = id; d_g∘j = j∘d on basic forms", &failures);
}

#[test]
fn restricted_generators_are_section_invariant() {
    for act in actions() {
        let data = LiftData::build(&act, 8).unwrap();
        for f in data.section_system().generators() {
            let form = polarforms::PolyForm::function(f.clone());
            assert!(is_form_invariant(act.weyl(), &form).unwrap());
        }
    }
}
