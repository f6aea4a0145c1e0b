//! Command-line front end. Every subcommand produces a JSON report that
//! echoes its inputs and lists named checks with their outcome.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
//! input (unreadable files, parse errors, dimension mismatches, caps).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cartan::{cartan_d, check_basic_form, check_element, j, EquivariantPool};
use crate::error::{Error, Result};
use crate::groups::{BuiltinFamily, GroupFile, ReflectionGroup};
use crate::invariants::{
    fundamental_invariants, jacobian_factor, minimal_generators, pullback_obstruction,
    verify_degree_identities,
};
use crate::parse::{parse_form, parse_poly};
use crate::polar::{injectivity_check, is_basic, lift_form, ActionFile, LiftData, LinearAction};
use crate::random;
use crate::solomon::decompose;

#[derive(Debug, Parser)]
#[command(name = "polarforms", version, about = "Exact invariant theory and basic forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Print nothing; rely on the exit status and the report file.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Args, Clone)]
pub struct GroupSource {
    /// Builtin family: S<n>, A<n>, B<n>, D<n> or Z4.
    #[arg(long, conflicts_with = "group")]
    pub builtin: Option<String>,
    /// Group JSON file, or a builtin name.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group; report order, reflections, census and degree identities.
    Group {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
    },
    /// Fundamental invariants and the Jacobian factorization.
    Invariants {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
    },
    /// Decompose an invariant form in the coframe of fundamental invariants.
    Decompose {
        #[command(flatten)]
        source: GroupSource,
        /// Form expression, or a file containing one.
        #[arg(long)]
        form: String,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
    },
    /// Lift an invariant form on the section to a basic form.
    Lift {
        /// Action JSON file, or builtin SO2 / SO3-SYM0.
        #[arg(long)]
        action: String,
        /// Form on the section (variables x1..xm).
        #[arg(long)]
        form: Option<String>,
        /// Coefficient degree cap for the injectivity table; also caps the
        /// invariant search.
        #[arg(long, default_value_t = 6)]
        degree_cap: u32,
        /// Also tabulate basic forms against invariant section forms.
        #[arg(long)]
        injectivity: bool,
    },
    /// Check whether the pullbacks df_I can reach the constant invariant forms.
    Counterexample {
        #[command(flatten)]
        source: GroupSource,
        /// Explicit invariants separated by ';' (default: minimal generators).
        #[arg(long)]
        generators: Option<String>,
        /// Form degree (default: the dimension).
        #[arg(long)]
        form_degree: Option<usize>,
        #[arg(long, default_value_t = 8)]
        degree_cap: u32,
    },
    /// Apply the Cartan differential and sweep d² = 0 on random equivariant
    /// elements.
    Cartan {
        #[arg(long)]
        action: String,
        /// Ambient form to push through j and the Cartan differential.
        #[arg(long)]
        form: Option<String>,
        /// Largest Cartan degree in the sweep.
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Outcome of a subcommand before it is written out.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
}

fn check(name: &str, pass: bool, witness: Option<String>) -> Value {
    match witness {
        Some(w) if !pass => json!({ "check": name, "pass": pass, "witness": w }),
        _ => json!({ "check": name, "pass": pass }),
    }
}

fn finish(command: &str, inputs: Value, result: Value, checks: Vec<Value>) -> Outcome {
    let pass = checks.iter().all(|c| c["pass"] == json!(true));
    Outcome {
        report: json!({
            "command": command,
            "inputs": inputs,
            "result": result,
            "checks": checks,
            "pass": pass,
        }),
        pass,
    }
}

fn read_text_or_literal(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::Input(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn load_group(arg: &str) -> Result<ReflectionGroup> {
    let p = Path::new(arg);
    if p.is_file() {
        let text = std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{arg}: {e}")))?;
        return GroupFile::from_json(&text)?.build();
    }
    match arg.parse::<BuiltinFamily>() {
        Ok(f) => ReflectionGroup::builtin(f),
        Err(_) => Err(Error::Input(format!("{arg:?} is neither a file nor a builtin group"))),
    }
}

fn resolve_group(src: &GroupSource) -> Result<(ReflectionGroup, Value)> {
    match (&src.builtin, &src.group) {
        (Some(b), None) => {
            let fam: BuiltinFamily = b
                .parse()
                .map_err(|_| Error::UnsupportedFamily(b.clone()))?;
            Ok((ReflectionGroup::builtin(fam)?, json!({ "builtin": b })))
        }
        (None, Some(g)) => Ok((load_group(g)?, json!({ "group": g }))),
        _ => Err(Error::Input("exactly one of --builtin or --group is required".into())),
    }
}

pub fn load_action(arg: &str) -> Result<LinearAction> {
    let p = Path::new(arg);
    if p.is_file() {
        let text = std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{arg}: {e}")))?;
        let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
        let resolve = move |name: &str| {
            let candidate = base.join(name);
            load_group(candidate.to_str().unwrap_or(name)).or_else(|_| load_group(name))
        };
        return ActionFile::from_json(&text)?.build(&resolve);
    }
    LinearAction::builtin(arg)
}

fn run_group(src: &GroupSource, cap: u32) -> Result<Outcome> {
    let (w, mut inputs) = resolve_group(src)?;
    inputs["degree_cap"] = json!(cap);
    let summary = serde_json::to_value(w.summary()).expect("serializable");
    let mut checks = Vec::new();
    let mut result = json!({
        "group": summary,
        "order": w.order(),
        "num_reflections": w.num_reflections(),
        "census": w.census().counts,
    });
    match fundamental_invariants(&w, cap) {
        Ok(f) => {
            let ids = verify_degree_identities(&f);
            for c in &ids.checks {
                checks.push(check(&c.identity, c.pass, Some(format!("{} != {}", c.lhs, c.rhs))));
            }
            result["degrees"] = json!(f.degrees());
            result["identities"] = serde_json::to_value(&ids).expect("serializable");
        }
        Err(Error::NotReflectionGroup(msg)) => {
            result["reflection_group"] = json!(false);
            result["note"] = json!(msg);
        }
        Err(e) => return Err(e),
    }
    Ok(finish("group", inputs, result, checks))
}

fn run_invariants(src: &GroupSource, cap: u32) -> Result<Outcome> {
    let (w, mut inputs) = resolve_group(src)?;
    inputs["degree_cap"] = json!(cap);
    let f = fundamental_invariants(&w, cap)?;
    let mut checks = Vec::new();
    let (c, ls) = jacobian_factor(&w, f.generators())?;
    let mut prod = crate::poly::MultiPoly::constant(w.dimension(), c.clone());
    for l in &ls {
        prod = &prod * l;
    }
    checks.push(check(
        "jacobian equals c times the hyperplane product",
        &prod == f.jacobian(),
        Some(format!("{} != {}", prod, f.jacobian())),
    ));
    let mut bad = None;
    for (i, s) in w.elements().iter().enumerate() {
        let js = f.jacobian().compose_linear(s)?;
        let expect = f.jacobian().scale(&w.det(i).recip());
        if js != expect {
            bad = Some(format!("element {i}: {js} != {expect}"));
            break;
        }
    }
    checks.push(check("jacobian is anti-invariant", bad.is_none(), bad));
    let ids = verify_degree_identities(&f);
    for c in &ids.checks {
        checks.push(check(&c.identity, c.pass, Some(format!("{} != {}", c.lhs, c.rhs))));
    }
    let result = serde_json::to_value(f.summary()).expect("serializable");
    Ok(finish("invariants", inputs, result, checks))
}

fn run_decompose(src: &GroupSource, form: &str, cap: u32) -> Result<Outcome> {
    let (w, mut inputs) = resolve_group(src)?;
    let text = read_text_or_literal(form)?;
    inputs["form"] = json!(text);
    inputs["degree_cap"] = json!(cap);
    let omega = parse_form(&text, w.dimension())?;
    let f = fundamental_invariants(&w, cap)?;
    let d = decompose(&f, &omega)?;
    let rebuilt = d.reconstruct();
    let mut checks = vec![check(
        "reconstruction equals input",
        rebuilt == omega,
        Some(rebuilt.to_string()),
    )];
    let mut bad = None;
    for c in d.coefficients().values() {
        if !w.is_invariant(c)? {
            bad = Some(c.to_string());
        }
    }
    checks.push(check("coefficients are invariant", bad.is_none(), bad));
    let result = json!({
        "generators": f.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "degrees": f.degrees(),
        "jacobian": f.jacobian().to_string(),
        "coefficients": d.entries(),
    });
    Ok(finish("decompose", inputs, result, checks))
}

fn run_lift(action: &str, form: Option<&str>, cap: u32, injectivity: bool) -> Result<Outcome> {
    let act = load_action(action)?;
    let mut inputs = json!({ "action": action, "degree_cap": cap, "injectivity": injectivity });
    let mut result = json!({ "action": act.to_string() });
    let mut checks = Vec::new();
    if let Some(form) = form {
        let text = read_text_or_literal(form)?;
        inputs["form"] = json!(text);
        let omega = parse_form(&text, act.section_dimension())?;
        let data = LiftData::build(&act, cap.max(crate::polar::DEFAULT_POLY_DEGREE_CAP))?;
        let lifted = lift_form(&act, &data, &omega)?;
        let basic = is_basic(&act, &lifted)?;
        let back = act.restrict(&lifted)?;
        checks.push(check("lift is basic", basic.basic, Some(format!("{:?}", basic.residuals))));
        checks.push(check("lift restricts to the input", back == omega, Some(back.to_string())));
        result["ambient_generators"] = json!(data.ambient().iter().map(ToString::to_string).collect::<Vec<_>>());
        result["section_generators"] = json!(data
            .section_system()
            .generators()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>());
        result["lifted"] = json!(lifted.to_string());
        result["residuals"] = serde_json::to_value(&basic.residuals).expect("serializable");
    } else if !injectivity {
        return Err(Error::Input("lift needs --form or --injectivity".into()));
    }
    if injectivity {
        let mut tables = Vec::new();
        for p in 0..=act.dimension() {
            let r = injectivity_check(&act, p, cap)?;
            for row in &r.rows {
                checks.push(check(
                    &format!("restriction on {}-forms of coefficient degree {}", row.form_degree, row.coefficient_degree),
                    row.pass,
                    Some(format!(
                        "basic {} / section {} / kernel {}",
                        row.basic_dimension, row.section_invariant_dimension, row.kernel_dimension
                    )),
                ));
            }
            tables.extend(r.rows);
        }
        result["injectivity"] = serde_json::to_value(&tables).expect("serializable");
    }
    Ok(finish("lift", inputs, result, checks))
}

fn run_counterexample(src: &GroupSource, gens: Option<&str>, p: Option<usize>, cap: u32) -> Result<Outcome> {
    let (w, mut inputs) = resolve_group(src)?;
    let n = w.dimension();
    let generators = match gens {
        Some(text) => {
            inputs["generators"] = json!(text);
            text.split(';')
                .map(|s| parse_poly(s.trim(), n).map_err(Error::from))
                .collect::<Result<Vec<_>>>()?
        }
        None => minimal_generators(&w, cap)?,
    };
    let p = p.unwrap_or(n);
    inputs["form_degree"] = json!(p);
    inputs["degree_cap"] = json!(cap);
    let mut checks = Vec::new();
    let mut bad = None;
    for g in &generators {
        if !w.is_invariant(g)? {
            bad = Some(g.to_string());
        }
    }
    checks.push(check("generators are invariant", bad.is_none(), bad));
    let report = pullback_obstruction(&w, &generators, p)?;
    let result = serde_json::to_value(&report).expect("serializable");
    Ok(finish("counterexample", inputs, result, checks))
}

fn run_cartan(action: &str, form: Option<&str>, cap: u32, samples: usize, seed: u64) -> Result<Outcome> {
    let act = load_action(action)?;
    let r = act.lie_generators().len();
    let mut inputs = json!({ "action": action, "degree_cap": cap, "samples": samples, "seed": seed });
    let mut result = json!({ "action": act.to_string() });
    let mut checks = Vec::new();
    if let Some(form) = form {
        let text = read_text_or_literal(form)?;
        inputs["form"] = json!(text);
        let omega = parse_form(&text, act.dimension())?;
        let dj = cartan_d(&act, &j(r, &omega))?;
        let c = check_basic_form(&act, &omega)?;
        result["cartan_d_of_j"] = json!(dj.to_string());
        result["basic"] = json!(c.basic);
        checks.push(check("ev0 of j is the identity", c.ev0_j_identity, None));
        if c.basic {
            checks.push(check("cartan d commutes with j", c.d_commutes_with_j, Some(dj.to_string())));
            checks.push(check("d of a basic form is basic", c.d_is_basic, None));
        }
    }
    let pool = EquivariantPool::new(&act, 3)?;
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    let mut tested = 0usize;
    for q in 0..=cap as usize {
        for _ in 0..samples {
            let alpha = random::equivariant_element(&mut rng, &act, &pool, q)?;
            let c = check_element(&act, &alpha)?;
            tested += 1;
            if !(c.equivariant && c.d_squared_zero) {
                failures.push(serde_json::to_value(&c).expect("serializable"));
            }
        }
    }
    checks.push(check(
        "d squared vanishes on equivariant elements",
        failures.is_empty(),
        Some(format!("{} failures", failures.len())),
    ));
    result["sweep"] = json!({ "tested": tested, "failures": failures });
    Ok(finish("cartan", inputs, result, checks))
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Group { source, degree_cap } => run_group(source, *degree_cap),
        Command::Invariants { source, degree_cap } => run_invariants(source, *degree_cap),
        Command::Decompose { source, form, degree_cap } => run_decompose(source, form, *degree_cap),
        Command::Lift { action, form, degree_cap, injectivity } => {
            run_lift(action, form.as_deref(), *degree_cap, *injectivity)
        }
        Command::Counterexample { source, generators, form_degree, degree_cap } => {
            run_counterexample(source, generators.as_deref(), *form_degree, *degree_cap)
        }
        Command::Cartan { action, form, degree_cap, samples, seed } => {
            run_cartan(action, form.as_deref(), *degree_cap, *samples, *seed)
        }
    }
}

/// Verification errors found while computing count as failures (status 1);
/// everything else is bad input (status 2).
fn error_status(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) | Error::FactorizationFailed(_) => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> u8 {
    match execute(&cli.command) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.report).expect("serializable");
            match &cli.report {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text + "\n") {
                        if !cli.quiet {
                            eprintln!("error: cannot write {}: {e}", path.display());
                        }
                        return 2;
                    }
                    if !cli.quiet {
                        println!("{}: {}", out.report["command"].as_str().unwrap_or(""), if out.pass { "pass" } else { "FAIL" });
                    }
                }
                None if !cli.quiet => {
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
                None => {}
            }
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
            }
            error_status(&e)
        }
    }
}

pub fn main_from_env() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(&cli))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("polarforms").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn group_b2() {
        let cli = parse(&["group", "--builtin", "B2"]);
        let out = execute(&cli.command).unwrap();
        assert!(out.pass);
        assert_eq!(out.report["result"]["order"], json!(8));
        assert_eq!(out.report["result"]["num_reflections"], json!(4));
        assert_eq!(out.report["result"]["census"], json!([1, 4, 3]));
    }

    #[test]
    fn decompose_s2() {
        let cli = parse(&["decompose", "--group", "S2", "--form", "(x1−x2) dx1^dx2"]);
        let out = execute(&cli.command).unwrap();
        assert!(out.pass);
        assert_eq!(out.report["result"]["coefficients"][0]["coefficient"], json!("-1/2"));
        assert_eq!(out.report["result"]["coefficients"][0]["indices"], json!([1, 2]));
    }

    #[test]
    fn counterexample_z4() {
        let cli = parse(&["counterexample", "--builtin", "Z4"]);
        let out = execute(&cli.command).unwrap();
        assert!(out.pass);
        assert_eq!(out.report["result"]["conclusion"], json!("volume form not in pullback image"));
    }

    #[test]
    fn statuses() {
        assert_eq!(run(&parse(&["group", "--builtin", "Q7", "--quiet"])), 2);
        assert_eq!(run(&parse(&["decompose", "--group", "S2", "--form", "x1 +", "--quiet"])), 2);
        assert_eq!(run(&parse(&["decompose", "--group", "S2", "--form", "dx1", "--quiet"])), 2);
    }
}
