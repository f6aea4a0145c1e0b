//! Invariant theory of finite reflection groups: Reynolds averaging,
//! fundamental invariants, the Jacobian and its factorization into
//! hyperplane functionals, anti-invariants, and the degree identities.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forms::{index_tuples, PolyForm};
use crate::groups::ReflectionGroup;
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;

/// `(1/|W|) Σ f∘σ`.
pub fn reynolds(w: &ReflectionGroup, f: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() != w.dimension() {
        return Err(Error::VariableMismatch(w.dimension(), f.nvars()));
    }
    let mut acc = MultiPoly::zero(f.nvars());
    for s in w.elements() {
        acc = &acc + &f.compose_linear(s)?;
    }
    Ok(acc.scale(&Rational::new(1, w.order() as i64)))
}

/// `(1/|W|) Σ σ*ω`, the averaging projection on forms.
pub fn reynolds_form(w: &ReflectionGroup, omega: &PolyForm) -> Result<PolyForm> {
    let mut acc = PolyForm::zero(omega.nvars(), omega.degree());
    for s in w.elements() {
        acc = acc.checked_add(&omega.pullback_linear(s)?)?;
    }
    Ok(acc.scale(&Rational::new(1, w.order() as i64)))
}

/// Whether `σ*ω = ω` for every group element.
pub fn is_form_invariant(w: &ReflectionGroup, omega: &PolyForm) -> Result<bool> {
    if omega.nvars() != w.dimension() {
        return Err(Error::VariableMismatch(w.dimension(), omega.nvars()));
    }
    for s in w.elements() {
        if &omega.pullback_linear(s)? != omega {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn to_sparse(f: &MultiPoly) -> SparseVec<Monomial> {
    f.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Exponent vectors `β` with `Σ β_i degrees[i] = target`.
pub fn weighted_exponents(degrees: &[u32], target: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, degrees: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[i];
        let top = left.checked_div(d).unwrap_or(0);
        for e in 0..=top {
            cur.push(e);
            rec(i + 1, left - e * d, degrees, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, target, degrees, &mut Vec::new(), &mut out);
    out
}

/// `Π gens[i]^β_i` for every `β` of weighted degree `target`.
pub(crate) fn generator_products(gens: &[MultiPoly], degrees: &[u32], target: u32, nvars: usize) -> Vec<(Vec<u32>, MultiPoly)> {
    weighted_exponents(degrees, target)
        .into_iter()
        .map(|beta| {
            let mut p = MultiPoly::one(nvars);
            for (g, &e) in gens.iter().zip(&beta) {
                if e > 0 {
                    p = &p * &g.pow(e);
                }
            }
            (beta, p)
        })
        .collect()
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    // memo over column subsets for the bottom rows
    let mut memo: BTreeMap<u64, MultiPoly> = BTreeMap::new();
    fn rec(row: usize, used: u64, m: &[Vec<MultiPoly>], nvars: usize, memo: &mut BTreeMap<u64, MultiPoly>) -> MultiPoly {
        let n = m.len();
        if row == n {
            return MultiPoly::one(nvars);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero(nvars);
        let mut sign_pos = true;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            let e = &m[row][c];
            if !e.is_zero() {
                let minor = rec(row + 1, used | (1 << c), m, nvars, memo);
                let t = e * &minor;
                acc = if sign_pos { &acc + &t } else { &acc - &t };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(n < 64 && m.iter().all(|r| r.len() == n));
    rec(0, 0, m, nvars, &mut memo)
}

/// `det(∂f_i/∂x_j)`.
pub fn jacobian(gens: &[MultiPoly]) -> Result<MultiPoly> {
    let n = gens.first().map(MultiPoly::nvars).unwrap_or(0);
    if gens.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: gens.len(),
        });
    }
    let m: Vec<Vec<MultiPoly>> = gens.iter().map(|f| (0..n).map(|j| f.partial(j)).collect()).collect();
    Ok(poly_det(&m, n))
}

/// Factors `J = c · ℓ_1 ⋯ ℓ_N` over the reflections of `w`.
///
/// Divides `J` successively by every hyperplane functional; the residue must
/// be a nonzero constant.
pub fn jacobian_factor(w: &ReflectionGroup, gens: &[MultiPoly]) -> Result<(Rational, Vec<MultiPoly>)> {
    let j = jacobian(gens)?;
    if j.is_zero() {
        return Err(Error::FactorizationFailed("Jacobian is zero; generators are dependent".into()));
    }
    let mut rest = j;
    let mut factors = Vec::new();
    for r in w.reflections() {
        let l = r.linear_form();
        rest = rest.div_exact(&l).map_err(|_| {
            Error::FactorizationFailed(format!("Jacobian is not divisible by hyperplane functional {l}"))
        })?;
        factors.push(l);
    }
    if !rest.is_constant() {
        return Err(Error::FactorizationFailed(format!(
            "residue {rest} after dividing by all {} hyperplane functionals is not constant",
            factors.len()
        )));
    }
    Ok((rest.constant_term(), factors))
}

/// Homogeneous generators `f_1..f_n` of the invariant algebra of a reflection
/// group together with their Jacobian data.
#[derive(Debug, Clone)]
pub struct FundamentalSystem {
    group: ReflectionGroup,
    generators: Vec<MultiPoly>,
    degrees: Vec<u32>,
    jacobian: MultiPoly,
    constant: Rational,
    hyperplane_product: MultiPoly,
}

impl FundamentalSystem {
    /// Validates explicit generators: invariant, homogeneous, `n` of them,
    /// sorted by degree, and with `J = c·ℓ_1⋯ℓ_N`.
    pub fn from_generators(w: &ReflectionGroup, generators: Vec<MultiPoly>) -> Result<Self> {
        let n = w.dimension();
        if generators.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: generators.len(),
            });
        }
        for f in &generators {
            if f.nvars() != n {
                return Err(Error::VariableMismatch(n, f.nvars()));
            }
            if f.is_zero() || !f.is_homogeneous() {
                return Err(Error::Input(format!("generator {f} is not a nonzero homogeneous polynomial")));
            }
            if !w.is_invariant(f)? {
                return Err(Error::NotInvariant);
            }
        }
        let degrees: Vec<u32> = generators.iter().map(|f| f.degree() as u32).collect();
        if degrees.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::Input("generators must be listed by ascending degree".into()));
        }
        let (constant, factors) = jacobian_factor(w, &generators)?;
        let jacobian = jacobian(&generators)?;
        let hyperplane_product = factors.iter().fold(MultiPoly::one(n), |acc, l| &acc * l);
        Ok(FundamentalSystem {
            group: w.clone(),
            generators,
            degrees,
            jacobian,
            constant,
            hyperplane_product,
        })
    }

    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn jacobian(&self) -> &MultiPoly {
        &self.jacobian
    }

    /// The constant `c` in `J = c·ℓ_1⋯ℓ_N`.
    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn hyperplane_product(&self) -> &MultiPoly {
        &self.hyperplane_product
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// The 1-forms `df_1, ..., df_n`.
    pub fn differentials(&self) -> Vec<PolyForm> {
        self.generators
            .iter()
            .map(|f| PolyForm::function(f.clone()).exterior_d())
            .collect()
    }

    pub fn summary(&self) -> FundamentalSummary {
        FundamentalSummary {
            group: self.group.name().map(str::to_string),
            generators: self.generators.iter().map(ToString::to_string).collect(),
            degrees: self.degrees.clone(),
            jacobian: self.jacobian.to_string(),
            constant: self.constant.clone(),
            hyperplane_functionals: self
                .group
                .reflections()
                .iter()
                .map(|r| r.linear_form().to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FundamentalSummary {
    pub group: Option<String>,
    pub generators: Vec<String>,
    pub degrees: Vec<u32>,
    pub jacobian: String,
    pub constant: Rational,
    pub hyperplane_functionals: Vec<String>,
}

/// Canonical basis candidates of the degree-`d` invariants: Reynolds images
/// of the degree-`d` monomials in ascending graded-lex order, made primitive.
fn invariant_candidates(w: &ReflectionGroup, d: u32) -> Result<Vec<MultiPoly>> {
    let n = w.dimension();
    let mut seen: Echelon<Monomial> = Echelon::new();
    let mut out = Vec::new();
    for (k, m) in Monomial::all_of_degree(n, d).into_iter().enumerate() {
        let r = reynolds(w, &MultiPoly::term(m, Rational::one()))?;
        if r.is_zero() {
            continue;
        }
        let r = r.primitive();
        if seen.insert(to_sparse(&r), k).is_ok() {
            out.push(r);
        }
    }
    Ok(out)
}

/// Basis of the homogeneous degree-`d` invariant polynomials.
pub fn invariant_basis(w: &ReflectionGroup, d: u32) -> Result<Vec<MultiPoly>> {
    invariant_candidates(w, d)
}

/// Picks, in order, the candidates that are independent modulo the products
/// of previously chosen generators. Returns their positions.
pub(crate) fn select_new_generators(
    chosen: &[MultiPoly],
    chosen_degrees: &[u32],
    candidates: &[MultiPoly],
    d: u32,
    nvars: usize,
) -> Vec<usize> {
    let mut span: Echelon<Monomial> = Echelon::new();
    let products = generator_products(chosen, chosen_degrees, d, nvars);
    let np = products.len();
    for (k, (_, p)) in products.into_iter().enumerate() {
        let _ = span.insert(to_sparse(&p), k);
    }
    let mut picked = Vec::new();
    for (k, c) in candidates.iter().enumerate() {
        if span.insert(to_sparse(c), np + k).is_ok() {
            picked.push(k);
        }
    }
    picked
}

/// Minimal homogeneous generators of the invariant algebra up to degree `cap`.
///
/// Works for any finite group; for non-reflection groups there are more
/// generators than the dimension.
pub fn minimal_generators(w: &ReflectionGroup, cap: u32) -> Result<Vec<MultiPoly>> {
    let n = w.dimension();
    let mut gens: Vec<MultiPoly> = Vec::new();
    let mut degs: Vec<u32> = Vec::new();
    for d in 1..=cap {
        let cands = invariant_candidates(w, d)?;
        for k in select_new_generators(&gens, &degs, &cands, d, n) {
            gens.push(cands[k].clone());
            degs.push(d);
        }
    }
    Ok(gens)
}

/// Computes a fundamental system degree by degree.
///
/// Stops once `n` algebraically independent generators (`J ≠ 0`) have degree
/// product `|W|`, which certifies that they generate all invariants.
pub fn fundamental_invariants(w: &ReflectionGroup, degree_cap: u32) -> Result<FundamentalSystem> {
    let n = w.dimension();
    let mut gens: Vec<MultiPoly> = Vec::new();
    let mut degs: Vec<u32> = Vec::new();
    for d in 1..=degree_cap {
        let cands = invariant_candidates(w, d)?;
        for k in select_new_generators(&gens, &degs, &cands, d, n) {
            gens.push(cands[k].clone());
            degs.push(d);
        }
        if gens.len() > n {
            return Err(Error::NotReflectionGroup(format!(
                "invariant algebra needs more than {n} generators (found {} up to degree {d})",
                gens.len()
            )));
        }
        if gens.len() == n {
            let product: u64 = degs.iter().map(|&d| d as u64).product();
            if product == w.order() as u64 && !jacobian(&gens)?.is_zero() {
                let report = degree_identities(&degs, w);
                if !report.all_pass() {
                    return Err(Error::NotReflectionGroup(format!(
                        "degree identities fail for degrees {degs:?}"
                    )));
                }
                return FundamentalSystem::from_generators(w, gens).map_err(|e| match e {
                    Error::FactorizationFailed(msg) => Error::NotReflectionGroup(msg),
                    other => other,
                });
            }
        }
    }
    Err(Error::DegreeCapExceeded(degree_cap))
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks `Π d_i = |W|`, `Σ d_i = n + N` and
/// `Π (1 + (d_i - 1) t) = Σ a_i t^i` against the fixed-space census.
pub fn degree_identities(degrees: &[u32], w: &ReflectionGroup) -> IdentityReport {
    let n = w.dimension();
    let prod: u64 = degrees.iter().map(|&d| d as u64).product();
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    let order = w.order() as u64;
    let refl = w.num_reflections() as u64;
    // coefficients of Π (1 + (d_i - 1) t)
    let mut poly = vec![0u64];
    poly[0] = 1;
    for &d in degrees {
        let mut next = vec![0u64; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * (d as u64 - 1);
        }
        poly = next;
    }
    poly.resize(n + 1, 0);
    let census: Vec<u64> = w.census().counts.iter().map(|&c| c as u64).collect();
    IdentityReport {
        checks: vec![
            IdentityCheck {
                identity: "product of degrees equals group order".into(),
                lhs: json!(prod),
                rhs: json!(order),
                pass: prod == order,
            },
            IdentityCheck {
                identity: "sum of degrees equals dimension plus number of reflections".into(),
                lhs: json!(sum),
                rhs: json!(n as u64 + refl),
                pass: sum == n as u64 + refl,
            },
            IdentityCheck {
                identity: "prod(1 + (d_i - 1) t) equals fixed-space census polynomial".into(),
                lhs: json!(poly),
                rhs: json!(census),
                pass: degrees.len() == n && poly == census,
            },
        ],
    }
}

pub fn verify_degree_identities(f: &FundamentalSystem) -> IdentityReport {
    degree_identities(f.degrees(), f.group())
}

/// `g / J` for an anti-invariant `g` (`g∘σ = det(σ⁻¹) g` for all `σ`).
pub fn anti_invariant_divide(f: &FundamentalSystem, g: &MultiPoly) -> Result<MultiPoly> {
    if !f.group().is_anti_invariant(g)? {
        return Err(Error::NotAntiInvariant);
    }
    g.div_exact(f.jacobian()).map_err(|e| match e {
        Error::NotDivisible => Error::InternalInconsistency(format!(
            "anti-invariant polynomial {g} is not divisible by the Jacobian"
        )),
        other => other,
    })
}

/// Finds `q` with `h = q(f_1, ..., f_n)`, written in variables `x1..xn`
/// standing for the generators.
pub fn membership_in_generators(f: &FundamentalSystem, h: &MultiPoly) -> Result<MultiPoly> {
    express_in_generators(f.generators(), f.degrees(), h)
}

pub(crate) fn express_in_generators(gens: &[MultiPoly], degrees: &[u32], h: &MultiPoly) -> Result<MultiPoly> {
    let k = gens.len();
    let nvars = h.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::VariableMismatch(nvars, g.nvars()));
    }
    let mut q = MultiPoly::zero(k);
    if h.is_zero() {
        return Ok(q);
    }
    let top = h.degree() as u32;
    for d in 0..=top {
        let part = h.homogeneous_part(d);
        if part.is_zero() {
            continue;
        }
        let products = generator_products(gens, degrees, d, nvars);
        let mut span: Echelon<Monomial> = Echelon::new();
        for (i, (_, p)) in products.iter().enumerate() {
            let _ = span.insert(to_sparse(p), i);
        }
        let combo = span.express(&to_sparse(&part)).ok_or(Error::NoRepresentation)?;
        for (i, c) in combo {
            q.add_term(Monomial(products[i].0.clone()), &c);
        }
    }
    Ok(q)
}

#[derive(Debug, Clone, Serialize)]
pub struct WedgeAtOrigin {
    pub indices: Vec<usize>,
    pub form: String,
    pub value_at_origin: String,
    pub vanishes_at_origin: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub form_degree: usize,
    pub dimension: usize,
    pub generators: Vec<String>,
    pub wedges: Vec<WedgeAtOrigin>,
    pub all_vanish_at_origin: bool,
    /// Dimension of the invariant constant-coefficient p-forms.
    pub invariant_constant_forms: usize,
    pub obstruction_certified: bool,
    pub conclusion: String,
}

/// Evaluates every `df_{i_1}∧…∧df_{i_p}` at the origin. When all vanish there
/// but a nonzero invariant constant p-form exists (e.g. the volume form of a
/// rotation group), that form cannot lie in the span of the pullbacks.
pub fn pullback_obstruction(w: &ReflectionGroup, generators: &[MultiPoly], p: usize) -> Result<ObstructionReport> {
    let n = w.dimension();
    if let Some(g) = generators.iter().find(|g| g.nvars() != n) {
        return Err(Error::VariableMismatch(n, g.nvars()));
    }
    let diffs: Vec<PolyForm> = generators
        .iter()
        .map(|f| PolyForm::function(f.clone()).exterior_d())
        .collect();
    let origin = vec![Rational::zero(); n];
    let mut wedges = Vec::new();
    for idx in index_tuples(generators.len(), p) {
        let mut form = PolyForm::function(MultiPoly::one(n));
        for &i in &idx {
            form = form.wedge(&diffs[i])?;
        }
        let value = form.eval_coefficients(&origin);
        let value_form = PolyForm::from_terms(
            n,
            form.degree(),
            value.iter().map(|(k, v)| (k.clone(), MultiPoly::constant(n, v.clone()))),
        )?;
        wedges.push(WedgeAtOrigin {
            indices: idx.iter().map(|i| i + 1).collect(),
            form: form.to_string(),
            value_at_origin: value_form.to_string(),
            vanishes_at_origin: value.is_empty(),
        });
    }
    let all_vanish = wedges.iter().all(|w| w.vanishes_at_origin);
    let mut span: Echelon<Vec<usize>> = Echelon::new();
    for (k, idx) in index_tuples(n, p).into_iter().enumerate() {
        let avg = reynolds_form(w, &PolyForm::basis(n, &idx))?;
        let v: SparseVec<Vec<usize>> = avg
            .terms()
            .map(|(i, c)| (i.clone(), c.constant_term()))
            .collect();
        let _ = span.insert(v, k);
    }
    let inv_dim = span.rank();
    let certified = p > 0 && all_vanish && inv_dim > 0;
    let conclusion = if p == 0 {
        "0-forms: the pullback image is the algebra generated by the invariants, i.e. all invariant polynomials".to_string()
    } else if certified {
        if p == n {
            "volume form not in pullback image".to_string()
        } else {
            format!("no nonzero invariant constant {p}-form is in the pullback image")
        }
    } else if inv_dim == 0 {
        format!("not applicable: no nonzero invariant constant {p}-form exists")
    } else {
        "no obstruction at the origin".to_string()
    };
    Ok(ObstructionReport {
        form_degree: p,
        dimension: n,
        generators: generators.iter().map(ToString::to_string).collect(),
        wedges,
        all_vanish_at_origin: all_vanish,
        invariant_constant_forms: inv_dim,
        obstruction_certified: certified,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::BuiltinFamily;
    use crate::parse::parse_poly;

    fn group(name: &str) -> ReflectionGroup {
        ReflectionGroup::builtin(name.parse().unwrap()).unwrap()
    }

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn reynolds_examples() {
        let s2 = group("S2");
        assert_eq!(reynolds(&s2, &p("x1", 2)).unwrap(), p("1/2*x1 + 1/2*x2", 2));
        assert_eq!(reynolds(&s2, &p("x1^2 + x2^2", 2)).unwrap(), p("x1^2 + x2^2", 2));
        assert!(reynolds(&group("B2"), &p("x1", 2)).unwrap().is_zero());
    }

    #[test]
    fn fundamental_degrees() {
        for (name, degs) in [
            ("S2", vec![1, 2]),
            ("B2", vec![2, 4]),
            ("S3", vec![1, 2, 3]),
            ("B3", vec![2, 4, 6]),
        ] {
            let f = fundamental_invariants(&group(name), 10).unwrap();
            assert_eq!(f.degrees(), &degs[..], "{name}");
            assert!(verify_degree_identities(&f).all_pass(), "{name}");
        }
        let s2 = fundamental_invariants(&group("S2"), 4).unwrap();
        assert_eq!(s2.generators(), &[p("x1 + x2", 2), p("x1^2 + x2^2", 2)]);
    }

    #[test]
    fn z4_is_not_a_reflection_group() {
        let z4 = ReflectionGroup::builtin(BuiltinFamily::CyclicZ4).unwrap();
        assert!(matches!(fundamental_invariants(&z4, 8), Err(Error::NotReflectionGroup(_))));
        assert_eq!(minimal_generators(&z4, 6).unwrap().len(), 3);
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(fundamental_invariants(&group("B3"), 4), Err(Error::DegreeCapExceeded(4))));
    }

    #[test]
    fn identity_examples() {
        let r = degree_identities(&[2, 4], &group("B2"));
        assert!(r.all_pass());
        assert_eq!(r.checks[2].lhs, json!([1, 4, 3]));
        let r = degree_identities(&[1, 2, 3], &group("S3"));
        assert_eq!(r.checks[2].lhs, json!([1, 3, 2, 0]));
        assert!(r.all_pass());
        let r = degree_identities(&[1, 2, 3, 4], &group("S4"));
        assert_eq!(r.checks[0].lhs, json!(24));
        assert!(r.all_pass());
        assert!(!degree_identities(&[2, 2], &group("B2")).all_pass());
    }

    #[test]
    fn jacobian_factor_examples() {
        let s2 = group("S2");
        let gens = vec![p("x1 + x2", 2), p("x1^2 + x2^2", 2)];
        assert_eq!(jacobian(&gens).unwrap(), p("-2*x1 + 2*x2", 2));
        let (c, ls) = jacobian_factor(&s2, &gens).unwrap();
        assert_eq!(c, Rational::from(-2));
        assert_eq!(ls, vec![p("x1 - x2", 2)]);

        let s3 = group("S3");
        let power_sums = vec![p("x1+x2+x3", 3), p("x1^2+x2^2+x3^2", 3), p("x1^3+x2^3+x3^3", 3)];
        let vandermonde = p("6*(x2 - x1)*(x3 - x1)*(x3 - x2)", 3);
        assert_eq!(jacobian(&power_sums).unwrap(), vandermonde);
        let (c, _) = jacobian_factor(&s3, &power_sums).unwrap();
        assert_eq!(c.abs(), Rational::from(6));

        let z4 = group("Z4");
        let gens = vec![p("x1^2 + x2^2", 2), p("x1^4 - 6*x1^2*x2^2 + x2^4", 2)];
        assert!(matches!(jacobian_factor(&z4, &gens), Err(Error::FactorizationFailed(_))));
    }

    #[test]
    fn anti_invariant_examples() {
        let f = fundamental_invariants(&group("S2"), 4).unwrap();
        assert_eq!(anti_invariant_divide(&f, &p("x1 - x2", 2)).unwrap(), p("-1/2", 2));
        assert_eq!(
            anti_invariant_divide(&f, &p("x1^2 - x2^2", 2)).unwrap(),
            p("-1/2*x1 - 1/2*x2", 2)
        );
        assert!(matches!(anti_invariant_divide(&f, &p("x1 + x2", 2)), Err(Error::NotAntiInvariant)));
    }

    #[test]
    fn membership_examples() {
        let s2 = group("S2");
        let e = FundamentalSystem::from_generators(&s2, vec![p("x1 + x2", 2), p("x1*x2", 2)]).unwrap();
        assert_eq!(membership_in_generators(&e, &p("x1^2 + x2^2", 2)).unwrap(), p("x1^2 - 2*x2", 2));
        assert_eq!(membership_in_generators(&e, &p("x1 + x2", 2)).unwrap(), p("x1", 2));
        assert!(matches!(membership_in_generators(&e, &p("x1 - x2", 2)), Err(Error::NoRepresentation)));
    }

    #[test]
    fn obstruction_examples() {
        let z4 = group("Z4");
        let gens = vec![
            p("x1^2 + x2^2", 2),
            p("x1^4 - 6*x1^2*x2^2 + x2^4", 2),
            p("4*x1^3*x2 - 4*x1*x2^3", 2),
        ];
        let r = pullback_obstruction(&z4, &gens, 2).unwrap();
        assert_eq!(r.wedges.len(), 3);
        assert!(r.all_vanish_at_origin);
        assert!(r.obstruction_certified);
        assert_eq!(r.conclusion, "volume form not in pullback image");

        let s2 = group("S2");
        let r = pullback_obstruction(&s2, &[p("x1 + x2", 2), p("x1^2 + x2^2", 2)], 2).unwrap();
        assert!(r.all_vanish_at_origin);
        assert_eq!(r.invariant_constant_forms, 0);
        assert!(!r.obstruction_certified);

        let r = pullback_obstruction(&z4, &gens, 0).unwrap();
        assert!(!r.obstruction_certified);
        assert!(!r.all_vanish_at_origin);
    }

    #[test]
    fn weighted_exponent_enumeration() {
        assert_eq!(weighted_exponents(&[1, 2], 3), vec![vec![1, 1], vec![3, 0]]);
        assert_eq!(weighted_exponents(&[2, 4], 3).len(), 0);
    }
}
