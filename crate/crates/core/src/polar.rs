//! Linear actions of connected groups given by Lie-algebra generators, with a
//! section and its Weyl group: basic forms, the restriction to the section
//! and the lift of invariant section forms to basic forms.
//!
//! Invariance is checked infinitesimally (`L_{ζ_A} ω = 0` for every generator
//! `A`), which is faithful for connected groups. Fundamental vector fields use
//! the left-action convention `ζ_A(x) = A x`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{index_tuples, PolyForm, PolyVectorField};
use crate::groups::{BuiltinFamily, GroupFile, ReflectionGroup};
use crate::invariants::{
    fundamental_invariants, is_form_invariant, jacobian, membership_in_generators, reynolds_form,
    select_new_generators, FundamentalSystem,
};
use crate::linalg::{kernel_of_columns, Echelon, SparseVec};
use crate::matrix::MatrixQ;
use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;
use crate::solomon::decompose;

pub const DEFAULT_FORM_DEGREE_CAP: u32 = 6;
pub const DEFAULT_POLY_DEGREE_CAP: u32 = 8;

#[derive(Debug, Clone)]
pub struct LinearAction {
    name: Option<String>,
    lie_generators: Vec<MatrixQ>,
    section: Vec<Vec<Rational>>,
    weyl: ReflectionGroup,
    form: MatrixQ,
}

impl LinearAction {
    /// Validates the data. When `form` is `None` an invariant inner product is
    /// searched for among the solutions of `AᵀB + BA = 0`.
    pub fn new(
        lie_generators: Vec<MatrixQ>,
        section: Vec<Vec<Rational>>,
        weyl: ReflectionGroup,
        form: Option<MatrixQ>,
    ) -> Result<Self> {
        let n = lie_generators
            .first()
            .map(MatrixQ::rows)
            .ok_or_else(|| Error::Input("at least one Lie algebra generator is required".into()))?;
        for a in &lie_generators {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "Lie generator of shape {}x{} on a space of dimension {n}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if section.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("section vector of wrong length".into()));
        }
        let sec = MatrixQ::from_rows(&section)?;
        if sec.rank() != section.len() {
            return Err(Error::Input("section vectors are linearly dependent".into()));
        }
        if weyl.dimension() != section.len() {
            return Err(Error::DimensionMismatch(format!(
                "Weyl group acts on dimension {} but the section has dimension {}",
                weyl.dimension(),
                section.len()
            )));
        }
        let form = match form {
            Some(b) => {
                if b.rows() != n || !b.is_positive_definite() {
                    return Err(Error::NoInvariantForm);
                }
                for a in &lie_generators {
                    if !a.transpose().mul(&b)?.add(&b.mul(a)?)?.is_zero() {
                        return Err(Error::NoInvariantForm);
                    }
                }
                b
            }
            None => find_invariant_inner_product(&lie_generators)?,
        };
        // the section meets orbits orthogonally
        for a in &lie_generators {
            for x in &section {
                let ax = a.mul_vec(x)?;
                let bax = form.mul_vec(&ax)?;
                for s in &section {
                    let ip: Rational = bax.iter().zip(s).map(|(u, v)| u * v).sum();
                    if !ip.is_zero() {
                        return Err(Error::Input(
                            "section is not orthogonal to the orbits (A x is not B-orthogonal to the section)".into(),
                        ));
                    }
                }
            }
        }
        Ok(LinearAction {
            name: None,
            lie_generators,
            section,
            weyl,
            form,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.form.rows()
    }

    pub fn section_dimension(&self) -> usize {
        self.section.len()
    }

    pub fn lie_generators(&self) -> &[MatrixQ] {
        &self.lie_generators
    }

    pub fn section(&self) -> &[Vec<Rational>] {
        &self.section
    }

    pub fn weyl(&self) -> &ReflectionGroup {
        &self.weyl
    }

    pub fn form(&self) -> &MatrixQ {
        &self.form
    }

    pub fn fields(&self) -> Vec<PolyVectorField> {
        self.lie_generators
            .iter()
            .map(|a| PolyVectorField::linear(a).expect("square"))
            .collect()
    }

    /// Components of the inclusion `Σ → V`, `t ↦ Σ t_j s_j`.
    pub fn inclusion(&self) -> Vec<MultiPoly> {
        let n = self.dimension();
        (0..n)
            .map(|i| {
                let coeffs: Vec<Rational> = self.section.iter().map(|s| s[i].clone()).collect();
                MultiPoly::linear(&coeffs)
            })
            .collect()
    }

    /// Pullback of a form on `V` to section coordinates.
    pub fn restrict(&self, omega: &PolyForm) -> Result<PolyForm> {
        omega.pullback(&self.inclusion())
    }

    /// Structure constants: `[A_b, A_a] = Σ_c coeffs[b][a][c] A_c`.
    pub fn brackets(&self) -> Result<Vec<Vec<Vec<Rational>>>> {
        let r = self.lie_generators.len();
        let n = self.dimension();
        let basis = MatrixQ::from_rows(
            &self
                .lie_generators
                .iter()
                .map(|a| (0..n * n).map(|k| a.get(k / n, k % n).clone()).collect())
                .collect::<Vec<Vec<Rational>>>(),
        )?
        .transpose();
        let mut out = vec![vec![Vec::new(); r]; r];
        for b in 0..r {
            for a in 0..r {
                let br = self.lie_generators[b].bracket(&self.lie_generators[a])?;
                let flat: Vec<Rational> = (0..n * n).map(|k| br.get(k / n, k % n).clone()).collect();
                out[b][a] = basis.solve(&flat)?.ok_or_else(|| {
                    Error::Input("Lie generators do not span a Lie algebra (bracket not in span)".into())
                })?;
            }
        }
        Ok(out)
    }

    /// `SO(2)` rotating `Q^2`, section the first axis, Weyl group `{±1}`.
    pub fn so2() -> Self {
        let a = MatrixQ::from_i64(2, 2, &[0, -1, 1, 0]);
        let weyl = ReflectionGroup::generate(&[MatrixQ::from_i64(1, 1, &[-1])], 10)
            .expect("order two")
            .with_name("Z2");
        LinearAction::new(
            vec![a],
            vec![vec![Rational::one(), Rational::zero()]],
            weyl,
            Some(MatrixQ::identity(2)),
        )
        .expect("valid action")
        .with_name("SO2")
    }

    /// `so(3)` acting by commutators on traceless symmetric 3x3 matrices.
    ///
    /// Coordinates `(c1, ..., c5)` of `S` refer to the ordered basis
    /// `diag(1,-1,0)`, `diag(1,1,-2)`, `E12+E21`, `E13+E31`, `E23+E32`, so
    /// `c1 = (S11 - S22)/2`, `c2 = -S33/2`, `c3 = S12`, `c4 = S13`,
    /// `c5 = S23`. The Lie algebra basis is the rotations `E32-E23`,
    /// `E13-E31`, `E21-E12`. The section is the diagonal (`c3 = c4 = c5 = 0`)
    /// with Weyl group `S3` permuting the diagonal entries; the invariant
    /// inner product is the trace form `diag(2, 6, 2, 2, 2)`.
    pub fn so3_traceless_symmetric() -> Self {
        let q = |v: i64| Rational::from(v);
        let e = |i: usize, j: usize| {
            let mut m = MatrixQ::zeros(3, 3);
            m.set(i, j, q(1));
            m
        };
        let basis = [
            MatrixQ::diagonal(&[q(1), q(-1), q(0)]),
            MatrixQ::diagonal(&[q(1), q(1), q(-2)]),
            e(0, 1).add(&e(1, 0)).unwrap(),
            e(0, 2).add(&e(2, 0)).unwrap(),
            e(1, 2).add(&e(2, 1)).unwrap(),
        ];
        let coords = |s: &MatrixQ| -> Vec<Rational> {
            let half = Rational::new(1, 2);
            vec![
                (s.get(0, 0) - s.get(1, 1)) * &half,
                -(s.get(2, 2) * &half),
                s.get(0, 1).clone(),
                s.get(0, 2).clone(),
                s.get(1, 2).clone(),
            ]
        };
        let rotations = [
            e(2, 1).sub(&e(1, 2)).unwrap(),
            e(0, 2).sub(&e(2, 0)).unwrap(),
            e(1, 0).sub(&e(0, 1)).unwrap(),
        ];
        let action_matrix = |f: &dyn Fn(&MatrixQ) -> MatrixQ| -> MatrixQ {
            let cols: Vec<Vec<Rational>> = basis.iter().map(|b| coords(&f(b))).collect();
            MatrixQ::from_rows(&cols).unwrap().transpose()
        };
        let lie: Vec<MatrixQ> = rotations
            .iter()
            .map(|l| action_matrix(&|s: &MatrixQ| l.bracket(s).unwrap()))
            .collect();
        // Weyl group generated by conjugation with two transpositions, restricted
        // to the diagonal coordinates (c1, c2).
        let perm = |i: usize, j: usize| {
            let mut p = MatrixQ::identity(3);
            p.set(i, i, q(0));
            p.set(j, j, q(0));
            p.set(i, j, q(1));
            p.set(j, i, q(1));
            p
        };
        let weyl_gens: Vec<MatrixQ> = [perm(0, 1), perm(1, 2)]
            .iter()
            .map(|p| {
                let full = action_matrix(&|s: &MatrixQ| p.mul(s).unwrap().mul(&p.transpose()).unwrap());
                MatrixQ::from_rows(&[full.row(0)[..2].to_vec(), full.row(1)[..2].to_vec()]).unwrap()
            })
            .collect();
        let weyl = ReflectionGroup::generate(&weyl_gens, 100).expect("S3").with_name("S3");
        let section = vec![
            vec![q(1), q(0), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0), q(0)],
        ];
        let form = MatrixQ::diagonal(&[q(2), q(6), q(2), q(2), q(2)]);
        LinearAction::new(lie, section, weyl, Some(form))
            .expect("valid action")
            .with_name("SO3-SYM0")
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "SO2" => Ok(LinearAction::so2()),
            "SO3-SYM0" | "SO3" | "SYM0" => Ok(LinearAction::so3_traceless_symmetric()),
            other => Err(Error::Input(format!("unknown builtin action {other:?}"))),
        }
    }
}

/// Searches the invariant symmetric forms for a positive-definite one.
fn find_invariant_inner_product(gens: &[MatrixQ]) -> Result<MatrixQ> {
    let n = gens[0].rows();
    // unknowns: B_ij for i <= j
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let sym = |v: &[Rational]| {
        let mut b = MatrixQ::zeros(n, n);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            b.set(i, j, v[k].clone());
            b.set(j, i, v[k].clone());
        }
        b
    };
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for a in gens {
        let mut cols = Vec::new();
        for k in 0..pairs.len() {
            let mut unit = vec![Rational::zero(); pairs.len()];
            unit[k] = Rational::one();
            let b = sym(&unit);
            let c = a.transpose().mul(&b)?.add(&b.mul(a)?)?;
            cols.push((0..n * n).map(|t| c.get(t / n, t % n).clone()).collect::<Vec<_>>());
        }
        for t in 0..n * n {
            rows.push(cols.iter().map(|c| c[t].clone()).collect());
        }
    }
    let kernel = MatrixQ::from_rows(&rows)?.kernel();
    let candidates: Vec<MatrixQ> = kernel.iter().map(|v| sym(v)).collect();
    let mut total = MatrixQ::zeros(n, n);
    for b in &candidates {
        for cand in [b.clone(), b.scale(&-Rational::one())] {
            if cand.is_positive_definite() {
                return Ok(cand);
            }
        }
        let trace: Rational = (0..n).map(|i| b.get(i, i).clone()).sum();
        total = if trace.is_negative() { total.sub(b)? } else { total.add(b)? };
    }
    if total.is_positive_definite() {
        return Ok(total);
    }
    Err(Error::NoInvariantForm)
}

/// The linear vector field `x ↦ A x`.
pub fn fundamental_field(action: &LinearAction, a: &MatrixQ) -> Result<PolyVectorField> {
    let n = action.dimension();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for an action on dimension {n}",
            a.rows(),
            a.cols()
        )));
    }
    PolyVectorField::linear(a)
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorResidual {
    pub generator: usize,
    /// `i_ζ ω`, `"0"` when horizontal (always `"0"` for functions).
    pub horizontal_residual: String,
    /// `L_ζ ω`.
    pub invariance_residual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasicReport {
    pub form: String,
    pub residuals: Vec<GeneratorResidual>,
    pub basic: bool,
}

pub fn is_basic(action: &LinearAction, omega: &PolyForm) -> Result<BasicReport> {
    if omega.nvars() != action.dimension() {
        return Err(Error::VariableMismatch(action.dimension(), omega.nvars()));
    }
    let mut residuals = Vec::new();
    for (k, v) in action.fields().iter().enumerate() {
        let hor = if omega.degree() == 0 {
            PolyForm::zero(omega.nvars(), 0)
        } else {
            omega.interior(v)?
        };
        let inv = omega.lie_derivative(v)?;
        residuals.push(GeneratorResidual {
            generator: k,
            pass: hor.is_zero() && inv.is_zero(),
            horizontal_residual: hor.to_string(),
            invariance_residual: inv.to_string(),
        });
    }
    Ok(BasicReport {
        form: omega.to_string(),
        basic: residuals.iter().all(|r| r.pass),
        residuals,
    })
}

/// Row keys of the basic-form constraint system: generator, constraint kind
/// (0 horizontality, 1 invariance), index tuple and monomial.
type ConstraintKey = (usize, u8, Vec<usize>, Monomial);

/// Basis of the basic `p`-forms on `V` whose coefficients are homogeneous of
/// degree `d`. For `p = 0` these are the invariant polynomials of degree `d`.
pub fn basic_forms(action: &LinearAction, p: usize, d: u32) -> Result<Vec<PolyForm>> {
    let n = action.dimension();
    if p > n {
        return Ok(Vec::new());
    }
    let fields = action.fields();
    let unknowns: Vec<(Vec<usize>, Monomial)> = index_tuples(n, p)
        .into_iter()
        .flat_map(|idx| Monomial::all_of_degree(n, d).into_iter().map(move |m| (idx.clone(), m)))
        .collect();
    let mut columns: Vec<SparseVec<ConstraintKey>> = Vec::with_capacity(unknowns.len());
    for (idx, m) in &unknowns {
        let omega = PolyForm::monomial_form(n, idx, MultiPoly::term(m.clone(), Rational::one()))?;
        let mut col = SparseVec::new();
        for (g, v) in fields.iter().enumerate() {
            if p > 0 {
                for (i, c) in omega.interior(v)?.terms() {
                    for (mm, x) in c.terms() {
                        col.insert((g, 0, i.clone(), mm.clone()), x.clone());
                    }
                }
            }
            for (i, c) in omega.lie_derivative(v)?.terms() {
                for (mm, x) in c.terms() {
                    col.insert((g, 1, i.clone(), mm.clone()), x.clone());
                }
            }
        }
        columns.push(col);
    }
    let kernel = kernel_of_columns(&columns);
    kernel
        .into_iter()
        .map(|k| {
            let terms = k.into_iter().map(|(j, c)| {
                let (idx, m) = &unknowns[j];
                (idx.clone(), MultiPoly::term(m.clone(), c))
            });
            PolyForm::from_terms(n, p, terms)
        })
        .collect()
}

/// Basis of the homogeneous degree-`d` invariant polynomials of the action.
pub fn g_invariant_polynomials(action: &LinearAction, degree: u32) -> Result<Vec<MultiPoly>> {
    Ok(basic_forms(action, 0, degree)?
        .into_iter()
        .map(|f| f.as_function().expect("0-form").primitive())
        .collect())
}

/// Basis of the `W`-invariant `p`-forms on the section with homogeneous
/// coefficients of degree `d`.
pub fn section_invariant_forms(action: &LinearAction, p: usize, d: u32) -> Result<Vec<PolyForm>> {
    let m = action.section_dimension();
    let mut span: Echelon<(Vec<usize>, Monomial)> = Echelon::new();
    let mut out = Vec::new();
    let mut tag = 0usize;
    for idx in index_tuples(m, p) {
        for mono in Monomial::all_of_degree(m, d) {
            let base = PolyForm::monomial_form(m, &idx, MultiPoly::term(mono, Rational::one()))?;
            let avg = reynolds_form(action.weyl(), &base)?;
            if avg.is_zero() {
                continue;
            }
            if span.insert(form_to_sparse(&avg), tag).is_ok() {
                out.push(avg);
            }
            tag += 1;
        }
    }
    Ok(out)
}

pub(crate) fn form_to_sparse(f: &PolyForm) -> SparseVec<(Vec<usize>, Monomial)> {
    let mut v = SparseVec::new();
    for (i, c) in f.terms() {
        for (m, x) in c.terms() {
            v.insert((i.clone(), m.clone()), x.clone());
        }
    }
    v
}

/// Invariant generators on `V` whose restrictions form a fundamental system
/// for the Weyl group on the section.
#[derive(Debug, Clone)]
pub struct LiftData {
    section_system: FundamentalSystem,
    ambient: Vec<MultiPoly>,
}

impl LiftData {
    /// Computes `G`-invariants on `V` degree by degree and keeps those whose
    /// restrictions are new modulo products of earlier restrictions, until the
    /// restrictions form a fundamental system of the Weyl group.
    pub fn build(action: &LinearAction, degree_cap: u32) -> Result<Self> {
        let m = action.section_dimension();
        let inclusion = action.inclusion();
        let mut ambient: Vec<MultiPoly> = Vec::new();
        let mut section: Vec<MultiPoly> = Vec::new();
        let mut degs: Vec<u32> = Vec::new();
        for d in 1..=degree_cap {
            let invs = g_invariant_polynomials(action, d)?;
            let mut restricted = Vec::new();
            let mut lifted = Vec::new();
            for f in invs {
                let r = f.substitute(&inclusion)?;
                if r.is_zero() {
                    return Err(Error::InternalInconsistency(format!(
                        "nonzero invariant {f} restricts to zero on the section"
                    )));
                }
                // scale both so the section polynomial is primitive
                let prim = r.primitive();
                let (mono, c) = r.leading_term().expect("nonzero");
                let factor = prim.coeff(mono) / c;
                restricted.push(prim);
                lifted.push(f.scale(&factor));
            }
            for k in select_new_generators(&section, &degs, &restricted, d, m) {
                section.push(restricted[k].clone());
                ambient.push(lifted[k].clone());
                degs.push(d);
            }
            if section.len() > m {
                return Err(Error::NotReflectionGroup(
                    "restricted invariants need more generators than the section dimension".into(),
                ));
            }
            if section.len() == m {
                let product: u64 = degs.iter().map(|&x| x as u64).product();
                if product == action.weyl().order() as u64 && !jacobian(&section)?.is_zero() {
                    let system = FundamentalSystem::from_generators(action.weyl(), section)?;
                    let reference = fundamental_invariants(action.weyl(), degree_cap)?;
                    if reference.degrees() != system.degrees() {
                        return Err(Error::InternalInconsistency(
                            "restricted generators have the wrong degrees".into(),
                        ));
                    }
                    return Ok(LiftData {
                        section_system: system,
                        ambient,
                    });
                }
            }
        }
        Err(Error::DegreeCapExceeded(degree_cap))
    }

    pub fn section_system(&self) -> &FundamentalSystem {
        &self.section_system
    }

    /// The lifted generators `f̃_i` on `V`.
    pub fn ambient(&self) -> &[MultiPoly] {
        &self.ambient
    }
}

/// Lifts a `W`-invariant form on the section to a basic form on `V` that
/// restricts back to it, via `ω̃ = Σ q_J(f̃) df̃_J` where `ω = Σ q_J(f) df_J`.
pub fn lift_form(action: &LinearAction, data: &LiftData, omega: &PolyForm) -> Result<PolyForm> {
    let m = action.section_dimension();
    let n = action.dimension();
    if omega.nvars() != m {
        return Err(Error::VariableMismatch(m, omega.nvars()));
    }
    let dec = decompose(data.section_system(), omega)?;
    let dtilde: Vec<PolyForm> = data
        .ambient()
        .iter()
        .map(|f| PolyForm::function(f.clone()).exterior_d())
        .collect();
    let mut out = PolyForm::zero(n, omega.degree());
    for (idx, coeff) in dec.coefficients() {
        let q = membership_in_generators(data.section_system(), coeff)?;
        let mut term = PolyForm::function(q.substitute(data.ambient())?);
        for &i in idx {
            term = term.wedge(&dtilde[i])?;
        }
        out = out.checked_add(&term)?;
    }
    if !is_basic(action, &out)?.basic {
        return Err(Error::InternalInconsistency(format!("lifted form {out} is not basic")));
    }
    if &action.restrict(&out)? != omega {
        return Err(Error::InternalInconsistency(
            "lifted form does not restrict to the input".into(),
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectivityRow {
    pub form_degree: usize,
    pub coefficient_degree: u32,
    pub basic_dimension: usize,
    pub section_invariant_dimension: usize,
    pub kernel_dimension: usize,
    pub restrictions_invariant: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectivityReport {
    pub rows: Vec<InjectivityRow>,
    pub all_pass: bool,
}

/// For every coefficient degree `d ≤ degree_cap`: computes the basic
/// `p`-forms on `V`, restricts them to the section and checks that the
/// restriction has trivial kernel, lands in `W`-invariant forms, and that both
/// sides have equal dimension.
pub fn injectivity_check(action: &LinearAction, p: usize, degree_cap: u32) -> Result<InjectivityReport> {
    let mut rows = Vec::new();
    for d in 0..=degree_cap {
        rows.push(injectivity_row(action, p, d)?);
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(InjectivityReport { rows, all_pass })
}

pub fn injectivity_row(action: &LinearAction, p: usize, d: u32) -> Result<InjectivityRow> {
    let basic = basic_forms(action, p, d)?;
    let mut images = Vec::with_capacity(basic.len());
    let mut restrictions_invariant = true;
    for b in &basic {
        let r = action.restrict(b)?;
        if !is_form_invariant(action.weyl(), &r)? {
            restrictions_invariant = false;
        }
        images.push(form_to_sparse(&r));
    }
    let kernel_dimension = kernel_of_columns(&images).len();
    let section_invariant_dimension = if p <= action.section_dimension() {
        section_invariant_forms(action, p, d)?.len()
    } else {
        0
    };
    Ok(InjectivityRow {
        form_degree: p,
        coefficient_degree: d,
        basic_dimension: basic.len(),
        section_invariant_dimension,
        kernel_dimension,
        restrictions_invariant,
        pass: kernel_dimension == 0 && restrictions_invariant && basic.len() == section_invariant_dimension,
    })
}

/// How the action file names its Weyl group.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum WeylSpec {
    Name(String),
    Inline(GroupFile),
}

/// Action input file.
#[derive(Debug, Clone, Deserialize)]
pub struct ActionFile {
    pub lie_generators: Vec<Vec<Vec<Rational>>>,
    pub section: Vec<Vec<Rational>>,
    pub weyl: WeylSpec,
    #[serde(default)]
    pub form: Option<Vec<Vec<Rational>>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl ActionFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("action file: {e}")))
    }

    /// `resolve` loads a group file named by path (relative paths are the
    /// caller's business).
    pub fn build(&self, resolve: &dyn Fn(&str) -> Result<ReflectionGroup>) -> Result<LinearAction> {
        let gens = self
            .lie_generators
            .iter()
            .map(|rows| MatrixQ::from_rows(rows))
            .collect::<Result<Vec<_>>>()?;
        let weyl = match &self.weyl {
            WeylSpec::Name(s) => match s.parse::<BuiltinFamily>() {
                Ok(f) => ReflectionGroup::builtin(f)?,
                Err(_) => resolve(s)?,
            },
            WeylSpec::Inline(g) => g.build()?,
        };
        let form = self.form.as_ref().map(|rows| MatrixQ::from_rows(rows)).transpose()?;
        let action = LinearAction::new(gens, self.section.clone(), weyl, form)?;
        Ok(match &self.name {
            Some(n) => action.with_name(n.clone()),
            None => action,
        })
    }
}

impl fmt::Display for LinearAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (dim {}, {} Lie generators, section dim {}, Weyl group of order {})",
            self.name.as_deref().unwrap_or("action"),
            self.dimension(),
            self.lie_generators.len(),
            self.section_dimension(),
            self.weyl.order()
        )
    }
}

/// Convenience map from `(p, d)` to the dimension of basic forms.
pub fn basic_dimensions(action: &LinearAction, max_p: usize, cap: u32) -> Result<BTreeMap<(usize, u32), usize>> {
    let mut out = BTreeMap::new();
    for p in 0..=max_p {
        for d in 0..=cap {
            out.insert((p, d), basic_forms(action, p, d)?.len());
        }
    }
    Ok(out)
}
