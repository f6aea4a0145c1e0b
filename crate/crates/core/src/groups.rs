//! Finite matrix groups over the rationals and their reflections.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MatrixQ;
use crate::poly::MultiPoly;
use crate::rational::Rational;

pub const DEFAULT_BOUND: usize = 10_000;

/// A reflection `σ` in the group with its hyperplane functional `ℓ`,
/// normalized so that its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    pub element: usize,
    pub functional: Vec<Rational>,
}

impl Reflection {
    /// `ℓ` as a linear polynomial.
    pub fn linear_form(&self) -> MultiPoly {
        MultiPoly::linear(&self.functional)
    }
}

#[derive(Debug, Clone)]
pub struct ReflectionGroup {
    n: usize,
    elements: Vec<MatrixQ>,
    dets: Vec<Rational>,
    generators: Vec<MatrixQ>,
    reflections: Vec<Reflection>,
    form: MatrixQ,
    name: Option<String>,
}

/// `counts[i]` is the number of elements whose fixed space has dimension `n - i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedDimCensus {
    pub counts: Vec<usize>,
}

impl ReflectionGroup {
    /// Closes `generators` under multiplication.
    ///
    /// Elements are enumerated breadth-first by left multiplication with the
    /// generators, so the element order is deterministic. The invariant form is
    /// the group average of `σᵀσ`.
    pub fn generate(generators: &[MatrixQ], bound: usize) -> Result<Self> {
        let n = match generators.first() {
            Some(g) => g.rows(),
            None => return Err(Error::Input("at least one generator is required".into())),
        };
        for g in generators {
            if !g.is_square() || g.rows() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator of shape {}x{} in dimension {n}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.det()?.is_zero() {
                return Err(Error::Singular);
            }
        }
        let id = MatrixQ::identity(n);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<MatrixQ, usize> = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let prod = g.mul(&elements[i])?;
                if index.contains_key(&prod) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(Error::ClosureExceedsBound(bound));
                }
                index.insert(prod.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
        Self::from_elements(elements, generators.to_vec())
    }

    fn from_elements(elements: Vec<MatrixQ>, generators: Vec<MatrixQ>) -> Result<Self> {
        let n = elements[0].rows();
        let dets = elements.iter().map(MatrixQ::det).collect::<Result<Vec<_>>>()?;
        let id = MatrixQ::identity(n);
        let mut reflections = Vec::new();
        for (k, s) in elements.iter().enumerate() {
            if !dets[k].is_zero() && dets[k] == -Rational::one() && s.mul(s)?.is_identity() {
                let diff = s.sub(&id)?;
                if diff.rank() == 1 {
                    reflections.push(Reflection {
                        element: k,
                        functional: normalized_row(&diff),
                    });
                }
            }
        }
        let mut form = MatrixQ::zeros(n, n);
        for s in &elements {
            form = form.add(&s.transpose().mul(s)?)?;
        }
        let form = form.scale(&Rational::from_bigints(1.into(), (elements.len() as i64).into()));
        if !form.is_positive_definite() {
            return Err(Error::NoInvariantForm);
        }
        Ok(ReflectionGroup {
            n,
            elements,
            dets,
            generators,
            reflections,
            form,
            name: None,
        })
    }

    /// The group `{I}` acting on `Q^n`.
    pub fn trivial(n: usize) -> Self {
        Self::from_elements(vec![MatrixQ::identity(n)], Vec::new()).expect("identity group")
    }

    pub fn builtin(family: BuiltinFamily) -> Result<Self> {
        let gens = family.generators()?;
        let mut g = if gens.is_empty() {
            Self::trivial(family.dimension())
        } else {
            Self::generate(&gens, DEFAULT_BOUND)?
        };
        g.name = Some(family.to_string());
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MatrixQ] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MatrixQ {
        &self.elements[i]
    }

    pub fn det(&self, i: usize) -> &Rational {
        &self.dets[i]
    }

    pub fn generators(&self) -> &[MatrixQ] {
        &self.generators
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    /// Positive-definite form preserved by every element.
    pub fn form(&self) -> &MatrixQ {
        &self.form
    }

    pub fn index_of(&self, m: &MatrixQ) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// `f ∘ σ` for every element `σ`.
    pub fn orbit_images(&self, f: &MultiPoly) -> Result<Vec<MultiPoly>> {
        self.elements.iter().map(|s| f.compose_linear(s)).collect()
    }

    pub fn is_invariant(&self, f: &MultiPoly) -> Result<bool> {
        for s in &self.elements {
            if &f.compose_linear(s)? != f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `g ∘ σ = det(σ⁻¹) g` for every element.
    pub fn is_anti_invariant(&self, g: &MultiPoly) -> Result<bool> {
        for (s, d) in self.elements.iter().zip(&self.dets) {
            if g.compose_linear(s)? != g.scale(&d.recip()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn census(&self) -> FixedDimCensus {
        let id = MatrixQ::identity(self.n);
        let mut counts = vec![0; self.n + 1];
        for s in &self.elements {
            let r = s.sub(&id).expect("square").rank();
            counts[r] += 1;
        }
        FixedDimCensus { counts }
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            name: self.name.clone(),
            dimension: self.n,
            order: self.order(),
            generators: self.generators.clone(),
            reflections: self
                .reflections
                .iter()
                .map(|r| ReflectionSummary {
                    element: r.element,
                    functional: r.functional.clone(),
                    hyperplane: r.linear_form().to_string(),
                })
                .collect(),
            census: self.census().counts,
            form: self.form.clone(),
        }
    }
}

/// Scales the first nonzero row so its first nonzero entry is 1.
fn normalized_row(m: &MatrixQ) -> Vec<Rational> {
    let (r, _) = m.rref();
    let row = r.row(0).to_vec();
    let lead = row.iter().find(|e| !e.is_zero()).cloned().expect("rank one");
    let inv = lead.recip();
    row.iter().map(|e| e * &inv).collect()
}

pub fn generate_group(generators: &[MatrixQ], bound: usize) -> Result<ReflectionGroup> {
    ReflectionGroup::generate(generators, bound)
}

pub fn builtin_group(family: BuiltinFamily) -> Result<ReflectionGroup> {
    ReflectionGroup::builtin(family)
}

pub fn fixed_dim_census(w: &ReflectionGroup) -> FixedDimCensus {
    w.census()
}

/// Built-in groups. `Symmetric(n)` is `S_n` permuting coordinates of `Q^n`
/// (the Weyl group `A_{n-1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinFamily {
    Symmetric(usize),
    Hyperoctahedral(usize),
    Demihyperoctahedral(usize),
    CyclicZ4,
}

impl BuiltinFamily {
    pub fn dimension(&self) -> usize {
        match *self {
            BuiltinFamily::Symmetric(n) | BuiltinFamily::Hyperoctahedral(n) | BuiltinFamily::Demihyperoctahedral(n) => n,
            BuiltinFamily::CyclicZ4 => 2,
        }
    }

    pub fn generators(&self) -> Result<Vec<MatrixQ>> {
        let transpositions = |n: usize| -> Vec<MatrixQ> {
            (0..n.saturating_sub(1))
                .map(|i| {
                    let mut m = MatrixQ::identity(n);
                    m.set(i, i, Rational::zero());
                    m.set(i + 1, i + 1, Rational::zero());
                    m.set(i, i + 1, Rational::one());
                    m.set(i + 1, i, Rational::one());
                    m
                })
                .collect()
        };
        match *self {
            BuiltinFamily::Symmetric(n) if n >= 1 => Ok(transpositions(n)),
            BuiltinFamily::Hyperoctahedral(n) if n >= 1 => {
                let mut g = transpositions(n);
                let mut flip = MatrixQ::identity(n);
                flip.set(n - 1, n - 1, -Rational::one());
                g.push(flip);
                Ok(g)
            }
            BuiltinFamily::Demihyperoctahedral(n) if n >= 2 => {
                let mut g = transpositions(n);
                let mut m = MatrixQ::identity(n);
                m.set(n - 2, n - 2, Rational::zero());
                m.set(n - 1, n - 1, Rational::zero());
                m.set(n - 2, n - 1, -Rational::one());
                m.set(n - 1, n - 2, -Rational::one());
                g.push(m);
                Ok(g)
            }
            BuiltinFamily::CyclicZ4 => Ok(vec![MatrixQ::from_i64(2, 2, &[0, -1, 1, 0])]),
            other => Err(Error::UnsupportedFamily(format!("{other} needs a larger rank"))),
        }
    }
}

impl fmt::Display for BuiltinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinFamily::Symmetric(n) => write!(f, "S{n}"),
            BuiltinFamily::Hyperoctahedral(n) => write!(f, "B{n}"),
            BuiltinFamily::Demihyperoctahedral(n) => write!(f, "D{n}"),
            BuiltinFamily::CyclicZ4 => write!(f, "Z4"),
        }
    }
}

/// Accepts `S<n>` (symmetric group on `Q^n`), `A<n>` (Weyl group `A_n`,
/// i.e. `S_{n+1}` on `Q^{n+1}`), `B<n>`, `D<n>` and `Z4`.
impl FromStr for BuiltinFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("z4") {
            return Ok(BuiltinFamily::CyclicZ4);
        }
        let bad = || Error::UnsupportedFamily(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match head {
            'S' => BuiltinFamily::Symmetric(rank),
            'A' => BuiltinFamily::Symmetric(rank + 1),
            'B' => BuiltinFamily::Hyperoctahedral(rank),
            'D' => BuiltinFamily::Demihyperoctahedral(rank),
            _ => return Err(bad()),
        };
        match family {
            BuiltinFamily::Symmetric(0) | BuiltinFamily::Hyperoctahedral(0) => Err(bad()),
            BuiltinFamily::Demihyperoctahedral(r) if r < 2 => Err(bad()),
            f => Ok(f),
        }
    }
}

/// A matrix written either as nested rows or as a flat row-major list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Rows(Vec<Vec<Rational>>),
    Flat(Vec<Rational>),
}

impl MatrixSpec {
    pub fn to_matrix(&self, dimension: usize) -> Result<MatrixQ> {
        let m = match self {
            MatrixSpec::Rows(rows) => MatrixQ::from_rows(rows)?,
            MatrixSpec::Flat(v) => MatrixQ::from_entries(dimension, dimension, v.clone())?,
        };
        if m.rows() != dimension || m.cols() != dimension {
            return Err(Error::DimensionMismatch(format!(
                "expected a {dimension}x{dimension} matrix, found {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }
}

/// Group input file.
#[derive(Debug, Clone, Deserialize)]
pub struct GroupFile {
    pub dimension: usize,
    pub generators: Vec<MatrixSpec>,
    #[serde(default)]
    pub bound: Option<usize>,
    #[serde(default)]
    pub name: Option<String>,
}

impl GroupFile {
    pub fn build(&self) -> Result<ReflectionGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_matrix(self.dimension))
            .collect::<Result<Vec<_>>>()?;
        let group = if gens.is_empty() {
            ReflectionGroup::trivial(self.dimension)
        } else {
            ReflectionGroup::generate(&gens, self.bound.unwrap_or(DEFAULT_BOUND))?
        };
        Ok(match &self.name {
            Some(n) => group.with_name(n.clone()),
            None => group,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("group file: {e}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReflectionSummary {
    pub element: usize,
    pub functional: Vec<Rational>,
    pub hyperplane: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub name: Option<String>,
    pub dimension: usize,
    pub order: usize,
    pub generators: Vec<MatrixQ>,
    pub reflections: Vec<ReflectionSummary>,
    pub census: Vec<usize>,
    pub form: MatrixQ,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn swap_group() {
        let g = generate_group(&[MatrixQ::from_i64(2, 2, &[0, 1, 1, 0])], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.num_reflections(), 1);
        assert_eq!(g.reflections()[0].functional, vec![q(1), q(-1)]);
        assert_eq!(g.reflections()[0].linear_form().to_string(), "x1 - x2");
    }

    #[test]
    fn b2_from_generators() {
        let g = generate_group(
            &[
                MatrixQ::from_i64(2, 2, &[0, 1, 1, 0]),
                MatrixQ::from_i64(2, 2, &[1, 0, 0, -1]),
            ],
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.num_reflections(), 4);
        assert_eq!(fixed_dim_census(&g).counts, vec![1, 4, 3]);
    }

    #[test]
    fn rotation_has_no_reflections() {
        let g = builtin_group(BuiltinFamily::CyclicZ4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.num_reflections(), 0);
    }

    #[test]
    fn builtin_orders() {
        let cases = [
            ("S3", 6, 3, vec![1, 3, 2, 0]),
            ("B3", 48, 9, vec![1, 9, 23, 15]),
            ("D4", 192, 12, vec![1, 12, 50, 84, 45]),
            ("S4", 24, 6, vec![1, 6, 11, 6, 0]),
        ];
        for (name, order, refl, census) in cases {
            let g = builtin_group(name.parse().unwrap()).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.num_reflections(), refl, "{name}");
            assert_eq!(g.census().counts, census, "{name}");
        }
    }

    #[test]
    fn trivial_census() {
        assert_eq!(ReflectionGroup::trivial(3).census().counts, vec![1, 0, 0, 0]);
    }

    #[test]
    fn closure_bound_and_bad_generators() {
        // infinite order shear
        let shear = MatrixQ::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(matches!(generate_group(&[shear], 50), Err(Error::ClosureExceedsBound(50))));
        let sing = MatrixQ::from_i64(2, 2, &[1, 0, 0, 0]);
        assert!(matches!(generate_group(&[sing], 50), Err(Error::Singular)));
    }

    #[test]
    fn family_names() {
        assert_eq!("A2".parse::<BuiltinFamily>().unwrap(), BuiltinFamily::Symmetric(3));
        assert_eq!("b3".parse::<BuiltinFamily>().unwrap(), BuiltinFamily::Hyperoctahedral(3));
        assert!("D1".parse::<BuiltinFamily>().is_err());
        assert!("E8".parse::<BuiltinFamily>().is_err());
        assert!(BuiltinFamily::Demihyperoctahedral(1).generators().is_err());
    }

    #[test]
    fn group_file_formats() {
        let nested = r#"{"dimension": 2, "generators": [[["0","1"],["1","0"]]]}"#;
        let flat = r#"{"dimension": 2, "generators": [["0","1","1","0"]], "bound": 10}"#;
        for text in [nested, flat] {
            let g = GroupFile::from_json(text).unwrap().build().unwrap();
            assert_eq!(g.order(), 2);
        }
        let bad = r#"{"dimension": 3, "generators": [["0","1","1","0"]]}"#;
        assert!(GroupFile::from_json(bad).unwrap().build().is_err());
    }
}
