//! Polynomial differential forms on a coordinate space.
//!
//! A [`PolyForm`] of degree `p` on `Q^n` is a finite sum of terms
//! `f_I dx_{i1}^...^dx_{ip}` with `i1 < ... < ip` (indices are zero-based in
//! code, printed one-based). Terms are normalized when they are built, so a
//! stored index tuple is always strictly increasing and its coefficient nonzero.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::MatrixQ;
use crate::poly::{default_var_name, MultiPoly};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyForm {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, MultiPoly>,
}

/// Sign of the permutation that sorts `idx`, or `None` if an index repeats.
pub fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// All strictly increasing index tuples of length `p` from `0..n`.
pub fn index_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

impl PolyForm {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        PolyForm {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A polynomial viewed as a 0-form.
    pub fn function(f: MultiPoly) -> Self {
        let mut out = PolyForm::zero(f.nvars(), 0);
        if !f.is_zero() {
            out.terms.insert(Vec::new(), f);
        }
        out
    }

    /// `coeff * dx_{idx[0]} ^ ... ^ dx_{idx[p-1]}` for arbitrary (unsorted) indices.
    pub fn monomial_form(nvars: usize, idx: &[usize], coeff: MultiPoly) -> Result<Self> {
        if coeff.nvars() != nvars {
            return Err(Error::VariableMismatch(nvars, coeff.nvars()));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= nvars) {
            return Err(Error::DimensionMismatch(format!(
                "differential dx{} on a space with {nvars} coordinates",
                bad + 1
            )));
        }
        let mut out = PolyForm::zero(nvars, idx.len());
        if let Some((sorted, sign)) = sort_sign(idx) {
            let c = if sign < 0 { -coeff } else { coeff };
            out.add_term(sorted, c);
        }
        Ok(out)
    }

    /// The constant form `dx_I`.
    pub fn basis(nvars: usize, idx: &[usize]) -> Self {
        PolyForm::monomial_form(nvars, idx, MultiPoly::one(nvars)).expect("valid index tuple")
    }

    /// Builds from terms with sorted indices; zero coefficients are dropped.
    pub fn from_terms(
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, MultiPoly)>,
    ) -> Result<Self> {
        let mut out = PolyForm::zero(nvars, degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DimensionMismatch(format!(
                    "term of degree {} in a {degree}-form",
                    idx.len()
                )));
            }
            out = out.checked_add(&PolyForm::monomial_form(nvars, &idx, c)?)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, idx: Vec<usize>, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, idx: &[usize]) -> MultiPoly {
        self.terms.get(idx).cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    /// The function underlying a 0-form.
    pub fn as_function(&self) -> Option<MultiPoly> {
        (self.degree == 0).then(|| self.coefficient(&[]))
    }

    /// Coefficient of `dx_1^...^dx_n` for a top-degree form.
    pub fn top_coefficient(&self) -> MultiPoly {
        if self.degree != self.nvars {
            return MultiPoly::zero(self.nvars);
        }
        let idx: Vec<usize> = (0..self.nvars).collect();
        self.coefficient(&idx)
    }

    /// Largest total degree among the coefficients (`-1` for the zero form).
    pub fn coefficient_degree(&self) -> i64 {
        self.terms.values().map(MultiPoly::degree).max().unwrap_or(-1)
    }

    fn check_same(&self, other: &PolyForm) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch(format!(
                "adding a {}-form to a {}-form",
                other.degree, self.degree
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PolyForm) -> Result<PolyForm> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PolyForm) -> Result<PolyForm> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> PolyForm {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> PolyForm {
        if c.is_zero() {
            return PolyForm::zero(self.nvars, self.degree);
        }
        PolyForm {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(i, f)| (i.clone(), f.scale(c))).collect(),
        }
    }

    /// Multiplication by a function.
    pub fn mul_function(&self, f: &MultiPoly) -> Result<PolyForm> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, f.nvars()));
        }
        let mut out = PolyForm::zero(self.nvars, self.degree);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c * f);
        }
        Ok(out)
    }

    /// Exterior product, graded-commutative with signs from merging index tuples.
    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        let mut out = PolyForm::zero(self.nvars, self.degree + other.degree);
        if self.degree + other.degree > self.nvars {
            return Ok(out);
        }
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                if let Some((sorted, sign)) = sort_sign(&idx) {
                    let c = a * b;
                    out.add_term(sorted, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn exterior_d(&self) -> PolyForm {
        let mut out = PolyForm::zero(self.nvars, self.degree + 1);
        for (idx, c) in &self.terms {
            for k in 0..self.nvars {
                if idx.contains(&k) {
                    continue;
                }
                let dc = c.partial(k);
                if dc.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(k);
                full.extend_from_slice(idx);
                let (sorted, sign) = sort_sign(&full).expect("distinct indices");
                out.add_term(sorted, if sign < 0 { -dc } else { dc });
            }
        }
        out
    }

    /// Interior product `i_v self`.
    pub fn interior(&self, v: &PolyVectorField) -> Result<PolyForm> {
        if v.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, v.nvars()));
        }
        if self.degree == 0 {
            return Err(Error::InteriorOfFunction);
        }
        let mut out = PolyForm::zero(self.nvars, self.degree - 1);
        for (idx, c) in &self.terms {
            for (k, &i) in idx.iter().enumerate() {
                let vi = &v.components[i];
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(k);
                let t = c * vi;
                out.add_term(rest, if k % 2 == 1 { -t } else { t });
            }
        }
        Ok(out)
    }

    /// Lie derivative `L_v self = i_v d self + d i_v self`; directional
    /// derivative on 0-forms.
    pub fn lie_derivative(&self, v: &PolyVectorField) -> Result<PolyForm> {
        if v.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, v.nvars()));
        }
        if self.degree == 0 {
            return Ok(PolyForm::function(v.apply(&self.coefficient(&[]))));
        }
        let a = self.exterior_d().interior(v)?;
        let b = self.interior(v)?.exterior_d();
        a.checked_add(&b)
    }

    /// Pullback along the polynomial map whose components are `phi`
    /// (one component per coordinate of the space `self` lives on).
    pub fn pullback(&self, phi: &[MultiPoly]) -> Result<PolyForm> {
        if phi.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: phi.len(),
            });
        }
        let src = match phi.first() {
            Some(p) => p.nvars(),
            None => 0,
        };
        if let Some(bad) = phi.iter().find(|p| p.nvars() != src) {
            return Err(Error::VariableMismatch(src, bad.nvars()));
        }
        let dphi: Vec<PolyForm> = phi.iter().map(|f| PolyForm::function(f.clone()).exterior_d()).collect();
        let mut out = PolyForm::zero(src, self.degree);
        for (idx, c) in &self.terms {
            let mut t = PolyForm::function(c.substitute(phi)?);
            for &i in idx {
                t = t.wedge(&dphi[i])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Pullback along the linear map `x -> M x` (`M` square of size `nvars`).
    pub fn pullback_linear(&self, m: &MatrixQ) -> Result<PolyForm> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix acting on {} coordinates",
                m.rows(),
                m.cols(),
                self.nvars
            )));
        }
        let n = self.nvars;
        let mut out = PolyForm::zero(n, self.degree);
        if let Some(perm) = m.monomial_pattern() {
            for (idx, c) in &self.terms {
                let mut coeff = c.compose_linear(m)?;
                let mut image = Vec::with_capacity(idx.len());
                for &i in idx {
                    coeff = coeff.scale(m.get(i, perm[i]));
                    image.push(perm[i]);
                }
                let (sorted, sign) = sort_sign(&image).expect("permutation image");
                out.add_term(sorted, if sign < 0 { -coeff } else { coeff });
            }
            return Ok(out);
        }
        let phi: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::linear(m.row(i))).collect();
        self.pullback(&phi)
    }

    /// Value of every coefficient at `point`, keyed by index tuple.
    pub fn eval_coefficients(&self, point: &[Rational]) -> BTreeMap<Vec<usize>, Rational> {
        self.terms
            .iter()
            .map(|(i, c)| (i.clone(), c.eval(point)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    pub fn to_string_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        if self.degree == 0 {
            return self.coefficient(&[]).to_string_with(names);
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.terms {
            let d = idx
                .iter()
                .map(|&i| format!("d{}", names(i)))
                .collect::<Vec<_>>()
                .join("^");
            if c.is_constant() && c.constant_term().is_one() {
                parts.push(d);
            } else {
                parts.push(format!("({}) {}", c.to_string_with(names), d));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_name))
    }
}

impl fmt::Debug for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyForm[{}; deg {}]({})", self.nvars, self.degree, self)
    }
}

impl From<MultiPoly> for PolyForm {
    fn from(f: MultiPoly) -> Self {
        PolyForm::function(f)
    }
}

/// Vector field with polynomial components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVectorField {
    components: Vec<MultiPoly>,
}

impl PolyVectorField {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::VariableMismatch(n, bad.nvars()));
        }
        Ok(PolyVectorField { components })
    }

    pub fn zero(n: usize) -> Self {
        PolyVectorField {
            components: vec![MultiPoly::zero(n); n],
        }
    }

    /// The linear field `x -> A x`.
    pub fn linear(a: &MatrixQ) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch("linear vector field needs a square matrix".into()));
        }
        Ok(PolyVectorField {
            components: (0..a.rows()).map(|i| MultiPoly::linear(a.row(i))).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Directional derivative `v(f) = sum v_i df/dx_i`.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(f.nvars());
        for (i, vi) in self.components.iter().enumerate() {
            if !vi.is_zero() {
                out = &out + &(vi * &f.partial(i));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyVectorField {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &PolyVectorField) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableMismatch(self.nvars(), other.nvars()));
        }
        Ok(PolyVectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

pub fn wedge(a: &PolyForm, b: &PolyForm) -> Result<PolyForm> {
    a.wedge(b)
}

pub fn exterior_d(a: &PolyForm) -> PolyForm {
    a.exterior_d()
}

pub fn interior_product(v: &PolyVectorField, a: &PolyForm) -> Result<PolyForm> {
    a.interior(v)
}

pub fn lie_derivative(v: &PolyVectorField, a: &PolyForm) -> Result<PolyForm> {
    a.lie_derivative(v)
}

pub fn pullback(phi: &[MultiPoly], a: &PolyForm) -> Result<PolyForm> {
    a.pullback(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form, parse_poly};

    fn f(s: &str) -> PolyForm {
        parse_form(s, 2).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, 2).unwrap()
    }

    fn rot() -> PolyVectorField {
        PolyVectorField::new(vec![p("-x2"), p("x1")]).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(f("dx1").wedge(&f("dx2")).unwrap(), f("dx1^dx2"));
        assert_eq!(f("dx2").wedge(&f("dx1")).unwrap(), f("-dx1^dx2"));
        assert_eq!(f("x1 dx1").wedge(&f("x2 dx2")).unwrap(), f("(x1*x2) dx1^dx2"));
        assert!(f("dx1").wedge(&f("dx1")).unwrap().is_zero());
    }

    #[test]
    fn d_examples() {
        assert_eq!(f("x1 dx2").exterior_d(), f("dx1^dx2"));
        assert_eq!(f("x1^2 + x2^2").exterior_d(), f("2*x1 dx1 + 2*x2 dx2"));
    }

    #[test]
    fn interior_examples() {
        let v = rot();
        assert_eq!(f("dx1").interior(&v).unwrap(), f("-x2"));
        assert_eq!(f("dx1^dx2").interior(&v).unwrap(), f("-x1 dx1 - x2 dx2"));
        assert!(f("x1 dx1 + x2 dx2").interior(&v).unwrap().is_zero());
        assert!(matches!(f("x1").interior(&v), Err(Error::InteriorOfFunction)));
    }

    #[test]
    fn lie_examples() {
        assert!(f("x1^2 + x2^2").lie_derivative(&rot()).unwrap().is_zero());
        let euler = PolyVectorField::new(vec![p("x1"), p("x2")]).unwrap();
        assert_eq!(f("x1^2").lie_derivative(&euler).unwrap(), f("2*x1^2"));
    }

    #[test]
    fn pullback_examples() {
        let swap = [p("x2"), p("x1")];
        assert_eq!(f("dx1^dx2").pullback(&swap).unwrap(), f("-dx1^dx2"));
        let t = parse_poly("x1", 1).unwrap();
        let axis = [t.clone(), MultiPoly::zero(1)];
        let radial = f("x1 dx1 + x2 dx2");
        assert_eq!(radial.pullback(&axis).unwrap(), parse_form("x1 dx1", 1).unwrap());
        assert!(matches!(radial.pullback(&[t]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn linear_pullback_fast_path_agrees() {
        let w = f("(x1^2*x2 - 3) dx1 + x2 dx2");
        for m in [
            MatrixQ::from_i64(2, 2, &[0, -1, 1, 0]),
            MatrixQ::from_i64(2, 2, &[2, 1, 1, 1]),
        ] {
            let phi: Vec<MultiPoly> = (0..2).map(|i| MultiPoly::linear(m.row(i))).collect();
            assert_eq!(w.pullback_linear(&m).unwrap(), w.pullback(&phi).unwrap());
        }
    }

    #[test]
    fn sort_sign_parity() {
        assert_eq!(sort_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_sign(&[1, 1]), None);
        assert_eq!(index_tuples(4, 2).len(), 6);
        assert_eq!(index_tuples(2, 3).len(), 0);
    }
}
