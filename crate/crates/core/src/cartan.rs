//! The Cartan complex of a linear action: polynomial maps `α: 𝔤 → Ω(V)`,
//! stored by their components in the dual coordinates `X_1..X_r` of the Lie
//! algebra basis. An element of Cartan degree `q` has a `(q - 2k)`-form as the
//! coefficient of every `X`-monomial of degree `k`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::PolyForm;
use crate::poly::{Monomial, MultiPoly};
use crate::polar::{is_basic, LinearAction};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanElement {
    nvars: usize,
    lie_dim: usize,
    degree: usize,
    components: BTreeMap<Monomial, PolyForm>,
}

impl CartanElement {
    pub fn zero(nvars: usize, lie_dim: usize, degree: usize) -> Self {
        CartanElement {
            nvars,
            lie_dim,
            degree,
            components: BTreeMap::new(),
        }
    }

    /// Adds `X^β ⊗ ω`. The form degree must be `degree - 2|β|`.
    pub fn add_component(&mut self, beta: Monomial, omega: PolyForm) -> Result<()> {
        if beta.0.len() != self.lie_dim {
            return Err(Error::VariableMismatch(self.lie_dim, beta.0.len()));
        }
        if omega.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, omega.nvars()));
        }
        let k = 2 * beta.degree() as usize;
        if k + omega.degree() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "component of polynomial degree {} and form degree {} in Cartan degree {}",
                beta.degree(),
                omega.degree(),
                self.degree
            )));
        }
        if omega.is_zero() {
            return Ok(());
        }
        let sum = match self.components.remove(&beta) {
            Some(old) => old.checked_add(&omega)?,
            None => omega,
        };
        if !sum.is_zero() {
            self.components.insert(beta, sum);
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<Monomial, PolyForm> {
        &self.components
    }

    pub fn component(&self, beta: &Monomial) -> Option<&PolyForm> {
        self.components.get(beta)
    }

    pub fn checked_add(&self, other: &CartanElement) -> Result<CartanElement> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (b, w) in &other.components {
            out.add_component(b.clone(), w.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> CartanElement {
        let mut out = CartanElement::zero(self.nvars, self.lie_dim, self.degree);
        if c.is_zero() {
            return out;
        }
        out.components = self.components.iter().map(|(b, w)| (b.clone(), w.scale(c))).collect();
        out
    }

    /// Pointwise wedge `(α ∧ β)(X) = α(X) ∧ β(X)`.
    pub fn wedge(&self, other: &CartanElement) -> Result<CartanElement> {
        self.same_shape(other)?;
        let mut out = CartanElement::zero(self.nvars, self.lie_dim, self.degree + other.degree);
        for (b1, w1) in &self.components {
            for (b2, w2) in &other.components {
                out.add_component(b1.mul(b2), w1.wedge(w2)?)?;
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &CartanElement) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        if self.lie_dim != other.lie_dim {
            return Err(Error::DimensionMismatch(format!(
                "Lie algebra dimensions {} and {}",
                self.lie_dim, other.lie_dim
            )));
        }
        Ok(())
    }

    /// `∂α/∂X_c`, a map of Cartan degree `degree - 2`.
    fn partial(&self, c: usize) -> CartanElement {
        let mut out = CartanElement::zero(self.nvars, self.lie_dim, self.degree.saturating_sub(2));
        for (b, w) in &self.components {
            let e = b.0[c];
            if e == 0 {
                continue;
            }
            let mut nb = b.clone();
            nb.0[c] -= 1;
            out.components.insert(nb, w.scale(&Rational::from(e as i64)));
        }
        out
    }

    fn shift(&self, a: usize) -> CartanElement {
        let mut out = CartanElement::zero(self.nvars, self.lie_dim, self.degree + 2);
        for (b, w) in &self.components {
            let mut nb = b.clone();
            nb.0[a] += 1;
            out.components.insert(nb, w.clone());
        }
        out
    }
}

impl fmt::Display for CartanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = (0..self.lie_dim).map(|i| format!("X{}", i + 1)).collect();
        let mut first = true;
        for (b, w) in self.components.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let poly = MultiPoly::term(b.clone(), Rational::one());
            write!(f, "[{}] ⊗ ({w})", poly.to_string_with(&|i| names[i].clone()))?;
        }
        Ok(())
    }
}

/// `j(ω) = 1 ⊗ ω`.
pub fn j(lie_dim: usize, omega: &PolyForm) -> CartanElement {
    let mut out = CartanElement::zero(omega.nvars(), lie_dim, omega.degree());
    out.add_component(Monomial::one(lie_dim), omega.clone()).expect("degree 0 in X");
    out
}

/// The component of polynomial degree zero in `X`, i.e. `α(0)`.
pub fn ev0(alpha: &CartanElement) -> PolyForm {
    alpha
        .component(&Monomial::one(alpha.lie_dim))
        .cloned()
        .unwrap_or_else(|| PolyForm::zero(alpha.nvars, alpha.degree))
}

fn check_action(action: &LinearAction, alpha: &CartanElement) -> Result<()> {
    if alpha.nvars != action.dimension() {
        return Err(Error::VariableMismatch(action.dimension(), alpha.nvars));
    }
    if alpha.lie_dim != action.lie_generators().len() {
        return Err(Error::DimensionMismatch(format!(
            "element over a Lie algebra of dimension {} for an action with {} generators",
            alpha.lie_dim,
            action.lie_generators().len()
        )));
    }
    Ok(())
}

/// `(d_𝔤 α)(X) = d(α(X)) - i_{ζ_X} α(X)`.
pub fn cartan_d(action: &LinearAction, alpha: &CartanElement) -> Result<CartanElement> {
    check_action(action, alpha)?;
    let fields = action.fields();
    let mut out = CartanElement::zero(alpha.nvars, alpha.lie_dim, alpha.degree + 1);
    for (b, w) in &alpha.components {
        out.add_component(b.clone(), w.exterior_d())?;
        if w.degree() == 0 {
            continue;
        }
        for (a, v) in fields.iter().enumerate() {
            let mut nb = b.clone();
            nb.0[a] += 1;
            out.add_component(nb, w.interior(v)?.neg())?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceReport {
    /// One residual per Lie algebra generator, `"0"` when it vanishes.
    pub residuals: Vec<String>,
    pub equivariant: bool,
}

/// Checks `L_{ζ_b} α(X) + Dα(X)[[A_b, X]] = 0` for every generator `A_b`.
pub fn check_equivariance(action: &LinearAction, alpha: &CartanElement) -> Result<EquivarianceReport> {
    check_action(action, alpha)?;
    let fields = action.fields();
    let brackets = action.brackets()?;
    let r = alpha.lie_dim;
    let partials: Vec<CartanElement> = (0..r).map(|c| alpha.partial(c)).collect();
    let mut residuals = Vec::new();
    let mut equivariant = true;
    for (bidx, v) in fields.iter().enumerate() {
        let mut res = CartanElement::zero(alpha.nvars, r, alpha.degree);
        for (b, w) in &alpha.components {
            res.add_component(b.clone(), w.lie_derivative(v)?)?;
        }
        for a in 0..r {
            for c in 0..r {
                let k = &brackets[bidx][a][c];
                if k.is_zero() || partials[c].is_zero() {
                    continue;
                }
                res = res.checked_add(&partials[c].shift(a).scale(k))?;
            }
        }
        equivariant &= res.is_zero();
        residuals.push(res.to_string());
    }
    Ok(EquivarianceReport { residuals, equivariant })
}

/// Equivariant building blocks of the Cartan complex of an action.
#[derive(Debug, Clone)]
pub struct EquivariantPool {
    /// Invariant polynomials, Cartan degree 0.
    pub invariants: Vec<MultiPoly>,
    /// Elements of positive Cartan degree.
    pub generators: Vec<CartanElement>,
}

impl EquivariantPool {
    /// Invariant polynomials of degree ≤ `invariant_degree`, their
    /// differentials, `X ↦ B(ζ_X, ·)`, the Killing-type quadratic
    /// `X ↦ -tr(A_X A_X)`, and the volume form when it is invariant.
    pub fn new(action: &LinearAction, invariant_degree: u32) -> Result<Self> {
        let n = action.dimension();
        let gens = action.lie_generators();
        let r = gens.len();
        let mut invariants = Vec::new();
        for d in 1..=invariant_degree {
            invariants.extend(crate::polar::g_invariant_polynomials(action, d)?);
        }
        let mut generators = Vec::new();
        for f in &invariants {
            generators.push(j(r, &PolyForm::function(f.clone()).exterior_d()));
        }
        // θ(X) = B(A_X x, dx)
        let mut theta = CartanElement::zero(n, r, 3);
        for (a, m) in gens.iter().enumerate() {
            let ba = action.form().mul(m)?;
            let terms = (0..n).map(|jdx| {
                let coeffs: Vec<Rational> = ba.row(jdx).to_vec();
                (vec![jdx], MultiPoly::linear(&coeffs))
            });
            theta.add_component(Monomial::var(r, a), PolyForm::from_terms(n, 1, terms)?)?;
        }
        generators.push(theta);
        let mut kappa = CartanElement::zero(n, r, 4);
        for a in 0..r {
            for b in 0..r {
                let tr: Rational = {
                    let p = gens[a].mul(&gens[b])?;
                    (0..n).map(|i| p.get(i, i).clone()).sum()
                };
                if tr.is_zero() {
                    continue;
                }
                let beta = Monomial::var(r, a).mul(&Monomial::var(r, b));
                kappa.add_component(beta, PolyForm::function(MultiPoly::constant(n, -tr)))?;
            }
        }
        generators.push(kappa);
        let traceless = gens
            .iter()
            .all(|m| (0..n).map(|i| m.get(i, i).clone()).sum::<Rational>().is_zero());
        if traceless {
            let all: Vec<usize> = (0..n).collect();
            generators.push(j(r, &PolyForm::basis(n, &all)));
        }
        generators.retain(|g| !g.is_zero());
        Ok(EquivariantPool { invariants, generators })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CartanCheck {
    pub element: String,
    pub degree: usize,
    pub equivariant: bool,
    pub d_squared_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasicCheck {
    pub form: String,
    pub basic: bool,
    pub ev0_j_identity: bool,
    pub d_commutes_with_j: bool,
    pub d_is_basic: bool,
}

/// Checks on one equivariant element: equivariance and `d_𝔤² = 0`.
pub fn check_element(action: &LinearAction, alpha: &CartanElement) -> Result<CartanCheck> {
    let eq = check_equivariance(action, alpha)?;
    let dd = cartan_d(action, &cartan_d(action, alpha)?)?;
    Ok(CartanCheck {
        element: alpha.to_string(),
        degree: alpha.degree(),
        equivariant: eq.equivariant,
        d_squared_zero: dd.is_zero(),
    })
}

/// Checks on one basic form: `ev0(j ω) = ω`, `d_𝔤 j ω = j dω`, and `dω` basic.
pub fn check_basic_form(action: &LinearAction, omega: &PolyForm) -> Result<BasicCheck> {
    let r = action.lie_generators().len();
    let basic = is_basic(action, omega)?.basic;
    let jw = j(r, omega);
    let d = omega.exterior_d();
    Ok(BasicCheck {
        form: omega.to_string(),
        basic,
        ev0_j_identity: &ev0(&jw) == omega,
        d_commutes_with_j: cartan_d(action, &jw)? == j(r, &d),
        d_is_basic: is_basic(action, &d)?.basic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    #[test]
    fn so2_theta() {
        let so2 = LinearAction::so2();
        let pool = EquivariantPool::new(&so2, 2).unwrap();
        for g in &pool.generators {
            let c = check_element(&so2, g).unwrap();
            assert!(c.equivariant && c.d_squared_zero, "{c:?}");
        }
        // a non-equivariant element: X ⊗ dx1
        let mut bad = CartanElement::zero(2, 1, 3);
        bad.add_component(Monomial::var(1, 0), parse_form("dx1", 2).unwrap()).unwrap();
        assert!(!check_equivariance(&so2, &bad).unwrap().equivariant);
    }

    #[test]
    fn cartan_d_of_j() {
        let so2 = LinearAction::so2();
        let c = check_basic_form(&so2, &parse_form("x1 dx1 + x2 dx2", 2).unwrap()).unwrap();
        assert!(c.basic && c.ev0_j_identity && c.d_commutes_with_j && c.d_is_basic);
        // dx1 is not horizontal, so d_g j differs from j d
        let c = check_basic_form(&so2, &parse_form("dx1", 2).unwrap()).unwrap();
        assert!(!c.d_commutes_with_j);
    }

    #[test]
    fn so3_pool_is_equivariant() {
        let act = LinearAction::so3_traceless_symmetric();
        let pool = EquivariantPool::new(&act, 3).unwrap();
        assert!(pool.generators.len() >= 4);
        for g in &pool.generators {
            let c = check_element(&act, g).unwrap();
            assert!(c.equivariant && c.d_squared_zero, "{c:?}");
        }
        let prod = pool.generators[0].wedge(&pool.generators[1]).unwrap();
        assert!(check_element(&act, &prod).unwrap().equivariant);
    }

    #[test]
    fn degree_bookkeeping() {
        let mut e = CartanElement::zero(2, 1, 2);
        assert!(e.add_component(Monomial::var(1, 0), parse_form("dx1", 2).unwrap()).is_err());
        assert!(e.add_component(Monomial::var(1, 0), parse_form("x1", 2).unwrap()).is_ok());
        assert_eq!(ev0(&e), PolyForm::zero(2, 2));
    }
}
