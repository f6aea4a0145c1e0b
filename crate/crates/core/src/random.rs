//! Seeded random polynomials, forms and Cartan elements with small rational
//! coefficients. Output depends only on the seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{j, CartanElement, EquivariantPool};
use crate::error::Result;
use crate::forms::{index_tuples, PolyForm};
use crate::groups::ReflectionGroup;
use crate::invariants::{reynolds, reynolds_form, FundamentalSystem};
use crate::polar::{basic_forms, LinearAction};
use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator in `[-5, 5]` and denominator in `[1, 3]`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-5..=5);
        if p != 0 {
            return Rational::new(p, rng.gen_range(1..=3));
        }
    }
}

/// Sum of up to `terms` random monomials of degree at most `max_degree`.
pub fn poly<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, terms: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let monos = Monomial::all_of_degree(nvars, d);
        let m = monos.choose(rng).expect("nonempty").clone();
        out.add_term(m, &rational(rng));
    }
    out
}

/// Random `p`-form whose coefficients have degree at most `max_degree`.
pub fn form<R: Rng>(rng: &mut R, nvars: usize, p: usize, max_degree: u32, terms: usize) -> PolyForm {
    let tuples = index_tuples(nvars, p);
    let mut acc: BTreeMap<Vec<usize>, MultiPoly> = BTreeMap::new();
    for _ in 0..terms {
        let idx = tuples.choose(rng).expect("p <= n").clone();
        let c = poly(rng, nvars, max_degree, 1);
        let e = acc.entry(idx).or_insert_with(|| MultiPoly::zero(nvars));
        *e = &*e + &c;
    }
    PolyForm::from_terms(nvars, p, acc).expect("valid tuples")
}

pub fn invariant_poly<R: Rng>(rng: &mut R, w: &ReflectionGroup, max_degree: u32) -> Result<MultiPoly> {
    reynolds(w, &poly(rng, w.dimension(), max_degree, 3))
}

/// `J · h` for a random invariant `h`.
pub fn anti_invariant<R: Rng>(rng: &mut R, f: &FundamentalSystem, max_degree: u32) -> Result<MultiPoly> {
    let h = invariant_poly(rng, f.group(), max_degree)?;
    Ok(f.jacobian() * &h)
}

/// Reynolds average of a random `p`-form; retries a few times to avoid zero.
pub fn invariant_form<R: Rng>(rng: &mut R, w: &ReflectionGroup, p: usize, max_degree: u32) -> Result<PolyForm> {
    let n = w.dimension();
    let mut last = PolyForm::zero(n, p);
    for _ in 0..8 {
        last = reynolds_form(w, &form(rng, n, p, max_degree, 3))?;
        if !last.is_zero() {
            break;
        }
    }
    Ok(last)
}

/// Cached bases of basic forms for `(p, d)` with `d ≤ max_degree`, from which
/// random basic forms are drawn as rational combinations.
#[derive(Debug, Clone)]
pub struct BasicFormPool {
    bases: BTreeMap<(usize, u32), Vec<PolyForm>>,
}

impl BasicFormPool {
    pub fn new(action: &LinearAction, max_form_degree: usize, max_degree: u32) -> Result<Self> {
        let mut bases = BTreeMap::new();
        for p in 0..=max_form_degree.min(action.dimension()) {
            for d in 0..=max_degree {
                let b = basic_forms(action, p, d)?;
                if !b.is_empty() {
                    bases.insert((p, d), b);
                }
            }
        }
        Ok(BasicFormPool { bases })
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn dimensions(&self) -> BTreeMap<(usize, u32), usize> {
        self.bases.iter().map(|(k, v)| (*k, v.len())).collect()
    }

    /// A random basic form of a random available form degree.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> PolyForm {
        let keys: Vec<usize> = self.bases.keys().map(|k| k.0).collect();
        let p = *keys.choose(rng).expect("nonempty pool");
        self.sample_degree(rng, p).expect("degree present")
    }

    /// Random combination of basis elements of form degree `p` across all
    /// coefficient degrees, or `None` when there are none.
    pub fn sample_degree<R: Rng>(&self, rng: &mut R, p: usize) -> Option<PolyForm> {
        let all: Vec<&PolyForm> = self
            .bases
            .iter()
            .filter(|(k, _)| k.0 == p)
            .flat_map(|(_, v)| v.iter())
            .collect();
        let first = all.first()?;
        let mut acc = PolyForm::zero(first.nvars(), p);
        let picks = rng.gen_range(1..=all.len().min(3));
        for b in all.choose_multiple(rng, picks) {
            acc = acc.checked_add(&b.scale(&rational(rng))).expect("same degree");
        }
        Some(acc)
    }
}

/// Random equivariant element of Cartan degree `q`: a sum of products of pool
/// generators, each times a random invariant polynomial.
pub fn equivariant_element<R: Rng>(rng: &mut R, action: &LinearAction, pool: &EquivariantPool, q: usize) -> Result<CartanElement> {
    let n = action.dimension();
    let r = action.lie_generators().len();
    for _ in 0..10 {
        let e = equivariant_attempt(rng, action, pool, q)?;
        if !e.is_zero() {
            return Ok(e);
        }
    }
    Ok(CartanElement::zero(n, r, q))
}

fn equivariant_attempt<R: Rng>(rng: &mut R, action: &LinearAction, pool: &EquivariantPool, q: usize) -> Result<CartanElement> {
    let n = action.dimension();
    let r = action.lie_generators().len();
    let mut out = CartanElement::zero(n, r, q);
    for _ in 0..3 {
        let Some(mut prod) = random_product(rng, pool, n, r, q)? else {
            continue;
        };
        let mut coeff = MultiPoly::constant(n, rational(rng));
        if !pool.invariants.is_empty() && rng.gen_bool(0.5) {
            let f = pool.invariants.choose(rng).expect("nonempty");
            coeff = &coeff + &f.scale(&rational(rng));
        }
        prod = j(r, &PolyForm::function(coeff)).wedge(&prod)?;
        out = out.checked_add(&prod)?;
    }
    Ok(out)
}

fn random_product<R: Rng>(rng: &mut R, pool: &EquivariantPool, n: usize, r: usize, q: usize) -> Result<Option<CartanElement>> {
    let mut acc = j(r, &PolyForm::function(MultiPoly::one(n)));
    let mut left = q;
    for _ in 0..6 {
        if left == 0 {
            return Ok(Some(acc));
        }
        let fits: Vec<&CartanElement> = pool.generators.iter().filter(|g| g.degree() <= left).collect();
        let Some(g) = fits.choose(rng) else { break };
        let next = acc.wedge(g)?;
        left -= g.degree();
        acc = next;
    }
    Ok(if left == 0 { Some(acc) } else { None })
}
