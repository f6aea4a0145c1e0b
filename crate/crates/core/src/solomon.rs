//! Decomposition of invariant forms in the coframe `df_1, ..., df_n`.
//!
//! For a `W`-invariant `p`-form `ω` and an index tuple `I` with complement
//! `C`, `ω ∧ df_C = ε k_I dx_1∧…∧dx_n` where `ε` is the sign of the
//! permutation `(I, C)`. The coefficient `k_I` is anti-invariant, hence
//! divisible by the Jacobian, and `ω_I = k_I / J` is the invariant coefficient
//! of `df_I` in `ω`. No open sets are involved: density arguments become exact
//! divisibility.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{index_tuples, sort_sign, PolyForm};
use crate::invariants::{anti_invariant_divide, is_form_invariant, FundamentalSystem};
use crate::poly::MultiPoly;

#[derive(Debug, Clone)]
pub struct SolomonDecomposition {
    system: FundamentalSystem,
    degree: usize,
    coefficients: BTreeMap<Vec<usize>, MultiPoly>,
    signs: BTreeMap<Vec<usize>, i32>,
}

impl SolomonDecomposition {
    /// Builds a decomposition from explicit coefficients (zero-based tuples).
    pub fn from_coefficients(
        system: &FundamentalSystem,
        degree: usize,
        coefficients: BTreeMap<Vec<usize>, MultiPoly>,
    ) -> Result<Self> {
        let n = system.rank();
        if degree > n {
            return Err(Error::DimensionMismatch(format!("form degree {degree} exceeds dimension {n}")));
        }
        for (idx, c) in &coefficients {
            if idx.len() != degree || idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i >= n) {
                return Err(Error::Input(format!("invalid index tuple {idx:?}")));
            }
            if c.nvars() != n {
                return Err(Error::VariableMismatch(n, c.nvars()));
            }
        }
        let signs = index_tuples(n, degree)
            .into_iter()
            .map(|i| {
                let s = complement_sign(&i, n);
                (i, s)
            })
            .collect();
        Ok(SolomonDecomposition {
            system: system.clone(),
            degree,
            coefficients: coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            signs,
        })
    }

    pub fn system(&self) -> &FundamentalSystem {
        &self.system
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero coefficients `ω_I`, keyed by zero-based increasing tuples.
    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, MultiPoly> {
        &self.coefficients
    }

    pub fn coefficient(&self, idx: &[usize]) -> MultiPoly {
        self.coefficients
            .get(idx)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.system.rank()))
    }

    /// The sign `ε` of the permutation `(I, C)` for every tuple `I`.
    pub fn signs(&self) -> &BTreeMap<Vec<usize>, i32> {
        &self.signs
    }

    pub fn reconstruct(&self) -> PolyForm {
        reconstruct(self)
    }

    pub fn entries(&self) -> Vec<DecompositionEntry> {
        self.signs
            .iter()
            .map(|(idx, &sign)| DecompositionEntry {
                indices: idx.iter().map(|i| i + 1).collect(),
                sign,
                coefficient: self.coefficient(idx).to_string(),
            })
            .collect()
    }
}

/// One serialized row: one-based generator indices, `ε`, and `ω_I`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionEntry {
    pub indices: Vec<usize>,
    pub sign: i32,
    pub coefficient: String,
}

fn complement(idx: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !idx.contains(i)).collect()
}

fn complement_sign(idx: &[usize], n: usize) -> i32 {
    let mut full = idx.to_vec();
    full.extend(complement(idx, n));
    sort_sign(&full).expect("permutation").1
}

fn wedge_all(forms: &[PolyForm], idx: &[usize], n: usize) -> Result<PolyForm> {
    let mut acc = PolyForm::function(MultiPoly::one(n));
    for &i in idx {
        acc = acc.wedge(&forms[i])?;
    }
    Ok(acc)
}

pub fn decompose(f: &FundamentalSystem, omega: &PolyForm) -> Result<SolomonDecomposition> {
    let n = f.rank();
    if omega.nvars() != n {
        return Err(Error::VariableMismatch(n, omega.nvars()));
    }
    let p = omega.degree();
    if p > n {
        return Err(Error::DimensionMismatch(format!("form degree {p} exceeds dimension {n}")));
    }
    if !is_form_invariant(f.group(), omega)? {
        return Err(Error::NotInvariant);
    }
    let diffs = f.differentials();
    let mut coefficients = BTreeMap::new();
    for idx in index_tuples(n, p) {
        let comp = complement(&idx, n);
        let top = omega.wedge(&wedge_all(&diffs, &comp, n)?)?;
        let eps = complement_sign(&idx, n);
        let k = top.top_coefficient();
        let k = if eps < 0 { -k } else { k };
        let c = anti_invariant_divide(f, &k).map_err(|e| match e {
            Error::NotAntiInvariant => Error::InternalInconsistency(format!(
                "top coefficient for tuple {idx:?} is not anti-invariant"
            )),
            other => other,
        })?;
        coefficients.insert(idx, c);
    }
    let d = SolomonDecomposition::from_coefficients(f, p, coefficients)?;
    if &d.reconstruct() != omega {
        return Err(Error::InternalInconsistency(
            "reconstruction does not reproduce the input form".into(),
        ));
    }
    Ok(d)
}

/// `Σ ω_I df_{i_1}∧…∧df_{i_p}`.
pub fn reconstruct(d: &SolomonDecomposition) -> PolyForm {
    let n = d.system.rank();
    let diffs = d.system.differentials();
    let mut acc = PolyForm::zero(n, d.degree);
    for (idx, c) in &d.coefficients {
        let t = wedge_all(&diffs, idx, n)
            .and_then(|w| w.mul_function(c))
            .expect("consistent arity");
        acc = acc.checked_add(&t).expect("same degree");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ReflectionGroup;
    use crate::invariants::fundamental_invariants;
    use crate::parse::{parse_form, parse_poly};

    fn s2() -> FundamentalSystem {
        let w = ReflectionGroup::builtin("S2".parse().unwrap()).unwrap();
        fundamental_invariants(&w, 4).unwrap()
    }

    #[test]
    fn volume_form_example() {
        let f = s2();
        let omega = parse_form("(x1 - x2) dx1^dx2", 2).unwrap();
        let d = decompose(&f, &omega).unwrap();
        assert_eq!(d.coefficient(&[0, 1]), parse_poly("-1/2", 2).unwrap());
        assert_eq!(d.reconstruct(), omega);
    }

    #[test]
    fn coframe_element() {
        let f = s2();
        let df1 = f.differentials()[0].clone();
        let d = decompose(&f, &df1).unwrap();
        assert_eq!(d.coefficients().len(), 1);
        assert_eq!(d.coefficient(&[0]), MultiPoly::one(2));
    }

    #[test]
    fn radial_form() {
        let f = s2();
        let d = decompose(&f, &parse_form("x1 dx1 + x2 dx2", 2).unwrap()).unwrap();
        assert_eq!(d.coefficient(&[1]), parse_poly("1/2", 2).unwrap());
        assert!(d.coefficient(&[0]).is_zero());
        assert_eq!(d.signs()[&vec![1]], -1);
    }

    #[test]
    fn non_invariant_rejected() {
        assert!(matches!(
            decompose(&s2(), &parse_form("dx1", 2).unwrap()),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn reconstruct_examples() {
        let f = s2();
        let empty = SolomonDecomposition::from_coefficients(&f, 1, BTreeMap::new()).unwrap();
        assert!(reconstruct(&empty).is_zero());
        let d = SolomonDecomposition::from_coefficients(
            &f,
            2,
            BTreeMap::from([(vec![0, 1], parse_poly("-1/2", 2).unwrap())]),
        )
        .unwrap();
        assert_eq!(reconstruct(&d), parse_form("(x1 - x2) dx1^dx2", 2).unwrap());
    }

    #[test]
    fn zero_forms_pass_through() {
        let f = s2();
        let h = parse_form("x1^2 + x2^2 + 3", 2).unwrap();
        let d = decompose(&f, &h).unwrap();
        assert_eq!(PolyForm::function(d.coefficient(&[])), h);
    }
}
