//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix::MatrixQ;
use crate::rational::Rational;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// All monomials of total degree `d` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(Monomial(Vec::new()));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Q[x1, ..., xn]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The coordinate function `x_{i+1}` (zero-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        MultiPoly::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, &c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_{i+1}`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        MultiPoly::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map(|m| m.degree() as i64)
            .unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() <= 0
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / g`.
    ///
    /// Runs multivariate division by leading terms in graded-lex order; when an
    /// exact quotient exists the leading term of every intermediate remainder is
    /// divisible by the leading term of `g`, so any failure proves `g` does not
    /// divide `self`.
    pub fn div_exact(&self, g: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(g)?;
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let qm = lm.quotient_of(m);
            let qc = c * &lc_inv;
            rem = &rem - &g.mul_monomial(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }

    /// Composition `self(images[0], ..., images[n-1])`.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VariableMismatch(target, bad.nvars));
        }
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        // powers[i][e] = images[i]^e
        let powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut v = vec![MultiPoly::one(target)];
                for e in 1..=top as usize {
                    let next = &v[e - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `x -> self(M x)`, i.e. `self ∘ M` for a square matrix `M`.
    ///
    /// Monomial matrices (one nonzero per row) map monomials to monomials and
    /// take a fast path.
    pub fn compose_linear(&self, m: &MatrixQ) -> Result<MultiPoly> {
        if m.rows() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: m.rows(),
            });
        }
        let n_out = m.cols();
        if let Some(perm) = m.monomial_pattern() {
            let mut out = MultiPoly::zero(n_out);
            for (mono, c) in &self.terms {
                let mut exps = vec![0u32; n_out];
                let mut coeff = c.clone();
                for (i, &e) in mono.0.iter().enumerate() {
                    if e > 0 {
                        let j = perm[i];
                        exps[j] += e;
                        coeff = coeff * m.get(i, j).pow(e);
                    }
                }
                out.add_term(Monomial(exps), &coeff);
            }
            return Ok(out);
        }
        let images: Vec<MultiPoly> = (0..m.rows()).map(|i| MultiPoly::linear(m.row(i))).collect();
        self.substitute(&images)
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[i] -= 1;
                out.add_term(Monomial(exps), &(c * Rational::from(e as i64)));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        use num_integer::Integer;
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let mut lcm = num_bigint::BigInt::from(1);
        let mut gcd = num_bigint::BigInt::from(0);
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        for c in self.terms.values() {
            let scaled = c.numer() * (&lcm / c.denom());
            gcd = gcd.gcd(&scaled);
        }
        let mut factor = Rational::from_bigints(lcm, gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Appends zero exponents so the polynomial lives in `nvars` variables.
    pub fn extend_vars(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn to_string_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names(i)),
                    _ => factors.push(format!("{}^{}", names(i), e)),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, abs.to_string());
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

pub fn default_var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_name))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Ring operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Sub => a.checked_sub(b),
        PolyOp::Mul => a.checked_mul(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MultiPoly {
        crate::parse::parse_poly(s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let x_minus_y = p("x1 - x2", 2);
        let x_plus_y = p("x1 + x2", 2);
        assert_eq!(&x_minus_y * &x_plus_y, p("x1^2 - x2^2", 2));
        assert_eq!(&x_plus_y + &MultiPoly::zero(2), x_plus_y);
        assert_eq!(&x_plus_y * &x_plus_y, p("x1^2 + 2*x1*x2 + x2^2", 2));
        assert!(matches!(
            poly_arith(&x_plus_y, &MultiPoly::zero(3), PolyOp::Add),
            Err(Error::VariableMismatch(2, 3))
        ));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(MultiPoly::zero(3).degree(), -1);
        assert_eq!(MultiPoly::one(3).degree(), 0);
        assert_eq!(p("x1^2*x3 + x2", 3).degree(), 3);
    }

    #[test]
    fn division_examples() {
        let q = p("x1^2 - x2^2", 2).div_exact(&p("x1 - x2", 2)).unwrap();
        assert_eq!(q, p("x1 + x2", 2));
        assert!(matches!(
            p("x1 - x2", 2).div_exact(&p("x1 + x2", 2)),
            Err(Error::NotDivisible)
        ));
        // round trip through a constructed product
        let g = p("-2*x1 + 2*x2", 2);
        let f = &g * &p("x1*x2", 2);
        assert_eq!(f.div_exact(&g).unwrap(), p("x1*x2", 2));
        assert!(matches!(f.div_exact(&MultiPoly::zero(2)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn substitution_examples() {
        let f = p("x1^2", 1);
        assert_eq!(f.substitute(&[p("x1 + x2", 2)]).unwrap(), p("x1^2 + 2*x1*x2 + x2^2", 2));
        let f = p("x1 + x2", 2);
        assert_eq!(
            f.substitute(&[p("x1^2", 2), p("x2^2", 2)]).unwrap(),
            p("x1^2 + x2^2", 2)
        );
        // e1^2 - 2 e2 = p2
        let f = p("x1^2 - 2*x2", 2);
        assert_eq!(
            f.substitute(&[p("x1 + x2", 2), p("x1*x2", 2)]).unwrap(),
            p("x1^2 + x2^2", 2)
        );
        assert!(matches!(
            f.substitute(&[p("x1", 2)]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn compose_linear_matches_substitute() {
        let f = p("x1^3 - 2*x1*x2 + 5", 2);
        let swap_neg = MatrixQ::from_i64(2, 2, &[0, -1, 1, 0]);
        let fast = f.compose_linear(&swap_neg).unwrap();
        let slow = f.substitute(&[p("-x2", 2), p("x1", 2)]).unwrap();
        assert_eq!(fast, slow);
        let shear = MatrixQ::from_i64(2, 2, &[1, 1, 0, 1]);
        assert_eq!(
            f.compose_linear(&shear).unwrap(),
            f.substitute(&[p("x1 + x2", 2), p("x2", 2)]).unwrap()
        );
    }

    #[test]
    fn display_is_grlex_descending() {
        let f = p("3 + x2 - 1/2*x1^2 + x1*x2", 2);
        assert_eq!(f.to_string(), "-1/2*x1^2 + x1*x2 + x2 + 3");
        assert_eq!(p("-x1", 2).to_string(), "-x1");
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(5, 6).len(), 210);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial(vec![0, 0])]);
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(p("1/2*x1 + 1/2*x2", 2).primitive(), p("x1 + x2", 2));
        assert_eq!(p("-4*x1^2 + 6*x2", 2).primitive(), p("2*x1^2 - 3*x2", 2));
    }
}
