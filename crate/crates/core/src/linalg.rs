//! Sparse exact elimination.
//!
//! Vectors are sparse maps from an ordered key type to nonzero rationals. An
//! [`Echelon`] keeps rows whose largest key (the pivot) is distinct and whose
//! pivot coefficient is 1, which is enough to decide membership in their span
//! and to reduce a vector modulo it.

use std::collections::BTreeMap;

use crate::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// `a += c * b`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(a: &mut SparseVec<K>, c: &Rational, b: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in b {
        let add = c * v;
        match a.get_mut(k) {
            Some(x) => {
                *x += &add;
                if x.is_zero() {
                    a.remove(k);
                }
            }
            None => {
                a.insert(k.clone(), add);
            }
        }
    }
}

pub fn scale<K: Ord + Clone>(v: &SparseVec<K>, c: &Rational) -> SparseVec<K> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), x * c)).collect()
}

#[derive(Debug, Clone)]
struct Row<K, T> {
    vec: SparseVec<K>,
    combo: SparseVec<T>,
}

/// Semi-echelon basis that also records how each row was combined from the
/// inserted vectors (identified by tags of type `T`).
#[derive(Debug, Clone)]
pub struct Echelon<K, T = usize> {
    rows: BTreeMap<K, Row<K, T>>,
}

impl<K: Ord + Clone, T: Ord + Clone> Default for Echelon<K, T> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, T: Ord + Clone> Echelon<K, T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    fn reduce_tracked(&self, v: &mut SparseVec<K>, combo: &mut SparseVec<T>) {
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().rev().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(b) => v
                    .range(..b.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let row = &self.rows[&k];
            let c = -v[&k].clone();
            axpy(v, &c, &row.vec);
            axpy(combo, &c, &row.combo);
            bound = Some(k);
        }
    }

    /// Residue of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        let mut scratch = SparseVec::<T>::new();
        self.reduce_tracked(&mut out, &mut scratch);
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` tagged `tag`. Returns `Ok(pivot)` when `v` was independent,
    /// otherwise `Err(relation)`: a combination of tags that vanishes, with
    /// coefficient 1 on `tag`.
    pub fn insert(&mut self, v: SparseVec<K>, tag: T) -> Result<K, SparseVec<T>> {
        let mut vec = v;
        let mut combo = SparseVec::new();
        combo.insert(tag, Rational::one());
        self.reduce_tracked(&mut vec, &mut combo);
        match vec.keys().next_back().cloned() {
            None => Err(combo),
            Some(p) => {
                let inv = vec[&p].recip();
                let row = Row {
                    vec: scale(&vec, &inv),
                    combo: scale(&combo, &inv),
                };
                self.rows.insert(p.clone(), row);
                Ok(p)
            }
        }
    }

    /// Expresses `v` as a combination of inserted tags, if it lies in the span.
    pub fn express(&self, v: &SparseVec<K>) -> Option<SparseVec<T>> {
        let mut vec = v.clone();
        let mut combo = SparseVec::new();
        self.reduce_tracked(&mut vec, &mut combo);
        if vec.is_empty() {
            // reduce_tracked accumulated -(coefficients)
            Some(scale(&combo, &-Rational::one()))
        } else {
            None
        }
    }
}

/// Kernel of the linear map sending basis vector `j` to `columns[j]`, as
/// sparse vectors over column indices.
pub fn kernel_of_columns<K: Ord + Clone>(columns: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut ech: Echelon<K, usize> = Echelon::new();
    let mut out = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        if let Err(rel) = ech.insert(c.clone(), j) {
            out.push(rel);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec<usize> {
        entries.iter().map(|&(k, v)| (k, Rational::from(v))).collect()
    }

    #[test]
    fn membership_and_expression() {
        let mut e: Echelon<usize> = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 1)]), 0).is_ok());
        assert!(e.insert(sv(&[(1, 1), (2, 1)]), 1).is_ok());
        let target = sv(&[(0, 1), (1, 2), (2, 1)]);
        assert!(e.contains(&target));
        assert_eq!(e.express(&target).unwrap(), sv(&[(0, 1), (1, 1)]));
        assert!(!e.contains(&sv(&[(2, 1)])));
        let rel = e.insert(sv(&[(0, 2), (1, 4), (2, 2)]), 2).unwrap_err();
        assert_eq!(rel, sv(&[(0, -2), (1, -2), (2, 1)]));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        // columns of [[1,1,2],[2,2,4]] ; kernel has dimension 2
        let cols = vec![sv(&[(0, 1), (1, 2)]), sv(&[(0, 1), (1, 2)]), sv(&[(0, 2), (1, 4)])];
        let ker = kernel_of_columns(&cols);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            let mut acc = SparseVec::new();
            for (j, c) in k {
                axpy(&mut acc, c, &cols[*j]);
            }
            assert!(acc.is_empty());
        }
    }
}
