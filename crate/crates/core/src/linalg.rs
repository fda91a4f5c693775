//! Exact row echelon spans inside a finite ambient basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::lincomb::LinComb;
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("basis key outside the ambient space")]
    KeyNotInAmbient,
    #[error("coordinates requested from a subspace built without tracking")]
    NotTracking,
}

type SparseRow<F> = Vec<(usize, F)>;

#[derive(Clone, Debug)]
struct Row<F> {
    // sorted by column; the first entry is the pivot and equals 1
    entries: SparseRow<F>,
    // expression of the row in the inserted generators
    combo: LinComb<usize, F>,
}

/// The span of a family of vectors, kept in reduced row echelon form.
///
/// Columns follow the sorted order of the ambient keys and each pivot is
/// the smallest key with a nonzero coefficient.
#[derive(Clone, Debug)]
pub struct GradedSubspace<K, F> {
    degree: usize,
    ambient: Vec<K>,
    index: BTreeMap<K, usize>,
    rows: Vec<Row<F>>,
    pivot_row: Vec<Option<usize>>,
    tracking: bool,
    generators: usize,
}

impl<K: Ord + Clone, F: Field> GradedSubspace<K, F> {
    pub fn new(degree: usize, ambient: impl IntoIterator<Item = K>) -> Self {
        let mut keys: Vec<K> = ambient.into_iter().collect();
        keys.sort();
        keys.dedup();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let dim = keys.len();
        GradedSubspace {
            degree,
            ambient: keys,
            index,
            rows: Vec::new(),
            pivot_row: alloc::vec![None; dim],
            tracking: false,
            generators: 0,
        }
    }

    /// Like [`new`](Self::new), but remembers how each row arises from the
    /// inserted vectors so that [`coordinates`](Self::coordinates) works.
    pub fn with_tracking(degree: usize, ambient: impl IntoIterator<Item = K>) -> Self {
        let mut s = Self::new(degree, ambient);
        s.tracking = true;
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient(&self) -> &[K] {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors passed to [`insert`](Self::insert) so far.
    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn dense(&self, v: &LinComb<K, F>) -> Result<Vec<F>, LinalgError> {
        let mut acc = alloc::vec![F::zero(); self.ambient.len()];
        for (k, c) in v {
            let &i = self.index.get(k).ok_or(LinalgError::KeyNotInAmbient)?;
            acc[i] = c.clone();
        }
        Ok(acc)
    }

    /// Subtracts the echelon rows from `acc`; returns the combination of
    /// rows that was removed (in generator coordinates when tracking).
    fn reduce_dense(&self, acc: &mut [F]) -> LinComb<usize, F> {
        let mut removed = LinComb::zero();
        for col in 0..acc.len() {
            if acc[col].is_zero() {
                continue;
            }
            let Some(r) = self.pivot_row[col] else { continue };
            let c = acc[col].clone();
            let row = &self.rows[r];
            for (j, x) in &row.entries {
                acc[*j].sub_assign(&x.mul(&c));
            }
            if self.tracking {
                removed.add_scaled(&row.combo, &c);
            }
        }
        removed
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K, F>) -> Result<bool, LinalgError> {
        let mut acc = self.dense(v)?;
        let removed = self.reduce_dense(&mut acc);
        let generator = self.generators;
        self.generators += 1;
        let Some(pivot) = acc.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = acc[pivot].inv().expect("nonzero pivot");
        let entries: SparseRow<F> = acc
            .into_iter()
            .enumerate()
            .skip(pivot)
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.mul(&inv)))
            .collect();
        let combo = if self.tracking {
            let mut c = LinComb::basis(generator);
            c.add_scaled(&removed, &F::one().neg());
            c.scale(&inv)
        } else {
            LinComb::zero()
        };
        let new = Row { entries, combo };
        for row in &mut self.rows {
            let Ok(pos) = row.entries.binary_search_by_key(&pivot, |(j, _)| *j) else { continue };
            let c = row.entries[pos].1.clone();
            row.entries = axpy(&row.entries, &c.neg(), &new.entries);
            if self.tracking {
                row.combo.add_scaled(&new.combo, &c.neg());
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(new);
        Ok(true)
    }

    pub fn contains(&self, v: &LinComb<K, F>) -> Result<bool, LinalgError> {
        Ok(self.residual(v)?.is_zero())
    }

    /// What is left of `v` after reduction against the echelon rows.
    pub fn residual(&self, v: &LinComb<K, F>) -> Result<LinComb<K, F>, LinalgError> {
        let mut acc = self.dense(v)?;
        self.reduce_dense(&mut acc);
        Ok(self.sparse(acc))
    }

    /// Coefficients `c_g` with `v = Σ c_g · generator_g`, indexed by the
    /// insertion order; `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &LinComb<K, F>) -> Result<Option<LinComb<usize, F>>, LinalgError> {
        if !self.tracking {
            return Err(LinalgError::NotTracking);
        }
        let mut acc = self.dense(v)?;
        let removed = self.reduce_dense(&mut acc);
        Ok(acc.iter().all(F::is_zero).then_some(removed))
    }

    fn sparse(&self, acc: Vec<F>) -> LinComb<K, F> {
        acc.into_iter().enumerate().map(|(j, c)| (self.ambient[j].clone(), c)).collect()
    }

    /// The echelon rows, ordered by pivot.
    pub fn basis(&self) -> Vec<LinComb<K, F>> {
        let mut rows: Vec<&Row<F>> = self.rows.iter().collect();
        rows.sort_by_key(|r| r.entries[0].0);
        rows.into_iter()
            .map(|r| r.entries.iter().map(|(j, c)| (self.ambient[*j].clone(), c.clone())).collect())
            .collect()
    }

    /// Pivot keys in increasing order.
    pub fn pivots(&self) -> Vec<K> {
        (0..self.ambient.len()).filter(|&j| self.pivot_row[j].is_some()).map(|j| self.ambient[j].clone()).collect()
    }
}

fn axpy<F: Field>(x: &[(usize, F)], a: &F, y: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, y[j].1.mul(a)));
            j += 1;
        } else {
            let c = x[i].1.add(&y[j].1.mul(a));
            if !c.is_zero() {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclo, Rational};
    use alloc::vec;
    use proptest::prelude::*;

    type V = LinComb<u8, Rational>;

    fn v(terms: &[(u8, i64)]) -> V {
        terms.iter().map(|&(k, c)| (k, Rational::from(c))).collect()
    }

    #[test]
    fn insert_examples() {
        let mut s: GradedSubspace<u8, Rational> = GradedSubspace::new(0, 0..3);
        assert!(!s.insert(&V::zero()).unwrap());
        assert!(s.insert(&v(&[(1, 1), (2, 1)])).unwrap());
        assert!(s.insert(&v(&[(1, 1)])).unwrap());
        assert!(!s.insert(&v(&[(2, 1)])).unwrap());
        assert_eq!(s.rank(), 2);
        assert_eq!(s.basis(), vec![v(&[(1, 1)]), v(&[(2, 1)])]);
        assert_eq!(s.insert(&v(&[(7, 1)])), Err(LinalgError::KeyNotInAmbient));
    }

    #[test]
    fn contains_examples() {
        let mut s: GradedSubspace<u8, Rational> = GradedSubspace::new(0, 0..3);
        assert!(s.contains(&V::zero()).unwrap());
        s.insert(&v(&[(1, 1)])).unwrap();
        assert!(!s.contains(&v(&[(2, 1)])).unwrap());
        let mut t: GradedSubspace<u8, Rational> = GradedSubspace::new(0, 0..3);
        t.insert(&v(&[(1, 1), (2, 1)])).unwrap();
        t.insert(&v(&[(1, 1), (2, -1)])).unwrap();
        assert!(t.contains(&v(&[(2, 1)])).unwrap());
    }

    #[test]
    fn coordinates_recover_combinations() {
        let mut s: GradedSubspace<u8, Rational> = GradedSubspace::with_tracking(0, 0..4);
        let gens = [v(&[(0, 1), (1, 2)]), v(&[(1, 1), (3, 1)]), v(&[(0, 1), (1, 3), (3, 1)]), v(&[(2, 5)])];
        for g in &gens {
            s.insert(g).unwrap();
        }
        let target = v(&[(0, 2), (1, 3), (2, 10), (3, -1)]);
        let coords = s.coordinates(&target).unwrap().unwrap();
        let mut back = V::zero();
        for (g, c) in &coords {
            back.add_scaled(&gens[*g], c);
        }
        assert_eq!(back, target);
        let mut t: GradedSubspace<u8, Rational> = GradedSubspace::with_tracking(0, 0..4);
        t.insert(&v(&[(0, 1)])).unwrap();
        assert!(t.coordinates(&v(&[(1, 1)])).unwrap().is_none());
    }

    #[test]
    fn works_over_cyclotomics() {
        let z = Cyclo::<3>::zeta();
        let mut s: GradedSubspace<u8, Cyclo<3>> = GradedSubspace::new(0, 0..2);
        s.insert(&LinComb::from_terms([(0, Cyclo::one()), (1, z.clone())])).unwrap();
        // ζ·(1, ζ) = (ζ, ζ²) lies in the span
        assert!(s.contains(&LinComb::from_terms([(0, z.clone()), (1, z.mul(&z))])).unwrap());
        assert!(!s.contains(&LinComb::from_terms([(0, Cyclo::one()), (1, Cyclo::one())])).unwrap());
    }

    fn family() -> impl Strategy<Value = Vec<Vec<(u8, i64)>>> {
        prop::collection::vec(prop::collection::vec((0u8..6, -3i64..4), 0..5), 0..7)
    }

    proptest! {
        #[test]
        fn rank_independent_of_order(fam in family()) {
            let build = |order: &mut dyn Iterator<Item = &Vec<(u8, i64)>>| {
                let mut s: GradedSubspace<u8, Rational> = GradedSubspace::new(0, 0..6);
                for t in order {
                    s.insert(&v(t)).unwrap();
                }
                s
            };
            let a = build(&mut fam.iter());
            let b = build(&mut fam.iter().rev());
            prop_assert_eq!(a.rank(), b.rank());
            prop_assert_eq!(a.basis(), b.basis());
        }

        #[test]
        fn contains_iff_insert_does_not_grow(fam in family(), probe in prop::collection::vec((0u8..6, -3i64..4), 0..5)) {
            let mut s: GradedSubspace<u8, Rational> = GradedSubspace::new(0, 0..6);
            for t in &fam {
                s.insert(&v(t)).unwrap();
            }
            let inside = s.contains(&v(&probe)).unwrap();
            prop_assert_eq!(inside, !s.insert(&v(&probe)).unwrap());
        }
    }
}
