//! Sparse linear combinations over an ordered basis.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use core::fmt;

use crate::combinatorics::{ColoredComposition, Composition, Permutation, SignedPermutation};
use crate::scalars::Field;

/// Basis keys that carry a degree.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl Graded for Composition {
    fn degree(&self) -> usize {
        self.weight()
    }
}

impl Graded for ColoredComposition {
    fn degree(&self) -> usize {
        self.weight()
    }
}

impl Graded for Permutation {
    fn degree(&self) -> usize {
        self.len()
    }
}

impl Graded for SignedPermutation {
    fn degree(&self) -> usize {
        self.len()
    }
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

/// `Σ c_k · k` with no zero coefficients stored.
#[derive(Clone, PartialEq)]
pub struct LinComb<K, F> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord + Clone, F: Field> LinComb<K, F> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn term(key: K, coeff: F) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, F::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, F)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&coeff);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one().neg());
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    /// Linear extension of `key ↦ image(key)`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut image: impl FnMut(&K) -> LinComb<K2, F>) -> LinComb<K2, F> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&image(k), c);
        }
        out
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

    pub fn coeff(&self, key: &K) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn get(&self, key: &K) -> Option<&F> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, F> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, F> {
        self.terms.keys()
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }
}

impl<K: Ord + Clone + Graded, F: Field> LinComb<K, F> {
    /// Degree `n` component.
    pub fn homogeneous(&self, n: usize) -> Self {
        self.filter(|k| k.degree() == n)
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        self.filter(|k| k.degree() <= n)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Graded::degree).max()
    }
}

impl<K: Ord + Clone, F: Field> Default for LinComb<K, F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K, F> IntoIterator for LinComb<K, F> {
    type Item = (K, F);
    type IntoIter = btree_map::IntoIter<K, F>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K, F> IntoIterator for &'a LinComb<K, F> {
    type Item = (&'a K, &'a F);
    type IntoIter = btree_map::Iter<'a, K, F>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for LinComb<K, F> {
    fn from_iter<T: IntoIterator<Item = (K, F)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: fmt::Debug, F: fmt::Debug> fmt::Debug for LinComb<K, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({:?})*{:?}", c, k)?;
        }
        Ok(())
    }
}

/// Integer-coefficient combination, used for structure constants.
pub(crate) type IntComb<K> = BTreeMap<K, i64>;

pub(crate) fn add_int<K: Ord>(map: &mut IntComb<K>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: LinComb<u32, Rational> = LinComb::basis(1);
        a.add_term(2, Rational::from(3));
        let b = a.sub(&LinComb::basis(1));
        assert_eq!(b.len(), 1);
        assert_eq!(b.coeff(&2), Rational::from(3));
        assert!(a.sub(&a).is_zero());
    }
}
