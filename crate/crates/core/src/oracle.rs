//! Group algebras of `𝔖_n` and `B_n` as ground truth for the descent algebras.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Composition, Permutation, SignedPermutation, TypeBComposition};
use crate::linalg::GradedSubspace;
use crate::lincomb::LinComb;
use crate::mr::{MrBasis, MrElement};
use crate::scalars::{Field, Rational};
use crate::sym::{SymBasis, SymElement};

/// A finite group given by its elements of one degree.
pub trait GroupElement: Ord + Clone + fmt::Display {
    fn elements(n: usize) -> Vec<Self>;
    /// `self ∘ other`.
    fn compose(&self, other: &Self) -> Self;
    fn size(&self) -> usize;
}

impl GroupElement for Permutation {
    fn elements(n: usize) -> Vec<Self> {
        Permutation::all(n)
    }

    fn compose(&self, other: &Self) -> Self {
        Permutation::compose(self, other)
    }

    fn size(&self) -> usize {
        self.len()
    }
}

impl GroupElement for SignedPermutation {
    fn elements(n: usize) -> Vec<Self> {
        SignedPermutation::all(n)
    }

    fn compose(&self, other: &Self) -> Self {
        SignedPermutation::compose(self, other)
    }

    fn size(&self) -> usize {
        self.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    Symmetric,
    Hyperoctahedral,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Symmetric => "Sn",
            Group::Hyperoctahedral => "Bn",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("group elements of sizes {0} and {1}")]
    DegreeMismatch(usize, usize),
}

/// A sparse element of the group algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement<G, F> {
    degree: usize,
    terms: LinComb<G, F>,
}

impl<G: GroupElement, F: Field> GroupAlgebraElement<G, F> {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: LinComb::zero() }
    }

    pub fn delta(g: G) -> Self {
        GroupAlgebraElement { degree: g.size(), terms: LinComb::basis(g) }
    }

    pub fn from_terms(degree: usize, terms: LinComb<G, F>) -> Result<Self, OracleError> {
        if let Some(g) = terms.keys().find(|g| g.size() != degree) {
            return Err(OracleError::DegreeMismatch(degree, g.size()));
        }
        Ok(GroupAlgebraElement { degree, terms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &LinComb<G, F> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Result<Self, OracleError> {
        self.same_degree(other)?;
        Ok(GroupAlgebraElement { degree: self.degree, terms: self.terms.add(&other.terms) })
    }

    pub fn scale(&self, c: &F) -> Self {
        GroupAlgebraElement { degree: self.degree, terms: self.terms.scale(c) }
    }

    /// Bilinear extension of `(g, h) ↦ g ∘ h`.
    pub fn product(&self, other: &Self) -> Result<Self, OracleError> {
        self.same_degree(other)?;
        let mut terms = LinComb::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                terms.add_term(g.compose(h), a.mul(b));
            }
        }
        Ok(GroupAlgebraElement { degree: self.degree, terms })
    }

    fn same_degree(&self, other: &Self) -> Result<(), OracleError> {
        if self.degree == other.degree {
            Ok(())
        } else {
            Err(OracleError::DegreeMismatch(self.degree, other.degree))
        }
    }
}

/// `Σ_{D(σ) = I} σ`.
pub fn descent_class_sn<F: Field>(i: &Composition) -> GroupAlgebraElement<Permutation, F> {
    let terms = Permutation::with_descent_composition(i).into_iter().map(|p| (p, F::one())).collect();
    GroupAlgebraElement { degree: i.weight(), terms }
}

/// `Σ w` over the signed permutations with `Des(w) ⊆ Des(I)`.
pub fn descent_class_bn<F: Field>(i: &TypeBComposition) -> GroupAlgebraElement<SignedPermutation, F> {
    let n = i.weight();
    let allowed = i.descent_set();
    let terms = SignedPermutation::all(n)
        .into_iter()
        .filter(|w| w.descent_set().iter().all(|d| allowed.contains(d)))
        .map(|w| (w, F::one()))
        .collect();
    GroupAlgebraElement { degree: n, terms }
}

/// `Σ w` over the signed permutations with `Des(w) = Des(I)`.
pub fn exact_descent_class_bn<F: Field>(i: &TypeBComposition) -> GroupAlgebraElement<SignedPermutation, F> {
    let n = i.weight();
    let terms = SignedPermutation::all(n)
        .into_iter()
        .filter(|w| w.descent_composition() == *i)
        .map(|w| (w, F::one()))
        .collect();
    GroupAlgebraElement { degree: n, terms }
}

/// Multiplication table of the whole group, for fast products of dense
/// integer class vectors.
struct Table<G> {
    elements: Vec<G>,
    index: BTreeMap<G, usize>,
    mul: Vec<u32>,
}

impl<G: GroupElement> Table<G> {
    fn new(n: usize) -> Self {
        let elements = G::elements(n);
        let index: BTreeMap<G, usize> = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut mul = Vec::with_capacity(elements.len() * elements.len());
        for g in &elements {
            for h in &elements {
                mul.push(index[&g.compose(h)] as u32);
            }
        }
        Table { elements, index, mul }
    }

    fn dense(&self, x: &GroupAlgebraElement<G, Rational>) -> Vec<i64> {
        let mut v = alloc::vec![0; self.elements.len()];
        for (g, c) in x.terms() {
            v[self.index[g]] = to_int(c);
        }
        v
    }

    fn product(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let size = self.elements.len();
        let mut out = alloc::vec![0; size];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            let row = &self.mul[i * size..(i + 1) * size];
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                out[row[j] as usize] += a * b;
            }
        }
        out
    }
}

fn to_int(c: &Rational) -> i64 {
    match c.to_small() {
        Some((k, 1)) => k,
        _ => panic!("class coefficient {} is not a small integer", c),
    }
}

/// Outcome of an anti-isomorphism check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub group: Group,
    pub n: usize,
    pub pairs_checked: usize,
    /// `(I, J)` pairs whose images disagree.
    pub failures: Vec<(String, String)>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `R_I * R_J ↦ D_J · D_I` for all compositions `I, J` of `n`, where
/// `D_I` is the descent class of `I`.
pub fn verify_anti_isomorphism_sn(n: usize) -> OracleReport {
    let table = Table::<Permutation>::new(n);
    let comps = Composition::all(n);
    let classes: BTreeMap<Composition, Vec<i64>> =
        comps.iter().map(|i| (i.clone(), table.dense(&descent_class_sn::<Rational>(i)))).collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in &comps {
        let ri = SymElement::<Rational>::ribbon(i.clone());
        for j in &comps {
            checked += 1;
            let prod = ri.internal_product(&SymElement::ribbon(j.clone())).to_basis(SymBasis::R);
            let mut image = alloc::vec![0i64; table.elements.len()];
            for (k, c) in prod.terms() {
                let c = to_int(c);
                for (x, y) in image.iter_mut().zip(&classes[k]) {
                    *x += c * y;
                }
            }
            if image != table.product(&classes[j], &classes[i]) {
                failures.push((i.to_string(), j.to_string()));
            }
        }
    }
    OracleReport { group: Group::Symmetric, n, pairs_checked: checked, failures }
}

/// Checks `S̃^I * S̃^J ↦ C_J · C_I` for all type-B compositions of `n`, where
/// `C_I` sums the signed permutations with descents inside `Des(I)`; the
/// product is expanded in the `S̃` span by exact coordinates.
pub fn verify_anti_isomorphism_bn(n: usize) -> OracleReport {
    let table = Table::<SignedPermutation>::new(n);
    let comps = TypeBComposition::all(n);
    let tilde: Vec<MrElement<Rational>> = comps.iter().map(MrElement::bsym).collect();
    let mut span = GradedSubspace::with_tracking(n, crate::ColoredComposition::all(n, 2));
    for t in &tilde {
        span.insert(t.terms()).expect("degree-n element");
    }
    let classes: Vec<Vec<i64>> = comps.iter().map(|i| table.dense(&descent_class_bn::<Rational>(i))).collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (a, i) in comps.iter().enumerate() {
        for (b, j) in comps.iter().enumerate() {
            checked += 1;
            let prod = tilde[a].internal_product(&tilde[b]);
            debug_assert_eq!(prod.basis(), MrBasis::S);
            let coords = span.coordinates(prod.terms()).expect("tracking span");
            let ok = coords.is_some_and(|coords| {
                let mut image = alloc::vec![0i64; table.elements.len()];
                for (g, c) in &coords {
                    let c = to_int(c);
                    for (x, y) in image.iter_mut().zip(&classes[*g]) {
                        *x += c * y;
                    }
                }
                image == table.product(&classes[b], &classes[a])
            });
            if !ok {
                failures.push((i.to_string(), j.to_string()));
            }
        }
    }
    OracleReport { group: Group::Hyperoctahedral, n, pairs_checked: checked, failures }
}

/// Dimension of the span of the `B_n` descent classes.
pub fn bn_descent_algebra_dim(n: usize) -> usize {
    let table = Table::<SignedPermutation>::new(n);
    let mut span = GradedSubspace::<usize, Rational>::new(n, 0..table.elements.len());
    for i in TypeBComposition::all(n) {
        let v = table.dense(&descent_class_bn::<Rational>(&i));
        let terms = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(g, &c)| (g, Rational::from(c))).collect();
        span.insert(&terms).expect("group element index");
    }
    span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = Rational;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn group_products() {
        let t = GroupAlgebraElement::<Permutation, R>::delta(p("21"));
        assert_eq!(t.product(&t).unwrap(), GroupAlgebraElement::delta(Permutation::identity(2)));
        let id = GroupAlgebraElement::<Permutation, R>::delta(Permutation::identity(3));
        let f = descent_class_sn::<R>(&"2,1".parse().unwrap());
        assert_eq!(id.product(&f).unwrap(), f);
        let bar = SignedPermutation::from_mask(p("1"), "1").unwrap();
        let b = GroupAlgebraElement::<SignedPermutation, R>::delta(bar);
        assert_eq!(b.product(&b).unwrap(), GroupAlgebraElement::delta(SignedPermutation::identity(1)));
        assert_eq!(id.product(&t), Err(OracleError::DegreeMismatch(3, 2)));
    }

    #[test]
    fn classes() {
        let f = descent_class_sn::<R>(&"2,1".parse().unwrap());
        let want: LinComb<Permutation, R> = [(p("132"), R::one()), (p("231"), R::one())].into_iter().collect();
        assert_eq!(f.terms(), &want);
        assert_eq!(descent_class_sn::<R>(&"1,1".parse().unwrap()).terms(), &LinComb::basis(p("21")));
        let one = descent_class_bn::<R>(&TypeBComposition::new(&[1]).unwrap());
        assert_eq!(one.terms().len(), 1);
        let zero_one = descent_class_bn::<R>(&TypeBComposition::new(&[0, 1]).unwrap());
        assert_eq!(zero_one.terms().len(), 2);
    }

    #[test]
    fn exact_classes_partition() {
        for n in 1..=4 {
            let total: usize =
                TypeBComposition::all(n).iter().map(|i| exact_descent_class_bn::<R>(i).terms().len()).sum();
            assert_eq!(total, SignedPermutation::all(n).len());
        }
        for n in 1..=6 {
            let total: usize = Composition::all(n).iter().map(|i| descent_class_sn::<R>(i).terms().len()).sum();
            assert_eq!(total, Permutation::all(n).len());
        }
    }

    #[test]
    fn anti_isomorphisms_small() {
        for n in 1..=4 {
            let rep = verify_anti_isomorphism_sn(n);
            assert!(rep.passed(), "{:?}", rep);
        }
        for n in 1..=3 {
            let rep = verify_anti_isomorphism_bn(n);
            assert!(rep.passed(), "{:?}", rep);
        }
    }

    #[test]
    fn bn_descent_algebra_dims() {
        for n in 1..=3 {
            assert_eq!(bn_descent_algebra_dim(n), 1 << n);
        }
    }
}
