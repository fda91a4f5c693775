//! Higher-order peak algebras in Sym and their lifts to MR.
//!
//! `P̊` is the image of `θ_q`, `P̄` the right `P̊`-module generated by the
//! `S_n`; `Q̊ = MR^♯` and `Q̄` play the same roles inside MR.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{ColoredComposition, ColoredPart, Composition, TypeBComposition};
use crate::linalg::GradedSubspace;
use crate::lincomb::LinComb;
use crate::mr::{key, MrElement};
use crate::scalars::Field;
use crate::sym::SymElement;
use crate::words;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PeakAlgebra {
    /// `P̊ ⊂ Sym`.
    Peak,
    /// `P̄ ⊂ Sym`.
    UnitalPeak,
    /// `Q̊ = MR^♯`.
    MrSharp,
    /// `Q̄ ⊂ MR`.
    MrSharpModule,
}

impl PeakAlgebra {
    pub fn tag(self) -> &'static str {
        match self {
            PeakAlgebra::Peak => "Pring",
            PeakAlgebra::UnitalPeak => "Pbar",
            PeakAlgebra::MrSharp => "Qring",
            PeakAlgebra::MrSharpModule => "Qbar",
        }
    }
}

impl fmt::Display for PeakAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Power series quotient `num/den` up to `t^max`; `den[0]` must be 1.
pub fn series_quotient(num: &[i64], den: &[i64], max: usize) -> Vec<i64> {
    assert_eq!(den.first(), Some(&1), "denominator must start with 1");
    let mut out = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut c = num.get(n).copied().unwrap_or(0);
        for k in 1..=n.min(den.len().saturating_sub(1)) {
            c -= den[k] * out[n - k];
        }
        out.push(c);
    }
    out
}

fn poly(terms: &[(usize, i64)]) -> Vec<i64> {
    let len = terms.iter().map(|t| t.0).max().unwrap_or(0) + 1;
    let mut p = alloc::vec![0; len];
    for &(e, c) in terms {
        p[e] += c;
    }
    p
}

/// `1 − c(t + ⋯ + t^r)`, plus `t^{r/2}` when `shift` and `r` is even.
fn geometric_den(r: usize, c: i64, shift: bool) -> Vec<i64> {
    let mut terms = alloc::vec![(0, 1)];
    terms.extend((1..=r).map(|k| (k, -c)));
    if shift && r % 2 == 0 {
        terms.push((r / 2, 1));
    }
    poly(&terms)
}

/// `(1 − t^r)/(1 − t − ⋯ − t^r)`.
pub fn peak_series(r: usize, max: usize) -> Vec<i64> {
    series_quotient(&poly(&[(0, 1), (r, -1)]), &geometric_den(r, 1, false), max)
}

/// `1/(1 − t − ⋯ − t^r)`.
pub fn unital_peak_series(r: usize, max: usize) -> Vec<i64> {
    series_quotient(&[1], &geometric_den(r, 1, false), max)
}

/// `H_r(t) = (1 − t^r)/(1 − 2(t + ⋯ + t^r) [+ t^{r/2}])`.
pub fn conjecture_series(r: usize, max: usize) -> Vec<i64> {
    series_quotient(&poly(&[(0, 1), (r, -1)]), &geometric_den(r, 2, true), max)
}

/// `1/(1 − 2(t + ⋯ + t^r) [+ t^{r/2}])`, the module series stated with the conjecture.
pub fn module_series(r: usize, max: usize) -> Vec<i64> {
    series_quotient(&[1], &geometric_den(r, 2, true), max)
}

/// `H_r(t)/(1 − t)`.
pub fn conjecture_partial_sums(r: usize, max: usize) -> Vec<i64> {
    conjecture_series(r, max)
        .into_iter()
        .scan(0, |acc, c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

/// Colored compositions of `n` whose color-0 parts are `≢ 0 mod r` and,
/// for even `r`, whose color-1 parts are `≢ r/2 mod r`.
pub fn conjecture_count(n: usize, r: usize) -> usize {
    ColoredComposition::all(n, 2)
        .iter()
        .filter(|j| {
            j.parts().iter().all(|p| {
                if p.is_barred() {
                    r % 2 == 1 || p.size % r != r / 2
                } else {
                    p.size % r != 0
                }
            })
        })
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub source: String,
    pub values: Vec<i64>,
}

impl Prediction {
    fn new(source: &str, values: Vec<i64>) -> Self {
        Prediction { source: source.into(), values }
    }

    pub fn matches(&self, dims: &[usize]) -> bool {
        self.values.len() == dims.len() && self.values.iter().zip(dims).all(|(&v, &d)| v == d as i64)
    }
}

/// Computed dimensions of one algebra against its predicted Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub algebra: PeakAlgebra,
    pub r: usize,
    pub dims: Vec<usize>,
    /// The first entry is the primary prediction; `Q̄` lists its candidates.
    pub predictions: Vec<Prediction>,
}

impl HilbertReport {
    pub fn new(algebra: PeakAlgebra, r: usize, dims: Vec<usize>) -> Self {
        let max = dims.len().saturating_sub(1);
        let predictions = match algebra {
            PeakAlgebra::Peak => alloc::vec![Prediction::new("(1-t^r)/(1-t-...-t^r)", peak_series(r, max))],
            PeakAlgebra::UnitalPeak => alloc::vec![Prediction::new("1/(1-t-...-t^r)", unital_peak_series(r, max))],
            PeakAlgebra::MrSharp => alloc::vec![
                Prediction::new("H_r conjecture series", conjecture_series(r, max)),
                Prediction::new(
                    "conjecture basis count",
                    (0..=max).map(|n| conjecture_count(n, r) as i64).collect(),
                ),
            ],
            PeakAlgebra::MrSharpModule => {
                let mut p = alloc::vec![
                    Prediction::new("conjectured module series", module_series(r, max)),
                    Prediction::new("H_r(t)/(1-t)", conjecture_partial_sums(r, max)),
                ];
                if r == 2 {
                    p.push(Prediction::new("2^n", (0..=max).map(|n| 1i64 << n).collect()));
                }
                p
            }
        };
        HilbertReport { algebra, r, dims, predictions }
    }

    /// Whether the primary prediction matches.
    pub fn matches(&self) -> bool {
        self.predictions[0].matches(&self.dims)
    }

    pub fn matching_sources(&self) -> Vec<&str> {
        self.predictions.iter().filter(|p| p.matches(&self.dims)).map(|p| p.source.as_str()).collect()
    }
}

/// `P̊_n = span θ_q(S^I)` for `n = 0..=max`, in complete coordinates.
pub fn peak_tower<F: Field>(q: &F, max: usize) -> Vec<GradedSubspace<Composition, F>> {
    (0..=max)
        .map(|n| {
            let mut sub = GradedSubspace::new(n, Composition::all(n));
            for i in Composition::all(n) {
                let image = SymElement::complete_word(i).theta_q(q);
                sub.insert(image.terms()).expect("degree-n image");
            }
            sub
        })
        .collect()
}

/// `P̄_n = span S_k · P̊_{n−k}`, from a tower returned by [`peak_tower`].
pub fn unital_peak_tower<F: Field>(ring: &[GradedSubspace<Composition, F>]) -> Vec<GradedSubspace<Composition, F>> {
    (0..ring.len())
        .map(|n| {
            let mut sub = GradedSubspace::new(n, Composition::all(n));
            for k in 0..=n {
                let head = Composition::single(k);
                for p in ring[n - k].basis() {
                    let v: LinComb<Composition, F> = p.iter().map(|(i, c)| (head.concat(i), c.clone())).collect();
                    sub.insert(&v).expect("degree-n product");
                }
            }
            sub
        })
        .collect()
}

/// `Q̊_n = span (S^J)^♯` for `n = 0..=max`.
pub fn q_image_tower<F: Field>(q: &F, max: usize) -> Vec<GradedSubspace<ColoredComposition, F>> {
    (0..=max)
        .map(|n| {
            let all = ColoredComposition::all(n, 2);
            let mut sub = GradedSubspace::new(n, all.iter().cloned());
            for j in all {
                let image = MrElement::complete_word(j).sharp(q);
                sub.insert(image.terms()).expect("degree-n image");
            }
            sub
        })
        .collect()
}

/// `Q̄_n = span S_k · Q̊_{n−k}`, from a tower returned by [`q_image_tower`].
pub fn q_module_tower<F: Field>(
    ring: &[GradedSubspace<ColoredComposition, F>],
) -> Vec<GradedSubspace<ColoredComposition, F>> {
    (0..ring.len())
        .map(|n| {
            let mut sub = GradedSubspace::new(n, ColoredComposition::all(n, 2));
            for k in 0..=n {
                let head = MrElement::<F>::complete(k, false).into_terms();
                let head = head.keys().next().expect("S_k").clone();
                for p in ring[n - k].basis() {
                    let v: LinComb<ColoredComposition, F> =
                        p.iter().map(|(j, c)| (head.concat(j), c.clone())).collect();
                    sub.insert(&v).expect("degree-n product");
                }
            }
            sub
        })
        .collect()
}

/// `span S̃^I` over the type-B compositions of `n`, at `q = −1`.
pub fn bsym_subspace<F: Field>(n: usize) -> GradedSubspace<ColoredComposition, F> {
    let mut sub = GradedSubspace::new(n, ColoredComposition::all(n, 2));
    for i in TypeBComposition::all(n) {
        sub.insert(MrElement::<F>::bsym(&i).terms()).expect("degree-n element");
    }
    sub
}

/// Integer structure constants of the internal product in one degree.
pub struct InternalTable<K> {
    keys: Vec<K>,
    index: BTreeMap<K, usize>,
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

impl InternalTable<Composition> {
    pub fn sym(n: usize) -> Self {
        Self::build(Composition::all(n), |i| i.parts().iter().map(|&s| ColoredPart::new(s, 0)).collect(), |w| {
            Composition::new(w.iter().map(|p| p.size).collect()).expect("positive parts")
        })
    }
}

impl InternalTable<ColoredComposition> {
    pub fn mr(n: usize) -> Self {
        Self::build(ColoredComposition::all(n, 2), |j| j.parts().to_vec(), key)
    }
}

impl<K: Ord + Clone> InternalTable<K> {
    fn build(keys: Vec<K>, word: impl Fn(&K) -> words::Word, unword: impl Fn(words::Word) -> K) -> Self {
        let index: BTreeMap<K, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let w: Vec<words::Word> = keys.iter().map(&word).collect();
        let table = w
            .iter()
            .map(|a| {
                w.iter()
                    .map(|b| {
                        words::internal_product(a, b)
                            .into_iter()
                            .map(|(out, c)| (index[&unword(out)], c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        InternalTable { keys, index, table }
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    fn dense<F: Field>(&self, v: &LinComb<K, F>) -> Vec<(usize, F)> {
        v.iter().map(|(k, c)| (self.index[k], c.clone())).collect()
    }

    /// For fixed `u`, the vectors `u * S^b` for every key `b`.
    fn left_images<F: Field>(&self, u: &[(usize, F)]) -> Vec<Vec<F>> {
        let dim = self.keys.len();
        (0..dim)
            .map(|b| {
                let mut out = alloc::vec![F::zero(); dim];
                for (a, x) in u {
                    for &(c, m) in &self.table[*a][b] {
                        out[c].add_assign(&x.mul(&F::from_int(m)));
                    }
                }
                out
            })
            .collect()
    }

    fn combine<F: Field>(&self, images: &[Vec<F>], v: &[(usize, F)]) -> LinComb<K, F> {
        let mut out = alloc::vec![F::zero(); self.keys.len()];
        for (b, y) in v {
            for (o, x) in out.iter_mut().zip(&images[*b]) {
                if !x.is_zero() {
                    o.add_assign(&x.mul(y));
                }
            }
        }
        out.into_iter().enumerate().map(|(i, c)| (self.keys[i].clone(), c)).collect()
    }

    pub fn product<F: Field>(&self, u: &LinComb<K, F>, v: &LinComb<K, F>) -> LinComb<K, F> {
        self.combine(&self.left_images(&self.dense(u)), &self.dense(v))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureFailure {
    /// `basis[left] * basis[right]` left the subspace.
    Product { left: usize, right: usize },
    /// `S^{keys[left]} * basis[right]` left the ideal.
    LeftIdeal { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub degree: usize,
    pub dim: usize,
    pub products_checked: usize,
    pub failure: Option<ClosureFailure>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `u * v ∈ sub` for all pairs of echelon basis vectors.
pub fn check_subalgebra<K: Ord + Clone, F: Field>(
    table: &InternalTable<K>,
    sub: &GradedSubspace<K, F>,
) -> ClosureReport {
    let basis: Vec<_> = sub.basis().iter().map(|b| table.dense(b)).collect();
    let mut checked = 0;
    for (i, u) in basis.iter().enumerate() {
        let images = table.left_images(u);
        for (j, v) in basis.iter().enumerate() {
            checked += 1;
            if !sub.contains(&table.combine(&images, v)).expect("ambient keys") {
                return report(sub, checked, Some(ClosureFailure::Product { left: i, right: j }));
            }
        }
    }
    report(sub, checked, None)
}

/// Checks `S^a * p ∈ ideal` for every ambient key `a` and echelon basis vector `p`.
pub fn check_left_ideal<K: Ord + Clone, F: Field>(
    table: &InternalTable<K>,
    ideal: &GradedSubspace<K, F>,
) -> ClosureReport {
    let basis: Vec<_> = ideal.basis().iter().map(|b| table.dense(b)).collect();
    let mut checked = 0;
    for a in 0..table.keys.len() {
        let images = table.left_images(&[(a, F::one())]);
        for (j, p) in basis.iter().enumerate() {
            checked += 1;
            if !ideal.contains(&table.combine(&images, p)).expect("ambient keys") {
                return report(ideal, checked, Some(ClosureFailure::LeftIdeal { left: a, right: j }));
            }
        }
    }
    report(ideal, checked, None)
}

fn report<K: Ord + Clone, F: Field>(
    sub: &GradedSubspace<K, F>,
    products_checked: usize,
    failure: Option<ClosureFailure>,
) -> ClosureReport {
    ClosureReport { degree: sub.degree(), dim: sub.rank(), products_checked, failure }
}

/// Checks `(S_n^±)^♯ − (1 ∓ qⁿ) S_n^± ∈ H_{n−1}` for both signs, where
/// `H_{n−1}` is spanned by the degree-`n` products of the `S_k^±` with `k < n`.
pub fn generator_normalization_check<F: Field>(n: usize, q: &F) -> bool {
    assert!(n >= 1, "generators start in degree 1");
    let mut span = GradedSubspace::new(n, ColoredComposition::all(n, 2));
    for i in Composition::all(n).into_iter().filter(|i| i.len() > 1) {
        for signs in 0u32..1 << i.len() {
            let word = i.parts().iter().enumerate().fold(MrElement::<F>::one(), |acc, (pos, &k)| {
                acc.product(&MrElement::complete_pm(k, signs >> pos & 1 == 0))
            });
            span.insert(word.terms()).expect("degree-n product");
        }
    }
    let qn = q.pow(n as u32);
    [true, false].into_iter().all(|plus| {
        let s = MrElement::complete_pm(n, plus);
        let factor = if plus { F::one().sub(&qn) } else { F::one().add(&qn) };
        let diff = s.sharp(q).sub(&s.scale(&factor));
        span.contains(&diff.complete_terms()).expect("degree-n element")
    })
}

/// Degrees in `0..=max` where the quadratic identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub q: i64,
    pub max_degree: usize,
    pub failing_degrees: Vec<usize>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.failing_degrees.is_empty()
    }
}

fn failing_degrees<F: Field>(lhs: &MrElement<F>, rhs: &MrElement<F>, max: usize) -> Vec<usize> {
    (0..=max).filter(|&n| lhs.homogeneous(n) != rhs.homogeneous(n)).collect()
}

/// `f² = g² + 4` at `q = 1`, with `f = 1 + (σ₁⁺)^♯`, `g = (σ₁⁻)^♯ − 1` and
/// `σ₁^± = 1 + Σ_{n≥1} S_n^±`.
pub fn identity_q_plus_one<F: Field>(max: usize) -> IdentityReport {
    let one = F::one();
    let series = |plus: bool| -> MrElement<F> {
        (1..=max).fold(MrElement::one(), |acc, n| acc.add(&MrElement::complete_pm(n, plus)))
    };
    let f = MrElement::one().add(&series(true).sharp(&one));
    let g = series(false).sharp(&one).sub(&MrElement::one());
    let four = MrElement::one().scale(&F::from_int(4));
    let lhs = f.product(&f).truncate(max);
    let rhs = g.product(&g).truncate(max).add(&four);
    IdentityReport { q: 1, max_degree: max, failing_degrees: failing_degrees(&lhs, &rhs, max) }
}

/// `(f + 2)² = g² + 4` at `q = −1`, with
/// `f = Σ_{n≥1} (S_{2n}⁺)^♯ + Σ_{n≥0} (S_{2n+1}⁻)^♯` and
/// `g = Σ_{n≥1} (S_{2n}⁻)^♯ + Σ_{n≥0} (S_{2n+1}⁺)^♯`.
pub fn identity_q_minus_one<F: Field>(max: usize) -> IdentityReport {
    let q = F::one().neg();
    let build = |even_plus: bool| -> MrElement<F> {
        (1..=max).fold(MrElement::zero(), |acc, n| {
            let plus = (n % 2 == 0) == even_plus;
            acc.add(&MrElement::complete_pm(n, plus).sharp(&q))
        })
    };
    let f = build(true);
    let g = build(false);
    let two = MrElement::one().scale(&F::from_int(2));
    let four = MrElement::one().scale(&F::from_int(4));
    let f2 = f.add(&two);
    let lhs = f2.product(&f2).truncate(max);
    let rhs = g.product(&g).truncate(max).add(&four);
    IdentityReport { q: -1, max_degree: max, failing_degrees: failing_degrees(&lhs, &rhs, max) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclo, RatFunc, Rational};

    fn ranks<K: Ord + Clone, F: Field>(tower: &[GradedSubspace<K, F>]) -> Vec<usize> {
        tower.iter().map(|s| s.rank()).collect()
    }

    #[test]
    fn series_expansions() {
        assert_eq!(peak_series(2, 5), [1, 1, 1, 2, 3, 5]);
        assert_eq!(peak_series(3, 6), [1, 1, 2, 3, 6, 11, 20]);
        assert_eq!(unital_peak_series(2, 8), [1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(unital_peak_series(3, 6), [1, 1, 2, 4, 7, 13, 24]);
        assert_eq!(conjecture_series(2, 8), [1, 1, 2, 4, 8, 16, 32, 64, 128]);
        assert_eq!(conjecture_series(3, 8), [1, 2, 6, 17, 50, 146, 426, 1244, 3632]);
        assert_eq!(conjecture_series(4, 8), [1, 2, 5, 14, 38, 104, 284, 776, 2120]);
        assert_eq!(module_series(3, 3), [1, 2, 6, 18]);
        assert_eq!(module_series(2, 4), [1, 1, 3, 5, 11]);
        assert_eq!(conjecture_partial_sums(2, 4), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn conjecture_count_matches_series() {
        for r in 2..=4 {
            let series = conjecture_series(r, 7);
            for n in 0..=7 {
                assert_eq!(conjecture_count(n, r) as i64, series[n], "r={} n={}", r, n);
            }
        }
    }

    #[test]
    fn small_peak_dims() {
        let q = Cyclo::<2>::zeta();
        let ring = peak_tower(&q, 5);
        assert_eq!(ranks(&ring), [1, 1, 1, 2, 3, 5]);
        assert_eq!(ranks(&unital_peak_tower(&ring)), [1, 1, 2, 3, 5, 8]);
        let q = Cyclo::<3>::zeta();
        let ring = peak_tower(&q, 5);
        assert_eq!(ranks(&ring), [1, 1, 2, 3, 6, 11]);
        assert_eq!(ranks(&unital_peak_tower(&ring)), [1, 1, 2, 4, 7, 13]);
    }

    fn complete_membership<const R: usize>(max: usize) {
        let q = Cyclo::<R>::zeta();
        let ring = peak_tower(&q, max);
        for (n, sub) in ring.iter().enumerate().skip(1) {
            let s = SymElement::<Cyclo<R>>::complete(n);
            assert_eq!(sub.contains(s.terms()).unwrap(), n < R, "r={} n={}", R, n);
            let mut modulo = sub.clone();
            for i in Composition::all(n).into_iter().filter(|i| i.len() > 1) {
                modulo.insert(&LinComb::basis(i)).unwrap();
            }
            assert_eq!(modulo.contains(s.terms()).unwrap(), n % R != 0, "r={} n={}", R, n);
        }
    }

    #[test]
    fn complete_in_peak() {
        complete_membership::<2>(6);
        complete_membership::<3>(6);
        complete_membership::<4>(6);
    }

    #[test]
    fn small_q_dims() {
        let q = Cyclo::<2>::zeta();
        let ring = q_image_tower(&q, 4);
        assert_eq!(ranks(&ring), [1, 1, 2, 4, 8]);
        assert_eq!(ranks(&q_module_tower(&ring)), [1, 2, 4, 8, 16]);
        let q = Cyclo::<3>::zeta();
        let ring = q_image_tower(&q, 3);
        assert_eq!(ranks(&ring), [1, 2, 6, 17]);
    }

    #[test]
    fn generic_sharp_is_onto() {
        let ring = q_image_tower(&RatFunc::q(), 3);
        assert_eq!(ranks(&ring), [1, 2, 6, 18]);
    }

    #[test]
    fn closure_small() {
        let q = Cyclo::<2>::zeta();
        let ring = peak_tower(&q, 4);
        let unital = unital_peak_tower(&ring);
        for n in 1..=4 {
            let t = InternalTable::sym(n);
            assert!(check_subalgebra(&t, &unital[n]).closed(), "P̄_{}", n);
            assert!(check_left_ideal(&t, &ring[n]).closed(), "P̊_{}", n);
        }
        let q = Cyclo::<3>::zeta();
        let ring = q_image_tower(&q, 3);
        let module = q_module_tower(&ring);
        for n in 1..=3 {
            let t = InternalTable::mr(n);
            assert!(check_subalgebra(&t, &module[n]).closed(), "Q̄_{}", n);
            assert!(check_left_ideal(&t, &ring[n]).closed(), "Q̊_{}", n);
        }
        for n in 1..=3 {
            let t = InternalTable::mr(n);
            assert!(check_subalgebra(&t, &bsym_subspace::<Rational>(n)).closed());
        }
    }

    #[test]
    fn closure_detects_generic_line() {
        let t = InternalTable::sym(3);
        let mut line = GradedSubspace::<Composition, Rational>::new(3, Composition::all(3));
        line.insert(&LinComb::basis("2,1".parse().unwrap())).unwrap();
        let rep = check_subalgebra(&t, &line);
        assert_eq!(rep.failure, Some(ClosureFailure::Product { left: 0, right: 0 }));
    }

    #[test]
    fn table_product_matches_direct() {
        let t = InternalTable::mr(3);
        let a = MrElement::<Rational>::complete_word("1,-2".parse().unwrap()).sharp(&Rational::from(2));
        let b = MrElement::<Rational>::complete_word("-1,1,1".parse().unwrap());
        assert_eq!(t.product(a.terms(), b.terms()), a.internal_product(&b).into_terms());
    }

    #[test]
    fn generators() {
        for n in 1..=3 {
            assert!(generator_normalization_check(n, &RatFunc::q()), "n = {}", n);
            assert!(generator_normalization_check(n, &Cyclo::<3>::zeta()));
        }
    }

    #[test]
    fn quadratic_identities() {
        assert!(identity_q_plus_one::<Rational>(4).holds());
        assert!(identity_q_minus_one::<Rational>(4).holds());
    }
}
