//! Free quasi-symmetric functions in the `G`, `F` and monomial bases.

use core::fmt;

use crate::combinatorics::Permutation;
use crate::lincomb::LinComb;
use crate::scalars::Field;
use crate::sym::write_terms;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FqsymBasis {
    G,
    F,
    M,
}

impl FqsymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            FqsymBasis::G => "G",
            FqsymBasis::F => "F",
            FqsymBasis::M => "M",
        }
    }
}

#[derive(Clone)]
pub struct FqsymElement<F> {
    basis: FqsymBasis,
    terms: LinComb<Permutation, F>,
}

/// `G_π = Σ_{π ≤ σ⁻¹} M_σ` (right weak order, inclusive).
fn g_in_m<F: Field>(pi: &Permutation) -> LinComb<Permutation, F> {
    pi.weak_order_filter().into_iter().map(|t| (t.inverse(), F::one())).collect()
}

/// Möbius inversion of [`g_in_m`]: `M_{π⁻¹} = Σ_{J ⊆ Asc(π)} (−1)^{|J|} G_{π·w₀(J)}`.
fn m_in_g<F: Field>(sigma: &Permutation) -> LinComb<Permutation, F> {
    let pi = sigma.inverse();
    let asc = pi.ascent_set();
    let mut out = LinComb::zero();
    for mask in 0u64..1 << asc.len() {
        let j: alloc::vec::Vec<usize> =
            asc.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a).collect();
        let c = if j.len() % 2 == 0 { F::one() } else { F::one().neg() };
        out.add_term(pi.reverse_blocks(&j), c);
    }
    out
}

impl<F: Field> FqsymElement<F> {
    pub fn zero() -> Self {
        Self::from_terms(FqsymBasis::G, LinComb::zero())
    }

    pub fn from_terms(basis: FqsymBasis, terms: LinComb<Permutation, F>) -> Self {
        FqsymElement { basis, terms }
    }

    pub fn basis_element(basis: FqsymBasis, key: Permutation) -> Self {
        Self::from_terms(basis, LinComb::basis(key))
    }

    pub fn basis(&self) -> FqsymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Permutation, F> {
        &self.terms
    }

    fn in_g(&self) -> LinComb<Permutation, F> {
        match self.basis {
            FqsymBasis::G => self.terms.clone(),
            FqsymBasis::F => self.terms.iter().map(|(s, c)| (s.inverse(), c.clone())).collect(),
            FqsymBasis::M => self.terms.map_linear(m_in_g),
        }
    }

    pub fn to_basis(&self, target: FqsymBasis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let g = self.in_g();
        let terms = match target {
            FqsymBasis::G => g,
            FqsymBasis::F => g.iter().map(|(s, c)| (s.inverse(), c.clone())).collect(),
            FqsymBasis::M => g.map_linear(g_in_m),
        };
        Self::from_terms(target, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.basis == other.basis {
            Self::from_terms(self.basis, self.terms.add(&other.terms))
        } else {
            Self::from_terms(FqsymBasis::G, self.in_g().add(&other.in_g()))
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.basis, self.terms.scale(c))
    }

    /// `G_σ * G_τ = G_{τ∘σ}`, equivalently `F_σ * F_τ = F_{σ∘τ}`; result in `G`.
    pub fn internal_product(&self, other: &Self) -> Self {
        let (a, b) = (self.in_g(), other.in_g());
        let mut out = LinComb::zero();
        for (s, x) in &a {
            for (t, y) in &b {
                if s.len() == t.len() {
                    out.add_term(t.compose(s), x.mul(y));
                }
            }
        }
        Self::from_terms(FqsymBasis::G, out)
    }

    /// `S^σ = Σ_{τ ≤ σ⁻¹} F_τ`, the weak-order ideal taken inclusively.
    pub fn dual_complete(sigma: &Permutation) -> Self {
        let terms = sigma.inverse().weak_order_ideal().into_iter().map(|t| (t, F::one())).collect();
        Self::from_terms(FqsymBasis::F, terms)
    }

    /// `Σ_σ (1−q)^{lr(σ)} M_σ` over all permutations of `n`.
    pub fn monomial_expansion_complete(n: usize, q: &F) -> Self {
        let one_minus_q = F::one().sub(q);
        let terms = Permutation::all(n)
            .into_iter()
            .map(|s| {
                let lr = s.lr_minima().len() as u32;
                (s, one_minus_q.pow(lr))
            })
            .collect();
        Self::from_terms(FqsymBasis::M, terms)
    }
}

/// `F_σ(1−q)`: `(−q)^k` when `Des(σ) = {1, …, k}`, zero otherwise.
///
/// This is normalized by the common factor `1−q` of every nonzero
/// value: the honest specialization of `F_σ` at the virtual alphabet
/// `1−q` is `(1−q)(−q)^k`.
pub fn eval_f_one_minus_q<F: Field>(sigma: &Permutation, q: &F) -> F {
    match sigma.hook() {
        Some(k) => q.neg().pow(k as u32),
        None => F::zero(),
    }
}

impl<F: Field> PartialEq for FqsymElement<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.in_g() == other.in_g()
        }
    }
}

impl<F: Field> fmt::Display for FqsymElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.basis.symbol(), self.terms.iter())
    }
}

impl<F: Field> fmt::Debug for FqsymElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::SymElement;
    use crate::{RatFunc, Rational};

    type E = FqsymElement<Rational>;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn el(b: FqsymBasis, terms: &[(&str, i64)]) -> E {
        E::from_terms(b, terms.iter().map(|&(k, c)| (p(k), Rational::from(c))).collect())
    }

    #[test]
    fn internal_products() {
        let f = |w: &str| el(FqsymBasis::F, &[(w, 1)]);
        assert_eq!(f("123").internal_product(&f("231")), f("231"));
        let g21 = el(FqsymBasis::G, &[("21", 1)]);
        assert_eq!(g21.internal_product(&g21), el(FqsymBasis::G, &[("12", 1)]));
        assert_eq!(f("231").internal_product(&f("231")), f("312"));
    }

    #[test]
    fn g_and_f() {
        let g = el(FqsymBasis::G, &[("12", 1)]);
        assert_eq!(g.to_basis(FqsymBasis::F).terms(), el(FqsymBasis::F, &[("12", 1)]).terms());
        let g = el(FqsymBasis::G, &[("231", 1)]);
        assert_eq!(g.to_basis(FqsymBasis::F).terms(), el(FqsymBasis::F, &[("312", 1)]).terms());
        assert_eq!(g.to_basis(FqsymBasis::F).to_basis(FqsymBasis::G).terms(), g.terms());
    }

    #[test]
    fn dual_complete_examples() {
        assert_eq!(
            E::dual_complete(&p("312")).terms(),
            el(FqsymBasis::F, &[("123", 1), ("213", 1), ("231", 1)]).terms()
        );
        assert_eq!(E::dual_complete(&p("123")).terms(), el(FqsymBasis::F, &[("123", 1)]).terms());
        assert_eq!(E::dual_complete(&p("21")).terms(), el(FqsymBasis::F, &[("12", 1), ("21", 1)]).terms());
    }

    #[test]
    fn monomial_transition() {
        let g = |w: &str| el(FqsymBasis::G, &[(w, 1)]);
        assert_eq!(g("1").to_basis(FqsymBasis::M).terms(), el(FqsymBasis::M, &[("1", 1)]).terms());
        assert_eq!(g("12").to_basis(FqsymBasis::M).terms(), el(FqsymBasis::M, &[("12", 1), ("21", 1)]).terms());
        assert_eq!(g("21").to_basis(FqsymBasis::M).terms(), el(FqsymBasis::M, &[("21", 1)]).terms());
        let m12 = el(FqsymBasis::M, &[("12", 1)]);
        assert_eq!(m12.to_basis(FqsymBasis::G).terms(), el(FqsymBasis::G, &[("12", 1), ("21", -1)]).terms());
        for n in 1..=5 {
            let all: LinComb<Permutation, Rational> = Permutation::all(n).into_iter().map(|s| (s, Rational::one())).collect();
            let sum_m = E::from_terms(FqsymBasis::M, all);
            assert_eq!(sum_m, E::basis_element(FqsymBasis::G, Permutation::identity(n)));
            for s in Permutation::all(n) {
                let m = E::basis_element(FqsymBasis::M, s.clone());
                assert_eq!(m.to_basis(FqsymBasis::G).to_basis(FqsymBasis::M).terms(), m.terms());
            }
        }
    }

    #[test]
    fn duality_with_complete_dual_basis() {
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                let s = E::dual_complete(&sigma);
                for pi in Permutation::all(n) {
                    let m = E::basis_element(FqsymBasis::G, pi.clone()).to_basis(FqsymBasis::M);
                    assert_eq!(s.terms().coeff(&pi), m.terms().coeff(&sigma));
                }
            }
        }
    }

    #[test]
    fn evaluation_at_one_minus_q() {
        let q = RatFunc::q();
        assert_eq!(eval_f_one_minus_q(&p("123"), &q), RatFunc::one());
        assert_eq!(eval_f_one_minus_q(&p("21"), &q), q.neg());
        assert_eq!(eval_f_one_minus_q(&p("1324"), &q), RatFunc::zero());
        // (1−q) Σ_{τ ≤ σ⁻¹} F_τ(1−q) = (1−q)^{lr(σ)}
        for n in 1..=5 {
            for sigma in Permutation::all(n) {
                let s = FqsymElement::<RatFunc>::dual_complete(&sigma);
                let mut total = RatFunc::zero();
                for (t, c) in s.terms() {
                    total = total.add(&c.mul(&eval_f_one_minus_q(t, &q)));
                }
                let one_minus_q = RatFunc::one().sub(&q);
                let want = one_minus_q.pow(sigma.lr_minima().len() as u32);
                assert_eq!(total.mul(&one_minus_q), want, "{}", sigma);
            }
        }
    }

    #[test]
    fn monomial_expansion_examples() {
        let q = RatFunc::q();
        let one_minus_q = RatFunc::one().sub(&q);
        let m1 = FqsymElement::<RatFunc>::monomial_expansion_complete(1, &q);
        assert_eq!(m1.terms().coeff(&p("1")), one_minus_q);
        let m2 = FqsymElement::<RatFunc>::monomial_expansion_complete(2, &q);
        assert_eq!(m2.terms().coeff(&p("12")), one_minus_q);
        assert_eq!(m2.terms().coeff(&p("21")), one_minus_q.mul(&one_minus_q));
        for n in 1..=4 {
            let at0 = E::monomial_expansion_complete(n, &Rational::zero());
            assert_eq!(at0, SymElement::<Rational>::complete(n).to_fqsym());
        }
    }

    #[test]
    fn appendix_theorem_small() {
        let q = RatFunc::q();
        for n in 1..=4 {
            let lhs = SymElement::<RatFunc>::complete(n).theta_q(&q).to_fqsym().to_basis(FqsymBasis::M);
            assert_eq!(lhs.terms(), FqsymElement::monomial_expansion_complete(n, &q).terms());
        }
    }

    #[test]
    fn psi_in_monomials() {
        for n in 1..=5 {
            let psi = SymElement::<Rational>::psi(n).to_fqsym().to_basis(FqsymBasis::M);
            let want: LinComb<Permutation, Rational> =
                Permutation::all(n).into_iter().filter(|s| s.apply(1) == 1).map(|s| (s, Rational::one())).collect();
            assert_eq!(psi.terms(), &want);
        }
    }
}
