//! Noncommutative symmetric functions.

use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{ColoredPart, Composition, Permutation};
use crate::fqsym::{FqsymBasis, FqsymElement};
use crate::lincomb::LinComb;
use crate::scalars::Field;
use crate::words::{self, Word};

/// Which basis the keys of a [`SymElement`] refer to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SymBasis {
    /// Complete functions `S^I`.
    S,
    /// Elementary functions `Λ^I`.
    Lambda,
    /// Ribbons `R_I`.
    R,
}

impl SymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            SymBasis::S => "S",
            SymBasis::Lambda => "L",
            SymBasis::R => "R",
        }
    }
}

/// An element of Sym, possibly inhomogeneous (a truncated series).
#[derive(Clone)]
pub struct SymElement<F> {
    basis: SymBasis,
    terms: LinComb<Composition, F>,
}

pub(crate) fn word_of(c: &Composition) -> Word {
    c.parts().iter().map(|&s| ColoredPart::new(s, 0)).collect()
}

pub(crate) fn composition_of(w: &[ColoredPart]) -> Composition {
    Composition::new(w.iter().map(|p| p.size).collect()).expect("words have positive parts")
}

fn concat<F: Field>(x: &LinComb<Composition, F>, y: &LinComb<Composition, F>) -> LinComb<Composition, F> {
    let mut out = LinComb::zero();
    for (u, a) in x {
        for (v, b) in y {
            out.add_term(u.concat(v), a.mul(b));
        }
    }
    out
}

/// `Λ_n` in the complete basis, equivalently `S_n` in the elementary basis.
fn lambda_n<F: Field>(n: usize) -> LinComb<Composition, F> {
    let w = words::lambda_in_complete(n, 0);
    w.iter().map(|(k, &c)| (composition_of(k), F::from_int(c))).collect()
}

/// Expands the multiplicative basis with generators `gen(n)` in the complete basis.
fn multiplicative<F: Field>(
    i: &Composition,
    generator: impl Fn(usize) -> LinComb<Composition, F>,
) -> LinComb<Composition, F> {
    i.parts()
        .iter()
        .fold(LinComb::basis(Composition::empty()), |acc, &p| concat(&acc, &generator(p)))
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<F: Field> SymElement<F> {
    pub fn zero() -> Self {
        Self::from_terms(SymBasis::S, LinComb::zero())
    }

    pub fn one() -> Self {
        Self::complete_word(Composition::empty())
    }

    pub fn from_terms(basis: SymBasis, terms: LinComb<Composition, F>) -> Self {
        SymElement { basis, terms }
    }

    pub fn basis_element(basis: SymBasis, key: Composition) -> Self {
        Self::from_terms(basis, LinComb::basis(key))
    }

    /// `S_n` (and `1` for `n = 0`).
    pub fn complete(n: usize) -> Self {
        Self::complete_word(Composition::single(n))
    }

    pub fn complete_word(i: Composition) -> Self {
        Self::basis_element(SymBasis::S, i)
    }

    /// `Λ_n`.
    pub fn elementary(n: usize) -> Self {
        Self::basis_element(SymBasis::Lambda, Composition::single(n))
    }

    pub fn ribbon(i: Composition) -> Self {
        Self::basis_element(SymBasis::R, i)
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, F> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Composition, F> {
        self.terms
    }

    /// Coefficients in the complete basis.
    pub fn complete_terms(&self) -> LinComb<Composition, F> {
        match self.basis {
            SymBasis::S => self.terms.clone(),
            SymBasis::Lambda => self.terms.map_linear(|i| multiplicative(i, lambda_n)),
            SymBasis::R => self.terms.map_linear(|i| {
                i.coarsenings()
                    .into_iter()
                    .map(|j| {
                        let s = sign(i.len() - j.len());
                        (j, F::from_int(s))
                    })
                    .collect()
            }),
        }
    }

    pub fn to_basis(&self, target: SymBasis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let s = self.complete_terms();
        let terms = match target {
            SymBasis::S => s,
            // S_n = Σ_{J ⊨ n} (−1)^{n−ℓ(J)} Λ^J, the same table as Λ_n in S
            SymBasis::Lambda => s.map_linear(|i| multiplicative(i, lambda_n)),
            SymBasis::R => s.map_linear(|i| i.coarsenings().into_iter().map(|j| (j, F::one())).collect()),
        };
        Self::from_terms(target, terms)
    }

    fn in_s(&self) -> LinComb<Composition, F> {
        self.complete_terms()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.basis == other.basis {
            Self::from_terms(self.basis, self.terms.add(&other.terms))
        } else {
            Self::from_terms(SymBasis::S, self.in_s().add(&other.in_s()))
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.basis, self.terms.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.basis, self.terms.scale(c))
    }

    pub fn homogeneous(&self, n: usize) -> Self {
        Self::from_terms(self.basis, self.terms.homogeneous(n))
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_terms(self.basis, self.terms.truncate(n))
    }

    /// Outer product, concatenation on complete words; result in `S`.
    pub fn product(&self, other: &Self) -> Self {
        Self::from_terms(SymBasis::S, concat(&self.in_s(), &other.in_s()))
    }

    /// `Δf` on the tensor square of the complete basis.
    pub fn coproduct(&self) -> LinComb<(Composition, Composition), F> {
        self.in_s().map_linear(|i| {
            words::coproduct(&word_of(i))
                .iter()
                .map(|((l, r), &c)| ((composition_of(l), composition_of(r)), F::from_int(c)))
                .collect()
        })
    }

    /// The antipode, `S^I ↦ (−1)^{|I|} Λ^{Ĩ}` with `Ĩ` the reversed composition.
    pub fn antipode(&self) -> Self {
        let terms = self
            .in_s()
            .iter()
            .map(|(i, c)| {
                let mut rev = i.parts().to_vec();
                rev.reverse();
                let k = Composition::new(rev).expect("positive parts");
                let c = if i.weight() % 2 == 0 { c.clone() } else { c.neg() };
                (k, c)
            })
            .collect();
        Self::from_terms(SymBasis::Lambda, terms)
    }

    /// The internal product, computed degreewise on complete words.
    pub fn internal_product(&self, other: &Self) -> Self {
        let (a, b) = (self.in_s(), other.in_s());
        let mut out = LinComb::zero();
        for (u, x) in &a {
            let wu = word_of(u);
            for (v, y) in &b {
                if u.weight() != v.weight() {
                    continue;
                }
                let xy = x.mul(y);
                for (w, &c) in &words::internal_product(&wu, &word_of(v)) {
                    out.add_term(composition_of(w), xy.mul(&F::from_int(c)));
                }
            }
        }
        Self::from_terms(SymBasis::S, out)
    }

    /// `σ₁ = Σ_{n ≤ max} S_n`.
    pub fn sigma_series(max: usize) -> Self {
        Self::from_terms(SymBasis::S, (0..=max).map(|n| (Composition::single(n), F::one())).collect())
    }

    /// `λ_t = Σ_{n ≤ max} tⁿ Λ_n`.
    pub fn lambda_series(t: &F, max: usize) -> Self {
        Self::from_terms(SymBasis::Lambda, (0..=max).map(|n| (Composition::single(n), t.pow(n as u32))).collect())
    }

    /// `σ₁((1−q)A) = λ_{−q} σ₁`, truncated at `max`.
    pub fn one_minus_q_series(q: &F, max: usize) -> Self {
        Self::lambda_series(&q.neg(), max).product(&Self::sigma_series(max)).truncate(max)
    }

    /// `S_n((1−q)A) = Σ_i (−q)^i Λ_i S_{n−i}`, in the complete basis.
    pub fn complete_one_minus_q(n: usize, q: &F) -> LinComb<Composition, F> {
        let mq = q.neg();
        let mut out = LinComb::zero();
        for i in 0..=n {
            let tail = LinComb::basis(Composition::single(n - i));
            out.add_scaled(&concat(&lambda_n(i), &tail), &mq.pow(i as u32));
        }
        out
    }

    /// `θ_q(f) = f((1−q)A)`, using that the substitution is an algebra morphism.
    pub fn theta_q(&self, q: &F) -> Self {
        let max = self.in_s().keys().flat_map(|i| i.parts().iter().copied()).max().unwrap_or(0);
        let images: Vec<LinComb<Composition, F>> = (0..=max).map(|n| Self::complete_one_minus_q(n, q)).collect();
        let terms = self.in_s().map_linear(|i| multiplicative(i, |p| images[p].clone()));
        Self::from_terms(SymBasis::S, terms)
    }

    /// `θ_q(f) = f * σ₁((1−q)A)`, straight from the internal product.
    pub fn theta_q_by_definition(&self, q: &F) -> Self {
        let max = self.in_s().max_degree().unwrap_or(0);
        self.internal_product(&Self::one_minus_q_series(q, max))
    }

    /// `Ψ_n = Σ_{k<n} (−1)^k R_{(1^k, n−k)}`.
    pub fn psi(n: usize) -> Self {
        assert!(n >= 1, "Ψ_n needs n ≥ 1");
        let terms = (0..n)
            .map(|k| {
                let hook = Composition::ones(k).concat(&Composition::single(n - k));
                (hook, F::from_int(sign(k)))
            })
            .collect();
        Self::from_terms(SymBasis::R, terms)
    }

    /// Image in FQSym: `R_I ↦ Σ_{D(σ)=I} G_σ`.
    pub fn to_fqsym(&self) -> FqsymElement<F> {
        let ribbons = self.to_basis(SymBasis::R);
        let terms = ribbons.terms.map_linear(|i| {
            Permutation::with_descent_composition(i).into_iter().map(|s| (s, F::one())).collect()
        });
        FqsymElement::from_terms(FqsymBasis::G, terms)
    }
}

impl<F: Field> PartialEq for SymElement<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.in_s() == other.in_s()
        }
    }
}

impl<F: Field> fmt::Display for SymElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.basis.symbol(), self.terms.iter())
    }
}

impl<F: Field> fmt::Debug for SymElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_terms<'a, K: fmt::Display + 'a, F: Field + 'a>(
    f: &mut fmt::Formatter<'_>,
    symbol: &str,
    terms: impl Iterator<Item = (&'a K, &'a F)>,
) -> fmt::Result {
    let mut empty = true;
    for (i, (k, c)) in terms.enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        empty = false;
        if c.is_one() {
            write!(f, "{}[{}]", symbol, k)?;
        } else {
            write!(f, "({})*{}[{}]", c, symbol, k)?;
        }
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}
