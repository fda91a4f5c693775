//! Cyclotomic fields ℚ(ζ_r) = ℚ[x]/Φ_r(x).

use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use super::{Poly, RatFunc, Rational, ScalarError};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Integer coefficients of Φ_r (low degree first) together with its degree.
///
/// Φ_r is obtained from `x^r - 1` by exact division by every Φ_d with
/// `d | r`, `d < r`, computed the same way in increasing order of `d`.
pub const fn cyclotomic_coeffs(r: usize) -> ([i64; MAX_ORDER + 1], usize) {
    assert!(r >= 1 && r <= MAX_ORDER, "cyclotomic order out of range");
    let mut table = [[0i64; MAX_ORDER + 1]; MAX_ORDER + 1];
    let mut degs = [0usize; MAX_ORDER + 1];
    let mut d = 1;
    while d <= r {
        if r % d == 0 {
            let mut p = [0i64; MAX_ORDER + 1];
            p[0] = -1;
            p[d] = 1;
            let mut deg = d;
            let mut e = 1;
            while e < d {
                if d % e == 0 {
                    // exact long division by the monic Φ_e
                    let de = degs[e];
                    let mut quot = [0i64; MAX_ORDER + 1];
                    let mut k = deg + 1;
                    while k > de {
                        k -= 1;
                        let c = p[k];
                        quot[k - de] = c;
                        let mut j = 0;
                        while j <= de {
                            p[k - de + j] -= c * table[e][j];
                            j += 1;
                        }
                    }
                    p = quot;
                    deg -= de;
                }
                e += 1;
            }
            table[d] = p;
            degs[d] = deg;
        }
        d += 1;
    }
    (table[r], degs[r])
}

/// Φ_r as a [`Poly`].
pub fn cyclotomic_polynomial(r: usize) -> Poly {
    let (c, deg) = cyclotomic_coeffs(r);
    Poly::from_ints(&c[..=deg])
}

/// Euler's totient, i.e. `[ℚ(ζ_r):ℚ]`.
pub const fn euler_phi(r: usize) -> usize {
    cyclotomic_coeffs(r).1
}

type Coeffs = SmallVec<[Rational; 4]>;

fn reduce_in_place(v: &mut Vec<Rational>, phi: &[i64]) {
    let deg = phi.len() - 1;
    while v.len() > deg {
        let c = v.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let top = v.len(); // index of the popped coefficient
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                let idx = top - deg + j;
                v[idx] = v[idx].sub(&c.mul(&Rational::from(pj)));
            }
        }
    }
    v.resize(deg, Rational::zero());
}

fn mul_mod(a: &[Rational], b: &[Rational], phi: &[i64]) -> Vec<Rational> {
    let deg = phi.len() - 1;
    if deg == 1 {
        // ℚ itself: only the constant slot
        return alloc::vec![a[0].mul(&b[0])];
    }
    let mut out = alloc::vec![Rational::zero(); 2 * deg - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    reduce_in_place(&mut out, phi);
    out
}

/// Reduces an arbitrary polynomial modulo Φ_r, returning `φ(r)` coefficients.
pub fn reduce_mod_cyclotomic(p: &Poly, r: usize) -> Vec<Rational> {
    let (c, deg) = cyclotomic_coeffs(r);
    let mut v = p.coeffs().to_vec();
    reduce_in_place(&mut v, &c[..=deg]);
    v
}

/// An element of ℚ(ζ_R), stored as the `φ(R)` coefficients of its
/// reduced representative in powers of ζ_R.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo<const R: usize> {
    coeffs: Coeffs,
}

impl<const R: usize> Cyclo<R> {
    const PHI: ([i64; MAX_ORDER + 1], usize) = cyclotomic_coeffs(R);
    pub const DEGREE: usize = Self::PHI.1;

    fn phi() -> &'static [i64] {
        &Self::PHI.0[..=Self::PHI.1]
    }

    pub fn zero() -> Self {
        Cyclo { coeffs: smallvec::smallvec![Rational::zero(); Self::DEGREE] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = c;
        z
    }

    /// The primitive root ζ_R (the class of `x`).
    pub fn zeta() -> Self {
        Self::from_poly(&Poly::q())
    }

    /// Class of `p(x)` modulo Φ_R.
    pub fn from_poly(p: &Poly) -> Self {
        let mut v = p.coeffs().to_vec();
        reduce_in_place(&mut v, Self::phi());
        Cyclo { coeffs: v.into_iter().collect() }
    }

    /// From already reduced coefficients; fails on a length mismatch.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, ScalarError> {
        if coeffs.len() != Self::DEGREE {
            return Err(ScalarError::Malformed("cyclotomic coefficient count"));
        }
        Ok(Cyclo { coeffs: coeffs.into_iter().collect() })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Cyclo { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Cyclo { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        Cyclo { coeffs: self.coeffs.iter().map(Rational::neg).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Cyclo { coeffs: mul_mod(&self.coeffs, &rhs.coeffs, Self::phi()).into_iter().collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclo { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if Self::DEGREE == 1 {
            return Some(Self::from_rational(self.coeffs[0].inv()?));
        }
        let modulus = cyclotomic_polynomial(R);
        self.to_poly().inverse_mod(&modulus).map(|p| Self::from_poly(&p))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates `f` at `q = ζ_R`.
    pub fn specialize(f: &RatFunc) -> Result<Self, ScalarError> {
        let den = Self::from_poly(f.denom());
        let inv = den.inv().ok_or(ScalarError::VanishingDenominator { order: R })?;
        Ok(Self::from_poly(f.numer()).mul(&inv))
    }
}

impl<const R: usize> Default for Cyclo<R> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Writes `[c0,c1,...]@r`.
pub(crate) fn fmt_cyclo(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], r: usize) -> fmt::Result {
    f.write_str("[")?;
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", c)?;
    }
    write!(f, "]@{}", r)
}

impl<const R: usize> fmt::Display for Cyclo<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cyclo(f, &self.coeffs, R)
    }
}

impl<const R: usize> fmt::Debug for Cyclo<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
