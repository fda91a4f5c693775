//! Dense univariate polynomials over ℚ in the indeterminate `q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Rational;

/// Coefficients are stored low degree first; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient (the `q`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Rational::neg).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; `None` if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (dd..=sd).rev() {
            let c = rem[k].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].sub(&c.mul(b));
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // extended Euclid tracking only the coefficient of `self`
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus)?.1);
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1)?;
            let t2 = t0.sub(&quot.mul(&t1));
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // r0 is a gcd; invertible iff it is a nonzero constant
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeffs[0].inv()?;
        Some(t0.scale(&c).div_rem(modulus)?.1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc.mul(x).add(c))
    }
}

impl fmt::Display for Poly {
    /// Renders like `1-2*q+1/2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    f.write_str("q")?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn division_and_gcd() {
        // (q^2 - 1) = (q - 1)(q + 1)
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot, Poly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        let c = Poly::from_ints(&[-1, 0, 0, 1]); // q^3 - 1
        assert_eq!(a.gcd(&c), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn modular_inverse() {
        let modulus = Poly::from_ints(&[1, 1, 1]); // q^2 + q + 1
        let x = Poly::q();
        let inv = x.inverse_mod(&modulus).unwrap();
        assert_eq!(x.mul(&inv).div_rem(&modulus).unwrap().1, Poly::one());
        assert!(Poly::from_ints(&[-1, 0, 0, 1]).inverse_mod(&modulus).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[1, -2, 0, 1]).to_string(), "1-2*q+q^3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-q");
    }
}
