//! The rational function field ℚ(q).

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use super::{Poly, Rational, ScalarError};

/// `num/den` with `den` monic and `gcd(num, den) = 1`; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The indeterminate.
    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv().unwrap();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            return if self.den.is_one() {
                Self::from_poly(num)
            } else {
                Self::reduce(num, self.den.clone())
            };
        }
        Self::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Value at a rational point; fails when the denominator vanishes there.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ScalarError> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunc {
    type Err = ScalarError;

    /// Parses arithmetic expressions in `q`, e.g. `1-2*q+q^3` or `(1-q)/(1+q^2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0, text: s };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error());
        }
        Ok(v)
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn error(&self) -> ScalarError {
        ScalarError::Parse(self.text.to_string())
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == b'*' {
                acc.mul(&t)
            } else {
                acc.mul(&t.inv().ok_or(ScalarError::DivisionByZero)?)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.error())?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from(&self.text[start..self.pos])
    }

    fn atom(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(RatFunc::from_rational(d.parse()?))
            }
            _ => Err(self.error()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = rf("(1-q^2)/(1-q)");
        assert_eq!(a, rf("1+q"));
        assert!(a.is_polynomial());
        let b = rf("1/(2-2*q)");
        assert_eq!(b.denom(), &Poly::from_ints(&[-1, 1]));
        assert_eq!(b.to_string(), "(-1/2)/(-1+q)");
        assert!(rf("q/(1+q)").sub(&rf("q/(1+q)")).is_zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1-2*q+q^3", "(1+q)/(1+q^2)", "-1/2*q^4", "0", "3"] {
            let v = rf(s);
            assert_eq!(rf(&v.to_string()), v, "{}", s);
        }
        assert!("q^".parse::<RatFunc>().is_err());
        assert!("1/(q-q)".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
    }

    #[test]
    fn field_ops() {
        let a = rf("1/(1-q)");
        let b = rf("q/(1-q)");
        assert_eq!(a.sub(&b), RatFunc::one());
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        assert!(RatFunc::zero().inv().is_none());
    }
}
