//! Exact coefficient rings: ℚ, ℚ(q) and the cyclotomic fields ℚ(ζ_r).
//!
//! Algebra code is generic over [`Field`]; the tagged [`Scalar`] value is
//! the interchange form used by parsers, reports and the JSON formats.

mod cyclo;
mod poly;
mod ratfunc;
mod rational;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use cyclo::{cyclotomic_coeffs, cyclotomic_polynomial, euler_phi, reduce_mod_cyclotomic, Cyclo, MAX_ORDER};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine {0} with {1} without an explicit specialization")]
    RingMismatch(&'static str, &'static str),
    #[error("denominator vanishes at a primitive {order}-th root of unity (Φ_{order} divides it)")]
    VanishingDenominator { order: usize },
    #[error("cyclotomic order {0} out of range")]
    BadOrder(usize),
    #[error("malformed scalar: {0}")]
    Malformed(&'static str),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// A commutative field with exact, canonical-form equality.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        rhs.inv().map(|r| self.mul(&r)).ok_or(ScalarError::DivisionByZero)
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Rational::inv(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn pow(&self, e: u32) -> Self {
        Rational::pow(self, e)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(c: Rational) -> Self {
        RatFunc::from_rational(c)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
    fn pow(&self, e: u32) -> Self {
        RatFunc::pow(self, e)
    }
}

impl<const R: usize> Field for Cyclo<R> {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn from_rational(c: Rational) -> Self {
        Cyclo::from_rational(c)
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Cyclo::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Cyclo::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Cyclo::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Cyclo::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Cyclo::inv(self)
    }
    fn pow(&self, e: u32) -> Self {
        Cyclo::pow(self, e)
    }
}

/// Tagged exact scalar, the interchange form of every coefficient.
///
/// Text forms: rationals `p/s`, rational functions `1-2*q+q^3` or
/// `(num)/(den)`, cyclotomic elements `[c0,c1,...]@r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    RatFunc(RatFunc),
    Cyclo { order: usize, coeffs: Vec<Rational> },
}

impl Scalar {
    fn ring_name(&self) -> &'static str {
        match self {
            Scalar::Rational(_) => "a rational",
            Scalar::RatFunc(_) => "a rational function",
            Scalar::Cyclo { .. } => "a cyclotomic element",
        }
    }

    pub fn cyclo(order: usize, coeffs: Vec<Rational>) -> Result<Self, ScalarError> {
        if order == 0 || order > MAX_ORDER {
            return Err(ScalarError::BadOrder(order));
        }
        if coeffs.len() != euler_phi(order) {
            return Err(ScalarError::Malformed("cyclotomic coefficient count"));
        }
        Ok(Scalar::Cyclo { order, coeffs })
    }

    fn cyclo_from_poly(order: usize, p: &Poly) -> Self {
        Scalar::Cyclo { order, coeffs: reduce_mod_cyclotomic(p, order) }
    }

    /// Brings both operands into a common ring, coercing rationals upward.
    fn unify(&self, rhs: &Self) -> Result<(Self, Self), ScalarError> {
        use Scalar::*;
        Ok(match (self, rhs) {
            (Rational(a), RatFunc(_)) => (RatFunc(self::RatFunc::from_rational(a.clone())), rhs.clone()),
            (RatFunc(_), Rational(b)) => (self.clone(), RatFunc(self::RatFunc::from_rational(b.clone()))),
            (Rational(a), Cyclo { order, .. }) => {
                (Self::cyclo_from_poly(*order, &Poly::constant(a.clone())), rhs.clone())
            }
            (Cyclo { order, .. }, Rational(b)) => {
                (self.clone(), Self::cyclo_from_poly(*order, &Poly::constant(b.clone())))
            }
            (Cyclo { order: r1, .. }, Cyclo { order: r2, .. }) if r1 != r2 => {
                return Err(ScalarError::RingMismatch("ℚ(ζ_r)", "ℚ(ζ_s) with s ≠ r"))
            }
            (RatFunc(_), Cyclo { .. }) | (Cyclo { .. }, RatFunc(_)) => {
                return Err(ScalarError::RingMismatch(self.ring_name(), rhs.ring_name()))
            }
            _ => (self.clone(), rhs.clone()),
        })
    }

    fn binary(
        &self,
        rhs: &Self,
        rat: impl Fn(&Rational, &Rational) -> Result<Rational, ScalarError>,
        func: impl Fn(&RatFunc, &RatFunc) -> Result<RatFunc, ScalarError>,
        cyc: impl Fn(usize, &Poly, &Poly) -> Result<Poly, ScalarError>,
    ) -> Result<Self, ScalarError> {
        use Scalar::*;
        match self.unify(rhs)? {
            (Rational(a), Rational(b)) => Ok(Rational(rat(&a, &b)?)),
            (RatFunc(a), RatFunc(b)) => Ok(RatFunc(func(&a, &b)?)),
            (Cyclo { order, coeffs: a }, Cyclo { coeffs: b, .. }) => {
                let p = cyc(order, &Poly::from_coeffs(a), &Poly::from_coeffs(b))?;
                Ok(Self::cyclo_from_poly(order, &p))
            }
            _ => unreachable!("unify returns operands in one ring"),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.binary(rhs, |a, b| Ok(a.add(b)), |a, b| Ok(a.add(b)), |_, a, b| Ok(a.add(b)))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.binary(rhs, |a, b| Ok(a.sub(b)), |a, b| Ok(a.sub(b)), |_, a, b| Ok(a.sub(b)))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.binary(rhs, |a, b| Ok(a.mul(b)), |a, b| Ok(a.mul(b)), |_, a, b| Ok(a.mul(b)))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.binary(
            rhs,
            |a, b| a.div(b),
            |a, b| b.inv().map(|i| a.mul(&i)).ok_or(ScalarError::DivisionByZero),
            |order, a, b| {
                let m = cyclotomic_polynomial(order);
                let inv = b.inverse_mod(&m).ok_or(ScalarError::DivisionByZero)?;
                Ok(a.mul(&inv))
            },
        )
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::RatFunc(a) => a.is_zero(),
            Scalar::Cyclo { coeffs, .. } => coeffs.iter().all(Rational::is_zero),
        }
    }

    /// Evaluates a rational function (or coerces a rational) at `q = ζ_r`.
    pub fn specialize(&self, order: usize) -> Result<Self, ScalarError> {
        if order == 0 || order > MAX_ORDER {
            return Err(ScalarError::BadOrder(order));
        }
        match self {
            Scalar::Rational(a) => Ok(Self::cyclo_from_poly(order, &Poly::constant(a.clone()))),
            Scalar::RatFunc(f) => {
                let m = cyclotomic_polynomial(order);
                let den = f.denom().div_rem(&m).unwrap().1;
                let inv = den.inverse_mod(&m).ok_or(ScalarError::VanishingDenominator { order })?;
                Ok(Self::cyclo_from_poly(order, &f.numer().mul(&inv)))
            }
            Scalar::Cyclo { order: o, .. } if *o == order => Ok(self.clone()),
            Scalar::Cyclo { .. } => Err(ScalarError::RingMismatch("ℚ(ζ_r)", "ℚ(ζ_s) with s ≠ r")),
        }
    }

    pub fn to_cyclo<const R: usize>(&self) -> Result<Cyclo<R>, ScalarError> {
        match self.specialize(R)? {
            Scalar::Cyclo { coeffs, .. } => Cyclo::from_coeffs(coeffs),
            _ => unreachable!(),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::Rational(c)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Scalar::RatFunc(f)
    }
}

impl<const R: usize> From<Cyclo<R>> for Scalar {
    fn from(c: Cyclo<R>) -> Self {
        Scalar::Cyclo { order: R, coeffs: c.coeffs().to_vec() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{}", a),
            Scalar::RatFunc(a) => write!(f, "{}", a),
            Scalar::Cyclo { order, coeffs } => cyclo::fmt_cyclo(f, coeffs, *order),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// A cyclotomic literal if it ends in `@r`, a rational function if it
    /// mentions `q`, otherwise a rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((body, order)) = t.rsplit_once('@') {
            let order: usize = order.trim().parse().map_err(|_| ScalarError::Parse(String::from(s)))?;
            let inner = body
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| ScalarError::Parse(String::from(s)))?;
            let coeffs = inner.split(',').map(|c| c.parse()).collect::<Result<Vec<Rational>, _>>()?;
            return Scalar::cyclo(order, coeffs);
        }
        if t.contains('q') {
            return Ok(Scalar::RatFunc(t.parse()?));
        }
        match t.parse::<Rational>() {
            Ok(r) => Ok(Scalar::Rational(r)),
            // expressions like "1/2*3" still have a rational value
            Err(_) => {
                let f: RatFunc = t.parse()?;
                match f.numer().degree() {
                    None => Ok(Scalar::Rational(Rational::zero())),
                    Some(0) if f.is_polynomial() => Ok(Scalar::Rational(f.numer().coeff(0))),
                    _ => Ok(Scalar::RatFunc(f)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(s("1/2").add(&s("1/3")).unwrap(), s("5/6"));
        assert_eq!(s("1").div(&s("0")), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn cyclotomic_examples() {
        // ζ_2 + 1 = 0
        let z2 = Scalar::cyclo(2, vec![Rational::from(-1)]).unwrap();
        assert!(z2.add(&s("1")).unwrap().is_zero());
        // 1 + ζ_3 + ζ_3^2 = 0
        let z3 = s("[0,1]@3");
        let sum = s("1").add(&z3).unwrap().add(&z3.mul(&z3).unwrap()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(z3.to_string(), "[0,1]@3");
    }

    #[test]
    fn mixing_rings() {
        let f = s("1-q");
        let z = s("[0,1]@3");
        assert!(matches!(f.add(&z), Err(ScalarError::RingMismatch(..))));
        assert!(s("[1]@2").add(&z).is_err());
        assert_eq!(s("1/2").add(&f).unwrap(), s("3/2-q"));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(s("q").specialize(2).unwrap(), s("[-1]@2"));
        assert!(s("(1-q^3)/(1-q)").specialize(3).unwrap().is_zero());
        assert_eq!(s("1/(1-q)").specialize(1), Err(ScalarError::VanishingDenominator { order: 1 }));
        assert_eq!(s("q/(1+q^2)").specialize(4), Err(ScalarError::VanishingDenominator { order: 4 }));
    }

    #[test]
    fn canonical_zero_in_every_ring() {
        for x in ["7/3", "q^2/(1-q)", "[1/2,-3]@4"] {
            let a = s(x);
            assert!(a.sub(&a).unwrap().is_zero(), "{}", x);
        }
    }

    #[test]
    fn typed_round_trip() {
        let c: Cyclo<4> = s("q").to_cyclo().unwrap();
        assert_eq!(c, Cyclo::<4>::zeta());
        assert_eq!(Scalar::from(c).to_string(), "[0,1]@4");
    }
}
