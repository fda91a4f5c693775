//! Exact rationals with an inline `i64` fast path.
//!
//! Almost every coefficient that shows up in this crate is a small
//! fraction, so the canonical representation keeps numerator and
//! denominator in machine words and only promotes to a [`BigRational`]
//! when an intermediate result no longer fits.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ScalarError;

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

// Invariant: `Small` is used iff both parts fit in an i64 with
// `num != i64::MIN` (so negation never overflows). `Big` always holds a
// reduced BigRational that does not fit.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

impl Rational {
    pub const fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub const fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    /// Builds `num/den`; fails if `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n64), Ok(d64)) if n64 != i64::MIN => Rational(Repr::Small(n64, d64)),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // `r` is assumed reduced with positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// `(numerator, denominator)` when both fit in an `i64`.
    pub fn to_small(&self) -> Option<(i64, i64)> {
        match self.0 {
            Repr::Small(n, d) => Some((n, d)),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.denom().is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Self::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                let g = gcd_i128(b, d);
                let num = a * (d / g) + c * (b / g);
                let den = b * (d / g);
                Self::from_i128(num, den)
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Self::from_big(-b.clone()),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                if *b == 1 && *d == 1 {
                    return Self::from_i128(*a as i128 * *c as i128, 1);
                }
                // cross-cancel first so the product stays small
                let g1 = gcd_i128(*a as i128, *d as i128);
                let g2 = gcd_i128(*c as i128, *b as i128);
                let num = (*a as i128 / g1) * (*c as i128 / g2);
                let den = (*b as i128 / g2) * (*d as i128 / g1);
                Self::from_i128(num, den)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        rhs.inv().map(|r| self.mul(&r)).ok_or(ScalarError::DivisionByZero)
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
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational(Repr::Small(n as i64, 1))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    /// Accepts `"p"` or `"p/s"` with optional sign and surrounding spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, ScalarError> {
            let t = t.trim();
            let t = t.strip_prefix('+').unwrap_or(t);
            if t.is_empty() {
                return Err(ScalarError::Parse(String::from(s)));
            }
            BigInt::parse_bytes(t.as_bytes(), 10).ok_or_else(|| ScalarError::Parse(String::from(s)))
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}
