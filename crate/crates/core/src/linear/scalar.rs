//! Exact scalars.
//!
//! A [`Scalar`] is a normalized rational number. Small values live inline as a pair of `i64`
//! and spill to a heap-allocated [`BigRational`] on overflow, so Smith-form pivots can grow
//! without silently wrapping. Integers and prime-field residues are rationals with
//! denominator one; the [`BaseRing`](super::BaseRing) decides how they are reduced.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
enum Repr {
    /// numerator, denominator; denominator > 0, gcd = 1
    Small(i64, i64),
    Big(Box<BigRational>),
}

#[derive(Clone, Debug)]
pub struct Scalar(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        match n.to_i64() {
            Some(v) => Scalar(Repr::Small(v, 1)),
            None => Scalar(Repr::Big(Box::new(BigRational::from_integer(n)))),
        }
    }

    pub fn from_ratio(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    /// `n / d` normalized; panics on `d == 0`.
    pub fn fraction(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128_pair(n as i128, d as i128)
    }

    fn from_i128_pair(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Self::zero();
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Scalar(Repr::Small(a, b)),
            _ => Scalar(Repr::Big(Box::new(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    pub fn to_ratio(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(r) => r.is_one(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// Integer value, if this scalar is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            Repr::Small(..) => None,
            Repr::Big(r) if r.is_integer() => r.numer().to_i64(),
            Repr::Big(_) => None,
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128_pair(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_ratio(r.recip()),
        }
    }

    /// Floor division of integers.
    pub fn div_floor(&self, other: &Scalar) -> Scalar {
        debug_assert!(self.is_integer() && other.is_integer());
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) if !(*a == i64::MIN && *b == -1) => {
                Scalar::from_i64(a.div_floor(b))
            }
            _ => Scalar::from_bigint(self.numer().div_floor(&other.numer())),
        }
    }

    /// Nonnegative remainder of integers modulo `m` (`m != 0`).
    pub fn mod_floor(&self, m: &Scalar) -> Scalar {
        debug_assert!(self.is_integer() && m.is_integer());
        match (&self.0, &m.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => {
                Scalar::from_i64((*a as i128).rem_euclid((*b as i128).abs()) as i64)
            }
            _ => {
                let b = m.numer().abs();
                Scalar::from_bigint(self.numer().mod_floor(&b))
            }
        }
    }

    /// Division rounded to the nearest integer (ties toward floor); used to keep
    /// Euclidean reductions balanced around zero.
    pub fn div_round(&self, other: &Scalar) -> Scalar {
        let q = self.div_floor(other);
        let r = self - &(&q * other);
        let twice = &r + &r;
        // r carries the sign of `other`, so stepping q up moves r toward zero either way
        if twice.abs() > other.abs() {
            q + Scalar::one()
        } else {
            q
        }
    }

    pub fn gcd(&self, other: &Scalar) -> Scalar {
        debug_assert!(self.is_integer() && other.is_integer());
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => {
                Scalar::from_i128_pair(gcd_i128(*a as i128, *b as i128), 1)
            }
            _ => Scalar::from_bigint(self.numer().gcd(&other.numer())),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::from_i64(v as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_bigint(v)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            _ => self.to_ratio() == other.to_ratio(),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_ratio().cmp(&other.to_ratio()),
        }
    }
}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(v) => Scalar(Repr::Small(v, 1)),
                None => Scalar::from_i128_pair(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match a.checked_mul(d).zip(c.checked_mul(b)) {
                    Some((x, y)) => match x.checked_add(y) {
                        Some(n) => Scalar::from_i128_pair(n, b * d),
                        None => Scalar::from_ratio(self.to_ratio() + rhs.to_ratio()),
                    },
                    None => Scalar::from_ratio(self.to_ratio() + rhs.to_ratio()),
                }
            }
            _ => Scalar::from_ratio(self.to_ratio() + rhs.to_ratio()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(v) => Scalar(Repr::Small(v, 1)),
                None => Scalar::from_i128_pair(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let n = (*a as i128).checked_mul(*c as i128);
                let m = (*b as i128).checked_mul(*d as i128);
                match n.zip(m) {
                    Some((n, m)) => Scalar::from_i128_pair(n, m),
                    None => Scalar::from_ratio(self.to_ratio() * rhs.to_ratio()),
                }
            }
            _ => Scalar::from_ratio(self.to_ratio() * rhs.to_ratio()),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.recip()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(v) => Scalar(Repr::Small(v, *d)),
                None => Scalar::from_ratio(-self.to_ratio()),
            },
            Repr::Big(r) => Scalar::from_ratio(-(**r).clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar {:?}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseScalarError(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Scalar::from_ratio(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| err())?;
                Ok(Scalar::from_bigint(n))
            }
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Scalar::from_i64)
                .ok_or_else(|| serde::de::Error::custom("scalar must be an integer or a string")),
            _ => Err(serde::de::Error::custom("expected a scalar")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_normalizes() {
        let a = Scalar::fraction(2, 4);
        assert_eq!(a, Scalar::fraction(1, 2));
        assert_eq!(&a + &a, Scalar::one());
        assert_eq!(Scalar::fraction(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn overflow_spills_to_bigint() {
        let big = Scalar::from_i64(i64::MAX);
        let sq = &big * &big;
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.numer(), expected);
        assert_eq!((&sq / &big), big);
        let back = &(&sq - &sq) + &Scalar::one();
        assert!(back.is_one());
    }

    #[test]
    fn parse_and_floor() {
        let x: Scalar = "-7".parse().unwrap();
        let three: Scalar = "3".parse().unwrap();
        assert_eq!(x.div_floor(&three), Scalar::from_i64(-3));
        assert_eq!(x.mod_floor(&three), Scalar::from_i64(2));
        assert_eq!("6/4".parse::<Scalar>().unwrap(), Scalar::fraction(3, 2));
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn rounded_division_leaves_small_remainders() {
        for x in -20i64..=20 {
            for d in [-7i64, -4, -3, -2, -1, 1, 2, 3, 4, 7] {
                let (xs, ds) = (Scalar::from_i64(x), Scalar::from_i64(d));
                let r = &xs - &(&xs.div_round(&ds) * &ds);
                assert!(2 * r.to_i64().unwrap().abs() <= d.abs(), "{x} / {d}");
            }
        }
    }
}
