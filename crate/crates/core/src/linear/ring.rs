use std::fmt;

use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// The commutative base ring `R` an algebra is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseRing {
    Rationals,
    PrimeField(u64),
    Integers,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `|n|` in increasing order, without multiplicity.
pub fn prime_factors(n: &num_bigint::BigInt) -> Vec<u64> {
    use num_traits::{One, Signed, ToPrimitive, Zero};
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while !n.is_one() {
        let bd = num_bigint::BigInt::from(d);
        if &bd * &bd > n {
            out.push(n.to_u64().expect("prime factor exceeds u64"));
            break;
        }
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    out
}

impl BaseRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(BaseRing::PrimeField(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not a prime")))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, BaseRing::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseRing::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Bring a scalar into canonical form for this ring.
    ///
    /// Over `F_p` rationals `a/b` with `p ∤ b` are mapped to residues in `0..p`.
    pub fn normalize(&self, x: &Scalar) -> Scalar {
        match self {
            BaseRing::PrimeField(p) => {
                let p = Scalar::from_i64(*p as i64);
                if x.is_integer() {
                    x.mod_floor(&p)
                } else {
                    let n = Scalar::from_bigint(x.numer()).mod_floor(&p);
                    let d = Scalar::from_bigint(x.denom()).mod_floor(&p);
                    (&n * &self.inv(&d)).mod_floor(&p)
                }
            }
            _ => x.clone(),
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match self {
            BaseRing::Rationals => true,
            BaseRing::Integers => x.is_integer(),
            BaseRing::PrimeField(p) => {
                x.is_integer() && !x.is_negative() && x < &Scalar::from_i64(*p as i64)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            BaseRing::PrimeField(p) => x.mod_floor(&Scalar::from_i64(*p as i64)),
            _ => x,
        }
    }

    /// Multiplicative inverse in a field; over `Z` only for `±1`.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match self {
            BaseRing::Rationals => a.recip(),
            BaseRing::Integers => {
                assert!(a.abs().is_one(), "non-unit {a} inverted over Z");
                a.clone()
            }
            BaseRing::PrimeField(p) => {
                let p = *p as i128;
                let a = a.to_i64().expect("residue") as i128;
                let (mut r0, mut r1) = (a.rem_euclid(p), p);
                let (mut s0, mut s1) = (1i128, 0i128);
                assert!(r0 != 0, "zero has no inverse");
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                Scalar::from_i64(s0.rem_euclid(p) as i64)
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match self {
            BaseRing::Integers => a.abs().is_one(),
            _ => !a.is_zero(),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let x: Scalar = s
            .parse()
            .map_err(|e: super::scalar::ParseScalarError| Error::InvalidInput(e.to_string()))?;
        match self {
            BaseRing::Integers if !x.is_integer() => Err(Error::InvalidInput(format!(
                "{s} is not an integer"
            ))),
            _ => Ok(self.normalize(&x)),
        }
    }

    /// Short name used in JSON and reports: `Q`, `Z`, `F5`.
    pub fn short_name(&self) -> String {
        match self {
            BaseRing::Rationals => "Q".into(),
            BaseRing::Integers => "Z".into(),
            BaseRing::PrimeField(p) => format!("F{p}"),
        }
    }

    pub fn from_short_name(s: &str) -> Result<Self> {
        match s {
            "Q" | "QQ" => Ok(BaseRing::Rationals),
            "Z" | "ZZ" => Ok(BaseRing::Integers),
            _ => {
                let p = s
                    .strip_prefix('F')
                    .or_else(|| s.strip_prefix("GF"))
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidInput(format!("unknown base ring {s}")))?;
                BaseRing::prime_field(p)
            }
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.short_name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(BaseRing::prime_field(7).is_ok());
        assert!(BaseRing::prime_field(1).is_err());
        assert!(BaseRing::prime_field(9).is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = BaseRing::PrimeField(7);
        for a in 1..7 {
            let x = Scalar::from_i64(a);
            assert!(f.mul(&x, &f.inv(&x)).is_one());
        }
        assert_eq!(f.normalize(&Scalar::fraction(1, 2)), Scalar::from_i64(4));
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(&num_bigint::BigInt::from(46656)), vec![2, 3]);
        assert_eq!(prime_factors(&num_bigint::BigInt::from(-1)), Vec::<u64>::new());
        assert_eq!(prime_factors(&num_bigint::BigInt::from(97)), vec![97]);
    }
}
