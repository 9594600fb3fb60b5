//! Exact coefficient rings: the rationals, prime fields and (for arithmetic
//! only) the integers. Every operation is exact; there is no floating point
//! anywhere in the crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ring tag. `Integers` is carried for arithmetic only; operations that need
/// division (row reduction, idempotent splitting, hom solving) reject it with
/// [`Error::UnsupportedRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Rationals,
    PrimeField(u64),
    Integers,
}

/// A single ring element. The variant must match the ring it is used with;
/// prime-field residues are always stored reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod(u64),
    Int(BigInt),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Extended gcd on u64, returning x with a*x = gcd(a, p) mod p.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    let p = p as i128;
    Some(((old_s % p + p) % p) as u64)
}

impl Ring {
    pub fn rationals() -> Ring {
        Ring::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn integers() -> Ring {
        Ring::Integers
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// Parses the CLI ring tags: `q`, `z`, or `fp<prime>` such as `fp2`, `fp5`.
    pub fn parse(tag: &str) -> Result<Ring> {
        match tag {
            "q" | "Q" => Ok(Ring::Rationals),
            "z" | "Z" => Ok(Ring::Integers),
            _ => {
                let rest = tag
                    .strip_prefix("fp")
                    .or_else(|| tag.strip_prefix("Fp"))
                    .or_else(|| tag.strip_prefix("FP"))
                    .ok_or_else(|| Error::Usage(format!("unknown ring tag `{tag}`")))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::Usage(format!("unknown ring tag `{tag}`")))?;
                Ring::prime_field(p)
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Ring::Rationals => Scalar::Rational(BigRational::zero()),
            Ring::PrimeField(_) => Scalar::Mod(0),
            Ring::Integers => Scalar::Int(BigInt::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Ring::Rationals => Scalar::Rational(BigRational::one()),
            Ring::PrimeField(_) => Scalar::Mod(1),
            Ring::Integers => Scalar::Int(BigInt::one()),
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Ring::Rationals => Scalar::Rational(BigRational::from(BigInt::from(v))),
            Ring::PrimeField(p) => {
                let r = v.rem_euclid(p as i64);
                Scalar::Mod(r as u64)
            }
            Ring::Integers => Scalar::Int(BigInt::from(v)),
        }
    }

    fn expect_pair<'a>(self, a: &'a Scalar, b: &'a Scalar) -> Result<(&'a Scalar, &'a Scalar)> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::RingMismatch(format!(
                "scalars {a:?}, {b:?} do not both live in {self:?}"
            )));
        }
        Ok((a, b))
    }

    pub fn contains(self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (Ring::Rationals, Scalar::Rational(_))
                | (Ring::PrimeField(_), Scalar::Mod(_))
                | (Ring::Integers, Scalar::Int(_))
        )
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.expect_pair(a, b)?;
        Ok(match (self, a, b) {
            (Ring::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Ring::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            (Ring::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            _ => unreachable!(),
        })
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.expect_pair(a, b)?;
        Ok(match (self, a, b) {
            (Ring::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Ring::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            (Ring::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            _ => unreachable!(),
        })
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Ring::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Ring::PrimeField(p), Scalar::Mod(x)) => Scalar::Mod((p - x % p) % p),
            (Ring::Integers, Scalar::Int(x)) => Scalar::Int(-x),
            _ => panic!("scalar does not live in {self:?}"),
        }
    }

    pub fn inv(self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (Ring::Rationals, Scalar::Rational(x)) => {
                if x.is_zero() {
                    Err(Error::Precondition("division by zero".into()))
                } else {
                    Ok(Scalar::Rational(x.recip()))
                }
            }
            (Ring::PrimeField(p), Scalar::Mod(x)) => mod_inverse(x % p, p)
                .map(Scalar::Mod)
                .ok_or_else(|| Error::Precondition("division by zero".into())),
            (Ring::Integers, Scalar::Int(x)) => {
                if x.abs() == BigInt::one() {
                    Ok(Scalar::Int(x.clone()))
                } else {
                    Err(Error::UnsupportedRing("integers".into()))
                }
            }
            _ => Err(Error::RingMismatch(format!("{a:?} not in {self:?}"))),
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
            Scalar::Int(x) => x.is_zero(),
        }
    }

    pub fn name(self) -> String {
        match self {
            Ring::Rationals => "Q".to_string(),
            Ring::PrimeField(p) => format!("F{p}"),
            Ring::Integers => "Z".to_string(),
        }
    }

    /// Parses an element from its display form (`7`, `-3`, `1/2`).
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Json(format!("cannot parse `{s}` as an element of {}", self.name()));
        match self {
            Ring::Rationals => {
                if let Some((n, d)) = s.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(Error::Json(format!("zero denominator in `{s}`")));
                    }
                    Ok(Scalar::Rational(BigRational::new(n, d)))
                } else {
                    let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                    Ok(Scalar::Rational(BigRational::from(n)))
                }
            }
            Ring::PrimeField(_) => {
                let v = i64::from_str(s.trim()).map_err(|_| bad())?;
                Ok(self.from_i64(v))
            }
            Ring::Integers => {
                let v = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Scalar::Int(v))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Int(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
