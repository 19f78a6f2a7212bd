//! Exact scalars: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// Largest modulus accepted for prime fields. Products of two residues are
/// formed in `u128`, so any `u64` would do; this keeps residues printable
/// and primality testing by trial division cheap.
pub const MAX_PRIME: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut k = 3u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::NonPrime(p));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime { p } => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Embeds a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match *self {
            FieldSpec::Rational => Ok(Scalar::Rational(q.clone())),
            FieldSpec::Prime { p } => {
                let pm = BigInt::from(p);
                let num = q.numer().mod_floor(&pm).to_u64().unwrap();
                let den = q.denom().mod_floor(&pm).to_u64().unwrap();
                if den == 0 {
                    return Err(Error::InvalidCoefficient {
                        text: q.to_string(),
                        reason: format!("denominator is not invertible mod {p}"),
                    });
                }
                Ok(Scalar::Mod {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }

    /// Parses `"-3"`, `"2/7"` or a residue `"5"`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::InvalidCoefficient {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("not an integer or fraction"))?;
        let den: BigInt = den.parse().map_err(|_| bad("not an integer or fraction"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        self.from_rational(&BigRational::new(num, den))
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rational, Scalar::Rational(_)) => true,
            (FieldSpec::Prime { p }, Scalar::Mod { modulus, .. }) => p == modulus,
            _ => false,
        }
    }

    pub fn check(&self, s: &Scalar) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: self.to_string(),
                found: s.field().to_string(),
            })
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Integer representative used by fraction-free elimination and display.
    pub fn as_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        q: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        m: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: p2 },
            ) if p == p2 => Scalar::Mod {
                value: m(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!(
                "scalar field mismatch: {} vs {}",
                self.field(),
                rhs.field()
            ),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, mul_mod)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Scalar {
    /// Sign helper `(-1)^k * self`.
    pub fn signed(&self, k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            self.clone()
        } else {
            -self
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}
