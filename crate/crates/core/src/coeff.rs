//! Exact coefficient fields: the rationals and prime fields GF(p).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coeff::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field; fails when `den` vanishes.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::InvalidField(format!(
                "denominator {den} vanishes in {self}"
            )));
        }
        Ok(self.from_bigint(num).div(&d))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "QQ" || t == "Q" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("ZZ/"))
            .ok_or_else(|| Error::InvalidField(format!("unknown field `{t}`")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus in `{t}`")))?;
        Field::prime(p)
    }
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

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); prime-field values lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (
                Coeff::Prime {
                    value: a,
                    modulus: p,
                },
                Coeff::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                debug_assert_eq!(p, q);
                Coeff::Prime {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Prime { value, modulus } => Coeff::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (
                Coeff::Prime {
                    value: a,
                    modulus: p,
                },
                Coeff::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                debug_assert_eq!(p, q);
                Coeff::Prime {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        match self {
            Coeff::Rational(a) => Coeff::Rational(a.recip()),
            Coeff::Prime { value, modulus } => Coeff::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(a) => a.is_negative(),
            Coeff::Prime { .. } => false,
        }
    }

    /// The residue as an integer in `[0, p)`; `None` over the rationals.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Coeff::Prime { value, .. } => Some(*value),
            Coeff::Rational(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
