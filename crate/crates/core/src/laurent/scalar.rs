//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`; `p` must be prime.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Usage(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for the rationals, `p` for a prime field.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
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
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rational => Ok(Scalar::Rational(v.clone())),
            Field::Prime(_) => {
                let den = self.from_bigint(v.denom());
                if den.is_zero() {
                    return Err(Error::Usage(format!("{v} has no image in {self}")));
                }
                Ok(&self.from_bigint(v.numer()) * &den.inv())
            }
        }
    }

    /// Parses a coefficient written by [`Scalar`]'s `Display`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("bad coefficient {s:?} for field {self}"));
        match *self {
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(_) => {
                let v: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&v))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `Fp:<p>` and the shorthand `F<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected Q or Fp:<p>")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad field modulus in {s:?}")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept reduced with positive denominator
/// (guaranteed by `BigRational`); residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Scalar {
        let mut base = self.clone();
        let mut out = self.field().one();
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::Usage(format!(
                "mixed-field arithmetic: {} and {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self * other)
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue {
                    value: a,
                    modulus: p,
                },
                Scalar::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Residue {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue {
                    value: a,
                    modulus: p,
                },
                Scalar::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Residue {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Sign of a rational scalar; residues have no sign and report `None`.
pub fn rational_sign(s: &Scalar) -> Option<std::cmp::Ordering> {
    s.as_rational().map(|r| {
        if r.is_positive() {
            std::cmp::Ordering::Greater
        } else if r.is_negative() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Equal
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("F2".parse::<Field>().unwrap(), Field::Prime(2));
        assert!("Fp:8".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
        assert_eq!(Field::Prime(5).to_string(), "Fp:5");
    }

    #[test]
    fn residue_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(-1);
        assert_eq!(
            a,
            Scalar::Residue {
                value: 6,
                modulus: 7
            }
        );
        assert!((&a * &a.inv()).is_one());
        assert!((&a + &f.one()).is_zero());
        assert_eq!(
            f.from_rational(&BigRational::new(1.into(), 2.into()))
                .unwrap(),
            f.from_i64(4)
        );
        assert!(f
            .from_rational(&BigRational::new(1.into(), 7.into()))
            .is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let s = Field::Rational.parse_scalar("6/-4").unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(Field::Rational.parse_scalar("5").unwrap().to_string(), "5");
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Field::Rational.one();
        let b = Field::Prime(3).one();
        assert!(matches!(a.try_add(&b), Err(Error::Usage(_))));
        assert!(a.try_mul(&a).is_ok());
    }
}
