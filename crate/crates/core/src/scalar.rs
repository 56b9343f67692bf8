//! Exact scalars: arbitrary-precision rationals and odd prime fields GF(p).
//!
//! Every scalar is tagged with the field it lives in; mixing fields in an
//! arithmetic operation is a programming error and panics. Rationals are kept
//! in lowest terms with positive denominator by `num_rational`; residues are
//! kept in `[0, p)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: ℚ or GF(p) for an odd prime p.
///
/// p = 2 is rejected at construction since the basis-change and R-matrix
/// formulas divide by 2 and 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rational,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    /// GF(p) for an odd prime p.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// Parses `"rational"` or `"gf:<p>"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(FieldSpec::Rational),
            _ => {
                if let Some(p) = s.strip_prefix("gf:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
                    FieldSpec::prime_field(p)
                } else {
                    Err(Error::Parse(format!(
                        "expected `rational` or `gf:<p>`, got `{s}`"
                    )))
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Residue { value: r, modulus: *p }
            }
        }
    }

    /// The exact fraction num/den in this field (den inverted mod p for GF(p)).
    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            FieldSpec::Rational => {
                Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::PrimeField(_) => {
                let d = self.from_i64(den);
                self.from_i64(num) * d.inv().expect("denominator divisible by p")
            }
        }
    }

    /// (−1)^k.
    pub fn sign(&self, k: u32) -> Scalar {
        if k % 2 == 0 {
            self.one()
        } else {
            self.from_i64(-1)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

/// An element of ℚ or of GF(p), tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
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

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Residue { value, modulus } => {
                if *value == 0 {
                    return Err(Error::NotInvertible);
                }
                // Fermat: v^(p-2) mod p.
                let mut acc = 1u128;
                let mut base = *value as u128;
                let mut e = *modulus - 2;
                let m = *modulus as u128;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Ok(Scalar::Residue { value: acc as u64, modulus: *modulus })
            }
        }
    }

    /// Parses a literal in the given field: an integer or `"num/den"`.
    pub fn parse_in(field: FieldSpec, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar literal `{s}`")))?;
        match den {
            None => Ok(field.from_i64(n)),
            Some(d) => {
                let d: i64 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad scalar literal `{s}`")))?;
                if d == 0 {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(field.from_ratio(n, d))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) => {
                let p = same_modulus(p, q);
                Scalar::Residue { value: (a + b) % p, modulus: p }
            }
            _ => panic!("cannot mix rational and prime-field scalars"),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) => {
                let p = same_modulus(p, q);
                Scalar::Residue {
                    value: ((a as u128 * b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => panic!("cannot mix rational and prime-field scalars"),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if value == 0 { 0 } else { modulus - value },
                modulus,
            },
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.clone() - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.clone() + rhs.clone()
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.clone() * rhs.clone()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

/// Fraction check used by tests: rationals must be reduced with positive
/// denominator, residues in range.
pub fn is_normalized(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => {
            r.denom().is_positive()
                && num_integer::Integer::gcd(r.numer(), r.denom()).is_one()
        }
        Scalar::Residue { value, modulus } => value < modulus,
    }
}
