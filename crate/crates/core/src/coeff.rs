//! Exact coefficient fields: the rationals and prime fields GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted prime modulus. Residue products must fit in a `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

/// Brings `num/den` into canonical form: reduced, denominator positive, zero as `0/1`.
pub fn normalize_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let num = num.into();
    let den = den.into();
    if den.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(Rational(BigRational::new(num, den)))
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Residue class modulo a prime `p <= MAX_PRIME`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    fn new(value: u64, modulus: u64) -> Self {
        PrimeFieldElem {
            residue: value % modulus,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (residue, p).
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let inv = t0.rem_euclid(self.modulus as i128) as u64;
        Ok(PrimeFieldElem::new(inv, self.modulus))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A coefficient field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p); rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::invalid(format!(
                "prime modulus {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
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
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(Rational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                Coeff::Prime(PrimeFieldElem::new(r, *p))
            }
        }
    }

    /// The image of `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Rational(normalize_rational(num.clone(), den.clone())?)),
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                Ok(&self.from_bigint(num) * &d.inverse()?)
            }
        }
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

/// An element of a [`Field`]. Operands of a binary operation must share a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(Rational),
    Prime(PrimeFieldElem),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Prime(e) => Field::Prime(e.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Prime(e) => e.residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Prime(e) => e.residue == 1,
        }
    }

    /// True when the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Prime(_) => false,
        }
    }

    pub fn inverse(&self) -> Result<Coeff> {
        match self {
            Coeff::Rational(r) => r.inverse().map(Coeff::Rational),
            Coeff::Prime(e) => e.inverse().map(Coeff::Prime),
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(r) => Coeff::Rational(r.abs()),
            Coeff::Prime(_) => self.clone(),
        }
    }
}

fn mismatch(a: &Coeff, b: &Coeff) -> ! {
    panic!("coefficient field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational(&a.0 + &b.0)),
            (Coeff::Prime(a), Coeff::Prime(b)) if a.modulus == b.modulus => {
                Coeff::Prime(PrimeFieldElem::new(a.residue + b.residue, a.modulus))
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &(-rhs)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational(&a.0 * &b.0)),
            (Coeff::Prime(a), Coeff::Prime(b)) if a.modulus == b.modulus => {
                Coeff::Prime(PrimeFieldElem::new(a.residue * b.residue, a.modulus))
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(Rational(-&a.0)),
            Coeff::Prime(a) => Coeff::Prime(PrimeFieldElem::new(a.modulus - a.residue, a.modulus)),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => r.fmt(f),
            Coeff::Prime(e) => write!(f, "{}", e.residue),
        }
    }
}

/// Multiplicative inverse in the element's own field.
pub fn field_inverse(a: &Coeff) -> Result<Coeff> {
    a.inverse()
}
