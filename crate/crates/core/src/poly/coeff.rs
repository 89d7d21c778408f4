//! Coefficient fields: exact rationals and prime residues.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// Mersenne prime 2^31 - 1, the default modulus for prime-field cross-checks.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Which field the coefficients of a polynomial live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Rationals,
    PrimeField(u64),
}

impl FieldTag {
    /// Validates `p` and returns the prime-field tag.
    ///
    /// Residues are multiplied in `u64`, so `p` must stay below 2^32.
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        Ok(FieldTag::PrimeField(p))
    }

    pub fn is_exact_rational(&self) -> bool {
        matches!(self, FieldTag::Rationals)
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Arithmetic needed from a coefficient field.
///
/// Elements know their own field; mixing elements of different fields is a
/// logic error and panics.
pub trait Coefficient:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero(field: FieldTag) -> Self;
    fn one(field: FieldTag) -> Self;
    /// Image of an exact rational; fails if the denominator vanishes in the field.
    fn from_rational(r: &BigRational, field: FieldTag) -> Result<Self, PolyError>;
    fn from_i64(v: i64, field: FieldTag) -> Self;
    fn field(&self) -> FieldTag;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv().expect("division by zero coefficient"))
    }

    /// True when the canonical printed form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Residue modulo `p`, or `None` if `p` divides the denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let num = self.0.numer().mod_floor(&pb).to_u64()?;
        let den = self.0.denom().mod_floor(&pb).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(mul_mod(num, inv_mod(den, p), p))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Coefficient for Rational {
    fn zero(_: FieldTag) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: FieldTag) -> Self {
        Rational(BigRational::one())
    }
    fn from_rational(r: &BigRational, field: FieldTag) -> Result<Self, PolyError> {
        debug_assert_eq!(field, FieldTag::Rationals);
        Ok(Rational(r.clone()))
    }
    fn from_i64(v: i64, _: FieldTag) -> Self {
        Rational::from_integer(v)
    }
    fn field(&self) -> FieldTag {
        FieldTag::Rationals
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn neg_ref(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn div_ref(&self, other: &Self) -> Self {
        assert!(!other.0.is_zero(), "division by zero coefficient");
        Rational(&self.0 / &other.0)
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Residue modulo a prime `p < 2^32`, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
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

fn prime_of(field: FieldTag) -> u64 {
    match field {
        FieldTag::PrimeField(p) => p,
        FieldTag::Rationals => panic!("prime-field coefficient requested over Q"),
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coefficient for Fp {
    fn zero(field: FieldTag) -> Self {
        Fp { value: 0, p: prime_of(field) }
    }
    fn one(field: FieldTag) -> Self {
        Fp { value: 1, p: prime_of(field) }
    }
    fn from_rational(r: &BigRational, field: FieldTag) -> Result<Self, PolyError> {
        let p = prime_of(field);
        let value = Rational(r.clone())
            .reduce_mod(p)
            .ok_or(PolyError::DenominatorVanishes(p))?;
        Ok(Fp { value, p })
    }
    fn from_i64(v: i64, field: FieldTag) -> Self {
        let p = prime_of(field);
        let value = v.rem_euclid(p as i64) as u64;
        Fp { value, p }
    }
    fn field(&self) -> FieldTag {
        FieldTag::PrimeField(self.p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed prime fields");
        let s = self.value + other.value;
        Fp { value: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed prime fields");
        let value = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.p - other.value
        };
        Fp { value, p: self.p }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed prime fields");
        Fp { value: mul_mod(self.value, other.value, self.p), p: self.p }
    }
    fn neg_ref(&self) -> Self {
        Fp { value: if self.value == 0 { 0 } else { self.p - self.value }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(Fp { value: inv_mod(self.value, self.p), p: self.p })
        }
    }
}
