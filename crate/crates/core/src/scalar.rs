//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.
//!
//! A [`FieldScalar`] always knows which field it lives in. The fallible
//! `try_*` methods report a [`Error::FieldMismatch`] when kinds are mixed; the
//! operator impls on references panic instead and are meant for code paths
//! where the field was already checked at the API boundary.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default prime for fast enumeration.
pub const DEFAULT_PRIME: u64 = 32003;

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field `F_p`; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => FieldScalar::Mod(ModP::new((n as i128).rem_euclid(p as i128) as u64, p)),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => FieldScalar::Mod(ModP::new(bigint_mod(n, p), p)),
        }
    }

    /// The scalar `num / den`.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FieldScalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// Maps an exact rational into this field.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldScalar> {
        FieldScalar::Rational(q.clone()).reduce(self)
    }

    pub fn check(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self, other))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    fn new(value: u64, p: u64) -> Self {
        debug_assert!(value < p);
        ModP { value, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Mod(ModP),
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Mod(m) => Field::Prime(m.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::Mod(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_one(),
            FieldScalar::Mod(m) => m.value == 1,
        }
    }

    pub fn try_add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => Ok(FieldScalar::Rational(a + b)),
            (FieldScalar::Mod(a), FieldScalar::Mod(b)) if a.p == b.p => {
                Ok(FieldScalar::Mod(ModP::new(add_mod(a.value, b.value, a.p), a.p)))
            }
            _ => Err(Error::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn try_sub(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => Ok(FieldScalar::Rational(a * b)),
            (FieldScalar::Mod(a), FieldScalar::Mod(b)) if a.p == b.p => {
                Ok(FieldScalar::Mod(ModP::new(mul_mod(a.value, b.value, a.p), a.p)))
            }
            _ => Err(Error::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn try_div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(q) => FieldScalar::Rational(q.recip()),
            FieldScalar::Mod(m) => FieldScalar::Mod(ModP::new(inv_mod(m.value, m.p), m.p)),
        })
    }

    fn neg_ref(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(q) => FieldScalar::Rational(-q),
            FieldScalar::Mod(m) => FieldScalar::Mod(ModP::new((m.p - m.value) % m.p, m.p)),
        }
    }

    /// Maps the scalar into `target`. Rationals reduce modulo `p` when the
    /// denominator is invertible; residues only map to their own field.
    pub fn reduce(&self, target: Field) -> Result<FieldScalar> {
        match (self, target) {
            (FieldScalar::Rational(_), Field::Rational) => Ok(self.clone()),
            (FieldScalar::Rational(q), Field::Prime(p)) => {
                let den = bigint_mod(q.denom(), p);
                if den == 0 {
                    return Err(Error::BadReduction { value: self.to_string(), p });
                }
                let num = bigint_mod(q.numer(), p);
                Ok(FieldScalar::Mod(ModP::new(mul_mod(num, inv_mod(den, p), p), p)))
            }
            (FieldScalar::Mod(m), Field::Prime(p)) if m.p == p => Ok(self.clone()),
            _ => Err(Error::FieldMismatch(self.field(), target)),
        }
    }

    /// Integer representative of a residue in `(-p/2, p/2]`; rationals are
    /// returned unchanged.
    pub fn lift_centered(&self) -> BigRational {
        match self {
            FieldScalar::Rational(q) => q.clone(),
            FieldScalar::Mod(m) => {
                let v = if m.value > m.p / 2 { m.value as i128 - m.p as i128 } else { m.value as i128 };
                BigRational::from_integer(BigInt::from(v))
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rational(q) => Some(q),
            FieldScalar::Mod(_) => None,
        }
    }

    pub fn as_mod(&self) -> Option<ModP> {
        match self {
            FieldScalar::Rational(_) => None,
            FieldScalar::Mod(m) => Some(*m),
        }
    }

    /// Small integers fit into `i64`; used for pretty printing and tests.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldScalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            FieldScalar::Rational(_) => None,
            FieldScalar::Mod(m) => i64::try_from(m.value).ok(),
        }
    }

    /// Parses `p`, `-p` or `p/q` as a rational.
    pub fn parse_rational(s: &str) -> Option<FieldScalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(FieldScalar::Rational(BigRational::new(num, den)))
    }
}

fn mismatch_panic(a: &FieldScalar, b: &FieldScalar) -> ! {
    panic!("scalar kind mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_add(rhs).unwrap_or_else(|_| mismatch_panic(self, rhs))
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_sub(rhs).unwrap_or_else(|_| mismatch_panic(self, rhs))
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        self.try_mul(rhs).unwrap_or_else(|_| mismatch_panic(self, rhs))
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            FieldScalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            FieldScalar::Mod(m) => write!(f, "{}", m.value),
        }
    }
}

pub(crate) fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldScalar {
        Field::Rational.from_ratio(n, d).unwrap()
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = q(2, -4);
        let r = x.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!((&x + &q(1, 2)).to_string(), "0");
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a.as_mod().unwrap().value(), 6);
        assert!((&a * &a).is_one());
        assert!((&f.from_i64(3) * &f.from_i64(3).inv().unwrap()).is_one());
        assert_eq!(f.from_ratio(1, 2).unwrap().as_mod().unwrap().value(), 4);
    }

    #[test]
    fn mixing_kinds_is_an_error() {
        let a = Field::Rational.one();
        let b = Field::Prime(5).one();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch(Field::Rational, Field::Prime(5))));
        let c = Field::Prime(7).one();
        assert!(b.try_mul(&c).is_err());
    }

    #[test]
    fn reduction_rejects_bad_denominators() {
        assert!(q(1, 5).reduce(Field::Prime(5)).is_err());
        assert_eq!(q(3, 2).reduce(Field::Prime(5)).unwrap().as_mod().unwrap().value(), 4);
    }

    #[test]
    fn primality() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(32001).is_err());
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(FieldScalar::parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(FieldScalar::parse_rational("7").unwrap(), q(7, 1));
        assert!(FieldScalar::parse_rational("1/0").is_none());
        assert!(FieldScalar::parse_rational("x").is_none());
    }

    #[test]
    fn centered_lift() {
        let f = Field::Prime(11);
        assert_eq!(f.from_i64(10).lift_centered(), BigRational::from_integer((-1).into()));
        assert_eq!(f.from_i64(5).lift_centered(), BigRational::from_integer(5.into()));
    }
}
