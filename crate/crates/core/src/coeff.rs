//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! A [`Scalar`] always knows which [`Domain`] it lives in. Mixing domains is an
//! error for the checked operations (`try_add` and friends) and a panic for the
//! operator impls, which are meant for code that has already validated its
//! inputs (the polynomial layer checks domains once per operation).

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Generic integer coefficients over the rationals are drawn from
/// `[-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND] \ {0}`.
pub const RATIONAL_SAMPLE_BOUND: i64 = 1_000_000;

const MAX_MODULUS: u64 = 1 << 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rationals,
    Prime(u64),
}

impl Domain {
    /// Prime field with the given modulus. The modulus must be an odd prime
    /// below 2^63.
    pub fn prime(modulus: u64) -> Result<Self> {
        if !(3..MAX_MODULUS).contains(&modulus) || !is_prime(modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Domain::Prime(modulus))
    }

    pub fn default_prime() -> Self {
        Domain::Prime(DEFAULT_PRIME)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Domain::Rationals => None,
            Domain::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match *self {
            Domain::Rationals => Scalar::Rational(BigRational::from_integer(value.into())),
            Domain::Prime(p) => Scalar::Modular {
                value: reduce_i128(value as i128, p),
                modulus: p,
            },
        }
    }

    /// `numer / denom` in this domain.
    pub fn fraction(&self, numer: i64, denom: i64) -> Result<Scalar> {
        self.from_i64(numer).try_div(&self.from_i64(denom))
    }

    /// Parses `a`, `-a` or `a/b`. Over a prime field the value is reduced
    /// (and `a/b` means `a * b^-1`), so non-canonical spellings are accepted.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = |msg: &str| Error::parse(1, 1, format!("{msg}: {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad("invalid integer"))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad("invalid denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            Domain::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Domain::Prime(p) => {
                let n = reduce_big(&num, p);
                let d = reduce_big(&den, p);
                let n = Scalar::Modular {
                    value: n,
                    modulus: p,
                };
                let d = Scalar::Modular {
                    value: d,
                    modulus: p,
                };
                n.try_div(&d)
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => f.write_str("rational"),
            Domain::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `rational`, `rationals`, `QQ`, `prime` (default prime) and
    /// `prime:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rational" | "rationals" | "QQ" => Ok(Domain::Rationals),
            "prime" => Ok(Domain::default_prime()),
            _ => {
                let p = s
                    .strip_prefix("prime:")
                    .ok_or_else(|| Error::parse(1, 1, format!("unknown field {s:?}")))?;
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(1, 7, format!("invalid modulus {p:?}")))?;
                Domain::prime(p)
            }
        }
    }
}

impl Serialize for Domain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Domain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rational(_) => Domain::Rationals,
            Scalar::Modular { modulus, .. } => Domain::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True for a rational with negative sign. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        self.check_domain(other)?;
        if op == ArithOp::Div && other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let out = match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div => a / b,
            }),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular { value: b, .. },
            ) => {
                let (a, b, p) = (*a, *b, *p);
                let value = match op {
                    ArithOp::Add => add_mod(a, b, p),
                    ArithOp::Sub => add_mod(a, p - b, p),
                    ArithOp::Mul => mul_mod(a, b, p),
                    ArithOp::Div => mul_mod(a, inv_mod(b, p), p),
                };
                Scalar::Modular { value, modulus: p }
            }
            _ => unreachable!("domains checked above"),
        };
        out.debug_check_canonical();
        Ok(out)
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Div)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        self.domain().one().try_div(self)
    }

    /// True if this value is in canonical form (lowest terms, positive
    /// denominator, or reduced residue).
    pub fn is_canonical(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.denom().is_positive() && r.numer().gcd(r.denom()).is_one(),
            Scalar::Modular { value, modulus } => value < modulus,
        }
    }

    fn check_domain(&self, other: &Scalar) -> Result<()> {
        let (left, right) = (self.domain(), other.domain());
        if left != right {
            return Err(Error::DomainMismatch { left, right });
        }
        Ok(())
    }

    #[inline]
    fn debug_check_canonical(&self) {
        debug_assert!(self.is_canonical(), "non-canonical scalar {self:?}");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.arith(rhs, $op) {
                    Ok(s) => s,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, ArithOp::Add);
forward_op!(Sub, sub, ArithOp::Sub);
forward_op!(Mul, mul, ArithOp::Mul);
forward_op!(Div, div, ArithOp::Div);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

/// Draws a nonzero scalar outside `exclude`, deterministically from `rng`.
///
/// Prime fields sample uniformly from `[1, p)`; rationals sample integers from
/// `[-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND] \ {0}`.
pub fn sample_scalar<R: Rng + ?Sized>(
    domain: Domain,
    rng: &mut R,
    exclude: &HashSet<Scalar>,
) -> Result<Scalar> {
    sample_scalar_in(domain, RATIONAL_SAMPLE_BOUND, rng, exclude)
}

/// [`sample_scalar`] with an explicit integer bound for the rational range.
pub fn sample_scalar_in<R: Rng + ?Sized>(
    domain: Domain,
    rational_bound: i64,
    rng: &mut R,
    exclude: &HashSet<Scalar>,
) -> Result<Scalar> {
    let (lo, hi): (i64, i64) = match domain {
        Domain::Rationals => (-rational_bound, rational_bound),
        Domain::Prime(p) => (1, (p - 1) as i64),
    };
    let blocked = exclude
        .iter()
        .filter(|s| s.domain() == domain && !s.is_zero() && in_range(s, lo, hi))
        .count() as u64;
    let nonzero = match domain {
        Domain::Rationals => 2 * rational_bound.max(0) as u64,
        Domain::Prime(p) => p - 1,
    };
    if blocked >= nonzero {
        return Err(Error::ExhaustedDomain(domain));
    }
    let draw = |rng: &mut R| loop {
        let v = rng.random_range(lo..=hi);
        if v != 0 {
            break v;
        }
    };
    if blocked * 2 <= nonzero {
        // rejection sampling: at least half of the candidates are admissible
        loop {
            let s = domain.from_i64(draw(rng));
            if !exclude.contains(&s) {
                return Ok(s);
            }
        }
    }
    let admissible: Vec<Scalar> = (lo..=hi)
        .filter(|&v| v != 0)
        .map(|v| domain.from_i64(v))
        .filter(|s| !exclude.contains(s))
        .collect();
    Ok(admissible[rng.random_range(0..admissible.len())].clone())
}

fn in_range(s: &Scalar, lo: i64, hi: i64) -> bool {
    match s {
        Scalar::Rational(r) => {
            r.is_integer() && *r.numer() >= BigInt::from(lo) && *r.numer() <= BigInt::from(hi)
        }
        Scalar::Modular { .. } => true,
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
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

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce_i128(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

fn reduce_big(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
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
