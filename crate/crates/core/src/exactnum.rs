//! Exact arithmetic in `Q(√D)`.
//!
//! Every coordinate, hitting value and inequality in this crate is a
//! [`QuadVal`], a number `p + q·√D` with rational `p`, `q` and a fixed
//! nonnegative integer radicand `D`. Signs are decided with integer
//! arithmetic only; floating point is used for display and nothing else.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formats as `num/den`, the denominator is always written.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n`, `n/d` or a finite decimal such as `-0.25`; decimals are
/// converted exactly (`0.9` is `9/10`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: BigInt =
            if int_digits.is_empty() { BigInt::zero() } else { int_digits.parse().map_err(|_| bad())? };
        let frac_num: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rat::new(whole * &scale + frac_num, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// `floor(√n)` for `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

pub fn isqrt_u64(n: u64) -> u64 {
    n.sqrt()
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = isqrt_u64(n);
    r * r == n
}

fn floor_rat(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Sign of `p + q·√d`, decided by comparing `p²` with `q²·d` on integers.
fn sign_of(p: &Rat, q: &Rat, d: u64) -> Ordering {
    let sp = p.numer().sign();
    let sq = q.numer().sign();
    use num_bigint::Sign::*;
    let as_ord = |s: num_bigint::Sign| match s {
        Minus => Ordering::Less,
        NoSign => Ordering::Equal,
        Plus => Ordering::Greater,
    };
    if sq == NoSign || d == 0 {
        return as_ord(sp);
    }
    if sp == NoSign || sp == sq {
        return as_ord(sq);
    }
    // opposite signs: |p| vs |q|√d  <=>  a²·d'² vs c²·b'²·d
    let lhs = p.numer() * p.numer() * q.denom() * q.denom();
    let rhs = q.numer() * q.numer() * p.denom() * p.denom() * BigInt::from(d);
    match lhs.cmp(&rhs) {
        Ordering::Greater => as_ord(sp),
        Ordering::Less => as_ord(sq),
        Ordering::Equal => Ordering::Equal,
    }
}

/// An exact element `p + q·√D` of `Q(√D)`.
///
/// The representation is canonical: when `D` is a perfect square `r²` the
/// value is stored as `(p + q·r) + 0·√D`, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadVal {
    d: u64,
    p: Rat,
    q: Rat,
}

impl QuadVal {
    pub fn new(d: u64, p: Rat, q: Rat) -> Self {
        let r = isqrt_u64(d);
        if r * r == d && !q.is_zero() {
            let p = p + q * Rat::from_integer(BigInt::from(r));
            return QuadVal { d, p, q: Rat::zero() };
        }
        QuadVal { d, p, q }
    }

    pub fn from_rat(d: u64, p: Rat) -> Self {
        QuadVal { d, p, q: Rat::zero() }
    }

    pub fn from_int(d: u64, n: i64) -> Self {
        Self::from_rat(d, rat_int(n))
    }

    pub fn zero(d: u64) -> Self {
        Self::from_int(d, 0)
    }

    pub fn one(d: u64) -> Self {
        Self::from_int(d, 1)
    }

    /// `√D` itself.
    pub fn sqrt_d(d: u64) -> Self {
        Self::new(d, Rat::zero(), Rat::one())
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn rational_part(&self) -> &Rat {
        &self.p
    }

    pub fn irrational_part(&self) -> &Rat {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn check_same(&self, other: &QuadVal) -> Result<()> {
        if self.d != other.d {
            return Err(Error::RadicandMismatch(self.d, other.d));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QuadVal) -> Result<QuadVal> {
        self.check_same(other)?;
        Ok(QuadVal::new(self.d, &self.p + &other.p, &self.q + &other.q))
    }

    pub fn checked_sub(&self, other: &QuadVal) -> Result<QuadVal> {
        self.check_same(other)?;
        Ok(QuadVal::new(self.d, &self.p - &other.p, &self.q - &other.q))
    }

    pub fn checked_mul(&self, other: &QuadVal) -> Result<QuadVal> {
        self.check_same(other)?;
        let dd = Rat::from_integer(BigInt::from(self.d));
        let p = &self.p * &other.p + &self.q * &other.q * dd;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(QuadVal::new(self.d, p, q))
    }

    /// Multiplicative inverse via the conjugate `p − q√D`.
    pub fn checked_inv(&self) -> Result<QuadVal> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.p * &self.p - &self.q * &self.q * Rat::from_integer(BigInt::from(self.d));
        // norm ≠ 0: q ≠ 0 only for non-square D, where p² = q²D has no rational solution
        Ok(QuadVal::new(self.d, &self.p / &norm, -&self.q / &norm))
    }

    pub fn checked_div(&self, other: &QuadVal) -> Result<QuadVal> {
        self.check_same(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn scale(&self, r: &Rat) -> QuadVal {
        QuadVal::new(self.d, &self.p * r, &self.q * r)
    }

    pub fn add_rat(&self, r: &Rat) -> QuadVal {
        QuadVal { d: self.d, p: &self.p + r, q: self.q.clone() }
    }

    pub fn sign(&self) -> Ordering {
        sign_of(&self.p, &self.q, self.d)
    }

    pub fn signum(&self) -> i8 {
        match self.sign() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> QuadVal {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison. Panics when the radicands differ.
    pub fn cmp_exact(&self, other: &QuadVal) -> Ordering {
        self.checked_sub(other).expect("comparing values with different radicands").sign()
    }

    /// `floor(q·√D)`, from `isqrt(num²·D)`.
    fn floor_irrational(&self) -> BigInt {
        let num = self.q.numer();
        let den = self.q.denom();
        let root = isqrt(&(num * num * BigInt::from(self.d)));
        if num.is_negative() {
            // q√D = −√N/den; floor = −ceil(√N/den)
            let exact = &root * &root == num * num * BigInt::from(self.d);
            let (quot, rem): (BigInt, BigInt) = root.div_rem(den);
            if rem.is_zero() && exact {
                -quot
            } else {
                -(quot + BigInt::one())
            }
        } else {
            Integer::div_floor(&root, den)
        }
    }

    /// Greatest integer `n` with `n ≤ self`.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return floor_rat(&self.p);
        }
        // w = q√D lies in [fw, fw + 1), so floor(p + w) ∈ {floor(p + fw), floor(p + fw) + 1}
        let fw = self.floor_irrational();
        let candidate = floor_rat(&(&self.p + Rat::from_integer(fw)));
        let next = QuadVal::from_rat(self.d, Rat::from_integer(&candidate + 1));
        if (&next - self).sign() != Ordering::Greater {
            candidate + 1
        } else {
            candidate
        }
    }

    pub fn floor_i64(&self) -> i64 {
        self.floor().to_i64().expect("floor out of i64 range")
    }

    /// `R_b(v) = v − ⌊v/b⌋·b`, the representative of `v + bZ` in `[0, b)`.
    pub fn reduce_mod(&self, b: i64) -> QuadVal {
        assert!(b >= 1, "reduce_mod needs a positive modulus");
        let bq = Rat::from_integer(BigInt::from(b));
        let n = self.scale(&(Rat::one() / &bq)).floor();
        self.add_rat(&(-(Rat::from_integer(n) * bq)))
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * (self.d as f64).sqrt()
    }
}

/// `λ = (e + √D)/2`, the height and circumference of the simple cylinder.
pub fn lambda_of(d: i64, e: i64) -> Result<QuadVal> {
    if d < 0 {
        return Err(Error::InvalidArgument(format!("negative discriminant {d}")));
    }
    if (e * e - d).rem_euclid(4) != 0 {
        return Err(Error::InvalidArgument(format!("e² ≢ D (mod 4) for D={d}, e={e}")));
    }
    if e * e >= d && e <= 0 {
        return Err(Error::InvalidArgument(format!("λ = (e+√D)/2 not positive for D={d}, e={e}")));
    }
    Ok(QuadVal::new(d as u64, rat(e, 2), rat(1, 2)))
}

impl PartialOrd for QuadVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|v| v.sign())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadVal> for &QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: &QuadVal) -> QuadVal {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadVal> for QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: QuadVal) -> QuadVal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadVal> for QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: &QuadVal) -> QuadVal {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadVal> for &QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: QuadVal) -> QuadVal {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for &QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: i64) -> QuadVal {
                self.$method(&QuadVal::from_int(self.d, rhs))
            }
        }
        impl $trait<i64> for QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: i64) -> QuadVal {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadVal {
    type Output = QuadVal;
    fn neg(self) -> QuadVal {
        QuadVal { d: self.d, p: -&self.p, q: -&self.q }
    }
}

impl Neg for QuadVal {
    type Output = QuadVal;
    fn neg(self) -> QuadVal {
        -&self
    }
}

impl fmt::Debug for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√{})", self.p, self.q, self.d)
    }
}

impl fmt::Display for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            return write!(f, "{}√{}", self.q, self.d);
        }
        let sign = if self.q.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}√{}", self.p, sign, self.q.abs(), self.d)
    }
}

/// Wire form: `{"D": 13, "p": "-1/2", "q": "1/2", "approx": 1.3028}`.
#[derive(Serialize, Deserialize)]
struct QuadValRepr {
    #[serde(rename = "D")]
    d: u64,
    p: String,
    q: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    approx: Option<f64>,
}

impl Serialize for QuadVal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let approx = (self.to_f64() * 1e4).round() / 1e4;
        QuadValRepr { d: self.d, p: format_rat(&self.p), q: format_rat(&self.q), approx: Some(approx) }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadVal {
    fn deserialize<De: serde::Deserializer<'de>>(deserializer: De) -> std::result::Result<Self, De::Error> {
        let repr = QuadValRepr::deserialize(deserializer)?;
        let p = parse_rat(&repr.p).map_err(serde::de::Error::custom)?;
        let q = parse_rat(&repr.q).map_err(serde::de::Error::custom)?;
        Ok(QuadVal::new(repr.d, p, q))
    }
}
