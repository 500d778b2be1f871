//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Scalar`], an exact field element.
//! Two families are provided: the rationals ([`Q`], arbitrary precision) and
//! prime fields [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub use crate::rational::Q;
use rand::Rng;

/// The ambient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    PrimeField(u64),
}

impl Field {
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of an exact field.
///
/// Arithmetic never rounds. `inverse` returns `None` only for zero.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    fn field() -> Field;

    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// Parses the wire form: a decimal integer or `"num/den"` (rationals),
    /// or any integer reduced to its canonical representative (prime fields).
    fn parse_wire(s: &str) -> Result<Self, String>;

    /// Canonical wire form; `parse_wire(x.to_wire()) == x`.
    fn to_wire(&self) -> String {
        self.to_string()
    }

    /// A uniformly random element for finite fields; a small random integer
    /// otherwise.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// All elements, when the field is finite.
    fn elements() -> Option<Vec<Self>>;
}

impl Scalar for Q {
    fn field() -> Field {
        Field::Rationals
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn from_i64(n: i64) -> Self {
        Q::integer(n)
    }

    fn parse_wire(s: &str) -> Result<Self, String> {
        let t = s.trim();
        Q::from_str(t).map_err(|e| format!("bad rational {t:?}: {e}"))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-3..=3))
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }
}

/// Element of the prime field with `P` elements, stored as its canonical
/// representative in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i128) -> Self {
        let p = P as i128;
        Fp(v.rem_euclid(p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> Field {
        Field::PrimeField(P)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^-1.
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n as i128)
    }

    fn parse_wire(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n = Self::parse_wire(num)?;
            let d = Self::parse_wire(den)?;
            return d
                .inverse()
                .map(|inv| n * inv)
                .ok_or_else(|| format!("zero denominator in {t:?} over F{P}"));
        }
        let v = BigInt::from_str(t).map_err(|e| format!("bad integer {t:?}: {e}"))?;
        let r = ((v % BigInt::from(P)) + BigInt::from(P)) % BigInt::from(P);
        Ok(Fp(r.to_u64().expect("reduced value fits")))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
}

/// Returns true when `n` is prime (trial division; moduli are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
