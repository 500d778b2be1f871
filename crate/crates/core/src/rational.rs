//! Rationals stored inline while numerator and denominator fit in `i64`,
//! promoted to [`BigRational`] otherwise.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone)]
pub struct Q(Repr);

#[derive(Clone)]
enum Repr {
    /// Invariant: `den > 0`, `gcd(num, den) = 1`, `num != i64::MIN`.
    Small(i64, i64),
    /// Invariant: not representable as `Small`.
    Big(Box<BigRational>),
}

impl Q {
    /// `num / den`; panics when `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q::from_i128(num as i128, den as i128)
    }

    pub fn integer(n: i64) -> Q {
        Q::from_i128(n as i128, 1)
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn recip(&self) -> Option<Q> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) if *n < 0 => Some(Q(Repr::Small(-d, -n))),
            Repr::Small(n, d) => Some(Q(Repr::Small(*d, *n))),
            Repr::Big(b) => Some(Q::from_big(b.recip())),
        }
    }

    fn from_i128(num: i128, den: i128) -> Q {
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        if n == 0 {
            return Q(Repr::Small(0, 1));
        }
        let g = n.unsigned_abs().gcd(&d.unsigned_abs());
        if g > 1 {
            n /= g as i128;
            d /= g as i128;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Q(Repr::Small(n, d)),
            _ => Q(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    /// Normalizes a reduced big rational.
    fn from_big(b: BigRational) -> Q {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Q(Repr::Small(n, d)),
            _ => Q(Repr::Big(Box::new(b))),
        }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q(Repr::Small(0, 1))
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Q) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => (0u8, n, d).hash(state),
            Repr::Big(b) => (1u8, b).hash(state),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = num_rational::ParseRatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigRational::from_str(s).map(Q::from_big)
    }
}

impl Zero for Q {
    fn zero() -> Self {
        Q::default()
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Q {
    fn one() -> Self {
        Q(Repr::Small(1, 1))
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) => rhs,
            (_, Repr::Small(0, _)) => self,
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Q::from_i128(a + c, b)
                } else {
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self.0 {
            Repr::Small(n, d) => Q(Repr::Small(-n, d)),
            Repr::Big(b) => Q::from_big(-*b),
        }
    }
}

impl Sub for Q {
    type Output = Q;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Q) -> Q {
        self + (-rhs)
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(1, 1)) => self,
            (_, Repr::Small(0, _)) | (Repr::Small(1, 1), _) => rhs,
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Q::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for Q {
    type Output = Q;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Q) -> Q {
        self * rhs.recip().expect("division by zero")
    }
}

impl AddAssign for Q {
    fn add_assign(&mut self, rhs: Q) {
        *self = std::mem::take(self) + rhs;
    }
}

impl SubAssign for Q {
    fn sub_assign(&mut self, rhs: Q) {
        *self = std::mem::take(self) - rhs;
    }
}

impl MulAssign for Q {
    fn mul_assign(&mut self, rhs: Q) {
        *self = std::mem::take(self) * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Q::integer(i64::MAX);
        let sq = m.clone() * m.clone();
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq / m.clone();
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(back, m);
        assert_eq!((Q::integer(i64::MIN + 1) - Q::one()).to_big(), BigRational::from_integer(BigInt::from(i64::MIN)));
    }

    #[test]
    fn display_matches_big_rationals() {
        assert_eq!(Q::ratio(4, -6).to_string(), "-2/3");
        assert_eq!(Q::ratio(6, 3).to_string(), "2");
        assert_eq!("-10/4".parse::<Q>().unwrap(), Q::ratio(-5, 2));
    }

    proptest! {
        #[test]
        fn arithmetic_agrees_with_big_rationals(
            a in any::<i64>(), b in 1..i64::MAX, c in any::<i64>(), d in 1..i64::MAX,
        ) {
            let (x, y) = (Q::ratio(a, b), Q::ratio(c, d));
            let (bx, by) = (big(a, b), big(c, d));
            prop_assert_eq!((x.clone() + y.clone()).to_big(), bx.clone() + by.clone());
            prop_assert_eq!((x.clone() - y.clone()).to_big(), bx.clone() - by.clone());
            prop_assert_eq!((x.clone() * y.clone()).to_big(), bx.clone() * by.clone());
            if !y.is_zero() {
                prop_assert_eq!((x / y).to_big(), bx / by);
            }
        }
    }
}
