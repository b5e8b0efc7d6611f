//! Coefficient fields.
//!
//! Everything in this crate is generic over an exact coefficient type. The
//! default is [`Rational`], an arbitrary-precision rational that keeps small
//! integers in a machine word; any `num_rational::Ratio<T>` over a signed
//! integer type works too (`BigRational` is the plain reference, fixed-width
//! ratios overflow on large instances).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field used for polynomial coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_i64(v: i64) -> Self;

    /// Strictly below zero. Used for sign placement when printing.
    fn is_negative(&self) -> bool;

    /// True when the value has denominator one.
    fn is_integral(&self) -> bool;

    fn abs_value(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + From<i64>
        + num_traits::NumAssign,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn is_negative(&self) -> bool {
        self.numer().is_negative()
    }

    fn is_integral(&self) -> bool {
        self.denom().is_one()
    }
}

/// Exact rational number with an `i64` fast path.
///
/// Nearly every coefficient met in this crate is a small integer, and most of
/// the arithmetic cost of a `BigRational` goes into allocation and gcd
/// normalization. Values that are integers fitting an `i64` are stored inline
/// and combined with checked machine arithmetic; anything else (overflow, a
/// proper fraction) is held as a `BigRational`. The representation is
/// canonical: a big value that is an integer in range is always demoted, so
/// structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64),
    Big(BigRational),
}

impl Rational {
    fn from_big(b: BigRational) -> Self {
        if b.is_integer() {
            if let Some(v) = b.numer().to_i64() {
                return Rational::Small(v);
            }
        }
        Rational::Big(b)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Rational::Big(b) => b.clone(),
        }
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Self::from_big(BigRational::new(numer.into(), denom.into()))
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(v) => Some(*v),
            Rational::Big(_) => None,
        }
    }

    fn combine(
        &self,
        other: &Self,
        small: impl Fn(i64, i64) -> Option<i64>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(v) = small(*a, *b) {
                return Rational::Small(v);
            }
        }
        Self::from_big(big(self.to_big(), other.to_big()))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::Small(v)
    }
}

impl From<BigRational> for Rational {
    fn from(b: BigRational) -> Self {
        Self::from_big(b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(v) => write!(f, "{v}"),
            Rational::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, other: Rational) -> Rational {
        self.combine(&other, i64::checked_add, |a, b| a + b)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, other: Rational) -> Rational {
        self.combine(&other, i64::checked_sub, |a, b| a - b)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, other: Rational) -> Rational {
        self.combine(&other, i64::checked_mul, |a, b| a * b)
    }
}

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero, like the primitive types.
    fn div(self, other: Rational) -> Rational {
        assert!(!other.is_zero(), "division by zero");
        self.combine(
            &other,
            |a, b| if a % b == 0 { a.checked_div(b) } else { None },
            |a, b| a / b,
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(v) => match v.checked_neg() {
                Some(n) => Rational::Small(n),
                None => Rational::Big(-BigRational::from_integer(BigInt::from(v))),
            },
            Rational::Big(b) => Self::from_big(-b),
        }
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, other: &'a Rational) {
        if let (Rational::Small(a), Rational::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_add(*b) {
                *self = Rational::Small(v);
                return;
            }
        }
        *self = self.combine(other, i64::checked_add, |a, b| a + b);
    }
}

impl<'a> SubAssign<&'a Rational> for Rational {
    fn sub_assign(&mut self, other: &'a Rational) {
        if let (Rational::Small(a), Rational::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_sub(*b) {
                *self = Rational::Small(v);
                return;
            }
        }
        *self = self.combine(other, i64::checked_sub, |a, b| a - b);
    }
}

impl<'a> MulAssign<&'a Rational> for Rational {
    fn mul_assign(&mut self, other: &'a Rational) {
        if let (Rational::Small(a), Rational::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_mul(*b) {
                *self = Rational::Small(v);
                return;
            }
        }
        *self = self.combine(other, i64::checked_mul, |a, b| a * b);
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::Small(0)
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::Small(1)
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::Small(v)
    }

    fn is_negative(&self) -> bool {
        match self {
            Rational::Small(v) => *v < 0,
            Rational::Big(b) => Signed::is_negative(b),
        }
    }

    fn is_integral(&self) -> bool {
        match self {
            Rational::Small(_) => true,
            Rational::Big(b) => b.is_integer(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_scalars() {
        let a = BigRational::from_i64(-3);
        assert!(Scalar::is_negative(&a));
        assert!(a.is_integral());
        let half = BigRational::from_i64(1) / BigRational::from_i64(2);
        assert!(!half.is_integral());
        assert_eq!(half.recip(), BigRational::from_i64(2));
        assert_eq!(a.abs_value(), BigRational::from_i64(3));
        let r: Ratio<i64> = Scalar::from_i64(7);
        assert_eq!(r.to_string(), "7");
    }

    #[test]
    fn rational_promotes_on_overflow_and_demotes_back() {
        let big = Rational::from(i64::MAX);
        let sum = big.clone() + Rational::from(1);
        assert!(matches!(sum, Rational::Big(_)));
        let back = sum - Rational::from(1);
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(_)));
        let mut m = Rational::from(i64::MIN);
        m *= &Rational::from(-1);
        assert_eq!(
            m.to_big(),
            -BigRational::from_integer(BigInt::from(i64::MIN))
        );
        assert_eq!(-Rational::from(i64::MIN), m);
    }

    #[test]
    fn rational_fractions() {
        let third = Rational::from(1) / Rational::from(3);
        assert!(!third.is_integral());
        assert_eq!(third.to_string(), "1/3");
        let one = third.clone() + third.clone() + third;
        assert_eq!(one, Rational::one());
        assert_eq!(Rational::from(6) / Rational::from(3), Rational::from(2));
        assert_eq!(Rational::new(4, -6), Rational::from(-2) / Rational::from(3));
        assert!(Scalar::is_negative(&Rational::new(-1, 2)));
        assert_eq!(Rational::new(-1, 2).recip(), Rational::from(-2));
    }
}
