//! The exact quadratic field `ℚ(√2)`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// `a + b√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Sqrt2Rational {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt2Rational {
    pub fn new(a: Rational, b: Rational) -> Self {
        Sqrt2Rational { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Sqrt2Rational { a, b: Rational::zero() }
    }

    pub fn sqrt2() -> Self {
        Sqrt2Rational { a: Rational::zero(), b: Rational::one() }
    }

    /// `2^{k/2}` for any integer `k`.
    pub fn pow_sqrt2(k: i64) -> Self {
        let half = k.div_euclid(2);
        let scale = pow2(half);
        if k.rem_euclid(2) == 0 {
            Self::rational(scale)
        } else {
            Sqrt2Rational { a: Rational::zero(), b: scale }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Sqrt2Rational { a: &self.a * c, b: &self.b * c }
    }
}

/// `2^k` as a rational, `k` of either sign.
pub fn pow2(k: i64) -> Rational {
    let two = Rational::from_integer(2.into());
    if k >= 0 {
        num_traits::pow(two, k as usize)
    } else {
        num_traits::pow(two, (-k) as usize).recip()
    }
}

impl Zero for Sqrt2Rational {
    fn zero() -> Self {
        Sqrt2Rational::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt2Rational {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Add for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn add(self, rhs: Self) -> Self {
        Sqrt2Rational { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<'a> Add<&'a Sqrt2Rational> for &'a Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn add(self, rhs: Self) -> Sqrt2Rational {
        Sqrt2Rational { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl AddAssign<&Sqrt2Rational> for Sqrt2Rational {
    fn add_assign(&mut self, rhs: &Sqrt2Rational) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Sub for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn sub(self, rhs: Self) -> Self {
        Sqrt2Rational { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Neg for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn neg(self) -> Self {
        Sqrt2Rational { a: -self.a, b: -self.b }
    }
}

impl<'a> Mul<&'a Sqrt2Rational> for &'a Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn mul(self, rhs: Self) -> Sqrt2Rational {
        let two = Rational::from_integer(2.into());
        Sqrt2Rational { a: &self.a * &rhs.a + two * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Mul for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl MulAssign<&Sqrt2Rational> for Sqrt2Rational {
    fn mul_assign(&mut self, rhs: &Sqrt2Rational) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => write!(f, "{} + {}√2", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_root_two() {
        let r = Sqrt2Rational::sqrt2();
        assert_eq!(&r * &r, Sqrt2Rational::rational(Rational::from_integer(2.into())));
        for k in -6..=6 {
            let lhs = &Sqrt2Rational::pow_sqrt2(k) * &Sqrt2Rational::pow_sqrt2(1);
            assert_eq!(lhs, Sqrt2Rational::pow_sqrt2(k + 1));
        }
        assert_eq!(Sqrt2Rational::pow_sqrt2(-2), Sqrt2Rational::rational(Rational::new(1.into(), 2.into())));
    }
}
