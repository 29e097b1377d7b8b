//! Exact scalar arithmetic: arbitrary-precision rationals, Gaussian rationals,
//! and the scalar abstraction shared by the Verma-module machinery.
//!
//! No floating point anywhere; every identity in this crate is checked exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational. Always stored reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    let k = k.min(n - k);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// Gaussian rational a + b·i with exact components.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        GaussRat { re: Rat::one(), im: Rat::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn from_rat(r: Rat) -> Self {
        GaussRat { re: r, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rint(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate a − b·i.
    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Self {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "division by zero GaussRat");
        GaussRat { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_positive() {
            write!(f, "{}+{}*i", self.re, self.im)
        } else {
            write!(f, "{}{}*i", self.re, self.im)
        }
    }
}

/// The coefficient abstraction used by the Verma machinery: instantiated at
/// `Rat` for numeric runs and at `RatFunc` for parametric (symbolic-label) runs.
pub trait Scalar: Clone + PartialEq + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!Zero::is_zero(o), "division by zero");
        self / o
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_i_squared_is_minus_one() {
        let i = GaussRat::i();
        assert_eq!(i.mul(&i), GaussRat::from_int(-1));
    }

    #[test]
    fn gauss_conjugation_involutive_and_multiplicative() {
        let a = GaussRat::new(rat(3, 2), rat(-5, 7));
        let b = GaussRat::new(rat(-1, 3), rat(2, 1));
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn gauss_inverse() {
        let a = GaussRat::new(rat(3, 1), rat(4, 1));
        assert_eq!(a.mul(&a.inv()), GaussRat::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), rint(6));
        assert_eq!(binomial(6, 0), rint(1));
        assert_eq!(binomial(3, 5), rint(0));
    }
}
