//! Rational functions in the Dynkin-label indeterminates.
//!
//! Coefficients such as m2/(m2-k) live here. The representation is normalized
//! (joint integer content removed, leading denominator coefficient positive,
//! exact divisions taken when they exist) so that the zero test is structural;
//! full equality is decided by cross-multiplication.

use crate::exact::{Rat, Scalar};
use crate::poly::MultiPoly;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RatFunc { num, den };
        f.normalize();
        f
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = MultiPoly::one();
        }
        // joint integer content, denominator leading coefficient positive
        let mut g = self.num.content();
        let gd = self.den.content();
        // use the gcd of the two contents so both stay integral multiples
        g = Rat::new(
            num_integer::Integer::gcd(g.numer(), gd.numer()),
            num_integer::Integer::lcm(g.denom(), gd.denom()),
        );
        let inv = Rat::new(g.denom().clone(), g.numer().clone());
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
        if self.den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn is_poly(&self) -> bool {
        self.den == MultiPoly::one()
    }

    /// Numeric value if constant.
    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Substitute polynomials for variables in both numerator and denominator.
    /// Panics if the denominator collapses to zero (a pole of the substitution).
    pub fn substitute(&self, bindings: &BTreeMap<usize, MultiPoly>) -> Self {
        let num = self.num.substitute(bindings);
        let den = self.den.substitute(bindings);
        assert!(!den.is_zero(), "substitution hit a pole");
        RatFunc::new(num, den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // cross multiplication: num1*den2 == num2*den1
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.sub(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
