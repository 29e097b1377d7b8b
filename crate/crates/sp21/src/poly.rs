//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! All polynomials live over one globally fixed variable list so that equality
//! is structural: coordinates of both charts, the weight parameters h_k and the
//! Dynkin-label indeterminates m_k. Terms are kept in graded-lexicographic
//! order and zero coefficients are never stored.

use crate::exact::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Number of global variables.
pub const NVARS: usize = 24;

/// Global variable order: x1..x7, xi1, xi2, y1..y7, eta1, eta2, h1..h3, m1..m3.
pub const VAR_NAMES: [&str; NVARS] = [
    "x1", "x2", "x3", "x4", "x5", "x6", "x7", "xi1", "xi2", "y1", "y2", "y3", "y4", "y5", "y6",
    "y7", "eta1", "eta2", "h1", "h2", "h3", "m1", "m2", "m3",
];

/// LaTeX forms matching `VAR_NAMES`.
pub const VAR_LATEX: [&str; NVARS] = [
    "x_1", "x_2", "x_3", "x_4", "x_5", "x_6", "x_7", "\\xi_1", "\\xi_2", "y_1", "y_2", "y_3",
    "y_4", "y_5", "y_6", "y_7", "\\eta_1", "\\eta_2", "h_1", "h_2", "h_3", "m_1", "m_2", "m_3",
];

pub mod var {
    //! Indices into the global variable order.
    pub const X1: usize = 0;
    pub const X2: usize = 1;
    pub const X3: usize = 2;
    pub const X4: usize = 3;
    pub const X5: usize = 4;
    pub const X6: usize = 5;
    pub const X7: usize = 6;
    pub const XI1: usize = 7;
    pub const XI2: usize = 8;
    pub const Y1: usize = 9;
    pub const Y2: usize = 10;
    pub const Y3: usize = 11;
    pub const Y4: usize = 12;
    pub const Y5: usize = 13;
    pub const Y6: usize = 14;
    pub const Y7: usize = 15;
    pub const ETA1: usize = 16;
    pub const ETA2: usize = 17;
    pub const H1: usize = 18;
    pub const H2: usize = 19;
    pub const H3: usize = 20;
    pub const M1: usize = 21;
    pub const M2: usize = 22;
    pub const M3: usize = 23;
}

/// Look a variable name up in the global order.
pub fn var_index(name: &str) -> Option<usize> {
    VAR_NAMES.iter().position(|v| *v == name)
}

/// Exponent vector in the global variable order, compared graded-lex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Expo(pub [u8; NVARS]);

impl Expo {
    pub fn zero() -> Self {
        Expo([0; NVARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; NVARS];
        e[i] = 1;
        Expo(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn checked_add(&self, o: &Expo) -> Expo {
        let mut e = [0u8; NVARS];
        for k in 0..NVARS {
            e[k] = self.0[k].checked_add(o.0[k]).expect("exponent overflow");
        }
        Expo(e)
    }

    /// Componentwise difference; None when any component would go negative.
    pub fn checked_sub(&self, o: &Expo) -> Option<Expo> {
        let mut e = [0u8; NVARS];
        for k in 0..NVARS {
            e[k] = self.0[k].checked_sub(o.0[k])?;
        }
        Some(Expo(e))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Rat`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    pub terms: BTreeMap<Expo, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Expo::zero(), c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)))
    }

    /// The monomial c · Πᵢ varᵢ^eᵢ.
    pub fn monomial(e: Expo, c: Rat) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Expo::var(i), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Expo::zero()))
    }

    /// Constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Expo::zero()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    /// Leading (graded-lex largest) term.
    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert(*e, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                r.insert(ea.checked_add(eb), ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            if e.0[i] > 0 {
                let mut d = *e;
                let k = d.0[i];
                d.0[i] = k - 1;
                r.insert(d, c * Rat::from_integer(BigInt::from(k)));
            }
        }
        r
    }

    /// Substitute polynomials for variables; unbound variables are left alone.
    pub fn substitute(&self, bindings: &BTreeMap<usize, MultiPoly>) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            let mut rest = Expo::zero();
            for i in 0..NVARS {
                let k = e.0[i];
                if k == 0 {
                    continue;
                }
                if let Some(b) = bindings.get(&i) {
                    term = term.mul(&b.pow(k as u32));
                } else {
                    rest.0[i] = k;
                }
            }
            r = r.add(&term.mul(&Self::monomial(rest, Rat::one())));
        }
        r
    }

    /// Substitute a rational value for a single variable.
    pub fn eval_var(&self, i: usize, value: &Rat) -> Self {
        let mut b = BTreeMap::new();
        b.insert(i, Self::constant(value.clone()));
        self.substitute(&b)
    }

    /// Integer content: the rational g with `self / g` integer and primitive.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Exact division; None when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        assert!(!o.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = Self::zero();
        let (le, lc) = {
            let (e, c) = o.leading().unwrap();
            (*e, c.clone())
        };
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading().unwrap();
                (*e, c.clone())
            };
            let d = re.checked_sub(&le)?;
            let k = &rc / &lc;
            let t = Self::monomial(d, k);
            q = q.add(&t);
            rem = rem.sub(&t.mul(o));
        }
        Some(q)
    }

    /// All variables with a nonzero exponent somewhere.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = [false; NVARS];
        for e in self.terms.keys() {
            for i in 0..NVARS {
                if e.0[i] > 0 {
                    used[i] = true;
                }
            }
        }
        (0..NVARS).filter(|&i| used[i]).collect()
    }

    fn fmt_with(&self, names: &[&str; NVARS], explicit_mul: bool, pow: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        // Deterministic order: graded-lex descending.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for i in 0..NVARS {
                let k = e.0[i];
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push_str(if explicit_mul { "*" } else { " " });
                }
                mono.push_str(names[i]);
                if k > 1 {
                    mono.push_str(&format!("{}{}", pow, k));
                }
            }
            let abs = c.abs();
            let sign_str = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {} ", sign_str));
            }
            if mono.is_empty() {
                out.push_str(&format!("{}", abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if explicit_mul {
                out.push_str(&format!("{}*{}", abs, mono));
            } else {
                out.push_str(&format!("{} {}", abs, mono));
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.fmt_with(&VAR_LATEX, false, "^")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&VAR_NAMES, true, "^"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn difference_of_squares() {
        // (x+1)(x-1) = x^2 - 1
        let p = x(var::X1).add(&MultiPoly::one());
        let q = x(var::X1).sub(&MultiPoly::one());
        let expect = x(var::X1).mul(&x(var::X1)).sub(&MultiPoly::one());
        assert_eq!(p.mul(&q), expect);
    }

    #[test]
    fn halves_recombine() {
        // (y5 - y6*eta1)*1/2 + (y5 - y6*eta1)*1/2 = y5 - y6*eta1
        let p = x(var::Y5).sub(&x(var::Y6).mul(&x(var::ETA1)));
        let h = p.scale(&rat(1, 2));
        assert_eq!(h.add(&h), p);
    }

    #[test]
    fn chi_entry_has_three_terms() {
        // chi = x4 + (x1 x5 - x6 x7)/2
        let chi = x(var::X4).add(
            &x(var::X1)
                .mul(&x(var::X5))
                .sub(&x(var::X6).mul(&x(var::X7)))
                .scale(&rat(1, 2)),
        );
        assert_eq!(chi.terms.len(), 3);
    }

    #[test]
    fn substitute_change_of_variable() {
        // y6 -> x6 - 2 x1 xi2
        let y6 = x(var::Y6);
        let image = x(var::X6).sub(&x(var::X1).mul(&x(var::XI2)).scale(&rint(2)));
        let mut b = BTreeMap::new();
        b.insert(var::Y6, image.clone());
        assert_eq!(y6.substitute(&b), image);
        // substituting every variable by zero kills any zero-constant-term poly
        let mut zb = BTreeMap::new();
        for i in 0..NVARS {
            zb.insert(i, MultiPoly::zero());
        }
        assert!(image.substitute(&zb).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = x(var::M2).pow(2).sub(&x(var::M2));
        let d = x(var::M2);
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x(var::M2).sub(&MultiPoly::one()));
        assert!(p.div_exact(&x(var::M1)).is_none());
    }

    #[test]
    fn derivative_product_rule_spot() {
        let p = x(var::Y5).mul(&x(var::Y5)).mul(&x(var::Y7));
        let d = p.derivative(var::Y5);
        assert_eq!(d, x(var::Y5).mul(&x(var::Y7)).scale(&rint(2)));
    }
}
