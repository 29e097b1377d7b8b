//! The C3 root system underlying sp(3,C): positive roots in the book ordering,
//! compactness classification, rho, Dynkin labels, Harish-Chandra parameters,
//! reducibility, and the label/weight/signature conversions.

use crate::exact::{rint, Rat, Scalar};
use crate::poly::{var, MultiPoly};
use crate::ratfunc::RatFunc;
use num_traits::Signed;
use serde::Serialize;
use std::fmt;

/// Names of the nine positive roots, listed in the descending root order
/// (the PBW order): beta11 > beta12 > beta22 > beta13 > beta23 > beta33 >
/// alpha13 > alpha23 > alpha12, with gamma1 = alpha12, gamma2 = alpha23,
/// gamma3 = beta33.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize)]
pub enum RootName {
    B11,
    B12,
    B22,
    B13,
    B23,
    B33,
    A13,
    A23,
    A12,
}

pub const ROOT_ORDER: [RootName; 9] = [
    RootName::B11,
    RootName::B12,
    RootName::B22,
    RootName::B13,
    RootName::B23,
    RootName::B33,
    RootName::A13,
    RootName::A23,
    RootName::A12,
];

impl RootName {
    /// Index in the descending root order.
    pub fn index(self) -> usize {
        ROOT_ORDER.iter().position(|r| *r == self).unwrap()
    }

    pub fn is_simple(self) -> bool {
        matches!(self, RootName::A12 | RootName::A23 | RootName::B33)
    }

    /// ASCII name used by the CLI and JSON exports.
    pub fn ascii(self) -> &'static str {
        match self {
            RootName::B11 => "beta11",
            RootName::B12 => "beta12",
            RootName::B22 => "beta22",
            RootName::B13 => "beta13",
            RootName::B23 => "beta23",
            RootName::B33 => "gamma3",
            RootName::A13 => "alpha13",
            RootName::A23 => "gamma2",
            RootName::A12 => "gamma1",
        }
    }

    /// Edge-label subscript in the style of the multiplet diagrams:
    /// compact roots bare, non-compact roots with a leading caret.
    pub fn arrow_subscript(self) -> &'static str {
        match self {
            RootName::B11 => "^11",
            RootName::B12 => "^12",
            RootName::B22 => "^22",
            RootName::B13 => "^13",
            RootName::B23 => "^23",
            RootName::B33 => "^33",
            RootName::A13 => "13",
            RootName::A23 => "2",
            RootName::A12 => "1",
        }
    }

    pub fn parse(s: &str) -> Option<RootName> {
        Some(match s {
            "beta11" | "b11" => RootName::B11,
            "beta12" | "b12" => RootName::B12,
            "beta22" | "b22" => RootName::B22,
            "beta13" | "b13" => RootName::B13,
            "beta23" | "b23" => RootName::B23,
            "beta33" | "b33" | "gamma3" | "g3" => RootName::B33,
            "alpha13" | "a13" => RootName::A13,
            "alpha23" | "a23" | "gamma2" | "g2" => RootName::A23,
            "alpha12" | "a12" | "gamma1" | "g1" => RootName::A12,
            _ => return None,
        })
    }
}

impl fmt::Display for RootName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

/// A positive root with its coordinates in the orthonormal epsilon basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Root {
    pub name: RootName,
    pub eps: [i64; 3],
}

impl Root {
    pub fn of(name: RootName) -> Root {
        let eps = match name {
            RootName::B11 => [2, 0, 0],
            RootName::B12 => [1, 1, 0],
            RootName::B22 => [0, 2, 0],
            RootName::B13 => [1, 0, 1],
            RootName::B23 => [0, 1, 1],
            RootName::B33 => [0, 0, 2],
            RootName::A13 => [1, 0, -1],
            RootName::A23 => [0, 1, -1],
            RootName::A12 => [1, -1, 0],
        };
        Root { name, eps }
    }

    /// Squared length under (eps_i, eps_j) = delta_ij; 2 for short, 4 for long.
    pub fn length_sq(&self) -> i64 {
        self.eps.iter().map(|e| e * e).sum()
    }

    pub fn is_long(&self) -> bool {
        self.length_sq() == 4
    }

    /// Coroot beta^vee = 2 beta/(beta,beta) in epsilon coordinates.
    pub fn covee(&self) -> [Rat; 3] {
        let s = rint(2) / rint(self.length_sq());
        [
            rint(self.eps[0]) * &s,
            rint(self.eps[1]) * &s,
            rint(self.eps[2]) * &s,
        ]
    }

    /// K-compact means an alpha root (eps_i - eps_j).
    pub fn k_compact(&self) -> bool {
        matches!(self.name, RootName::A12 | RootName::A13 | RootName::A23)
    }

    /// M-compact roots are exactly gamma1 and gamma3.
    pub fn m_compact(&self) -> bool {
        matches!(self.name, RootName::A12 | RootName::B33)
    }

    /// Expansion over the simple roots (gamma1, gamma2, gamma3).
    pub fn gamma_coords(&self) -> [i64; 3] {
        let [e1, e2, e3] = self.eps;
        // gamma1 = e1-e2, gamma2 = e2-e3, gamma3 = 2 e3
        let c1 = e1;
        let c2 = e1 + e2;
        let c3 = (e1 + e2 + e3) / 2;
        debug_assert_eq!((e1 + e2 + e3) % 2, 0);
        [c1, c2, c3]
    }
}

/// The nine positive roots of C3 in descending root order.
pub fn positive_roots() -> Vec<Root> {
    ROOT_ORDER.iter().map(|&n| Root::of(n)).collect()
}

/// rho as half the sum of the positive roots; equals (3,2,1) in eps coordinates.
pub fn rho_eps() -> [Rat; 3] {
    let mut s = [Rat::zero(), Rat::zero(), Rat::zero()];
    for r in positive_roots() {
        for k in 0..3 {
            s[k] = &s[k] + rint(r.eps[k]);
        }
    }
    for v in s.iter_mut() {
        *v = &*v / rint(2);
    }
    s
}

/// Order of the Weyl group of C_{n+1}: 2^{n+1} (n+1)!.
pub fn weyl_order(n: u64) -> u64 {
    let k = n + 1;
    let mut f = 1u64;
    for i in 2..=k {
        f *= i;
    }
    (1u64 << k) * f
}

/// Number of ERs/GVMs in a main multiplet: 2n(n+1).
pub fn multiplet_count(n: u64) -> u64 {
    2 * n * (n + 1)
}

/// A weight in epsilon coordinates over a generic exact scalar.
#[derive(Clone, PartialEq, Debug)]
pub struct Weight<S: Scalar> {
    pub eps: [S; 3],
}

impl<S: Scalar> Weight<S> {
    pub fn new(eps: [S; 3]) -> Self {
        Weight { eps }
    }

    pub fn zero() -> Self {
        Weight { eps: [S::zero(), S::zero(), S::zero()] }
    }

    /// Coordinates over the simple roots: Lambda = sum c_j gamma_j.
    pub fn gamma_coords(&self) -> [S; 3] {
        let [l1, l2, l3] = self.eps.clone();
        let c1 = l1.clone();
        let c2 = l1.add(&l2);
        let half = S::from_rat(&crate::exact::rat(1, 2));
        let c3 = l1.add(&l2).add(&l3).mul(&half);
        [c1, c2, c3]
    }

    pub fn from_gamma(c: [S; 3]) -> Self {
        let two = S::from_rat(&rint(2));
        Weight {
            eps: [
                c[0].clone(),
                c[1].sub(&c[0]),
                c[2].mul(&two).sub(&c[1]),
            ],
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Weight {
            eps: [
                self.eps[0].add(&o.eps[0]),
                self.eps[1].add(&o.eps[1]),
                self.eps[2].add(&o.eps[2]),
            ],
        }
    }

    pub fn sub_root_multiple(&self, root: &Root, m: &S) -> Self {
        let mut eps = self.eps.clone();
        for k in 0..3 {
            eps[k] = eps[k].sub(&m.mul(&S::from_rat(&rint(root.eps[k]))));
        }
        Weight { eps }
    }

    /// (Lambda + rho, beta^vee) as an exact scalar.
    pub fn hc_shifted(&self, root: &Root) -> S {
        let rho = rho_eps();
        let cv = root.covee();
        let mut acc = S::zero();
        for k in 0..3 {
            let shifted = self.eps[k].add(&S::from_rat(&rho[k]));
            acc = acc.add(&shifted.mul(&S::from_rat(&cv[k])));
        }
        acc
    }

    /// Dynkin labels m_i = (Lambda + rho, gamma_i^vee).
    pub fn dynkin_labels(&self) -> [S; 3] {
        [
            self.hc_shifted(&Root::of(RootName::A12)),
            self.hc_shifted(&Root::of(RootName::A23)),
            self.hc_shifted(&Root::of(RootName::B33)),
        ]
    }

    /// Values h_k = Lambda(H_k) with the H-normalization gamma_i(H_j) = (gamma_i, gamma_j).
    pub fn h_values(&self) -> [S; 3] {
        // Lambda(H_j) = (Lambda, gamma_j) in the orthonormal eps pairing
        let pair = |g: &Root| -> S {
            let mut acc = S::zero();
            for k in 0..3 {
                acc = acc.add(&self.eps[k].mul(&S::from_rat(&rint(g.eps[k]))));
            }
            acc
        };
        [
            pair(&Root::of(RootName::A12)),
            pair(&Root::of(RootName::A23)),
            pair(&Root::of(RootName::B33)),
        ]
    }
}

/// Weight of the highest-weight module attached to Dynkin labels (m1, m2, m3):
/// c1 = m1+m2+m3-3, c2 = m1+2m2+2m3-5, c3 = m2 + (m1+3m3)/2 - 3.
pub fn weight_of_labels<S: Scalar>(m: &[S; 3]) -> Weight<S> {
    let r = |x: i64| S::from_rat(&rint(x));
    let half = S::from_rat(&crate::exact::rat(1, 2));
    let c1 = m[0].add(&m[1]).add(&m[2]).sub(&r(3));
    let c2 = m[0].add(&m[1].mul(&r(2))).add(&m[2].mul(&r(2))).sub(&r(5));
    let c3 = m[1]
        .add(&m[0].add(&m[2].mul(&r(3))).mul(&half))
        .sub(&r(3));
    Weight::from_gamma([c1, c2, c3])
}

/// Harish-Chandra parameter m_beta = (Lambda+rho, beta^vee) for given labels.
pub fn hc_parameter<S: Scalar>(m: &[S; 3], root: &Root) -> S {
    weight_of_labels(m).hc_shifted(root)
}

/// BGG reducibility: Some(m) iff (Lambda+rho, beta^vee) is a positive integer.
pub fn bgg_reducible(lam: &Weight<Rat>, root: &Root) -> Option<u32> {
    let v = lam.hc_shifted(root);
    if v.is_integer() && v.is_positive() {
        Some(v.numer().try_into().ok()?)
    } else {
        None
    }
}

/// Affine-linear form a0 + a1 m1 + a2 m2 + a3 m3: the scalar of the multiplet
/// bookkeeping, where every quantity is affine in the Dynkin labels.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LinForm {
    pub konst: Rat,
    pub coef: [Rat; 3],
}

impl LinForm {
    pub fn constant(c: Rat) -> Self {
        LinForm { konst: c, coef: [Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn label(i: usize) -> Self {
        let mut f = Self::constant(Rat::zero());
        f.coef[i] = Rat::one();
        f
    }

    /// m1 + m2, m2 + m3 and friends, written as coefficient triples.
    pub fn combo(c1: i64, c2: i64, c3: i64) -> Self {
        LinForm { konst: Rat::zero(), coef: [rint(c1), rint(c2), rint(c3)] }
    }

    pub fn eval(&self, m: &[Rat; 3]) -> Rat {
        let mut acc = self.konst.clone();
        for k in 0..3 {
            acc = acc + &self.coef[k] * &m[k];
        }
        acc
    }

    /// Specialize one label to a constant (used by the reduced multiplets).
    pub fn specialize(&self, i: usize, value: &Rat) -> Self {
        let mut f = self.clone();
        f.konst = &f.konst + &f.coef[i] * value;
        f.coef[i] = Rat::zero();
        f
    }

    /// Sign for strictly positive labels when it is label-independent:
    /// +1 / -1 when all coefficients and the constant share a sign, 0 when zero.
    pub fn definite_sign(&self) -> Option<i32> {
        let mut pos = false;
        let mut neg = false;
        for c in self.coef.iter().chain(std::iter::once(&self.konst)) {
            if c.is_positive() {
                pos = true;
            }
            if c.is_negative() {
                neg = true;
            }
        }
        match (pos, neg) {
            (false, false) => Some(0),
            (true, false) => Some(1),
            (false, true) => Some(-1),
            (true, true) => None,
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut p = MultiPoly::constant(self.konst.clone());
        for (k, v) in [var::M1, var::M2, var::M3].iter().enumerate() {
            p = p.add(&MultiPoly::var(*v).scale(&self.coef[k]));
        }
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["m1", "m2", "m3"];
        let mut parts: Vec<String> = Vec::new();
        for k in 0..3 {
            let c = &self.coef[k];
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(names[k].to_string());
            } else if (-c.clone()).is_one() {
                parts.push(format!("-{}", names[k]));
            } else {
                parts.push(format!("{}*{}", c, names[k]));
            }
        }
        if !self.konst.is_zero() || parts.is_empty() {
            parts.push(format!("{}", self.konst));
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{}", out)
    }
}

impl Scalar for LinForm {
    fn zero() -> Self {
        Self::constant(Rat::zero())
    }
    fn one() -> Self {
        Self::constant(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.konst.is_zero() && self.coef.iter().all(|c| c.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        LinForm {
            konst: &self.konst + &o.konst,
            coef: [
                &self.coef[0] + &o.coef[0],
                &self.coef[1] + &o.coef[1],
                &self.coef[2] + &o.coef[2],
            ],
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        LinForm {
            konst: -self.konst.clone(),
            coef: [
                -self.coef[0].clone(),
                -self.coef[1].clone(),
                -self.coef[2].clone(),
            ],
        }
    }
    fn mul(&self, o: &Self) -> Self {
        // only scalar multiples keep the form affine-linear
        if let Some(c) = o.as_const() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_const() {
            return o.scale(&c);
        }
        panic!("LinForm multiplication of two non-constant forms");
    }
    fn div(&self, o: &Self) -> Self {
        let c = o.as_const().expect("LinForm division by non-constant");
        assert!(!c.is_zero());
        self.scale(&(Rat::one() / c))
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
}

impl LinForm {
    pub fn as_const(&self) -> Option<Rat> {
        if self.coef.iter().all(|c| c.is_zero()) {
            Some(self.konst.clone())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LinForm {
            konst: &self.konst * c,
            coef: [&self.coef[0] * c, &self.coef[1] * c, &self.coef[2] * c],
        }
    }

    /// Exact division self = q * other when it exists.
    pub fn div_form(&self, other: &Self) -> Option<Rat> {
        // find first nonzero coefficient of `other`
        let probe: Vec<(Rat, Rat)> = std::iter::once((self.konst.clone(), other.konst.clone()))
            .chain((0..3).map(|k| (self.coef[k].clone(), other.coef[k].clone())))
            .collect();
        let mut q: Option<Rat> = None;
        for (s, o) in &probe {
            if !o.is_zero() {
                q = Some(s / o);
                break;
            }
        }
        let q = q?;
        for (s, o) in &probe {
            if *s != o * &q {
                return None;
            }
        }
        Some(q)
    }
}

/// ER signature: the Dynkin-label triple of the node weight, plus the derived
/// compact notation [n; c; n1] where n and n1 are the gamma1/gamma3 labels and
/// c = -1/2 (Lambda+rho, beta12^vee).
#[derive(Clone, PartialEq, Debug)]
pub struct Signature<S: Scalar> {
    pub triple: [S; 3],
}

impl<S: Scalar> Signature<S> {
    pub fn new(triple: [S; 3]) -> Self {
        Signature { triple }
    }

    pub fn weight(&self) -> Weight<S> {
        weight_of_labels(&self.triple)
    }

    /// The compact-notation middle entry c.
    pub fn c_entry(&self) -> S {
        let m = self.weight().hc_shifted(&Root::of(RootName::B12));
        m.mul(&S::from_rat(&crate::exact::rat(-1, 2)))
    }

    /// [n; c; n1]
    pub fn bracket(&self) -> [S; 3] {
        [self.triple[0].clone(), self.c_entry(), self.triple[2].clone()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn nine_positive_roots_ordered() {
        let roots = positive_roots();
        assert_eq!(roots.len(), 9);
        assert_eq!(roots[0].name, RootName::B11);
        assert_eq!(roots[8].name, RootName::A12);
        // beta22 in eps and gamma coordinates
        let b22 = Root::of(RootName::B22);
        assert_eq!(b22.eps, [0, 2, 0]);
        assert_eq!(b22.gamma_coords(), [0, 2, 1]);
        // long roots exactly the beta_jj
        for r in &roots {
            let expect_long = matches!(r.name, RootName::B11 | RootName::B22 | RootName::B33);
            assert_eq!(r.is_long(), expect_long, "{}", r.name);
        }
        // beta11 = 2g1 + 2g2 + g3
        assert_eq!(Root::of(RootName::B11).gamma_coords(), [2, 2, 1]);
    }

    #[test]
    fn compactness_partition() {
        let roots = positive_roots();
        assert_eq!(roots.iter().filter(|r| r.k_compact()).count(), 3);
        assert_eq!(roots.iter().filter(|r| !r.k_compact()).count(), 6);
        let mc: Vec<_> = roots.iter().filter(|r| r.m_compact()).map(|r| r.name).collect();
        assert_eq!(mc, vec![RootName::B33, RootName::A12]);
    }

    #[test]
    fn rho_is_3_2_1() {
        assert_eq!(rho_eps(), [rint(3), rint(2), rint(1)]);
        // gamma coordinates (3, 5, 3)
        let rho = Weight::new([rint(3), rint(2), rint(1)]);
        assert_eq!(rho.gamma_coords(), [rint(3), rint(5), rint(3)]);
        // (rho, gamma_i^vee) = 1
        let zero = Weight::<Rat>::zero();
        for n in [RootName::A12, RootName::A23, RootName::B33] {
            assert_eq!(zero.hc_shifted(&Root::of(n)), rint(1));
        }
    }

    #[test]
    fn hc_parameters_match_table() {
        // symbolic via LinForm
        let m = [LinForm::label(0), LinForm::label(1), LinForm::label(2)];
        let expect = [
            (RootName::B11, LinForm::combo(1, 1, 1)),
            (RootName::B12, LinForm::combo(1, 2, 2)),
            (RootName::B22, LinForm::combo(0, 1, 1)),
            (RootName::B13, LinForm::combo(1, 1, 2)),
            (RootName::B23, LinForm::combo(0, 1, 2)),
            (RootName::B33, LinForm::combo(0, 0, 1)),
            (RootName::A13, LinForm::combo(1, 1, 0)),
            (RootName::A23, LinForm::combo(0, 1, 0)),
            (RootName::A12, LinForm::combo(1, 0, 0)),
        ];
        for (name, want) in expect {
            assert_eq!(hc_parameter(&m, &Root::of(name)), want, "{}", name);
        }
        // numeric spot checks at (1,1,1)
        let one = [rint(1), rint(1), rint(1)];
        assert_eq!(hc_parameter(&one, &Root::of(RootName::B11)), rint(3));
        assert_eq!(hc_parameter(&one, &Root::of(RootName::B12)), rint(5));
    }

    #[test]
    fn label_weight_roundtrip() {
        let m = [rint(1), rint(1), rint(1)];
        let w = weight_of_labels(&m);
        // all c_j vanish at (1,1,1)
        assert_eq!(w.gamma_coords(), [rint(0), rint(0), rint(0)]);
        assert_eq!(w.h_values(), [rint(0), rint(0), rint(0)]);
        assert_eq!(w.dynkin_labels(), m);
        let m2 = [rint(2), rint(1), rint(1)];
        let w2 = weight_of_labels(&m2);
        assert_eq!(w2.h_values()[0], rint(1)); // h1 = m1 - 1
        assert_eq!(w2.dynkin_labels(), m2);
        // h3 = 2(m3-1)
        let m3 = [rint(1), rint(1), rint(3)];
        assert_eq!(weight_of_labels(&m3).h_values()[2], rint(4));
    }

    #[test]
    fn bgg_reducibility_cases() {
        let lam = weight_of_labels(&[rint(1), rint(1), rint(1)]);
        assert_eq!(bgg_reducible(&lam, &Root::of(RootName::B22)), Some(2));
        // a weight with (Lambda+rho, beta^vee) = -1: labels m2 = -1 direction
        let neg = weight_of_labels(&[rint(1), rint(-1), rint(1)]);
        assert_eq!(neg.hc_shifted(&Root::of(RootName::A23)), rint(-1));
        assert_eq!(bgg_reducible(&neg, &Root::of(RootName::A23)), None);
        // non-integer value 3/2
        let frac = Weight::new([rat(1, 2), rint(0), rint(0)]);
        assert_eq!(frac.hc_shifted(&Root::of(RootName::B11)), rat(7, 2));
        assert_eq!(bgg_reducible(&frac, &Root::of(RootName::B11)), None);
    }

    #[test]
    fn weyl_data() {
        assert_eq!(weyl_order(2), 48);
        assert_eq!(multiplet_count(2), 12);
        assert_eq!(multiplet_count(1), 4);
    }

    #[test]
    fn signature_bracket_head() {
        // chi_0 = {m1, m2, m3} -> [m1; -1/2 m_{13,23}; m3]
        let sig = Signature::new([LinForm::label(0), LinForm::label(1), LinForm::label(2)]);
        let b = sig.bracket();
        assert_eq!(b[0], LinForm::label(0));
        assert_eq!(b[2], LinForm::label(2));
        assert_eq!(b[1], LinForm::combo(1, 2, 2).scale(&rat(-1, 2)));
    }
}
