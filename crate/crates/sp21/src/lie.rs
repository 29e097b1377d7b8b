//! Concrete 6x6 matrix realization of sp(2,1) and sp(3,C).
//!
//! The real-form basis (A0, M1..M6, L+-1..7) is entered from its defining
//! matrices; the Chevalley basis is assembled from it. Structure constants are
//! always *derived* from matrix brackets by exact linear solves, never copied
//! from convention tables, so sign conventions cannot drift.

use crate::exact::{rat, rint, GaussRat, Rat};
use crate::roots::{positive_roots, Root, RootName, ROOT_ORDER};
use num_traits::{One, Zero};
use serde_json::json;
use std::fmt;

/// Dense 6x6 matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieMatrix {
    pub e: Vec<GaussRat>, // row major, 36 entries
}

impl LieMatrix {
    pub fn zero() -> Self {
        LieMatrix { e: vec![GaussRat::zero(); 36] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..6 {
            *m.at_mut(i, i) = GaussRat::one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussRat {
        &self.e[6 * r + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut GaussRat {
        &mut self.e[6 * r + c]
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        LieMatrix {
            e: self.e.iter().zip(&o.e).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        LieMatrix {
            e: self.e.iter().zip(&o.e).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        LieMatrix { e: self.e.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for i in 0..6 {
            for k in 0..6 {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..6 {
                    let b = o.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = m.at(i, j).add(&a.mul(b));
                    *m.at_mut(i, j) = cur;
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..6 {
            for j in 0..6 {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..6 {
            for j in 0..6 {
                *m.at_mut(j, i) = self.at(i, j).conj();
            }
        }
        m
    }

    /// Matrix commutator XY - YX.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_real(&self) -> bool {
        self.e.iter().all(|v| v.is_real())
    }

    fn from_entries(entries: &[(usize, usize, GaussRat)]) -> Self {
        let mut m = Self::zero();
        for (r, c, v) in entries {
            *m.at_mut(*r, *c) = v.clone();
        }
        m
    }
}

impl fmt::Display for LieMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..6 {
            let row: Vec<String> = (0..6).map(|j| format!("{}", self.at(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// J_3 in block form ((0, 1), (-1, 0)).
pub fn j_matrix() -> LieMatrix {
    let mut m = LieMatrix::zero();
    for k in 0..3 {
        *m.at_mut(k, k + 3) = GaussRat::one();
        *m.at_mut(k + 3, k) = GaussRat::from_int(-1);
    }
    m
}

/// y_2 = diag(beta_2, beta_2) with beta_2 the order-reversing block for n = 2.
pub fn y2_matrix() -> LieMatrix {
    let mut m = LieMatrix::zero();
    for b in [0usize, 3] {
        *m.at_mut(b, b) = GaussRat::one();
        *m.at_mut(b + 1, b + 2) = GaussRat::one();
        *m.at_mut(b + 2, b + 1) = GaussRat::one();
    }
    m
}

/// Membership in sp(3,C): tX J + J X = 0.
pub fn is_sp3(x: &LieMatrix) -> bool {
    let j = j_matrix();
    x.transpose().mul(&j).add(&j.mul(x)).is_zero()
}

/// Membership in the real form sp(2,1): additionally X^dagger y2 + y2 X = 0.
pub fn verify_real_form(x: &LieMatrix) -> bool {
    let y2 = y2_matrix();
    is_sp3(x) && x.conj_transpose().mul(&y2).add(&y2.mul(x)).is_zero()
}

fn one() -> GaussRat {
    GaussRat::one()
}
fn neg1() -> GaussRat {
    GaussRat::from_int(-1)
}
fn im() -> GaussRat {
    GaussRat::i()
}
fn neg_i() -> GaussRat {
    GaussRat::i().neg()
}

/// A named family of basis matrices.
#[derive(Clone)]
pub struct NamedBasis {
    pub names: Vec<String>,
    pub mats: Vec<LieMatrix>,
}

impl NamedBasis {
    pub fn get(&self, name: &str) -> &LieMatrix {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("no basis element {name}"));
        &self.mats[i]
    }
}

/// The 21-element basis of the real form sp(2,1) from the defining tables:
/// A0; M1..M6 spanning sp(1)+sp(1); L+1..L+7; L-k = y2 L+k y2.
pub fn build_real_basis() -> NamedBasis {
    let diag = |vals: [GaussRat; 6]| {
        let mut m = LieMatrix::zero();
        for (k, v) in vals.into_iter().enumerate() {
            *m.at_mut(k, k) = v;
        }
        m
    };
    let z = GaussRat::zero;

    let a0 = diag([z(), one(), neg1(), z(), neg1(), one()]);
    let m1 = diag([im(), z(), z(), neg_i(), z(), z()]);
    let m2 = diag([z(), im(), im(), z(), neg_i(), neg_i()]);
    let m3 = LieMatrix::from_entries(&[(0, 3, one()), (3, 0, neg1())]);
    let m4 = LieMatrix::from_entries(&[(0, 3, im()), (3, 0, im())]);
    let m5 = LieMatrix::from_entries(&[
        (1, 5, one()),
        (2, 4, one()),
        (4, 2, neg1()),
        (5, 1, neg1()),
    ]);
    let m6 = LieMatrix::from_entries(&[(1, 5, im()), (2, 4, im()), (4, 2, im()), (5, 1, im())]);

    let l1 = LieMatrix::from_entries(&[
        (0, 2, one()),
        (1, 0, neg1()),
        (3, 4, one()),
        (5, 3, neg1()),
    ]);
    let l2 = LieMatrix::from_entries(&[
        (0, 2, im()),
        (1, 0, im()),
        (3, 4, neg_i()),
        (5, 3, neg_i()),
    ]);
    let l3 = LieMatrix::from_entries(&[
        (0, 4, one()),
        (1, 3, one()),
        (3, 2, neg1()),
        (5, 0, neg1()),
    ]);
    let l4 = LieMatrix::from_entries(&[(0, 4, im()), (1, 3, im()), (3, 2, im()), (5, 0, im())]);
    let l5 = LieMatrix::from_entries(&[(1, 2, im()), (5, 4, neg_i())]);
    let l6 = LieMatrix::from_entries(&[(1, 4, one()), (5, 2, neg1())]);
    let l7 = LieMatrix::from_entries(&[(1, 4, im()), (5, 2, im())]);

    let y2 = y2_matrix();
    let theta = |m: &LieMatrix| y2.mul(m).mul(&y2);

    let mut names: Vec<String> = vec!["A0".into()];
    let mut mats = vec![a0];
    for (k, m) in [m1, m2, m3, m4, m5, m6].into_iter().enumerate() {
        names.push(format!("M{}", k + 1));
        mats.push(m);
    }
    let lplus = [l1, l2, l3, l4, l5, l6, l7];
    for (k, m) in lplus.iter().enumerate() {
        names.push(format!("L+{}", k + 1));
        mats.push(m.clone());
    }
    for (k, m) in lplus.iter().enumerate() {
        names.push(format!("L-{}", k + 1));
        mats.push(theta(m));
    }
    NamedBasis { names, mats }
}

/// Generator index into the 21-element Chevalley basis:
/// 0..3 Cartan H1..H3, 3+r positive root r, 12+r negative root r,
/// with r the descending root order of `ROOT_ORDER`.
pub type GenIdx = usize;

pub fn pos_idx(r: RootName) -> GenIdx {
    3 + r.index()
}
pub fn neg_idx(r: RootName) -> GenIdx {
    12 + r.index()
}

pub fn gen_name(g: GenIdx) -> String {
    match g {
        0 => "H1".into(),
        1 => "H2".into(),
        2 => "H3".into(),
        3..=11 => format!("E[{}]", ROOT_ORDER[g - 3].ascii()),
        12..=20 => format!("E[-{}]", ROOT_ORDER[g - 12].ascii()),
        _ => panic!("bad generator index"),
    }
}

/// The sp(3,C) Chevalley basis expressed through the real-form matrices:
/// H1 = i M2, H2 = -i M1 + (A0 - i M2)/2, H3 = 2 i M1, and the root vectors
/// from the positive/negative tables.
pub fn chevalley_basis() -> NamedBasis {
    let rb = build_real_basis();
    let g = |n: &str| rb.get(n).clone();
    let half = GaussRat::from_rat(rat(1, 2));
    let i = im();

    let h1 = g("M2").scale(&i);
    let h2 = g("M1")
        .scale(&neg_i())
        .add(&g("A0").sub(&g("M2").scale(&i)).scale(&half));
    let h3 = g("M1").scale(&i).scale(&GaussRat::from_int(2));

    let e_g1 = g("M5").add(&g("M6").scale(&i)).scale(&half);
    let e_g2 = g("L+3").sub(&g("L+4").scale(&i)).scale(&half).scale(&neg1());
    let e_g3 = g("M3").add(&g("M4").scale(&i));
    let e_b11 = g("L+6").add(&g("L+7").scale(&i));
    let e_b22 = g("L+6").sub(&g("L+7").scale(&i));
    let e_b12 = g("L+5").scale(&neg_i());
    let e_b13 = g("L+3").add(&g("L+4").scale(&i)).scale(&half);
    let e_b23 = g("L+1").add(&g("L+2").scale(&i)).scale(&half).scale(&neg1());
    let e_a13 = g("L+1").sub(&g("L+2").scale(&i)).scale(&half).scale(&neg1());

    let f_g1 = g("M5").sub(&g("M6").scale(&i)).scale(&half).scale(&neg1());
    let f_g2 = g("L-3").add(&g("L-4").scale(&i)).scale(&half);
    let f_g3 = g("M3").scale(&neg1()).add(&g("M4").scale(&i));
    let f_b11 = g("L-6").scale(&neg1()).add(&g("L-7").scale(&i));
    let f_b22 = g("L-6").scale(&neg1()).sub(&g("L-7").scale(&i));
    let f_b12 = g("L-5").scale(&neg_i());
    let f_b13 = g("L-3").sub(&g("L-4").scale(&i)).scale(&half).scale(&neg1());
    let f_b23 = g("L-1").sub(&g("L-2").scale(&i)).scale(&half);
    let f_a13 = g("L-1").add(&g("L-2").scale(&i)).scale(&half);

    // order: H1 H2 H3, positives in descending root order, then negatives
    let pos = |n: RootName| match n {
        RootName::B11 => e_b11.clone(),
        RootName::B12 => e_b12.clone(),
        RootName::B22 => e_b22.clone(),
        RootName::B13 => e_b13.clone(),
        RootName::B23 => e_b23.clone(),
        RootName::B33 => e_g3.clone(),
        RootName::A13 => e_a13.clone(),
        RootName::A23 => e_g2.clone(),
        RootName::A12 => e_g1.clone(),
    };
    let neg = |n: RootName| match n {
        RootName::B11 => f_b11.clone(),
        RootName::B12 => f_b12.clone(),
        RootName::B22 => f_b22.clone(),
        RootName::B13 => f_b13.clone(),
        RootName::B23 => f_b23.clone(),
        RootName::B33 => f_g3.clone(),
        RootName::A13 => f_a13.clone(),
        RootName::A23 => f_g2.clone(),
        RootName::A12 => f_g1.clone(),
    };

    let mut names: Vec<String> = vec!["H1".into(), "H2".into(), "H3".into()];
    let mut mats = vec![h1, h2, h3];
    for r in ROOT_ORDER {
        names.push(format!("E[{}]", r.ascii()));
        mats.push(pos(r));
    }
    for r in ROOT_ORDER {
        names.push(format!("E[-{}]", r.ascii()));
        mats.push(neg(r));
    }
    NamedBasis { names, mats }
}

/// Exact solver: expresses matrices in the span of a basis by Gaussian
/// elimination over the Gaussian rationals with first-nonzero pivoting.
struct SpanSolver {
    ncols: usize,
    // row-reduced rows over the 36-dim entry space, augmented with coords
    rows: Vec<(usize, Vec<GaussRat>, Vec<GaussRat>)>, // (pivot, row36, coords)
}

impl SpanSolver {
    fn new(basis: &[LieMatrix]) -> Self {
        let ncols = basis.len();
        let mut s = SpanSolver { ncols, rows: Vec::new() };
        for (k, m) in basis.iter().enumerate() {
            let mut coords = vec![GaussRat::zero(); ncols];
            coords[k] = GaussRat::one();
            let added = s.reduce_and_insert(m.e.clone(), coords);
            assert!(added, "basis is linearly dependent at element {k}");
        }
        s
    }

    fn reduce(&self, mut v: Vec<GaussRat>, mut coords: Vec<GaussRat>) -> (Vec<GaussRat>, Vec<GaussRat>) {
        for (p, row, rc) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for k in 0..36 {
                    v[k] = v[k].sub(&f.mul(&row[k]));
                }
                for k in 0..self.ncols {
                    coords[k] = coords[k].sub(&f.mul(&rc[k]));
                }
            }
        }
        (v, coords)
    }

    fn reduce_and_insert(&mut self, v: Vec<GaussRat>, coords: Vec<GaussRat>) -> bool {
        let (mut v, mut coords) = self.reduce(v, coords);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[pivot].inv();
        for k in 0..36 {
            v[k] = v[k].mul(&inv);
        }
        for k in 0..self.ncols {
            coords[k] = coords[k].mul(&inv);
        }
        self.rows.push((pivot, v, coords));
        true
    }

    /// Coordinates of `m` over the basis, or None if outside the span.
    fn solve(&self, m: &LieMatrix) -> Option<Vec<GaussRat>> {
        let (v, coords) = self.reduce(m.e.clone(), vec![GaussRat::zero(); self.ncols]);
        if v.iter().all(|x| x.is_zero()) {
            Some(coords.iter().map(|c| c.neg()).collect())
        } else {
            None
        }
    }
}

/// Structure constants of the Chevalley basis, derived from matrix brackets.
/// table[a][b] holds the coordinates of [X_a, X_b]; all entries are real
/// (checked) and stored as rationals.
pub struct StructureTable {
    pub basis: NamedBasis,
    pub table: Vec<Vec<Vec<(GenIdx, Rat)>>>, // sparse coordinate lists
}

impl StructureTable {
    pub fn new() -> Self {
        let basis = chevalley_basis();
        let solver = SpanSolver::new(&basis.mats);
        let n = basis.mats.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let br = basis.mats[a].bracket(&basis.mats[b]);
                let coords = solver
                    .solve(&br)
                    .expect("bracket escaped the basis span: wrong basis matrix");
                let mut sparse = Vec::new();
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        assert!(
                            c.is_real(),
                            "non-real Chevalley structure constant [{},{}]",
                            basis.names[a],
                            basis.names[b]
                        );
                        sparse.push((k, c.re.clone()));
                    }
                }
                table[a][b] = sparse;
            }
        }
        StructureTable { basis, table }
    }

    pub fn bracket_coords(&self, a: GenIdx, b: GenIdx) -> &[(GenIdx, Rat)] {
        &self.table[a][b]
    }

    /// The eigenvalue in [H_i, X_g] = c X_g for a root generator g, i.e. the
    /// pairing root(H_i), read off from the table.
    pub fn root_pairing(&self, hi: usize, g: GenIdx) -> Rat {
        let row = &self.table[hi][g];
        if row.is_empty() {
            return Rat::zero();
        }
        assert!(row.len() == 1 && row[0].0 == g, "adjoint action not diagonal");
        row[0].1.clone()
    }

    /// Jacobi identity over every unordered basis triple.
    pub fn check_jacobi(&self) -> bool {
        let n = self.basis.mats.len();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let m = &self.basis.mats;
                    let s = m[a]
                        .bracket(&m[b])
                        .bracket(&m[c])
                        .add(&m[b].bracket(&m[c]).bracket(&m[a]))
                        .add(&m[c].bracket(&m[a]).bracket(&m[b]));
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Antisymmetry of the derived table.
    pub fn check_antisymmetry(&self) -> bool {
        let n = self.basis.mats.len();
        for a in 0..n {
            for b in 0..n {
                let mut neg: Vec<(GenIdx, Rat)> =
                    self.table[b][a].iter().map(|(k, c)| (*k, -c.clone())).collect();
                neg.sort_by_key(|(k, _)| *k);
                let mut own = self.table[a][b].clone();
                own.sort_by_key(|(k, _)| *k);
                if own != neg {
                    return false;
                }
            }
        }
        true
    }

    /// JSON export: basis names plus sparse bracket triples.
    pub fn to_json(&self) -> serde_json::Value {
        let mut brackets = Vec::new();
        let n = self.basis.mats.len();
        for a in 0..n {
            for b in (a + 1)..n {
                for (k, c) in &self.table[a][b] {
                    brackets.push(json!({
                        "a": self.basis.names[a],
                        "b": self.basis.names[b],
                        "target": self.basis.names[*k],
                        "coeff": c.to_string(),
                    }));
                }
            }
        }
        json!({ "basis": self.basis.names, "brackets": brackets })
    }
}

impl Default for StructureTable {
    fn default() -> Self {
        Self::new()
    }
}

/// The symmetric dual-algebra table of the paper: gamma_i(H_j) entries
/// {2, -1, -2, 4}, measured from the matrices.
pub fn cartan_pairing_table(st: &StructureTable) -> [[Rat; 3]; 3] {
    let simple = [RootName::A12, RootName::A23, RootName::B33];
    let mut t = [
        [Rat::zero(), Rat::zero(), Rat::zero()],
        [Rat::zero(), Rat::zero(), Rat::zero()],
        [Rat::zero(), Rat::zero(), Rat::zero()],
    ];
    for (i, r) in simple.iter().enumerate() {
        for hj in 0..3 {
            t[i][hj] = st.root_pairing(hj, pos_idx(*r));
        }
    }
    t
}

/// Text/LaTeX dump of a matrix of Gaussian rationals.
pub fn matrix_latex(m: &LieMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for i in 0..6 {
        let row: Vec<String> = (0..6)
            .map(|j| {
                let v = m.at(i, j);
                if v.is_real() {
                    format!("{}", v.re)
                } else if v.re.is_zero() && v.im.is_one() {
                    "i".to_string()
                } else if v.re.is_zero() && (-v.im.clone()).is_one() {
                    "-i".to_string()
                } else if v.re.is_zero() {
                    format!("{} i", v.im)
                } else {
                    format!("{}", v)
                }
            })
            .collect();
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{pmatrix}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rint;

    #[test]
    fn real_basis_satisfies_defining_relations() {
        let rb = build_real_basis();
        assert_eq!(rb.mats.len(), 21);
        for (n, m) in rb.names.iter().zip(&rb.mats) {
            assert!(verify_real_form(m), "defining relations fail for {n}");
        }
        // A0 = diag(0,1,-1,0,-1,1)
        let a0 = rb.get("A0");
        for (k, v) in [0i64, 1, -1, 0, -1, 1].iter().enumerate() {
            assert_eq!(a0.at(k, k), &GaussRat::from_int(*v));
        }
        // zero matrix is in the real form, a complex root vector is not
        assert!(verify_real_form(&LieMatrix::zero()));
        let ch = chevalley_basis();
        assert!(!verify_real_form(ch.get("E[gamma1]")));
    }

    #[test]
    fn cartan_involution_is_involutive() {
        let rb = build_real_basis();
        let y2 = y2_matrix();
        let theta = |m: &LieMatrix| y2.mul(m).mul(&y2);
        for k in 1..=7 {
            let lp = rb.get(&format!("L+{k}"));
            let lm = rb.get(&format!("L-{k}"));
            assert_eq!(&theta(lp), lm);
            assert_eq!(&theta(lm), lp);
        }
    }

    #[test]
    fn cartan_subalgebra_abelian() {
        let rb = build_real_basis();
        for a in ["A0", "M1", "M2"] {
            for b in ["A0", "M1", "M2"] {
                assert!(rb.get(a).bracket(rb.get(b)).is_zero());
            }
        }
        assert!(rb.get("A0").bracket(rb.get("A0")).is_zero());
    }

    fn rank(vectors: Vec<Vec<GaussRat>>) -> usize {
        let mut rows: Vec<(usize, Vec<GaussRat>)> = Vec::new();
        for mut v in vectors {
            for (p, row) in &rows {
                if !v[*p].is_zero() {
                    let f = v[*p].clone();
                    for k in 0..v.len() {
                        v[k] = v[k].sub(&f.mul(&row[k]));
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].inv();
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
                rows.push((p, v));
            }
        }
        rows.len()
    }

    #[test]
    fn real_basis_spans_21_dimensions() {
        let rb = build_real_basis();
        assert_eq!(rank(rb.mats.iter().map(|m| m.e.clone()).collect()), 21);
    }

    #[test]
    fn compact_subalgebra_dimension_13() {
        // K = sp(2)+sp(1) is the +1 eigenspace of the Cartan involution theta
        let rb = build_real_basis();
        let y2 = y2_matrix();
        let fixed: Vec<Vec<GaussRat>> = rb
            .mats
            .iter()
            .map(|m| m.add(&y2.mul(m).mul(&y2)).e)
            .collect();
        assert_eq!(rank(fixed), 13);
    }

    #[test]
    fn chevalley_matrices_real_and_symplectic() {
        let ch = chevalley_basis();
        assert_eq!(ch.mats.len(), 21);
        for (n, m) in ch.names.iter().zip(&ch.mats) {
            assert!(m.is_real(), "{n} has imaginary entries");
            assert!(is_sp3(m), "{n} not in sp(3,C)");
        }
        // H3 = 2i M1 = diag(-2,0,0,2,0,0)
        let h3 = ch.get("H3");
        assert_eq!(h3.at(0, 0), &GaussRat::from_int(-2));
        assert_eq!(h3.at(3, 3), &GaussRat::from_int(2));
    }

    #[test]
    fn cartan_table_matches_paper_entries() {
        let st = StructureTable::new();
        let t = cartan_pairing_table(&st);
        let expect = [
            [rint(2), rint(-1), rint(0)],
            [rint(-1), rint(2), rint(-2)],
            [rint(0), rint(-2), rint(4)],
        ];
        assert_eq!(t, expect);
        // [H1, E_g1] = 2 E_g1, [H2, E_g3] = -2 E_g3
        let ch = &st.basis;
        let h1 = ch.get("H1");
        let eg1 = ch.get("E[gamma1]");
        assert_eq!(h1.bracket(eg1), eg1.scale(&GaussRat::from_int(2)));
        let h2 = ch.get("H2");
        let eg3 = ch.get("E[gamma3]");
        assert_eq!(h2.bracket(eg3), eg3.scale(&GaussRat::from_int(-2)));
    }

    #[test]
    fn structure_table_consistency() {
        let st = StructureTable::new();
        assert!(st.check_antisymmetry());
        // [H1, H2] = 0
        assert!(st.bracket_coords(0, 1).is_empty());
        // [E_{-g1}, E_{-g2}] is a multiple of E_{-a13}
        let row = st.bracket_coords(neg_idx(RootName::A12), neg_idx(RootName::A23));
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].0, neg_idx(RootName::A13));
        assert!(!row[0].1.is_zero());
    }

    #[test]
    fn adjoint_eigenvalues_recover_roots() {
        // the H-eigenvalue vector of each positive root vector equals
        // (root, gamma_j) in the orthonormal eps pairing
        let st = StructureTable::new();
        for r in positive_roots() {
            for hj in 0..3 {
                let got = st.root_pairing(hj, pos_idx(r.name));
                let g = Root::of([RootName::A12, RootName::A23, RootName::B33][hj]);
                let want: i64 = (0..3).map(|k| r.eps[k] * g.eps[k]).sum();
                assert_eq!(got, rint(want), "{} on H{}", r.name, hj + 1);
                let gotn = st.root_pairing(hj, neg_idx(r.name));
                assert_eq!(gotn, rint(-want));
            }
        }
    }

    #[test]
    fn tilded_sl2_normalization() {
        // With H~3 := H3/2 and E~(+-g3) := E(+-g3)/2 the matrices satisfy
        // [H~3, E~g3] = 2 E~g3 and [E~g3, E~-g3] = H~3.
        let ch = chevalley_basis();
        let half = GaussRat::from_rat(rat(1, 2));
        let h3t = ch.get("H3").scale(&half);
        let ep = ch.get("E[gamma3]").scale(&half);
        let en = ch.get("E[-gamma3]").scale(&half);
        assert_eq!(h3t.bracket(&ep), ep.scale(&GaussRat::from_int(2)));
        assert_eq!(h3t.bracket(&en), en.scale(&GaussRat::from_int(-2)));
        assert_eq!(ep.bracket(&en), h3t);
    }
}
