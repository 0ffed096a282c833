//! Simple gl(3,C)-modules in the monomial basis, the dual symmetry, and
//! the identification of p± with V(2,0,0) and V(0,0,−2).

use crate::arith::{fmt_q, q, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::gtpattern::{dual, validate, Basis, Dominant, Pattern};
use crate::linalg::QMat;
use crate::sp6::{kappa, x_pm, Mat6};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Elementary generator E_pq of gl(3), 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub p: usize,
    pub q: usize,
}

impl Gen {
    pub const fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    pub fn all() -> Vec<Gen> {
        let mut v = Vec::new();
        for p in 1..=3 {
            for q_ in 1..=3 {
                v.push(Gen::new(p, q_));
            }
        }
        v
    }

    /// Cartan elements and simple root vectors.
    pub fn spanning() -> [Gen; 7] {
        [
            Gen::new(1, 1),
            Gen::new(2, 2),
            Gen::new(3, 3),
            Gen::new(1, 2),
            Gen::new(2, 1),
            Gen::new(2, 3),
            Gen::new(3, 2),
        ]
    }

    /// The automorphism ω on the spanning set: E_ii ↦ −E_ii, E_jk ↦ E_kj.
    pub fn omega(&self) -> (Gen, i64) {
        if self.p == self.q {
            (*self, -1)
        } else {
            (Gen::new(self.q, self.p), 1)
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}", self.p, self.q)
    }
}

impl std::str::FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['E', 'e']);
        let d: Vec<usize> = t.chars().filter_map(|c| c.to_digit(10).map(|x| x as usize)).collect();
        if d.len() != 2 || !(1..=3).contains(&d[0]) || !(1..=3).contains(&d[1]) {
            return Err(Error::Invalid(format!("bad generator {s:?}")));
        }
        Ok(Gen::new(d[0], d[1]))
    }
}

/// Sparse vector in V_λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    pub ptype: Dominant,
    terms: BTreeMap<Pattern, Rational>,
}

impl ModuleElement {
    pub fn zero(ptype: Dominant) -> Self {
        Self { ptype, terms: BTreeMap::new() }
    }

    /// The basis vector f(M).
    pub fn basis(m: &Pattern) -> Self {
        let mut v = Self::zero(m.ptype());
        v.add_term(*m, Rational::one());
        v
    }

    /// Adds `c·f(p)`; invalid arrays are dropped (the f(M') = 0 convention).
    pub fn add_term(&mut self, p: Pattern, c: Rational) {
        if c.is_zero() || !validate(&p) {
            return;
        }
        debug_assert_eq!(p.ptype(), self.ptype);
        let e = self.terms.entry(p).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, o: &ModuleElement, c: &Rational) {
        for (p, v) in &o.terms {
            self.add_term(*p, v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pattern, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Pattern) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in enumeration order for output.
    pub fn json_terms(&self) -> Vec<TermJson> {
        let b = Basis::full(&self.ptype);
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(p, _)| b.pos(p));
        v.into_iter().map(|(p, c)| TermJson { pattern: *p, coeff: fmt_q(c) }).collect()
    }
}

#[derive(Serialize)]
pub struct TermJson {
    pub pattern: Pattern,
    pub coeff: String,
}

/// Action of E_pq on a single basis vector, as (pattern, coefficient) pairs
/// with invalid patterns removed.
pub fn act_basis(g: Gen, m: &Pattern) -> Vec<(Pattern, i64)> {
    let mut raw: Vec<(Pattern, i64)> = Vec::with_capacity(2);
    let d = m.delta();
    match (g.p, g.q) {
        (p, q_) if p == q_ => raw.push((*m, m.weight().0[p - 1])),
        (1, 2) => {
            raw.push((m.mb([0, 0], 1, 0), m.m12 - m.m11));
            raw.push((m.mb([0, 0], 1, -1), (m.m23 - m.m22) * m.chi_plus(0)));
        }
        (2, 1) => {
            raw.push((m.mb([0, 0], -1, 0), m.m11 - m.m22));
            raw.push((m.mb([0, 0], -1, -1), (m.m12 - m.m23) * m.chi_minus(0)));
        }
        (2, 3) => {
            raw.push((m.mb([1, 0], 0, 0), m.m13 - m.m12));
            raw.push((m.mb([1, 0], 0, -1), (m.m13 - m.m12 - d) * m.chi_minus(0)));
        }
        (3, 2) => {
            raw.push((m.mb([0, -1], 0, 0), m.m22 - m.m33));
            raw.push((m.mb([0, -1], 0, -1), (m.m22 - m.m33 + d) * m.chi_plus(0)));
        }
        (1, 3) => {
            raw.push((m.mb([1, 0], 1, 0), m.m13 - m.m12));
            raw.push((m.mb([1, 0], 1, -1), -m.c1bar()));
        }
        (3, 1) => {
            raw.push((m.mb([0, -1], -1, 0), m.m33 - m.m22));
            raw.push((m.mb([0, -1], -1, -1), m.c1()));
        }
        _ => unreachable!("generator indices are 1..=3"),
    }
    raw.retain(|(p, c)| *c != 0 && validate(p));
    raw
}

/// Linear extension of [`act_basis`].
pub fn act(g: Gen, v: &ModuleElement) -> ModuleElement {
    let mut out = ModuleElement::zero(v.ptype);
    for (m, c) in v.terms() {
        for (p, k) in act_basis(g, m) {
            out.add_term(p, c * q(k));
        }
    }
    out
}

/// Matrix of E_pq on V_λ; column l(N) holds the coordinates of E_pq f(N).
pub fn matrix_of(g: Gen, lambda: &Dominant) -> QMat {
    let b = Basis::full(lambda);
    let mut m = QMat::zeros(b.len(), b.len());
    for (c, n) in b.patterns.iter().enumerate() {
        for (p, k) in act_basis(g, n) {
            let r = b.pos(&p).expect("shifted pattern of same type");
            m.add_at(r, c, &q(k));
        }
    }
    m
}

/// X ∘ T = T ∘ ω(X) for X in the spanning set, T: f(M) ↦ f(M̂).
pub fn dual_intertwiner_check(lambda: &Dominant) -> bool {
    let b = Basis::full(lambda);
    for g in Gen::spanning() {
        let (wg, sign) = g.omega();
        for m in &b.patterns {
            let lhs = act(g, &ModuleElement::basis(&dual(m)));
            let rhs_src = act(wg, &ModuleElement::basis(m));
            let mut rhs = ModuleElement::zero(lhs.ptype);
            for (p, c) in rhs_src.terms() {
                rhs.add_term(dual(p), c * q(sign));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Sign of p± as a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(&self) -> bool {
        matches!(self, Sign::Plus)
    }
    pub fn symbol(&self) -> char {
        if self.is_plus() {
            '+'
        } else {
            '-'
        }
    }
}

/// Index pairs (i,j), i ≤ j, in the order 11,12,13,22,23,33.
pub const PAIRS: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (a, b)).expect("indices in 1..=3")
}

/// Element Σ c_ij X_{±ij} of p±.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVector {
    pub sign: Sign,
    pub coeffs: [Rational; 6],
}

impl PVector {
    pub fn zero(sign: Sign) -> Self {
        Self { sign, coeffs: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn unit(sign: Sign, i: usize, j: usize, c: Rational) -> Self {
        let mut v = Self::zero(sign);
        v.coeffs[pair_index(i, j)] = c;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_scaled(&mut self, o: &PVector, c: &Rational) {
        assert_eq!(self.sign, o.sign);
        for k in 0..6 {
            self.coeffs[k] += &o.coeffs[k] * c;
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { sign: self.sign, coeffs: std::array::from_fn(|k| &self.coeffs[k] * c) }
    }

    pub fn to_matrix(&self) -> Mat6 {
        let mut m = Mat6::zero();
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            if !self.coeffs[k].is_zero() {
                m = &m + &x_pm(self.sign.is_plus(), i, j).scale(&GaussianRational::real(self.coeffs[k].clone()));
            }
        }
        m
    }

    /// Expansion of a matrix lying in p+ or p−.
    pub fn from_matrix(y: &Mat6) -> Option<PVector> {
        if y.is_zero() {
            return Some(PVector::zero(Sign::Plus));
        }
        for sign in [Sign::Plus, Sign::Minus] {
            let mut v = PVector::zero(sign);
            for (k, &(i, j)) in PAIRS.iter().enumerate() {
                let a = y.get(i - 1, j - 1);
                if !a.im.is_zero() {
                    return None;
                }
                v.coeffs[k] = if i == j { a.re.clone() } else { &a.re * q(2) };
            }
            if &v.to_matrix() == y {
                return Some(v);
            }
        }
        None
    }

    /// Terms as (X label, coefficient string), nonzero only.
    pub fn labeled_terms(&self) -> Vec<(String, String)> {
        PAIRS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(i, j), c)| (format!("X{}{}{}", self.sign.symbol(), i, j), fmt_q(c)))
            .collect()
    }
}

impl fmt::Display for PVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.labeled_terms();
        if t.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = t.into_iter().map(|(x, c)| format!("{c}*{x}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for PVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct T {
            x: String,
            coeff: String,
        }
        let v: Vec<T> = self.labeled_terms().into_iter().map(|(x, coeff)| T { x, coeff }).collect();
        v.serialize(s)
    }
}

/// Marking pattern of X_{±ij} and the sign attached to it.
pub fn marking(sign: Sign, i: usize, j: usize) -> (Pattern, i64) {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    match sign {
        Sign::Plus => {
            let (mid, bot) = match (a, b) {
                (1, 1) => ([2, 0], 2),
                (1, 2) => ([2, 0], 1),
                (1, 3) => ([1, 0], 1),
                (2, 2) => ([2, 0], 0),
                (2, 3) => ([1, 0], 0),
                _ => ([0, 0], 0),
            };
            (Pattern::new([2, 0, 0], mid, bot), 1)
        }
        Sign::Minus => {
            let (mid, bot, s) = match (a, b) {
                (3, 3) => ([0, 0], 0, 1),
                (2, 3) => ([0, -1], 0, -1),
                (2, 2) => ([0, -2], 0, 1),
                (1, 3) => ([0, -1], -1, 1),
                (1, 2) => ([0, -2], -1, -1),
                _ => ([0, -2], -2, 1),
            };
            (Pattern::new([0, 0, -2], mid, bot), s)
        }
    }
}

/// Image of a p±-vector in V(2,0,0) or V(0,0,−2) under the marking.
pub fn mark_vector(v: &PVector) -> ModuleElement {
    let t = if v.sign.is_plus() { Dominant { l: [2, 0, 0] } } else { Dominant { l: [0, 0, -2] } };
    let mut out = ModuleElement::zero(t);
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        let (p, s) = marking(v.sign, i, j);
        out.add_term(p, &v.coeffs[k] * q(s));
    }
    out
}

/// [κ(E_pq), X_{±ij}] computed from the 6×6 realization.
pub fn adjoint_action(g: Gen, sign: Sign, i: usize, j: usize) -> PVector {
    let y = kappa(g.p, g.q).bracket(&x_pm(sign.is_plus(), i, j));
    let mut v = PVector::from_matrix(&y).expect("ad(k) preserves p±");
    if v.is_zero() {
        v.sign = sign;
    }
    v
}

/// Printed adjoint-action tables: entry [κ(E_pq), X] for X = X_{+ij} (table 1)
/// and X = −X_{−ij} (table 2), as (coefficient, i, j) of X_{±ij}; `None` for 0.
pub fn printed_table(g: Gen, sign: Sign, i: usize, j: usize) -> Option<(i64, usize, usize)> {
    // Column order: E11 E22 E33 E12 E21 E23 E32 E13 E31.
    const COLS: [(usize, usize); 9] = [(1, 1), (2, 2), (3, 3), (1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)];
    type Cell = Option<(i64, usize, usize)>;
    const N: Cell = None;
    const fn c(k: i64, i: usize, j: usize) -> Cell {
        Some((k, i, j))
    }
    const PLUS: [[Cell; 9]; 6] = [
        [c(2, 1, 1), N, N, N, c(2, 1, 2), N, N, N, c(2, 1, 3)],
        [c(1, 1, 2), c(1, 1, 2), N, c(1, 1, 1), c(1, 2, 2), N, c(1, 1, 3), N, c(1, 2, 3)],
        [c(1, 1, 3), N, c(1, 1, 3), N, c(1, 2, 3), c(1, 1, 2), N, N, N],
        [N, c(2, 2, 2), N, c(2, 1, 2), N, N, c(2, 2, 3), c(1, 1, 1), c(1, 3, 3)],
        [N, c(1, 2, 3), c(1, 2, 3), c(1, 1, 3), N, c(1, 2, 2), c(1, 3, 3), c(1, 1, 2), N],
        [N, N, c(2, 3, 3), N, N, c(2, 2, 3), N, c(2, 1, 3), N],
    ];
    const MINUS: [[Cell; 9]; 6] = [
        [c(2, 1, 1), N, N, c(2, 1, 2), N, N, N, c(2, 1, 3), N],
        [c(1, 1, 2), c(1, 1, 2), N, c(1, 2, 2), c(1, 1, 1), c(1, 1, 3), N, c(1, 2, 3), N],
        [c(1, 1, 3), N, c(1, 1, 3), c(1, 2, 3), N, N, c(1, 1, 2), N, N],
        [N, c(2, 2, 2), N, N, c(2, 1, 2), c(2, 2, 3), N, c(1, 3, 3), c(1, 1, 1)],
        [N, c(1, 2, 3), c(1, 2, 3), N, c(1, 1, 3), c(1, 3, 3), c(1, 2, 2), N, c(1, 1, 2)],
        [N, N, c(2, 3, 3), N, N, N, c(2, 2, 3), N, c(2, 1, 3)],
    ];
    let col = COLS.iter().position(|&x| x == (g.p, g.q))?;
    let row = pair_index(i, j);
    if sign.is_plus() {
        PLUS[row][col]
    } else {
        MINUS[row][col]
    }
}

/// Printed cells that disagree with the matrix bracket: the κ(E13), κ(E31)
/// columns of rows 13 and 22 in both tables carry each other's entries.
pub fn printed_table_conflict(g: Gen, i: usize, j: usize) -> bool {
    matches!((g.p, g.q), (1, 3) | (3, 1)) && matches!((i, j), (1, 3) | (2, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qf;

    fn pm(m13: i64, m23: i64, m33: i64, m12: i64, m22: i64, m11: i64) -> Pattern {
        Pattern::new([m13, m23, m33], [m12, m22], m11)
    }

    #[test]
    fn act_examples() {
        let v = act(Gen::new(1, 2), &ModuleElement::basis(&pm(1, 0, 0, 1, 0, 0)));
        assert_eq!(v, ModuleElement::basis(&pm(1, 0, 0, 1, 0, 1)));
        let m = pm(3, 1, 0, 2, 1, 1);
        let v = act(Gen::new(1, 1), &ModuleElement::basis(&m));
        assert_eq!(v.coeff(&m), q(m.weight().0[0]));
        let z = ModuleElement::basis(&Pattern::constant(0));
        assert!(act(Gen::new(2, 3), &z).is_zero());
    }

    #[test]
    fn matrix_examples() {
        let l100 = Dominant::new(1, 0, 0).unwrap();
        let m = matrix_of(Gen::new(1, 1), &l100);
        let mut d = QMat::zeros(3, 3);
        d.set(0, 0, q(1));
        assert_eq!(m, d);
        assert_eq!(matrix_of(Gen::new(1, 2), &Dominant::new(0, 0, 0).unwrap()), QMat::zeros(1, 1));
        let l = Dominant::new(2, 1, 0).unwrap();
        let c = matrix_of(Gen::new(1, 2), &l).commutator(&matrix_of(Gen::new(2, 3), &l));
        assert_eq!(c, matrix_of(Gen::new(1, 3), &l));
    }

    #[test]
    fn gl3_relations_small() {
        for lam in Dominant::all_with_spread(3, -1) {
            let mats: Vec<_> = Gen::all().into_iter().map(|g| (g, matrix_of(g, &lam))).collect();
            for (a, ma) in &mats {
                for (b, mb) in &mats {
                    let lhs = ma.commutator(mb);
                    let mut rhs = QMat::zeros(lhs.rows, lhs.cols);
                    if a.q == b.p {
                        rhs = &rhs + &matrix_of(Gen::new(a.p, b.q), &lam);
                    }
                    if b.q == a.p {
                        rhs = &rhs - &matrix_of(Gen::new(b.p, a.q), &lam);
                    }
                    assert_eq!(lhs, rhs, "{a} {b} on {lam}");
                }
            }
        }
    }

    #[test]
    fn raising_kills_highest() {
        for lam in Dominant::all_with_spread(4, 0) {
            let [a, b, _] = lam.l;
            let hi = Pattern::new(lam.l, [a, b], a);
            assert!(act_basis(Gen::new(1, 2), &hi).is_empty());
            assert!(act_basis(Gen::new(2, 3), &hi).is_empty());
        }
    }

    #[test]
    fn dual_intertwiner() {
        for l in [[0, 0, 0], [2, 0, 0], [3, 1, 0], [4, 2, -1], [1, 1, 0]] {
            assert!(dual_intertwiner_check(&Dominant::new(l[0], l[1], l[2]).unwrap()), "{l:?}");
        }
    }

    #[test]
    fn marking_examples() {
        assert_eq!(marking(Sign::Plus, 1, 1), (pm(2, 0, 0, 2, 0, 2), 1));
        assert_eq!(marking(Sign::Minus, 3, 3), (pm(0, 0, -2, 0, 0, 0), 1));
        assert_eq!(marking(Sign::Plus, 3, 3), (pm(2, 0, 0, 0, 0, 0), 1));
        assert_eq!(marking(Sign::Minus, 2, 3), (pm(0, 0, -2, 0, -1, 0), -1));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_action(Gen::new(2, 1), Sign::Plus, 1, 1), PVector::unit(Sign::Plus, 1, 2, q(2)));
        assert!(adjoint_action(Gen::new(1, 1), Sign::Plus, 3, 3).is_zero());
        // [κ(E11), X+12] has weight β1+β2 so it is X+12 itself
        assert_eq!(adjoint_action(Gen::new(1, 1), Sign::Plus, 1, 2), PVector::unit(Sign::Plus, 1, 2, q(1)));
        let half = adjoint_action(Gen::new(1, 2), Sign::Plus, 2, 2);
        assert_eq!(half, PVector::unit(Sign::Plus, 1, 2, q(2)));
        let _ = qf(1, 2);
    }

    #[test]
    fn printed_tables_match_bracket_where_consistent() {
        for sign in [Sign::Plus, Sign::Minus] {
            for &(i, j) in &PAIRS {
                for g in Gen::all() {
                    let got = adjoint_action(g, sign, i, j);
                    // table 2 rows are labeled −X_{−ij}
                    let got = if sign.is_plus() { got } else { got.scale(&q(-1)) };
                    let want = match printed_table(g, sign, i, j) {
                        None => PVector::zero(got.sign),
                        Some((k, a, b)) => PVector::unit(sign, a, b, q(k)),
                    };
                    let agree = got.coeffs == want.coeffs;
                    if printed_table_conflict(g, i, j) {
                        assert!(!agree, "expected printed conflict at {g} {sign:?} {i}{j}");
                    } else {
                        assert!(agree, "{g} {sign:?} {i}{j}: bracket {got} vs table {want}");
                    }
                }
            }
        }
    }

    #[test]
    fn printed_conflict_cells_are_row_swapped() {
        for sign in [Sign::Plus, Sign::Minus] {
            for g in [Gen::new(1, 3), Gen::new(3, 1)] {
                let s = if sign.is_plus() { q(1) } else { q(-1) };
                let b13 = adjoint_action(g, sign, 1, 3).scale(&s);
                let b22 = adjoint_action(g, sign, 2, 2).scale(&s);
                let t = |i, j| match printed_table(g, sign, i, j) {
                    None => PVector::zero(sign),
                    Some((k, a, b)) => PVector::unit(sign, a, b, q(k)),
                };
                assert_eq!(b13.coeffs, t(2, 2).coeffs);
                assert_eq!(b22.coeffs, t(1, 3).coeffs);
            }
        }
    }

    #[test]
    fn marking_intertwines() {
        for sign in [Sign::Plus, Sign::Minus] {
            for &(i, j) in &PAIRS {
                for g in Gen::all() {
                    let x = PVector::unit(sign, i, j, q(1));
                    let lhs = mark_vector(&adjoint_action(g, sign, i, j));
                    let rhs = act(g, &mark_vector(&x));
                    assert_eq!(lhs, rhs, "{g} X{}{i}{j}", sign.symbol());
                }
            }
        }
    }
}
