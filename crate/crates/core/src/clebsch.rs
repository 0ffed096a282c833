//! Clebsch-Gordan injectors V_{λ+d} → V_λ ⊗ V_{e1}, V_λ ⊗ V_{2e1},
//! V_λ ⊗ V_{−2e3}, the projector V_{e1} ⊗ V_{e1} → V_{2e1}, and the
//! equivariance check.

use crate::arith::{fmt_q, q, Rational};
use crate::error::{Error, Result};
use crate::glmodule::{act, act_basis, Gen, ModuleElement};
use crate::gtpattern::{dual, enumerate, validate, Basis, Dominant, Pattern};
use crate::linalg::QMat;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse vector in V_left ⊗ V_right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub left_type: Dominant,
    pub right_type: Dominant,
    terms: BTreeMap<(Pattern, Pattern), Rational>,
}

impl TensorElement {
    pub fn zero(left_type: Dominant, right_type: Dominant) -> Self {
        Self { left_type, right_type, terms: BTreeMap::new() }
    }

    /// Adds `c·f(a)⊗f(b)`; invalid arrays contribute zero.
    pub fn add_term(&mut self, a: Pattern, b: Pattern, c: Rational) {
        if c.is_zero() || !validate(&a) || !validate(&b) {
            return;
        }
        debug_assert_eq!(a.ptype(), self.left_type);
        debug_assert_eq!(b.ptype(), self.right_type);
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add_scaled(&mut self, o: &TensorElement, c: &Rational) {
        for ((a, b), v) in &o.terms {
            self.add_term(*a, *b, v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Pattern, Pattern), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Pattern, b: &Pattern) -> Rational {
        self.terms.get(&(*a, *b)).cloned().unwrap_or_else(Rational::zero)
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

    /// Leibniz action of E_pq.
    pub fn act(&self, g: Gen) -> TensorElement {
        let mut out = TensorElement::zero(self.left_type, self.right_type);
        for ((a, b), c) in &self.terms {
            for (a2, k) in act_basis(g, a) {
                out.add_term(a2, *b, c * q(k));
            }
            for (b2, k) in act_basis(g, b) {
                out.add_term(*a, b2, c * q(k));
            }
        }
        out
    }

    pub fn json_terms(&self) -> Vec<TensorTermJson> {
        let bl = Basis::full(&self.left_type);
        let br = Basis::full(&self.right_type);
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((a, b), _)| (br.pos(b), bl.pos(a)));
        v.into_iter().map(|((a, b), c)| TensorTermJson { left: *a, right: *b, coeff: fmt_q(c) }).collect()
    }
}

#[derive(Serialize)]
pub struct TensorTermJson {
    pub left: Pattern,
    pub right: Pattern,
    pub coeff: String,
}

/// Direction of an injector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// e_i, into V_λ ⊗ V_{e1}.
    Vec(usize),
    /// e_i + e_j (i ≤ j), into V_λ ⊗ V_{2e1}.
    Pos(usize, usize),
    /// −e_i − e_j (i ≤ j), into V_λ ⊗ V_{−2e3}.
    Neg(usize, usize),
}

impl Direction {
    pub fn shift(&self) -> [i64; 3] {
        let mut v = [0; 3];
        match *self {
            Direction::Vec(i) => v[i - 1] += 1,
            Direction::Pos(i, j) => {
                v[i - 1] += 1;
                v[j - 1] += 1;
            }
            Direction::Neg(i, j) => {
                v[i - 1] -= 1;
                v[j - 1] -= 1;
            }
        }
        v
    }

    pub fn right_type(&self) -> Dominant {
        match self {
            Direction::Vec(_) => Dominant { l: [1, 0, 0] },
            Direction::Pos(..) => Dominant { l: [2, 0, 0] },
            Direction::Neg(..) => Dominant { l: [0, 0, -2] },
        }
    }

    pub fn all() -> Vec<Direction> {
        let mut v: Vec<Direction> = (1..=3).map(Direction::Vec).collect();
        for &(i, j) in &crate::glmodule::PAIRS {
            v.push(Direction::Pos(i, j));
        }
        for &(i, j) in &crate::glmodule::PAIRS {
            v.push(Direction::Neg(i, j));
        }
        v
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Vec(i) => write!(f, "e{i}"),
            Direction::Pos(i, j) => write!(f, "+{i}{j}"),
            Direction::Neg(i, j) => write!(f, "-{i}{j}"),
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("bad direction {s:?}"));
        let digits = |t: &str| -> Result<Vec<usize>> {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize).filter(|d| (1..=3).contains(d)).ok_or_else(bad)).collect()
        };
        if let Some(t) = s.strip_prefix('e') {
            let d = digits(t)?;
            return if d.len() == 1 { Ok(Direction::Vec(d[0])) } else { Err(bad()) };
        }
        let (neg, t) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => return Err(bad()),
        };
        let d = digits(t)?;
        if d.len() != 2 || d[0] > d[1] {
            return Err(bad());
        }
        Ok(if neg { Direction::Neg(d[0], d[1]) } else { Direction::Pos(d[0], d[1]) })
    }
}

/// Source weight and direction of an injector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InjectorSpec {
    pub source: Dominant,
    pub direction: Direction,
}

impl InjectorSpec {
    pub fn new(source: Dominant, direction: Direction) -> Self {
        Self { source, direction }
    }

    /// Highest weight of the injected module, or the "component absent" error.
    pub fn target(&self) -> Result<Dominant> {
        self.source.plus(self.direction.shift()).map_err(|_| {
            Error::ComponentAbsent(format!("{} + {} is not dominant", self.source, self.direction))
        })
    }
}

impl fmt::Display for InjectorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{}_{}", self.source, self.direction)
    }
}

fn ebar(m: &Pattern) -> i64 {
    m.c1() * (m.m13 - m.m33 + 1 - m.c1bar())
}

fn fbar(m: &Pattern) -> i64 {
    -m.c2() - m.chi_plus(0) * ((m.m13 - m.m12) * (m.m22 - m.m33) + (m.m13 - m.m33 + 1) * m.delta())
}

fn dbar(m: &Pattern) -> i64 {
    -m.m22 + m.m33 + m.delta()
}

/// Upper summation bound R_{[i;jk]} for the e_i injector.
pub fn vec_bound(i: usize, j: usize, k: usize) -> Option<i64> {
    let t = match i {
        1 => [1, 2, 1],
        2 => [1, 1, 1],
        3 => [0, 1, 0],
        _ => return None,
    };
    match (j, k) {
        (1, 1) => Some(t[0]),
        (0, 1) => Some(t[1]),
        (0, 0) => Some(t[2]),
        _ => None,
    }
}

/// Coefficient c_{[i;jk;l]}(M) of the e_i injector.
pub fn vec_coeff(i: usize, j: usize, k: usize, l: i64, m: &Pattern) -> i64 {
    let a = m.m13 - m.m12;
    let b = m.m22 - m.m33;
    match (i, j, k, l) {
        (1, 1, 1, 0) => a * b,
        (1, 1, 1, 1) => -ebar(m),
        (1, 0, 1, 0) => -a * b,
        (1, 0, 1, 1) => fbar(m),
        (1, 0, 1, 2) => -m.c2() * m.chi_plus(0),
        (1, 0, 0, 0) => -a * (m.m13 - m.m22 + 1),
        (1, 0, 0, 1) => m.c2(),
        (2, 1, 1, 0) => b,
        (2, 1, 1, 1) => -dbar(m) * m.chi_minus(0),
        (2, 0, 1, 0) => -b,
        (2, 0, 1, 1) => m.c1bar(),
        (2, 0, 0, 0) => -(m.m23 - m.m22),
        (2, 0, 0, 1) => -m.c1bar() * m.chi_minus(0),
        (3, 1, 1, 0) => 1,
        (3, 0, 1, 0) => -1,
        (3, 0, 1, 1) => -m.chi_plus(0),
        (3, 0, 0, 0) => 1,
        _ => 0,
    }
}

/// Index pairs (l,k), 0 ≤ k ≤ l ≤ 2, in the order 22,21,11,20,10,00.
pub const LK: [(usize, usize); 6] = [(2, 2), (2, 1), (1, 1), (2, 0), (1, 0), (0, 0)];

/// Upper summation bound for C_{[ij]}(·; l, k, ·).
pub fn pos_bound(i: usize, j: usize, l: usize, k: usize) -> Option<i64> {
    let t = match (i, j) {
        (1, 1) => [2, 3, 2, 4, 3, 2],
        (2, 2) => [2, 2, 2, 2, 2, 2],
        (3, 3) => [0, 1, 0, 2, 1, 0],
        (1, 2) => [2, 2, 2, 3, 2, 2],
        (1, 3) => [1, 2, 1, 3, 2, 1],
        (2, 3) => [1, 1, 1, 2, 1, 1],
        _ => return None,
    };
    LK.iter().position(|&x| x == (l, k)).map(|p| t[p])
}

/// Closed-form coefficient C_{[ij]}(M; l, k, m) of the e_i+e_j injector.
pub fn pos_coeff(i: usize, j: usize, l: usize, k: usize, mm: i64, m: &Pattern) -> i64 {
    let a = m.m13 - m.m12;
    let b = m.m22 - m.m33;
    let g = m.m23 - m.m22;
    let h = m.m13 - m.m22;
    let (e, f, d) = (ebar(m), fbar(m), dbar(m));
    let (c1, cb, c2) = (m.c1(), m.c1bar(), m.c2());
    let (cp, cp1, cm, cm1) = (m.chi_plus(0), m.chi_plus(1), m.chi_minus(0), m.chi_minus(1));
    let dl = m.delta();
    let at = |top: [i64; 3], mid: [i64; 2], bot: i64| m.shifted_raw(top, mid, bot, 0);
    match (i, j, l, k, mm) {
        (1, 1, 2, 2, 0) => a * (a - 1) * b * (b - 1),
        (1, 1, 2, 2, 1) => -2 * a * b * (e - c1),
        (1, 1, 2, 2, 2) => e * (c1 - 1) * (m.m13 - m.m33 - cb),
        (1, 1, 2, 1, 0) => -2 * a * (a - 1) * b * (b - 1),
        (1, 1, 2, 1, 1) => 2 * a * b * (fbar(&at([-1, 0, 0], [0, -1], -1)) + e),
        (1, 1, 2, 1, 2) => -2 * (e * fbar(&at([-1, 0, 0], [-1, 0], -1)) + a * b * c1 * (cb + 1) * cp),
        (1, 1, 2, 1, 3) => 2 * (c1 - 1) * cb * e * cp,
        (1, 1, 1, 1, 0) => -2 * a * (a - 1) * b * (h + 1),
        (1, 1, 1, 1, 1) => 2 * a * (b * c1 * (cb + 1) + h * e),
        (1, 1, 1, 1, 2) => -2 * e * (c1 - 1) * cb,
        (1, 1, 2, 0, 0) => a * (a - 1) * b * (b - 1),
        (1, 1, 2, 0, 1) => -a * b * (f + fbar(&at([-1, 0, 0], [0, -1], 0))),
        (1, 1, 2, 0, 2) => {
            (a + 1) * (b + 1) * c2 * cp
                + a * b * (c1 + 1) * (cb + 1) * cp1
                + f * fbar(&at([-1, 0, 0], [-1, 0], 0))
        }
        (1, 1, 2, 0, 3) => -c2 * (cp1 * f + cp * fbar(&at([-1, 0, 0], [-2, 1], 0))),
        (1, 1, 2, 0, 4) => c2 * (c1 - 1) * (cb - 1) * cp1,
        (1, 1, 1, 0, 0) => 2 * a * (a - 1) * b * (h + 1),
        (1, 1, 1, 0, 1) => -2 * a * (h * f + b * at([-1, 0, 0], [0, -1], 0).c2()),
        (1, 1, 1, 0, 2) => 2 * (at([-1, 0, 0], [-1, 0], 0).c2() * f + cp * (a + 1) * (h - 1) * c2),
        (1, 1, 1, 0, 3) => -2 * c2 * (c1 - 1) * (cb - 1) * cp,
        (1, 1, 0, 0, 0) => a * (a - 1) * (h + 1) * h,
        (1, 1, 0, 0, 1) => -2 * a * h * c2,
        (1, 1, 0, 0, 2) => c2 * (c1 - 1) * (cb - 1),

        (2, 2, 2, 2, 0) => b * (b - 1),
        (2, 2, 2, 2, 1) => -b * (d * cm + (d + 2) * cm1),
        (2, 2, 2, 2, 2) => d * (d + 1) * cm1,
        (2, 2, 2, 1, 0) => -2 * b * (b - 1),
        (2, 2, 2, 1, 1) => 2 * b * (cb + (d + 1) * cm),
        (2, 2, 2, 1, 2) => -2 * cb * d * cm,
        (2, 2, 1, 1, 0) => -2 * b * g,
        (2, 2, 1, 1, 1) => 2 * (d * (g - 1) * cm - b * (cb + 1) * cm1),
        (2, 2, 1, 1, 2) => 2 * cb * d * cm1,
        (2, 2, 2, 0, 0) => b * (b - 1),
        (2, 2, 2, 0, 1) => -2 * b * cb,
        (2, 2, 2, 0, 2) => cb * (cb - 1),
        (2, 2, 1, 0, 0) => 2 * b * g,
        (2, 2, 1, 0, 1) => 2 * cb * (b * cm - (g - 1)),
        (2, 2, 1, 0, 2) => -2 * cb * (cb - 1) * cm,
        (2, 2, 0, 0, 0) => g * (g - 1),
        (2, 2, 0, 0, 1) => cb * ((g - 2) * cm + g * cm1),
        (2, 2, 0, 0, 2) => cb * (cb - 1) * cm1,

        (3, 3, 2, 2, 0) => 1,
        (3, 3, 2, 1, 0) => -2,
        (3, 3, 2, 1, 1) => -2 * cp,
        (3, 3, 1, 1, 0) => 2,
        (3, 3, 2, 0, 0) => 1,
        (3, 3, 2, 0, 1) => cp1 + cp,
        (3, 3, 2, 0, 2) => cp1,
        (3, 3, 1, 0, 0) => -2,
        (3, 3, 1, 0, 1) => -2 * cp,
        (3, 3, 0, 0, 0) => 1,

        (1, 2, 2, 2, 0) => a * b * (b - 1),
        (1, 2, 2, 2, 1) => -b * (e + cm * a * (d + 1)),
        (1, 2, 2, 2, 2) => d * e * cm,
        (1, 2, 2, 1, 0) => -2 * a * b * (b - 1),
        (1, 2, 2, 1, 1) => b * (e + f + a * (cb + 1 + d * (1 - cp))),
        (1, 2, 2, 1, 2) => -cb * e - c2 * (1 - d + dl * cp),
        (1, 2, 1, 1, 0) => a * b * (2 * m.m22 - m.m13 - m.m23 - 2),
        (1, 2, 1, 1, 1) => e * g + c2 * (b + 1) + a * cm * (d * (h + 1) - b * (cb + 1)),
        (1, 2, 1, 1, 2) => c2 * cm * (m.m13 - m.m33 + 2 - cb - d),
        (1, 2, 2, 0, 0) => a * b * (b - 1),
        (1, 2, 2, 0, 1) => -b * (f + a * (cb + cp)),
        (1, 2, 2, 0, 2) => (cb + cp - 1) * f + (b + 1) * c2 * cp,
        (1, 2, 2, 0, 3) => -c2 * (cb - 1) * cp,
        (1, 2, 1, 0, 0) => -a * b * (2 * m.m22 - m.m13 - m.m23 - 2),
        (1, 2, 1, 0, 1) => a * cb * (b * (1 - cp) - (h + 1)) - g * f - (b + 1) * c2,
        (1, 2, 1, 0, 2) => 2 * c2 * (cb - 1),
        (1, 2, 0, 0, 0) => a * (h + 1) * g,
        (1, 2, 0, 0, 1) => a * (h + 1) * cb * cm - (g - 1) * c2,
        (1, 2, 0, 0, 2) => -c2 * (cb - 1) * cm,

        (1, 3, 2, 2, 0) => a * b,
        (1, 3, 2, 2, 1) => -e,
        (1, 3, 2, 1, 0) => -2 * a * b,
        (1, 3, 2, 1, 1) => e + f - a * b * cp,
        (1, 3, 2, 1, 2) => (e - c2) * cp,
        (1, 3, 1, 1, 0) => a * (2 * m.m22 - m.m13 - m.m33 - 1),
        (1, 3, 1, 1, 1) => c2 - e,
        (1, 3, 2, 0, 0) => a * b,
        (1, 3, 2, 0, 1) => a * b * cp1 - f,
        (1, 3, 2, 0, 2) => c2 * cp - f * cp1,
        (1, 3, 2, 0, 3) => c2 * cp1,
        (1, 3, 1, 0, 0) => -a * (2 * m.m22 - m.m13 - m.m33 - 1),
        (1, 3, 1, 0, 1) => f - c2 + a * (h + 1) * cp,
        (1, 3, 1, 0, 2) => -2 * c2 * cp,
        (1, 3, 0, 0, 0) => -a * (h + 1),
        (1, 3, 0, 0, 1) => c2,

        (2, 3, 2, 2, 0) => b,
        (2, 3, 2, 2, 1) => -d * cm,
        (2, 3, 2, 1, 0) => -2 * b,
        (2, 3, 2, 1, 1) => cb - b + dl * cm,
        (2, 3, 1, 1, 0) => 2 * m.m22 - m.m23 - m.m33,
        (2, 3, 1, 1, 1) => -(cb + d) * cm,
        (2, 3, 2, 0, 0) => b,
        (2, 3, 2, 0, 1) => -(cb - b * cp),
        (2, 3, 2, 0, 2) => -cb * cp,
        (2, 3, 1, 0, 0) => -(2 * m.m22 - m.m23 - m.m33),
        (2, 3, 1, 0, 1) => 2 * cb,
        (2, 3, 0, 0, 0) => -g,
        (2, 3, 0, 0, 1) => -cb * cm,
        _ => 0,
    }
}

/// Coefficient C(M; l, k, m) obtained by composing two e_i injectors and
/// the projector, evaluated formally (no validity test on intermediates).
pub fn pos_coeff_composed(i: usize, j: usize, l: usize, k: usize, mm: i64, m: &Pattern) -> i64 {
    let mut s = 0;
    for (j1, k1) in [(1usize, 1usize), (0, 1), (0, 0)] {
        for (j2, k2) in [(1usize, 1usize), (0, 1), (0, 0)] {
            if k1 + k2 != l || j1 + j2 != k {
                continue;
            }
            let r1 = vec_bound(i, j1, k1).unwrap();
            for m1 in 0..=r1 {
                let m2 = mm - m1;
                if m2 < 0 || m2 > vec_bound(j, j2, k2).unwrap() {
                    continue;
                }
                let mut top = [0; 3];
                top[i - 1] = -1;
                let mid_pat = m.shifted_raw(top, [0, -(k1 as i64)], -(j1 as i64), -m1);
                s += vec_coeff(i, j1, k1, m1, m) * vec_coeff(j, j2, k2, m2, &mid_pat);
            }
        }
    }
    s
}

fn check_source(m: &Pattern, t: &Dominant) -> Result<()> {
    if m.ptype() != *t || !validate(m) {
        return Err(Error::Invalid(format!("{m} is not a valid pattern of type {t}")));
    }
    Ok(())
}

/// i^λ_{e_i}(f(M)) for M of type λ+e_i.
pub fn inject_vec(lambda: &Dominant, i: usize, m: &Pattern) -> Result<TensorElement> {
    let spec = InjectorSpec::new(*lambda, Direction::Vec(i));
    let t = spec.target()?;
    check_source(m, &t)?;
    let mut out = TensorElement::zero(*lambda, Direction::Vec(i).right_type());
    let mut top = [0; 3];
    top[i - 1] = -1;
    for (j, k) in [(1usize, 1usize), (0, 1), (0, 0)] {
        let right = Pattern::new([1, 0, 0], [k as i64, 0], j as i64);
        for l in 0..=vec_bound(i, j, k).unwrap() {
            let left = m.shifted_raw(top, [0, -(k as i64)], -(j as i64), -l);
            out.add_term(left, right, q(vec_coeff(i, j, k, l, m)));
        }
    }
    Ok(out)
}

/// Images of the nine basis tensors of V_{e1} ⊗ V_{e1} in V_{2e1}.
pub fn project_e1(t: &TensorElement) -> Result<ModuleElement> {
    let e1 = Dominant { l: [1, 0, 0] };
    if t.left_type != e1 || t.right_type != e1 {
        return Err(Error::Invalid("project_e1 needs both factors of type (1,0,0)".into()));
    }
    let mut out = ModuleElement::zero(Dominant { l: [2, 0, 0] });
    for ((a, b), c) in t.terms() {
        let p = Pattern::new([2, 0, 0], [a.m12 + b.m12, 0], a.m11 + b.m11);
        out.add_term(p, c.clone());
    }
    Ok(out)
}

/// Evaluation mode for the e_i+e_j injector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Closed,
    Composed,
}

/// i^λ_{e_i+e_j}(f(M)) for M of type λ+e_i+e_j.
pub fn inject_pos(lambda: &Dominant, i: usize, j: usize, m: &Pattern, mode: Mode) -> Result<TensorElement> {
    let spec = InjectorSpec::new(*lambda, Direction::Pos(i, j));
    let t = spec.target()?;
    check_source(m, &t)?;
    match mode {
        Mode::Closed => Ok(inject_pos_with(lambda, i, j, m, &pos_coeff)),
        Mode::Composed => inject_pos_composed(lambda, i, j, m),
    }
}

/// The e_i+e_j injector with an arbitrary coefficient function.
pub fn inject_pos_with(
    lambda: &Dominant,
    i: usize,
    j: usize,
    m: &Pattern,
    coeff: &dyn Fn(usize, usize, usize, usize, i64, &Pattern) -> i64,
) -> TensorElement {
    let mut out = TensorElement::zero(*lambda, Dominant { l: [2, 0, 0] });
    let mut top = [0; 3];
    top[i - 1] -= 1;
    top[j - 1] -= 1;
    for (l, k) in LK {
        let right = Pattern::new([2, 0, 0], [l as i64, 0], k as i64);
        for mm in 0..=pos_bound(i, j, l, k).unwrap() {
            let left = m.shifted_raw(top, [0, -(l as i64)], -(k as i64), -mm);
            out.add_term(left, right, q(coeff(i, j, l, k, mm, m)));
        }
    }
    out
}

/// (id ⊗ P_{e1}) ∘ (i^λ_{e_j} ⊗ id) ∘ i^{λ+e_j}_{e_i} as genuine linear maps.
fn inject_pos_composed(lambda: &Dominant, i: usize, j: usize, m: &Pattern) -> Result<TensorElement> {
    let mut e_j = [0; 3];
    e_j[j - 1] = 1;
    let mid = lambda.plus(e_j).map_err(|_| {
        Error::ComponentAbsent(format!("intermediate {} + e{} not dominant", lambda, j))
    })?;
    let first = inject_vec(&mid, i, m)?;
    let mut out = TensorElement::zero(*lambda, Dominant { l: [2, 0, 0] });
    for ((a, b), c) in first.terms() {
        let second = inject_vec(lambda, j, a)?;
        for ((a2, b2), c2) in second.terms() {
            let p = Pattern::new([2, 0, 0], [b2.m12 + b.m12, 0], b2.m11 + b.m11);
            out.add_term(*a2, p, c * c2);
        }
    }
    Ok(out)
}

/// i^λ_{−e_i−e_j}(f(M)) for M of type λ−e_i−e_j, closed form.
pub fn inject_neg(lambda: &Dominant, i: usize, j: usize, m: &Pattern) -> Result<TensorElement> {
    let spec = InjectorSpec::new(*lambda, Direction::Neg(i, j));
    let t = spec.target()?;
    check_source(m, &t)?;
    Ok(inject_neg_with(lambda, i, j, m, &pos_coeff))
}

/// The −e_i−e_j injector with an arbitrary e-type coefficient function.
pub fn inject_neg_with(
    lambda: &Dominant,
    i: usize,
    j: usize,
    m: &Pattern,
    coeff: &dyn Fn(usize, usize, usize, usize, i64, &Pattern) -> i64,
) -> TensorElement {
    let (a, b) = (4 - j, 4 - i);
    let mh = dual(m);
    let mut out = TensorElement::zero(*lambda, Dominant { l: [0, 0, -2] });
    let mut top = [0; 3];
    top[i - 1] += 1;
    top[j - 1] += 1;
    for (l, k) in LK {
        let right = Pattern::new([0, 0, -2], [0, -(l as i64)], -(k as i64));
        for mm in 0..=pos_bound(a, b, l, k).unwrap() {
            let left = m.shifted_raw(top, [l as i64, 0], k as i64, -mm);
            out.add_term(left, right, q(coeff(a, b, l, k, mm, &mh)));
        }
    }
    out
}

/// (T ⊗ T) ∘ i^{λ̂}_{e_{4−j}+e_{4−i}} ∘ T, the defining construction.
pub fn inject_neg_via_dual(lambda: &Dominant, i: usize, j: usize, m: &Pattern) -> Result<TensorElement> {
    let spec = InjectorSpec::new(*lambda, Direction::Neg(i, j));
    let t = spec.target()?;
    check_source(m, &t)?;
    let lh = Dominant { l: [-lambda.l[2], -lambda.l[1], -lambda.l[0]] };
    let img = inject_pos(&lh, 4 - j, 4 - i, &dual(m), Mode::Closed)?;
    let mut out = TensorElement::zero(*lambda, Dominant { l: [0, 0, -2] });
    for ((a, b), c) in img.terms() {
        out.add_term(dual(a), dual(b), c.clone());
    }
    Ok(out)
}

/// Evaluate the injector described by `spec` on f(M).
pub fn inject(spec: &InjectorSpec, m: &Pattern, mode: Mode) -> Result<TensorElement> {
    match spec.direction {
        Direction::Vec(i) => inject_vec(&spec.source, i, m),
        Direction::Pos(i, j) => inject_pos(&spec.source, i, j, m, mode),
        Direction::Neg(i, j) => inject_neg(&spec.source, i, j, m),
    }
}

/// A failure of E∘i = i∘E on a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub generator: String,
    pub pattern: Pattern,
}

/// Result of an equivariance sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub spec: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check E∘i = i∘E for the Cartan and simple root generators on every basis pattern.
pub fn verify_equivariance(spec: &InjectorSpec) -> Result<EquivarianceReport> {
    verify_equivariance_with(spec, &|m: &Pattern| inject(spec, m, Mode::Closed))
}

/// [`verify_equivariance`] for an arbitrary candidate map.
pub fn verify_equivariance_with(
    spec: &InjectorSpec,
    map: &dyn Fn(&Pattern) -> Result<TensorElement>,
) -> Result<EquivarianceReport> {
    let t = spec.target()?;
    let pats = enumerate(&t);
    let images: BTreeMap<Pattern, TensorElement> =
        pats.iter().map(|p| Ok((*p, map(p)?))).collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut checked = 0;
    for g in Gen::spanning() {
        for p in &pats {
            checked += 1;
            let lhs = images[p].act(g);
            let mut rhs = TensorElement::zero(spec.source, spec.direction.right_type());
            for (p2, c) in act(g, &ModuleElement::basis(p)).terms() {
                rhs.add_scaled(&images[p2], c);
            }
            if lhs != rhs {
                violations.push(Violation { generator: g.to_string(), pattern: *p });
            }
        }
    }
    Ok(EquivarianceReport { spec: spec.to_string(), checked, violations })
}

/// Matrix of an injector: rows (left, right) pairs, columns source patterns.
pub fn injector_matrix(spec: &InjectorSpec) -> Result<QMat> {
    let t = spec.target()?;
    let src = enumerate(&t);
    let left = enumerate(&spec.source);
    let right = enumerate(&spec.direction.right_type());
    let mut m = QMat::zeros(left.len() * right.len(), src.len());
    let bl = Basis::new(left);
    let br = Basis::new(right);
    for (c, p) in src.iter().enumerate() {
        for ((a, b), v) in inject(spec, p, Mode::Closed)?.terms() {
            let r = bl.pos(a).unwrap() * br.len() + br.pos(b).unwrap();
            m.set(r, c, v.clone());
        }
    }
    Ok(m)
}

/// Constant k_{ij}(M) of the contiguous-relation lemma.
pub fn k_const(i: usize, j: usize, m: &Pattern) -> i64 {
    match (i, j) {
        (1, 1) => 2 * m.m13 - 2 * m.m11,
        (1, 2) => -2 * m.m11 + m.m13 + m.m23 - 2,
        (2, 2) => -2 * m.m11 + 2 * m.m23 - 2,
        (1, 3) => -2 * m.m11 + m.m13 + m.m33 - 3,
        (3, 3) => -2 * m.m11 + 2 * m.m33 - 4,
        (2, 3) => -2 * m.m11 + m.m23 + m.m33 - 4,
        _ => panic!("k_const: bad index pair ({i},{j})"),
    }
}

/// Both sides of the relation k·C(N;2,2,m) = (4-term combination), with
/// N = M(e_i+e_j; 0,2; 2)[m] and M of type λ.
pub fn rel_clebsch_sides(i: usize, j: usize, mm: i64, m: &Pattern) -> (i64, i64) {
    let mut top = [0; 3];
    top[i - 1] += 1;
    top[j - 1] += 1;
    let n = m.shifted_raw(top, [0, 2], 2, mm);
    let lhs = k_const(i, j, m) * pos_coeff(i, j, 2, 2, mm, &n);
    let rhs = (m.m12 - m.m23 + 1) * m.chi_minus(-1) * pos_coeff(i, j, 2, 1, mm - 1, &n)
        + (m.m11 - m.m22 + 1) * pos_coeff(i, j, 2, 1, mm, &n)
        + (m.c1() + 1) * pos_coeff(i, j, 1, 1, mm - 1, &n)
        + (m.m33 - m.m22 - 1) * pos_coeff(i, j, 1, 1, mm, &n);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(m13: i64, m23: i64, m33: i64, m12: i64, m22: i64, m11: i64) -> Pattern {
        Pattern::new([m13, m23, m33], [m12, m22], m11)
    }

    fn dom(a: i64, b: i64, c: i64) -> Dominant {
        Dominant::new(a, b, c).unwrap()
    }

    #[test]
    fn inject_vec_examples() {
        let e1 = dom(1, 0, 0);
        let t = inject_vec(&e1, 1, &pm(2, 0, 0, 2, 0, 2)).unwrap();
        let mut want = TensorElement::zero(e1, e1);
        want.add_term(pm(1, 0, 0, 1, 0, 1), pm(1, 0, 0, 1, 0, 1), q(-6));
        assert_eq!(t, want);

        let t = inject_vec(&e1, 2, &pm(1, 1, 0, 1, 1, 1)).unwrap();
        let mut want = TensorElement::zero(e1, e1);
        want.add_term(pm(1, 0, 0, 1, 0, 0), pm(1, 0, 0, 1, 0, 1), q(1));
        want.add_term(pm(1, 0, 0, 1, 0, 1), pm(1, 0, 0, 1, 0, 0), q(-1));
        assert_eq!(t, want);

        let t = inject_vec(&dom(0, 0, 0), 1, &pm(1, 0, 0, 1, 0, 1)).unwrap();
        assert_eq!(t.len(), 1);
        assert!(!t.coeff(&Pattern::constant(0), &pm(1, 0, 0, 1, 0, 1)).is_zero());
    }

    #[test]
    fn lemma_images_for_e1() {
        let e1 = dom(1, 0, 0);
        let f = |a: i64, b: i64| pm(1, 0, 0, a, 0, b);
        let sym = |x: Pattern, y: Pattern, c: i64| {
            let mut t = TensorElement::zero(e1, e1);
            t.add_term(x, y, q(c));
            t.add_term(y, x, q(c));
            t
        };
        assert_eq!(inject_vec(&e1, 1, &pm(2, 0, 0, 2, 0, 1)).unwrap(), sym(f(1, 1), f(1, 0), -3));
        assert_eq!(inject_vec(&e1, 1, &pm(2, 0, 0, 1, 0, 1)).unwrap(), sym(f(1, 1), f(0, 0), -3));
        assert_eq!(inject_vec(&e1, 1, &pm(2, 0, 0, 1, 0, 0)).unwrap(), sym(f(1, 0), f(0, 0), -3));
        let mut t = TensorElement::zero(e1, e1);
        t.add_term(f(0, 0), f(0, 0), q(-6));
        assert_eq!(inject_vec(&e1, 1, &pm(2, 0, 0, 0, 0, 0)).unwrap(), t);
        let mut t = TensorElement::zero(e1, e1);
        t.add_term(f(0, 0), f(1, 0), q(1));
        t.add_term(f(1, 0), f(0, 0), q(-1));
        assert_eq!(inject_vec(&e1, 2, &pm(1, 1, 0, 1, 0, 0)).unwrap(), t);
    }

    #[test]
    fn projector_examples() {
        let e1 = dom(1, 0, 0);
        let f = |a: i64, b: i64| pm(1, 0, 0, a, 0, b);
        let mut t = TensorElement::zero(e1, e1);
        t.add_term(f(1, 1), f(1, 1), q(1));
        assert_eq!(project_e1(&t).unwrap(), ModuleElement::basis(&pm(2, 0, 0, 2, 0, 2)));
        let mut t1 = TensorElement::zero(e1, e1);
        t1.add_term(f(1, 1), f(1, 0), q(1));
        let mut t2 = TensorElement::zero(e1, e1);
        t2.add_term(f(1, 0), f(1, 1), q(1));
        assert_eq!(project_e1(&t1).unwrap(), project_e1(&t2).unwrap());
        assert_eq!(project_e1(&t1).unwrap(), ModuleElement::basis(&pm(2, 0, 0, 2, 0, 1)));
        assert!(project_e1(&TensorElement::zero(dom(2, 0, 0), e1)).is_err());
    }

    #[test]
    fn projector_constants() {
        let e1 = dom(1, 0, 0);
        for p in enumerate(&dom(2, 0, 0)) {
            let img = project_e1(&inject_vec(&e1, 1, &p).unwrap()).unwrap();
            let mut want = ModuleElement::zero(dom(2, 0, 0));
            want.add_term(p, q(-6));
            assert_eq!(img, want);
        }
        for p in enumerate(&dom(1, 1, 0)) {
            assert!(project_e1(&inject_vec(&e1, 2, &p).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn absent_component_errors() {
        let z = dom(0, 0, 0);
        assert!(matches!(inject_vec(&z, 2, &pm(0, 1, 0, 0, 0, 0)), Err(Error::ComponentAbsent(_))));
        assert!(matches!(
            verify_equivariance(&InjectorSpec::new(z, Direction::Pos(2, 3))),
            Err(Error::ComponentAbsent(_))
        ));
    }

    #[test]
    fn equivariance_small() {
        for lam in Dominant::all_with_spread(2, 0) {
            for d in Direction::all() {
                let spec = InjectorSpec::new(lam, d);
                if spec.target().is_err() {
                    continue;
                }
                let r = verify_equivariance(&spec).unwrap();
                assert!(r.passed(), "{}: {:?}", r.spec, r.violations);
            }
        }
    }

    #[test]
    fn mutation_is_detected() {
        let lam = dom(2, 1, 0);
        let spec = InjectorSpec::new(lam, Direction::Pos(1, 2));
        let bumped = |i: usize, j: usize, l: usize, k: usize, mm: i64, m: &Pattern| {
            pos_coeff(i, j, l, k, mm, m) + ((l, k, mm) == (2, 1, 1)) as i64
        };
        let r = verify_equivariance_with(&spec, &|m: &Pattern| Ok(inject_pos_with(&lam, 1, 2, m, &bumped))).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn closed_equals_formal_composition() {
        for &(i, j) in &crate::glmodule::PAIRS {
            for lam in Dominant::all_with_spread(3, -1) {
                for m in enumerate(&lam) {
                    for (l, k) in LK {
                        for mm in 0..=pos_bound(i, j, l, k).unwrap() {
                            assert_eq!(pos_coeff(i, j, l, k, mm, &m), pos_coeff_composed(i, j, l, k, mm, &m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composed_mode_matches_closed() {
        for lam in Dominant::all_with_spread(3, 0) {
            for &(i, j) in &crate::glmodule::PAIRS {
                let mut ej = [0; 3];
                ej[j - 1] = 1;
                let Ok(t) = lam.plus(Direction::Pos(i, j).shift()) else { continue };
                if lam.plus(ej).is_err() {
                    continue;
                }
                for m in enumerate(&t) {
                    assert_eq!(
                        inject_pos(&lam, i, j, &m, Mode::Closed).unwrap(),
                        inject_pos(&lam, i, j, &m, Mode::Composed).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn printed_13_cell_breaks_equivariance() {
        let lam = dom(2, 2, 0);
        let spec = InjectorSpec::new(lam, Direction::Pos(1, 3));
        let printed = |i: usize, j: usize, l: usize, k: usize, mm: i64, m: &Pattern| {
            if (i, j, l, k, mm) == (1, 3, 1, 0, 0) {
                -(m.m13 - m.m12) * (2 * m.m22 - m.m13 - m.m23 - 1)
            } else {
                pos_coeff(i, j, l, k, mm, m)
            }
        };
        let r = verify_equivariance_with(&spec, &|m: &Pattern| Ok(inject_pos_with(&lam, 1, 3, m, &printed))).unwrap();
        assert!(!r.passed());
        assert!(verify_equivariance(&spec).unwrap().passed());
    }

    #[test]
    fn contiguous_relation_identity() {
        for &(i, j) in &crate::glmodule::PAIRS {
            for lam in Dominant::all_with_spread(4, -2) {
                for m in enumerate(&lam) {
                    for mm in -1..=5 {
                        let (a, b) = rel_clebsch_sides(i, j, mm, &m);
                        assert_eq!(a, b, "({i},{j}) m={mm} M={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn formula3_leading() {
        for lam in Dominant::all_with_spread(3, -1) {
            if let Ok(t) = lam.plus([0, 0, 2]) {
                for m in enumerate(&t) {
                    assert_eq!(pos_coeff(3, 3, 2, 2, 0, &m), 1);
                }
            }
        }
    }

    #[test]
    fn trivial_source_rank() {
        let z = dom(0, 0, 0);
        let m = injector_matrix(&InjectorSpec::new(z, Direction::Pos(1, 1))).unwrap();
        assert_eq!(m.rank(), 6);
        let m = injector_matrix(&InjectorSpec::new(z, Direction::Neg(3, 3))).unwrap();
        assert_eq!(m.rank(), 6);
    }

    #[test]
    fn neg_matches_dual_construction() {
        for lam in Dominant::all_with_spread(3, -1) {
            for &(i, j) in &crate::glmodule::PAIRS {
                let spec = InjectorSpec::new(lam, Direction::Neg(i, j));
                let Ok(t) = spec.target() else { continue };
                for m in enumerate(&t) {
                    assert_eq!(inject_neg(&lam, i, j, &m).unwrap(), inject_neg_via_dual(&lam, i, j, &m).unwrap());
                }
            }
        }
    }

    #[test]
    fn direction_parse() {
        assert_eq!("e2".parse::<Direction>().unwrap(), Direction::Vec(2));
        assert_eq!("+13".parse::<Direction>().unwrap(), Direction::Pos(1, 3));
        assert_eq!("-22".parse::<Direction>().unwrap(), Direction::Neg(2, 2));
        assert!("+31".parse::<Direction>().is_err());
    }
}
