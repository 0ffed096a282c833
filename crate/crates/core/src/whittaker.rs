//! Radial reduction of normal-ordered U(g) elements to Euler-Weyl operators
//! on A-radial Whittaker functions, eigenvalues for peripheral K-types and
//! the resulting holonomic systems.

use crate::arith::{q, qf, ChiValue, GaussianRational as G, NuPoly, Rational};
use crate::contiguous::{rmatrix, RMatrix};
use crate::error::{Error, Result};
use crate::glmodule::Sign;
use crate::gtpattern::{Dominant, SigmaChar};
use crate::uea::{self, Root, UeaElement};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Rank of the systems, cited from the literature and never computed.
pub const CITED_RANK: u32 = 48;

/// Non-degenerate unipotent character ξ given by c12, c23, c3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentCharacter {
    pub c12: Rational,
    pub c23: Rational,
    pub c3: Rational,
}

impl UnipotentCharacter {
    pub fn new(c12: Rational, c23: Rational, c3: Rational) -> Result<Self> {
        if c12.is_zero() || c23.is_zero() || c3.is_zero() {
            return Err(Error::Invalid("degenerate character: all of c12, c23, c3 must be nonzero".into()));
        }
        Ok(Self { c12, c23, c3 })
    }
}

type Key = ([u32; 3], [u32; 3]);

/// Operator Σ c z^a θ^b with θ_i = z_i d/dz_i written to the right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylOp {
    terms: BTreeMap<Key, G>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylTermJson {
    pub coeff: G,
    pub xdeg: [u32; 3],
    pub thetadeg: [u32; 3],
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

impl WeylOp {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn constant(c: G) -> Self {
        let mut w = Self::zero();
        w.add_term(([0; 3], [0; 3]), c);
        w
    }
    pub fn int(n: i64) -> Self {
        Self::constant(G::int(n))
    }
    pub fn one() -> Self {
        Self::int(1)
    }
    /// Coordinate z_i (1-based).
    pub fn z(i: usize) -> Self {
        let mut a = [0; 3];
        a[i - 1] = 1;
        let mut w = Self::zero();
        w.add_term((a, [0; 3]), G::one());
        w
    }
    /// Euler operator θ_i (1-based).
    pub fn theta(i: usize) -> Self {
        let mut b = [0; 3];
        b[i - 1] = 1;
        let mut w = Self::zero();
        w.add_term(([0; 3], b), G::one());
        w
    }
    pub fn add_term(&mut self, k: Key, c: G) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(G::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn scale(&self, c: &G) -> Self {
        let mut w = Self::zero();
        for (k, v) in &self.terms {
            w.add_term(*k, v * c);
        }
        w
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Key, &G)> {
        self.terms.iter()
    }
    pub fn coeff(&self, xdeg: [u32; 3], thetadeg: [u32; 3]) -> G {
        self.terms.get(&(xdeg, thetadeg)).cloned().unwrap_or_else(G::zero)
    }

    /// Apply to a polynomial Σ c z^a, exactly.
    pub fn apply(&self, f: &BTreeMap<[u32; 3], G>) -> BTreeMap<[u32; 3], G> {
        let mut out: BTreeMap<[u32; 3], G> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for (e, v) in f {
                let mut k = v * c;
                for i in 0..3 {
                    k = k.scale(&q(e[i] as i64).pow(b[i] as i32));
                }
                if k.is_zero() {
                    continue;
                }
                let ne = [e[0] + a[0], e[1] + a[1], e[2] + a[2]];
                let slot = out.entry(ne).or_insert_with(G::zero);
                *slot += &k;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Terms sorted graded-lexicographically on (xdeg, thetadeg).
    pub fn json_terms(&self) -> Vec<WeylTermJson> {
        let mut v: Vec<WeylTermJson> = self
            .terms
            .iter()
            .map(|((a, b), c)| WeylTermJson { coeff: c.clone(), xdeg: *a, thetadeg: *b })
            .collect();
        v.sort_by_key(|t| {
            let deg: u32 = t.xdeg.iter().chain(&t.thetadeg).sum();
            (deg, t.xdeg, t.thetadeg)
        });
        v
    }

    pub fn to_latex(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .json_terms()
            .iter()
            .map(|t| {
                let mut s = format!("({})", t.coeff);
                for i in 0..3 {
                    match t.xdeg[i] {
                        0 => {}
                        1 => s.push_str(&format!("{var}_{}", i + 1)),
                        n => s.push_str(&format!("{var}_{}^{{{n}}}", i + 1)),
                    }
                }
                for i in 0..3 {
                    match t.thetadeg[i] {
                        0 => {}
                        1 => s.push_str(&format!("\\partial_{{{var}_{}}}", i + 1)),
                        n => s.push_str(&format!("\\partial_{{{var}_{}}}^{{{n}}}", i + 1)),
                    }
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, o: &WeylOp) -> WeylOp {
        let mut w = self.clone();
        for (k, v) in &o.terms {
            w.add_term(*k, v.clone());
        }
        w
    }
}
impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, o: &WeylOp) -> WeylOp {
        let mut w = self.clone();
        for (k, v) in &o.terms {
            w.add_term(*k, -v);
        }
        w
    }
}
impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        self.scale(&G::int(-1))
    }
}
impl Mul for &WeylOp {
    type Output = WeylOp;
    /// Uses θ_i z_i^c = z_i^c (θ_i + c).
    fn mul(self, o: &WeylOp) -> WeylOp {
        let mut w = WeylOp::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &o.terms {
                let mut shifted: Vec<([u32; 3], i64)> = vec![([0; 3], 1)];
                for i in 0..3 {
                    let mut next = Vec::new();
                    for (e, v) in &shifted {
                        for k in 0..=b[i] {
                            let coeff = binom(b[i], k) * (c[i] as i64).pow(b[i] - k);
                            if coeff != 0 {
                                let mut ne = *e;
                                ne[i] += k;
                                next.push((ne, v * coeff));
                            }
                        }
                    }
                    shifted = next;
                }
                let prod = c1 * c2;
                let za = [a[0] + c[0], a[1] + c[1], a[2] + c[2]];
                for (e, v) in shifted {
                    let th = [e[0] + d[0], e[1] + d[1], e[2] + d[2]];
                    w.add_term((za, th), prod.scale(&q(v)));
                }
            }
        }
        w
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_latex('z'))
    }
}

/// Coordinates on A: x for σ uniform, y otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coords {
    X,
    Y,
}

impl Coords {
    pub fn for_sigma(sigma: &SigmaChar) -> Self {
        if sigma.is_uniform() {
            Coords::X
        } else {
            Coords::Y
        }
    }
    pub fn var(&self) -> char {
        match self {
            Coords::X => 'x',
            Coords::Y => 'y',
        }
    }
}

/// Rewrite a y-coordinate operator in x-coordinates: y1 = 2√x1, y2 = 2√x2,
/// y3 = x3, so θ_{y1} = 2θ_{x1} and θ_{y2} = 2θ_{x2}.
pub fn y_to_x(w: &WeylOp) -> Result<WeylOp> {
    let mut out = WeylOp::zero();
    for ((a, b), c) in &w.terms {
        if a[0] % 2 == 1 || a[1] % 2 == 1 {
            return Err(Error::Invalid(format!(
                "odd power of sqrt(x) in x-coordinates: y-degree {a:?}; sigma and K-type do not match"
            )));
        }
        let p = a[0] + a[1] + b[0] + b[1];
        let c = c.scale(&q(2).pow(p as i32));
        out.add_term(([a[0] / 2, a[1] / 2, a[2]], *b), c);
    }
    Ok(out)
}

/// H_i as an Euler combination in y-coordinates.
pub fn h_in_y(i: usize) -> WeylOp {
    match i {
        1 => WeylOp::theta(1),
        2 => &WeylOp::theta(2) - &WeylOp::theta(1),
        3 => &WeylOp::theta(3).scale(&G::int(2)) - &WeylOp::theta(2),
        _ => panic!("H index in 1..=3"),
    }
}

/// Multiplier of E_α on radial functions in y-coordinates, or None on [n,n].
pub fn e_in_y(r: Root) -> Option<WeylOp> {
    match r {
        Root::Diff(1, 2) => Some(WeylOp::z(1).scale(&G::i())),
        Root::Diff(2, 3) => Some(WeylOp::z(2).scale(&G::i())),
        Root::Long(3) => Some(WeylOp::z(3).scale(&G::new(q(0), qf(1, 2)))),
        _ => None,
    }
}

/// Peripheral K-type families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KType {
    /// (l,l,l)
    Scalar,
    /// (l+1,l,l)
    Up,
    /// (l,l,l−1)
    Down,
}

impl KType {
    pub fn dominant(&self, l: i64) -> Dominant {
        let d = match self {
            KType::Scalar => Dominant::new(l, l, l),
            KType::Up => Dominant::new(l + 1, l, l),
            KType::Down => Dominant::new(l, l, l - 1),
        };
        d.expect("peripheral types are dominant")
    }
    pub fn dim(&self) -> usize {
        match self {
            KType::Scalar => 1,
            _ => 3,
        }
    }
    pub fn label(&self) -> &'static str {
        match self {
            KType::Scalar => "lll",
            KType::Up => "l+1ll",
            KType::Down => "lll-1",
        }
    }
    /// Whether the type is a multiplicity-one K-type of π_σ.
    pub fn fits(&self, sigma: &SigmaChar) -> bool {
        (*self == KType::Scalar) == sigma.is_uniform()
    }
}

impl std::str::FromStr for KType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lll" => Ok(KType::Scalar),
            "l+1ll" => Ok(KType::Up),
            "lll-1" => Ok(KType::Down),
            _ => Err(Error::Invalid(format!("unknown K-type {s:?}; expected lll, l+1ll or lll-1"))),
        }
    }
}

/// κ(E_pq) on the K-type functions: entry [m][k] is the coefficient of φ_{m+1}
/// in κ(E_pq)φ_{k+1}.
pub fn k_table(ktype: KType, l: i64, p: usize, qq: usize) -> Vec<Vec<i64>> {
    let d = ktype.dim();
    let mut t = vec![vec![0; d]; d];
    match ktype {
        KType::Scalar => {
            if p == qq {
                t[0][0] = l;
            }
        }
        KType::Up => {
            if p == qq {
                for (i, row) in t.iter_mut().enumerate() {
                    row[i] = l + (i + 1 == p) as i64;
                }
            } else {
                t[p - 1][qq - 1] = 1;
            }
        }
        KType::Down => {
            if p == qq {
                for (i, row) in t.iter_mut().enumerate() {
                    row[i] = l - (3 - i == p) as i64;
                }
            } else {
                let sign = if (p + qq + 1) % 2 == 0 { 1 } else { -1 };
                t[3 - qq][3 - p] = sign;
            }
        }
    }
    t
}

fn int_matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

/// Operator matrix W with u φ_k = Σ_m W[m][k] φ_m on the A-radial parts.
pub fn radial_reduce(u: &UeaElement, ktype: KType, l: i64, coords: Coords) -> Result<Vec<Vec<WeylOp>>> {
    let d = ktype.dim();
    let mut w = vec![vec![WeylOp::zero(); d]; d];
    let identity: Vec<Vec<i64>> = (0..d).map(|r| (0..d).map(|c| (r == c) as i64).collect()).collect();
    for (word, c) in u.terms() {
        let mut op = WeylOp::one();
        let mut kmat = identity.clone();
        let mut killed = false;
        for letter in &word {
            let k = letter.0 as usize;
            if let Some(r) = letter.as_root() {
                match e_in_y(r) {
                    Some(m) => op = &op * &m,
                    None => {
                        killed = true;
                        break;
                    }
                }
            } else if k <= 11 {
                op = &op * &h_in_y(k - 8);
            } else {
                let (p, qq) = uea::KAPPA_ORDER[k - 12];
                kmat = int_matmul(&kmat, &k_table(ktype, l, p, qq));
            }
        }
        if killed {
            continue;
        }
        for (m, row) in w.iter_mut().enumerate() {
            for (kk, slot) in row.iter_mut().enumerate() {
                if kmat[m][kk] != 0 {
                    *slot = &*slot + &op.scale(&(c * &G::int(kmat[m][kk])));
                }
            }
        }
    }
    if coords == Coords::X {
        for row in w.iter_mut() {
            for slot in row.iter_mut() {
                *slot = y_to_x(slot)?;
            }
        }
    }
    Ok(w)
}

/// Which eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChiKind {
    C2,
    C4,
    C6,
    /// χ̃_2 of the D-relations.
    Tilde,
}

impl std::str::FromStr for ChiKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2" | "C2" => Ok(ChiKind::C2),
            "4" | "C4" => Ok(ChiKind::C4),
            "6" | "C6" => Ok(ChiKind::C6),
            "tilde" => Ok(ChiKind::Tilde),
            _ => Err(Error::Invalid(format!("unknown eigenvalue {s:?}; expected 2, 4, 6 or tilde"))),
        }
    }
}

fn check_fit(sigma: &SigmaChar, ktype: KType) -> Result<()> {
    if !ktype.fits(sigma) {
        return Err(Error::Invalid(format!("K-type {} is not peripheral for sigma {sigma}", ktype.label())));
    }
    Ok(())
}

fn check_parity(sigma: &SigmaChar, l: i64) -> Result<()> {
    if l.rem_euclid(2) != sigma.epsilon() {
        return Err(Error::ParityMismatch(format!("l = {l} but epsilon_sigma = {} for sigma {sigma}", sigma.epsilon())));
    }
    Ok(())
}

/// Closed-form eigenvalue as a polynomial in (ν1, ν2, ν3, l).
pub fn chi(sigma: &SigmaChar, ktype: KType, kind: ChiKind) -> Result<ChiValue> {
    check_fit(sigma, ktype)?;
    let l = ChiValue::var(3);
    let nu2 = |k: usize| ChiValue::var(k - 1).pow(2);
    // ν_k² − (l − s)² + t·δ_{σ;k}, with t affine in l.
    let f = |k: usize, s: i64, t: &ChiValue| {
        let shift = &l - &ChiValue::int(s);
        let d = sigma.delta(k);
        &(&nu2(k) - &shift.pow(2)) + &t.scale(&q(d))
    };
    let lin = |a: i64, b: i64| &l.scale(&q(a)) + &ChiValue::int(b);
    let zero = ChiValue::zero();
    let (t4, t6, c2_shift) = match ktype {
        KType::Scalar => (zero.clone(), zero.clone(), zero.clone()),
        KType::Up => (lin(-2, 1), lin(-2, 1), lin(-2, 1)),
        KType::Down => (lin(2, -5), lin(2, -3), lin(2, -7)),
    };
    let v = match kind {
        ChiKind::C2 => &(&(&f(1, 3, &zero) + &f(2, 2, &zero)) + &f(3, 1, &zero)) + &c2_shift,
        ChiKind::C4 => {
            let a1 = f(1, 2, &t4);
            let a2 = f(2, 2, &t4);
            let b2 = f(2, 1, &t4);
            let a3 = f(3, 1, &t4);
            &(&(&a1 * &a2) + &(&a1 * &a3)) + &(&b2 * &a3)
        }
        ChiKind::C6 => &(&f(1, 1, &t6) * &f(2, 1, &t6)) * &f(3, 1, &t6),
        ChiKind::Tilde => {
            if ktype == KType::Scalar {
                return Err(Error::Invalid("the tilde eigenvalue exists only for 3-dimensional K-types".into()));
            }
            let mut s = &l.pow(2) * &ChiValue::int(-1);
            for k in 1..=3 {
                s = &s + &nu2(k).scale(&q(sigma.delta(k)));
            }
            s
        }
    };
    Ok(v)
}

/// Substitute an integer l into a ChiValue.
pub fn chi_at(v: &ChiValue, l: i64) -> NuPoly {
    let mut p = NuPoly::zero();
    for (e, c) in v.terms() {
        p.add_term([e[0], e[1], e[2]], c * q(l).pow(e[3] as i32));
    }
    p
}

type Step = ([i64; 3], Sign, usize, usize);

/// Printed factorizations of C_{2i} (and the D-relations) through R-matrices:
/// (overall scale, [(weight, chain)]) with chains read left to right.
fn factorization(ktype: KType, kind: ChiKind) -> Option<(Rational, Vec<(i64, Vec<Step>)>)> {
    use Sign::{Minus as M, Plus as P};
    let v = match (ktype, kind) {
        (KType::Scalar, ChiKind::C2) => (qf(1, 12), vec![(1, vec![([0, 0, -2], P, 3, 3), ([0, 0, 0], M, 3, 3)])]),
        (KType::Scalar, ChiKind::C4) => (
            qf(1, 192),
            vec![(
                1,
                vec![([0, 0, -2], P, 3, 3), ([0, -2, -2], P, 2, 2), ([0, 0, -2], M, 2, 2), ([0, 0, 0], M, 3, 3)],
            )],
        ),
        (KType::Scalar, ChiKind::C6) => (
            qf(1, 20736),
            vec![(
                1,
                vec![
                    ([0, 0, -2], P, 3, 3),
                    ([0, -2, -2], P, 2, 2),
                    ([-2, -2, -2], P, 1, 1),
                    ([0, -2, -2], M, 1, 1),
                    ([0, 0, -2], M, 2, 2),
                    ([0, 0, 0], M, 3, 3),
                ],
            )],
        ),
        (KType::Up, ChiKind::C2) => (
            qf(1, 24),
            vec![
                (1, vec![([1, 0, -2], P, 3, 3), ([1, 0, 0], M, 3, 3)]),
                (3, vec![([0, 0, -1], P, 1, 3), ([1, 0, 0], M, 1, 3)]),
            ],
        ),
        (KType::Up, ChiKind::C4) => (
            qf(1, 1152),
            vec![
                (
                    1,
                    vec![([1, 0, -2], P, 3, 3), ([1, -2, -2], P, 2, 2), ([1, 0, -2], M, 2, 2), ([1, 0, 0], M, 3, 3)],
                ),
                (
                    -64,
                    vec![([0, 0, -1], P, 1, 3), ([0, -1, -2], P, 2, 3), ([0, 0, -1], M, 2, 3), ([1, 0, 0], M, 1, 3)],
                ),
            ],
        ),
        (KType::Up, ChiKind::C6) => (
            qf(1, 144),
            vec![(
                1,
                vec![
                    ([0, 0, -1], P, 1, 3),
                    ([0, -1, -2], P, 2, 3),
                    ([-1, -2, -2], P, 1, 2),
                    ([0, -1, -2], M, 1, 2),
                    ([0, 0, -1], M, 2, 3),
                    ([1, 0, 0], M, 1, 3),
                ],
            )],
        ),
        (KType::Up, ChiKind::Tilde) => (qf(1, 4), vec![(1, vec![([0, 0, -1], P, 1, 3), ([1, 0, 0], M, 1, 3)])]),
        (KType::Down, ChiKind::C2) => (
            qf(1, 72),
            vec![
                (1, vec![([0, 0, -3], P, 3, 3), ([0, 0, -1], M, 3, 3)]),
                (-16, vec![([0, -1, -2], P, 2, 3), ([0, 0, -1], M, 2, 3)]),
            ],
        ),
        (KType::Down, ChiKind::C4) => (
            qf(1, 72),
            vec![
                (
                    1,
                    vec![([0, -1, -2], P, 2, 3), ([-1, -2, -2], P, 1, 2), ([0, -1, -2], M, 1, 2), ([0, 0, -1], M, 2, 3)],
                ),
                (
                    3,
                    vec![([0, -1, -2], P, 2, 3), ([0, -2, -3], P, 2, 3), ([0, -1, -2], M, 2, 3), ([0, 0, -1], M, 2, 3)],
                ),
            ],
        ),
        (KType::Down, ChiKind::C6) => (
            qf(1, 144),
            vec![(
                1,
                vec![
                    ([0, -1, -2], P, 2, 3),
                    ([-1, -2, -2], P, 1, 2),
                    ([-2, -2, -3], P, 1, 3),
                    ([-1, -2, -2], M, 1, 3),
                    ([0, -1, -2], M, 1, 2),
                    ([0, 0, -1], M, 2, 3),
                ],
            )],
        ),
        (KType::Down, ChiKind::Tilde) => (qf(1, 4), vec![(1, vec![([1, 0, 0], M, 1, 3), ([0, 0, -1], P, 1, 3)])]),
        (KType::Scalar, ChiKind::Tilde) => return None,
    };
    Some(v)
}

/// Eigenvalue obtained by composing R-matrices along the printed factorization.
pub fn chi_oracle(sigma: &SigmaChar, ktype: KType, kind: ChiKind, l: i64) -> Result<NuPoly> {
    check_fit(sigma, ktype)?;
    check_parity(sigma, l)?;
    let (scale, chains) = factorization(ktype, kind)
        .ok_or_else(|| Error::Invalid("the tilde eigenvalue exists only for 3-dimensional K-types".into()))?;
    let mut total: Option<RMatrix> = None;
    for (weight, chain) in chains {
        let mut prod: Option<RMatrix> = None;
        for (off, sign, i, j) in chain {
            let lam = Dominant::new(l + off[0], l + off[1], l + off[2])?;
            let r = rmatrix(sigma, &lam, sign, i, j)?;
            prod = Some(match prod {
                None => r,
                Some(p) => p.mul(&r)?,
            });
        }
        let term = prod.expect("nonempty chain").scale(&q(weight));
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    let total = total.expect("nonempty factorization").scale(&scale);
    if total.rows.len() != 1 || total.cols.len() != 1 || total.rows != total.cols {
        return Err(Error::Verification(format!(
            "composition is {}x{}, not a scalar on the multiplicity-one block",
            total.rows.len(),
            total.cols.len()
        )));
    }
    Ok(total.entries[0][0].clone())
}

/// Σ_m ops[m] φ_m = Σ_m rhs[m] φ_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub ops: Vec<WeylOp>,
    pub rhs: Vec<ChiValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquationJson {
    pub name: String,
    pub ops: Vec<Vec<WeylTermJson>>,
    pub rhs: Vec<ChiValue>,
}

impl Equation {
    pub fn json(&self) -> EquationJson {
        EquationJson {
            name: self.name.clone(),
            ops: self.ops.iter().map(WeylOp::json_terms).collect(),
            rhs: self.rhs.clone(),
        }
    }
    pub fn to_latex(&self, var: char) -> String {
        let lhs: Vec<String> = self
            .ops
            .iter()
            .enumerate()
            .filter(|(_, o)| !o.is_zero())
            .map(|(m, o)| format!("\\{{{}\\}}\\phi_{}", o.to_latex(var), m + 1))
            .collect();
        let rhs: Vec<String> = self
            .rhs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("({c})\\phi_{}", m + 1))
            .collect();
        format!("{} = {}", lhs.join(" + "), if rhs.is_empty() { "0".into() } else { rhs.join(" + ") })
    }
}

/// Holonomic system for one (σ, l, K-type).
#[derive(Clone, Debug)]
pub struct RadialSystem {
    pub ktype: KType,
    pub sigma: SigmaChar,
    pub l: i64,
    pub coords: Coords,
    pub equations: Vec<Equation>,
    /// Scalar s with mechanical = s · printed, per equation.
    pub display_scalars: Vec<G>,
    pub rank_cited: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadialSystemJson {
    pub ktype: String,
    pub sigma: String,
    pub l: i64,
    pub coords: char,
    pub rank_cited: u32,
    pub display_scalars: Vec<G>,
    pub equations: Vec<EquationJson>,
}

impl RadialSystem {
    pub fn json(&self) -> RadialSystemJson {
        RadialSystemJson {
            ktype: self.ktype.label().into(),
            sigma: self.sigma.to_string(),
            l: self.l,
            coords: self.coords.var(),
            rank_cited: self.rank_cited,
            display_scalars: self.display_scalars.clone(),
            equations: self.equations.iter().map(Equation::json).collect(),
        }
    }
    pub fn to_latex(&self) -> String {
        let v = self.coords.var();
        self.equations
            .iter()
            .map(|e| format!("% {}\n{}", e.name, e.to_latex(v)))
            .collect::<Vec<_>>()
            .join("\n\n")
    }
}

fn cached_c(i: usize) -> &'static UeaElement {
    static C: [OnceLock<UeaElement>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    C[i - 1].get_or_init(|| uea::c_operator(i).reduce_mod_nn())
}

fn cached_d(first: Sign, j: usize, k: usize) -> UeaElement {
    uea::d_operator(first, j, k).reduce_mod_nn()
}

fn chi_rhs(sigma: &SigmaChar, ktype: KType, kind: ChiKind, l: i64, at: usize, sign: i64) -> Result<Vec<ChiValue>> {
    let v = chi(sigma, ktype, kind)?;
    let v = v.eval_partial(&[None, None, None, Some(q(l))]).scale(&q(sign));
    let mut rhs = vec![ChiValue::zero(); ktype.dim()];
    rhs[at] = v;
    Ok(rhs)
}

/// Equations obtained mechanically from the normal-ordered operators.
pub fn mechanical_system(sigma: &SigmaChar, l: i64, ktype: KType) -> Result<Vec<Equation>> {
    check_fit(sigma, ktype)?;
    check_parity(sigma, l)?;
    let coords = Coords::for_sigma(sigma);
    let d = ktype.dim();
    let kinds = [(1, ChiKind::C2), (2, ChiKind::C4), (3, ChiKind::C6)];
    let mut eqs = Vec::new();
    if ktype == KType::Scalar {
        for (i, kind) in kinds {
            let w = radial_reduce(cached_c(i), ktype, l, coords)?;
            eqs.push(Equation {
                name: format!("C{}", 2 * i),
                ops: vec![w[0][0].clone()],
                rhs: chi_rhs(sigma, ktype, kind, l, 0, 1)?,
            });
        }
        return Ok(eqs);
    }
    for i in 1..=3 {
        let mut ops = vec![WeylOp::zero(); d];
        let rhs = if ktype == KType::Up {
            for k in 1..=3 {
                let w = radial_reduce(&cached_d(Sign::Plus, i, k), ktype, l, coords)?;
                for (m, slot) in ops.iter_mut().enumerate() {
                    *slot = &*slot + &w[m][k - 1];
                }
            }
            chi_rhs(sigma, ktype, ChiKind::Tilde, l, i - 1, 1)?
        } else {
            for k in 1..=3 {
                let s = if k == 2 { 1 } else { -1 };
                let w = radial_reduce(&cached_d(Sign::Minus, i, 4 - k), ktype, l, coords)?;
                for (m, slot) in ops.iter_mut().enumerate() {
                    *slot = &*slot + &w[m][k - 1].scale(&G::int(s));
                }
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            chi_rhs(sigma, ktype, ChiKind::Tilde, l, 3 - i, sign)?
        };
        eqs.push(Equation { name: format!("D{i}"), ops, rhs });
    }
    for (c, kind) in kinds {
        let w = radial_reduce(cached_c(c), ktype, l, coords)?;
        for i in 1..=3 {
            eqs.push(Equation {
                name: format!("C{}[{i}]", 2 * c),
                ops: (0..d).map(|m| w[m][i - 1].clone()).collect(),
                rhs: chi_rhs(sigma, ktype, kind, l, i - 1, 1)?,
            });
        }
    }
    Ok(eqs)
}

/// Scalar s with `mech = s · disp`, or a description of the first difference.
pub fn compare_equations(mech: &Equation, disp: &Equation) -> std::result::Result<G, String> {
    if mech.ops.len() != disp.ops.len() {
        return Err(format!("{}: size {} vs {}", mech.name, mech.ops.len(), disp.ops.len()));
    }
    let pivot = mech
        .ops
        .iter()
        .enumerate()
        .find_map(|(m, o)| o.terms().next().map(|(k, c)| (m, *k, c.clone())));
    let s = match pivot {
        None => G::one(),
        Some((m, k, c)) => {
            let dc = disp.ops[m].coeff(k.0, k.1);
            if dc.is_zero() {
                return Err(format!("{}: phi_{} term {:?} missing from the printed operator", mech.name, m + 1, k));
            }
            &c * &dc.inv()
        }
    };
    for (m, (a, b)) in mech.ops.iter().zip(&disp.ops).enumerate() {
        let diff = a - &b.scale(&s);
        if !diff.is_zero() {
            return Err(format!("{}: phi_{} operators differ by {}", mech.name, m + 1, diff));
        }
    }
    if !s.im.is_zero() {
        return Err(format!("{}: non-real normalization {s}", mech.name));
    }
    for (m, (a, b)) in mech.rhs.iter().zip(&disp.rhs).enumerate() {
        if *a != b.scale(&s.re) {
            return Err(format!("{}: phi_{} right-hand sides differ: {a} vs {b}", mech.name, m + 1));
        }
    }
    Ok(s)
}

/// Mechanical system checked term by term against the printed system.
pub fn holonomic_system(sigma: &SigmaChar, l: i64, ktype: KType) -> Result<RadialSystem> {
    let equations = mechanical_system(sigma, l, ktype)?;
    let printed = display::system(sigma, l, ktype)?;
    let mut display_scalars = Vec::new();
    for (m, d) in equations.iter().zip(&printed) {
        display_scalars.push(compare_equations(m, d).map_err(Error::Verification)?);
    }
    Ok(RadialSystem {
        ktype,
        sigma: *sigma,
        l,
        coords: Coords::for_sigma(sigma),
        equations,
        display_scalars,
        rank_cited: CITED_RANK,
    })
}

/// Operator notation for transcribed displays.
///
/// Symbols: `d1..d3` Euler operators, `x1..x3`/`y1..y3` coordinates, `I` the
/// imaginary unit, `l`, `D1..D3` = δ_{k,i}, `f1..f3` the functions φ_k, `F` = φ_i,
/// and in y-coordinates `H1..H3`, `E12`, `E23`, `E33` (= E_{2e3}).
/// Juxtaposition multiplies; `{}` groups like `()`.
pub mod notation {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    enum Tok {
        Num(i64),
        Ident(String),
        Sym(char),
    }

    fn lex(s: &str) -> std::result::Result<Vec<Tok>, String> {
        let cs: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut out = Vec::new();
        while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = cs[st..i].iter().collect();
                out.push(Tok::Num(t.parse().map_err(|e| format!("{e}"))?));
            } else if c.is_ascii_alphabetic() {
                let st = i;
                i += 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            } else if "+-*^(){}".contains(c) {
                out.push(Tok::Sym(c));
                i += 1;
            } else {
                return Err(format!("unexpected character {c:?}"));
            }
        }
        Ok(out)
    }

    #[derive(Clone, Debug)]
    enum Val {
        Op(WeylOp),
        Vec(Vec<WeylOp>),
    }

    pub struct Ctx {
        pub l: i64,
        /// Own index i (1-based) for `F` and `D1..D3`.
        pub own: usize,
        pub dim: usize,
    }

    struct Parser<'a> {
        toks: Vec<Tok>,
        pos: usize,
        ctx: &'a Ctx,
    }

    fn add(a: Val, b: Val, sub: bool) -> std::result::Result<Val, String> {
        match (a, b) {
            (Val::Op(x), Val::Op(y)) => Ok(Val::Op(if sub { &x - &y } else { &x + &y })),
            (Val::Vec(x), Val::Vec(y)) => Ok(Val::Vec(
                x.iter().zip(&y).map(|(p, r)| if sub { p - r } else { p + r }).collect(),
            )),
            _ => Err("adding an operator to a function vector".into()),
        }
    }

    fn mul(a: Val, b: Val) -> std::result::Result<Val, String> {
        match (a, b) {
            (Val::Op(x), Val::Op(y)) => Ok(Val::Op(&x * &y)),
            (Val::Op(x), Val::Vec(y)) => Ok(Val::Vec(y.iter().map(|v| &x * v).collect())),
            _ => Err("function vector on the left of a product".into()),
        }
    }

    impl Parser<'_> {
        fn peek(&self) -> Option<&Tok> {
            self.toks.get(self.pos)
        }
        fn expr(&mut self) -> std::result::Result<Val, String> {
            let mut neg = false;
            if let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
                neg = *c == '-';
                self.pos += 1;
            }
            let mut v = self.term()?;
            if neg {
                v = mul(Val::Op(WeylOp::int(-1)), v)?;
            }
            while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
                let sub = *c == '-';
                self.pos += 1;
                let t = self.term()?;
                v = add(v, t, sub)?;
            }
            Ok(v)
        }
        fn term(&mut self) -> std::result::Result<Val, String> {
            let mut v = self.factor()?;
            loop {
                match self.peek() {
                    Some(Tok::Sym('*')) => {
                        self.pos += 1;
                    }
                    Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('{')) => {}
                    _ => return Ok(v),
                }
                let f = self.factor()?;
                v = mul(v, f)?;
            }
        }
        fn factor(&mut self) -> std::result::Result<Val, String> {
            let a = self.atom()?;
            if let Some(Tok::Sym('^')) = self.peek() {
                self.pos += 1;
                let Some(Tok::Num(n)) = self.peek().cloned() else {
                    return Err("exponent must be a number".into());
                };
                self.pos += 1;
                let Val::Op(x) = a else {
                    return Err("power of a function vector".into());
                };
                let mut p = WeylOp::one();
                for _ in 0..n {
                    p = &p * &x;
                }
                return Ok(Val::Op(p));
            }
            Ok(a)
        }
        fn atom(&mut self) -> std::result::Result<Val, String> {
            let t = self.peek().cloned().ok_or("unexpected end of input")?;
            self.pos += 1;
            match t {
                Tok::Num(n) => Ok(Val::Op(WeylOp::int(n))),
                Tok::Sym(open @ ('(' | '{')) => {
                    let v = self.expr()?;
                    let close = if open == '(' { ')' } else { '}' };
                    if self.peek() != Some(&Tok::Sym(close)) {
                        return Err(format!("expected {close:?} at token {}", self.pos));
                    }
                    self.pos += 1;
                    Ok(v)
                }
                Tok::Sym(c) => Err(format!("unexpected {c:?} at token {}", self.pos - 1)),
                Tok::Ident(id) => self.ident(&id),
            }
        }
        fn ident(&self, id: &str) -> std::result::Result<Val, String> {
            let idx = |s: &str| s[1..].parse::<usize>().ok().filter(|k| (1..=3).contains(k));
            let unit = |k: usize| {
                let mut v = vec![WeylOp::zero(); self.ctx.dim];
                if k > self.ctx.dim {
                    return Err(format!("phi_{k} on a {}-dimensional K-type", self.ctx.dim));
                }
                v[k - 1] = WeylOp::one();
                Ok(Val::Vec(v))
            };
            let op = |w: WeylOp| Ok(Val::Op(w));
            match id {
                "I" => op(WeylOp::constant(G::i())),
                "l" => op(WeylOp::int(self.ctx.l)),
                "F" => unit(self.ctx.own),
                "E12" => op(e_in_y(Root::Diff(1, 2)).unwrap()),
                "E23" => op(e_in_y(Root::Diff(2, 3)).unwrap()),
                "E33" => op(e_in_y(Root::Long(3)).unwrap()),
                _ => {
                    let k = idx(id).ok_or_else(|| format!("unknown symbol {id:?}"))?;
                    match &id[..1] {
                        "d" => op(WeylOp::theta(k)),
                        "x" | "y" => op(WeylOp::z(k)),
                        "D" => op(WeylOp::int((k == self.ctx.own) as i64)),
                        "f" => unit(k),
                        "H" => op(h_in_y(k)),
                        _ => Err(format!("unknown symbol {id:?}")),
                    }
                }
            }
        }
    }

    /// Parse an expression that is linear in the functions φ_k.
    pub fn parse(s: &str, ctx: &Ctx) -> std::result::Result<Vec<WeylOp>, String> {
        let mut p = Parser { toks: lex(s)?, pos: 0, ctx };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(format!("trailing input at token {}", p.pos));
        }
        match v {
            Val::Vec(v) => Ok(v),
            Val::Op(_) => Err("expression does not act on any function".into()),
        }
    }

    /// Parse a scalar operator expression.
    pub fn parse_op(s: &str, ctx: &Ctx) -> std::result::Result<WeylOp, String> {
        let mut p = Parser { toks: lex(s)?, pos: 0, ctx };
        match p.expr()? {
            Val::Op(w) if p.pos == p.toks.len() => Ok(w),
            _ => Err("not a scalar operator".into()),
        }
    }
}

/// Transcribed systems and radial operator listings.
pub mod display {
    use super::notation::{parse, Ctx};
    use super::*;

    pub const X_C2: &str = "{(2d1+l-6)(2d1-l) + (-2d1+2d2+l-4)(-2d1+2d2-l)
        + (-2d2+2d3+l-2-x3)(-2d2+2d3-l+x3) - 8x1 - 8x2}F";

    pub const X_C4: &str = "{ {(-2d1+2d2+l-3)(-2d2+2d3+l-2-x3) + 4x2}
          {(-2d1+2d2-l-1)(-2d2+2d3-l+x3) + 4x2}
        + (2d1+l-5)(-2d2+2d3+l-2-x3)(2d1-l-1)(-2d2+2d3-l+x3)
        + {(2d1+l-5)(-2d1+2d2+l-4) + 4x1}{(2d1-l-1)(-2d1+2d2-l) + 4x1}
        - 8x1(-2d2+2d3+l-2-x3)(-2d2+2d3-l+x3)
        + 32x1x2 - 8x2(2d1+l-5)(2d1-l-1) }F";

    pub const X_C6: &str = "{ {(2d1+l-4)(-2d1+2d2+l-3)(-2d2+2d3+l-2-x3)
           + 4x2(2d1+l-4) + 4x1(-2d2+2d3+l-2-x3)}
          {(2d1-l-2)(-2d1+2d2-l-1)(-2d2+2d3-l+x3)
           + 4x2(2d1-l-2) + 4x1(-2d2+2d3-l+x3)} }F";

    pub const UP_D: [&str; 3] = [
        "{(d1+l-3)(d1-l-3) - y1^2}f1 + I y1(d2-4)f2 - y1 y2 f3",
        "I y1(d2-6)f1 + {(-d1+d2+l-2)(-d1+d2-l-2) - y1^2 - y2^2}f2 + I y2(-d1+2d3-2+y3)f3",
        "-y1 y2 f1 + I y2(-d1+2d3-4-y3)f2 + {(-d2+2d3+l-1-y3)(-d2+2d3-l-1+y3) - y2^2}f3",
    ];

    pub const UP_C2: &str = "{(d1+l-6+D1)(d1-l-D1) + (-d1+d2+l-4+D2)(-d1+d2-l-D2)
        + (-d2+2d3+l-2+D3-y3)(-d2+2d3-l-D3+y3) - 2y1^2 - 2y2^2}F
        - 2D1{2f1 - I y1 f2} - 2D2{I y1 f1 + f2 - I y2 f3} - 2D3 I y2 f2";

    /// Printed δ_{3i} φ_1 term of the (l+1,l,l) C4 row; the constant is l−6,
    /// as forced by commutativity with the C2 and C6 rows.
    pub const UP_C4_PRINTED_TERM: &str = "-y1 y2(2d3+l-7-y3)f1";
    pub const UP_C4_CORRECTED_TERM: &str = "-y1 y2(2d3+l-6-y3)f1";

    pub const UP_C4: &str = "{ {(-d1+d2+l-3+D2)(-d2+2d3+l-2+D3-y3) + y2^2}
          {(-d1+d2-l-1-D2)(-d2+2d3-l-D3+y3) + y2^2}
        + (d1+l-5+D1)(-d2+2d3+l-2+D3-y3)(d1-l-1-D1)(-d2+2d3-l-D3+y3)
        + {(d1+l-5+D1)(-d1+d2+l-4+D2) + y1^2}{(d1-l-1-D1)(-d1+d2-l-D2) + y1^2}
        - 2y1^2(-d2+2d3+l-2+D3-y3)(-d2+2d3-l-D3+y3)
        + 2y1^2y2^2 - 2y2^2(d1+l-5+D1)(d1-l-1-D1) }F
      + 2D1{ -{(-d1+d2+l-4)(-d1+d2-l) + (-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - 3y1^2 - 2y2^2}f1
        + I y1{(-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - (d1-l-1)(-d1+d2-l-1) + d2 - 6 - y1^2 - y2^2}f2
        + y1 y2(2d3-l-6+y3)f3 }
      + 2D2{ -I y1{(-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - (d1+l-4)(-d1+d2+l-4) - (d2-4) - y1^2 - y2^2}f1
        - {(d1+l-5)(d1-l-1) - y1^2 - 2y2^2}f2
        + I y2{(d1+l-5)(d1-l-1) - (-d1+d2-l-1)(-d2+2d3-l-1+y3) - y1^2 - y2^2}f3 }
      + 2D3{ -y1 y2(2d3+l-6-y3)f1
        + I y2{(-d1+d2+l-2)(-d2+2d3+l-2-y3) - (d1+l-5)(d1-l-1) + y1^2 + y2^2}f2 }";

    pub const UP_C6: &str = "{ {(d1+l-4+D1)(-d1+d2+l-3+D2)(-d2+2d3+l-2+D3-y3)
           + y2^2(d1+l-4+D1) + y1^2(-d2+2d3+l-2+D3-y3)}
          {(d1-l-2-D1)(-d1+d2-l-1-D2)(-d2+2d3-l-D3+y3)
           + y2^2(d1-l-2-D1) + y1^2(-d2+2d3-l-D3+y3)} }F
      + 2D1{ 2y1^2{(-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - y2^2}f1
        - I y1{(-d2+2d3+l-2-y3)(d1-l-2)(-d1+d2-l-2)(-d2+2d3-l+y3)
           + y2^2(-d2+2d3+l-2-y3)(d1-l-2) + y1^2(-d2+2d3+l-2-y3)(-d2+2d3-l+y3)}f2
        - y1 y2{(d1-l-2)(-d1+d2-l-1)(-d2+2d3-l-1+y3) + y2^2(d1-l-2) + y1^2(-d2+2d3-l-1+y3)}f3 }
      + 2D2{ I y1{(d1+l-3)(-d1+d2+l-3)(-d2+2d3+l-2-y3)(-d2+2d3-l+y3)
           + y2^2(d1+l-3)(-d2+2d3-l-2+y3) + y1^2(-d2+2d3+l-2-y3)(-d2+2d3-l+y3)}f1
        + 2y2^2(d1+l-4)(d1-l-2)f2
        - I y2(d1+l-4){(d1-l-2)(-d1+d2-l-1)(-d2+2d3-l-1+y3) + y2^2(d1-l-2) + y1^2(-d2+2d3-l-1+y3)}f3 }
      + 2D3{ y1 y2{(d1+l-3)(-d1+d2+l-3)(-d2+2d3+l-2-y3) + y2^2(d1+l-3) + y1^2(-d2+2d3+l-2-y3)}f1
        + I y2{(d1+l-4)(-d1+d2+l-2)(-d2+2d3+l-2-y3) + y2^2(d1+l-4) + y1^2(-d2+2d3+l-2-y3)}(d1-l-2)f2 }";

    pub const DOWN_D: [&str; 3] = [
        "y1 y2 f1 + I y1(d2-4)f2 - {(d1-l-3)(d1+l-3) - y1^2}f3",
        "-I y2(-d1+2d3-2-y3)f1 + {(-d1+d2-l-2)(-d1+d2+l-2) - y1^2 - y2^2}f2 - I y1(d2-6)f3",
        "-{(-d2+2d3-l-1+y3)(-d2+2d3+l-1-y3) - y2^2}f1 + I y2(-d1+2d3-4+y3)f2 + y1 y2 f3",
    ];

    pub const DOWN_C2: &str = "{(d1+l-6-D3)(d1-l+D3) + (-d1+d2+l-4-D2)(-d1+d2-l+D2)
        + (-d2+2d3+l-2-D1-y3)(-d2+2d3-l+D1+y3) - 2y1^2 - 2y2^2}F
        - 2D1{2f1 - I y2 f2} - 2D2{I y2 f1 + f2 - I y1 f3} - 2D3 I y1 f2";

    pub const DOWN_C4: &str = "{ {(-d1+d2+l-3-D2)(-d2+2d3+l-2-D1-y3) + y2^2}
          {(-d1+d2-l-1+D2)(-d2+2d3-l+D1+y3) + y2^2}
        + (d1+l-5-D3)(-d2+2d3+l-2-D1-y3)(d1-l-1+D3)(-d2+2d3-l+D1+y3)
        + {(d1+l-5-D3)(-d1+d2+l-4-D2) + y1^2}{(d1-l-1+D3)(-d1+d2-l+D2) + y1^2}
        - 2y1^2(-d2+2d3+l-2-D1-y3)(-d2+2d3-l+D1+y3)
        - 2y2^2{(d1+l-5-D3)(d1-l-1+D3) - y1^2} }F
      + 2D1{ -{(d1+l-5)(d1-l-1) + (-d1+d2+l-3)(-d1+d2-l-1) - 2y1^2 - 3y2^2}f1
        + I y2{(d1+l-5)(d1-l-1) - (-d1+d2-l)(-d2+2d3-l+y3) - (-d1+2d3-2+y3) - y1^2 - y2^2}f2
        - y1 y2(2d3-l-3+y3)f3 }
      + 2D2{ -I y2{(d1+l-5)(d1-l-1) - (-d1+d2+l-3)(-d2+2d3+l-3-y3) - d1 + 2d3 - 4 - y3 - y1^2 - y2^2}f1
        - {(-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - 2y1^2 - y2^2}f2
        + I y1{-(d1-l)(-d1+d2-l) + (-d2+2d3+l-2-y3)(-d2+2d3-l+y3) - y1^2 - y2^2}f3 }
      + 2D3{ y1 y2(2d3+l-9-y3)f1
        + I y1{(d1+l-5)(-d1+d2+l-5) - (-d2+2d3+l-2-y3)(-d2+2d3-l+y3) + y1^2 + y2^2}f2 }";

    pub const DOWN_C6: &str = "{ {(d1+l-4-D3)(-d1+d2+l-3-D2)(-d2+2d3+l-2-D1-y3)
           + y2^2(d1+l-4-D3) + y1^2(-d2+2d3+l-2-D1-y3)}
          {(d1-l-2+D3)(-d1+d2-l-1+D2)(-d2+2d3-l+D1+y3)
           + y1^2(-d2+2d3-l+D1+y3) + y2^2(d1-l-2+D3)} }F
      + 2D1{ 2y2^2{(d1+l-4)(d1-l-2) - y1^2}f1
        - I y2{(d1+l-4)(d1-l-2)(-d1+d2-l)(-d2+2d3-l+y3)
           + y1^2(d1+l-4)(-d2+2d3-l+y3) + y2^2(d1+l-4)(d1-l-2)}f2
        + y1 y2{(d1-l-1)(-d1+d2-l-1)(-d2+2d3-l+y3) + y1^2(-d2+2d3-l+y3) + y2^2(d1-l-1)}f3 }
      + 2D2{ I y2{(d1+l-4)(-d1+d2+l-3)(-d2+2d3+l-3-y3)(d1-l-2)
           + y2^2(d1+l-4)(d1-l-2) + y1^2(-d2+2d3+l-3-y3)(d1-l)}f1
        + 2y1^2(-d2+2d3+l-2-y3)(-d2+2d3-l+y3)f2
        - I y1(-d2+2d3+l-2-y3){(d1-l-1)(-d1+d2-l-1)(-d2+2d3-l+y3)
           + y1^2(-d2+2d3-l+y3) + y2^2(d1-l-1)}f3 }
      + 2D3{ -y1 y2{(d1+l-4)(-d1+d2+l-3)(-d2+2d3+l-3-y3) + y2^2(d1+l-4) + y1^2(-d2+2d3+l-3-y3)}f1
        + I y1{(d1+l-4)(-d1+d2+l-4)(-d2+2d3+l-2-y3) + y2^2(d1+l-4)
           + y1^2(-d2+2d3+l-2-y3)}(-d2+2d3-l+y3)f2 }";

    /// Radial C2 and D-row listings in terms of H_i and E_α (y-coordinates).
    pub const HE_SCALAR_C2: &str = "{(H1+l-6)(H1-l) + (H2+l-4)(H2-l)
        + (H3+l-2+2I E33)(H3-l-2I E33) + 2E12^2 + 2E23^2}F";

    pub const HE_UP_D: [&str; 3] = [
        "{(H1+l-3)(H1-l-3) + E12^2}f1 + E12(H1+H2-4)f2 + E12 E23 f3",
        "E12(H1+H2-6)f1 + {(H2+l-2)(H2-l-2) + E12^2 + E23^2}f2 + E23(H2+H3-2-2I E33)f3",
        "E12 E23 f1 + E23(H2+H3-4+2I E33)f2 + {(H3+l-1+2I E33)(H3-l-1-2I E33) + E23^2}f3",
    ];

    pub const HE_UP_C2: &str = "{(H1+l-6+D1)(H1-l-D1) + (H2+l-4+D2)(H2-l-D2)
        + (H3+l-2+D3+2I E33)(H3-l-D3-2I E33) + 2E12^2 + 2E23^2}F
        - 2D1{2f1 - E12 f2} - 2D2{E12 f1 + f2 - E23 f3} - 2D3 E23 f2";

    pub const HE_DOWN_D: [&str; 3] = [
        "-E12 E23 f1 + E12(H1+H2-4)f2 - {(H1-l-3)(H1+l-3) + E12^2}f3",
        "-E23(H2+H3-2+2I E33)f1 + {(H2-l-2)(H2+l-2) + E12^2 + E23^2}f2 - E12(H1+H2-6)f3",
        "-{(H3-l-1-2I E33)(H3+l-1+2I E33) + E23^2}f1 + E23(H2+H3-4-2I E33)f2 - E12 E23 f3",
    ];

    pub const HE_DOWN_C2: &str = "{(H1+l-6-D3)(H1-l+D3) + (H2+l-4-D2)(H2-l+D2)
        + (H3+l-2-D1+2I E33)(H3-l+D1-2I E33) + 2E12^2 + 2E23^2}F
        - 2D1{2D1 f1 - E23 D1 f2} - 2D2{E23 f1 + f2 - E12 f3} - 2D3 E12 f2";

    fn eq(name: String, src: &str, ctx: &Ctx, rhs: Vec<ChiValue>) -> Result<Equation> {
        let ops = parse(src, ctx).map_err(|e| Error::Invalid(format!("{name}: {e}")))?;
        Ok(Equation { name, ops, rhs })
    }

    /// The printed system for (σ, l, K-type), in the same equation order as
    /// [`mechanical_system`].
    pub fn system(sigma: &SigmaChar, l: i64, ktype: KType) -> Result<Vec<Equation>> {
        check_fit(sigma, ktype)?;
        check_parity(sigma, l)?;
        let dim = ktype.dim();
        let mut out = Vec::new();
        let kinds = [ChiKind::C2, ChiKind::C4, ChiKind::C6];
        if ktype == KType::Scalar {
            let ctx = Ctx { l, own: 1, dim };
            for (src, kind, n) in [(X_C2, kinds[0], 2), (X_C4, kinds[1], 4), (X_C6, kinds[2], 6)] {
                out.push(eq(format!("C{n}"), src, &ctx, chi_rhs(sigma, ktype, kind, l, 0, 1)?)?);
            }
            return Ok(out);
        }
        let (d_rows, cs) = match ktype {
            KType::Up => (UP_D, [UP_C2, UP_C4, UP_C6]),
            _ => (DOWN_D, [DOWN_C2, DOWN_C4, DOWN_C6]),
        };
        for (i, src) in d_rows.iter().enumerate() {
            let ctx = Ctx { l, own: i + 1, dim };
            let rhs = if ktype == KType::Up {
                chi_rhs(sigma, ktype, ChiKind::Tilde, l, i, 1)?
            } else {
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                chi_rhs(sigma, ktype, ChiKind::Tilde, l, 2 - i, sign)?
            };
            out.push(eq(format!("D{}", i + 1), src, &ctx, rhs)?);
        }
        for (c, src) in cs.iter().enumerate() {
            for i in 1..=3 {
                let ctx = Ctx { l, own: i, dim };
                let rhs = chi_rhs(sigma, ktype, kinds[c], l, i - 1, 1)?;
                out.push(eq(format!("C{}[{i}]", 2 * c + 2), src, &ctx, rhs)?);
            }
        }
        Ok(out)
    }
}
