//! sp(3,C) in the Iwasawa basis and its universal enveloping algebra with
//! PBW normal ordering in the order n, a, k.

use crate::arith::GaussianRational as G;
use crate::glmodule::Sign;
use crate::sp6::{self, Mat6};
use serde::Serialize;
use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Positive restricted roots in PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// e_i − e_j
    Diff(usize, usize),
    /// e_i + e_j
    Sum(usize, usize),
    /// 2e_i
    Long(usize),
}

pub const POSITIVE_ROOTS: [Root; 9] = [
    Root::Diff(1, 2),
    Root::Diff(1, 3),
    Root::Diff(2, 3),
    Root::Sum(1, 2),
    Root::Sum(1, 3),
    Root::Sum(2, 3),
    Root::Long(1),
    Root::Long(2),
    Root::Long(3),
];

/// Roots whose root vectors span [n,n].
pub const NN_ROOTS: [Root; 6] = [
    Root::Diff(1, 3),
    Root::Sum(1, 2),
    Root::Sum(1, 3),
    Root::Sum(2, 3),
    Root::Long(1),
    Root::Long(2),
];

/// κ(E_pq) in PBW order.
pub const KAPPA_ORDER: [(usize, usize); 9] =
    [(1, 1), (2, 2), (3, 3), (1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)];

pub const DIM: usize = 21;

impl Root {
    pub fn matrix(&self) -> Mat6 {
        match *self {
            Root::Diff(i, j) => sp6::e_diff(i, j),
            Root::Sum(i, j) => sp6::e_sum(i, j),
            Root::Long(i) => sp6::e_2e(i),
        }
    }

    /// Coordinates in the basis e1,e2,e3.
    pub fn weight(&self) -> [i64; 3] {
        let mut w = [0; 3];
        match *self {
            Root::Diff(i, j) => {
                w[i - 1] += 1;
                w[j - 1] -= 1;
            }
            Root::Sum(i, j) => {
                w[i - 1] += 1;
                w[j - 1] += 1;
            }
            Root::Long(i) => w[i - 1] += 2,
        }
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Long(i) => write!(f, "2e{i}"),
        }
    }
}

/// One of the 21 Iwasawa basis vectors; the index is its PBW rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u8);

impl Letter {
    pub fn root(r: Root) -> Self {
        Letter(POSITIVE_ROOTS.iter().position(|&x| x == r).expect("positive root") as u8)
    }
    pub fn h(i: usize) -> Self {
        assert!((1..=3).contains(&i));
        Letter(8 + i as u8)
    }
    pub fn kappa(p: usize, q: usize) -> Self {
        Letter(12 + KAPPA_ORDER.iter().position(|&x| x == (p, q)).expect("indices in 1..=3") as u8)
    }
    pub fn all() -> impl Iterator<Item = Letter> {
        (0..DIM as u8).map(Letter)
    }
    pub fn as_root(&self) -> Option<Root> {
        POSITIVE_ROOTS.get(self.0 as usize).copied()
    }
    pub fn in_nn(&self) -> bool {
        self.as_root().is_some_and(|r| NN_ROOTS.contains(&r))
    }
    pub fn matrix(&self) -> Mat6 {
        let k = self.0 as usize;
        match k {
            0..=8 => POSITIVE_ROOTS[k].matrix(),
            9..=11 => sp6::h(k - 8),
            _ => {
                let (p, q) = KAPPA_ORDER[k - 12];
                sp6::kappa(p, q)
            }
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.0 as usize;
        match k {
            0..=8 => write!(f, "E[{}]", POSITIVE_ROOTS[k]),
            9..=11 => write!(f, "H{}", k - 8),
            _ => {
                let (p, q) = KAPPA_ORDER[k - 12];
                write!(f, "K{p}{q}")
            }
        }
    }
}

/// Element of sp(3,C) in Iwasawa coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    coords: Vec<G>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement { coords: vec![G::zero(); DIM] }
    }
    pub fn letter(l: Letter) -> Self {
        let mut x = Self::zero();
        x.coords[l.0 as usize] = G::one();
        x
    }
    pub fn root(r: Root) -> Self {
        Self::letter(Letter::root(r))
    }
    /// E_{−α} = θ(E_α), re-expanded.
    pub fn neg_root(r: Root) -> Self {
        Self::from_matrix(&sp6::negative(&r.matrix())).expect("sp(3,C) element")
    }
    pub fn h(i: usize) -> Self {
        Self::letter(Letter::h(i))
    }
    pub fn kappa(p: usize, q: usize) -> Self {
        Self::letter(Letter::kappa(p, q))
    }
    /// X_{±ij}, symmetric in i,j.
    pub fn x(sign: Sign, i: usize, j: usize) -> Self {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        Self::from_matrix(&sp6::x_pm(sign.is_plus(), a, b)).expect("sp(3,C) element")
    }
    pub fn coord(&self, l: Letter) -> &G {
        &self.coords[l.0 as usize]
    }
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(G::is_zero)
    }
    pub fn terms(&self) -> impl Iterator<Item = (Letter, &G)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (Letter(k as u8), c))
    }
    pub fn scale(&self, c: &G) -> Self {
        LieElement { coords: self.coords.iter().map(|x| x * c).collect() }
    }
    pub fn to_matrix(&self) -> Mat6 {
        let mut m = Mat6::zero();
        for (l, c) in self.terms() {
            m = &m + &l.matrix().scale(c);
        }
        m
    }
    /// Coordinates of a matrix, or None if it is not in sp(3,C).
    pub fn from_matrix(m: &Mat6) -> Option<Self> {
        let coords = basis_solver().solve(m)?;
        Some(LieElement { coords })
    }
    /// Commutator via the 6×6 realization.
    pub fn bracket(&self, o: &LieElement) -> LieElement {
        let m = self.to_matrix().bracket(&o.to_matrix());
        Self::from_matrix(&m).expect("commutator left sp(3,C)")
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, o: &LieElement) -> LieElement {
        LieElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}
impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        LieElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(l, c)| format!("({c}){l}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Row-reduced data for expanding 6×6 matrices in the basis.
struct BasisSolver {
    /// Reduced rows [coefficients | matrix entry index weights], one per pivot.
    reduced: Vec<(usize, Vec<G>)>,
}

impl BasisSolver {
    fn new() -> Self {
        // Augmented system: 36 equations, unknown coordinates, plus an
        // identity block tracking row operations on the right-hand side.
        let cols: Vec<Mat6> = Letter::all().map(|l| l.matrix()).collect();
        let mut rows: Vec<Vec<G>> = (0..36)
            .map(|e| {
                let mut r: Vec<G> = cols.iter().map(|m| m.0[e].clone()).collect();
                r.extend((0..36).map(|k| if k == e { G::one() } else { G::zero() }));
                r
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for c in 0..DIM {
            let Some(p) = (pivot_row..36).find(|&r| !rows[r][c].is_zero()) else {
                panic!("Iwasawa basis is linearly dependent");
            };
            rows.swap(pivot_row, p);
            let inv = rows[pivot_row][c].inv();
            rows[pivot_row] = rows[pivot_row].iter().map(|x| x * &inv).collect();
            for r in 0..36 {
                if r != pivot_row && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    let pr = rows[pivot_row].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pr) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        // Rows past the pivots encode the consistency conditions.
        let reduced = rows.into_iter().enumerate().map(|(r, row)| (r, row[DIM..].to_vec())).collect();
        BasisSolver { reduced }
    }

    fn solve(&self, m: &Mat6) -> Option<Vec<G>> {
        let apply = |w: &Vec<G>| {
            let mut s = G::zero();
            for (a, b) in w.iter().zip(&m.0) {
                if !a.is_zero() && !b.is_zero() {
                    s += &(a * b);
                }
            }
            s
        };
        let mut coords = vec![G::zero(); DIM];
        for (r, w) in &self.reduced {
            let v = apply(w);
            if *r < DIM {
                coords[*r] = v;
            } else if !v.is_zero() {
                return None;
            }
        }
        Some(coords)
    }
}

fn basis_solver() -> &'static BasisSolver {
    static S: OnceLock<BasisSolver> = OnceLock::new();
    S.get_or_init(BasisSolver::new)
}

/// Structure constants [a,b] for all letter pairs.
fn structure_table() -> &'static Vec<Vec<Vec<(u8, G)>>> {
    static T: OnceLock<Vec<Vec<Vec<(u8, G)>>>> = OnceLock::new();
    T.get_or_init(|| {
        Letter::all()
            .map(|a| {
                Letter::all()
                    .map(|b| {
                        LieElement::letter(a)
                            .bracket(&LieElement::letter(b))
                            .terms()
                            .map(|(l, c)| (l.0, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    })
}

/// [a,b] from the cached structure constants.
pub fn letter_bracket(a: Letter, b: Letter) -> LieElement {
    let mut x = LieElement::zero();
    for (l, c) in &structure_table()[a.0 as usize][b.0 as usize] {
        x.coords[*l as usize] = c.clone();
    }
    x
}

/// Element of U(g_C) as a combination of PBW monomials (nondecreasing words).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UeaElement {
    terms: BTreeMap<Vec<u8>, G>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UeaTermJson {
    pub monomial: String,
    pub exponents: Vec<u32>,
    pub coeff: G,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::scalar(G::one())
    }
    pub fn scalar(c: G) -> Self {
        let mut u = Self::zero();
        u.add_mono(Vec::new(), &c);
        u
    }
    pub fn int(n: i64) -> Self {
        Self::scalar(G::int(n))
    }
    pub fn letter(l: Letter) -> Self {
        let mut u = Self::zero();
        u.add_mono(vec![l.0], &G::one());
        u
    }
    pub fn lie(x: &LieElement) -> Self {
        let mut u = Self::zero();
        for (l, c) in x.terms() {
            u.add_mono(vec![l.0], c);
        }
        u
    }
    pub fn root(r: Root) -> Self {
        Self::letter(Letter::root(r))
    }
    pub fn h(i: usize) -> Self {
        Self::letter(Letter::h(i))
    }
    pub fn kappa(p: usize, q: usize) -> Self {
        Self::letter(Letter::kappa(p, q))
    }
    pub fn x(sign: Sign, i: usize, j: usize) -> Self {
        Self::lie(&LieElement::x(sign, i, j))
    }

    /// Normal form of an arbitrary word of letters.
    pub fn word(w: &[Letter]) -> Self {
        let mut u = Self::one();
        for l in w.iter().rev() {
            u = left_mul(l.0, &u);
        }
        u
    }

    /// Normal form of a product of Lie algebra elements.
    pub fn product(xs: &[LieElement]) -> Self {
        let mut u = Self::one();
        for x in xs.iter().rev() {
            u = &Self::lie(x) * &u;
        }
        u
    }

    fn add_mono(&mut self, w: Vec<u8>, c: &G) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, o: &UeaElement, c: &G) {
        for (w, v) in &o.terms {
            self.add_mono(w.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &G) -> Self {
        let mut u = Self::zero();
        u.add_scaled(self, c);
        u
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
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
    pub fn coeff(&self, w: &[Letter]) -> G {
        let key: Vec<u8> = w.iter().map(|l| l.0).collect();
        self.terms.get(&key).cloned().unwrap_or_else(G::zero)
    }
    pub fn terms(&self) -> impl Iterator<Item = (Vec<Letter>, &G)> {
        self.terms.iter().map(|(w, c)| (w.iter().map(|&x| Letter(x)).collect(), c))
    }

    /// Drop monomials lying in [n,n]U(g).
    pub fn reduce_mod_nn(&self) -> Self {
        assert_nn_span();
        UeaElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !w.iter().any(|&x| Letter(x).in_nn()))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Image in the natural 6-dimensional representation.
    pub fn to_matrix(&self) -> Mat6 {
        let mut id = Mat6::zero();
        for i in 0..6 {
            id.set(i, i, G::one());
        }
        let mut m = Mat6::zero();
        for (w, c) in &self.terms {
            let mut p = id.clone();
            for &x in w {
                p = &p * &Letter(x).matrix();
            }
            m = &m + &p.scale(c);
        }
        m
    }

    pub fn commutator(&self, o: &UeaElement) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn json_terms(&self) -> Vec<UeaTermJson> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let mut exponents = vec![0u32; DIM];
                for &x in w {
                    exponents[x as usize] += 1;
                }
                UeaTermJson { monomial: mono_string(w), exponents, coeff: c.clone() }
            })
            .collect()
    }
}

fn mono_string(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = Letter(w[i]).to_string();
        parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
        i = j;
    }
    parts.join("*")
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}){}", mono_string(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, o: &UeaElement) -> UeaElement {
        let mut u = self.clone();
        u.add_scaled(o, &G::one());
        u
    }
}
impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, o: &UeaElement) -> UeaElement {
        let mut u = self.clone();
        u.add_scaled(o, &G::int(-1));
        u
    }
}
impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&G::int(-1))
    }
}
impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, o: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (w, c) in &self.terms {
            let mut u = o.clone();
            for &x in w.iter().rev() {
                u = left_mul(x, &u);
            }
            out.add_scaled(&u, c);
        }
        out
    }
}

thread_local! {
    static MEMO: RefCell<HashMap<(u8, Vec<u8>), UeaElement>> = RefCell::new(HashMap::new());
}

fn left_mul(g: u8, u: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (w, c) in &u.terms {
        out.add_scaled(&left_mul_mono(g, w), c);
    }
    out
}

/// g·w for a nondecreasing word w, via g w0 = w0 g + [g,w0].
fn left_mul_mono(g: u8, w: &[u8]) -> UeaElement {
    if w.first().map_or(true, |&w0| g <= w0) {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(g);
        v.extend_from_slice(w);
        let mut u = UeaElement::zero();
        u.add_mono(v, &G::one());
        return u;
    }
    let key = (g, w.to_vec());
    if let Some(u) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return u;
    }
    let (w0, rest) = (w[0], &w[1..]);
    let inner = left_mul_mono(g, rest);
    let mut out = left_mul(w0, &inner);
    for (c, v) in &structure_table()[g as usize][w0 as usize] {
        out.add_scaled(&left_mul_mono(*c, rest), v);
    }
    MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

/// Panics unless [n,n] is spanned by exactly the root vectors of `NN_ROOTS`.
pub fn assert_nn_span() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        let n: Vec<Letter> = POSITIVE_ROOTS.iter().map(|&r| Letter::root(r)).collect();
        let mut hit = [false; DIM];
        for &a in &n {
            for &b in &n {
                for (l, _) in letter_bracket(a, b).terms() {
                    assert!(l.in_nn(), "[{a},{b}] leaves the expected span of [n,n]");
                    hit[l.0 as usize] = true;
                }
            }
        }
        for r in NN_ROOTS {
            assert!(hit[Letter::root(r).0 as usize], "E[{r}] not reached by [n,n]");
        }
    });
}

/// ±-chirality data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiralitySpec {
    pub index: usize,
    pub sign: Sign,
}

fn det2(a: &UeaElement, b: &UeaElement, c: &UeaElement, d: &UeaElement) -> UeaElement {
    &(a * d) - &(b * c)
}

/// Minor M_{±ij}, i ≤ j, as defined with the row-ordered 2×2 determinants.
pub fn minor(sign: Sign, i: usize, j: usize) -> UeaElement {
    let x = |a, b| UeaElement::x(sign, a, b);
    match (i.min(j), i.max(j)) {
        (1, 1) => det2(&x(2, 2), &x(2, 3), &x(2, 3), &x(3, 3)),
        (2, 2) => det2(&x(1, 1), &x(1, 3), &x(1, 3), &x(3, 3)),
        (3, 3) => det2(&x(1, 1), &x(1, 2), &x(1, 2), &x(2, 2)),
        (1, 2) => det2(&x(1, 2), &x(2, 3), &x(1, 3), &x(3, 3)),
        (1, 3) => det2(&x(1, 2), &x(2, 2), &x(1, 3), &x(2, 3)),
        (2, 3) => det2(&x(1, 1), &x(1, 2), &x(1, 3), &x(2, 3)),
        _ => panic!("minor indices in 1..=3"),
    }
}

/// m3(C±), expanded along the first row.
pub fn m3(sign: Sign) -> UeaElement {
    let x = |a, b| UeaElement::x(sign, a, b);
    let t1 = &x(1, 1) * &minor(sign, 1, 1);
    let t2 = &x(1, 2) * &minor(sign, 1, 2);
    let t3 = &x(1, 3) * &minor(sign, 1, 3);
    &(&t1 - &t2) + &t3
}

/// m_i(C±) as a square matrix (1×1 for i = 3).
pub fn chirality(spec: ChiralitySpec) -> Vec<Vec<UeaElement>> {
    let s = spec.sign;
    match spec.index {
        1 => (1..=3).map(|a| (1..=3).map(|b| UeaElement::x(s, a, b)).collect()).collect(),
        2 => (1..=3)
            .map(|a| {
                (1..=3)
                    .map(|b| {
                        let m = minor(s, a, b);
                        if (a + b) % 2 == 1 {
                            -&m
                        } else {
                            m
                        }
                    })
                    .collect()
            })
            .collect(),
        3 => vec![vec![m3(s)]],
        i => panic!("chirality index {i} not in 1..=3"),
    }
}

fn mat_mul(a: &[Vec<UeaElement>], b: &[Vec<UeaElement>]) -> Vec<Vec<UeaElement>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut s = UeaElement::zero();
                    for k in 0..n {
                        s = &s + &(&a[r][k] * &b[k][c]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// C_{2i} = Tr(m_i(C+) m_i(C−)).
pub fn c_operator(i: usize) -> UeaElement {
    let p = chirality(ChiralitySpec { index: i, sign: Sign::Plus });
    let m = chirality(ChiralitySpec { index: i, sign: Sign::Minus });
    let prod = mat_mul(&p, &m);
    let mut s = UeaElement::zero();
    for (k, row) in prod.iter().enumerate() {
        s = &s + &row[k];
    }
    s
}

/// D^{(first,−first)}_{jk}: the (j,k) entry of m1(C_first) m1(C_−first).
pub fn d_operator(first: Sign, j: usize, k: usize) -> UeaElement {
    let other = if first.is_plus() { Sign::Minus } else { Sign::Plus };
    let mut s = UeaElement::zero();
    for m in 1..=3 {
        s = &s + &(&UeaElement::x(first, j, m) * &UeaElement::x(other, m, k));
    }
    s
}

/// Transcriptions of the printed normal-order listings (mod [n,n]).
pub mod listing {
    use super::*;

    fn x(s: Sign, i: usize, j: usize) -> UeaElement {
        UeaElement::x(s, i, j)
    }
    fn k(p: usize, q: usize) -> UeaElement {
        UeaElement::kappa(p, q)
    }
    fn h(i: usize) -> UeaElement {
        UeaElement::h(i)
    }
    fn c(n: i64) -> UeaElement {
        UeaElement::int(n)
    }
    fn e(i: usize, j: usize) -> UeaElement {
        UeaElement::root(Root::Diff(i, j))
    }
    /// 2√−1 E_{2e3} scaled by `s`.
    fn e33(s: i64) -> UeaElement {
        UeaElement::root(Root::Long(3)).scale(&G::imag(2 * s))
    }
    fn delta(a: usize, b: usize) -> i64 {
        (a == b) as i64
    }
    fn sum(parts: &[UeaElement]) -> UeaElement {
        parts.iter().fold(UeaElement::zero(), |a, b| &a + b)
    }
    fn sgn(s: Sign) -> i64 {
        if s.is_plus() {
            1
        } else {
            -1
        }
    }

    /// Degree-one expressions of X_{±ij}.
    pub fn x_root_vector(s: Sign, i: usize, j: usize) -> UeaElement {
        let t = sgn(s);
        let kt = |a, b| k(a, b).scale(&G::int(t));
        match (i, j) {
            (1, 1) | (2, 2) => &h(i) + &kt(i, i),
            (1, 2) | (2, 3) if s.is_plus() => &e(i, j) + &k(j, i),
            (1, 2) | (2, 3) => &e(i, j) - &k(i, j),
            (3, 3) => sum(&[e33(t), h(3), kt(3, 3)]),
            (1, 3) if s.is_plus() => k(3, 1),
            (1, 3) => -&k(1, 3),
            _ => panic!("indices i ≤ j in 1..=3"),
        }
    }

    /// Printed listing of M_{±ij}.
    pub fn minor(s: Sign, i: usize, j: usize) -> UeaElement {
        let t = G::int(sgn(s));
        let kk = |a, b| k(a, b).scale(&t);
        let xs = |a, b| x(s, a, b);
        // κ indices in the minus listings are transposed.
        let kt = |a, b| if s.is_plus() { kk(a, b) } else { kk(b, a) };
        match (i, j) {
            (1, 1) => sum(&[
                &(&h(2) - &c(1)) * &xs(3, 3),
                &xs(3, 3) * &kk(2, 2),
                -&(&e(2, 3) * &xs(2, 3)),
                -&(&xs(2, 3) * &kt(3, 2)),
            ]),
            (2, 2) => sum(&[
                &(&h(1) - &c(1)) * &xs(3, 3),
                &xs(3, 3) * &kk(1, 1),
                -&(&xs(1, 3) * &kt(3, 1)),
            ]),
            (3, 3) => sum(&[
                &(&h(1) - &c(1)) * &xs(2, 2),
                &xs(2, 2) * &kk(1, 1),
                -&(&e(1, 2) * &xs(1, 2)),
                -&(&xs(1, 2) * &kt(2, 1)),
            ]),
            (1, 2) => sum(&[&e(1, 2) * &xs(3, 3), &xs(3, 3) * &kt(2, 1), -&(&xs(2, 3) * &kt(3, 1))]),
            (2, 3) => sum(&[
                &(&h(1) - &c(1)) * &xs(2, 3),
                &xs(2, 3) * &kk(1, 1),
                -&(&xs(1, 2) * &kt(3, 1)),
            ]),
            (1, 3) => sum(&[&e(1, 2) * &xs(2, 3), &xs(2, 3) * &kt(2, 1), -&(&xs(2, 2) * &kt(3, 1))]),
            _ => panic!("indices i ≤ j in 1..=3"),
        }
    }

    /// Printed listing of m3(C±).
    pub fn m3(s: Sign) -> UeaElement {
        let t = G::int(sgn(s));
        let m = |a, b| super::minor(s, a, b);
        let kk = |a, b| k(a, b).scale(&t);
        let kt = |a, b| if s.is_plus() { kk(a, b) } else { kk(b, a) };
        sum(&[
            &(&h(1) - &c(2)) * &m(1, 1),
            &m(1, 1) * &kk(1, 1),
            -&(&e(1, 2) * &m(1, 2)),
            -&(&m(1, 2) * &kt(2, 1)),
            &m(1, 3) * &kt(3, 1),
        ])
    }

    /// Printed listing of D^{(first,−first)}_{ji}.
    pub fn d(first: Sign, j: usize, i: usize) -> UeaElement {
        // The listing for D^{(+,−)} involves X_{−..} and κ on the right.
        let s = if first.is_plus() { Sign::Minus } else { Sign::Plus };
        let t = G::int(-sgn(s));
        let xs = |a, b| x(s, a, b);
        let kk = |a, b| k(a, b).scale(&t);
        let kt = |a, b| if s.is_plus() { kk(b, a) } else { kk(a, b) };
        match j {
            1 => sum(&[
                &(&h(1) - &c(4)) * &xs(1, i),
                &xs(1, i) * &kk(1, 1),
                &e(1, 2) * &xs(2, i),
                &xs(2, i) * &kt(2, 1),
                &xs(3, i) * &kt(3, 1),
            ]),
            2 => sum(&[
                &e(1, 2) * &xs(1, i),
                &xs(1, i) * &kt(2, 1),
                &(&h(2) - &c(3 - delta(1, i))) * &xs(2, i),
                &xs(2, i) * &kk(2, 2),
                &e(2, 3) * &xs(3, i),
                &xs(3, i) * &kt(3, 2),
                xs(1, 1).scale(&G::int(-delta(2, i))),
            ]),
            3 => sum(&[
                &xs(1, i) * &kt(3, 1),
                &e(2, 3) * &xs(2, i),
                &xs(2, i) * &kt(3, 2),
                &sum(&[h(3), c(-1 - delta(3, i)), e33(-sgn(s))]) * &xs(3, i),
                &xs(3, i) * &kk(3, 3),
                (&xs(1, 1) + &xs(2, 2)).scale(&G::int(-delta(3, i))),
            ]),
            _ => panic!("index in 1..=3"),
        }
    }

    /// Printed listing of C2.
    pub fn c2() -> UeaElement {
        let s = Sign::Minus;
        sum(&[
            &(&h(1) - &c(6)) * &x(s, 1, 1),
            &x(s, 1, 1) * &k(1, 1),
            &(&h(2) - &c(4)) * &x(s, 2, 2),
            &x(s, 2, 2) * &k(2, 2),
            &sum(&[h(3), e33(1), c(-2)]) * &x(s, 3, 3),
            &x(s, 3, 3) * &k(3, 3),
            (&e(1, 2) * &x(s, 1, 2)).scale(&G::int(2)),
            (&x(s, 1, 2) * &k(2, 1)).scale(&G::int(2)),
            (&e(2, 3) * &x(s, 2, 3)).scale(&G::int(2)),
            (&x(s, 2, 3) * &k(3, 2)).scale(&G::int(2)),
            (&x(s, 1, 3) * &k(3, 1)).scale(&G::int(2)),
        ])
    }

    /// Printed listing of C4.
    pub fn c4() -> UeaElement {
        let m = |a, b| super::minor(Sign::Minus, a, b);
        let two = G::int(2);
        let a3 = &(&e33(1) + &h(3));
        // {(2√−1E_{2e3}+H3)M + M(κ(E33)−2)}
        let brace = |mm: &UeaElement| &(a3 * mm) + &(mm * &(&k(3, 3) - &c(2)));
        let b11 = brace(&m(1, 1));
        let b22 = brace(&m(2, 2));
        let b12 = brace(&m(1, 2));
        let b33 = &(&h(2) * &m(3, 3)) + &(&m(3, 3) * &(&k(2, 2) - &c(2)));
        let h1m = &h(1) - &c(1);
        let k11m = &k(1, 1) - &c(2);
        let r23 = sum(&[&e(2, 3) * &m(2, 3), &m(2, 3) * &k(3, 2), -&m(3, 3)]);
        let r13 = &(&e(2, 3) * &m(1, 3)) + &(&m(1, 3) * &k(3, 2));
        sum(&[
            &(&h(2) - &c(1)) * &b11,
            &b11 * &(&k(2, 2) - &c(2)),
            -&(&(&e(2, 3) * &e(2, 3)) * &m(1, 1)),
            (&(&e(2, 3) * &m(1, 1)) * &k(3, 2)).scale(&G::int(-2)),
            -&(&(&m(1, 1) * &k(3, 2)) * &k(3, 2)),
            &h1m * &b22,
            &b22 * &k11m,
            -&(&(&m(2, 2) * &k(3, 1)) * &k(3, 1)),
            &h1m * &b33,
            &b33 * &k11m,
            -&(&(&e(1, 2) * &e(1, 2)) * &m(3, 3)),
            (&(&e(1, 2) * &m(3, 3)) * &k(2, 1)).scale(&G::int(-2)),
            -&(&(&m(3, 3) * &k(2, 1)) * &k(2, 1)),
            (&e(1, 2) * &b12).scale(&two),
            (&b12 * &k(2, 1)).scale(&two),
            b22.scale(&G::int(-2)),
            (&e(2, 3) * &m(2, 3)).scale(&G::int(-2)),
            (&sum(&[&e(2, 3) * &m(1, 2), &m(1, 2) * &k(3, 2), -&m(1, 3)]) * &k(3, 1)).scale(&G::int(-2)),
            m(3, 3).scale(&two),
            (&m(2, 3) * &k(3, 2)).scale(&G::int(-2)),
            (&h1m * &r23).scale(&two),
            (&r23 * &k11m).scale(&two),
            (&(&(&e(1, 2) * &m(2, 3)) + &(&m(2, 3) * &k(2, 1))) * &k(3, 1)).scale(&G::int(-2)),
            (&e(1, 2) * &r13).scale(&two),
            (&e(2, 3) * &m(2, 3)).scale(&G::int(-2)),
            (&(&h(2) - &c(3)) * &m(3, 3)).scale(&G::int(-2)),
            (&m(3, 3) * &k(2, 2)).scale(&G::int(-2)),
            (&m(2, 3) * &k(3, 2)).scale(&G::int(-2)),
            (&r13 * &k(2, 1)).scale(&two),
            (&(&(&(&h(2) - &c(2)) * &m(1, 3)) + &(&m(1, 3) * &k(2, 2))) * &k(3, 1)).scale(&G::int(-2)),
        ])
    }
}
