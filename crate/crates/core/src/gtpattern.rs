//! Gelfand-Tsetlin patterns for gl(3): validation, ordering, weights,
//! piecewise-linear pattern functions, duals and shifts.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// A triangular array (m13,m23,m33; m12,m22; m11).
///
/// The struct may hold arrays violating interlacing; coefficient formulas
/// are routinely evaluated at such shifted arrays. Use [`validate`] to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    pub m13: i64,
    pub m23: i64,
    pub m33: i64,
    pub m12: i64,
    pub m22: i64,
    pub m11: i64,
}

impl Pattern {
    pub const fn new(top: [i64; 3], mid: [i64; 2], bot: i64) -> Self {
        Self { m13: top[0], m23: top[1], m33: top[2], m12: mid[0], m22: mid[1], m11: bot }
    }

    pub fn top(&self) -> [i64; 3] {
        [self.m13, self.m23, self.m33]
    }

    pub fn mid(&self) -> [i64; 2] {
        [self.m12, self.m22]
    }

    /// The top row as a highest weight.
    pub fn ptype(&self) -> Dominant {
        Dominant { l: self.top() }
    }

    pub fn rows(&self) -> [Vec<i64>; 3] {
        [self.top().to_vec(), self.mid().to_vec(), vec![self.m11]]
    }

    pub fn is_valid(&self) -> bool {
        validate(self)
    }

    /// All entries equal to `l`.
    pub const fn constant(l: i64) -> Self {
        Self::new([l, l, l], [l, l], l)
    }

    pub fn weight(&self) -> WeightVec {
        weight(self)
    }

    pub fn delta(&self) -> i64 {
        self.m12 + self.m22 - self.m11 - self.m23
    }

    /// χ⁺_r: 1 iff δ > r.
    pub fn chi_plus(&self, r: i64) -> i64 {
        (self.delta() > r) as i64
    }

    /// χ⁻_r: 1 iff δ < −r.
    pub fn chi_minus(&self, r: i64) -> i64 {
        (self.delta() < -r) as i64
    }

    pub fn c1(&self) -> i64 {
        (self.m11 - self.m22).min(self.m12 - self.m23)
    }

    pub fn c1bar(&self) -> i64 {
        (self.m23 - self.m22).min(self.m12 - self.m11)
    }

    pub fn c2(&self) -> i64 {
        self.c1() * self.c1bar()
    }

    pub fn stats(&self) -> PatternStats {
        PatternStats {
            delta: self.delta(),
            chi_plus_0: self.chi_plus(0),
            chi_minus_0: self.chi_minus(0),
            c1: self.c1(),
            c1bar: self.c1bar(),
            c2: self.c2(),
        }
    }

    /// Increment without any validity check; `k` shifts the middle row by (+k,−k).
    pub fn shifted_raw(&self, top: [i64; 3], mid: [i64; 2], bot: i64, k: i64) -> Pattern {
        Pattern {
            m13: self.m13 + top[0],
            m23: self.m23 + top[1],
            m33: self.m33 + top[2],
            m12: self.m12 + mid[0] + k,
            m22: self.m22 + mid[1] - k,
            m11: self.m11 + bot,
        }
    }

    /// Middle-row shift (mid; bot) with top row unchanged, no validity check.
    pub fn mb(&self, mid: [i64; 2], bot: i64, k: i64) -> Pattern {
        self.shifted_raw([0, 0, 0], mid, bot, k)
    }

    pub fn dual(&self) -> Pattern {
        dual(self)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{};{},{};{})",
            self.m13, self.m23, self.m33, self.m12, self.m22, self.m11
        )
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Parse `m13,m23,m33;m12,m22;m11` (commas, semicolons or whitespace).
impl std::str::FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<i64> = s
            .split(|c: char| c == ',' || c == ';' || c.is_whitespace() || c == '(' || c == ')')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::Invalid(format!("bad pattern entry {t:?}"))))
            .collect::<Result<_>>()?;
        if v.len() != 6 {
            return Err(Error::Invalid(format!("pattern needs 6 entries, got {}", v.len())));
        }
        Ok(Pattern::new([v[0], v[1], v[2]], [v[3], v[4]], v[5]))
    }
}

/// Values of the pattern functions at a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PatternStats {
    pub delta: i64,
    pub chi_plus_0: i64,
    pub chi_minus_0: i64,
    pub c1: i64,
    pub c1bar: i64,
    pub c2: i64,
}

/// A dominant integral weight λ1 ≥ λ2 ≥ λ3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dominant {
    pub l: [i64; 3],
}

impl Dominant {
    pub fn new(l1: i64, l2: i64, l3: i64) -> Result<Self> {
        if l1 >= l2 && l2 >= l3 {
            Ok(Self { l: [l1, l2, l3] })
        } else {
            Err(Error::NotDominant(l1, l2, l3))
        }
    }

    /// λ + v, checked for dominance.
    pub fn plus(&self, v: [i64; 3]) -> Result<Self> {
        Self::new(self.l[0] + v[0], self.l[1] + v[1], self.l[2] + v[2])
    }

    /// λ1 − λ3.
    pub fn spread(&self) -> i64 {
        self.l[0] - self.l[2]
    }

    /// Weyl dimension formula.
    pub fn dim(&self) -> usize {
        let [a, b, c] = self.l;
        ((a - b + 1) * (b - c + 1) * (a - c + 2) / 2) as usize
    }

    /// All dominant weights with λ1 − λ3 ≤ `spread` and λ3 = `base`.
    pub fn all_with_spread(spread: i64, base: i64) -> Vec<Dominant> {
        let mut v = Vec::new();
        for s in 0..=spread {
            for m in 0..=s {
                v.push(Dominant { l: [base + s, base + m, base] });
            }
        }
        v
    }
}

impl fmt::Display for Dominant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l[0], self.l[1], self.l[2])
    }
}

impl std::str::FromStr for Dominant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_ints(s)?;
        if v.len() != 3 {
            return Err(Error::Invalid(format!("type needs 3 entries, got {}", v.len())));
        }
        Dominant::new(v[0], v[1], v[2])
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace() || c == '(' || c == ')')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Invalid(format!("bad integer {t:?}"))))
        .collect()
}

/// A weight (w1,w2,w3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVec(pub [i64; 3]);

/// A character σ of M_min, components in {0,1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SigmaChar(pub [u8; 3]);

impl SigmaChar {
    pub fn new(s: [u8; 3]) -> Result<Self> {
        if s.iter().all(|&x| x <= 1) {
            Ok(Self(s))
        } else {
            Err(Error::Invalid(format!("sigma components must be 0 or 1: {s:?}")))
        }
    }

    pub fn all() -> Vec<SigmaChar> {
        (0..8u8).map(|b| SigmaChar([(b >> 2) & 1, (b >> 1) & 1, b & 1])).collect()
    }

    /// ε_σ: the majority value of the components.
    pub fn epsilon(&self) -> i64 {
        (self.0.iter().map(|&x| x as i64).sum::<i64>() >= 2) as i64
    }

    /// δ_{σ;i} for i ∈ {1,2,3}: 0 iff σ_i = ε_σ.
    pub fn delta(&self, i: usize) -> i64 {
        (self.0[i - 1] as i64 != self.epsilon()) as i64
    }

    /// True for σ = (0,0,0) and (1,1,1).
    pub fn is_uniform(&self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    pub fn matches(&self, w: &WeightVec) -> bool {
        (0..3).all(|i| w.0[i].rem_euclid(2) == self.0[i] as i64)
    }
}

impl fmt::Display for SigmaChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl std::str::FromStr for SigmaChar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_ints(s)?;
        if v.len() != 3 || v.iter().any(|&x| x != 0 && x != 1) {
            return Err(Error::Invalid(format!("bad sigma {s:?}")));
        }
        SigmaChar::new([v[0] as u8, v[1] as u8, v[2] as u8])
    }
}

/// Both interlacing chains hold.
pub fn validate(p: &Pattern) -> bool {
    p.m13 >= p.m12
        && p.m12 >= p.m23
        && p.m23 >= p.m22
        && p.m22 >= p.m33
        && p.m12 >= p.m11
        && p.m11 >= p.m22
}

pub fn weight(p: &Pattern) -> WeightVec {
    let w1 = p.m11;
    let w2 = p.m12 + p.m22 - p.m11;
    let w3 = p.m13 + p.m23 + p.m33 - p.m12 - p.m22;
    WeightVec([w1, w2, w3])
}

pub fn dual(p: &Pattern) -> Pattern {
    Pattern::new([-p.m33, -p.m23, -p.m13], [-p.m22, -p.m12], -p.m11)
}

/// `M(top; mid; bot)[k]`, or `None` when the result is not a valid pattern.
pub fn shift(p: &Pattern, top: [i64; 3], mid: [i64; 2], bot: i64, k: i64) -> Option<Pattern> {
    let r = p.shifted_raw(top, mid, bot, k);
    validate(&r).then_some(r)
}

/// All patterns of type λ in the order l(M) (position + 1).
pub fn enumerate(lambda: &Dominant) -> Vec<Pattern> {
    let [a, b, c] = lambda.l;
    let mut v = Vec::with_capacity(lambda.dim());
    for m12 in b..=a {
        for m22 in c..=b {
            for m11 in m22..=m12 {
                v.push(Pattern::new([a, b, c], [m12, m22], m11));
            }
        }
    }
    v.sort_by(|x, y| {
        let (wx, wy) = (weight(x), weight(y));
        wy.cmp(&wx).then(y.m12.cmp(&x.m12))
    });
    v
}

/// Checked variant of [`enumerate`] taking raw integers.
pub fn enumerate_checked(l: [i64; 3]) -> Result<Vec<Pattern>> {
    Ok(enumerate(&Dominant::new(l[0], l[1], l[2])?))
}

/// G_σ(λ) in inherited order.
pub fn sigma_enumerate(lambda: &Dominant, sigma: &SigmaChar) -> Vec<Pattern> {
    enumerate(lambda).into_iter().filter(|p| sigma.matches(&weight(p))).collect()
}

/// Pattern list together with its 0-based position lookup.
#[derive(Clone, Debug)]
pub struct Basis {
    pub patterns: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
}

impl Basis {
    pub fn new(patterns: Vec<Pattern>) -> Self {
        let index = patterns.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        Self { patterns, index }
    }

    pub fn full(lambda: &Dominant) -> Self {
        Self::new(enumerate(lambda))
    }

    pub fn sigma(lambda: &Dominant, sigma: &SigmaChar) -> Self {
        Self::new(sigma_enumerate(lambda, sigma))
    }

    /// 0-based position.
    pub fn pos(&self, p: &Pattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}
