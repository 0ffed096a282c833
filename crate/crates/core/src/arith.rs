//! Exact scalars and small multivariate polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact rational number.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `a/b`.
pub fn qf(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Render a rational as `p` or `p/q`.
pub fn fmt_q(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Rational `a + b i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }
    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }
    pub fn int(n: i64) -> Self {
        Self::real(q(n))
    }
    /// `n i`.
    pub fn imag(n: i64) -> Self {
        Self { re: Rational::zero(), im: q(n) }
    }
    pub fn i() -> Self {
        Self::imag(1)
    }
    pub fn zero() -> Self {
        Self::int(0)
    }
    pub fn one() -> Self {
        Self::int(1)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }
    pub fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "inverse of zero");
        Self { re: &self.re / &n, im: -(&self.im / &n) }
    }
    pub fn scale(&self, r: &Rational) -> Self {
        Self { re: &self.re * r, im: &self.im * r }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_q(&self.re)),
            (true, false) => write!(f, "{}i", fmt_q(&self.im)),
            _ => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", fmt_q(&self.re), sign, fmt_q(&self.im.abs()))
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &fmt_q(&self.re))?;
        st.serialize_field("im", &fmt_q(&self.im))?;
        st.end()
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}
impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}
impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}
impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}
impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

/// Polynomial in `N` commuting variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<[u32; N], Rational>,
}

/// Polynomial in (ν1, ν2, ν3).
pub type NuPoly = MPoly<3>;
/// Polynomial in (ν1, ν2, ν3, l).
pub type ChiValue = MPoly<4>;

impl<const N: usize> MPoly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], c);
        p
    }
    pub fn int(n: i64) -> Self {
        Self::constant(q(n))
    }
    /// The variable with index `i` (0-based).
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        let mut p = Self::zero();
        p.add_term(e, q(1));
        p
    }
    pub fn add_term(&mut self, e: [u32; N], c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Rational)> {
        self.terms.iter()
    }
    pub fn coeff(&self, e: &[u32; N]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero();
        for (e, v) in &self.terms {
            p.add_term(*e, v * c);
        }
        p
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::int(1);
        for _ in 0..n {
            r = &r * self;
        }
        r
    }
    /// Substitute `var(i) = value` for each `Some` entry, leaving others symbolic.
    pub fn eval_partial(&self, vals: &[Option<Rational>; N]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut ne = *e;
            for i in 0..N {
                if let Some(v) = &vals[i] {
                    for _ in 0..e[i] {
                        coeff *= v;
                    }
                    ne[i] = 0;
                }
            }
            out.add_term(ne, coeff);
        }
        out
    }
    /// True iff every variable in `vars` appears only with even exponents.
    pub fn is_even_in(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|e| vars.iter().all(|&i| e[i] % 2 == 0))
    }
    /// The constant polynomial's value, if it is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; N]).cloned(),
            _ => None,
        }
    }
}

impl<const N: usize> Add for &MPoly<N> {
    type Output = MPoly<N>;
    fn add(self, o: Self) -> MPoly<N> {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}
impl<const N: usize> Sub for &MPoly<N> {
    type Output = MPoly<N>;
    fn sub(self, o: Self) -> MPoly<N> {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, -c.clone());
        }
        p
    }
}
impl<const N: usize> Mul for &MPoly<N> {
    type Output = MPoly<N>;
    fn mul(self, o: Self) -> MPoly<N> {
        let mut p = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for i in 0..N {
                    e[i] += e2[i];
                }
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}
impl<const N: usize> Neg for &MPoly<N> {
    type Output = MPoly<N>;
    fn neg(self) -> MPoly<N> {
        self.scale(&q(-1))
    }
}
impl<const N: usize> AddAssign<&MPoly<N>> for MPoly<N> {
    fn add_assign(&mut self, o: &MPoly<N>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

const VAR_NAMES: [&str; 4] = ["nu1", "nu2", "nu3", "l"];

impl<const N: usize> fmt::Display for MPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mon: Vec<String> = (0..N)
                .filter(|&i| e[i] > 0)
                .map(|i| {
                    let name = VAR_NAMES.get(i).copied().unwrap_or("z");
                    if e[i] == 1 {
                        name.to_string()
                    } else {
                        format!("{}^{}", name, e[i])
                    }
                })
                .collect();
            if mon.is_empty() {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mon.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_q(&a), mon.join("*"))?;
            }
        }
        Ok(())
    }
}

/// JSON term of a polynomial: exponents and coefficient string.
#[derive(Serialize)]
pub struct PolyTerm<'a> {
    pub exp: &'a [u32],
    pub coeff: String,
}

impl<const N: usize> Serialize for MPoly<N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<PolyTerm> =
            self.terms.iter().map(|(e, c)| PolyTerm { exp: &e[..], coeff: fmt_q(c) }).collect();
        v.serialize(s)
    }
}

/// ν-polynomial `c0 + c1 ν1 + c2 ν2 + c3 ν3`.
pub fn nu_affine(c0: i64, c: [i64; 3]) -> NuPoly {
    let mut p = NuPoly::int(c0);
    for (i, ci) in c.iter().enumerate() {
        p += &NuPoly::var(i).scale(&q(*ci));
    }
    p
}
