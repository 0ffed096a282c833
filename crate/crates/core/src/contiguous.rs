//! p±-matrices, boundary values of elementary functions at the identity,
//! and the closed-form contiguous-relation matrices R(Γ^λ_{±ij}).

use crate::arith::{nu_affine, q, NuPoly, Rational};
use crate::clebsch::{inject, k_const, pos_bound, pos_coeff, Direction, InjectorSpec, Mode};
use crate::error::{Error, Result};
use crate::glmodule::{act_basis, marking, pair_index, Gen, PVector, Sign, PAIRS};
use crate::gtpattern::{dual, enumerate, validate, Basis, Dominant, Pattern, SigmaChar};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// ρ = (3,2,1).
pub const RHO: [i64; 3] = [3, 2, 1];

fn direction(sign: Sign, i: usize, j: usize) -> Direction {
    match sign {
        Sign::Plus => Direction::Pos(i, j),
        Sign::Minus => Direction::Neg(i, j),
    }
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i > j {
        return Err(Error::Invalid(format!("index pair ({i},{j}) must satisfy 1 ≤ i ≤ j ≤ 3")));
    }
    Ok(())
}

/// λ[±ij].
pub fn shifted_type(lambda: &Dominant, sign: Sign, i: usize, j: usize) -> Result<Dominant> {
    check_pair(i, j)?;
    InjectorSpec::new(*lambda, direction(sign, i, j)).target()
}

/// P^λ_{±ij}: rows G(λ[±ij]), columns G(λ), entries in p±.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PMatrix {
    #[serde(serialize_with = "ser_sign")]
    pub sign: Sign,
    pub rows: Vec<Pattern>,
    pub cols: Vec<Pattern>,
    pub entries: Vec<Vec<PVector>>,
}

fn ser_sign<S: serde::Serializer>(s: &Sign, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_char(s.symbol())
}

/// Build P^λ_{±ij} from the injector I^λ_{±ij} and the marking of p±.
pub fn pmatrix(lambda: &Dominant, sign: Sign, i: usize, j: usize) -> Result<PMatrix> {
    let target = shifted_type(lambda, sign, i, j)?;
    let spec = InjectorSpec::new(*lambda, direction(sign, i, j));
    let rows = enumerate(&target);
    let cols = Basis::full(lambda);
    let marks: BTreeMap<Pattern, (usize, usize, i64)> = PAIRS
        .iter()
        .map(|&(p, q_)| {
            let (pat, s) = marking(sign, p, q_);
            (pat, (p, q_, s))
        })
        .collect();
    let mut entries = vec![vec![PVector::zero(sign); cols.len()]; rows.len()];
    for (r, m) in rows.iter().enumerate() {
        for ((n, b), c) in inject(&spec, m, Mode::Closed)?.terms() {
            let (p, q_, s) = marks[b];
            let col = cols.pos(n).expect("left factor lies in G(λ)");
            entries[r][col].coeffs[pair_index(p, q_)] += c * q(s);
        }
    }
    Ok(PMatrix { sign, rows, cols: cols.patterns, entries })
}

/// Value at the identity of X_{±pq} applied to the elementary functions
/// s(M,N), N ∈ G(λ): the nonzero pairs (N, value).
pub fn boundary_eval(lambda: &Dominant, sign: Sign, p: usize, q_: usize, m: &Pattern) -> Vec<(Pattern, NuPoly)> {
    let (p, q_) = if p <= q_ { (p, q_) } else { (q_, p) };
    let w = m.weight().0;
    if p == q_ {
        let mut c = [0; 3];
        c[p - 1] = 1;
        let s = if sign.is_plus() { 1 } else { -1 };
        return vec![(*m, nu_affine(RHO[p - 1] + s * w[p - 1], c))];
    }
    // X_{+pq} ↦ κ(E_qp), X_{−pq} ↦ −κ(E_pq) modulo n and a.
    let (g, s) = if sign.is_plus() { (Gen::new(q_, p), 1) } else { (Gen::new(p, q_), -1) };
    let mut out = Vec::new();
    for n in enumerate(lambda) {
        let c: i64 = act_basis(g, &n).into_iter().filter(|(n2, _)| n2 == m).map(|(_, c)| c).sum();
        if c != 0 {
            out.push((n, NuPoly::int(s * c)));
        }
    }
    out
}

/// Left-hand side P·E(λ) evaluated at the identity: d_{λ[±ij]} × d^σ_λ.
pub fn theorem_lhs(sigma: &SigmaChar, lambda: &Dominant, sign: Sign, i: usize, j: usize) -> Result<Vec<Vec<NuPoly>>> {
    let pm = pmatrix(lambda, sign, i, j)?;
    let cols = sigma_basis(lambda, sigma)?;
    let bl = Basis::full(lambda);
    let mut out = vec![vec![NuPoly::zero(); cols.len()]; pm.rows.len()];
    for (c, m) in cols.patterns.iter().enumerate() {
        for &(p, q_) in &PAIRS {
            let k = pair_index(p, q_);
            for (n, v) in boundary_eval(lambda, sign, p, q_, m) {
                let col = bl.pos(&n).unwrap();
                for (r, row) in pm.entries.iter().enumerate() {
                    let x = &row[col].coeffs[k];
                    if !x.is_zero() {
                        out[r][c] += &v.scale(x);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sigma_basis(lambda: &Dominant, sigma: &SigmaChar) -> Result<Basis> {
    let b = Basis::sigma(lambda, sigma);
    if b.is_empty() {
        return Err(Error::EmptySigmaSubset(format!("G_{sigma}({lambda}) is empty")));
    }
    Ok(b)
}

/// R(Γ^λ_{±ij}): rows G_σ(λ[±ij]), columns G_σ(λ), entries affine in ν.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RMatrix {
    pub rows: Vec<Pattern>,
    pub cols: Vec<Pattern>,
    pub entries: Vec<Vec<NuPoly>>,
}

impl RMatrix {
    pub fn get(&self, r: usize, c: usize) -> &NuPoly {
        &self.entries[r][c]
    }

    /// Matrix product, both factors over ν-polynomials.
    pub fn mul(&self, o: &RMatrix) -> Result<RMatrix> {
        if self.cols != o.rows {
            return Err(Error::Invalid("R-matrix product: inner bases differ".into()));
        }
        let mut e = vec![vec![NuPoly::zero(); o.cols.len()]; self.rows.len()];
        for (r, row) in e.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                for k in 0..self.cols.len() {
                    *x += &(&self.entries[r][k] * &o.entries[k][c]);
                }
            }
        }
        Ok(RMatrix { rows: self.rows.clone(), cols: o.cols.clone(), entries: e })
    }

    pub fn scale(&self, c: &Rational) -> RMatrix {
        RMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect(),
        }
    }

    pub fn add(&self, o: &RMatrix) -> Result<RMatrix> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Invalid("R-matrix sum: bases differ".into()));
        }
        let e = self.entries.iter().zip(&o.entries).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        Ok(RMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries: e })
    }
}

type KFn<'a> = &'a dyn Fn(usize, usize, &Pattern) -> i64;

/// Plus-side column of the theorem for source pattern `m`, as (target, value) pairs
/// with raw target arrays.
fn plus_column(i: usize, j: usize, m: &Pattern, k: KFn) -> Vec<(Pattern, NuPoly)> {
    let w = m.weight().0;
    let mut top = [0; 3];
    top[i - 1] += 1;
    top[j - 1] += 1;
    let mut out = Vec::new();
    let nu1 = nu_affine(RHO[0] + w[0] + k(i, j, m), [1, 0, 0]);
    for mm in 0..=pos_bound(i, j, 2, 2).unwrap() {
        let n = m.shifted_raw(top, [0, 2], 2, mm);
        out.push((n, nu1.scale(&q(pos_coeff(i, j, 2, 2, mm, &n)))));
    }
    let nu2 = nu_affine(RHO[1] + w[1], [0, 1, 0]);
    let b = m.m22 - m.m33 + 1;
    for mm in 0..=pos_bound(i, j, 2, 0).unwrap() {
        let n = m.shifted_raw(top, [0, 2], 0, mm);
        let mut h = nu2.scale(&q(pos_coeff(i, j, 2, 0, mm, &n)));
        let c = (b + m.delta()) * m.chi_plus(-1) * pos_coeff(i, j, 1, 0, mm - 1, &n) + b * pos_coeff(i, j, 1, 0, mm, &n);
        h += &NuPoly::int(c);
        out.push((n, h));
    }
    let nu3 = nu_affine(RHO[2] + w[2], [0, 0, 1]);
    for mm in 0..=pos_bound(i, j, 0, 0).unwrap() {
        let n = m.shifted_raw(top, [0, 0], 0, mm);
        out.push((n, nu3.scale(&q(pos_coeff(i, j, 0, 0, mm, &n)))));
    }
    out
}

/// Closed-form R(Γ^λ_{±ij}).
pub fn rmatrix(sigma: &SigmaChar, lambda: &Dominant, sign: Sign, i: usize, j: usize) -> Result<RMatrix> {
    rmatrix_with(sigma, lambda, sign, i, j, &k_const)
}

/// [`rmatrix`] with a replaceable k_{ij} constant.
pub fn rmatrix_with(sigma: &SigmaChar, lambda: &Dominant, sign: Sign, i: usize, j: usize, k: KFn) -> Result<RMatrix> {
    let target = shifted_type(lambda, sign, i, j)?;
    let cols = sigma_basis(lambda, sigma)?;
    let rows = sigma_basis(&target, sigma)?;
    let mut e = vec![vec![NuPoly::zero(); cols.len()]; rows.len()];
    for (c, m) in cols.patterns.iter().enumerate() {
        let terms = match sign {
            Sign::Plus => plus_column(i, j, m, k),
            Sign::Minus => {
                plus_column(4 - j, 4 - i, &dual(m), k).into_iter().map(|(n, v)| (dual(&n), v)).collect()
            }
        };
        for (n, v) in terms {
            if !validate(&n) {
                continue;
            }
            if let Some(r) = rows.pos(&n) {
                e[r][c] += &v;
            }
        }
    }
    Ok(RMatrix { rows: rows.patterns, cols: cols.patterns, entries: e })
}

/// Checks P·E(λ) = E(λ[±ij])·R at the identity.
pub fn verify_theorem_main(sigma: &SigmaChar, lambda: &Dominant, sign: Sign, i: usize, j: usize) -> Result<bool> {
    let r = rmatrix(sigma, lambda, sign, i, j)?;
    compare_with_lhs(sigma, lambda, sign, i, j, &r)
}

/// Compares a candidate R against the evaluated left-hand side.
pub fn compare_with_lhs(sigma: &SigmaChar, lambda: &Dominant, sign: Sign, i: usize, j: usize, r: &RMatrix) -> Result<bool> {
    let lhs = theorem_lhs(sigma, lambda, sign, i, j)?;
    let target = shifted_type(lambda, sign, i, j)?;
    let rows = Basis::new(r.rows.clone());
    for (row, m2) in enumerate(&target).iter().enumerate() {
        for (c, v) in lhs[row].iter().enumerate() {
            let want = match rows.pos(m2) {
                Some(k) => r.entries[k][c].clone(),
                None => NuPoly::zero(),
            };
            if *v != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All (σ, λ, sign, i, j) instances with λ1−λ3 ≤ spread and λ3 ∈ [base, base+1]
/// for which both σ-subsets are nonempty.
pub fn sweep_instances(spread: i64) -> Vec<(SigmaChar, Dominant, Sign, usize, usize)> {
    let mut v = Vec::new();
    for base in [-1, 0] {
        for lam in Dominant::all_with_spread(spread, base) {
            for sigma in SigmaChar::all() {
                for sign in [Sign::Plus, Sign::Minus] {
                    for &(i, j) in &PAIRS {
                        let Ok(t) = shifted_type(&lam, sign, i, j) else { continue };
                        if Basis::sigma(&lam, &sigma).is_empty() || Basis::sigma(&t, &sigma).is_empty() {
                            continue;
                        }
                        v.push((sigma, lam, sign, i, j));
                    }
                }
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(a: i64, b: i64, c: i64) -> Dominant {
        Dominant::new(a, b, c).unwrap()
    }

    fn sig(s: [u8; 3]) -> SigmaChar {
        SigmaChar::new(s).unwrap()
    }

    fn x(sign: Sign, c: i64, p: usize, q_: usize) -> PVector {
        PVector::unit(sign, p, q_, q(c))
    }

    #[test]
    fn pmatrix_ex1_column_and_row() {
        for l in [2i64, 3] {
            let p = pmatrix(&dom(l - 2, l - 2, l - 2), Sign::Plus, 1, 1).unwrap();
            assert_eq!(p.entries.len(), 6);
            for (r, &(a, b)) in PAIRS.iter().enumerate() {
                assert_eq!(p.entries[r], vec![x(Sign::Plus, 12, a, b)]);
            }
            let p = pmatrix(&dom(l, l - 2, l - 2), Sign::Minus, 1, 1).unwrap();
            let want: Vec<PVector> =
                [1, 2, 2, 1, 2, 1].iter().zip(PAIRS).map(|(&c, (a, b))| x(Sign::Minus, c, a, b)).collect();
            assert_eq!(p.entries, vec![want]);
        }
    }

    #[test]
    fn rmatrix_ex1_examples() {
        let s = sig([0, 0, 0]);
        let l = 2i64;
        let r = rmatrix(&s, &dom(l - 2, l - 2, l - 2), Sign::Plus, 1, 1).unwrap();
        let col: Vec<NuPoly> = r.entries.iter().map(|row| row[0].clone()).collect();
        let want = vec![
            nu_affine(l + 1, [1, 0, 0]).scale(&q(12)),
            nu_affine(l, [0, 1, 0]).scale(&q(12)),
            nu_affine(l - 1, [0, 0, 1]).scale(&q(12)),
        ];
        assert_eq!(col, want);
        let r = rmatrix(&s, &dom(l, l - 2, l - 2), Sign::Minus, 1, 1).unwrap();
        assert_eq!(r.entries, vec![vec![nu_affine(-l - 1, [1, 0, 0]), nu_affine(-l, [0, 1, 0]), nu_affine(-l + 1, [0, 0, 1])]]);
        let r = rmatrix(&s, &dom(l, l, l - 2), Sign::Plus, 3, 3).unwrap();
        assert_eq!(r.entries, vec![vec![nu_affine(l - 1, [0, 0, 1]), nu_affine(l - 2, [0, 1, 0]), nu_affine(l - 3, [1, 0, 0])]]);
    }

    #[test]
    fn boundary_examples() {
        let lam = dom(2, 1, 0);
        for m in enumerate(&lam) {
            let w = m.weight().0;
            assert_eq!(boundary_eval(&lam, Sign::Plus, 1, 1, &m), vec![(m, nu_affine(3 + w[0], [1, 0, 0]))]);
            assert_eq!(boundary_eval(&lam, Sign::Minus, 2, 2, &m), vec![(m, nu_affine(2 - w[1], [0, 1, 0]))]);
            // X_{+12}: (M(0,0;+1)[+1], (m12−m23+1)χ⁻_{−1}), (M(0,0;+1), m11−m22+1)
            let mut want: BTreeMap<Pattern, i64> = BTreeMap::new();
            let n1 = m.shifted_raw([0; 3], [0, 0], 1, 1);
            let n2 = m.shifted_raw([0; 3], [0, 0], 1, 0);
            if validate(&n1) {
                *want.entry(n1).or_default() += (m.m12 - m.m23 + 1) * m.chi_minus(-1);
            }
            if validate(&n2) {
                *want.entry(n2).or_default() += m.m11 - m.m22 + 1;
            }
            want.retain(|_, v| *v != 0);
            let got: BTreeMap<Pattern, i64> = boundary_eval(&lam, Sign::Plus, 1, 2, &m)
                .into_iter()
                .map(|(n, v)| (n, v.as_constant().unwrap().to_integer().try_into().unwrap()))
                .collect();
            assert_eq!(got, want, "M={m}");
        }
    }

    #[test]
    fn minus_boundary_is_dual_of_plus() {
        for lam in Dominant::all_with_spread(3, -1) {
            let lh = Dominant { l: [-lam.l[2], -lam.l[1], -lam.l[0]] };
            for m in enumerate(&lam) {
                for &(p, q_) in &PAIRS {
                    let minus = boundary_eval(&lam, Sign::Minus, p, q_, &m);
                    let mut plus: Vec<_> = boundary_eval(&lh, Sign::Plus, p, q_, &dual(&m))
                        .into_iter()
                        .map(|(n, v)| (dual(&n), v.scale(&q(marking(Sign::Minus, p, q_).1))))
                        .collect();
                    let mut minus = minus;
                    minus.sort_by_key(|x| x.0);
                    plus.sort_by_key(|x| x.0);
                    assert_eq!(minus, plus);
                }
            }
        }
    }

    #[test]
    fn theorem_smallest_instance() {
        let s = sig([0, 0, 0]);
        assert!(verify_theorem_main(&s, &dom(0, 0, 0), Sign::Plus, 1, 1).unwrap());
        let r = rmatrix(&s, &dom(0, 0, 0), Sign::Plus, 1, 1).unwrap();
        assert_eq!(r.cols.len(), 1);
    }

    #[test]
    fn theorem_sweep_small() {
        for (s, lam, sign, i, j) in sweep_instances(2) {
            assert!(verify_theorem_main(&s, &lam, sign, i, j).unwrap(), "σ={s} λ={lam} {}{i}{j}", sign.symbol());
        }
    }

    #[test]
    fn mutated_k_is_detected() {
        let s = sig([0, 0, 0]);
        let lam = dom(0, 0, 0);
        let bad = |i: usize, j: usize, m: &Pattern| k_const(i, j, m) + 1;
        let r = rmatrix_with(&s, &lam, Sign::Plus, 1, 1, &bad).unwrap();
        assert!(!compare_with_lhs(&s, &lam, Sign::Plus, 1, 1, &r).unwrap());
    }

    #[test]
    fn rmatrix_entries_affine() {
        for (s, lam, sign, i, j) in sweep_instances(2) {
            for row in rmatrix(&s, &lam, sign, i, j).unwrap().entries {
                for e in row {
                    assert!(e.total_degree() <= 1);
                }
            }
        }
    }

    #[test]
    fn errors() {
        let s = sig([0, 0, 0]);
        assert!(matches!(pmatrix(&dom(0, 0, 0), Sign::Plus, 2, 2), Err(Error::ComponentAbsent(_))));
        assert!(matches!(rmatrix(&sig([1, 0, 0]), &dom(0, 0, 0), Sign::Plus, 1, 1), Err(Error::EmptySigmaSubset(_))));
        assert!(rmatrix(&s, &dom(0, 0, 0), Sign::Plus, 2, 1).is_err());
    }
}
