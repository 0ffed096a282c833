//! Verification sweeps shared by the `verify` subcommand and the acceptance suite.

use crate::arith::q;
use crate::clebsch::{
    inject_pos, inject_vec, pos_bound, pos_coeff, pos_coeff_composed, project_e1, verify_equivariance,
    Direction, InjectorSpec, Mode, LK,
};
use crate::contiguous::{sweep_instances, verify_theorem_main};
use crate::error::Result;
use crate::glmodule::{matrix_of, Gen, ModuleElement, Sign, PAIRS};
use crate::gtpattern::{enumerate, Dominant, SigmaChar};
use crate::linalg::QMat;
use crate::uea::{self, listing, UeaElement, KAPPA_ORDER};
use crate::whittaker::{chi, chi_at, chi_oracle, holonomic_system, ChiKind, KType};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::time::Instant;

/// Outcome of one sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

fn run(name: &str, body: impl FnOnce(&mut usize, &mut Vec<String>) -> Result<()>) -> SuiteReport {
    let t = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    if let Err(e) = body(&mut checked, &mut failures) {
        failures.push(e.to_string());
    }
    SuiteReport { name: name.into(), checked, failures, seconds: t.elapsed().as_secs_f64() }
}

/// Dominant weights with λ1−λ3 ≤ spread, λ3 ∈ {−1, 0}. Twisting by det
/// reduces every other λ to one of these.
pub fn weights_up_to(spread: i64) -> Vec<Dominant> {
    [-1, 0].iter().flat_map(|&b| Dominant::all_with_spread(spread, b)).collect()
}

/// [E_pq, E_rs] = δ_qr E_ps − δ_sp E_rq on every V_λ.
pub fn gl3_relations(spread: i64) -> SuiteReport {
    run("gl3-relations", |n, bad| {
        for lam in weights_up_to(spread) {
            let mats: Vec<(Gen, QMat)> = Gen::all().into_iter().map(|g| (g, matrix_of(g, &lam))).collect();
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
                    *n += 1;
                    if lhs != rhs {
                        bad.push(format!("[{a},{b}] on {lam}"));
                    }
                }
            }
        }
        Ok(())
    })
}

/// Every injector with a present target is gl(3)-equivariant.
pub fn equivariance(spread: i64) -> SuiteReport {
    run("equivariance", |n, bad| {
        for lam in weights_up_to(spread) {
            for d in Direction::all() {
                let spec = InjectorSpec::new(lam, d);
                if spec.target().is_err() {
                    continue;
                }
                let r = verify_equivariance(&spec)?;
                *n += 1;
                if !r.passed() {
                    bad.push(format!("{spec}: {} violations", r.violations.len()));
                }
            }
        }
        Ok(())
    })
}

/// proj_{e1} ∘ i_{e1} = −6·id on V_{2e1} and proj_{e1} ∘ i_{e2} = 0 on V_{e1+e2}.
pub fn lemma_constants() -> SuiteReport {
    run("lemma-constants", |n, bad| {
        let e1 = Dominant::new(1, 0, 0)?;
        let two = Dominant::new(2, 0, 0)?;
        for p in enumerate(&two) {
            let mut want = ModuleElement::zero(two);
            want.add_term(p, q(-6));
            *n += 1;
            if project_e1(&inject_vec(&e1, 1, &p)?)? != want {
                bad.push(format!("e1 direction at {p}"));
            }
        }
        for p in enumerate(&Dominant::new(1, 1, 0)?) {
            *n += 1;
            if !project_e1(&inject_vec(&e1, 2, &p)?)?.is_zero() {
                bad.push(format!("e2 direction at {p}"));
            }
        }
        Ok(())
    })
}

/// Closed e_i+e_j injectors equal the composition of two e-injectors and the
/// projector: coefficientwise on every target pattern, and as linear maps
/// whenever the intermediate weight λ+e_j is dominant.
pub fn closed_vs_composed(spread: i64) -> SuiteReport {
    run("closed-vs-composed", |n, bad| {
        for lam in weights_up_to(spread) {
            for &(i, j) in &PAIRS {
                let Ok(t) = InjectorSpec::new(lam, Direction::Pos(i, j)).target() else { continue };
                let mut e_j = [0; 3];
                e_j[j - 1] = 1;
                let genuine = lam.plus(e_j).is_ok();
                for m in enumerate(&t) {
                    for (l, k) in LK {
                        let Some(top) = pos_bound(i, j, l, k) else { continue };
                        for mm in 0..=top {
                            *n += 1;
                            if pos_coeff(i, j, l, k, mm, &m) != pos_coeff_composed(i, j, l, k, mm, &m) {
                                bad.push(format!("+{i}{j} ({l},{k}) m={mm} at {m}"));
                            }
                        }
                    }
                    if genuine {
                        *n += 1;
                        if inject_pos(&lam, i, j, &m, Mode::Closed)? != inject_pos(&lam, i, j, &m, Mode::Composed)? {
                            bad.push(format!("inject_pos +{i}{j} from {lam} at {m}"));
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

/// P^λ_{±ij} E(1) = E(1) R(Γ^λ_{±ij}) for all σ and directions.
pub fn theorem_main(spread: i64) -> SuiteReport {
    run("theorem-main", |n, bad| {
        for (sigma, lam, sign, i, j) in sweep_instances(spread) {
            *n += 1;
            if !verify_theorem_main(&sigma, &lam, sign, i, j)? {
                bad.push(format!("sigma {sigma} lambda {lam} {}{i}{j}", sign.symbol()));
            }
        }
        Ok(())
    })
}

fn ktypes(s: &SigmaChar) -> Vec<KType> {
    if s.is_uniform() {
        vec![KType::Scalar]
    } else {
        vec![KType::Up, KType::Down]
    }
}

/// chi_oracle = chi for every peripheral case over l ∈ {ε−4, ..., ε+6}.
pub fn chi_sweep() -> SuiteReport {
    run("chi-oracle", |n, bad| {
        for s in SigmaChar::all() {
            let e = s.epsilon();
            for kt in ktypes(&s) {
                for l in (e - 4..=e + 6).step_by(2) {
                    for kind in [ChiKind::C2, ChiKind::C4, ChiKind::C6, ChiKind::Tilde] {
                        if kt == KType::Scalar && kind == ChiKind::Tilde {
                            continue;
                        }
                        *n += 1;
                        if chi_oracle(&s, kt, kind, l)? != chi_at(&chi(&s, kt, kind)?, l) {
                            bad.push(format!("{s} {} l={l} {kind:?}", kt.label()));
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

/// [κ(E_pq), C_{2i}] = 0 in U(g).
pub fn k_invariance() -> SuiteReport {
    run("k-invariance", |n, bad| {
        for i in 1..=3 {
            let c = uea::c_operator(i);
            for (p, qq) in KAPPA_ORDER {
                *n += 1;
                if !UeaElement::kappa(p, qq).commutator(&c).is_zero() {
                    bad.push(format!("[K{p}{qq}, C{}]", 2 * i));
                }
            }
        }
        Ok(())
    })
}

/// Normal forms mod [n,n] equal the printed listings.
pub fn normal_order() -> SuiteReport {
    run("normal-order", |n, bad| {
        uea::assert_nn_span();
        let mut check = |name: String, a: UeaElement, b: UeaElement| {
            *n += 1;
            if a.reduce_mod_nn() != b.reduce_mod_nn() {
                bad.push(name);
            }
        };
        check("C2".into(), uea::c_operator(1), listing::c2());
        check("C4".into(), uea::c_operator(2), listing::c4());
        for s in [Sign::Plus, Sign::Minus] {
            let c = s.symbol();
            check(format!("m3{c}"), uea::m3(s), listing::m3(s));
            for (i, j) in PAIRS {
                check(format!("M{c}{i}{j}"), uea::minor(s, i, j), listing::minor(s, i, j));
            }
            for j in 1..=3 {
                for k in 1..=3 {
                    check(format!("D{c}_{j}{k}"), uea::d_operator(s, j, k), listing::d(s, j, k));
                }
            }
        }
        Ok(())
    })
}

/// The σ and l values of the holonomic-system acceptance set.
pub fn submain_cases() -> Vec<(SigmaChar, i64)> {
    let mut v = Vec::new();
    for s in [[0, 0, 0], [1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        let s = SigmaChar::new(s).expect("valid sigma");
        for l in [s.epsilon(), s.epsilon() + 2] {
            v.push((s, l));
        }
    }
    v
}

/// Mechanical holonomic systems equal the printed ones for the given cases.
pub fn submain(cases: &[(SigmaChar, i64)]) -> SuiteReport {
    run("submain", |n, bad| {
        for (s, l) in cases {
            for kt in ktypes(s) {
                *n += 1;
                match holonomic_system(s, *l, kt) {
                    Ok(sys) if sys.display_scalars.iter().all(|c| c.is_one()) => {}
                    Ok(_) => bad.push(format!("{s} {} l={l}: non-unit normalization", kt.label())),
                    Err(e) => bad.push(format!("{s} {} l={l}: {e}", kt.label())),
                }
            }
        }
        Ok(())
    })
}

/// Product form of the Weyl dimension formula.
pub fn weyl_product(l: [i64; 3]) -> i64 {
    let mut num = 1;
    let mut den = 1;
    for i in 0..3 {
        for j in i + 1..3 {
            num *= l[i] - l[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// |enumerate(λ)| against the Weyl formula for random dominant λ in [−10, 10].
pub fn dimension(count: usize, seed: u64) -> SuiteReport {
    run("dimension", |n, bad| {
        let mut rng = StdRng::seed_from_u64(seed);
        while *n < count {
            let mut l = [rng.gen_range(-10..=10), rng.gen_range(-10..=10), rng.gen_range(-10..=10)];
            l.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Dominant::new(l[0], l[1], l[2])?;
            *n += 1;
            let got = enumerate(&lam).len() as i64;
            if got != weyl_product(l) {
                bad.push(format!("{lam}: {got} patterns vs {}", weyl_product(l)));
            }
        }
        Ok(())
    })
}
