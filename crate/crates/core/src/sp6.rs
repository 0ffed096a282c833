//! 6×6 complex matrix realization of sp(3,C).

use crate::arith::{q, qf, GaussianRational as G};
use std::ops::{Add, Mul, Sub};

/// Dense 6×6 matrix over Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat6(pub Vec<G>);

impl Mat6 {
    pub fn zero() -> Self {
        Mat6(vec![G::zero(); 36])
    }

    pub fn get(&self, r: usize, c: usize) -> &G {
        &self.0[6 * r + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: G) {
        self.0[6 * r + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &G) -> Self {
        Mat6(self.0.iter().map(|x| x * c).collect())
    }

    /// Assemble from four 3×3 blocks given as closures.
    fn blocks(f: impl Fn(usize, usize, usize, usize) -> G) -> Self {
        let mut m = Mat6::zero();
        for br in 0..2 {
            for bc in 0..2 {
                for i in 0..3 {
                    for j in 0..3 {
                        m.set(3 * br + i, 3 * bc + j, f(br, bc, i, j));
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Mat6::zero();
        for r in 0..6 {
            for c in 0..6 {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn bracket(&self, o: &Mat6) -> Mat6 {
        &(self * o) - &(o * self)
    }
}

impl Add for &Mat6 {
    type Output = Mat6;
    fn add(self, o: &Mat6) -> Mat6 {
        Mat6(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Mat6 {
    type Output = Mat6;
    fn sub(self, o: &Mat6) -> Mat6 {
        Mat6(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Mat6 {
    type Output = Mat6;
    fn mul(self, o: &Mat6) -> Mat6 {
        let mut m = Mat6::zero();
        for r in 0..6 {
            for c in 0..6 {
                let mut s = G::zero();
                for k in 0..6 {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    s += &(a * o.get(k, c));
                }
                m.set(r, c, s);
            }
        }
        m
    }
}

/// 3×3 matrix unit entry: E_{pq}[i][j] with 1-based p,q and 0-based i,j.
fn unit(p: usize, q_: usize, i: usize, j: usize) -> i64 {
    (i + 1 == p && j + 1 == q_) as i64
}

/// κ(E_pq) for the complexified isomorphism u(3) → k.
pub fn kappa(p: usize, q_: usize) -> Mat6 {
    Mat6::blocks(|br, bc, i, j| {
        let anti = qf(unit(p, q_, i, j) - unit(q_, p, i, j), 2);
        let sym = qf(unit(p, q_, i, j) + unit(q_, p, i, j), 2);
        match (br, bc) {
            (0, 0) | (1, 1) => G::real(anti),
            (0, 1) => G::new(q(0), -sym),
            _ => G::new(q(0), sym),
        }
    })
}

/// X_{±ij} = p_±((E_ij + E_ji)/2), with `plus` selecting the sign.
pub fn x_pm(plus: bool, i: usize, j: usize) -> Mat6 {
    let s = if plus { 1 } else { -1 };
    Mat6::blocks(|br, bc, a, b| {
        let x = qf(unit(i, j, a, b) + unit(j, i, a, b), 2);
        match (br, bc) {
            (0, 0) => G::real(x),
            (1, 1) => G::real(-x),
            _ => G::new(q(0), x * q(s)),
        }
    })
}

/// H_i = diag with e_i in the first block and −e_i in the second.
pub fn h(i: usize) -> Mat6 {
    let mut m = Mat6::zero();
    m.set(i - 1, i - 1, G::int(1));
    m.set(i + 2, i + 2, G::int(-1));
    m
}

/// E_{2e_i}.
pub fn e_2e(i: usize) -> Mat6 {
    Mat6::blocks(|br, bc, a, b| {
        if (br, bc) == (0, 1) {
            G::int(unit(i, i, a, b))
        } else {
            G::zero()
        }
    })
}

/// E_{e_j+e_k}, j < k.
pub fn e_sum(j: usize, k: usize) -> Mat6 {
    Mat6::blocks(|br, bc, a, b| {
        if (br, bc) == (0, 1) {
            G::int(unit(j, k, a, b) + unit(k, j, a, b))
        } else {
            G::zero()
        }
    })
}

/// E_{e_j−e_k}, j < k.
pub fn e_diff(j: usize, k: usize) -> Mat6 {
    Mat6::blocks(|br, bc, a, b| match (br, bc) {
        (0, 0) => G::int(unit(j, k, a, b)),
        (1, 1) => G::int(-unit(k, j, a, b)),
        _ => G::zero(),
    })
}

/// E_{−α} = θ(E_α) = −E_αᵀ.
pub fn negative(e: &Mat6) -> Mat6 {
    e.transpose().scale(&G::int(-1))
}

/// J_3 X + Xᵀ J_3 = 0.
pub fn in_sp6(x: &Mat6) -> bool {
    let mut j = Mat6::zero();
    for i in 0..3 {
        j.set(i, i + 3, G::int(1));
        j.set(i + 3, i, G::int(-1));
    }
    (&(&j * x) + &(&x.transpose() * &j)).is_zero()
}
