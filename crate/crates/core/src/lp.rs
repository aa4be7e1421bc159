//! Exact rational feasibility for Newton-polyhedron membership.
//!
//! The decision problem: given generator exponent vectors `v_1..v_m` and a
//! point `a`, do rationals `λ_i ≥ 0` exist with `Σλ_i = 1` and
//! `Σλ_i v_i ≤ a` componentwise?
//!
//! Two independent deciders are provided: a phase-one simplex with Bland's
//! rule (no cycling) used as the primary route, and Fourier-Motzkin
//! elimination kept as a cross-check for small systems.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::Coeff;

fn q(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

fn qu(n: u32) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// Phase-one simplex feasibility with Bland's rule.
///
/// Columns: `λ_1..λ_m`, one slack per coordinate, one artificial for the
/// `Σλ = 1` row. Feasible iff the artificial can be driven to zero.
pub fn feasible_simplex(generators: &[Vec<u32>], point: &[u32]) -> bool {
    let m = generators.len();
    let n = point.len();
    debug_assert!(generators.iter().all(|g| g.len() == n));
    if m == 0 {
        return false;
    }
    let ncols = m + n + 1; // λ's, slacks, artificial
    let art = m + n;
    let nrows = n + 1;

    // row 0: Σλ + art = 1; rows 1..=n: Σ v_i[j] λ_i + s_j = a_j
    let mut tab: Vec<Vec<Coeff>> = Vec::with_capacity(nrows);
    let mut rhs: Vec<Coeff> = Vec::with_capacity(nrows);
    {
        let mut row = vec![Coeff::zero(); ncols];
        for entry in row.iter_mut().take(m) {
            *entry = Coeff::one();
        }
        row[art] = Coeff::one();
        tab.push(row);
        rhs.push(Coeff::one());
    }
    for j in 0..n {
        let mut row = vec![Coeff::zero(); ncols];
        for (i, g) in generators.iter().enumerate() {
            row[i] = qu(g[j]);
        }
        row[m + j] = Coeff::one();
        tab.push(row);
        rhs.push(qu(point[j]));
    }
    let mut basis: Vec<usize> = Vec::with_capacity(nrows);
    basis.push(art);
    for j in 0..n {
        basis.push(m + j);
    }

    // cost vector: minimize the artificial variable
    let cost = |col: usize| -> Coeff {
        if col == art {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    };

    loop {
        // reduced costs priced against the current basis; `col` walks
        // columns of the 2-D tableau, not rows
        let mut entering = None;
        #[allow(clippy::needless_range_loop)]
        for col in 0..ncols {
            if basis.contains(&col) {
                continue;
            }
            let mut red = cost(col);
            for r in 0..nrows {
                let cb = cost(basis[r]);
                if !cb.is_zero() {
                    red -= cb * tab[r][col].clone();
                }
            }
            if red.is_negative() {
                entering = Some(col); // Bland: first negative index
                break;
            }
        }
        let Some(col) = entering else { break };

        // ratio test, ties broken by the smallest basis variable index
        let mut leave: Option<(usize, Coeff)> = None;
        for r in 0..nrows {
            if tab[r][col].is_positive() {
                let ratio = rhs[r].clone() / tab[r][col].clone();
                match &leave {
                    None => leave = Some((r, ratio)),
                    Some((br, best)) => {
                        if ratio < *best || (ratio == *best && basis[r] < basis[*br]) {
                            leave = Some((r, ratio));
                        }
                    }
                }
            }
        }
        let Some((row, _)) = leave else {
            // phase one is bounded below by zero; no leaving row means the
            // entering column cannot improve anything
            return false;
        };

        // pivot
        let piv = tab[row][col].clone();
        for cell in tab[row].iter_mut() {
            *cell = cell.clone() / piv.clone();
        }
        rhs[row] = rhs[row].clone() / piv;
        let pivot_row = tab[row].clone();
        let pivot_rhs = rhs[row].clone();
        for r in 0..nrows {
            if r == row || tab[r][col].is_zero() {
                continue;
            }
            let factor = tab[r][col].clone();
            for (cell, pcell) in tab[r].iter_mut().zip(&pivot_row) {
                *cell = cell.clone() - factor.clone() * pcell.clone();
            }
            rhs[r] = rhs[r].clone() - factor * pivot_rhs.clone();
        }
        basis[row] = col;
    }

    // objective value = rhs of the artificial row, if still basic
    let mut objective = Coeff::zero();
    for r in 0..nrows {
        if basis[r] == art {
            objective += rhs[r].clone();
        }
    }
    objective.is_zero()
}

/// One linear inequality `Σ coeffs[i] λ_i ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Ineq {
    coeffs: Vec<Coeff>,
    rhs: Coeff,
}

impl Ineq {
    fn normalize(mut self) -> Ineq {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let scale = c.abs();
            for e in self.coeffs.iter_mut() {
                *e = e.clone() / scale.clone();
            }
            self.rhs /= scale;
        }
        self
    }
}

/// Fourier-Motzkin feasibility over exact rationals.
pub fn feasible_fourier_motzkin(generators: &[Vec<u32>], point: &[u32]) -> bool {
    let m = generators.len();
    let n = point.len();
    if m == 0 {
        return false;
    }
    let mut system: Vec<Ineq> = Vec::new();
    for j in 0..n {
        system.push(Ineq {
            coeffs: generators.iter().map(|g| qu(g[j])).collect(),
            rhs: qu(point[j]),
        });
    }
    system.push(Ineq {
        coeffs: vec![Coeff::one(); m],
        rhs: Coeff::one(),
    });
    system.push(Ineq {
        coeffs: vec![-Coeff::one(); m],
        rhs: -Coeff::one(),
    });
    for i in 0..m {
        let mut coeffs = vec![Coeff::zero(); m];
        coeffs[i] = q(-1);
        system.push(Ineq {
            coeffs,
            rhs: Coeff::zero(),
        });
    }

    for var in 0..m {
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for ineq in system {
            let c = &ineq.coeffs[var];
            if c.is_zero() {
                zero.push(ineq);
            } else if c.is_positive() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        let mut next = zero;
        for p in &pos {
            for ng in &neg {
                let cp = p.coeffs[var].clone();
                let cn = -ng.coeffs[var].clone(); // positive
                let mut coeffs = Vec::with_capacity(m);
                for k in 0..m {
                    coeffs.push(
                        cn.clone() * p.coeffs[k].clone() + cp.clone() * ng.coeffs[k].clone(),
                    );
                }
                debug_assert!(coeffs[var].is_zero());
                let rhs = cn * p.rhs.clone() + cp * ng.rhs.clone();
                let ineq = Ineq { coeffs, rhs }.normalize();
                if !next.contains(&ineq) {
                    next.push(ineq);
                }
            }
        }
        system = next;
    }

    system.iter().all(|ineq| !ineq.rhs.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(gens: &[Vec<u32>], a: &[u32]) -> bool {
        let s = feasible_simplex(gens, a);
        let f = feasible_fourier_motzkin(gens, a);
        assert_eq!(
            s, f,
            "simplex and Fourier-Motzkin disagree on {gens:?} {a:?}"
        );
        s
    }

    #[test]
    fn membership_with_explicit_combination() {
        // λ = (1/2, 0, 1/2) gives (1, 5/2) ≤ (1, 3)
        let gens = vec![vec![2, 0], vec![1, 4], vec![0, 5]];
        assert!(both(&gens, &[1, 3]));
    }

    #[test]
    fn generators_belong_to_their_own_hull() {
        let gens = vec![vec![2, 0], vec![1, 4], vec![0, 5]];
        for g in &gens {
            assert!(both(&gens, g));
        }
    }

    #[test]
    fn empty_intersection_of_intervals() {
        // 2λ ≤ 1 and 5(1-λ) ≤ 2 have no common λ
        let gens = vec![vec![2, 0], vec![0, 5]];
        assert!(!both(&gens, &[1, 2]));
    }

    #[test]
    fn tight_rational_combination() {
        // hand solve on the segment (6,1)-(1,6): 6λ + (1-λ) ≤ 2 forces
        // λ ≤ 1/5 while λ + 6(1-λ) ≤ 5 forces λ ≥ 1/5, so (2,5) is tight
        let gens = vec![vec![6, 1], vec![1, 6]];
        assert!(both(&gens, &[2, 5]));
        assert!(!both(&gens, &[2, 4]));
    }

    #[test]
    fn agreement_on_a_sweep() {
        let gens = vec![vec![3, 0, 1], vec![0, 4, 0], vec![1, 1, 2]];
        for x in 0..4 {
            for y in 0..5 {
                for z in 0..3 {
                    both(&gens, &[x, y, z]);
                }
            }
        }
    }
}
