//! First syzygies of a generator list (Schreyer lifting through a
//! cofactor-tracked basis) and Fitting ideals of presentation matrices.

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::{divide, groebner_basis_with_cofactors, s_polynomial};
use crate::ideal::IdealHandle;
use crate::matrix::{minors, PolyMatrix};
use crate::poly::Polynomial;
use crate::ring::Ring;

impl IdealHandle {
    /// A matrix whose columns generate the first syzygy module of the
    /// generator list: `gens · M = 0`, and every relation among the
    /// generators is a column combination.
    ///
    /// Construction: with `G = gens·P` a reduced basis (cofactors `P`),
    /// `gens = G·Q` (division), and `T` the Schreyer syzygies of `G` from
    /// S-pair reductions, the columns of `P·T` and `I - P·Q` generate
    /// `Syz(gens)`.
    pub fn syzygy_matrix(&self) -> Result<PolyMatrix> {
        if self.ring().has_relations() {
            return Err(Error::QuotientRingUnsupported);
        }
        let ring = self.ring();
        let gens = self.gens();
        let q = gens.len();
        if q == 0 {
            return PolyMatrix::new(0, 0, Vec::new());
        }

        let (gb, cofs) = groebner_basis_with_cofactors(ring, gens, self.limits())?;
        let t = gb.polys().len();

        // P: q x t, column j holds the coordinates of basis element j
        let mut p = PolyMatrix::zero(q, t);
        for (j, row) in cofs.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                p.set(i, j, c.clone());
            }
        }

        // Q: t x q from dividing each generator by the basis (remainder 0)
        let mut qmat = PolyMatrix::zero(t, q);
        for (i, g) in gens.iter().enumerate() {
            let (quots, rem) = divide(ring, g, gb.polys());
            debug_assert!(rem.is_zero());
            for (j, quot) in quots.into_iter().enumerate() {
                qmat.set(j, i, quot);
            }
        }

        // T: Schreyer syzygies of the reduced basis, one column per pair
        let mut t_cols: Vec<Vec<Polynomial>> = Vec::new();
        for i in 0..t {
            for j in (i + 1)..t {
                let gi = &gb.polys()[i];
                let gj = &gb.polys()[j];
                let mi = gi.leading_monomial().unwrap();
                let mj = gj.leading_monomial().unwrap();
                let lcm = mi.lcm(mj);
                let s = s_polynomial(ring, gi, gj);
                let (quots, rem) = divide(ring, &s, gb.polys());
                if !rem.is_zero() {
                    return Err(Error::Internal(
                        "S-polynomial of a reduced basis did not reduce to zero".into(),
                    ));
                }
                let mut col = vec![Polynomial::zero(); t];
                // basis elements are monic: multipliers are plain monomials
                let mono_i = lcm.try_div(mi).unwrap();
                let mono_j = lcm.try_div(mj).unwrap();
                col[i] = ring.add(&col[i], &ring.monomial_poly(mono_i)?);
                col[j] = ring.sub(&col[j], &ring.monomial_poly(mono_j)?);
                for (k, quot) in quots.into_iter().enumerate() {
                    col[k] = ring.sub(&col[k], &quot);
                }
                t_cols.push(col);
            }
        }

        let mut columns: Vec<Vec<Polynomial>> = Vec::new();
        // P·T columns
        for col in &t_cols {
            let mut out = vec![Polynomial::zero(); q];
            for (i, entry) in out.iter_mut().enumerate() {
                for (k, c) in col.iter().enumerate() {
                    *entry = ring.add(entry, &ring.mul(p.get(i, k), c));
                }
            }
            columns.push(out);
        }
        // I - P·Q columns
        let pq = p.matmul(ring, &qmat)?;
        for j in 0..q {
            let mut out = vec![Polynomial::zero(); q];
            for (i, entry) in out.iter_mut().enumerate() {
                let delta = if i == j {
                    ring.one_poly()
                } else {
                    Polynomial::zero()
                };
                *entry = ring.sub(&delta, pq.get(i, j));
            }
            columns.push(out);
        }

        // drop zero columns, normalize scaling, dedupe exact repeats
        let mut normed: Vec<Vec<Polynomial>> = Vec::new();
        for col in columns {
            if col.iter().all(|e| e.is_zero()) {
                continue;
            }
            let col = normalize_column(ring, col);
            if !normed.contains(&col) {
                normed.push(col);
            }
        }

        let cols = normed.len();
        let mut m = PolyMatrix::zero(q, cols);
        for (j, col) in normed.into_iter().enumerate() {
            for (i, entry) in col.into_iter().enumerate() {
                m.set(i, j, entry);
            }
        }

        // the defining identity of a syzygy matrix
        for j in 0..m.cols() {
            let mut acc = Polynomial::zero();
            for (i, g) in gens.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(g, m.get(i, j)));
            }
            if !acc.is_zero() {
                return Err(Error::Internal("syzygy column does not annihilate".into()));
            }
        }
        Ok(m)
    }
}

/// Scales a column so the first nonzero entry is integer-cleared with a
/// positive leading coefficient (unit scaling only).
fn normalize_column(ring: &Ring, col: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = col.iter().find(|e| !e.is_zero()) else {
        return col;
    };
    let normed = ring.normalize_generator(first);
    // factor = normed.lead / first.lead
    let a = &normed.leading().unwrap().coeff;
    let b = &first.leading().unwrap().coeff;
    let factor = a / b;
    if factor.is_one() {
        return col;
    }
    col.iter().map(|e| ring.scale(e, &factor)).collect()
}

/// The ideal of `k x k` minors of `m`, with the convention that the 0-th
/// Fitting ideal of any matrix is the unit ideal.
pub fn fitting_ideal(
    ring: &Arc<Ring>,
    m: &PolyMatrix,
    k: usize,
) -> Result<IdealHandle> {
    if k == 0 {
        return Ok(IdealHandle::unit(ring));
    }
    if k > m.rows().min(m.cols()) {
        return Err(Error::OutOfRange(format!(
            "fitting index {k} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let gens = minors(ring, m, k)?;
    IdealHandle::new(Arc::clone(ring), gens)
}
