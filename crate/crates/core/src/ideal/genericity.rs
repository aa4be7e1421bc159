//! Height-unmixedness via linkage against a random complete intersection,
//! and the generic-complete-intersection test through Fitting ideals of a
//! presentation. Both are restricted to polynomial rings over a field.

use crate::error::{Error, Result};
use crate::ideal::{fitting_ideal, IdealHandle};
use crate::poly::Polynomial;
use crate::rng::SplitMix64;

const CI_ATTEMPTS: usize = 20;

impl IdealHandle {
    /// Height-unmixedness test: draw `m = height(I)` random small-integer
    /// combinations of the generators until they form a height-`m` complete
    /// intersection `J`, then decide `I = J : (J : I)`. Deterministic for a
    /// fixed seed; coefficients are drawn from {-3,...,3} \ {0}.
    pub fn is_unmixed(&self, seed: u64) -> Result<bool> {
        if self.ring().has_relations() {
            return Err(Error::QuotientRingUnsupported);
        }
        if self.is_zero_ideal() {
            return Ok(true);
        }
        let m = self.height()?;
        if m == 0 {
            return Err(Error::Internal(
                "nonzero ideal of height 0 over a domain".into(),
            ));
        }
        let mut rng = SplitMix64::new(seed);
        for _ in 0..CI_ATTEMPTS {
            let combos: Vec<Polynomial> = (0..m)
                .map(|_| {
                    let mut acc = Polynomial::zero();
                    for g in self.gens() {
                        let c = self.ring().int_constant(rng.nonzero_in(3));
                        acc = self.ring().add(&acc, &self.ring().mul(&c, g));
                    }
                    acc
                })
                .collect();
            let j = self.derived(combos)?;
            if j.gens().len() != m {
                continue;
            }
            if j.height()? != m {
                continue;
            }
            let link = j.colon(self)?;
            let back = j.colon(&link)?;
            return self.equal(&back);
        }
        Err(Error::CiSearchFailed {
            height: m,
            attempts: CI_ATTEMPTS,
        })
    }

    /// Generic-complete-intersection test: with `φ` a syzygy matrix of the
    /// `q` generators and `m = height(I)`, decides whether the Fitting ideal
    /// of `(q - m) x (q - m)` minors has height at least `m + 1`. A unit
    /// Fitting ideal (in particular `q = m`, a global complete intersection)
    /// passes outright.
    pub fn is_generically_ci(&self) -> Result<bool> {
        if self.ring().has_relations() {
            return Err(Error::QuotientRingUnsupported);
        }
        if self.is_zero_ideal() {
            return Ok(true);
        }
        let m = self.height()?;
        let q = self.gens().len();
        if q < m {
            return Err(Error::Internal(
                "height exceeds the number of generators".into(),
            ));
        }
        let k = q - m;
        if k == 0 {
            return Ok(true);
        }
        let syz = self.syzygy_matrix()?;
        if k > syz.rows().min(syz.cols()) {
            // no k x k minors: the Fitting ideal is zero
            return Ok(false);
        }
        let fit = fitting_ideal(self.ring(), &syz, k)?;
        if fit.is_zero_ideal() {
            return Ok(false);
        }
        if fit.is_unit_ideal()? {
            return Ok(true);
        }
        Ok(fit.height()? > m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, Ring};
    use std::sync::Arc;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> IdealHandle {
        IdealHandle::parse(ring, gens).unwrap()
    }

    #[test]
    fn primary_to_the_maximal_ideal_is_unmixed() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        assert!(i.is_unmixed(1).unwrap());
    }

    #[test]
    fn mixed_heights_fail_unmixedness() {
        // (x) ∩ (y, z) = (xy, xz) mixes components of heights 1 and 2
        let r = Ring::new(vec!["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let i = ideal(&r, &["x*y", "x*z"]);
        assert!(!i.is_unmixed(1).unwrap());
    }

    #[test]
    fn complete_intersection_is_generically_ci() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        assert!(ideal(&r, &["x", "y^2"]).is_generically_ci().unwrap());
    }

    #[test]
    fn fat_point_with_thin_syzygies_is_not() {
        // I_1 of the syzygy matrix is (x, y), of height 2 < height(I) + 1 = 3
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        assert!(!i.is_generically_ci().unwrap());
    }

    #[test]
    fn unmixed_test_is_deterministic_per_seed() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = ideal(&r, &["x^2", "y^2"]);
        assert_eq!(i.is_unmixed(7).unwrap(), i.is_unmixed(7).unwrap());
        assert!(i.is_unmixed(7).unwrap());
    }

    #[test]
    fn quotient_rings_are_rejected() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let rel = crate::parse::parse_polynomial(&r, "x^2-y").unwrap();
        let rq = r.quotient(vec![rel]).unwrap();
        let i = ideal(&rq, &["x"]);
        assert!(matches!(
            i.is_unmixed(1),
            Err(Error::QuotientRingUnsupported)
        ));
        assert!(matches!(
            i.is_generically_ci(),
            Err(Error::QuotientRingUnsupported)
        ));
    }
}
