//! Radical membership (Rabinowitsch trick), zero-dimensional radicals via
//! squarefree minimal polynomials, and verification of supplied radical
//! candidates.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{divide, groebner_basis, normal_form};
use crate::ideal::{extend_front, IdealHandle};
use crate::poly::Polynomial;
use crate::ring::{fresh_name, name_map, transport, Ring};
#[cfg(test)]
use crate::ring::MonomialOrder;

/// Outcome of checking a caller-supplied radical candidate `C` for `I`.
///
/// `VerifiedPartial` certifies `I ⊆ C ⊆ √I`; it does not certify that `C`
/// is radical, hence "partial".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalCheck {
    VerifiedPartial,
    Refuted { witness: String, reason: String },
}

impl RadicalCheck {
    pub fn is_refuted(&self) -> bool {
        matches!(self, RadicalCheck::Refuted { .. })
    }
}

impl IdealHandle {
    /// True iff `f ∈ √I`, decided as `1 ∈ I + (1 - z*f)` in the ring
    /// extended by a fresh variable `z` (relations adjoined).
    pub fn radical_membership(&self, f: &Polynomial) -> Result<bool> {
        self.ring().check_poly(f)?;
        let z_name = fresh_name("z", self.ring().vars());
        let (ext, to_ext) = extend_front(self.ring(), &[&z_name])?;
        let mut gens = Vec::with_capacity(self.gens().len() + 2);
        for g in self.gens().iter().chain(self.ring().relations()) {
            gens.push(transport(g, self.ring(), &ext, &to_ext)?);
        }
        let zf = ext.mul(&ext.var_poly(0), &transport(f, self.ring(), &ext, &to_ext)?);
        gens.push(ext.sub(&ext.one_poly(), &zf));
        let gb = groebner_basis(&ext, &gens, self.limits())?;
        Ok(gb.is_unit())
    }

    /// The radical of a zero-dimensional ideal in characteristic 0:
    /// `I` plus the squarefree part of the minimal polynomial of each
    /// variable (obtained by elimination). Generators of the result are the
    /// reduced basis.
    pub fn radical_zero_dim(&self) -> Result<IdealHandle> {
        if self.ring().characteristic() != 0 {
            return Err(Error::CharacteristicNotZero);
        }
        let d = self.dimension()?;
        if d > 0 {
            return Err(Error::PositiveDimension(d));
        }
        if d < 0 {
            // unit ideal is its own radical
            return Ok(self.clone());
        }
        let mut gens = self.gens().to_vec();
        for var in self.ring().vars() {
            let min_poly_ideal = self.eliminate(&[var.as_str()])?;
            let r1 = Arc::clone(min_poly_ideal.ring());
            let polys = min_poly_ideal.gb()?.polys().to_vec();
            if polys.len() != 1 {
                return Err(Error::Internal(format!(
                    "zero-dimensional ideal contracted to {} generators in k[{var}]",
                    polys.len()
                )));
            }
            let g = &polys[0];
            let sq = squarefree_part(&r1, g)?;
            let back = name_map(&r1, self.ring());
            gens.push(transport(&sq, &r1, self.ring(), &back)?);
        }
        let with_parts = self.derived(gens)?;
        let reduced = with_parts.gb()?.polys().to_vec();
        self.derived(reduced)
    }

    /// Checks a radical candidate `cand` by (i) `I ⊆ cand` membership of
    /// every generator and (ii) every generator of `cand` lying in `√I` by
    /// radical membership.
    pub fn verify_radical_candidate(&self, cand: &IdealHandle) -> Result<RadicalCheck> {
        self.ring().same_ring(cand.ring())?;
        for g in self.gens() {
            if !cand.member(g)? {
                return Ok(RadicalCheck::Refuted {
                    witness: self.ring().poly_string(g),
                    reason: "generator of the ideal is not in the candidate".into(),
                });
            }
        }
        for g in cand.gens() {
            if !self.radical_membership(g)? {
                return Ok(RadicalCheck::Refuted {
                    witness: self.ring().poly_string(g),
                    reason: "candidate generator is not in the radical".into(),
                });
            }
        }
        Ok(RadicalCheck::VerifiedPartial)
    }
}

/// Monic gcd of two univariate polynomials by the Euclidean algorithm.
pub(crate) fn univariate_gcd(r1: &Ring, a: &Polynomial, b: &Polynomial) -> Polynomial {
    debug_assert_eq!(r1.nvars(), 1);
    let mut x = r1.monic(a);
    let mut y = r1.monic(b);
    while !y.is_zero() {
        let rem = normal_form(r1, &x, std::slice::from_ref(&y));
        x = y;
        y = r1.monic(&rem);
    }
    r1.monic(&x)
}

/// `g / gcd(g, g')`: the squarefree part of a univariate polynomial over a
/// characteristic-0 field.
pub(crate) fn squarefree_part(r1: &Ring, g: &Polynomial) -> Result<Polynomial> {
    if r1.characteristic() != 0 {
        return Err(Error::CharacteristicNotZero);
    }
    let dg = r1.partial_derivative(g, 0)?;
    if dg.is_zero() {
        // characteristic 0: only constants have zero derivative
        return Ok(r1.monic(g));
    }
    let d = univariate_gcd(r1, g, &dg);
    let (q, rem) = divide(r1, &r1.monic(g), std::slice::from_ref(&d));
    if !rem.is_zero() {
        return Err(Error::Internal("gcd does not divide its argument".into()));
    }
    Ok(r1.monic(&q.into_iter().next().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn qxy() -> Arc<Ring> {
        Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> IdealHandle {
        IdealHandle::parse(ring, gens).unwrap()
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn radical_membership_basics() {
        let r = qxy();
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_membership(&p(&r, "x")).unwrap());
        let j = ideal(&r, &["y"]);
        assert!(!j.radical_membership(&p(&r, "x")).unwrap());
    }

    #[test]
    fn zero_dim_radical_of_pure_powers() {
        // squarefree parts of x^2 and y^3 are x and y
        let r = qxy();
        let i = ideal(&r, &["x^2", "y^3"]);
        let rad = i.radical_zero_dim().unwrap();
        assert!(rad.equal(&ideal(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn zero_dim_radical_of_radical_ideal_is_itself() {
        let r1 = Ring::new(vec!["x"], MonomialOrder::GrevLex).unwrap();
        let i = IdealHandle::parse(&r1, &["x-1"]).unwrap();
        let rad = i.radical_zero_dim().unwrap();
        assert!(rad.equal(&i).unwrap());
    }

    #[test]
    fn zero_dim_radical_rejects_positive_dimension() {
        let r = qxy();
        let i = ideal(&r, &["x"]);
        assert!(matches!(
            i.radical_zero_dim(),
            Err(Error::PositiveDimension(1))
        ));
    }

    #[test]
    fn radical_zero_dim_is_idempotent() {
        let r = qxy();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        let rad = i.radical_zero_dim().unwrap();
        assert!(rad.equal(&ideal(&r, &["x", "y"])).unwrap());
        assert!(rad.radical_zero_dim().unwrap().equal(&rad).unwrap());
    }

    #[test]
    fn candidate_verification() {
        let r = qxy();
        let i = ideal(&r, &["x^2", "y^2"]);
        let good = ideal(&r, &["x", "y"]);
        assert_eq!(
            i.verify_radical_candidate(&good).unwrap(),
            RadicalCheck::VerifiedPartial
        );
        // radical ideal verifies against itself
        let j = ideal(&r, &["x"]);
        assert_eq!(
            j.verify_radical_candidate(&j).unwrap(),
            RadicalCheck::VerifiedPartial
        );
        // (x) is not inside the radical of (y)
        let bad = j.verify_radical_candidate(&ideal(&r, &["y"])).unwrap();
        assert!(bad.is_refuted());
    }

    #[test]
    fn univariate_gcd_and_squarefree() {
        let r1 = Ring::new(vec!["x"], MonomialOrder::GrevLex).unwrap();
        let g = p(&r1, "x^3+2*x^2+x"); // x (x+1)^2
        let sq = squarefree_part(&r1, &g).unwrap();
        assert_eq!(sq, p(&r1, "x^2+x"));
        let gcd = univariate_gcd(&r1, &p(&r1, "x^2-1"), &p(&r1, "x^2-2*x+1"));
        assert_eq!(gcd, p(&r1, "x-1"));
    }
}
