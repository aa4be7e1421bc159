//! Krull dimension of `R/I` via maximal independent variable sets against
//! the leading-term ideal, and the derived height.

use crate::error::{Error, Result};
use crate::ideal::IdealHandle;

impl IdealHandle {
    /// `dim(R/I)`: the size of the largest variable subset `S` such that no
    /// leading monomial of the reduced basis is supported inside `S`.
    /// Relations are adjoined, so over a quotient ring this is the dimension
    /// of `(S/rel)/I`. The unit ideal has dimension -1.
    pub fn dimension(&self) -> Result<i64> {
        if let Some(d) = self.dim.get() {
            return Ok(*d);
        }
        let gb = self.gb()?;
        let d = if gb.is_unit() {
            -1
        } else {
            let n = self.ring().nvars();
            if n > 24 {
                return Err(Error::OutOfRange(format!(
                    "dimension computation supports at most 24 variables, ring has {n}"
                )));
            }
            let lms = gb.leading_monomials();
            let supports: Vec<u32> = lms
                .iter()
                .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
                .collect();
            let mut best = 0u32;
            for mask in 0u32..(1u32 << n) {
                if mask.count_ones() <= best {
                    continue;
                }
                // independent iff no leading monomial lives entirely in mask
                if supports.iter().all(|s| s & !mask != 0) {
                    best = mask.count_ones();
                }
            }
            best as i64
        };
        let _ = self.dim.set(d);
        Ok(d)
    }

    /// Codimension in a polynomial ring: `#vars - dim(R/I)`. For the unit
    /// ideal the convention is `#vars`. Quotient rings are rejected.
    pub fn height(&self) -> Result<usize> {
        if self.ring().has_relations() {
            return Err(Error::QuotientRingUnsupported);
        }
        if self.is_unit_ideal()? {
            return Ok(self.ring().nvars());
        }
        let d = self.dimension()?;
        Ok(self.ring().nvars() - d as usize)
    }
}

#[cfg(test)]
mod tests {
    use crate::ideal::IdealHandle;
    use crate::ring::{MonomialOrder, Ring};

    #[test]
    fn dimension_of_a_line_in_the_plane() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = IdealHandle::parse(&r, &["x"]).unwrap();
        assert_eq!(i.dimension().unwrap(), 1);
        assert_eq!(i.height().unwrap(), 1);
    }

    #[test]
    fn dimension_of_unit_and_zero_ideals() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        assert_eq!(IdealHandle::unit(&r).dimension().unwrap(), -1);
        assert_eq!(IdealHandle::unit(&r).height().unwrap(), 2);
        assert_eq!(IdealHandle::zero(&r).dimension().unwrap(), 2);
    }

    #[test]
    fn dimension_sees_through_generators() {
        // (x^2, xy) cuts out the y-axis with an embedded point: dim 1
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = IdealHandle::parse(&r, &["x^2", "x*y"]).unwrap();
        assert_eq!(i.dimension().unwrap(), 1);
    }

    #[test]
    fn zero_dimensional_ideal() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = IdealHandle::parse(&r, &["x^2", "x*y^4", "y^5"]).unwrap();
        assert_eq!(i.dimension().unwrap(), 0);
        assert_eq!(i.height().unwrap(), 2);
    }

    #[test]
    fn height_rejects_quotient_rings() {
        let r = Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap();
        let rel = crate::parse::parse_polynomial(&r, "x^2-y").unwrap();
        let rq = r.quotient(vec![rel]).unwrap();
        let i = IdealHandle::parse(&rq, &["x"]).unwrap();
        assert!(i.height().is_err());
        // dimension still works by adjoining the relation
        assert_eq!(i.dimension().unwrap(), 0);
    }
}
