//! The ideal calculus: handles with cached reduced bases, membership and
//! equality, sum/product/power, intersection, colon, saturation, and
//! elimination.
//!
//! Quotient-ring convention: a ring may carry relations; every ideal-level
//! computation adjoins them to the generators and states answers modulo the
//! relations. This realizes preimage arithmetic in `R = S/rel` without a
//! separate quotient-ring engine.

mod dimension;
mod genericity;
mod radical;
mod syzygy;

pub use radical::RadicalCheck;
pub use syzygy::fitting_ideal;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{divide, groebner_basis, GroebnerBasis, GroebnerConfig};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::{fresh_name, transport, MonomialOrder, Ring};

/// A generator list bound to a ring, with lazily cached reduced Groebner
/// basis and dimension. Immutable after construction; the caches are
/// write-once and safe to share across threads.
#[derive(Debug)]
pub struct IdealHandle {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    limits: GroebnerConfig,
    gb: OnceLock<GroebnerBasis>,
    dim: OnceLock<i64>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        let dim = OnceLock::new();
        if let Some(d) = self.dim.get() {
            let _ = dim.set(*d);
        }
        IdealHandle {
            ring: Arc::clone(&self.ring),
            gens: self.gens.clone(),
            limits: self.limits,
            gb,
            dim,
        }
    }
}

impl IdealHandle {
    /// Builds a handle; zero generators are dropped and the rest are
    /// scalar-normalized (integer-cleared, positive leading coefficient).
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        let mut cleaned = Vec::with_capacity(gens.len());
        for g in gens {
            ring.check_poly(&g)?;
            if !g.is_zero() {
                cleaned.push(ring.normalize_generator(&g));
            }
        }
        Ok(IdealHandle {
            ring,
            gens: cleaned,
            limits: GroebnerConfig::default(),
            gb: OnceLock::new(),
            dim: OnceLock::new(),
        })
    }

    /// Convenience constructor from expression strings.
    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<IdealHandle> {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(ring, s).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(Arc::clone(ring), polys)
    }

    pub fn unit(ring: &Arc<Ring>) -> IdealHandle {
        let one = ring.one_poly();
        IdealHandle::new(Arc::clone(ring), vec![one]).expect("unit ideal")
    }

    pub fn zero(ring: &Arc<Ring>) -> IdealHandle {
        IdealHandle::new(Arc::clone(ring), Vec::new()).expect("zero ideal")
    }

    pub fn with_limits(mut self, limits: GroebnerConfig) -> IdealHandle {
        self.limits = limits;
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn limits(&self) -> &GroebnerConfig {
        &self.limits
    }

    /// True when the generator list is empty (the zero ideal).
    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Derived handle over the same ring with the same limits.
    pub(crate) fn derived(&self, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        Ok(IdealHandle::new(Arc::clone(&self.ring), gens)?.with_limits(self.limits))
    }

    /// The reduced Groebner basis of the generators with the ring's
    /// relations adjoined. Cached on first use; concurrent materialization
    /// computes the same basis.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let mut all = self.gens.clone();
        all.extend(self.ring.relations().iter().cloned());
        let g = groebner_basis(&self.ring, &all, &self.limits)?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// Membership modulo the ring's relations.
    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_poly(f)?;
        Ok(self.gb()?.contains(f))
    }

    /// Ideal equality: identical reduced Groebner bases (relations adjoined
    /// on both sides).
    pub fn equal(&self, other: &IdealHandle) -> Result<bool> {
        self.ring.same_ring(&other.ring)?;
        Ok(self.gb()?.polys() == other.gb()?.polys())
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        self.ring.same_ring(&other.ring)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.ring.same_ring(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derived(gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.ring.same_ring(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(self.ring.mul(f, g));
            }
        }
        self.derived(gens)
    }

    /// `n`-th power, generated by the degree-`n` products of the generators
    /// (multisets, not all ordered tuples). `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<IdealHandle> {
        if n == 0 {
            return Ok(IdealHandle::unit(&self.ring).with_limits(self.limits));
        }
        if self.gens.is_empty() {
            return self.derived(Vec::new());
        }
        let mut out = Vec::new();
        let mut stack: Vec<(usize, u32, Polynomial)> = vec![(0, n, self.ring.one_poly())];
        while let Some((start, remaining, acc)) = stack.pop() {
            if remaining == 0 {
                out.push(acc);
                continue;
            }
            for i in start..self.gens.len() {
                // the last generator absorbs all remaining factors at once
                if i + 1 == self.gens.len() {
                    let mut prod = acc.clone();
                    for _ in 0..remaining {
                        prod = self.ring.mul(&prod, &self.gens[i]);
                    }
                    out.push(prod);
                } else {
                    // generators may repeat: keep `i` available downstream
                    stack.push((i, remaining - 1, self.ring.mul(&acc, &self.gens[i])));
                }
            }
        }
        self.derived(out)
    }

    /// `self ∩ other` via the auxiliary-variable construction: eliminate `t`
    /// from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.ring.same_ring(&other.ring)?;
        let mut a = self.gens.clone();
        a.extend(self.ring.relations().iter().cloned());
        let mut b = other.gens.clone();
        b.extend(self.ring.relations().iter().cloned());
        let gens = intersect_raw(&self.ring, &a, &b, &self.limits)?;
        self.derived(present_mod_relations(&self.ring, gens, &self.limits)?)
    }

    /// The colon ideal `self : other = { f : f*other ⊆ self }`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.ring.same_ring(&other.ring)?;
        if other.gens.is_empty() {
            return Err(Error::ZeroDenominatorIdeal);
        }
        let base = self.ring.base();
        let mut lhs = self.gens.clone();
        lhs.extend(self.ring.relations().iter().cloned());
        let mut result: Option<Vec<Polynomial>> = None;
        for g in &other.gens {
            // (lhs) : g = (lhs ∩ (g)) / g, computed termwise exactly
            let inter = intersect_raw(&self.ring, &lhs, std::slice::from_ref(g), &self.limits)?;
            let mut quots = Vec::with_capacity(inter.len());
            for h in &inter {
                let (q, rem) = divide(&base, h, std::slice::from_ref(g));
                if !rem.is_zero() {
                    return Err(Error::Internal(
                        "intersection with a principal ideal produced a non-multiple".into(),
                    ));
                }
                quots.push(q.into_iter().next().unwrap());
            }
            result = Some(match result {
                None => quots,
                Some(prev) => intersect_raw(&self.ring, &prev, &quots, &self.limits)?,
            });
        }
        self.derived(present_mod_relations(
            &self.ring,
            result.unwrap(),
            &self.limits,
        )?)
    }

    /// The saturation `self : other^∞`, detected by stabilization of the
    /// ascending colon chain.
    pub fn saturate(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.ring.same_ring(&other.ring)?;
        if other.gens.is_empty() {
            return Err(Error::ZeroDenominatorIdeal);
        }
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next.equal(&current)? {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Generators of `self ∩ k[keep]`, presented in the polynomial subring
    /// on `keep` (kept variables stay in this ring's relative order).
    pub fn eliminate(&self, keep: &[&str]) -> Result<IdealHandle> {
        for name in keep {
            self.ring.var_index(name)?;
        }
        let kept: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| keep.iter().any(|k| k == v))
            .cloned()
            .collect();
        let dropped: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| !keep.iter().any(|k| k == v))
            .cloned()
            .collect();
        let head = dropped.len();

        let mut ext_vars: Vec<String> = dropped;
        ext_vars.extend(kept.iter().cloned());
        let ext = Ring::with_characteristic(
            ext_vars,
            self.ring.characteristic(),
            MonomialOrder::Block { head },
        )?;

        let sub_order = match self.ring.order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::GrevLex,
        };
        let sub = Ring::with_characteristic(kept, self.ring.characteristic(), sub_order)?;

        let to_ext = crate::ring::name_map(&self.ring, &ext);
        let mut ext_gens = Vec::new();
        for g in self.gens.iter().chain(self.ring.relations()) {
            ext_gens.push(transport(g, &self.ring, &ext, &to_ext)?);
        }
        let elim = eliminate_head(&ext, &ext_gens, head, &self.limits)?;
        let to_sub = crate::ring::name_map(&ext, &sub);
        let gens = elim
            .iter()
            .map(|g| transport(g, &ext, &sub, &to_sub))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealHandle::new(sub, gens)?.with_limits(self.limits))
    }
}

/// Intersection of two explicit generator lists over `ring`, with no
/// relation handling. Returns generators in the same ring.
pub(crate) fn intersect_raw(
    ring: &Arc<Ring>,
    a: &[Polynomial],
    b: &[Polynomial],
    limits: &GroebnerConfig,
) -> Result<Vec<Polynomial>> {
    let t_name = fresh_name("t", ring.vars());
    let (ext, to_ext) = extend_front(ring, &[&t_name])?;
    let t = ext.var_poly(0);
    let one_minus_t = ext.sub(&ext.one_poly(), &t);
    let mut ext_gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        ext_gens.push(ext.mul(&t, &transport(f, ring, &ext, &to_ext)?));
    }
    for g in b {
        ext_gens.push(ext.mul(&one_minus_t, &transport(g, ring, &ext, &to_ext)?));
    }
    let elim = eliminate_head(&ext, &ext_gens, 1, limits)?;
    let back = crate::ring::name_map(&ext, ring);
    elim.iter()
        .map(|g| transport(g, &ext, ring, &back))
        .collect()
}

/// Extends `ring` by fresh variables at the front under the block
/// elimination order. Returns the extended ring and the variable map from
/// `ring` into it.
pub(crate) fn extend_front(
    ring: &Arc<Ring>,
    fresh: &[&str],
) -> Result<(Arc<Ring>, Vec<Option<usize>>)> {
    let mut vars: Vec<String> = fresh.iter().map(|s| s.to_string()).collect();
    vars.extend(ring.vars().iter().cloned());
    let ext = Ring::with_characteristic(
        vars,
        ring.characteristic(),
        MonomialOrder::Block { head: fresh.len() },
    )?;
    let map = (0..ring.nvars()).map(|i| Some(i + fresh.len())).collect();
    Ok((ext, map))
}

/// Reduced-basis elements free of the first `head` variables of `ext`.
/// By the elimination property of block orders these generate the
/// contraction of the ideal to the tail subring.
pub(crate) fn eliminate_head(
    ext: &Arc<Ring>,
    gens: &[Polynomial],
    head: usize,
    limits: &GroebnerConfig,
) -> Result<Vec<Polynomial>> {
    debug_assert!(matches!(ext.order(), MonomialOrder::Block { head: h } if h == head));
    let basis = groebner_basis(ext, gens, limits)?;
    Ok(basis
        .polys()
        .iter()
        .filter(|p| {
            p.terms()
                .iter()
                .all(|t| t.mono.support().all(|v| v >= head))
        })
        .cloned()
        .collect())
}

/// Presents generators modulo the ring's relations: each generator is
/// replaced by its normal form against the relation basis, zeros dropped.
pub(crate) fn present_mod_relations(
    ring: &Arc<Ring>,
    gens: Vec<Polynomial>,
    limits: &GroebnerConfig,
) -> Result<Vec<Polynomial>> {
    if !ring.has_relations() {
        return Ok(gens);
    }
    let base = ring.base();
    let rel_gb = groebner_basis(&base, ring.relations(), limits)?;
    Ok(gens
        .into_iter()
        .map(|g| rel_gb.normal_form(&g))
        .filter(|g| !g.is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn membership_of_monomial_outside() {
        let r = qxy();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        assert!(!i.member(&p(&r, "x*y^3")).unwrap());
        assert!(i.member(&p(&r, "x*y^4")).unwrap());
    }

    #[test]
    fn equality_ignores_zero_and_redundant_generators() {
        let r = qxy();
        let i = ideal(&r, &["x", "y"]);
        let j = ideal(&r, &["x", "y", "0", "x+y"]);
        assert!(i.equal(&j).unwrap());
    }

    #[test]
    fn power_of_maximal_ideal() {
        let r = qxy();
        let m2 = ideal(&r, &["x", "y"]).power(2).unwrap();
        assert!(m2.equal(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
        let m0 = ideal(&r, &["x", "y"]).power(0).unwrap();
        assert!(m0.is_unit_ideal().unwrap());
    }

    #[test]
    fn intersection_of_principal_ideals() {
        // oracle: lcm of the generators
        let r = qxy();
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.equal(&ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn intersection_with_unit_ideal() {
        let r = qxy();
        let i = ideal(&r, &["x^2-y", "x*y"]);
        let j = i.intersect(&IdealHandle::unit(&r)).unwrap();
        assert!(j.equal(&i).unwrap());
    }

    #[test]
    fn colon_by_itself_is_unit() {
        let r = qxy();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        assert!(i.colon(&i).unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn colon_hand_computed() {
        // oracle: f*x in (x^2, x*y) iff f in (x, y)
        let r = qxy();
        let i = ideal(&r, &["x^2", "x*y"]);
        let q = i.colon(&ideal(&r, &["x"])).unwrap();
        assert!(q.equal(&ideal(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn socle_of_plane_monomial_ideal() {
        let r = qxy();
        let i = ideal(&r, &["x^2", "x*y^4", "y^5"]);
        let l = i.colon(&ideal(&r, &["x", "y"])).unwrap();
        assert!(l.equal(&ideal(&r, &["x^2", "x*y^3", "y^4"])).unwrap());
    }

    #[test]
    fn saturation_stabilizes() {
        // two colon steps stabilize at (x^2)
        let r = qxy();
        let s = ideal(&r, &["x^2*y"])
            .saturate(&ideal(&r, &["y"]))
            .unwrap();
        assert!(s.equal(&ideal(&r, &["x^2"])).unwrap());
        // saturating by the unit ideal changes nothing
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(i.saturate(&IdealHandle::unit(&r)).unwrap().equal(&i).unwrap());
    }

    #[test]
    fn saturation_by_component_variable_empties_the_line() {
        // iterating the colon: (x^2, xy) : x = (x, y), then (x, y) : x = (1)
        let r = qxy();
        let s = ideal(&r, &["x^2", "x*y"])
            .saturate(&ideal(&r, &["x"]))
            .unwrap();
        assert!(s.is_unit_ideal().unwrap());
    }

    #[test]
    fn saturation_is_a_fixpoint() {
        let r = qxy();
        let i = ideal(&r, &["x^2*y", "x*y^3"]);
        let j = ideal(&r, &["y"]);
        let s = i.saturate(&j).unwrap();
        assert!(s.saturate(&j).unwrap().equal(&s).unwrap());
    }

    #[test]
    fn eliminate_auxiliary_variable() {
        let r = Ring::new(vec!["t", "x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = ideal(&r, &["t*x-1", "t*y"]);
        let e = i.eliminate(&["x", "y"]).unwrap();
        assert_eq!(e.ring().vars(), &["x".to_string(), "y".to_string()]);
        let expect = IdealHandle::parse(e.ring(), &["y"]).unwrap();
        assert!(e.equal(&expect).unwrap());
    }

    #[test]
    fn eliminate_nothing_is_identity_up_to_basis() {
        let r = qxy();
        let i = ideal(&r, &["x^2-y", "x*y"]);
        let e = i.eliminate(&["x", "y"]).unwrap();
        assert!(e.equal(&i).unwrap());
    }

    #[test]
    fn colon_by_zero_ideal_rejected() {
        let r = qxy();
        let i = ideal(&r, &["x"]);
        assert!(matches!(
            i.colon(&IdealHandle::zero(&r)),
            Err(Error::ZeroDenominatorIdeal)
        ));
    }

    #[test]
    fn quotient_ring_membership_uses_relations() {
        // in Q[x,y]/(x^2 - y), y is a member of (x)
        let r = qxy();
        let rel = p(&r, "x^2-y");
        let rq = r.quotient(vec![rel]).unwrap();
        let i = ideal(&rq, &["x"]);
        assert!(i.member(&p(&rq, "y")).unwrap());
    }

    #[test]
    fn shared_handles_materialize_concurrently() {
        let r = qxy();
        let i = std::sync::Arc::new(ideal(&r, &["x^2-y", "x*y-1", "y^3-x"]));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let i = std::sync::Arc::clone(&i);
                std::thread::spawn(move || i.gb().unwrap().polys().to_vec())
            })
            .collect();
        let mut results = handles
            .into_iter()
            .map(|h| h.join().unwrap())
            .collect::<Vec<_>>();
        let first = results.pop().unwrap();
        for other in results {
            assert_eq!(first, other);
        }
    }
}
