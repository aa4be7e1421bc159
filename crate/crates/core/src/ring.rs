use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{grevlex_cmp_range, lex_cmp, Monomial};
use crate::poly::{Coeff, Polynomial};

/// Admissible monomial orders.
///
/// `Block { head }` compares grevlex on the first `head` variables, then
/// grevlex on the rest; it is the elimination order used internally to
/// project away the leading block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block { head: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp_range(a, b, 0, nvars),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Block { head } => {
                match grevlex_cmp_range(a, b, 0, *head) {
                    Ordering::Equal => grevlex_cmp_range(a, b, *head, nvars),
                    ord => ord,
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { head } => format!("block({head})"),
        }
    }
}

/// A (quotient of a) polynomial ring over Q or a prime field.
///
/// Polynomials are plain term data; every operation on them goes through a
/// `Ring`, which carries the variable names, the coefficient characteristic,
/// the monomial order used for canonical term sorting, and optional quotient
/// relations. Relations are never used to rewrite polynomials — ideal-level
/// operations adjoin them to generator lists instead.
#[derive(Debug)]
pub struct Ring {
    vars: Vec<String>,
    characteristic: u32,
    order: MonomialOrder,
    relations: Vec<Polynomial>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.characteristic == other.characteristic
            && self.order == other.order
            && self.relations == other.relations
    }
}

impl Eq for Ring {}

fn validate_vars(vars: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for v in vars {
        if v.is_empty() {
            return Err(Error::InvalidRing("empty variable name".into()));
        }
        if !seen.insert(v.clone()) {
            return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
        }
    }
    Ok(())
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>, order: MonomialOrder) -> Result<Arc<Ring>> {
        Self::with_characteristic(vars, 0, order)
    }

    pub fn with_characteristic<S: Into<String>>(
        vars: Vec<S>,
        characteristic: u32,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        validate_vars(&vars)?;
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidRing(format!(
                "characteristic {characteristic} is neither 0 nor prime"
            )));
        }
        if let MonomialOrder::Block { head } = order {
            if head > vars.len() {
                return Err(Error::InvalidRing("block head exceeds variable count".into()));
            }
        }
        Ok(Arc::new(Ring {
            vars,
            characteristic,
            order,
            relations: Vec::new(),
        }))
    }

    /// A copy of this ring with quotient relations attached. The relation
    /// polynomials must be canonical over the relation-free base ring.
    pub fn quotient(self: &Arc<Ring>, relations: Vec<Polynomial>) -> Result<Arc<Ring>> {
        for rel in &relations {
            self.check_poly(rel)?;
        }
        let relations: Vec<Polynomial> =
            relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Arc::new(Ring {
            vars: self.vars.clone(),
            characteristic: self.characteristic,
            order: self.order,
            relations,
        }))
    }

    /// The same variables and characteristic without relations.
    pub fn base(self: &Arc<Ring>) -> Arc<Ring> {
        if self.relations.is_empty() {
            return Arc::clone(self);
        }
        Arc::new(Ring {
            vars: self.vars.clone(),
            characteristic: self.characteristic,
            order: self.order,
            relations: Vec::new(),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.nvars())
    }

    /// Validates that a polynomial is structurally legal over this ring.
    pub fn check_poly(&self, f: &Polynomial) -> Result<()> {
        for t in f.terms() {
            if t.mono.len() != self.nvars() {
                return Err(Error::RingMismatch(format!(
                    "monomial has {} exponents, ring has {} variables",
                    t.mono.len(),
                    self.nvars()
                )));
            }
        }
        Ok(())
    }

    pub fn same_ring(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(
                "operands belong to different rings".into(),
            ));
        }
        Ok(())
    }

    /// Reduces a coefficient into canonical form for this ring: identity in
    /// characteristic 0, the integer residue in [0, p) in characteristic p.
    pub(crate) fn coeff_reduce(&self, c: Coeff) -> Result<Coeff> {
        if self.characteristic == 0 {
            return Ok(c);
        }
        let p = BigInt::from(self.characteristic);
        let den = c.denom().mod_floor(&p);
        if den.is_zero() {
            return Err(Error::InvalidCoefficient(format!(
                "denominator divisible by the characteristic {}",
                self.characteristic
            )));
        }
        let num = c.numer().mod_floor(&p);
        let inv = mod_inverse(&den, &p).ok_or_else(|| {
            Error::InvalidCoefficient("denominator not invertible".into())
        })?;
        let r = (num * inv).mod_floor(&p);
        Ok(Coeff::from_integer(r))
    }

    /// Multiplicative inverse of a nonzero canonical coefficient.
    pub(crate) fn coeff_inv(&self, c: &Coeff) -> Coeff {
        if self.characteristic == 0 {
            return Coeff::one() / c;
        }
        let p = BigInt::from(self.characteristic);
        let inv = mod_inverse(&c.numer().mod_floor(&p), &p)
            .expect("nonzero residue has an inverse");
        Coeff::from_integer(inv)
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    // Extended Euclid on (a, p) with p prime.
    let (mut r0, mut r1) = (p.clone(), a.mod_floor(p));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if r0.is_one() {
        Some(t0.mod_floor(p))
    } else {
        None
    }
}

/// Maps a polynomial between rings along a variable map: `var_map[i]` is the
/// index in `to` of variable `i` of `from`, or `None` when the variable is
/// dropped (then it must not occur in `f`).
pub fn transport(
    f: &Polynomial,
    from: &Ring,
    to: &Ring,
    var_map: &[Option<usize>],
) -> Result<Polynomial> {
    debug_assert_eq!(var_map.len(), from.nvars());
    let mut terms = Vec::with_capacity(f.terms().len());
    for t in f.terms() {
        let mut exps = vec![0u32; to.nvars()];
        for (i, &e) in t.mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            match var_map[i] {
                Some(j) => exps[j] += e,
                None => {
                    return Err(Error::UnknownVariable(format!(
                        "variable `{}` has no image in the target ring",
                        from.vars()[i]
                    )))
                }
            }
        }
        terms.push((t.coeff.clone(), Monomial::new(exps)));
    }
    to.poly_from_terms(terms)
}

/// Builds the variable map from `from` to `to` by matching names.
pub fn name_map(from: &Ring, to: &Ring) -> Vec<Option<usize>> {
    from.vars()
        .iter()
        .map(|v| to.vars().iter().position(|w| w == v))
        .collect()
}

/// A variable name based on `base` that does not collide with `taken`.
pub fn fresh_name(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|v| v == base) {
        return base.to_string();
    }
    let mut k = 0usize;
    loop {
        let cand = format!("{base}{k}");
        if !taken.iter().any(|v| v == &cand) {
            return cand;
        }
        k += 1;
    }
}
