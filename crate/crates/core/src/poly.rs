use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// Exact rational coefficient, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Coeff = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A canonical sparse multivariate polynomial.
///
/// Terms are sorted strictly descending in the owning ring's monomial order,
/// carry no zero coefficients, and monomials are pairwise distinct, so equal
/// polynomials over the same ring have identical term sequences.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Total degree (maximum over terms), or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mono.is_one())
    }

    /// True for a single-term polynomial (a scalar multiple of a monomial).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }
}

impl Ring {
    /// Builds a canonical polynomial from arbitrary (coefficient, monomial)
    /// pairs: merges duplicates, drops zeros, sorts descending.
    pub fn poly_from_terms(&self, terms: Vec<(Coeff, Monomial)>) -> Result<Polynomial> {
        let mut items: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if m.len() != self.nvars() {
                return Err(Error::RingMismatch(format!(
                    "monomial has {} exponents, ring has {} variables",
                    m.len(),
                    self.nvars()
                )));
            }
            let c = self.coeff_reduce(c)?;
            if !c.is_zero() {
                items.push((m, c));
            }
        }
        items.sort_by(|a, b| self.mono_cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(items.len());
        for (m, c) in items {
            match out.last_mut() {
                Some(last) if last.mono == m => {
                    last.coeff += c;
                }
                _ => out.push(Term { coeff: c, mono: m }),
            }
        }
        // merged coefficients may have cancelled or need char-p reduction
        let mut cleaned = Vec::with_capacity(out.len());
        for t in out {
            let c = self.coeff_reduce(t.coeff)?;
            if !c.is_zero() {
                cleaned.push(Term {
                    coeff: c,
                    mono: t.mono,
                });
            }
        }
        Ok(Polynomial { terms: cleaned })
    }

    pub fn zero_poly(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one_poly(&self) -> Polynomial {
        self.constant(Coeff::one())
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        let c = self.coeff_reduce(c).expect("constant reduction");
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(self.nvars()),
            }],
        }
    }

    pub fn int_constant(&self, n: i64) -> Polynomial {
        self.constant(Coeff::from_integer(BigInt::from(n)))
    }

    pub fn var_poly(&self, var: usize) -> Polynomial {
        let mut exps = vec![0u32; self.nvars()];
        exps[var] = 1;
        Polynomial {
            terms: vec![Term {
                coeff: Coeff::one(),
                mono: Monomial::new(exps),
            }],
        }
    }

    pub fn monomial_poly(&self, m: Monomial) -> Result<Polynomial> {
        self.poly_from_terms(vec![(Coeff::one(), m)])
    }

    /// Merge of two canonical term lists (used by add/sub).
    fn merge(&self, f: &Polynomial, g: &Polynomial, negate_g: bool) -> Polynomial {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < f.terms.len() && j < g.terms.len() {
            match self.mono_cmp(&f.terms[i].mono, &g.terms[j].mono) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let mut t = g.terms[j].clone();
                    if negate_g {
                        t.coeff = -t.coeff;
                    }
                    out.push(t);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_g {
                        &f.terms[i].coeff - &g.terms[j].coeff
                    } else {
                        &f.terms[i].coeff + &g.terms[j].coeff
                    };
                    let c = self.coeff_reduce(c).expect("merge reduction");
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: f.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        for t in &g.terms[j..] {
            let mut t = t.clone();
            if negate_g {
                t.coeff = -t.coeff;
            }
            out.push(t);
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, true)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.coeff_reduce(-t.coeff.clone()).expect("neg"),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// `coeff * mono * f`, reusing the sortedness of `f`.
    pub fn mul_term(&self, f: &Polynomial, coeff: &Coeff, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(f.terms.len());
        for t in &f.terms {
            let c = self.coeff_reduce(&t.coeff * coeff).expect("mul_term");
            if !c.is_zero() {
                out.push(Term {
                    coeff: c,
                    mono: t.mono.mul(mono),
                });
            }
        }
        Polynomial { terms: out }
    }

    pub fn scale(&self, f: &Polynomial, coeff: &Coeff) -> Polynomial {
        self.mul_term(f, coeff, &Monomial::one(self.nvars()))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        // accumulate g-shifts of f, merging pairwise
        let mut acc = Polynomial::zero();
        for t in &g.terms {
            let shifted = self.mul_term(f, &t.coeff, &t.mono);
            acc = self.add(&acc, &shifted);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, n: u32) -> Polynomial {
        let mut result = self.one_poly();
        let mut base = f.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => Polynomial::zero(),
            Some(lt) => {
                if lt.coeff.is_one() {
                    f.clone()
                } else {
                    let inv = self.coeff_inv(&lt.coeff);
                    self.scale(f, &inv)
                }
            }
        }
    }

    /// Formal partial derivative; rejects positive characteristic, where the
    /// Jacobian-style tests it feeds are not valid.
    pub fn partial_derivative(&self, f: &Polynomial, var: usize) -> Result<Polynomial> {
        if self.characteristic() != 0 {
            return Err(Error::CharacteristicNotZero);
        }
        if var >= self.nvars() {
            return Err(Error::OutOfRange(format!("variable index {var}")));
        }
        let mut terms = Vec::new();
        for t in &f.terms {
            let e = t.mono.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = t.mono.exponents().to_vec();
            exps[var] = e - 1;
            terms.push((
                &t.coeff * Coeff::from_integer(BigInt::from(e)),
                Monomial::new(exps),
            ));
        }
        self.poly_from_terms(terms)
    }

    /// Replaces each variable of `f` by its image in `target`. Every variable
    /// occurring in `f` must be mapped.
    pub fn substitute(
        &self,
        f: &Polynomial,
        images: &[Option<Polynomial>],
        target: &Ring,
    ) -> Result<Polynomial> {
        debug_assert_eq!(images.len(), self.nvars());
        let mut acc = target.zero_poly();
        for t in &f.terms {
            let mut term_val = target.constant(t.coeff.clone());
            for (var, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[var].as_ref().ok_or_else(|| {
                    Error::UnknownVariable(format!(
                        "variable `{}` is not mapped",
                        self.vars()[var]
                    ))
                })?;
                term_val = target.mul(&term_val, &target.pow(img, e));
            }
            acc = target.add(&acc, &term_val);
        }
        Ok(acc)
    }

    /// Deterministic total order on canonical polynomials: compare term
    /// sequences (monomials in the ring order, then coefficients).
    pub fn poly_cmp(&self, f: &Polynomial, g: &Polynomial) -> Ordering {
        for (a, b) in f.terms.iter().zip(&g.terms) {
            match self.mono_cmp(&a.mono, &b.mono) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match coeff_cmp(&a.coeff, &b.coeff) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        f.terms.len().cmp(&g.terms.len())
    }

    /// Scalar-normalizes a generator for user-facing lists: clears
    /// denominators, divides out integer content, makes the leading
    /// coefficient positive.
    pub fn normalize_generator(&self, f: &Polynomial) -> Polynomial {
        if f.is_zero() {
            return Polynomial::zero();
        }
        if self.characteristic() != 0 {
            return self.monic(f);
        }
        let mut den_lcm = BigInt::one();
        for t in &f.terms {
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut num_gcd = BigInt::zero();
        for t in &f.terms {
            let cleared = t.coeff.numer() * (&den_lcm / t.coeff.denom());
            num_gcd = num_gcd.gcd(&cleared);
        }
        let mut factor = Coeff::new(den_lcm, num_gcd);
        if (&f.terms[0].coeff * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(f, &factor)
    }

    /// Renders a polynomial with this ring's variable names; inverse of the
    /// expression parser.
    pub fn poly_string(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in f.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push('-');
            } else {
                out.push('+');
            }
            let abs = t.coeff.abs();
            let coeff_is_one = abs.is_one();
            let mono_str = self.mono_string(&t.mono);
            if coeff_is_one && !t.mono.is_one() {
                out.push_str(&mono_str);
            } else if t.mono.is_one() {
                out.push_str(&rational_string(&abs));
            } else {
                out.push_str(&rational_string(&abs));
                out.push('*');
                out.push_str(&mono_str);
            }
        }
        out
    }

    fn mono_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(self.vars()[i].clone());
            } else {
                parts.push(format!("{}^{}", self.vars()[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Canonical rendering of a generator list: each generator normalized,
    /// the list sorted ascending in the ring order.
    pub fn render_generators(&self, gens: &[Polynomial]) -> Vec<String> {
        let mut normed: Vec<Polynomial> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| self.normalize_generator(g))
            .collect();
        normed.sort_by(|a, b| self.poly_cmp(a, b));
        normed.dedup();
        normed.iter().map(|g| self.poly_string(g)).collect()
    }
}

fn rational_string(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn coeff_cmp(a: &Coeff, b: &Coeff) -> Ordering {
    a.cmp(b)
}
