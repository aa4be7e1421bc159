//! Buchberger's algorithm, multivariate division, reduced bases, and the
//! Buchberger criterion as a predicate.
//!
//! Determinism contract: division tries divisors in list order; the pair
//! queue is ordered by (lcm degree, lcm exponents, indices); the reduced
//! basis is the unique canonical basis of the ideal for the ring's order,
//! sorted ascending by leading monomial with monic elements.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Resource caps for basis computations. Exceeding a cap is an error,
/// never a truncated answer.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced in one Buchberger run.
    pub max_pairs: usize,
    /// Maximum number of terms tolerated in any intermediate remainder.
    pub max_terms: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 250_000,
            max_terms: 1_000_000,
        }
    }
}

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted ascending by
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> crate::ring::MonomialOrder {
        self.ring.order()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ring, f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .filter_map(|p| p.leading_monomial().cloned())
            .collect()
    }
}

/// Multivariate division with quotient tracking:
/// `f = sum_k quotients[k] * divisors[k] + remainder`, no term of the
/// remainder divisible by any divisor's leading monomial. Divisors are
/// tried in list order, making the result deterministic.
pub fn divide(
    ring: &Ring,
    f: &Polynomial,
    divisors: &[Polynomial],
) -> (Vec<Polynomial>, Polynomial) {
    let mut quot_terms: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut rem_terms: Vec<Term> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some(lt) = work.leading().cloned() {
        for (k, g) in divisors.iter().enumerate() {
            let Some(glt) = g.leading() else { continue };
            if let Some(qm) = lt.mono.try_div(&glt.mono) {
                let qc = ring
                    .coeff_reduce(&lt.coeff * ring.coeff_inv(&glt.coeff))
                    .expect("division coefficient");
                work = ring.sub(&work, &ring.mul_term(g, &qc, &qm));
                quot_terms[k].push(Term {
                    coeff: qc,
                    mono: qm,
                });
                continue 'outer;
            }
        }
        rem_terms.push(lt);
        work = Polynomial::from_sorted_terms(work.terms()[1..].to_vec());
    }
    // leading terms were peeled in strictly decreasing order, so both the
    // remainder and the per-divisor quotients are already canonical
    let quotients = quot_terms
        .into_iter()
        .map(Polynomial::from_sorted_terms)
        .collect();
    (quotients, Polynomial::from_sorted_terms(rem_terms))
}

/// Remainder-only multivariate division.
pub fn normal_form(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    normal_form_simple(ring, f, divisors)
}

/// Reductions whose coefficients have grown past this many bits escalate to
/// the fraction-free route inside basis computations; both routes return the
/// identical exact remainder. Rational arithmetic normalizes on every
/// addition, which dominates once coefficients are large.
const FRACTION_FREE_BITS: u64 = 128;

fn wants_fraction_free(f: &Polynomial) -> bool {
    f.terms().iter().any(|t| {
        t.coeff.numer().bits() > FRACTION_FREE_BITS
            || t.coeff.denom().bits() > FRACTION_FREE_BITS
    })
}

/// Top-reduction for basis-internal use: cancels leading terms until the
/// lead is irreducible (or the polynomial vanishes), leaving tails alone —
/// they are cleaned up once, in the final inter-reduction. Runs
/// fraction-free with escalating integer multipliers, so the result is the
/// true top-reduced form up to a positive scalar (callers re-normalize).
/// Divisors must be primitive integer polynomials.
fn top_reduce_raw(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    use num_bigint::BigInt;
    use num_integer::Integer as _;
    use num_traits::{One as _, Zero as _};

    let mut den_lcm = BigInt::one();
    for t in f.terms() {
        den_lcm = den_lcm.lcm(t.coeff.denom());
    }
    let mut work = ring.scale(f, &crate::poly::Coeff::from_integer(den_lcm));
    let mut steps = 0u32;
    'outer: while let Some(lt) = work.leading().cloned() {
        for g in divisors {
            let Some(glt) = g.leading() else { continue };
            if let Some(qm) = lt.mono.try_div(&glt.mono) {
                let a = lt.coeff.numer();
                let b = glt.coeff.numer();
                debug_assert!(glt.coeff.denom().is_one());
                let d = a.gcd(b);
                let up = crate::poly::Coeff::from_integer(b / &d);
                if !up.is_one() {
                    work = ring.scale(&work, &up);
                }
                let factor = crate::poly::Coeff::from_integer(a / &d);
                work = ring.sub(&work, &ring.mul_term(g, &factor, &qm));
                steps += 1;
                if steps.is_multiple_of(64) {
                    let mut content = BigInt::zero();
                    for t in work.terms() {
                        content = content.gcd(t.coeff.numer());
                    }
                    if !content.is_zero() && !content.is_one() {
                        let inv = crate::poly::Coeff::new(BigInt::one(), content);
                        work = ring.scale(&work, &inv);
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    work
}

/// Exact remainder for basis-internal reductions over the rationals:
/// plain rational division that escalates to the fraction-free route when
/// coefficients grow large. Divisors must be primitive integer polynomials
/// with positive leading coefficients.
fn reduce_for_basis(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    if wants_fraction_free(f) {
        return normal_form_primitive(ring, f, divisors);
    }
    let mut rem_terms: Vec<Term> = Vec::new();
    let mut work = f.clone();
    let mut steps = 0u32;
    'outer: while let Some(lt) = work.leading().cloned() {
        for g in divisors {
            let Some(glt) = g.leading() else { continue };
            if let Some(qm) = lt.mono.try_div(&glt.mono) {
                let qc = &lt.coeff * ring.coeff_inv(&glt.coeff);
                work = ring.sub(&work, &ring.mul_term(g, &qc, &qm));
                steps += 1;
                if steps.is_multiple_of(32) && wants_fraction_free(&work) {
                    // terms peeled so far are exact; finish the rest
                    // fraction-free and splice
                    let tail = normal_form_primitive(ring, &work, divisors);
                    rem_terms.extend(tail.terms().iter().cloned());
                    return Polynomial::from_sorted_terms(rem_terms);
                }
                continue 'outer;
            }
        }
        rem_terms.push(lt);
        work = Polynomial::from_sorted_terms(work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms(rem_terms)
}

/// Fraction-free remainder; every divisor must already be a primitive
/// integer polynomial with positive leading coefficient.
fn normal_form_primitive(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    use num_bigint::BigInt;
    use num_integer::Integer as _;
    use num_traits::{One as _, Zero as _};

    debug_assert!(ring.characteristic() == 0);
    // integerize: work = scale * f with integer coefficients
    let mut den_lcm = BigInt::one();
    for t in f.terms() {
        den_lcm = den_lcm.lcm(t.coeff.denom());
    }
    let mut scale = crate::poly::Coeff::from_integer(den_lcm);
    let mut work = ring.scale(f, &scale);

    let mut rem_terms: Vec<Term> = Vec::new();
    let mut steps = 0u32;
    'outer: while let Some(lt) = work.leading().cloned() {
        for g in divisors {
            let Some(glt) = g.leading() else { continue };
            if let Some(qm) = lt.mono.try_div(&glt.mono) {
                // minimal integer multipliers: (b/d) * work - (a/d) * qm * g
                // cancels the lead, where d = gcd of the leading coefficients
                let a = lt.coeff.numer();
                let b = glt.coeff.numer();
                debug_assert!(glt.coeff.denom().is_one());
                let d = a.gcd(b);
                let up = crate::poly::Coeff::from_integer(b / &d);
                if !up.is_one() {
                    work = ring.scale(&work, &up);
                    scale = scale * &up;
                }
                let factor = crate::poly::Coeff::from_integer(a / &d);
                work = ring.sub(&work, &ring.mul_term(g, &factor, &qm));
                steps += 1;
                if steps.is_multiple_of(64) {
                    // periodically strip integer content to curb growth
                    let mut content = BigInt::zero();
                    for t in work.terms() {
                        content = content.gcd(t.coeff.numer());
                    }
                    if !content.is_zero() && !content.is_one() {
                        let inv =
                            crate::poly::Coeff::new(BigInt::one(), content);
                        work = ring.scale(&work, &inv);
                        scale = scale * &inv;
                    }
                }
                continue 'outer;
            }
        }
        rem_terms.push(Term {
            coeff: &lt.coeff / &scale,
            mono: lt.mono,
        });
        work = Polynomial::from_sorted_terms(work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms(rem_terms)
}

fn normal_form_simple(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut rem_terms: Vec<Term> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some(lt) = work.leading().cloned() {
        for g in divisors {
            let Some(glt) = g.leading() else { continue };
            if let Some(qm) = lt.mono.try_div(&glt.mono) {
                let qc = ring
                    .coeff_reduce(&lt.coeff * ring.coeff_inv(&glt.coeff))
                    .expect("division coefficient");
                work = ring.sub(&work, &ring.mul_term(g, &qc, &qm));
                continue 'outer;
            }
        }
        rem_terms.push(lt);
        work = Polynomial::from_sorted_terms(work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms(rem_terms)
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let flt = f.leading().expect("nonzero");
    let glt = g.leading().expect("nonzero");
    let lcm = flt.mono.lcm(&glt.mono);
    let fm = lcm.try_div(&flt.mono).unwrap();
    let gm = lcm.try_div(&glt.mono).unwrap();
    let fc = ring.coeff_inv(&flt.coeff);
    let gc = ring.coeff_inv(&glt.coeff);
    ring.sub(&ring.mul_term(f, &fc, &fm), &ring.mul_term(g, &gc, &gm))
}

struct WorkEntry {
    poly: Polynomial,
    // coordinates of `poly` in the input generators, when tracking
    cof: Vec<Polynomial>,
}

/// One cofactor row per basis element, aligned with the input generators.
type CofactorRows = Vec<Vec<Polynomial>>;

fn pair_key(basis: &[WorkEntry], i: usize, j: usize) -> (u64, Vec<u32>, usize, usize) {
    let a = basis[i].poly.leading_monomial().unwrap();
    let b = basis[j].poly.leading_monomial().unwrap();
    let lcm = a.lcm(b);
    (lcm.degree(), lcm.exponents().to_vec(), i, j)
}

/// Installs the coprime-lead and chain criteria at pair-insertion time
/// (the Gebauer-Moeller update). Adds the pairs of the new element `t`
/// against every earlier one and prunes:
///
/// * old pairs (i, j) whose lcm is divisible by the new lead while both
///   companion lcms differ from it (the chain criterion through `t`);
/// * new pairs properly dominated by another new pair's lcm, and all but
///   the lowest-index pair within an equal-lcm class;
/// * new pairs with coprime leads, after they have had the chance to
///   dominate others.
fn update_pairs(
    queue: &mut BTreeSet<(u64, Vec<u32>, usize, usize)>,
    queued: &mut HashSet<(usize, usize)>,
    basis: &[WorkEntry],
    t: usize,
) {
    let tau = basis[t].poly.leading_monomial().unwrap();

    // prune old pairs superseded by chains through the new element
    let old: Vec<(usize, usize)> = queued.iter().copied().collect();
    for (i, j) in old {
        let li = basis[i].poly.leading_monomial().unwrap();
        let lj = basis[j].poly.leading_monomial().unwrap();
        let lij = li.lcm(lj);
        if tau.divides(&lij) && li.lcm(tau) != lij && lj.lcm(tau) != lij {
            queued.remove(&(i, j));
            queue.remove(&pair_key(basis, i, j));
        }
    }

    // candidate pairs (i, t), pruned among themselves
    let lcms: Vec<Monomial> = (0..t)
        .map(|i| basis[i].poly.leading_monomial().unwrap().lcm(tau))
        .collect();
    'cand: for i in 0..t {
        let coprime = lcms[i] == basis[i].poly.leading_monomial().unwrap().mul(tau);
        if coprime {
            // reduces to zero by the product criterion; never queued
            continue;
        }
        for j in 0..t {
            if j == i {
                continue;
            }
            if lcms[j].divides(&lcms[i]) {
                if lcms[j] != lcms[i] {
                    continue 'cand;
                }
                if j < i {
                    continue 'cand;
                }
            }
        }
        queue.insert(pair_key(basis, i, t));
        queued.insert((i, t));
    }
}

/// Buchberger's algorithm with the coprime-lead and chain criteria
/// (installed at pair-update time) and normal (minimal lcm degree first)
/// pair selection. When `track` is set, the returned cofactors express each
/// reduced-basis element in the input generators.
fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    config: &GroebnerConfig,
    track: bool,
) -> Result<(Vec<Polynomial>, Option<CofactorRows>)> {
    let n_gens = gens.len();
    let unit_vec = |i: usize| -> Vec<Polynomial> {
        if !track {
            return Vec::new();
        }
        let mut v = vec![Polynomial::zero(); n_gens];
        v[i] = ring.one_poly();
        v
    };

    let mut basis: Vec<WorkEntry> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if !g.is_zero() {
            let primitive = ring.normalize_generator(g);
            let cof = if track {
                let factor = ring
                    .coeff_reduce(
                        &primitive.leading().unwrap().coeff
                            * ring.coeff_inv(&g.leading().unwrap().coeff),
                    )
                    .expect("scaling factor");
                let mut v = unit_vec(i);
                v[i] = ring.constant(factor);
                v
            } else {
                Vec::new()
            };
            basis.push(WorkEntry {
                poly: primitive,
                cof,
            });
        }
    }
    if basis.is_empty() {
        return Ok((Vec::new(), if track { Some(Vec::new()) } else { None }));
    }

    let mut queue: BTreeSet<(u64, Vec<u32>, usize, usize)> = BTreeSet::new();
    let mut queued: HashSet<(usize, usize)> = HashSet::new();
    for t in 1..basis.len() {
        update_pairs(&mut queue, &mut queued, &basis, t);
    }

    let mut pairs_reduced = 0usize;
    while let Some(key) = queue.pop_first() {
        let (_, _, i, j) = key;
        queued.remove(&(i, j));

        let lcm = {
            let lm_i = basis[i].poly.leading_monomial().unwrap();
            let lm_j = basis[j].poly.leading_monomial().unwrap();
            lm_i.lcm(lm_j)
        };

        if pairs_reduced >= config.max_pairs {
            return Err(Error::PairLimitExceeded {
                pairs: pairs_reduced,
            });
        }
        pairs_reduced += 1;

        let spoly = s_polynomial(ring, &basis[i].poly, &basis[j].poly);
        let s_cof: Vec<Polynomial> = if track {
            let flt = basis[i].poly.leading().unwrap();
            let glt = basis[j].poly.leading().unwrap();
            let fm = lcm.try_div(&flt.mono).unwrap();
            let gm = lcm.try_div(&glt.mono).unwrap();
            let fc = ring.coeff_inv(&flt.coeff);
            let gc = ring.coeff_inv(&glt.coeff);
            (0..n_gens)
                .map(|t| {
                    ring.sub(
                        &ring.mul_term(&basis[i].cof[t], &fc, &fm),
                        &ring.mul_term(&basis[j].cof[t], &gc, &gm),
                    )
                })
                .collect()
        } else {
            Vec::new()
        };

        let divisor_polys: Vec<Polynomial> =
            basis.iter().map(|e| e.poly.clone()).collect();
        // quotients are only needed when tracking cofactors; the plain path
        // top-reduces fraction-free (the basis is primitive) and leaves
        // tails to the final inter-reduction
        let (quots, rem) = if track || ring.characteristic() != 0 {
            divide(ring, &spoly, &divisor_polys)
        } else {
            (Vec::new(), top_reduce_raw(ring, &spoly, &divisor_polys))
        };
        if rem.is_zero() {
            continue;
        }
        if rem.num_terms() > config.max_terms {
            return Err(Error::TermLimitExceeded {
                terms: rem.num_terms(),
            });
        }
        let rem_cof: Vec<Polynomial> = if track {
            (0..n_gens)
                .map(|t| {
                    let mut acc = s_cof[t].clone();
                    for (k, q) in quots.iter().enumerate() {
                        if !q.is_zero() {
                            acc = ring.sub(&acc, &ring.mul(q, &basis[k].cof[t]));
                        }
                    }
                    acc
                })
                .collect()
        } else {
            Vec::new()
        };

        // unit-scale to a primitive integer polynomial: keeps coefficient
        // sizes tame in later reductions (final monic scaling happens at
        // the end)
        let primitive = ring.normalize_generator(&rem);
        let rem_cof = if track {
            let factor = ring
                .coeff_reduce(
                    &primitive.leading().unwrap().coeff
                        * ring.coeff_inv(&rem.leading().unwrap().coeff),
                )
                .expect("scaling factor");
            rem_cof.iter().map(|c| ring.scale(c, &factor)).collect()
        } else {
            rem_cof
        };
        let rem = primitive;

        let new_idx = basis.len();
        basis.push(WorkEntry {
            poly: rem,
            cof: rem_cof,
        });
        update_pairs(&mut queue, &mut queued, &basis, new_idx);
    }

    // minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element
    basis.sort_by(|a, b| {
        ring.mono_cmp(
            a.poly.leading_monomial().unwrap(),
            b.poly.leading_monomial().unwrap(),
        )
    });
    let mut kept: Vec<WorkEntry> = Vec::new();
    'cand: for entry in basis {
        let lm = entry.poly.leading_monomial().unwrap();
        for k in &kept {
            if k.poly.leading_monomial().unwrap().divides(lm) {
                continue 'cand;
            }
        }
        kept.push(entry);
    }

    // inter-reduce tails: ascending by leading monomial, any divisor of a
    // tail term has a strictly smaller leading monomial and is final already
    let mut reduced: Vec<WorkEntry> = Vec::new();
    for entry in kept {
        let finals: Vec<Polynomial> = reduced.iter().map(|e| e.poly.clone()).collect();
        if track || ring.characteristic() != 0 {
            let (quots, rem) = divide(ring, &entry.poly, &finals);
            debug_assert!(!rem.is_zero());
            let cof = if track {
                (0..n_gens)
                    .map(|t| {
                        let mut acc = entry.cof[t].clone();
                        for (k, q) in quots.iter().enumerate() {
                            if !q.is_zero() {
                                acc = ring.sub(&acc, &ring.mul(q, &reduced[k].cof[t]));
                            }
                        }
                        acc
                    })
                    .collect()
            } else {
                Vec::new()
            };
            reduced.push(WorkEntry { poly: rem, cof });
        } else {
            let rem = reduce_for_basis(ring, &entry.poly, &finals);
            debug_assert!(!rem.is_zero());
            reduced.push(WorkEntry {
                poly: ring.normalize_generator(&rem),
                cof: Vec::new(),
            });
        }
    }

    // monic normalization
    let mut polys = Vec::with_capacity(reduced.len());
    let mut cofs = Vec::with_capacity(reduced.len());
    for entry in reduced {
        let lc = entry.poly.leading().unwrap().coeff.clone();
        let inv = ring.coeff_inv(&lc);
        polys.push(ring.scale(&entry.poly, &inv));
        if track {
            cofs.push(
                entry
                    .cof
                    .iter()
                    .map(|c| ring.scale(c, &inv))
                    .collect::<Vec<_>>(),
            );
        }
    }

    Ok((polys, if track { Some(cofs) } else { None }))
}

/// The reduced Groebner basis of the ideal generated by `gens` under the
/// ring's monomial order.
pub fn groebner_basis(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let (polys, _) = buchberger(ring, gens, config, false)?;
    Ok(GroebnerBasis {
        ring: Arc::clone(ring),
        polys,
    })
}

/// Reduced basis plus cofactors: `basis[i] = sum_j cofactors[i][j] * gens[j]`.
pub fn groebner_basis_with_cofactors(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<(GroebnerBasis, Vec<Vec<Polynomial>>)> {
    let (polys, cofs) = buchberger(ring, gens, config, true)?;
    Ok((
        GroebnerBasis {
            ring: Arc::clone(ring),
            polys,
        },
        cofs.unwrap(),
    ))
}

/// Buchberger criterion as a predicate: true iff every S-polynomial of the
/// list reduces to zero against the list. Coprime leading monomials are
/// skipped (their S-polynomials always reduce to zero).
pub fn is_groebner_basis(ring: &Ring, polys: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    let all: Vec<Polynomial> = nonzero.iter().map(|p| (*p).clone()).collect();
    for i in 0..nonzero.len() {
        for j in (i + 1)..nonzero.len() {
            let lm_i = nonzero[i].leading_monomial().unwrap();
            let lm_j = nonzero[j].leading_monomial().unwrap();
            if lm_i.lcm(lm_j) == lm_i.mul(lm_j) {
                continue;
            }
            let s = s_polynomial(ring, nonzero[i], nonzero[j]);
            if !normal_form(ring, &s, &all).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::MonomialOrder;

    fn qxy() -> Arc<Ring> {
        Ring::new(vec!["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn gb(ring: &Arc<Ring>, gens: &[&str]) -> GroebnerBasis {
        let polys: Vec<Polynomial> = gens.iter().map(|s| p(ring, s)).collect();
        groebner_basis(ring, &polys, &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn normal_form_single_step() {
        // oracle: one division step x^2*y -> y*y
        let r = qxy();
        let nf = normal_form(&r, &p(&r, "x^2*y"), &[p(&r, "x^2-y")]);
        assert_eq!(nf, p(&r, "y^2"));
    }

    #[test]
    fn normal_form_against_unit() {
        let r = qxy();
        let nf = normal_form(&r, &p(&r, "x^3-2*y+5"), &[r.one_poly()]);
        assert!(nf.is_zero());
    }

    #[test]
    fn generators_reduce_to_zero_against_their_basis() {
        let r = qxy();
        let gens = vec![p(&r, "x^2-y"), p(&r, "x*y-1")];
        let basis = groebner_basis(&r, &gens, &GroebnerConfig::default()).unwrap();
        for g in &gens {
            assert!(basis.contains(g));
        }
    }

    #[test]
    fn already_reduced_pair_is_kept() {
        let r = qxy();
        let basis = gb(&r, &["x", "y"]);
        assert_eq!(basis.polys(), &[p(&r, "y"), p(&r, "x")]);
    }

    #[test]
    fn principal_ideal_becomes_monic() {
        let r = qxy();
        let basis = gb(&r, &["3*x^2-6*y"]);
        assert_eq!(basis.polys(), &[p(&r, "x^2-2*y")]);
    }

    #[test]
    fn division_reconstructs_input() {
        let r = qxy();
        let f = p(&r, "x^3*y+x*y^2-y");
        let divisors = vec![p(&r, "x^2-y"), p(&r, "x*y-1")];
        let (q, rem) = divide(&r, &f, &divisors);
        let mut acc = rem.clone();
        for (qi, di) in q.iter().zip(&divisors) {
            acc = r.add(&acc, &r.mul(qi, di));
        }
        assert_eq!(acc, f);
        for t in rem.terms() {
            for d in &divisors {
                assert!(!d.leading_monomial().unwrap().divides(&t.mono));
            }
        }
    }

    #[test]
    fn buchberger_criterion_predicate() {
        let r = qxy();
        // S-polynomial of (x^2 - y, y^2) reduces to zero by hand
        assert!(is_groebner_basis(&r, &[p(&r, "x^2-y"), p(&r, "y^2")]));
        // single polynomial is always a basis
        assert!(is_groebner_basis(&r, &[p(&r, "x^3-y+1")]));
        // reduced basis of {x^2 - y, x} is {x, y}, so the pair is not a basis
        assert!(!is_groebner_basis(&r, &[p(&r, "x^2-y"), p(&r, "x")]));
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let r = qxy();
        let a = gb(&r, &["x^2-y", "x*y-1", "x^3-x"]);
        let b = gb(&r, &["x^3-x", "x*y-1", "x^2-y"]);
        assert_eq!(a.polys(), b.polys());
    }

    #[test]
    fn idempotent_on_its_own_output() {
        let r = qxy();
        let basis = gb(&r, &["x^2+y^2-1", "x-y"]);
        let again =
            groebner_basis(&r, basis.polys(), &GroebnerConfig::default()).unwrap();
        assert_eq!(basis.polys(), again.polys());
        assert!(is_groebner_basis(&r, basis.polys()));
    }

    #[test]
    fn cofactors_reconstruct_basis_elements() {
        let r = qxy();
        let gens = vec![p(&r, "x^2-y"), p(&r, "x*y-1"), p(&r, "y^3-x")];
        let (basis, cofs) =
            groebner_basis_with_cofactors(&r, &gens, &GroebnerConfig::default()).unwrap();
        assert_eq!(basis.polys().len(), cofs.len());
        for (g, row) in basis.polys().iter().zip(&cofs) {
            let mut acc = Polynomial::zero();
            for (c, f) in row.iter().zip(&gens) {
                acc = r.add(&acc, &r.mul(c, f));
            }
            assert_eq!(&acc, g);
        }
    }

    #[test]
    fn pair_limit_is_an_error() {
        let r = qxy();
        let gens = vec![p(&r, "x^2-y"), p(&r, "x*y-1"), p(&r, "y^2-x")];
        let config = GroebnerConfig {
            max_pairs: 0,
            max_terms: 1_000,
        };
        assert!(matches!(
            groebner_basis(&r, &gens, &config),
            Err(Error::PairLimitExceeded { .. })
        ));
    }

    #[test]
    fn groebner_over_prime_field() {
        let r = Ring::with_characteristic(vec!["x", "y"], 5, MonomialOrder::GrevLex).unwrap();
        let gens = vec![p(&r, "2*x^2+y"), p(&r, "3*x*y+x")];
        let basis = groebner_basis(&r, &gens, &GroebnerConfig::default()).unwrap();
        assert!(is_groebner_basis(&r, basis.polys()));
        for g in &gens {
            assert!(basis.contains(g));
        }
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = qxy();
        let basis = groebner_basis(&r, &[], &GroebnerConfig::default()).unwrap();
        assert!(basis.is_zero_ideal());
        assert_eq!(basis.normal_form(&p(&r, "x+y")), p(&r, "x+y"));
    }

    #[test]
    fn fraction_free_reduction_matches_plain_division() {
        // the two arithmetic routes must return the identical exact
        // remainder, including on long reductions that trigger the
        // periodic content strip
        let r = qxy();
        let divisors = vec![
            p(&r, "x^2-3*y"),
            p(&r, "2*x*y-5"),
            p(&r, "7*y^3-x-1"),
        ];
        let primitive: Vec<Polynomial> = divisors
            .iter()
            .map(|g| r.normalize_generator(g))
            .collect();
        let mut inputs = vec![
            p(&r, "x^9*y^7-4*x^5*y^5+1/3*x^2*y-x+11"),
            p(&r, "x^20+y^20"),
            p(&r, "1/7*x^15*y^10-2/9*x^3"),
        ];
        // force a long reduction with growing coefficients
        let mut big = p(&r, "x+5*y+1");
        for _ in 0..5 {
            big = r.mul(&big, &big);
        }
        inputs.push(big);
        for f in &inputs {
            let fast = normal_form_primitive(&r, f, &primitive);
            let plain = normal_form_simple(&r, f, &primitive);
            assert_eq!(fast, plain);
            let adaptive = reduce_for_basis(&r, f, &primitive);
            assert_eq!(adaptive, plain);
        }
    }

    #[test]
    fn ideal_equality_is_order_independent() {
        // two generating sets of the same ideal have identical reduced
        // bases under any admissible order
        let grevlex = qxy();
        let lex = Ring::new(vec!["x", "y"], MonomialOrder::Lex).unwrap();
        for ring in [&grevlex, &lex] {
            let a = [p(ring, "x^2-y"), p(ring, "x*y")];
            let b = [
                p(ring, "x^2-y+x*y"),
                p(ring, "x*y"),
                p(ring, "x^3-x*y"),
            ];
            let ga = groebner_basis(ring, &a, &GroebnerConfig::default()).unwrap();
            let gb_ = groebner_basis(ring, &b, &GroebnerConfig::default()).unwrap();
            assert_eq!(ga.polys(), gb_.polys());
        }
        // and a pair that differs only in one order's reduced form still
        // compares equal as ideals in both orders
        let f = [p(&grevlex, "x-y^2"), p(&grevlex, "y^3")];
        let g = [p(&grevlex, "x-y^2+y^3"), p(&grevlex, "y^3"), p(&grevlex, "x*y")];
        let ga = groebner_basis(&grevlex, &f, &GroebnerConfig::default()).unwrap();
        let gb_ = groebner_basis(&grevlex, &g, &GroebnerConfig::default()).unwrap();
        assert_eq!(ga.polys(), gb_.polys());
        let fl = [p(&lex, "x-y^2"), p(&lex, "y^3")];
        let gl = [p(&lex, "x-y^2+y^3"), p(&lex, "y^3"), p(&lex, "x*y")];
        let la = groebner_basis(&lex, &fl, &GroebnerConfig::default()).unwrap();
        let lb = groebner_basis(&lex, &gl, &GroebnerConfig::default()).unwrap();
        assert_eq!(la.polys(), lb.polys());
    }
}
