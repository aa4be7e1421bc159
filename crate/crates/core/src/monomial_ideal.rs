//! Exact integral closure of monomial ideals via the Newton polyhedron,
//! plus a brute-force integrality oracle used to cross-check it.

use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::lp::feasible_simplex;
use crate::monomial::Monomial;

/// The Newton polyhedron of a monomial ideal: the convex hull of the
/// generator exponent vectors together with the positive orthant. Stored by
/// its generating exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    generators: Vec<Vec<u32>>,
    dim: usize,
}

impl NewtonPolyhedron {
    pub fn new(generators: Vec<Vec<u32>>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::Degenerate("empty generator set".into()));
        };
        let dim = first.len();
        if generators.iter().any(|g| g.len() != dim) {
            return Err(Error::MatrixShape(
                "exponent vectors of unequal length".into(),
            ));
        }
        Ok(NewtonPolyhedron { generators, dim })
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Decides whether `self` is a monomial ideal (its reduced basis consists
/// of single terms) and returns the basis exponent vectors when it is.
pub fn monomial_generators(ideal: &IdealHandle) -> Result<Option<Vec<Monomial>>> {
    let gb = ideal.gb()?;
    if gb.polys().iter().all(|p| p.is_term()) {
        Ok(Some(
            gb.polys()
                .iter()
                .map(|p| p.leading_monomial().unwrap().clone())
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

pub fn is_monomial_ideal(ideal: &IdealHandle) -> Result<bool> {
    Ok(monomial_generators(ideal)?.is_some())
}

/// Membership of an exponent vector in the Newton polyhedron, by exact
/// rational linear programming.
pub fn np_membership(a: &Monomial, np: &NewtonPolyhedron) -> bool {
    debug_assert_eq!(a.len(), np.dim());
    feasible_simplex(np.generators(), a.exponents())
}

/// The integral closure of a monomial ideal: lattice points of the Newton
/// polyhedron inside the bounding box of the generators, reduced to the
/// divisibility-minimal ones.
///
/// The box suffices: if some coordinate of a point exceeds every generator's
/// coordinate, the convex combination certifying membership leaves at least
/// one unit of slack there, so decrementing that coordinate stays in the
/// polyhedron and yields a proper divisor.
pub fn monomial_integral_closure(ideal: &IdealHandle) -> Result<IdealHandle> {
    let Some(gens) = monomial_generators(ideal)? else {
        return Err(Error::NotMonomial);
    };
    if gens.is_empty() {
        // zero ideal
        return ideal.derived(Vec::new());
    }
    let n = ideal.ring().nvars();
    let exps: Vec<Vec<u32>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    let np = NewtonPolyhedron::new(exps.clone())?;
    let bounds: Vec<u32> = (0..n)
        .map(|j| exps.iter().map(|e| e[j]).max().unwrap())
        .collect();

    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut cursor = vec![0u32; n];
    loop {
        let mono = Monomial::new(cursor.clone());
        if np_membership(&mono, &np) {
            members.push(cursor.clone());
        }
        // mixed-radix increment over the box
        let mut pos = n;
        while pos > 0 {
            let i = pos - 1;
            if cursor[i] < bounds[i] {
                cursor[i] += 1;
                break;
            }
            cursor[i] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }

    let minimal: Vec<Vec<u32>> = members
        .iter()
        .filter(|a| {
            !members
                .iter()
                .any(|b| *b != **a && b.iter().zip(a.iter()).all(|(x, y)| x <= y))
        })
        .cloned()
        .collect();

    let ring = ideal.ring();
    let polys = minimal
        .into_iter()
        .map(|e| ring.monomial_poly(Monomial::new(e)))
        .collect::<Result<Vec<_>>>()?;
    ideal.derived(polys)
}

/// Brute-force integrality oracle: `x^a` is integral over the monomial
/// ideal if `k*a` dominates a sum of `k` generator exponents for some
/// `k ≤ bound` (then `X^k - x^{ka}` is the monic equation). Sound but not
/// complete for small bounds; used to cross-check the polyhedral route.
pub fn brute_force_oracle(a: &Monomial, generator_exps: &[Vec<u32>], bound: u32) -> bool {
    if generator_exps.is_empty() {
        return false;
    }
    let n = a.len();
    for k in 1..=bound {
        let target: Vec<u64> = a.exponents().iter().map(|&e| e as u64 * k as u64).collect();
        // search multisets of k generators whose sum is dominated by k*a
        fn search(
            gens: &[Vec<u32>],
            start: usize,
            remaining: u32,
            acc: &mut [u64],
            target: &[u64],
        ) -> bool {
            if acc.iter().zip(target).any(|(s, t)| s > t) {
                return false;
            }
            if remaining == 0 {
                return true;
            }
            for i in start..gens.len() {
                for (slot, &e) in acc.iter_mut().zip(&gens[i]) {
                    *slot += e as u64;
                }
                if search(gens, i, remaining - 1, acc, target) {
                    return true;
                }
                for (slot, &e) in acc.iter_mut().zip(&gens[i]) {
                    *slot -= e as u64;
                }
            }
            false
        }
        let mut acc = vec![0u64; n];
        if search(generator_exps, 0, k, &mut acc, &target) {
            return true;
        }
    }
    false
}
