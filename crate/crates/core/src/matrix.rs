//! Polynomial matrices: presentations, Jacobians, minors, Pfaffians.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A row-major matrix of polynomials over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Checked skew-symmetry: `M + M^t = 0` and zero diagonal.
    pub fn is_skew_symmetric(&self, ring: &Ring) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.cols {
                if !ring.add(self.get(i, j), self.get(j, i)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix product over `ring`.
    pub fn matmul(&self, ring: &Ring, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * M` with `v.len() == rows`.
    pub fn row_vec_mul(&self, ring: &Ring, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rows {
            return Err(Error::MatrixShape("row vector length mismatch".into()));
        }
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut acc = Polynomial::zero();
            for (i, vi) in v.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(vi, self.get(i, j)));
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// Determinant of the square submatrix picked out by `rows`/`cols` index
/// lists, by Laplace expansion along the first row. Division-free.
fn det_sub(ring: &Ring, m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    debug_assert_eq!(rows.len(), cols.len());
    match rows.len() {
        0 => ring.one_poly(),
        1 => m.get(rows[0], cols[0]).clone(),
        2 => {
            let a = ring.mul(m.get(rows[0], cols[0]), m.get(rows[1], cols[1]));
            let b = ring.mul(m.get(rows[0], cols[1]), m.get(rows[1], cols[0]));
            ring.sub(&a, &b)
        }
        _ => {
            let sub_rows = &rows[1..];
            let mut acc = Polynomial::zero();
            for (k, &cj) in cols.iter().enumerate() {
                let entry = m.get(rows[0], cj);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols
                    .iter()
                    .copied()
                    .filter(|&c| c != cj)
                    .collect();
                let minor = det_sub(ring, m, sub_rows, &rest);
                let signed = if k.is_multiple_of(2) {
                    ring.mul(entry, &minor)
                } else {
                    ring.neg(&ring.mul(entry, &minor))
                };
                acc = ring.add(&acc, &signed);
            }
            acc
        }
    }
}

pub fn determinant(ring: &Ring, m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::MatrixShape("determinant of a non-square matrix".into()));
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    Ok(det_sub(ring, m, &idx, &idx))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `r x r` minors of `m` (zeros dropped, duplicates kept).
pub fn minors(ring: &Ring, m: &PolyMatrix, r: usize) -> Result<Vec<Polynomial>> {
    if r == 0 || r > m.rows().min(m.cols()) {
        return Err(Error::OutOfRange(format!(
            "minor order {r} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let row_sets = combinations(m.rows(), r);
    let col_sets = combinations(m.cols(), r);
    let mut out = Vec::new();
    for rows in &row_sets {
        for cols in &col_sets {
            let d = det_sub(ring, m, rows, cols);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Pfaffian of the principal submatrix on `idx` (even length), by recursive
/// expansion along the first remaining row:
/// `pf(A) = sum_j (-1)^j a_{0j} pf(A without rows/cols 0 and j)`.
fn pfaffian_sub(ring: &Ring, m: &PolyMatrix, idx: &[usize]) -> Polynomial {
    match idx.len() {
        0 => ring.one_poly(),
        2 => m.get(idx[0], idx[1]).clone(),
        _ => {
            let mut acc = Polynomial::zero();
            for j in 1..idx.len() {
                let entry = m.get(idx[0], idx[j]);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx[1..]
                    .iter()
                    .copied()
                    .filter(|&r| r != idx[j])
                    .collect();
                let sub = pfaffian_sub(ring, m, &rest);
                let term = ring.mul(entry, &sub);
                // sign (-1)^(j+1) with j counted from 1
                let signed = if !j.is_multiple_of(2) { term } else { ring.neg(&term) };
                acc = ring.add(&acc, &signed);
            }
            acc
        }
    }
}

/// Pfaffians of all `size x size` principal submatrices of a
/// skew-symmetric matrix; zero Pfaffians are dropped.
pub fn pfaffians(ring: &Ring, m: &PolyMatrix, size: usize) -> Result<Vec<Polynomial>> {
    if size == 0 || !size.is_multiple_of(2) {
        return Err(Error::OddPfaffianSize);
    }
    if !m.is_skew_symmetric(ring) {
        return Err(Error::NotSkewSymmetric);
    }
    if size > m.rows() {
        return Err(Error::OutOfRange(format!(
            "pfaffian size {size} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let mut out = Vec::new();
    for idx in combinations(m.rows(), size) {
        let pf = pfaffian_sub(ring, m, &idx);
        if !pf.is_zero() {
            out.push(pf);
        }
    }
    Ok(out)
}

/// The `(#vars x #gens)` Jacobian matrix; column `j` is the gradient of
/// `gens[j]`. Characteristic 0 only.
pub fn jacobian_matrix(ring: &Ring, gens: &[Polynomial]) -> Result<PolyMatrix> {
    if ring.characteristic() != 0 {
        return Err(Error::CharacteristicNotZero);
    }
    let rows = ring.nvars();
    let cols = gens.len();
    let mut entries = Vec::with_capacity(rows * cols);
    for v in 0..rows {
        for g in gens {
            entries.push(ring.partial_derivative(g, v)?);
        }
    }
    PolyMatrix::new(rows, cols, entries)
}
