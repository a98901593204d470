//! Dense square matrices over an exact ring: products, determinants, exact
//! rank and kernels over Q(i), and the 2-local block embedding that every
//! representation in the crate is built from.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// Dense n×n matrix over an exact scalar ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = R::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Matrix { n, entries: vec![R::zero(); n * n] }
    }

    /// Builds from rows; every row must have the same length as the row count.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::Dimension(format!("row of length {} in {}×{} matrix", r.len(), n, n)));
            }
        }
        Ok(Matrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Flattened row-major copy of the entries (length n²).
    pub fn flatten(&self) -> Vec<R> {
        self.entries.clone()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::Dimension(format!("{}×{} · {}×{}", self.n, self.n, rhs.n, rhs.n)));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.n {
            return Err(Error::Dimension(format!("vector of length {} vs n = {}", v.len(), self.n)));
        }
        Ok((0..self.n)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.n {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect())
    }

    /// Exact determinant: cofactor expansion for n ≤ 3, fraction-free
    /// (Bareiss) elimination otherwise. Works over any integral domain
    /// because the intermediate divisions are exact.
    pub fn det(&self) -> R {
        match self.n {
            0 => R::one(),
            1 => self.get(0, 0).clone(),
            2 => self.det2(),
            3 => self.det3(),
            _ => self.det_bareiss(),
        }
    }

    fn det2(&self) -> R {
        self.get(0, 0).mul(self.get(1, 1)).sub(&self.get(0, 1).mul(self.get(1, 0)))
    }

    fn det3(&self) -> R {
        let m = |i: usize, j: usize| self.get(i, j);
        let mut acc = R::zero();
        // Sarrus
        acc = acc.add(&m(0, 0).mul(&m(1, 1).mul(m(2, 2))));
        acc = acc.add(&m(0, 1).mul(&m(1, 2).mul(m(2, 0))));
        acc = acc.add(&m(0, 2).mul(&m(1, 0).mul(m(2, 1))));
        acc = acc.sub(&m(0, 2).mul(&m(1, 1).mul(m(2, 0))));
        acc = acc.sub(&m(0, 0).mul(&m(1, 2).mul(m(2, 1))));
        acc = acc.sub(&m(0, 1).mul(&m(1, 0).mul(m(2, 2))));
        acc
    }

    fn det_bareiss(&self) -> R {
        let n = self.n;
        let mut a: Vec<Vec<R>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return R::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                a[i][k] = R::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Inverse of a 2×2 matrix by the adjugate formula; requires the
    /// determinant to be a unit of the ring. This is the only ring-level
    /// inverse needed (the τ-block images).
    pub fn inverse_2x2(&self) -> Result<Self> {
        if self.n != 2 {
            return Err(Error::Dimension(format!("inverse_2x2 on {}×{}", self.n, self.n)));
        }
        let det = self.det();
        let inv = det
            .inverse()
            .ok_or_else(|| Error::Singular(format!("2×2 determinant {det} is not a unit")))?;
        Matrix::from_rows(vec![
            vec![inv.mul(self.get(1, 1)), inv.mul(&self.get(0, 1).neg())],
            vec![inv.mul(&self.get(1, 0).neg()), inv.mul(self.get(0, 0))],
        ])
    }

    /// Conjugation by a diagonal matrix: `D⁻¹ · self · D` with
    /// `D = diag(d)`. Every entry of `d` must be a unit.
    pub fn conjugate_diag(&self, d: &[R]) -> Result<Self> {
        if d.len() != self.n {
            return Err(Error::Dimension(format!("diagonal of length {} vs n = {}", d.len(), self.n)));
        }
        let inv: Vec<R> = d
            .iter()
            .map(|x| x.inverse().ok_or_else(|| Error::Singular(format!("diagonal entry {x} is not invertible"))))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, inv[i].mul(&self.get(i, j).mul(&d[j])));
            }
        }
        Ok(out)
    }
}

impl<F: Field> Matrix<F> {
    /// Exact rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<F>> = (0..self.n).map(|i| self.row(i).to_vec()).collect();
        row_reduce(rows).len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let rows: Vec<Vec<F>> = (0..self.n).map(|i| self.row(i).to_vec()).collect();
        kernel_of_rows(rows, self.n)
    }

    /// Field inverse via Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].inverse().unwrap();
            for x in &mut a[col] {
                *x = x.mul(&inv);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..2 * n {
                        let sub = factor.mul(&a[col][j]);
                        a[r][j] = a[r][j].sub(&sub);
                    }
                }
            }
        }
        let rows = a.into_iter().map(|row| row[n..].to_vec()).collect();
        Matrix::from_rows(rows).ok()
    }
}

/// Reduced row echelon form of a list of vectors; zero rows dropped.
/// Returns `(pivot column, row)` pairs sorted by pivot.
pub(crate) fn rref<F: Field>(rows: Vec<Vec<F>>) -> Vec<(usize, Vec<F>)> {
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    for row in rows {
        if let Some(reduced) = reduce_against(&basis, row) {
            insert_reduced(&mut basis, reduced);
        }
    }
    basis
}

fn row_reduce<F: Field>(rows: Vec<Vec<F>>) -> Vec<(usize, Vec<F>)> {
    rref(rows)
}

/// Reduces `row` against the basis; returns the normalized remainder when it
/// is independent.
fn reduce_against<F: Field>(basis: &[(usize, Vec<F>)], mut row: Vec<F>) -> Option<Vec<F>> {
    for (pivot, b) in basis {
        if !row[*pivot].is_zero() {
            let factor = row[*pivot].clone();
            for (x, y) in row.iter_mut().zip(b.iter()) {
                *x = x.sub(&factor.mul(y));
            }
        }
    }
    let pivot = row.iter().position(|x| !x.is_zero())?;
    let inv = row[pivot].inverse().unwrap();
    for x in &mut row {
        *x = x.mul(&inv);
    }
    Some(row)
}

fn insert_reduced<F: Field>(basis: &mut Vec<(usize, Vec<F>)>, row: Vec<F>) {
    let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero reduced row");
    // back-substitute into existing rows to keep the basis fully reduced
    for (_, b) in basis.iter_mut() {
        if !b[pivot].is_zero() {
            let factor = b[pivot].clone();
            for (x, y) in b.iter_mut().zip(row.iter()) {
                *x = x.sub(&factor.mul(y));
            }
        }
    }
    let at = basis.partition_point(|(p, _)| *p < pivot);
    basis.insert(at, (pivot, row));
}

/// Kernel basis for a rectangular row list with `ncols` columns.
pub(crate) fn kernel_of_rows<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let basis = rref(rows);
    let pivots: Vec<usize> = basis.iter().map(|(p, _)| *p).collect();
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (pivot, row) in &basis {
            v[*pivot] = row[free].neg();
        }
        kernel.push(v);
    }
    kernel
}

/// Incrementally maintained row space, used by the algebra-span closure.
pub(crate) struct RowSpace<F: Field> {
    ncols: usize,
    basis: Vec<(usize, Vec<F>)>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, row: Vec<F>) -> bool {
        assert_eq!(row.len(), self.ncols);
        match reduce_against(&self.basis, row) {
            Some(reduced) => {
                insert_reduced(&mut self.basis, reduced);
                true
            }
            None => false,
        }
    }
}

/// Places a 2×2 block at rows/columns (i, i+1) of an n×n identity matrix
/// (1-based i). This is the 2-local embedding: the identity blocks of sizes
/// i−1 and n−i−1 surround the block.
pub fn local_embed<R: Ring>(i: usize, n: usize, block: &Matrix<R>) -> Result<Matrix<R>> {
    if block.size() != 2 {
        return Err(Error::Dimension(format!("local block must be 2×2, got {0}×{0}", block.size())));
    }
    if n < 2 || i < 1 || i > n - 1 {
        return Err(Error::Index(format!("local position i = {i} with n = {n}")));
    }
    let mut m = Matrix::identity(n);
    let r = i - 1;
    for a in 0..2 {
        for b in 0..2 {
            m.set(r + a, r + b, block.get(a, b).clone());
        }
    }
    Ok(m)
}

/// Serialized matrix form: `{"ring": ..., "n": ..., "entries": [[..]]}` with
/// entries in the ring's string grammar.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn of<R: Ring>(m: &Matrix<R>) -> Self {
        MatrixJson {
            ring: R::NAME.to_string(),
            n: m.size(),
            entries: (0..m.size())
                .map(|i| m.row(i).iter().map(|e| e.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_matrix<R: Ring>(&self) -> Result<Matrix<R>> {
        if self.ring != R::NAME {
            return Err(Error::Parse(format!("ring mismatch: expected {}, got {}", R::NAME, self.ring)));
        }
        if self.entries.len() != self.n {
            return Err(Error::Dimension(format!("{} rows vs n = {}", self.entries.len(), self.n)));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| R::parse(s)).collect::<Result<Vec<R>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}
