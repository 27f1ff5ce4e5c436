//! Dense exact linear algebra: matrices, reduced row echelon form,
//! nullspaces, linear solving, and a canonical-form subspace lattice.
//!
//! All the multiplier machinery reduces to linear systems over an exact
//! field, so this kernel is the workhorse of the crate. Dimensions stay at
//! desk scale (≤ a few hundred), so everything is dense and simple.
//!
//! Conventions:
//! - vectors are `Vec<Scalar>` coordinate columns;
//! - a `Matrix` with `rows × cols` entries represents a linear map
//!   k^cols → k^rows acting on column vectors via [`Matrix::apply`];
//! - a [`Subspace`] stores its basis as the *rows* of a reduced
//!   row-echelon matrix, which makes equality of subspaces literal
//!   equality of the stored bases.
//!
//! Pivoting is deterministic (leftmost pivot column, first nonzero row), so
//! canonical forms and particular solutions are reproducible across runs.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use std::fmt;

/// Zero vector of the given length.
pub fn vec_zero(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

/// The `i`-th standard basis vector of k^n.
pub fn std_basis_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec_zero(field, n);
    v[i] = field.one();
    v
}

/// Componentwise sum.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

/// Componentwise difference.
pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Scalar multiple.
pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c.mul(x)).collect()
}

/// Is every coordinate zero?
pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// A dense matrix over one of the exact fields, stored row-major.
///
/// Invariant: `entries.len() == rows * cols` and every entry lies in `field`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

impl Matrix {
    /// The zero matrix.
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have equal length.
    pub fn from_rows(field: Field, row_data: Vec<Vec<Scalar>>) -> Matrix {
        let rows = row_data.len();
        let cols = row_data.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for r in row_data {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix entrywise from a function of (row, col).
    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Entry accessor.
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    /// Entry mutator.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    /// A row as a slice.
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// A column as an owned vector.
    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&e.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.field, self.rows, other.cols, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc = acc.add(&a.mul(other.at(k, c)));
                }
            }
            acc
        })
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// The inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(self.field, n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let echelon = rref(&augmented);
        // Invertible iff the left block reduced to the identity.
        if echelon.pivots.len() != n || echelon.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| {
            echelon.matrix.at(r, c + n).clone()
        }))
    }

    /// Entrywise field conjugation.
    pub fn conj(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Scalar::conj).collect(),
        }
    }

    /// Stacks matrices vertically; all must share the column count.
    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut entries = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            entries.extend(m.entries.iter().cloned());
            rows += m.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Is every entry zero?
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// The matrix flattened row-major (used to treat endomorphisms as vectors).
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Rebuilds a matrix from a row-major flattening.
    pub fn from_vectorized(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "vectorized length mismatch");
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The result of row reduction: the echelon matrix plus pivot bookkeeping.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// The unique reduced row-echelon form.
    pub matrix: Matrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row-echelon form with deterministic pivoting.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        // First nonzero entry at or below the current pivot row.
        let Some(src) = (pivot_row..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        // Swap into place and normalize to a leading 1.
        for c in 0..a.cols {
            let tmp = a.at(pivot_row, c).clone();
            let moved = a.at(src, c).clone();
            a.set(pivot_row, c, moved);
            a.set(src, c, tmp);
        }
        let inv = a.at(pivot_row, col).inv().expect("pivot is nonzero");
        for c in 0..a.cols {
            let v = a.at(pivot_row, c).mul(&inv);
            a.set(pivot_row, c, v);
        }
        // Clear the column everywhere else.
        for r in 0..a.rows {
            if r != pivot_row && !a.at(r, col).is_zero() {
                let factor = a.at(r, col).clone();
                for c in 0..a.cols {
                    let v = a.at(r, c).sub(&factor.mul(a.at(pivot_row, c)));
                    a.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == a.rows {
            break;
        }
    }
    Echelon { matrix: a, pivots }
}

/// The solution space of `m·x = 0`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let ech = rref(m);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols];
        for (row, &col) in ech.pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        // x[free] = 1; pivot variables read off the echelon rows.
        let mut v = vec_zero(m.field, m.cols);
        v[free] = m.field.one();
        for (row, &col) in ech.pivots.iter().enumerate() {
            v[col] = ech.matrix.at(row, free).neg();
        }
        basis.push(v);
    }
    Subspace::from_spanning(m.field, m.cols, &basis)
}

/// One particular solution of `m·x = b` (free variables set to zero), or
/// `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows, "right-hand side length mismatch");
    let mut aug = Matrix::zero(m.field, m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, m.cols, b[r].clone());
    }
    let ech = rref(&aug);
    if ech.pivots.last() == Some(&m.cols) {
        return None; // a pivot in the augmented column: inconsistent
    }
    let mut x = vec_zero(m.field, m.cols);
    for (row, &col) in ech.pivots.iter().enumerate() {
        x[col] = ech.matrix.at(row, m.cols).clone();
    }
    Some(x)
}

/// A linear subspace of k^ambient in canonical form.
///
/// The basis rows are the unique reduced row-echelon basis, so two values
/// are equal as subspaces exactly when they are `==`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub field: Field,
    pub ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    /// All of k^ambient.
    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of the given vectors, canonicalized.
    pub fn from_spanning(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        let ech = rref(&Matrix::from_rows(field, vectors.to_vec()));
        let rank = ech.rank();
        let mut basis = Matrix::zero(field, rank, ambient);
        for r in 0..rank {
            for c in 0..ambient {
                basis.set(r, c, ech.matrix.at(r, c).clone());
            }
        }
        Subspace {
            field,
            ambient,
            basis,
            pivots: ech.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// The canonical basis matrix (rows are basis vectors).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// The canonical basis as owned vectors.
    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    /// Reduces `v` modulo this subspace: the result is `v` minus an element
    /// of the subspace, with zeros in every pivot coordinate. `v` lies in
    /// the subspace exactly when the reduction is zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector/ambient mismatch");
        let mut w = v.to_vec();
        for (row, &col) in self.pivots.iter().enumerate() {
            if !w[col].is_zero() {
                let coeff = w[col].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].sub(&coeff.mul(self.basis.at(row, c)));
                }
            }
        }
        w
    }

    /// Membership test.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Is every element of `self` in `other`?
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// Subspace sum.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::from_spanning(self.field, self.ambient, &vectors)
    }

    /// Subspace intersection (Zassenhaus: row-reduce [U|U; V|0] and read the
    /// right blocks of rows whose left block vanished).
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let n = self.ambient;
        let mut rows = Vec::new();
        for u in self.basis_vectors() {
            let mut r = u.clone();
            r.extend(u);
            rows.push(r);
        }
        for v in other.basis_vectors() {
            let mut r = v;
            r.extend(vec_zero(self.field, n));
            rows.push(r);
        }
        let ech = rref(&Matrix::from_rows(self.field, rows));
        let mut basis = Vec::new();
        for r in 0..ech.rank() {
            let row = ech.matrix.row(r);
            if vec_is_zero(&row[..n]) {
                basis.push(row[n..].to_vec());
            }
        }
        Subspace::from_spanning(self.field, n, &basis)
    }

    /// The image `f(S)` under a linear map given as a matrix.
    pub fn image_under(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols, self.ambient, "map domain mismatch");
        let vectors: Vec<_> = self.basis_vectors().iter().map(|v| f.apply(v)).collect();
        Subspace::from_spanning(self.field, f.rows, &vectors)
    }

    /// The preimage `f⁻¹(S)`: all `v` with `f(v) ∈ S`.
    pub fn preimage_under(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.rows, self.ambient, "map codomain mismatch");
        // v ∈ f⁻¹(S) ⇔ (reduce mod S)∘f applied to v vanishes.
        let reduce_then_f = self.reduction_matrix().matmul(f);
        nullspace(&reduce_then_f)
    }

    /// The matrix of [`Subspace::reduce`] (its kernel is this subspace).
    pub fn reduction_matrix(&self) -> Matrix {
        let n = self.ambient;
        let cols: Vec<Vec<Scalar>> =
            (0..n).map(|j| self.reduce(&std_basis_vec(self.field, n, j))).collect();
        Matrix::from_fn(self.field, n, n, |r, c| cols[c][r].clone())
    }

    /// The quotient k^ambient / S with canonical projection and lift.
    pub fn quotient(&self) -> QuotientSpace {
        let n = self.ambient;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let red = self.reduction_matrix();
        let proj = Matrix::from_fn(self.field, free.len(), n, |r, c| red.at(free[r], c).clone());
        let mut lift = Matrix::zero(self.field, n, free.len());
        for (j, &f) in free.iter().enumerate() {
            lift.set(f, j, self.field.one());
        }
        QuotientSpace {
            relations: self.clone(),
            proj,
            lift,
        }
    }
}

/// A quotient space k^n / S with a canonical section.
///
/// `proj` sends a vector to its quotient coordinates (the free coordinates
/// of its reduction mod S); `lift` is the section placing quotient
/// coordinates back at the free positions. `proj ∘ lift = id` holds exactly.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub relations: Subspace,
    pub proj: Matrix,
    pub lift: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.proj.rows
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient
    }
}

/// Coordinates of `v` in the row space of `rows` (rows need not be in
/// echelon form, but must be independent for the answer to be unique).
pub fn coordinates_in_rows(rows: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    solve(&rows.transpose(), v)
}

/// Checks that ambient dimensions agree, for operations exposed to callers
/// who assemble spaces by hand.
pub fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch(format!(
            "ambient {} vs {}",
            a.ambient, b.ambient
        )));
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field, b.field)));
    }
    Ok(())
}
