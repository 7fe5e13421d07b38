//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Matrices are row-major with every entry a field scalar. Dimensions in
//! scope are tiny (ambient spaces up to a few hundred), so everything is
//! dense and elimination is plain Gauss-Jordan with the first nonzero pivot.
//! Subspaces are kept in reduced row echelon form, which makes the basis
//! canonical: two subspaces are equal iff their stored bases are equal
//! entry-wise.

use crate::field::{FieldSpec, Scalar};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.scalar_string(&self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == n_cols),
            "ragged rows in matrix construction"
        );
        Matrix {
            field: field.clone(),
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out[(i, j)];
                    out.set(i, j, f.add(&cur, &f.mul(&a, &b)));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| {
            f.add(&self[(i, j)], &other[(i, j)])
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| {
            f.sub(&self[(i, j)], &other[(i, j)])
        })
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for j in 0..self.cols {
                if !v[j].is_zero() && !self[(i, j)].is_zero() {
                    acc = f.add(&acc, &f.mul(&self[(i, j)], &v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = self.field.one();
        let zero = self.field.zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { one } else { zero };
                if self[(i, j)] != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form with the pivot columns, via Gauss-Jordan
    /// elimination taking the first nonzero entry in each column as pivot.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let tmp = m[(r, j)];
                    let moved = m[(p, j)];
                    m.set(r, j, moved);
                    m.set(p, j, tmp);
                }
            }
            let inv = f.inv(&m[(r, c)]).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(&m[(r, j)], &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)];
                for j in c..m.cols {
                    let v = f.sub(&m[(i, j)], &f.mul(&factor, &m[(r, j)]));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{ v : M v = 0 }` as a canonical subspace of `k^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&r[(ri, fc)]);
            }
            rows.push(v);
        }
        Subspace::from_rows(f, self.cols, rows)
    }

    /// Kronecker product; `(A (x) B)[(i1*rB + i2, j1*cB + j2)] = A[i1,j1] B[i2,j2]`.
    /// For row vectors this matches the basis flattening
    /// `e_i (x) e_j -> e_{i*n + j}` used throughout the crate.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zeros(f, ra * rb, ca * cb);
        for i1 in 0..ra {
            for j1 in 0..ca {
                let a = self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rb {
                    for j2 in 0..cb {
                        let b = other[(i2, j2)];
                        if !b.is_zero() {
                            out.set(i1 * rb + i2, j1 * cb + j2, f.mul(&a, &b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan on `[M | I]`; `None` for singular input.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self[(i, j)]);
            }
            aug.set(i, n + i, f.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| r[(i, n + j)]))
    }

    /// Smallest `k >= 1` with `M^k = I`, or `None` if `M` is singular or no
    /// such `k <= cap` exists.
    pub fn multiplicative_order(&self, cap: usize) -> Option<usize> {
        assert_eq!(self.rows, self.cols, "order of a non-square matrix");
        if self.rank() < self.rows {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

/// A linear subspace of `k^ambient`, stored as an RREF basis without zero
/// rows. The representation is canonical: equality of subspaces is equality
/// of the stored bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(field: &FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector of wrong length");
        }
        let (rref, pivots) = Matrix::from_rows(field, rows).rref();
        let dim = pivots.len();
        let mut basis = Matrix::zeros(field, dim, ambient);
        for i in 0..dim {
            for j in 0..ambient {
                basis.set(i, j, rref[(i, j)]);
            }
        }
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        self.basis.field()
    }

    /// Canonical RREF basis, one row per basis vector.
    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                format!("{}", self.field()),
                format!("{}", other.field()),
            ));
        }
        Ok(())
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.coordinates_of(v).is_some()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside
    /// the subspace. Because the basis is RREF, the coordinate at basis row
    /// `r` is just `v[pivots[r]]`.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector of wrong length");
        let f = self.field();
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p]).collect();
        // Verify the combination reproduces v exactly.
        for j in 0..self.ambient {
            let mut acc = f.zero();
            for (r, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    acc = f.add(&acc, &f.mul(c, &self.basis[(r, j)]));
                }
            }
            if acc != v[j] {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis_rows().all(|r| self.contains_vec(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows: Vec<Vec<Scalar>> = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(<[Scalar]>::to_vec)
            .collect();
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    /// Intersection by the Zassenhaus block trick: row-reduce
    /// `[[A | A], [B | 0]]`; rows whose left half vanishes carry a basis of
    /// the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let f = self.field();
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis_rows() {
            let mut row = vec![f.zero(); 2 * n];
            row[..n].copy_from_slice(r);
            row[n..].copy_from_slice(r);
            rows.push(row);
        }
        for r in other.basis_rows() {
            let mut row = vec![f.zero(); 2 * n];
            row[..n].copy_from_slice(r);
            rows.push(row);
        }
        let (rref, _) = Matrix::from_rows(f, rows).rref();
        let mut inter_rows = Vec::new();
        for i in 0..rref.rows() {
            let left_zero = (0..n).all(|j| rref[(i, j)].is_zero());
            let right = rref.row(i)[n..].to_vec();
            if left_zero && right.iter().any(|s| !s.is_zero()) {
                inter_rows.push(right);
            }
        }
        Ok(Subspace::from_rows(f, n, inter_rows))
    }

    /// `dim(self / (self ∩ other))`: how much of `self` survives modulo
    /// `other`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() - self.intersect(other)?.dim())
    }

    /// Matrix of the quotient map `k^ambient -> k^ambient/self` in the basis
    /// of non-pivot coordinates: `Q v = 0` iff `v` lies in the subspace.
    pub fn quotient_map(&self) -> Matrix {
        let f = self.field();
        let n = self.ambient;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut q = Matrix::zeros(f, free.len(), n);
        for (r, &fc) in free.iter().enumerate() {
            q.set(r, fc, f.one());
            for (br, &pc) in self.pivots.iter().enumerate() {
                q.set(r, pc, f.neg(&self.basis[(br, fc)]));
            }
        }
        q
    }
}
