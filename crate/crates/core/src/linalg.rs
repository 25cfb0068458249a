//! Dense exact linear algebra: matrices, canonical subspaces, and the
//! kernel/image/sum/intersection/quotient calculus everything else reduces to.
//!
//! Linear maps between coordinate spaces are stored with one row per source
//! basis vector: row `p` holds the coordinates of the image of `e_p`. Applying
//! such a map to a vector `v` is therefore `v^T M` ([`Matrix::apply`]).
//! [`Matrix::kernel`] and [`Matrix::image`] instead follow the column
//! convention `v -> M v` used for systems of equations.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{dot, is_zero_vector, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row vectors, each of which must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor from integer rows. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| T::from_int(x))
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Row-major entries.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} versus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul_ref(s)).collect(),
        }
    }

    /// Image of `v` under the map whose rows are images of basis vectors: `v^T M`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows, "vector length does not match source dimension");
        let mut out = vec![T::zero(); self.cols];
        for (coef, row) in v.iter().zip(self.rows()) {
            crate::scalar::axpy(&mut out, coef, row);
        }
        out
    }

    /// Ordinary matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        self.rows().map(|row| dot(row, v)).collect()
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Self {
        let (rows, _) = reduce_rows(self.to_rows(), self.cols);
        Self::from_rows(self.cols, rows).expect("row lengths preserved by elimination")
    }

    pub fn rank(&self) -> usize {
        reduce_rows(self.to_rows(), self.cols).1.len()
    }

    /// `{v : M v = 0}` as a canonical subspace of dimension `cols - rank`.
    pub fn kernel(&self) -> Subspace<T> {
        kernel_of_rows(self.to_rows(), self.cols)
    }

    /// Column space of `M`, i.e. the row space of the transpose.
    pub fn image(&self) -> Subspace<T> {
        self.transpose().row_space()
    }

    pub fn row_space(&self) -> Subspace<T> {
        Subspace::from_echelon(self.cols, reduce_rows(self.to_rows(), self.cols))
    }

    /// Inverse of a square matrix, or `None` when it is singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<Vec<T>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { T::one() } else { T::zero() }));
                row
            })
            .collect();
        let (rows, pivots) = reduce_rows(augmented, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(Self {
            rows: n,
            cols: n,
            data,
        })
    }

    /// Some solution of `M x = b`, with every free variable set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows, "right-hand side length does not match row count");
        let augmented: Vec<Vec<T>> = self
            .rows()
            .zip(b)
            .map(|(row, rhs)| {
                let mut r = row.to_vec();
                r.push(rhs.clone());
                r
            })
            .collect();
        let (rows, pivots) = reduce_rows(augmented, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Gauss-Jordan elimination on owned rows. Returns the nonzero rows of the
/// reduced row echelon form and their pivot columns.
pub(crate) fn reduce_rows<T: Field>(mut rows: Vec<Vec<T>>, cols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    rows.retain(|r| !is_zero_vector(r));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let lead = rows[rank][c].clone();
        if !lead.is_one() {
            let inv = T::one() / lead;
            for x in rows[rank][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
        }
        let support: Vec<usize> = (c + 1..cols).filter(|&j| !rows[rank][j].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(rank);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        for other in before.iter_mut().chain(after.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut other[c], T::zero());
            for &j in &support {
                other[j].sub_mul_assign(&factor, &pivot_row[j]);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub(crate) fn kernel_of_rows<T: Field>(rows: Vec<Vec<T>>, cols: usize) -> Subspace<T> {
    let (reduced, pivots) = reduce_rows(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<T>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect();
    Subspace::from_echelon(cols, reduce_rows(vectors, cols))
}

/// A linear subspace of `T^d`, stored as its reduced row echelon basis.
///
/// The representation is canonical, so two subspaces are equal exactly when
/// their bases are bit-equal; the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<T>>,
    {
        let rows: Vec<Vec<T>> = vectors.into_iter().collect();
        if let Some(bad) = rows.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: bad.len(),
            });
        }
        Ok(Self::from_echelon(ambient, reduce_rows(rows, ambient)))
    }

    fn from_echelon(ambient: usize, (rows, pivots): (Vec<Vec<T>>, Vec<usize>)) -> Self {
        Self {
            ambient,
            basis: Matrix::from_rows(ambient, rows).expect("echelon rows have ambient length"),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after reduction against the canonical basis; zero
    /// exactly when `v` lies in the subspace.
    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut rest = v.to_vec();
        for (row, &p) in self.basis.rows().zip(&self.pivots) {
            if rest[p].is_zero() {
                continue;
            }
            let factor = rest[p].clone();
            for (x, b) in rest.iter_mut().zip(row) {
                if !b.is_zero() {
                    x.sub_mul_assign(&factor, b);
                }
            }
        }
        rest
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let rows = self.basis.to_rows().into_iter().chain(other.basis.to_rows());
        Self::span(self.ambient, rows)
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: each kernel vector
    /// `(alpha, beta)` gives the common element `sum alpha_i a_i`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let k = self.dim();
        let unknowns = k + other.dim();
        let rows: Vec<Vec<T>> = (0..self.ambient)
            .map(|t| {
                self.basis_vectors()
                    .map(|a| a[t].clone())
                    .chain(other.basis_vectors().map(|b| -b[t].clone()))
                    .collect()
            })
            .collect();
        let coefficients = kernel_of_rows(rows, unknowns);
        let common = coefficients.basis_vectors().map(|c| {
            let mut v = vec![T::zero(); self.ambient];
            for (alpha, a) in c[..k].iter().zip(self.basis_vectors()) {
                crate::scalar::axpy(&mut v, alpha, a);
            }
            v
        });
        Self::span(self.ambient, common.collect::<Vec<_>>())
    }

    /// `dim(big) - dim(small)`, after checking `small ⊆ big`.
    pub fn quotient_dim(big: &Self, small: &Self) -> Result<usize> {
        if !small.is_subspace_of(big)? {
            return Err(Error::NotASubspace);
        }
        Ok(big.dim() - small.dim())
    }

    /// `{w : w · v = 0 for every v in self}`.
    pub fn orthogonal_complement(&self) -> Self {
        self.basis.kernel()
    }

    /// A matrix whose kernel is exactly this subspace.
    pub fn constraints(&self) -> Matrix<T> {
        self.orthogonal_complement().basis.clone()
    }

    /// `self × other` inside `T^(d1 + d2)`.
    pub fn product(&self, other: &Self) -> Self {
        let ambient = self.ambient + other.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in self.basis_vectors() {
            let mut w = v.to_vec();
            w.resize(ambient, T::zero());
            rows.push(w);
        }
        for v in other.basis_vectors() {
            let mut w = vec![T::zero(); self.ambient];
            w.extend_from_slice(v);
            rows.push(w);
        }
        Self::span(ambient, rows).expect("product rows have ambient length")
    }

    /// `{v^T M : v in self}` for a map given in row convention.
    pub fn map_through(&self, map: &Matrix<T>) -> Result<Self> {
        self.check_ambient(map.nrows())?;
        Self::span(map.ncols(), self.basis_vectors().map(|v| map.apply(v)).collect::<Vec<_>>())
    }

    /// `{v : v^T M in target}` for a map given in row convention.
    pub fn preimage(map: &Matrix<T>, target: &Self) -> Result<Self> {
        target.check_ambient(map.ncols())?;
        // v^T M lies in target iff every constraint row w satisfies w·(M^T v) = 0.
        let constraints = target.constraints();
        let rows: Vec<Vec<T>> = constraints.rows().map(|w| map.mul_vec(w)).collect();
        Ok(kernel_of_rows(rows, map.nrows()))
    }
}

impl<T: fmt::Debug> fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .finish()
    }
}

impl<T: fmt::Display> fmt::Display for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span {} in dimension {}", self.basis, self.ambient)
    }
}

/// A homogeneous linear system whose equations carry labels, so that a
/// concrete candidate solution can report which equations it violates.
#[derive(Clone, Debug)]
pub struct LinearSystem<T, L> {
    vars: usize,
    rows: Vec<Vec<T>>,
    labels: Vec<L>,
}

impl<T: Field, L> LinearSystem<T, L> {
    pub fn new(vars: usize) -> Self {
        Self {
            vars,
            rows: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds the equation `row · x = 0`. Identically zero equations are dropped.
    pub fn push(&mut self, label: L, row: Vec<T>) {
        assert_eq!(row.len(), self.vars, "equation length does not match variable count");
        if !is_zero_vector(&row) {
            self.rows.push(row);
            self.labels.push(label);
        }
    }

    pub fn extend(&mut self, other: LinearSystem<T, L>) {
        assert_eq!(self.vars, other.vars);
        self.rows.extend(other.rows);
        self.labels.extend(other.labels);
    }

    pub fn solution_space(&self) -> Subspace<T> {
        kernel_of_rows(self.rows.clone(), self.vars)
    }

    pub fn into_solution_space(self) -> Subspace<T> {
        kernel_of_rows(self.rows, self.vars)
    }

    /// Labels of every equation `x` fails.
    pub fn violations<'a>(&'a self, x: &'a [T]) -> impl Iterator<Item = &'a L> + 'a {
        assert_eq!(x.len(), self.vars);
        self.rows
            .iter()
            .zip(&self.labels)
            .filter(move |(row, _)| !dot(row, x).is_zero())
            .map(|(_, label)| label)
    }

    pub fn is_satisfied_by(&self, x: &[T]) -> bool {
        self.violations(x).next().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_ints(rows)
    }

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(m(&[&[2, 4], &[1, 2]]).rref(), m(&[&[1, 2]]));
        assert_eq!(Matrix::<Q>::identity(3).rref(), Matrix::identity(3));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rref(), m(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rref_with_fractions() {
        let r = m(&[&[2, 1, 0], &[0, 3, 1]]).rref();
        let third = Q::new(1.into(), 3.into());
        assert_eq!(r.row(0), &[Q::from_int(1), Q::from_int(0), -third.clone() / Q::from_int(2)]);
        assert_eq!(r.row(1), &[Q::from_int(0), Q::from_int(1), third]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::<Q>::zeros(2, 3).kernel(), Subspace::full(3));
        assert_eq!(Matrix::<Q>::identity(4).kernel(), Subspace::zero(4));
        let k = m(&[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(2, vec![v(&[1, -1])]).unwrap());
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn image_is_column_space() {
        let img = m(&[&[1, 0], &[0, 0], &[1, 0]]).image();
        assert_eq!(img, Subspace::span(3, vec![v(&[1, 0, 1])]).unwrap());
    }

    #[test]
    fn sum_intersect_quotient_examples() {
        let e = |i: usize, d: usize| crate::scalar::unit_vector::<Q>(d, i);
        let x = Subspace::span(2, vec![e(0, 2)]).unwrap();
        let y = Subspace::span(2, vec![e(1, 2)]).unwrap();
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));

        let a = Subspace::span(3, vec![e(0, 3), e(1, 3)]).unwrap();
        let b = Subspace::span(3, vec![e(1, 3), e(2, 3)]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(3, vec![e(1, 3)]).unwrap());

        let line = Subspace::span(3, vec![e(0, 3)]).unwrap();
        assert_eq!(Subspace::quotient_dim(&Subspace::full(3), &line).unwrap(), 2);
    }

    #[test]
    fn subspace_errors() {
        let a = Subspace::<Q>::full(2);
        let b = Subspace::<Q>::full(3);
        assert_eq!(a.sum(&b), Err(Error::DimensionMismatch { left: 2, right: 3 }));
        assert!(matches!(a.intersect(&b), Err(Error::DimensionMismatch { .. })));
        let line = Subspace::span(2, vec![v(&[1, 1])]).unwrap();
        assert_eq!(Subspace::quotient_dim(&line, &a), Err(Error::NotASubspace));
        assert!(line.contains(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 3, 4]), v(&[2, 5, 7]), v(&[1, 1, 2])]).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&v(&[3, 7, 10])).unwrap());
        assert!(!a.contains(&v(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());

        let x = m(&[&[1, 1], &[1, -1]]).solve(&v(&[3, 1])).unwrap();
        assert_eq!(x, v(&[2, 1]));
        assert!(m(&[&[1, 1], &[2, 2]]).solve(&v(&[1, 3])).is_none());
    }

    #[test]
    fn complement_and_preimage() {
        let line = Subspace::span(3, vec![v(&[1, 1, 0])]).unwrap();
        let c = line.constraints();
        assert_eq!(c.nrows(), 2);
        assert_eq!(c.mul_vec(&v(&[2, 2, 0])), v(&[0, 0]));

        // projection onto the first coordinate; preimage of zero is span{e2, e3}
        let proj = m(&[&[1], &[0], &[0]]);
        let pre = Subspace::preimage(&proj, &Subspace::zero(1)).unwrap();
        assert_eq!(pre.dim(), 2);
        assert!(pre.contains(&v(&[0, 5, -1])).unwrap());
    }

    #[test]
    fn labelled_system_reports_violations() {
        let mut sys: LinearSystem<Q, &str> = LinearSystem::new(2);
        sys.push("x=y", v(&[1, -1]));
        sys.push("trivial", v(&[0, 0]));
        sys.push("x=0", v(&[1, 0]));
        assert_eq!(sys.len(), 2);
        let bad: Vec<_> = sys.violations(&v(&[1, 1])).copied().collect();
        assert_eq!(bad, vec!["x=0"]);
        assert_eq!(sys.solution_space(), Subspace::zero(2));
    }
}
