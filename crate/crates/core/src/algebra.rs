//! Algebras, bimodule actions and module-algebras given by structure
//! constants, together with exact axiom validation and the annihilator,
//! center and centralizer subspaces.
//!
//! Tensor layouts (all row-major, 0-based):
//! - algebra `c[i][j][k]` at `(i*n + j)*n + k`: `e_i e_j = sum_k c[i][j][k] e_k`
//! - left action `L[i][p][q]` at `(i*m + p)*m + q`: `e_i u_p = sum_q L[i][p][q] u_q`
//! - right action `R[p][i][q]` at `(p*n + i)*m + q`: `u_p e_i = sum_q R[p][i][q] u_q`

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, Matrix, Subspace};
use crate::scalar::{axpy, format_vector, is_zero_vector, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<T> {
    name: String,
    dim: usize,
    mult: Vec<T>,
}

impl<T: Field> Algebra<T> {
    pub fn new(name: impl Into<String>, dim: usize, mult: Vec<T>) -> Result<Self> {
        if mult.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "structure tensor has {} entries, expected {} for dimension {dim}",
                mult.len(),
                dim * dim * dim
            )));
        }
        Ok(Self {
            name: name.into(),
            dim,
            mult,
        })
    }

    /// Builds an algebra from sparse `(i, j, k, c)` entries; repeated entries add up.
    pub fn from_entries<I>(name: impl Into<String>, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, T)>,
    {
        let mut mult = vec![T::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            mult[(i * dim + j) * dim + k] += c;
        }
        Self::new(name, dim, mult)
    }

    /// The algebra of dimension `dim` with every product zero.
    pub fn null(name: impl Into<String>, dim: usize) -> Self {
        Self {
            name: name.into(),
            dim,
            mult: vec![T::zero(); dim * dim * dim],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Raw structure tensor.
    pub fn mult(&self) -> &[T] {
        &self.mult
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &T {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.mult[start..start + self.dim]
    }

    pub fn mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &xi.mul_ref(yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_null(&self) -> bool {
        is_zero_vector(&self.mult)
    }

    /// Every violated associativity instance `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub fn validate(&self) -> ValidationReport<T> {
        let n = self.dim;
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    let mut lhs = vec![T::zero(); n];
                    let mut rhs = vec![T::zero(); n];
                    for (m, c) in ij.iter().enumerate() {
                        axpy(&mut lhs, c, self.basis_product(m, k));
                    }
                    for (m, c) in jk.iter().enumerate() {
                        axpy(&mut rhs, c, self.basis_product(i, m));
                    }
                    if lhs != rhs {
                        report.push(Axiom::Associativity, vec![i, j, k], lhs, rhs);
                    }
                }
            }
        }
        report
    }

    /// `self` if associative, otherwise `ValidationFailed` naming the first witness.
    pub fn validated(self) -> Result<Self> {
        self.validate().into_result(&self.name)?;
        Ok(self)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `Z(A) = {z : z e_i = e_i z for all i}`.
    pub fn center(&self) -> Subspace<T> {
        let n = self.dim;
        let rows = (0..n).flat_map(|i| {
            (0..n).map(move |k| (0..n).map(|z| self.constant(z, i, k).clone() - self.constant(i, z, k).clone()).collect())
        });
        kernel_of_rows(rows.collect(), n)
    }

    /// `ann_A A = {a : aA = Aa = 0}`.
    pub fn annihilator(&self) -> Subspace<T> {
        BimoduleAction::regular(self).annihilator_in_algebra()
    }

    /// Span of all products `e_i e_j`, i.e. `A^2`.
    pub fn square_span(&self) -> Subspace<T> {
        let n = self.dim;
        let products = (0..n).flat_map(|i| (0..n).map(move |j| self.basis_product(i, j).to_vec()));
        Subspace::span(n, products.collect::<Vec<_>>()).expect("products have algebra length")
    }

    /// Whether `s` is closed under multiplication by `A` on both sides.
    pub fn is_ideal(&self, s: &Subspace<T>) -> Result<bool> {
        for v in s.basis_vectors() {
            for i in 0..self.dim {
                let e = crate::scalar::unit_vector(self.dim, i);
                if !s.contains(&self.mul(&e, v))? || !s.contains(&self.mul(v, &e))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The same algebra written in a new basis: row `i` of `p` holds the
    /// old coordinates of the new basis vector `b_i`.
    pub fn change_basis(&self, p: &Matrix<T>) -> Result<Self> {
        let n = self.dim;
        if p.nrows() != n || p.ncols() != n {
            return Err(Error::ShapeMismatch(format!(
                "basis change must be {n}x{n}, got {}x{}",
                p.nrows(),
                p.ncols()
            )));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("basis change matrix is singular".into()))?;
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let product = self.mul(p.row(i), p.row(j));
                mult.extend(inv.apply(&product));
            }
        }
        Self::new(self.name.clone(), n, mult)
    }
}

/// The axiom a [`Violation`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `(e_i e_j) e_k = e_i (e_j e_k)`
    Associativity,
    /// `(e_i e_j) u_p = e_i (e_j u_p)`
    LeftModule,
    /// `u_p (e_i e_j) = (u_p e_i) e_j`
    RightModule,
    /// `(e_i u_p) e_j = e_i (u_p e_j)`
    Bimodule,
    /// `(e_i u_p) u_r = e_i (u_p u_r)`
    LeftCompatibility,
    /// `(u_p u_r) e_i = u_p (u_r e_i)`
    RightCompatibility,
    /// `(u_p e_i) u_r = u_p (e_i u_r)`
    MiddleCompatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity (ab)c = a(bc)",
            Axiom::LeftModule => "left module (ab)x = a(bx)",
            Axiom::RightModule => "right module x(ab) = (xa)b",
            Axiom::Bimodule => "bimodule (ax)b = a(xb)",
            Axiom::LeftCompatibility => "compatibility (ax)y = a(xy)",
            Axiom::RightCompatibility => "compatibility (xy)a = x(ya)",
            Axiom::MiddleCompatibility => "compatibility (xa)y = x(ay)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<T> {
    pub axiom: Axiom,
    /// Basis indices in the order they appear in the axiom.
    pub indices: Vec<usize>,
    pub lhs: Vec<T>,
    pub rhs: Vec<T>,
}

impl<T: Field> fmt::Display for Violation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} fails at ({}): {} != {}",
            self.axiom,
            idx.join(","),
            format_vector(&self.lhs),
            format_vector(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport<T> {
    pub violations: Vec<Violation<T>>,
}

impl<T> Default for ValidationReport<T> {
    fn default() -> Self {
        Self { violations: Vec::new() }
    }
}

impl<T: Field> ValidationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: Axiom, indices: Vec<usize>, lhs: Vec<T>, rhs: Vec<T>) {
        self.violations.push(Violation {
            axiom,
            indices,
            lhs,
            rhs,
        });
    }

    pub fn merge(&mut self, other: ValidationReport<T>) {
        self.violations.extend(other.violations);
    }

    /// Violations of one axiom.
    pub fn of(&self, axiom: Axiom) -> impl Iterator<Item = &Violation<T>> + '_ {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn into_result(self, context: &str) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::ValidationFailed(format!(
                "{context}: {v} ({} violation(s) in total)",
                self.violations.len()
            ))),
        }
    }
}

/// Left and right actions of an `n`-dimensional algebra on an
/// `m`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAction<T> {
    algebra_dim: usize,
    module_dim: usize,
    left: Vec<T>,
    right: Vec<T>,
}

impl<T: Field> BimoduleAction<T> {
    pub fn new(algebra_dim: usize, module_dim: usize, left: Vec<T>, right: Vec<T>) -> Result<Self> {
        let expected = algebra_dim * module_dim * module_dim;
        if left.len() != expected || right.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "action tensors have {} and {} entries, expected {expected}",
                left.len(),
                right.len()
            )));
        }
        Ok(Self {
            algebra_dim,
            module_dim,
            left,
            right,
        })
    }

    /// Both actions zero.
    pub fn trivial(algebra_dim: usize, module_dim: usize) -> Self {
        let len = algebra_dim * module_dim * module_dim;
        Self {
            algebra_dim,
            module_dim,
            left: vec![T::zero(); len],
            right: vec![T::zero(); len],
        }
    }

    /// An algebra acting on itself by multiplication.
    pub fn regular(a: &Algebra<T>) -> Self {
        let n = a.dim();
        Self {
            algebra_dim: n,
            module_dim: n,
            left: a.mult().to_vec(),
            right: a.mult().to_vec(),
        }
    }

    /// `a x = x a = theta(a) x` on an `m`-dimensional space.
    pub fn scalar(theta: &[T], module_dim: usize) -> Self {
        let n = theta.len();
        let m = module_dim;
        let mut out = Self::trivial(n, m);
        for (i, t) in theta.iter().enumerate() {
            for p in 0..m {
                out.left[(i * m + p) * m + p] = t.clone();
                out.right[(p * n + i) * m + p] = t.clone();
            }
        }
        out
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn left_tensor(&self) -> &[T] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[T] {
        &self.right
    }

    /// Coordinates of `e_i u_p`.
    pub fn basis_left(&self, i: usize, p: usize) -> &[T] {
        let m = self.module_dim;
        let start = (i * m + p) * m;
        &self.left[start..start + m]
    }

    /// Coordinates of `u_p e_i`.
    pub fn basis_right(&self, p: usize, i: usize) -> &[T] {
        let m = self.module_dim;
        let start = (p * self.algebra_dim + i) * m;
        &self.right[start..start + m]
    }

    pub fn act_left(&self, a: &[T], x: &[T]) -> Vec<T> {
        self.bilinear(a, x, |i, p| self.basis_left(i, p))
    }

    pub fn act_right(&self, x: &[T], a: &[T]) -> Vec<T> {
        self.bilinear(a, x, |i, p| self.basis_right(p, i))
    }

    fn bilinear<'a>(&'a self, a: &[T], x: &[T], basis: impl Fn(usize, usize) -> &'a [T]) -> Vec<T> {
        assert_eq!(a.len(), self.algebra_dim);
        assert_eq!(x.len(), self.module_dim);
        let mut out = vec![T::zero(); self.module_dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (p, xp) in x.iter().enumerate() {
                if !xp.is_zero() {
                    axpy(&mut out, &ai.mul_ref(xp), basis(i, p));
                }
            }
        }
        out
    }

    fn check_shape(&self, a: &Algebra<T>) -> Result<()> {
        if a.dim() != self.algebra_dim {
            return Err(Error::ShapeMismatch(format!(
                "action is by a {}-dimensional algebra, got dimension {}",
                self.algebra_dim,
                a.dim()
            )));
        }
        Ok(())
    }

    /// The three bimodule axioms over basis elements.
    pub fn validate(&self, a: &Algebra<T>) -> Result<ValidationReport<T>> {
        self.check_shape(a)?;
        let (n, m) = (self.algebra_dim, self.module_dim);
        let mut report = ValidationReport::default();
        let unit = |dim: usize, i: usize| crate::scalar::unit_vector::<T>(dim, i);
        for i in 0..n {
            for j in 0..n {
                let ij = a.basis_product(i, j);
                for p in 0..m {
                    let u = unit(m, p);
                    let lhs = self.act_left(ij, &u);
                    let rhs = self.act_left(&unit(n, i), self.basis_left(j, p));
                    if lhs != rhs {
                        report.push(Axiom::LeftModule, vec![i, j, p], lhs, rhs);
                    }
                    let lhs = self.act_right(&u, ij);
                    let rhs = self.act_right(self.basis_right(p, i), &unit(n, j));
                    if lhs != rhs {
                        report.push(Axiom::RightModule, vec![p, i, j], lhs, rhs);
                    }
                    let lhs = self.act_right(self.basis_left(i, p), &unit(n, j));
                    let rhs = self.act_left(&unit(n, i), self.basis_right(p, j));
                    if lhs != rhs {
                        report.push(Axiom::Bimodule, vec![i, p, j], lhs, rhs);
                    }
                }
            }
        }
        Ok(report)
    }

    /// Whether `e_i u_p = u_p e_i` for every basis pair.
    pub fn is_symmetric(&self) -> bool {
        (0..self.algebra_dim).all(|i| (0..self.module_dim).all(|p| self.basis_left(i, p) == self.basis_right(p, i)))
    }

    /// Matrix of `x -> e_i x` in row convention.
    pub fn left_matrix(&self, i: usize) -> Matrix<T> {
        let m = self.module_dim;
        Matrix::from_vec(m, m, self.left[i * m * m..(i + 1) * m * m].to_vec()).expect("slice has m*m entries")
    }

    /// Matrix of `x -> x e_i` in row convention.
    pub fn right_matrix(&self, i: usize) -> Matrix<T> {
        let m = self.module_dim;
        let rows = (0..m).map(|p| self.basis_right(p, i).to_vec()).collect();
        Matrix::from_rows(m, rows).expect("rows have module length")
    }

    /// `ann_A M = {a : a u_p = u_p a = 0 for all p}`.
    pub fn annihilator_in_algebra(&self) -> Subspace<T> {
        let (n, m) = (self.algebra_dim, self.module_dim);
        let mut rows = Vec::with_capacity(2 * m * m);
        for p in 0..m {
            for q in 0..m {
                rows.push((0..n).map(|i| self.basis_left(i, p)[q].clone()).collect());
                rows.push((0..n).map(|i| self.basis_right(p, i)[q].clone()).collect());
            }
        }
        kernel_of_rows(rows, n)
    }

    /// `{x : a x = x a for all a}`.
    pub fn centralizer(&self) -> Subspace<T> {
        let (n, m) = (self.algebra_dim, self.module_dim);
        let mut rows = Vec::with_capacity(n * m);
        for i in 0..n {
            for q in 0..m {
                rows.push(
                    (0..m)
                        .map(|p| self.basis_left(i, p)[q].clone() - self.basis_right(p, i)[q].clone())
                        .collect(),
                );
            }
        }
        kernel_of_rows(rows, m)
    }

    /// `(N : M)_A = {a : a M ⊆ N and M a ⊆ N}` for a sub-bimodule `N`.
    pub fn relative_annihilator(&self, n_sub: &Subspace<T>) -> Result<Subspace<T>> {
        let (n, m) = (self.algebra_dim, self.module_dim);
        if n_sub.ambient_dim() != m {
            return Err(Error::DimensionMismatch {
                left: m,
                right: n_sub.ambient_dim(),
            });
        }
        for v in n_sub.basis_vectors() {
            for i in 0..n {
                let e = crate::scalar::unit_vector(n, i);
                if !n_sub.contains(&self.act_left(&e, v))? || !n_sub.contains(&self.act_right(v, &e))? {
                    return Err(Error::NotSubmodule(format!(
                        "e_{i} does not keep {} inside the subspace",
                        format_vector(v)
                    )));
                }
            }
        }
        let constraints = n_sub.constraints();
        let mut rows = Vec::new();
        for w in constraints.rows() {
            for p in 0..m {
                rows.push((0..n).map(|i| crate::scalar::dot(w, self.basis_left(i, p))).collect());
                rows.push((0..n).map(|i| crate::scalar::dot(w, self.basis_right(p, i))).collect());
            }
        }
        Ok(kernel_of_rows(rows, n))
    }

    /// The same action written in new bases of the algebra (rows of `p`) and
    /// of the module (rows of `q`).
    pub fn change_basis(&self, p: &Matrix<T>, q: &Matrix<T>) -> Result<Self> {
        let (n, m) = (self.algebra_dim, self.module_dim);
        if p.nrows() != n || p.ncols() != n || q.nrows() != m || q.ncols() != m {
            return Err(Error::ShapeMismatch("basis change matrices have the wrong size".into()));
        }
        let q_inv = q
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("module basis change is singular".into()))?;
        let mut left = Vec::with_capacity(n * m * m);
        for i in 0..n {
            for r in 0..m {
                left.extend(q_inv.apply(&self.act_left(p.row(i), q.row(r))));
            }
        }
        let mut right = Vec::with_capacity(n * m * m);
        for r in 0..m {
            for i in 0..n {
                right.extend(q_inv.apply(&self.act_right(q.row(r), p.row(i))));
            }
        }
        Self::new(n, m, left, right)
    }
}

/// An algebra `U` that is also a bimodule over another algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra<T> {
    pub algebra: Algebra<T>,
    pub action: BimoduleAction<T>,
}

impl<T: Field> ModuleAlgebra<T> {
    pub fn new(algebra: Algebra<T>, action: BimoduleAction<T>) -> Result<Self> {
        if algebra.dim() != action.module_dim() {
            return Err(Error::ShapeMismatch(format!(
                "module algebra has dimension {} but the action is on dimension {}",
                algebra.dim(),
                action.module_dim()
            )));
        }
        Ok(Self { algebra, action })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Associativity of `U`, the bimodule axioms, and the three compatibility
    /// equations between the actions and the product of `U`.
    pub fn validate(&self, a: &Algebra<T>) -> Result<ValidationReport<T>> {
        let mut report = self.algebra.validate();
        report.merge(self.action.validate(a)?);
        let (n, m) = (a.dim(), self.dim());
        let u = &self.algebra;
        let act = &self.action;
        let e = |i: usize| crate::scalar::unit_vector::<T>(n, i);
        for i in 0..n {
            for p in 0..m {
                for r in 0..m {
                    let up = crate::scalar::unit_vector::<T>(m, p);
                    let ur = crate::scalar::unit_vector::<T>(m, r);
                    let lhs = u.mul(act.basis_left(i, p), &ur);
                    let rhs = act.act_left(&e(i), u.basis_product(p, r));
                    if lhs != rhs {
                        report.push(Axiom::LeftCompatibility, vec![i, p, r], lhs, rhs);
                    }
                    let lhs = act.act_right(u.basis_product(p, r), &e(i));
                    let rhs = u.mul(&up, act.basis_right(r, i));
                    if lhs != rhs {
                        report.push(Axiom::RightCompatibility, vec![p, r, i], lhs, rhs);
                    }
                    let lhs = u.mul(act.basis_right(p, i), &ur);
                    let rhs = u.mul(&up, act.basis_left(i, r));
                    if lhs != rhs {
                        report.push(Axiom::MiddleCompatibility, vec![p, i, r], lhs, rhs);
                    }
                }
            }
        }
        Ok(report)
    }

    /// `ann_U U`.
    pub fn annihilator_in_module(&self) -> Subspace<T> {
        self.algebra.annihilator()
    }
}

/// A linear functional on an algebra, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character<T> {
    pub values: Vec<T>,
}

impl<T: Field> Character<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn eval(&self, a: &[T]) -> T {
        crate::scalar::dot(&self.values, a)
    }

    /// `Err(InvalidCharacter)` describing the first failure, if any.
    pub fn check(&self, a: &Algebra<T>) -> Result<()> {
        let n = a.dim();
        if self.values.len() != n {
            return Err(Error::InvalidCharacter(format!(
                "{} values for a {n}-dimensional algebra",
                self.values.len()
            )));
        }
        if is_zero_vector(&self.values) {
            return Err(Error::InvalidCharacter("the zero functional is not a character".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.eval(a.basis_product(i, j));
                let rhs = self.values[i].mul_ref(&self.values[j]);
                if lhs != rhs {
                    return Err(Error::InvalidCharacter(format!(
                        "theta(e_{i} e_{j}) = {lhs} but theta(e_{i}) theta(e_{j}) = {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, a: &Algebra<T>) -> bool {
        self.check(a).is_ok()
    }

    /// `ker theta` as a subspace of the algebra.
    pub fn kernel(&self) -> Subspace<T> {
        kernel_of_rows(vec![self.values.clone()], self.values.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(x: i64) -> Q {
        Q::from_int(x)
    }

    #[test]
    fn one_dimensional_algebras() {
        let idem = Algebra::from_entries("e", 1, [(0, 0, 0, q(1))]).unwrap();
        assert!(idem.validate().is_valid());
        let twice = Algebra::from_entries("2e", 1, [(0, 0, 0, q(2))]).unwrap();
        assert!(twice.validate().is_valid());
    }

    #[test]
    fn non_associative_tensor_reports_witness() {
        // e1 e1 = e2, e1 e2 = e1, other products zero (indices shifted to 0-based)
        let bad = Algebra::from_entries("bad", 2, [(0, 0, 1, q(1)), (0, 1, 0, q(1))]).unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        let w = report.violations.iter().find(|v| v.indices == vec![0, 0, 0]).unwrap();
        assert_eq!(w.axiom, Axiom::Associativity);
        assert_eq!(w.lhs, vec![q(0), q(0)]);
        assert_eq!(w.rhs, vec![q(1), q(0)]);
        assert!(matches!(bad.validated(), Err(Error::ValidationFailed(_))));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(Algebra::<Q>::new("x", 2, vec![q(0); 7]), Err(Error::ShapeMismatch(_))));
        assert!(Algebra::<Q>::from_entries("x", 1, [(0, 1, 0, q(1))]).is_err());
        let a = library::scalar::<Q>();
        let act = BimoduleAction::<Q>::trivial(2, 1);
        assert!(matches!(act.validate(&a), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn trivial_and_scalar_actions_validate() {
        let a = library::upper_triangular::<Q>(2);
        let u = ModuleAlgebra::new(library::matrix(2), BimoduleAction::trivial(3, 4)).unwrap();
        assert!(u.validate(&a).unwrap().is_valid());

        let theta = Character::new(vec![q(1), q(0), q(0)]);
        theta.check(&a).unwrap();
        let lau = ModuleAlgebra::new(library::dual_numbers(), BimoduleAction::scalar(&theta.values, 2)).unwrap();
        assert!(lau.validate(&a).unwrap().is_valid());
    }

    #[test]
    fn left_regular_without_right_action_breaks_compatibility() {
        let a = library::dual_numbers::<Q>();
        let mut action = BimoduleAction::regular(&a);
        action.right = vec![q(0); action.right.len()];
        let u = ModuleAlgebra::new(a.clone(), action).unwrap();
        let report = u.validate(&a).unwrap();
        let w = report.of(Axiom::MiddleCompatibility).next().expect("middle compatibility fails");
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn annihilators() {
        let a = library::upper_triangular::<Q>(2);
        let triv = BimoduleAction::<Q>::trivial(3, 2);
        assert_eq!(triv.annihilator_in_algebra(), Subspace::full(3));

        let pair = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let theta = [q(1), q(0)];
        let lau = BimoduleAction::scalar(&theta, 1);
        let ann = lau.annihilator_in_algebra();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&[q(0), q(1)]).unwrap());
        assert_eq!(Character::new(theta.to_vec()).kernel(), ann);
        assert!(Character::new(theta.to_vec()).is_valid(&pair));

        let m2 = library::matrix::<Q>(2);
        assert!(BimoduleAction::regular(&m2).annihilator_in_algebra().is_zero());
        assert!(m2.annihilator().is_zero());
        assert!(a.annihilator().is_zero());
        assert_eq!(library::null::<Q>(3).annihilator(), Subspace::full(3));
    }

    #[test]
    fn relative_annihilator_of_zero_is_annihilator() {
        let a = library::upper_triangular::<Q>(2);
        let act = BimoduleAction::regular(&a);
        assert_eq!(act.relative_annihilator(&Subspace::zero(3)).unwrap(), act.annihilator_in_algebra());
        assert_eq!(act.relative_annihilator(&Subspace::full(3)).unwrap(), Subspace::full(3));
        // span{E11} is not a sub-bimodule of the triangular algebra
        let e11 = Subspace::span(3, vec![vec![q(1), q(0), q(0)]]).unwrap();
        assert!(matches!(act.relative_annihilator(&e11), Err(Error::NotSubmodule(_))));
        // span{E12} is a sub-bimodule, and exactly the multiples of E12 push U into it
        let e12 = Subspace::span(3, vec![vec![q(0), q(1), q(0)]]).unwrap();
        let rel = act.relative_annihilator(&e12).unwrap();
        assert_eq!(rel, e12);
    }

    #[test]
    fn centers() {
        assert_eq!(library::dual_numbers::<Q>().center(), Subspace::full(2));
        let m2 = library::matrix::<Q>(2);
        assert_eq!(m2.center(), Subspace::span(4, vec![vec![q(1), q(0), q(0), q(1)]]).unwrap());
        let t2 = library::upper_triangular::<Q>(2);
        let z = t2.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&[q(1), q(0), q(1)]).unwrap());
    }

    #[test]
    fn characters() {
        assert!(Character::new(vec![q(1)]).is_valid(&library::scalar::<Q>()));
        let pair = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        assert!(Character::new(vec![q(1), q(0)]).is_valid(&pair));
        assert!(!Character::new(vec![q(0), q(0)]).is_valid(&pair));
        assert!(!Character::new(vec![q(2), q(0)]).is_valid(&pair));
    }

    #[test]
    fn basis_change_preserves_validity() {
        let t2 = library::upper_triangular::<Q>(2);
        let p = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let changed = t2.change_basis(&p).unwrap();
        assert!(changed.validate().is_valid());
        assert_ne!(changed.mult(), t2.mult());
        let back = changed.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, t2);
    }

    #[test]
    fn square_span_and_ideals() {
        assert!(library::null::<Q>(2).square_span().is_zero());
        assert!(library::matrix::<Q>(2).square_span().is_full());
        let dual = library::dual_numbers::<Q>();
        let t = Subspace::span(2, vec![vec![q(0), q(1)]]).unwrap();
        assert!(dual.is_ideal(&t).unwrap());
        let unit = Subspace::span(2, vec![vec![q(1), q(0)]]).unwrap();
        assert!(!dual.is_ideal(&unit).unwrap());
    }
}
