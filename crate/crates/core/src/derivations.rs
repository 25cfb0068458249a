//! Derivation-type spaces of linear maps: `Z¹`, `N¹`, `Hom_A`, and the
//! auxiliary spaces `R_A(U)`, `C_A(U)`, `I(U)`.
//!
//! A linear map `f: Q^s -> Q^t` is a [`Matrix`] with `s` rows, row `p` being
//! `f(e_p)`. Spaces of maps live in `Q^(s*t)` with the row-major flattening
//! of that matrix, so coordinate `p*t + q` is the `q`-th coefficient of `f(e_p)`.
//!
//! Inner maps follow one convention throughout: the map induced by an
//! element `z` sends `w` to `w z - z w`. This covers `id_x(a) = ax - xa`,
//! `r_a(x) = xa - ax` and `id_{U,x}(y) = yx - xy`.

use crate::algebra::{Algebra, BimoduleAction, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, Matrix, Subspace};
use crate::scalar::{unit_vector, Field};

/// A subspace of the linear maps from `Q^source_dim` to `Q^target_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapSpace<T> {
    source_dim: usize,
    target_dim: usize,
    space: Subspace<T>,
}

impl<T: Field> LinearMapSpace<T> {
    pub fn new(source_dim: usize, target_dim: usize, space: Subspace<T>) -> Result<Self> {
        if space.ambient_dim() != source_dim * target_dim {
            return Err(Error::DimensionMismatch {
                left: source_dim * target_dim,
                right: space.ambient_dim(),
            });
        }
        Ok(Self {
            source_dim,
            target_dim,
            space,
        })
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        Self {
            source_dim,
            target_dim,
            space: Subspace::zero(source_dim * target_dim),
        }
    }

    pub fn full(source_dim: usize, target_dim: usize) -> Self {
        Self {
            source_dim,
            target_dim,
            space: Subspace::full(source_dim * target_dim),
        }
    }

    /// Span of explicit maps, all of shape `source_dim x target_dim`.
    pub fn span<'a, I>(source_dim: usize, target_dim: usize, maps: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Matrix<T>>,
    {
        let mut vectors = Vec::new();
        for map in maps {
            check_shape(map, source_dim, target_dim)?;
            vectors.push(map.data().to_vec());
        }
        Self::new(source_dim, target_dim, Subspace::span(source_dim * target_dim, vectors)?)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn space(&self) -> &Subspace<T> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<T> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, map: &Matrix<T>) -> Result<bool> {
        check_shape(map, self.source_dim, self.target_dim)?;
        self.space.contains(map.data())
    }

    /// Unflattens a vector of the ambient space into a map.
    pub fn to_map(&self, v: &[T]) -> Matrix<T> {
        Matrix::from_vec(self.source_dim, self.target_dim, v.to_vec()).expect("vector has ambient length")
    }

    /// The canonical basis as maps.
    pub fn basis_maps(&self) -> Vec<Matrix<T>> {
        self.space.basis_vectors().map(|v| self.to_map(v)).collect()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.source_dim != other.source_dim || self.target_dim != other.target_dim {
            return Err(Error::ShapeMismatch(format!(
                "maps {}->{} versus {}->{}",
                self.source_dim, self.target_dim, other.source_dim, other.target_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Self::new(self.source_dim, self.target_dim, self.space.sum(&other.space)?)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Self::new(self.source_dim, self.target_dim, self.space.intersect(&other.space)?)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.same_shape(other)?;
        self.space.is_subspace_of(&other.space)
    }
}

fn check_shape<T: Field>(map: &Matrix<T>, rows: usize, cols: usize) -> Result<()> {
    if map.nrows() != rows || map.ncols() != cols {
        return Err(Error::ShapeMismatch(format!(
            "expected a {rows}x{cols} map, got {}x{}",
            map.nrows(),
            map.ncols()
        )));
    }
    Ok(())
}

/// A Leibniz equation `δ(e_i e_j) = e_i δ(e_j) + δ(e_i) e_j`, coordinate `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeibnizIndex {
    pub i: usize,
    pub j: usize,
    pub q: usize,
}

/// The Leibniz system for maps `A -> M`; its solution space is `Z¹(A, M)`.
/// Inputs are assumed validated.
pub fn leibniz_system<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> LinearSystem<T, LeibnizIndex> {
    let n = a.dim();
    let md = m.module_dim();
    let var = |p: usize, q: usize| p * md + q;
    let mut system = LinearSystem::new(n * md);
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for q in 0..md {
                let mut row = vec![T::zero(); n * md];
                for (k, c) in ij.iter().enumerate() {
                    if !c.is_zero() {
                        row[var(k, q)] += c.clone();
                    }
                }
                for r in 0..md {
                    let l = &m.basis_left(i, r)[q];
                    if !l.is_zero() {
                        row[var(j, r)] -= l.clone();
                    }
                    let rr = &m.basis_right(r, j)[q];
                    if !rr.is_zero() {
                        row[var(i, r)] -= rr.clone();
                    }
                }
                system.push(LeibnizIndex { i, j, q }, row);
            }
        }
    }
    system
}

fn check_action<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> Result<()> {
    a.validate().into_result(a.name())?;
    m.validate(a)?.into_result("bimodule")
}

/// `Z¹(A, M)` without re-validating the inputs.
pub fn derivations<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> LinearMapSpace<T> {
    let space = leibniz_system(a, m).into_solution_space();
    LinearMapSpace::new(a.dim(), m.module_dim(), space).expect("solution space sized for maps")
}

/// `Z¹(A, M)`, the space of all derivations `A -> M`.
pub fn derivation_space<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> Result<LinearMapSpace<T>> {
    check_action(a, m)?;
    Ok(derivations(a, m))
}

/// Whether `d` satisfies the Leibniz rule.
pub fn is_derivation<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>, d: &Matrix<T>) -> Result<bool> {
    check_shape(d, a.dim(), m.module_dim())?;
    Ok(leibniz_system(a, m).is_satisfied_by(d.data()))
}

/// The matrix of `id_x: a -> a x - x a`.
pub fn inner_map<T: Field>(x: &[T], m: &BimoduleAction<T>) -> Matrix<T> {
    let n = m.algebra_dim();
    let rows = (0..n)
        .map(|i| {
            let e = unit_vector(n, i);
            let mut row = m.act_left(&e, x);
            for (r, s) in row.iter_mut().zip(m.act_right(x, &e)) {
                *r -= s;
            }
            row
        })
        .collect();
    Matrix::from_rows(m.module_dim(), rows).expect("rows have module length")
}

/// `N¹(A, M)`, spanned by the inner maps of the basis of `M`.
pub fn inner_space<T: Field>(m: &BimoduleAction<T>) -> LinearMapSpace<T> {
    let maps: Vec<Matrix<T>> = (0..m.module_dim())
        .map(|p| inner_map(&unit_vector(m.module_dim(), p), m))
        .collect();
    LinearMapSpace::span(m.algebra_dim(), m.module_dim(), &maps).expect("inner maps have the right shape")
}

/// `dim Z¹(A, M) - dim N¹(A, M)` without re-validating the inputs.
pub fn h1<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> Result<usize> {
    let z = derivations(a, m);
    let b = inner_space(m);
    Subspace::quotient_dim(z.space(), b.space())
        .map_err(|_| Error::InternalInvariantViolation("an inner map fails the Leibniz rule".into()))
}

/// `dim H¹(A, M)`.
pub fn h1_dim<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> Result<usize> {
    check_action(a, m)?;
    h1(a, m)
}

/// `Hom_A(U, V)`: maps commuting with both actions.
pub fn hom_space<T: Field>(u: &BimoduleAction<T>, v: &BimoduleAction<T>) -> Result<LinearMapSpace<T>> {
    if u.algebra_dim() != v.algebra_dim() {
        return Err(Error::ShapeMismatch(format!(
            "modules over algebras of dimension {} and {}",
            u.algebra_dim(),
            v.algebra_dim()
        )));
    }
    let (n, mu, mv) = (u.algebra_dim(), u.module_dim(), v.module_dim());
    let var = |p: usize, q: usize| p * mv + q;
    let mut system: LinearSystem<T, ()> = LinearSystem::new(mu * mv);
    for i in 0..n {
        for p in 0..mu {
            for q in 0..mv {
                // φ(e_i u_p) - e_i φ(u_p), then φ(u_p e_i) - φ(u_p) e_i
                let mut left = vec![T::zero(); mu * mv];
                let mut right = vec![T::zero(); mu * mv];
                for r in 0..mu {
                    left[var(r, q)] += u.basis_left(i, p)[r].clone();
                    right[var(r, q)] += u.basis_right(p, i)[r].clone();
                }
                for s in 0..mv {
                    left[var(p, s)] -= v.basis_left(i, s)[q].clone();
                    right[var(p, s)] -= v.basis_right(s, i)[q].clone();
                }
                system.push((), left);
                system.push((), right);
            }
        }
    }
    LinearMapSpace::new(mu, mv, system.into_solution_space())
}

/// Whether `phi: U -> V` commutes with both actions, checked on basis elements.
pub fn is_module_hom<T: Field>(u: &BimoduleAction<T>, v: &BimoduleAction<T>, phi: &Matrix<T>) -> Result<bool> {
    if u.algebra_dim() != v.algebra_dim() {
        return Err(Error::ShapeMismatch("modules over different algebras".into()));
    }
    check_shape(phi, u.module_dim(), v.module_dim())?;
    let n = u.algebra_dim();
    for i in 0..n {
        let e = unit_vector(n, i);
        for p in 0..u.module_dim() {
            if phi.apply(u.basis_left(i, p)) != v.act_left(&e, phi.row(p)) {
                return Ok(false);
            }
            if phi.apply(u.basis_right(p, i)) != v.act_right(phi.row(p), &e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The matrix of `r_a: x -> x a - a x` on `M`.
pub fn r_map<T: Field>(a_elt: &[T], m: &BimoduleAction<T>) -> Matrix<T> {
    let md = m.module_dim();
    let rows = (0..md)
        .map(|p| {
            let u = unit_vector(md, p);
            let mut row = m.act_right(&u, a_elt);
            for (r, s) in row.iter_mut().zip(m.act_left(a_elt, &u)) {
                *r -= s;
            }
            row
        })
        .collect();
    Matrix::from_rows(md, rows).expect("rows have module length")
}

/// `R_A(U) = {r_a : a in A}`.
pub fn r_space<T: Field>(m: &BimoduleAction<T>) -> LinearMapSpace<T> {
    let n = m.algebra_dim();
    let maps: Vec<Matrix<T>> = (0..n).map(|i| r_map(&unit_vector(n, i), m)).collect();
    LinearMapSpace::span(m.module_dim(), m.module_dim(), &maps).expect("r maps have the right shape")
}

/// `C_A(U) = {r_a : a in Z(A)}`.
pub fn c_space<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>) -> LinearMapSpace<T> {
    let maps: Vec<Matrix<T>> = a.center().basis_vectors().map(|z| r_map(z, m)).collect();
    LinearMapSpace::span(m.module_dim(), m.module_dim(), &maps).expect("r maps have the right shape")
}

/// `I(U) = {id_{U,x} : a x = x a for all a}`.
pub fn i_space<T: Field>(u: &ModuleAlgebra<T>) -> LinearMapSpace<T> {
    let regular = BimoduleAction::regular(&u.algebra);
    let maps: Vec<Matrix<T>> = u
        .action
        .centralizer()
        .basis_vectors()
        .map(|x| inner_map(x, &regular))
        .collect();
    LinearMapSpace::span(u.dim(), u.dim(), &maps).expect("inner maps have the right shape")
}

/// Some `x` with `id_x = d`, or `None` when `d` is outer.
pub fn inner_witness<T: Field>(a: &Algebra<T>, m: &BimoduleAction<T>, d: &Matrix<T>) -> Result<Option<Vec<T>>> {
    if !is_derivation(a, m, d)? {
        return Err(Error::NotADerivation("the map fails the Leibniz rule".into()));
    }
    let (n, md) = (a.dim(), m.module_dim());
    let columns: Vec<Matrix<T>> = (0..md).map(|p| inner_map(&unit_vector(md, p), m)).collect();
    let mut coeffs = Matrix::zeros(n * md, md);
    for (p, col) in columns.iter().enumerate() {
        for (row, v) in col.data().iter().enumerate() {
            coeffs.set(row, p, v.clone());
        }
    }
    let x = coeffs.solve(d.data());
    if let Some(x) = &x {
        if inner_map(x, m) != *d {
            return Err(Error::InternalInvariantViolation("inner witness does not reproduce the map".into()));
        }
    }
    Ok(x)
}
