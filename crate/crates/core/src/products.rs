//! Semidirect products `A ⋉ U` and the special constructions built on them.
//!
//! Every product uses the same coordinates: `A` occupies `0..n` and `U`
//! occupies `n..n+m`. The multiplication is
//! `(a,x)(b,y) = (ab, a·y + x·b + xy)`.

use std::fmt;

use crate::algebra::{Algebra, BimoduleAction, Character, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::library;
use crate::linalg::Matrix;
use crate::scalar::{axpy, Field};

/// How a product was built. Theorem checkers that only apply to one
/// construction dispatch on this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductKind<T> {
    Semidirect,
    Direct,
    ModuleExtension,
    /// `T(A×B, M)`; `left_dim` is the dimension of the left corner algebra.
    Triangular { left_dim: usize },
    ThetaLau { character: Character<T> },
    /// `Q ⋉ U` with the scalar action.
    Unitization,
    Alpha { alpha: Matrix<T> },
}

impl<T: Field> ProductKind<T> {
    pub fn label(&self) -> &'static str {
        match self {
            ProductKind::Semidirect => "semidirect",
            ProductKind::Direct => "direct",
            ProductKind::ModuleExtension => "module-extension",
            ProductKind::Triangular { .. } => "triangular",
            ProductKind::ThetaLau { .. } => "theta-lau",
            ProductKind::Unitization => "unitization",
            ProductKind::Alpha { .. } => "alpha",
        }
    }

    /// Whether `U^2 = 0` holds by construction.
    pub fn is_module_extension(&self) -> bool {
        matches!(self, ProductKind::ModuleExtension | ProductKind::Triangular { .. })
    }

    /// The character of a θ-Lau product; a unitization uses `θ = 1` on `Q`.
    pub fn character(&self) -> Option<Character<T>> {
        match self {
            ProductKind::ThetaLau { character } => Some(character.clone()),
            ProductKind::Unitization => Some(Character::new(vec![T::one()])),
            _ => None,
        }
    }
}

impl<T: Field> fmt::Display for ProductKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `A ⋉ U` together with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectAlgebra<T> {
    total: Algebra<T>,
    part_a: Algebra<T>,
    part_u: ModuleAlgebra<T>,
    kind: ProductKind<T>,
}

impl<T: Field> SemidirectAlgebra<T> {
    fn assemble(part_a: Algebra<T>, part_u: ModuleAlgebra<T>, kind: ProductKind<T>) -> Self {
        let n = part_a.dim();
        let m = part_u.dim();
        let big = n + m;
        let mut mult = vec![T::zero(); big * big * big];
        let at = |i: usize, j: usize, k: usize| (i * big + j) * big + k;
        for i in 0..n {
            for j in 0..n {
                for (k, c) in part_a.basis_product(i, j).iter().enumerate() {
                    mult[at(i, j, k)] = c.clone();
                }
            }
            for p in 0..m {
                for (q, c) in part_u.action.basis_left(i, p).iter().enumerate() {
                    mult[at(i, n + p, n + q)] = c.clone();
                }
                for (q, c) in part_u.action.basis_right(p, i).iter().enumerate() {
                    mult[at(n + p, i, n + q)] = c.clone();
                }
            }
        }
        for p in 0..m {
            for r in 0..m {
                for (q, c) in part_u.algebra.basis_product(p, r).iter().enumerate() {
                    mult[at(n + p, n + r, n + q)] = c.clone();
                }
            }
        }
        let name = format!("{}⋉{}", part_a.name(), part_u.algebra.name());
        let total = Algebra::new(name, big, mult).expect("tensor sized for n+m");
        Self {
            total,
            part_a,
            part_u,
            kind,
        }
    }

    pub fn total(&self) -> &Algebra<T> {
        &self.total
    }

    pub fn part_a(&self) -> &Algebra<T> {
        &self.part_a
    }

    pub fn part_u(&self) -> &ModuleAlgebra<T> {
        &self.part_u
    }

    pub fn action(&self) -> &BimoduleAction<T> {
        &self.part_u.action
    }

    pub fn kind(&self) -> &ProductKind<T> {
        &self.kind
    }

    /// `dim A`.
    pub fn n(&self) -> usize {
        self.part_a.dim()
    }

    /// `dim U`.
    pub fn m(&self) -> usize {
        self.part_u.dim()
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.total = self.total.with_name(name);
        self
    }

    /// Structure constants of `(A ⋉ U)/U`, read off the `A` block.
    pub fn quotient_by_ideal_block(&self) -> Algebra<T> {
        let n = self.n();
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                mult.extend_from_slice(&self.total.basis_product(i, j)[..n]);
            }
        }
        Algebra::new(self.part_a.name(), n, mult).expect("tensor sized for n")
    }

    /// Whether the `A` block is a subalgebra and the `U` block a two-sided ideal.
    pub fn block_laws_hold(&self) -> bool {
        let (n, big) = (self.n(), self.dim());
        let zero_a_part = |v: &[T]| v[..n].iter().all(|x| x.is_zero());
        let zero_u_part = |v: &[T]| v[n..].iter().all(|x| x.is_zero());
        for i in 0..big {
            for j in 0..big {
                let v = self.total.basis_product(i, j);
                let ok = if i < n && j < n { zero_u_part(v) } else { zero_a_part(v) };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// The same product after independent basis changes of `A` (rows of `p`)
    /// and `U` (rows of `q`). The construction label is kept when it is
    /// basis-independent and transformed or weakened otherwise.
    pub fn change_basis(&self, p: &Matrix<T>, q: &Matrix<T>) -> Result<Self> {
        let part_a = self.part_a.change_basis(p)?;
        let algebra = self.part_u.algebra.change_basis(q)?;
        let action = self.part_u.action.change_basis(p, q)?;
        let kind = match &self.kind {
            ProductKind::Triangular { .. } => ProductKind::ModuleExtension,
            ProductKind::ThetaLau { character } => ProductKind::ThetaLau {
                character: Character::new(p.mul_vec(&character.values)),
            },
            ProductKind::Unitization => ProductKind::ThetaLau {
                character: Character::new(p.mul_vec(&[T::one()])),
            },
            ProductKind::Alpha { alpha } => {
                let q_inv = q
                    .inverse()
                    .ok_or_else(|| Error::InvalidArgument("module basis change is singular".into()))?;
                ProductKind::Alpha {
                    alpha: p.mul(alpha)?.mul(&q_inv)?,
                }
            }
            other => other.clone(),
        };
        let name = self.total.name().to_string();
        Ok(Self::assemble(part_a, ModuleAlgebra::new(algebra, action)?, kind).with_name(name))
    }
}

/// `A ⋉ U` for a module-algebra `U` over `A`.
pub fn semidirect<T: Field>(a: &Algebra<T>, u: &ModuleAlgebra<T>) -> Result<SemidirectAlgebra<T>> {
    a.validate().into_result(a.name())?;
    u.validate(a)?.into_result(u.algebra.name())?;
    Ok(SemidirectAlgebra::assemble(a.clone(), u.clone(), ProductKind::Semidirect))
}

/// `A × U`: both actions zero.
pub fn direct_product<T: Field>(a: &Algebra<T>, u: &Algebra<T>) -> SemidirectAlgebra<T> {
    let action = BimoduleAction::trivial(a.dim(), u.dim());
    let part_u = ModuleAlgebra::new(u.clone(), action).expect("trivial action sized for U");
    SemidirectAlgebra::assemble(a.clone(), part_u, ProductKind::Direct)
}

/// `T(A, U)`: the bimodule `U` with zero multiplication.
pub fn module_extension<T: Field>(a: &Algebra<T>, action: &BimoduleAction<T>) -> Result<SemidirectAlgebra<T>> {
    action.validate(a)?.into_result("module extension bimodule")?;
    let part_u = ModuleAlgebra::new(library::null(action.module_dim()), action.clone())?;
    Ok(SemidirectAlgebra::assemble(a.clone(), part_u, ProductKind::ModuleExtension))
}

/// An `(A, B)`-bimodule: `A` acts on the left, `B` on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerModule<T> {
    pub dim: usize,
    /// `L[i][p][q]` for `a_i m_p`, indexed as in [`BimoduleAction`].
    pub left: Vec<T>,
    /// `R[p][j][q]` for `m_p b_j`, indexed as in [`BimoduleAction`].
    pub right: Vec<T>,
}

impl<T: Field> CornerModule<T> {
    /// The combined action of `A × B`: `(a,b)m = am`, `m(a,b) = mb`.
    fn product_action(&self, na: usize, nb: usize) -> Result<BimoduleAction<T>> {
        let m = self.dim;
        if self.left.len() != na * m * m || self.right.len() != nb * m * m {
            return Err(Error::ShapeMismatch("corner action tensors have the wrong size".into()));
        }
        let n = na + nb;
        let mut left = vec![T::zero(); n * m * m];
        left[..na * m * m].clone_from_slice(&self.left);
        let mut right = vec![T::zero(); n * m * m];
        for p in 0..m {
            for j in 0..nb {
                let src = (p * nb + j) * m;
                let dst = (p * n + na + j) * m;
                right[dst..dst + m].clone_from_slice(&self.right[src..src + m]);
            }
        }
        BimoduleAction::new(n, m, left, right)
    }
}

/// `Tri(A, M, B)`, built as `T(A × B, M)`.
pub fn triangular<T: Field>(a: &Algebra<T>, b: &Algebra<T>, corner: &CornerModule<T>) -> Result<SemidirectAlgebra<T>> {
    let sum = library::direct_sum(a, b);
    let action = corner.product_action(a.dim(), b.dim())?;
    if let Some(v) = action.validate(&sum)?.violations.first() {
        return Err(Error::NotBimodule(v.to_string()));
    }
    let part_u = ModuleAlgebra::new(library::null(corner.dim), action)?;
    Ok(SemidirectAlgebra::assemble(
        sum,
        part_u,
        ProductKind::Triangular { left_dim: a.dim() },
    ))
}

/// `A ⋉_θ U` with `a x = x a = θ(a) x`.
pub fn theta_lau<T: Field>(a: &Algebra<T>, u: &Algebra<T>, theta: &Character<T>) -> Result<SemidirectAlgebra<T>> {
    theta.check(a)?;
    let action = BimoduleAction::scalar(&theta.values, u.dim());
    let part_u = ModuleAlgebra::new(u.clone(), action)?;
    Ok(SemidirectAlgebra::assemble(
        a.clone(),
        part_u,
        ProductKind::ThetaLau {
            character: theta.clone(),
        },
    ))
}

/// `Q ⋉ U`, the unitization of `U`.
pub fn unitization<T: Field>(u: &Algebra<T>) -> SemidirectAlgebra<T> {
    let action = BimoduleAction::scalar(&[T::one()], u.dim());
    let part_u = ModuleAlgebra::new(u.clone(), action).expect("scalar action sized for U");
    SemidirectAlgebra::assemble(library::scalar(), part_u, ProductKind::Unitization)
}

/// Checks `α(e_i e_j) = α(e_i) α(e_j)` for a map `A -> U` in row convention.
pub fn check_homomorphism<T: Field>(a: &Algebra<T>, u: &Algebra<T>, alpha: &Matrix<T>) -> Result<()> {
    if alpha.nrows() != a.dim() || alpha.ncols() != u.dim() {
        return Err(Error::ShapeMismatch(format!(
            "alpha must be {}x{}, got {}x{}",
            a.dim(),
            u.dim(),
            alpha.nrows(),
            alpha.ncols()
        )));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if alpha.apply(a.basis_product(i, j)) != u.mul(alpha.row(i), alpha.row(j)) {
                return Err(Error::NotHomomorphism { i, j });
            }
        }
    }
    Ok(())
}

/// `A ⋉_α U` with `a x = α(a) x` and `x a = x α(a)`.
pub fn alpha_product<T: Field>(a: &Algebra<T>, u: &Algebra<T>, alpha: &Matrix<T>) -> Result<SemidirectAlgebra<T>> {
    check_homomorphism(a, u, alpha)?;
    let (n, m) = (a.dim(), u.dim());
    let mut left = vec![T::zero(); n * m * m];
    let mut right = vec![T::zero(); n * m * m];
    for i in 0..n {
        let image = alpha.row(i);
        for p in 0..m {
            let unit = crate::scalar::unit_vector(m, p);
            let l = u.mul(image, &unit);
            let r = u.mul(&unit, image);
            left[(i * m + p) * m..(i * m + p + 1) * m].clone_from_slice(&l);
            right[(p * n + i) * m..(p * n + i + 1) * m].clone_from_slice(&r);
        }
    }
    let action = BimoduleAction::new(n, m, left, right)?;
    let part_u = ModuleAlgebra::new(u.clone(), action)?;
    Ok(SemidirectAlgebra::assemble(
        a.clone(),
        part_u,
        ProductKind::Alpha { alpha: alpha.clone() },
    ))
}

/// The map `(a, x) -> (a, x - α(a))` from `A × U` to `A ⋉_α U`, in row convention.
pub fn alpha_iso<T: Field>(alpha: &Matrix<T>) -> Matrix<T> {
    let (n, m) = (alpha.nrows(), alpha.ncols());
    let mut iso = Matrix::identity(n + m);
    for i in 0..n {
        for q in 0..m {
            iso.set(i, n + q, -alpha.get(i, q).clone());
        }
    }
    iso
}

/// Structure constants carried through an invertible linear map
/// `iso: source -> target` (row convention): the returned algebra is the
/// unique one making `iso` a homomorphism.
pub fn transport<T: Field>(source: &Algebra<T>, iso: &Matrix<T>) -> Result<Algebra<T>> {
    let inv = iso
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("transport map is not invertible".into()))?;
    source.change_basis(&inv)
}

/// The module extension of `A = T(B, B)` by `U = B` with `(a,b)x = ax` and
/// `x(a,b) = xa`, together with the derivation `D((a,b), x) = ((0,x), 0)`
/// whose `τ1` block is nonzero.
pub fn fixture_nonzero_tau1<T: Field>(b: &Algebra<T>) -> Result<(SemidirectAlgebra<T>, Matrix<T>)> {
    let k = b.dim();
    let inner = module_extension(b, &BimoduleAction::regular(b))?;
    let a = inner.total().clone();
    let n = a.dim();
    let mut left = vec![T::zero(); n * k * k];
    let mut right = vec![T::zero(); n * k * k];
    for i in 0..k {
        for p in 0..k {
            left[(i * k + p) * k..(i * k + p + 1) * k].clone_from_slice(b.basis_product(i, p));
            right[(p * n + i) * k..(p * n + i) * k + k].clone_from_slice(b.basis_product(p, i));
        }
    }
    let action = BimoduleAction::new(n, k, left, right)?;
    let product = module_extension(&a, &action)?;
    let big = product.dim();
    let mut d = Matrix::zeros(big, big);
    for p in 0..k {
        d.set(n + p, k + p, T::one());
    }
    Ok((product.with_name(format!("T(T({0},{0}),{0})", b.name())), d))
}

/// `A ⋉ U` with `U = A × C`, `(x,y)(x',y') = (xx', 0)` and the derivation
/// `τ1((x,y)) = γ(y)`, `τ2((x,y)) = (-γ(y), 0)`. The map `γ: C -> A` must be
/// a bimodule homomorphism with `c γ(c') + γ(c) c' = 0`.
pub fn fixture_gamma_twist<T: Field>(
    a: &Algebra<T>,
    c: &BimoduleAction<T>,
    gamma: &Matrix<T>,
) -> Result<(SemidirectAlgebra<T>, Matrix<T>)> {
    let n = a.dim();
    let mc = c.module_dim();
    if gamma.nrows() != mc || gamma.ncols() != n {
        return Err(Error::ShapeMismatch(format!(
            "gamma must be {mc}x{n}, got {}x{}",
            gamma.nrows(),
            gamma.ncols()
        )));
    }
    c.validate(a)?.into_result("C")?;
    for i in 0..n {
        let e = crate::scalar::unit_vector(n, i);
        for p in 0..mc {
            if gamma.apply(c.basis_left(i, p)) != a.mul(&e, gamma.row(p)) {
                return Err(Error::GammaIdentityFailed(format!(
                    "gamma(e_{i} c_{p}) != e_{i} gamma(c_{p})"
                )));
            }
            if gamma.apply(c.basis_right(p, i)) != a.mul(gamma.row(p), &e) {
                return Err(Error::GammaIdentityFailed(format!(
                    "gamma(c_{p} e_{i}) != gamma(c_{p}) e_{i}"
                )));
            }
        }
    }
    for p in 0..mc {
        for r in 0..mc {
            let cp = crate::scalar::unit_vector(mc, p);
            let cr = crate::scalar::unit_vector(mc, r);
            let mut sum = c.act_right(&cp, gamma.row(r));
            axpy(&mut sum, &T::one(), &c.act_left(gamma.row(p), &cr));
            if !crate::scalar::is_zero_vector(&sum) {
                return Err(Error::GammaIdentityFailed(format!(
                    "c_{p} gamma(c_{r}) + gamma(c_{p}) c_{r} = {}",
                    crate::scalar::format_vector(&sum)
                )));
            }
        }
    }

    // U = A × C with the componentwise actions and product (x,y)(x',y') = (xx', 0).
    let m = n + mc;
    let mut u_entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, v) in a.basis_product(i, j).iter().enumerate() {
                if !v.is_zero() {
                    u_entries.push((i, j, k, v.clone()));
                }
            }
        }
    }
    let u = Algebra::from_entries(format!("{}x{}", a.name(), "C"), m, u_entries)?;
    let mut left = vec![T::zero(); n * m * m];
    let mut right = vec![T::zero(); n * m * m];
    for i in 0..n {
        for p in 0..n {
            left[(i * m + p) * m..(i * m + p) * m + n].clone_from_slice(a.basis_product(i, p));
            right[(p * n + i) * m..(p * n + i) * m + n].clone_from_slice(a.basis_product(p, i));
        }
        for s in 0..mc {
            let row = (i * m + n + s) * m + n;
            left[row..row + mc].clone_from_slice(c.basis_left(i, s));
            let row = ((n + s) * n + i) * m + n;
            right[row..row + mc].clone_from_slice(c.basis_right(s, i));
        }
    }
    let action = BimoduleAction::new(n, m, left, right)?;
    let product = semidirect(a, &ModuleAlgebra::new(u, action)?)?;
    let big = product.dim();
    let mut d = Matrix::zeros(big, big);
    for s in 0..mc {
        let row = n + n + s;
        for k in 0..n {
            let g = gamma.get(s, k);
            d.set(row, k, g.clone());
            d.set(row, n + k, -g.clone());
        }
    }
    Ok((product, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(x: i64) -> Q {
        Q::from_int(x)
    }

    fn check_invariants(p: &SemidirectAlgebra<Q>) {
        assert!(p.total().validate().is_valid(), "{} not associative", p.total().name());
        assert!(p.block_laws_hold());
        assert_eq!(p.quotient_by_ideal_block().mult(), p.part_a().mult());
    }

    #[test]
    fn semidirect_of_trivial_pieces() {
        let u = ModuleAlgebra::new(library::null::<Q>(1), BimoduleAction::trivial(1, 1)).unwrap();
        let p = semidirect(&library::scalar(), &u).unwrap();
        check_invariants(&p);
        assert_eq!(p.total().basis_product(0, 0), &[q(1), q(0)]);
        assert!(p.total().basis_product(0, 1).iter().all(|x| *x == q(0)));
    }

    #[test]
    fn unitization_of_null_line_is_dual_numbers() {
        let p = unitization(&library::null::<Q>(1));
        check_invariants(&p);
        assert_eq!(p.total().mult(), library::dual_numbers::<Q>().mult());
        let t = module_extension(&library::scalar::<Q>(), &BimoduleAction::regular(&library::scalar())).unwrap();
        assert_eq!(t.total().mult(), library::dual_numbers::<Q>().mult());
    }

    #[test]
    fn regular_semidirect_is_isomorphic_to_product() {
        let qa = library::scalar::<Q>();
        let u = ModuleAlgebra::new(qa.clone(), BimoduleAction::regular(&qa)).unwrap();
        let p = semidirect(&qa, &u).unwrap();
        check_invariants(&p);
        // (a,x) -> (a, a+x) carries Q ⋉ Q onto Q × Q
        let iso = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let image = transport(p.total(), &iso).unwrap();
        assert_eq!(image.mult(), direct_product(&qa, &qa).total().mult());
    }

    #[test]
    fn semidirect_rejects_incompatible_module() {
        let a = library::dual_numbers::<Q>();
        let mut action = BimoduleAction::regular(&a);
        action = BimoduleAction::new(2, 2, action.left_tensor().to_vec(), vec![q(0); 8]).unwrap();
        let u = ModuleAlgebra::new(a.clone(), action).unwrap();
        assert!(matches!(semidirect(&a, &u), Err(Error::ValidationFailed(_))));
    }

    #[test]
    fn direct_products() {
        let qa = library::scalar::<Q>();
        let p = direct_product(&qa, &qa);
        check_invariants(&p);
        assert_eq!(p.total().mult(), library::direct_sum(&qa, &qa).mult());

        let p = direct_product(&library::matrix::<Q>(2), &qa);
        check_invariants(&p);
        assert_eq!(p.dim(), 5);

        let p = direct_product(&library::matrix::<Q>(2), &library::null(0));
        assert_eq!(p.total().mult(), library::matrix::<Q>(2).mult());
    }

    #[test]
    fn module_extensions() {
        let m2 = library::matrix::<Q>(2);
        let t = module_extension(&m2, &BimoduleAction::trivial(4, 0)).unwrap();
        assert_eq!(t.total().mult(), m2.mult());

        // T(Q×Q, Q) with (a,b)x = ax, x(a,b) = xb is the upper-triangular 2x2 algebra
        let pair = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let action = BimoduleAction::new(2, 1, vec![q(1), q(0)], vec![q(0), q(1)]).unwrap();
        let t = module_extension(&pair, &action).unwrap();
        check_invariants(&t);
        // coordinates (E11, E22, E12) versus the library order (E11, E12, E22)
        let reorder = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(t.total().change_basis(&reorder).unwrap().mult(), library::upper_triangular::<Q>(2).mult());
    }

    #[test]
    fn triangular_algebras() {
        let qa = library::scalar::<Q>();
        let corner = CornerModule { dim: 1, left: vec![q(1)], right: vec![q(1)] };
        let t = triangular(&qa, &qa, &corner).unwrap();
        check_invariants(&t);
        assert_eq!(t.dim(), 3);
        let reorder = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(t.total().change_basis(&reorder).unwrap().mult(), library::upper_triangular::<Q>(2).mult());

        let zero = CornerModule { dim: 0, left: vec![], right: vec![] };
        let t = triangular(&library::dual_numbers::<Q>(), &qa, &zero).unwrap();
        assert_eq!(t.total().mult(), library::direct_sum(&library::dual_numbers(), &qa).mult());

        // M2 acting on column vectors Q^2, Q acting by scalars on the right
        let m2 = library::matrix::<Q>(2);
        let mut left = vec![q(0); 4 * 2 * 2];
        for r in 0..2 {
            for s in 0..2 {
                // E_rs e_s = e_r
                left[((r * 2 + s) * 2 + s) * 2 + r] = q(1);
            }
        }
        let corner = CornerModule { dim: 2, left, right: vec![q(1), q(0), q(0), q(1)] };
        let t = triangular(&m2, &qa, &corner).unwrap();
        check_invariants(&t);
        assert_eq!(t.dim(), 7);
        assert!(t.part_u().algebra.is_null());

        let bad = CornerModule { dim: 1, left: vec![q(2)], right: vec![q(1)] };
        assert!(matches!(triangular(&qa, &qa, &bad), Err(Error::NotBimodule(_))));
    }

    #[test]
    fn theta_lau_products() {
        let u = library::dual_numbers::<Q>();
        let p = theta_lau(&library::scalar(), &u, &Character::new(vec![q(1)])).unwrap();
        check_invariants(&p);
        assert_eq!(p.total().mult(), unitization(&u).total().mult());

        let pair = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let p = theta_lau(&pair, &library::null(1), &Character::new(vec![q(1), q(0)])).unwrap();
        check_invariants(&p);
        assert_eq!(p.action().annihilator_in_algebra().dim(), 1);

        assert!(matches!(
            theta_lau(&pair, &u, &Character::new(vec![q(0), q(0)])),
            Err(Error::InvalidCharacter(_))
        ));
    }

    #[test]
    fn alpha_products_transport_onto_direct_products() {
        let cases: Vec<(Algebra<Q>, Algebra<Q>, Matrix<Q>)> = vec![
            (library::dual_numbers(), library::matrix(2), Matrix::zeros(2, 4)),
            (library::scalar(), library::scalar(), Matrix::identity(1)),
            (library::matrix(2), library::matrix(2), Matrix::identity(4)),
        ];
        for (a, u, alpha) in cases {
            let target = alpha_product(&a, &u, &alpha).unwrap();
            check_invariants(&target);
            let source = direct_product(&a, &u);
            let moved = transport(source.total(), &alpha_iso(&alpha)).unwrap();
            assert_eq!(moved.mult(), target.total().mult());
        }
        let not_hom = Matrix::from_ints(&[&[2]]);
        assert_eq!(
            alpha_product(&library::scalar::<Q>(), &library::scalar(), &not_hom),
            Err(Error::NotHomomorphism { i: 0, j: 0 })
        );
    }

    #[test]
    fn nonzero_tau1_fixture_shapes() {
        let (p, d) = fixture_nonzero_tau1(&library::scalar::<Q>()).unwrap();
        check_invariants(&p);
        assert_eq!(p.dim(), 3);
        assert!(!d.is_zero());
        let (p, d) = fixture_nonzero_tau1(&library::null::<Q>(0)).unwrap();
        assert_eq!(p.dim(), 0);
        assert!(d.is_zero());
        let (p, _) = fixture_nonzero_tau1(&library::matrix::<Q>(2)).unwrap();
        check_invariants(&p);
        assert_eq!(p.dim(), 12);
    }

    #[test]
    fn gamma_twist_checks() {
        let t2 = library::upper_triangular::<Q>(2);
        // C = span{E12} with the multiplication action of T2
        let c = BimoduleAction::new(3, 1, vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)]).unwrap();
        let gamma = Matrix::from_ints(&[&[0, 1, 0]]);
        let (p, d) = fixture_gamma_twist(&t2, &c, &gamma).unwrap();
        check_invariants(&p);
        assert_eq!(p.dim(), 7);
        assert!(!d.is_zero());

        let (_, d) = fixture_gamma_twist(&t2, &c, &Matrix::zeros(1, 3)).unwrap();
        assert!(d.is_zero());

        // γ(E12) = E11 is not a bimodule map
        let bad = Matrix::from_ints(&[&[1, 0, 0]]);
        assert!(matches!(fixture_gamma_twist(&t2, &c, &bad), Err(Error::GammaIdentityFailed(_))));

        // Q acting on itself with γ = id: cγ(c') + γ(c)c' = 2cc' ≠ 0
        let qa = library::scalar::<Q>();
        let reg = BimoduleAction::regular(&qa);
        assert!(matches!(
            fixture_gamma_twist(&qa, &reg, &Matrix::identity(1)),
            Err(Error::GammaIdentityFailed(_))
        ));
    }

    #[test]
    fn basis_change_keeps_products_valid() {
        let pair = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let p = theta_lau(&pair, &library::dual_numbers(), &Character::new(vec![q(0), q(1)])).unwrap();
        let pa = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let pu = Matrix::from_ints(&[&[2, 0], &[1, 1]]);
        let changed = p.change_basis(&pa, &pu).unwrap();
        check_invariants(&changed);
        let theta = changed.kind().character().unwrap();
        assert!(theta.is_valid(changed.part_a()));
        assert!(changed.part_u().validate(changed.part_a()).unwrap().is_valid());
    }
}
