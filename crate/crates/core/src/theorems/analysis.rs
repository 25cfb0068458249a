use std::cell::OnceCell;

use crate::algebra::BimoduleAction;
use crate::derivations::{self, LinearMapSpace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::products::SemidirectAlgebra;
use crate::scalar::Field;

/// Lazily computed spaces attached to one product `A ⋉ U`, shared between
/// the hypothesis checks and verifiers run on it.
pub struct Analysis<'a, T: Field> {
    product: &'a SemidirectAlgebra<T>,
    regular_a: BimoduleAction<T>,
    regular_u: BimoduleAction<T>,
    regular_total: BimoduleAction<T>,
    z1_total: OnceCell<LinearMapSpace<T>>,
    n1_total: OnceCell<LinearMapSpace<T>>,
    z1_a: OnceCell<LinearMapSpace<T>>,
    n1_a: OnceCell<LinearMapSpace<T>>,
    z1_au: OnceCell<LinearMapSpace<T>>,
    n1_au: OnceCell<LinearMapSpace<T>>,
    z1_u: OnceCell<LinearMapSpace<T>>,
    n1_u: OnceCell<LinearMapSpace<T>>,
    hom_u: OnceCell<LinearMapSpace<T>>,
    hom_z1_u: OnceCell<LinearMapSpace<T>>,
    r_u: OnceCell<LinearMapSpace<T>>,
    c_u: OnceCell<LinearMapSpace<T>>,
    i_u: OnceCell<LinearMapSpace<T>>,
}

fn quotient<T: Field>(z: &LinearMapSpace<T>, b: &LinearMapSpace<T>, what: &str) -> Result<usize> {
    Subspace::quotient_dim(z.space(), b.space())
        .map_err(|_| Error::InternalInvariantViolation(format!("inner maps of {what} fail the Leibniz rule")))
}

impl<'a, T: Field> Analysis<'a, T> {
    pub fn new(product: &'a SemidirectAlgebra<T>) -> Self {
        Self {
            product,
            regular_a: BimoduleAction::regular(product.part_a()),
            regular_u: BimoduleAction::regular(&product.part_u().algebra),
            regular_total: BimoduleAction::regular(product.total()),
            z1_total: OnceCell::new(),
            n1_total: OnceCell::new(),
            z1_a: OnceCell::new(),
            n1_a: OnceCell::new(),
            z1_au: OnceCell::new(),
            n1_au: OnceCell::new(),
            z1_u: OnceCell::new(),
            n1_u: OnceCell::new(),
            hom_u: OnceCell::new(),
            hom_z1_u: OnceCell::new(),
            r_u: OnceCell::new(),
            c_u: OnceCell::new(),
            i_u: OnceCell::new(),
        }
    }

    pub fn product(&self) -> &'a SemidirectAlgebra<T> {
        self.product
    }

    pub fn regular_a(&self) -> &BimoduleAction<T> {
        &self.regular_a
    }

    pub fn regular_u(&self) -> &BimoduleAction<T> {
        &self.regular_u
    }

    pub fn regular_total(&self) -> &BimoduleAction<T> {
        &self.regular_total
    }

    /// `Z¹(A ⋉ U)`.
    pub fn z1_total(&self) -> &LinearMapSpace<T> {
        self.z1_total
            .get_or_init(|| derivations::derivations(self.product.total(), &self.regular_total))
    }

    pub fn n1_total(&self) -> &LinearMapSpace<T> {
        self.n1_total.get_or_init(|| derivations::inner_space(&self.regular_total))
    }

    pub fn h1_total(&self) -> Result<usize> {
        quotient(self.z1_total(), self.n1_total(), "A⋉U")
    }

    /// `Z¹(A)`.
    pub fn z1_a(&self) -> &LinearMapSpace<T> {
        self.z1_a
            .get_or_init(|| derivations::derivations(self.product.part_a(), &self.regular_a))
    }

    pub fn n1_a(&self) -> &LinearMapSpace<T> {
        self.n1_a.get_or_init(|| derivations::inner_space(&self.regular_a))
    }

    pub fn h1_a(&self) -> Result<usize> {
        quotient(self.z1_a(), self.n1_a(), "A")
    }

    /// `Z¹(A, U)`.
    pub fn z1_au(&self) -> &LinearMapSpace<T> {
        self.z1_au
            .get_or_init(|| derivations::derivations(self.product.part_a(), self.product.action()))
    }

    pub fn n1_au(&self) -> &LinearMapSpace<T> {
        self.n1_au.get_or_init(|| derivations::inner_space(self.product.action()))
    }

    pub fn h1_au(&self) -> Result<usize> {
        quotient(self.z1_au(), self.n1_au(), "A into U")
    }

    /// `Z¹(U)`.
    pub fn z1_u(&self) -> &LinearMapSpace<T> {
        self.z1_u
            .get_or_init(|| derivations::derivations(&self.product.part_u().algebra, &self.regular_u))
    }

    pub fn n1_u(&self) -> &LinearMapSpace<T> {
        self.n1_u.get_or_init(|| derivations::inner_space(&self.regular_u))
    }

    pub fn h1_u(&self) -> Result<usize> {
        quotient(self.z1_u(), self.n1_u(), "U")
    }

    /// `Hom_A(U)`.
    pub fn hom_u(&self) -> &LinearMapSpace<T> {
        self.hom_u.get_or_init(|| {
            let act = self.product.action();
            derivations::hom_space(act, act).expect("same algebra on both sides")
        })
    }

    /// `Hom_A(U) ∩ Z¹(U)`.
    pub fn hom_z1_u(&self) -> &LinearMapSpace<T> {
        self.hom_z1_u
            .get_or_init(|| self.hom_u().intersect(self.z1_u()).expect("both are maps U -> U"))
    }

    pub fn r_u(&self) -> &LinearMapSpace<T> {
        self.r_u.get_or_init(|| derivations::r_space(self.product.action()))
    }

    pub fn c_u(&self) -> &LinearMapSpace<T> {
        self.c_u
            .get_or_init(|| derivations::c_space(self.product.part_a(), self.product.action()))
    }

    pub fn i_u(&self) -> &LinearMapSpace<T> {
        self.i_u.get_or_init(|| derivations::i_space(self.product.part_u()))
    }

    /// The four corner blocks of a map on `A ⋉ U` given as a flattened vector.
    pub fn blocks_of(&self, v: &[T]) -> [Matrix<T>; 4] {
        let (n, big) = (self.product.n(), self.product.dim());
        let d = Matrix::from_vec(big, big, v.to_vec()).expect("vector is a map on A⋉U");
        [
            d.submatrix(0..n, 0..n),
            d.submatrix(0..n, n..big),
            d.submatrix(n..big, 0..n),
            d.submatrix(n..big, n..big),
        ]
    }
}
