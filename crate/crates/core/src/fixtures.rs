//! Named instances with known answers. The CLI ships the same instances as
//! JSON files under `fixtures/`.

use crate::algebra::{Algebra, BimoduleAction, Character};
use crate::library;
use crate::linalg::Matrix;
use crate::products::{self, SemidirectAlgebra};
use crate::scalar::Field;
use crate::theorems::TheoremId;

/// An algebra with its first cohomology dimension on itself.
pub struct AlgebraFixture<T> {
    pub name: &'static str,
    pub algebra: Algebra<T>,
    pub h1: usize,
}

/// A product, an optional distinguished derivation, and the theorems with
/// their expected `(lhs, rhs)` dimensions.
pub struct ProductFixture<T> {
    pub name: &'static str,
    pub product: SemidirectAlgebra<T>,
    pub derivation: Option<Matrix<T>>,
    pub expected: Vec<(TheoremId, usize, usize)>,
}

pub fn algebra_fixtures<T: Field>() -> Vec<AlgebraFixture<T>> {
    vec![
        AlgebraFixture {
            name: "m2",
            algebra: library::matrix(2),
            h1: 0,
        },
        AlgebraFixture {
            name: "dual-numbers",
            algebra: library::dual_numbers(),
            h1: 1,
        },
        AlgebraFixture {
            name: "q",
            algebra: library::scalar(),
            h1: 0,
        },
        AlgebraFixture {
            name: "t2",
            algebra: library::upper_triangular(2),
            h1: 0,
        },
    ]
}

pub fn product_fixtures<T: Field>() -> Vec<ProductFixture<T>> {
    let q = library::scalar::<T>();
    let m2 = library::matrix::<T>(2);
    let (tau1_fixture, tau1_map) = products::fixture_nonzero_tau1(&q).expect("valid fixture");
    let (gamma_fixture, gamma_map) = products::fixture_gamma_twist(
        &library::null(1),
        &BimoduleAction::trivial(1, 1),
        &Matrix::identity(1),
    )
    .expect("valid fixture");
    let fixture = |name, product, expected| ProductFixture {
        name,
        product,
        derivation: None,
        expected,
    };
    vec![
        ProductFixture {
            name: "nonzero-tau1",
            product: tau1_fixture,
            derivation: Some(tau1_map),
            expected: Vec::new(),
        },
        ProductFixture {
            name: "gamma-twist",
            product: gamma_fixture,
            derivation: Some(gamma_map),
            expected: Vec::new(),
        },
        fixture(
            "dual-lau",
            products::theta_lau(&q, &library::null(1), &Character::new(vec![T::one()])).expect("valid character"),
            vec![(TheoremId::QuotientCI, 1, 1), (TheoremId::LauReduced, 1, 1)],
        ),
        fixture(
            "t-q-q",
            products::module_extension(&q, &BimoduleAction::regular(&q)).expect("regular bimodule"),
            vec![(TheoremId::ExtensionCohomology, 1, 1)],
        ),
        fixture(
            "m2-times-m2",
            products::direct_product(&m2, &m2),
            vec![(TheoremId::QuotientE, 0, 0), (TheoremId::DirectSplitting, 0, 0)],
        ),
        fixture(
            "qq-times-m2",
            products::direct_product(&library::direct_sum(&q, &q), &m2),
            vec![(TheoremId::QuotientE, 0, 0)],
        ),
        fixture(
            "alpha-zero-q",
            products::alpha_product(&q, &q, &Matrix::zeros(1, 1)).expect("zero is a homomorphism"),
            vec![(TheoremId::AlphaIso, 0, 0)],
        ),
        fixture(
            "alpha-identity-q",
            products::alpha_product(&q, &q, &Matrix::identity(1)).expect("identity is a homomorphism"),
            vec![(TheoremId::AlphaIso, 0, 0)],
        ),
        fixture(
            "alpha-identity-m2",
            products::alpha_product(&m2, &m2, &Matrix::identity(4)).expect("identity is a homomorphism"),
            vec![(TheoremId::AlphaIso, 0, 0)],
        ),
    ]
}
