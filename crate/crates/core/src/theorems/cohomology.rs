//! The four quotient descriptions of `H¹(A ⋉ U)` and their subspaces
//! `E`, `F`, `K`.

use crate::derivations::{inner_map, r_map};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::products::SemidirectAlgebra;
use crate::scalar::{unit_vector, Field};

use super::analysis::Analysis;
use super::hypotheses::Hypothesis;
use super::{Check, Outcome, TheoremId, TheoremReport};

fn concat<T: Field>(x: &Matrix<T>, y: &Matrix<T>) -> Vec<T> {
    let mut v = x.data().to_vec();
    v.extend_from_slice(y.data());
    v
}

/// `E = {(id_a, r_a + id_{U,x}) : a ∈ A, id_{A,x} = 0}` inside
/// `L(A,A) × L(U,U)`. The constraint on `x` says `x` commutes with `A`, so
/// `E` is spanned by `(id_a, r_a)` over a basis of `A` and `(0, id_{U,x})`
/// over the centralizer.
pub fn build_e<T: Field>(p: &SemidirectAlgebra<T>) -> Subspace<T> {
    build_e_with(&Analysis::new(p))
}

fn build_e_with<T: Field>(an: &Analysis<'_, T>) -> Subspace<T> {
    let p = an.product();
    let (n, m) = (p.n(), p.m());
    let mut gens = Vec::new();
    for i in 0..n {
        let e = unit_vector(n, i);
        gens.push(concat(&inner_map(&e, an.regular_a()), &r_map(&e, p.action())));
    }
    for x in p.action().centralizer().basis_vectors() {
        gens.push(concat(&Matrix::zeros(n, n), &inner_map(x, an.regular_u())));
    }
    Subspace::span(n * n + m * m, gens).expect("generators sized for the ambient")
}

/// `F = {(id_{A,x}, r_a + id_{U,x}) : x ∈ U, id_a = 0}` inside
/// `L(A,U) × L(U,U)`; the constraint says `a ∈ Z(A)`.
pub fn build_f<T: Field>(p: &SemidirectAlgebra<T>) -> Subspace<T> {
    build_f_with(&Analysis::new(p))
}

fn build_f_with<T: Field>(an: &Analysis<'_, T>) -> Subspace<T> {
    let p = an.product();
    let (n, m) = (p.n(), p.m());
    let mut gens = Vec::new();
    for z in p.part_a().center().basis_vectors() {
        gens.push(concat(&Matrix::zeros(n, m), &r_map(z, p.action())));
    }
    for q in 0..m {
        let x = unit_vector(m, q);
        gens.push(concat(&inner_map(&x, p.action()), &inner_map(&x, an.regular_u())));
    }
    Subspace::span(n * m + m * m, gens).expect("generators sized for the ambient")
}

/// `K = {(id_a, id_{A,x}) : r_a + id_{U,x} = 0}` inside `L(A,A) × L(A,U)`.
pub fn build_k<T: Field>(p: &SemidirectAlgebra<T>) -> Subspace<T> {
    build_k_with(&Analysis::new(p))
}

fn build_k_with<T: Field>(an: &Analysis<'_, T>) -> Subspace<T> {
    let p = an.product();
    let (n, m) = (p.n(), p.m());
    // Row t of each matrix is the image of parameter basis vector t of A × U.
    let mut constraint = Vec::with_capacity(n + m);
    let mut image = Vec::with_capacity(n + m);
    for i in 0..n {
        let a = unit_vector(n, i);
        constraint.push(r_map(&a, p.action()).into_data());
        image.push(concat(&inner_map(&a, an.regular_a()), &Matrix::zeros(n, m)));
    }
    for q in 0..m {
        let x = unit_vector(m, q);
        constraint.push(inner_map(&x, an.regular_u()).into_data());
        image.push(concat(&Matrix::zeros(n, n), &inner_map(&x, p.action())));
    }
    let constraint = Matrix::from_rows(m * m, constraint).expect("rows sized for L(U,U)");
    let image = Matrix::from_rows(n * n + n * m, image).expect("rows sized for the ambient");
    let params = Subspace::preimage(&constraint, &Subspace::zero(m * m)).expect("matching dimensions");
    params.map_through(&image).expect("matching dimensions")
}

/// The hypotheses gating each quotient theorem.
pub fn gates(id: TheoremId) -> Vec<Hypothesis> {
    use Hypothesis::*;
    match id {
        TheoremId::QuotientE => vec![Tau1Vanishes, DerivationsIntoAnnA, H1AUVanishes],
        TheoremId::QuotientF => vec![Tau1Vanishes, DerivationsIntoAnnU, H1AVanishes],
        TheoremId::QuotientK => vec![Tau1Vanishes, DerivationsIntoAnnA, DerivationsIntoAnnU, HomDerivationsReduce],
        TheoremId::QuotientCI => vec![Tau1Vanishes, H1AVanishes, H1AUVanishes],
        _ => Vec::new(),
    }
}

/// Computes `dim H¹(A ⋉ U)` directly and, when the hypotheses of `id` hold,
/// the dimension of the quotient that is claimed to be isomorphic to it.
pub fn verify_theorem<T: Field>(id: TheoremId, p: &SemidirectAlgebra<T>) -> Result<TheoremReport> {
    verify_theorem_with(id, &Analysis::new(p))
}

pub fn verify_theorem_with<T: Field>(id: TheoremId, an: &Analysis<'_, T>) -> Result<TheoremReport> {
    if !id.is_cohomology_quotient() {
        return Err(Error::InvalidArgument(format!("{id} is not a cohomology quotient theorem")));
    }
    let hypotheses = gates(id)
        .into_iter()
        .map(|h| h.check(an))
        .collect::<Result<Vec<_>>>()?;
    TheoremReport::gated(id, an.product().total().name(), hypotheses, || {
        let (numerator, denominator, denominator_name) = match id {
            TheoremId::QuotientE => (an.z1_a().space().product(an.hom_z1_u().space()), build_e_with(an), "E"),
            TheoremId::QuotientF => (an.z1_au().space().product(an.hom_z1_u().space()), build_f_with(an), "F"),
            TheoremId::QuotientK => (an.z1_a().space().product(an.z1_au().space()), build_k_with(an), "K"),
            _ => (
                an.hom_z1_u().space().clone(),
                an.c_u().sum(an.i_u())?.into_space(),
                "C_A(U) + I(U)",
            ),
        };
        let contained = denominator.is_subspace_of(&numerator)?;
        let mut claims = vec![Check::from_bool(
            format!("{denominator_name} lies in the numerator"),
            contained,
            || format!("{denominator_name} = {denominator}"),
        )];
        let lhs = an.h1_total()?;
        let rhs = if contained {
            Some(Subspace::quotient_dim(&numerator, &denominator)?)
        } else {
            None
        };
        if lhs == 0 && rhs == Some(0) {
            claims.extend(vanishing_consequences(id, an)?);
        }
        Ok(Outcome {
            claims,
            lhs_dim: Some(lhs),
            rhs_dim: rhs,
        })
    })
}

/// What each isomorphism forces when `H¹(A ⋉ U) = 0`.
fn vanishing_consequences<T: Field>(id: TheoremId, an: &Analysis<'_, T>) -> Result<Vec<Check>> {
    let zero = |name: &str, dim: usize| Check::from_bool(name, dim == 0, || format!("dimension {dim}"));
    let reduces = || -> Result<Check> {
        let ci = an.c_u().sum(an.i_u())?;
        Ok(Check::from_bool(
            "H¹(A⋉U) = 0 forces Hom_A(U) ∩ Z¹(U) = C_A(U) + I(U)",
            an.hom_z1_u().is_subspace_of(&ci)?,
            || "Hom_A(U) ∩ Z¹(U) is larger".into(),
        ))
    };
    Ok(match id {
        TheoremId::QuotientE => vec![zero("H¹(A⋉U) = 0 forces H¹(A) = 0", an.h1_a()?), reduces()?],
        TheoremId::QuotientF => vec![zero("H¹(A⋉U) = 0 forces H¹(A,U) = 0", an.h1_au()?), reduces()?],
        TheoremId::QuotientK => vec![
            zero("H¹(A⋉U) = 0 forces H¹(A) = 0", an.h1_a()?),
            zero("H¹(A⋉U) = 0 forces H¹(A,U) = 0", an.h1_au()?),
        ],
        _ => vec![reduces()?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BimoduleAction, Character, ModuleAlgebra};
    use crate::derivations::LinearMapSpace;
    use crate::library;
    use crate::products;
    use crate::theorems::Verdict;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(x: i64) -> Q {
        Q::from_int(x)
    }

    #[test]
    fn e_for_trivial_actions() {
        let p = products::direct_product(&library::matrix::<Q>(2), &library::upper_triangular(2));
        let an = Analysis::new(&p);
        let expected = an.n1_a().space().product(an.n1_u().space());
        assert_eq!(build_e(&p), expected);
    }

    #[test]
    fn theta_lau_subspaces() {
        let a = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let u = library::upper_triangular::<Q>(2);
        let theta = Character::new(vec![q(1), q(0)]);
        let p = products::theta_lau(&a, &u, &theta).unwrap();
        let an = Analysis::new(&p);
        let (n, m) = (p.n(), p.m());
        assert_eq!(build_e(&p), an.n1_a().space().product(an.n1_u().space()));
        assert_eq!(
            build_f(&p),
            LinearMapSpace::zero(n, m).space().product(an.n1_u().space())
        );
        assert_eq!(build_k(&p), an.n1_a().space().product(&Subspace::zero(n * m)));
    }

    #[test]
    fn commutative_square_zero_subspaces_vanish() {
        let a = library::dual_numbers::<Q>();
        let act = BimoduleAction::regular(&a);
        let p = products::module_extension(&a, &act).unwrap();
        assert!(build_e(&p).is_zero());
        assert!(build_f(&p).is_zero());
        assert!(build_k(&p).is_zero());
    }

    #[test]
    fn direct_product_quotient_by_e() {
        let a = library::direct_sum(&library::scalar::<Q>(), &library::scalar());
        let p = products::direct_product(&a, &library::matrix(2));
        let r = verify_theorem(TheoremId::QuotientE, &p).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "{r}");
        assert_eq!((r.lhs_dim, r.rhs_dim), (Some(0), Some(0)));
    }

    #[test]
    fn dual_numbers_quotient_by_c_plus_i() {
        let p = products::theta_lau(&library::scalar::<Q>(), &library::null(1), &Character::new(vec![q(1)])).unwrap();
        let r = verify_theorem(TheoremId::QuotientCI, &p).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "{r}");
        assert_eq!((r.lhs_dim, r.rhs_dim), (Some(1), Some(1)));
    }

    #[test]
    fn gating_quotient_by_k() {
        // U = null(2) over Q with the scalar action: Hom_A(U) ∩ Z¹(U) is all of
        // L(U,U) while R_A(U) + N¹(U) = 0.
        let u = ModuleAlgebra::new(library::null::<Q>(2), BimoduleAction::scalar(&[q(1)], 2)).unwrap();
        let p = products::semidirect(&library::scalar(), &u).unwrap();
        let r = verify_theorem(TheoremId::QuotientK, &p).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesNotMet);
        assert!(r.failed_hypotheses().any(|h| h.name == "hom-z1-u-in-r-n1"));
    }

    #[test]
    fn rejects_non_quotient_ids() {
        let p = products::unitization(&library::null::<Q>(1));
        assert!(verify_theorem(TheoremId::Structure, &p).is_err());
    }
}
