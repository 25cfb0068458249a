//! Verifiers for the direct-product, α-product, module-extension and θ-Lau
//! special cases.

use crate::algebra::Character;
use crate::derivations::{self, is_module_hom};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::products::{self, ProductKind, SemidirectAlgebra};
use crate::scalar::{axpy, dot, is_zero_vector, unit_vector, Field};

use super::analysis::Analysis;
use super::blocks::{tau1_anticommutes, tau1_kills_products, SingleBlock};
use super::hypotheses::Hypothesis;
use super::{Check, Outcome, TheoremId, TheoremReport};

/// The blocks of one basis derivation of `A ⋉ U`.
struct Blocks<T> {
    full: Matrix<T>,
    d1: Matrix<T>,
    d2: Matrix<T>,
    t1: Matrix<T>,
    t2: Matrix<T>,
}

/// Evaluates named block identities on every basis derivation of `A ⋉ U`.
/// Each identity is linear in the derivation, so a basis suffices.
fn block_claims<T, F>(an: &Analysis<'_, T>, names: &[&str], eval: F) -> Result<Vec<Check>>
where
    T: Field,
    F: Fn(&Blocks<T>) -> Result<Vec<bool>>,
{
    let mut witnesses: Vec<Option<String>> = vec![None; names.len()];
    for v in an.z1_total().space().basis_vectors() {
        let [d1, d2, t1, t2] = an.blocks_of(v);
        let blocks = Blocks {
            full: an.z1_total().to_map(v),
            d1,
            d2,
            t1,
            t2,
        };
        let results = eval(&blocks)?;
        debug_assert_eq!(results.len(), names.len());
        for (w, ok) in witnesses.iter_mut().zip(results) {
            if !ok && w.is_none() {
                *w = Some(format!("derivation {}", blocks.full));
            }
        }
    }
    Ok(names
        .iter()
        .zip(witnesses)
        .map(|(name, w)| Check::from_witness(*name, w))
        .collect())
}

fn rows_within<T: Field>(map: &Matrix<T>, space: &Subspace<T>) -> Result<bool> {
    for row in map.rows() {
        if !space.contains(row)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn wrong_kind<T: Field>(expected: &str, p: &SemidirectAlgebra<T>) -> Error {
    Error::WrongConstructionKind {
        expected: expected.into(),
        found: p.kind().label().into(),
    }
}

fn dims_equal(name: &str, lhs: usize, rhs: usize) -> Check {
    Check::from_bool(name, lhs == rhs, || format!("{lhs} versus {rhs}"))
}

/// Runs the special-case verifier `id` on `p`, which must have been built by
/// the matching construction.
pub fn verify_special_case<T: Field>(id: TheoremId, p: &SemidirectAlgebra<T>) -> Result<TheoremReport> {
    verify_special_case_with(id, &Analysis::new(p))
}

pub fn verify_special_case_with<T: Field>(id: TheoremId, an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    match id {
        TheoremId::DirectBlocks | TheoremId::DirectSplitting if *p.kind() != ProductKind::Direct => {
            Err(wrong_kind("direct", p))
        }
        TheoremId::AlphaIso if !matches!(p.kind(), ProductKind::Alpha { .. }) => Err(wrong_kind("alpha", p)),
        TheoremId::ExtensionBlocks | TheoremId::ExtensionCohomology | TheoremId::ExtensionEmbedding
            if !p.kind().is_module_extension() =>
        {
            Err(wrong_kind("module-extension", p))
        }
        TheoremId::LauBlocks | TheoremId::LauSplitting | TheoremId::LauReduced if p.kind().character().is_none() => {
            Err(wrong_kind("theta-lau", p))
        }
        TheoremId::DirectBlocks => direct_blocks(an),
        TheoremId::DirectSplitting => direct_splitting(an),
        TheoremId::AlphaIso => alpha_iso(an),
        TheoremId::ExtensionBlocks => extension_blocks(an),
        TheoremId::ExtensionCohomology => extension_cohomology(an),
        TheoremId::ExtensionEmbedding => extension_embedding(an),
        TheoremId::LauBlocks => lau_blocks(an),
        TheoremId::LauSplitting => lau_splitting(an),
        TheoremId::LauReduced => lau_reduced(an),
        _ => Err(Error::InvalidArgument(format!("{id} is not a special-case result"))),
    }
}

fn check_all<T: Field>(an: &Analysis<'_, T>, hs: &[Hypothesis]) -> Result<Vec<Check>> {
    hs.iter().map(|h| h.check(an)).collect()
}

fn either(name: &str, a: Check, b: Check) -> Check {
    if a.holds || b.holds {
        Check::pass(name)
    } else {
        Check::fail(
            name,
            format!("{}; {}", a.witness.unwrap_or_default(), b.witness.unwrap_or_default()),
        )
    }
}

fn direct_blocks<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let kill_delta2 = either(
        "ann-u-u or a-squared",
        Hypothesis::AnnUUTrivial.check(an)?,
        Hypothesis::ASquared.check(an)?,
    )
    .holds;
    let kill_tau1 = either(
        "ann-a-a or u-squared",
        Hypothesis::AnnAATrivial.check(an)?,
        Hypothesis::USquared.check(an)?,
    )
    .holds;
    TheoremReport::gated(TheoremId::DirectBlocks, p.total().name(), Vec::new(), || {
        let a = p.part_a();
        let u = &p.part_u().algebra;
        let ann_aa = a.annihilator();
        let ann_uu = p.part_u().annihilator_in_module();
        let mut names = vec![
            "δ1 is a derivation of A",
            "τ2 is a derivation of U",
            "τ1(U) ⊆ ann_A A",
            "δ2(A) ⊆ ann_U U",
            "τ1(xy) = 0",
            "δ2(ab) = 0",
        ];
        if kill_delta2 {
            names.push("δ2 = 0 when ann_U U = 0 or A² = A");
        }
        if kill_tau1 {
            names.push("τ1 = 0 when ann_A A = 0 or U² = U");
        }
        let claims = block_claims(an, &names, |b| {
            let mut r = vec![
                derivations::is_derivation(a, an.regular_a(), &b.d1)?,
                derivations::is_derivation(u, an.regular_u(), &b.t2)?,
                rows_within(&b.t1, &ann_aa)?,
                rows_within(&b.d2, &ann_uu)?,
                tau1_kills_products(&b.t1, p),
                (0..a.dim()).all(|i| (0..a.dim()).all(|j| is_zero_vector(&b.d2.apply(a.basis_product(i, j))))),
            ];
            if kill_delta2 {
                r.push(b.d2.is_zero());
            }
            if kill_tau1 {
                r.push(b.t1.is_zero());
            }
            Ok(r)
        })?;
        Ok(Outcome {
            claims,
            ..Outcome::default()
        })
    })
}

fn direct_splitting<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let hypotheses = vec![
        either(
            "ann-u-u or a-squared",
            Hypothesis::AnnUUTrivial.check(an)?,
            Hypothesis::ASquared.check(an)?,
        ),
        either(
            "ann-a-a or u-squared",
            Hypothesis::AnnAATrivial.check(an)?,
            Hypothesis::USquared.check(an)?,
        ),
    ];
    TheoremReport::gated(TheoremId::DirectSplitting, p.total().name(), hypotheses, || {
        let claims = vec![
            dims_equal(
                "dim Z¹(A×U) = dim Z¹(A) + dim Z¹(U)",
                an.z1_total().dim(),
                an.z1_a().dim() + an.z1_u().dim(),
            ),
            dims_equal(
                "dim N¹(A×U) = dim N¹(A) + dim N¹(U)",
                an.n1_total().dim(),
                an.n1_a().dim() + an.n1_u().dim(),
            ),
        ];
        Ok(Outcome {
            claims,
            lhs_dim: Some(an.h1_total()?),
            rhs_dim: Some(an.h1_a()? + an.h1_u()?),
        })
    })
}

fn alpha_iso<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let ProductKind::Alpha { alpha } = p.kind() else {
        return Err(wrong_kind("alpha", p));
    };
    TheoremReport::gated(TheoremId::AlphaIso, p.total().name(), Vec::new(), || {
        let direct = products::direct_product(p.part_a(), &p.part_u().algebra);
        let iso = products::alpha_iso(alpha);
        let transported = products::transport(direct.total(), &iso)?;
        let claims = vec![Check::from_bool(
            "(a,x) ↦ (a, x - α(a)) carries A×U onto A⋉_α U",
            transported.mult() == p.total().mult(),
            || format!("transported constants differ from those of {}", p.total().name()),
        )];
        Ok(Outcome {
            claims,
            lhs_dim: Some(an.h1_total()?),
            rhs_dim: Some(Analysis::new(&direct).h1_total()?),
        })
    })
}

fn extension_blocks<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    TheoremReport::gated(TheoremId::ExtensionBlocks, p.total().name(), Vec::new(), || {
        let a = p.part_a();
        let act = p.action();
        let (n, m) = (p.n(), p.m());
        let names = [
            "δ1 is a derivation of A",
            "δ2 is a derivation A → U",
            "τ2(ax) = aτ2(x) + δ1(a)x",
            "τ2(xa) = τ2(x)a + xδ1(a)",
            "τ1 is a bimodule map U → A",
            "xτ1(y) + τ1(x)y = 0",
            "(a,x) ↦ (0, δ2(a)) is a derivation",
            "(a,x) ↦ (δ1(a) + τ1(x), τ2(x)) is a derivation",
        ];
        let claims = block_claims(an, &names, |b| {
            let mut left_ok = true;
            let mut right_ok = true;
            for i in 0..n {
                let e = unit_vector(n, i);
                for q in 0..m {
                    let x = unit_vector(m, q);
                    let mut rhs = act.act_left(&e, b.t2.row(q));
                    axpy(&mut rhs, &T::one(), &act.act_left(b.d1.row(i), &x));
                    left_ok &= b.t2.apply(act.basis_left(i, q)) == rhs;
                    let mut rhs = act.act_right(b.t2.row(q), &e);
                    axpy(&mut rhs, &T::one(), &act.act_right(&x, b.d1.row(i)));
                    right_ok &= b.t2.apply(act.basis_right(q, i)) == rhs;
                }
            }
            let d2 = SingleBlock::Delta2.embed(&b.d2, n, m)?;
            let d1 = b.full.sub(&d2)?;
            Ok(vec![
                derivations::is_derivation(a, an.regular_a(), &b.d1)?,
                derivations::is_derivation(a, act, &b.d2)?,
                left_ok,
                right_ok,
                is_module_hom(act, an.regular_a(), &b.t1)?,
                tau1_anticommutes(&b.t1, p),
                derivations::is_derivation(p.total(), an.regular_total(), &d2)?,
                derivations::is_derivation(p.total(), an.regular_total(), &d1)?,
            ])
        })?;
        Ok(Outcome {
            claims,
            ..Outcome::default()
        })
    })
}

fn extension_cohomology<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let hypotheses = check_all(an, &[Hypothesis::H1AVanishes, Hypothesis::NoAnticommutingHom])?;
    TheoremReport::gated(TheoremId::ExtensionCohomology, p.total().name(), hypotheses, || {
        let c_in_hom = an.c_u().is_subspace_of(an.hom_u())?;
        let claims = vec![
            Check::from_bool("C_A(U) ⊆ Hom_A(U)", c_in_hom, || "some r_a with a central is not a bimodule map".into()),
            Hypothesis::Tau1Vanishes.check(an)?,
        ];
        let rhs = if c_in_hom {
            Some(an.h1_au()? + an.hom_u().dim() - an.c_u().dim())
        } else {
            None
        };
        Ok(Outcome {
            claims,
            lhs_dim: Some(an.h1_total()?),
            rhs_dim: rhs,
        })
    })
}

/// `δ ↦ D_δ` with `D_δ(a,x) = (0, δ(a))`, as a matrix from `L(A,U)` to `L(T,T)`.
fn embedding_matrix<T: Field>(n: usize, m: usize) -> Matrix<T> {
    let big = n + m;
    let mut e = Matrix::zeros(n * m, big * big);
    for i in 0..n {
        for q in 0..m {
            e.set(i * m + q, i * big + n + q, T::one());
        }
    }
    e
}

fn extension_embedding<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    TheoremReport::gated(TheoremId::ExtensionEmbedding, p.total().name(), Vec::new(), || {
        let embedded = an.z1_au().space().map_through(&embedding_matrix(p.n(), p.m()))?;
        let n1 = an.n1_total().space();
        let image = embedded.sum(n1)?;
        let (h1_au, h1_t) = (an.h1_au()?, an.h1_total()?);
        let claims = vec![
            Check::from_bool(
                "δ ↦ (0, δ) maps Z¹(A,U) into Z¹(T(A,U))",
                embedded.is_subspace_of(an.z1_total().space())?,
                || "an embedded derivation fails the Leibniz rule".into(),
            ),
            Check::from_bool("dim H¹(A,U) ≤ dim H¹(T(A,U))", h1_au <= h1_t, || {
                format!("{h1_au} > {h1_t}")
            }),
        ];
        Ok(Outcome {
            claims,
            lhs_dim: Some(image.dim() - n1.dim()),
            rhs_dim: Some(h1_au),
        })
    })
}

fn lau_blocks<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let theta: Character<T> = p.kind().character().expect("kind checked by the caller");
    TheoremReport::gated(TheoremId::LauBlocks, p.total().name(), Vec::new(), || {
        let a = p.part_a();
        let u = &p.part_u().algebra;
        let act = p.action();
        let (n, m) = (p.n(), p.m());
        let names = [
            "δ1 is a derivation of A",
            "δ2 is a derivation A → U",
            "θ(δ1(a))x + δ2(a)x = 0",
            "θ(δ1(a))x + xδ2(a) = 0",
            "τ1 is a bimodule map with τ1(xy) = 0",
            "τ2(xy) = θ(τ1(y))x + θ(τ1(x))y + xτ2(y) + τ2(x)y",
        ];
        let claims = block_claims(an, &names, |b| {
            let mut left_ok = true;
            let mut right_ok = true;
            for i in 0..n {
                let t = dot(&theta.values, b.d1.row(i));
                for q in 0..m {
                    let x = unit_vector(m, q);
                    let mut l = u.mul(b.d2.row(i), &x);
                    axpy(&mut l, &t, &x);
                    left_ok &= is_zero_vector(&l);
                    let mut r = u.mul(&x, b.d2.row(i));
                    axpy(&mut r, &t, &x);
                    right_ok &= is_zero_vector(&r);
                }
            }
            let mut product_ok = true;
            for s in 0..m {
                for r in 0..m {
                    let (x, y) = (unit_vector(m, s), unit_vector(m, r));
                    let mut rhs = u.mul(&x, b.t2.row(r));
                    axpy(&mut rhs, &T::one(), &u.mul(b.t2.row(s), &y));
                    axpy(&mut rhs, &dot(&theta.values, b.t1.row(r)), &x);
                    axpy(&mut rhs, &dot(&theta.values, b.t1.row(s)), &y);
                    product_ok &= b.t2.apply(u.basis_product(s, r)) == rhs;
                }
            }
            Ok(vec![
                derivations::is_derivation(a, an.regular_a(), &b.d1)?,
                derivations::is_derivation(a, act, &b.d2)?,
                left_ok,
                right_ok,
                is_module_hom(act, an.regular_a(), &b.t1)? && tau1_kills_products(&b.t1, p),
                product_ok,
            ])
        })?;
        Ok(Outcome {
            claims,
            ..Outcome::default()
        })
    })
}

fn lau_splitting<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let hypotheses = check_all(
        an,
        &[
            Hypothesis::Tau1Vanishes,
            Hypothesis::H1AUVanishes,
            Hypothesis::DerivationsIntoKerTheta,
        ],
    )?;
    TheoremReport::gated(TheoremId::LauSplitting, p.total().name(), hypotheses, || {
        Ok(Outcome {
            claims: Vec::new(),
            lhs_dim: Some(an.h1_total()?),
            rhs_dim: Some(an.h1_a()? + an.h1_u()?),
        })
    })
}

fn lau_reduced<T: Field>(an: &Analysis<'_, T>) -> Result<TheoremReport> {
    let p = an.product();
    let hypotheses = check_all(
        an,
        &[Hypothesis::Tau1Vanishes, Hypothesis::H1AVanishes, Hypothesis::H1AUVanishes],
    )?;
    TheoremReport::gated(TheoremId::LauReduced, p.total().name(), hypotheses, || {
        Ok(Outcome {
            claims: Vec::new(),
            lhs_dim: Some(an.h1_total()?),
            rhs_dim: Some(an.h1_u()?),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BimoduleAction;
    use crate::library;
    use crate::theorems::Verdict;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(x: i64) -> Q {
        Q::from_int(x)
    }

    fn assert_verified(r: &TheoremReport) {
        assert_eq!(r.verdict, Verdict::Verified, "{r}");
    }

    #[test]
    fn direct_blocks_on_matrix_algebras() {
        let m2 = library::matrix::<Q>(2);
        let p = products::direct_product(&m2, &m2);
        let r = verify_special_case(TheoremId::DirectBlocks, &p).unwrap();
        assert_verified(&r);
        assert_eq!(r.claims.len(), 8);
    }

    #[test]
    fn direct_blocks_with_nonzero_tau1() {
        // A = U = null(1): D(a,x) = (x, 0) is a derivation with τ1 ≠ 0.
        let z = library::null::<Q>(1);
        let p = products::direct_product(&z, &z);
        assert_verified(&verify_special_case(TheoremId::DirectBlocks, &p).unwrap());
        assert!(!crate::theorems::tau1_vanishes(&p));
    }

    #[test]
    fn extension_cohomology_on_scalars() {
        let qa = library::scalar::<Q>();
        let p = products::module_extension(&qa, &BimoduleAction::regular(&qa)).unwrap();
        let r = verify_special_case(TheoremId::ExtensionCohomology, &p).unwrap();
        assert_verified(&r);
        assert_eq!((r.lhs_dim, r.rhs_dim), (Some(1), Some(1)));
    }

    #[test]
    fn lau_reduced_on_dual_numbers() {
        let p = products::theta_lau(&library::scalar::<Q>(), &library::null(1), &Character::new(vec![q(1)])).unwrap();
        let r = verify_special_case(TheoremId::LauReduced, &p).unwrap();
        assert_verified(&r);
        assert_eq!((r.lhs_dim, r.rhs_dim), (Some(1), Some(1)));
        assert_verified(&verify_special_case(TheoremId::LauBlocks, &p).unwrap());
        assert_verified(&verify_special_case(TheoremId::LauSplitting, &p).unwrap());
    }

    #[test]
    fn alpha_products() {
        let m2 = library::matrix::<Q>(2);
        let p = products::alpha_product(&m2, &m2, &Matrix::identity(4)).unwrap();
        assert_verified(&verify_special_case(TheoremId::AlphaIso, &p).unwrap());
    }

    #[test]
    fn embedding_and_extension_blocks() {
        let t2 = library::upper_triangular::<Q>(2);
        let p = products::module_extension(&t2, &BimoduleAction::regular(&t2)).unwrap();
        assert_verified(&verify_special_case(TheoremId::ExtensionEmbedding, &p).unwrap());
        assert_verified(&verify_special_case(TheoremId::ExtensionBlocks, &p).unwrap());
        let (p, _) = products::fixture_nonzero_tau1(&library::scalar::<Q>()).unwrap();
        assert_verified(&verify_special_case(TheoremId::ExtensionBlocks, &p).unwrap());
    }

    #[test]
    fn wrong_kinds_are_rejected() {
        let p = products::unitization(&library::null::<Q>(1));
        for id in [TheoremId::DirectBlocks, TheoremId::AlphaIso, TheoremId::ExtensionCohomology] {
            assert!(matches!(
                verify_special_case(id, &p),
                Err(Error::WrongConstructionKind { .. })
            ));
        }
        assert!(matches!(
            verify_special_case(TheoremId::QuotientE, &p),
            Err(Error::InvalidArgument(_))
        ));
    }
}
