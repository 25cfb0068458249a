//! Checkable hypotheses of the cohomology results.

use std::fmt;
use std::str::FromStr;

use crate::algebra::BimoduleAction;
use crate::derivations::LinearMapSpace;
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, Subspace};
use crate::products::SemidirectAlgebra;
use crate::scalar::Field;

use super::analysis::Analysis;
use super::blocks::tau1_obstruction;
use super::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// Every derivation of `A ⋉ U` has `τ1 = 0`.
    Tau1Vanishes,
    /// `δ(A) ⊆ ann_A U` for every `δ ∈ Z¹(A)`.
    DerivationsIntoAnnA,
    /// `δ(A) ⊆ ann_U U` for every `δ ∈ Z¹(A, U)`.
    DerivationsIntoAnnU,
    /// `H¹(A) = 0`.
    H1AVanishes,
    /// `H¹(A, U) = 0`.
    H1AUVanishes,
    /// `H¹(U) = 0`.
    H1UVanishes,
    /// `Hom_A(U) ∩ Z¹(U) ⊆ R_A(U) + N¹(U)`.
    HomDerivationsReduce,
    /// `span(A²) = A`.
    ASquared,
    /// `span(U²) = U`.
    USquared,
    /// `ann_A A = 0`.
    AnnAATrivial,
    /// `ann_U U = 0`.
    AnnUUTrivial,
    /// The only bimodule map `T: U -> A` with `T(x)y + xT(y) = 0` is zero.
    NoAnticommutingHom,
    /// `δ(A) ⊆ ker θ` for every `δ ∈ Z¹(A)` (θ-Lau products only).
    DerivationsIntoKerTheta,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 13] = [
        Hypothesis::Tau1Vanishes,
        Hypothesis::DerivationsIntoAnnA,
        Hypothesis::DerivationsIntoAnnU,
        Hypothesis::H1AVanishes,
        Hypothesis::H1AUVanishes,
        Hypothesis::H1UVanishes,
        Hypothesis::HomDerivationsReduce,
        Hypothesis::ASquared,
        Hypothesis::USquared,
        Hypothesis::AnnAATrivial,
        Hypothesis::AnnUUTrivial,
        Hypothesis::NoAnticommutingHom,
        Hypothesis::DerivationsIntoKerTheta,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Hypothesis::Tau1Vanishes => "tau1",
            Hypothesis::DerivationsIntoAnnA => "delta-ann-a",
            Hypothesis::DerivationsIntoAnnU => "delta-ann-u",
            Hypothesis::H1AVanishes => "h1-a",
            Hypothesis::H1AUVanishes => "h1-au",
            Hypothesis::H1UVanishes => "h1-u",
            Hypothesis::HomDerivationsReduce => "hom-z1-u-in-r-n1",
            Hypothesis::ASquared => "a-squared",
            Hypothesis::USquared => "u-squared",
            Hypothesis::AnnAATrivial => "ann-a-a",
            Hypothesis::AnnUUTrivial => "ann-u-u",
            Hypothesis::NoAnticommutingHom => "cte-t",
            Hypothesis::DerivationsIntoKerTheta => "delta-ker-theta",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Hypothesis::Tau1Vanishes => "every derivation of A⋉U has τ1 = 0",
            Hypothesis::DerivationsIntoAnnA => "δ(A) ⊆ ann_A U for all δ in Z¹(A)",
            Hypothesis::DerivationsIntoAnnU => "δ(A) ⊆ ann_U U for all δ in Z¹(A,U)",
            Hypothesis::H1AVanishes => "H¹(A) = 0",
            Hypothesis::H1AUVanishes => "H¹(A,U) = 0",
            Hypothesis::H1UVanishes => "H¹(U) = 0",
            Hypothesis::HomDerivationsReduce => "Hom_A(U) ∩ Z¹(U) ⊆ R_A(U) + N¹(U)",
            Hypothesis::ASquared => "A² spans A",
            Hypothesis::USquared => "U² spans U",
            Hypothesis::AnnAATrivial => "ann_A A = 0",
            Hypothesis::AnnUUTrivial => "ann_U U = 0",
            Hypothesis::NoAnticommutingHom => "the only bimodule map T: U → A with T(x)y + xT(y) = 0 is 0",
            Hypothesis::DerivationsIntoKerTheta => "δ(A) ⊆ ker θ for all δ in Z¹(A)",
        }
    }

    /// Evaluates the hypothesis, with a counterexample when it fails.
    pub fn check<T: Field>(self, an: &Analysis<'_, T>) -> Result<Check> {
        let p = an.product();
        let name = self.key();
        let check = match self {
            Hypothesis::Tau1Vanishes => Check::from_witness(
                name,
                tau1_obstruction(an).map(|d| format!("derivation {d} has a nonzero τ1 block")),
            ),
            Hypothesis::DerivationsIntoAnnA => {
                images_within(name, an.z1_a(), &p.action().annihilator_in_algebra(), "ann_A U")?
            }
            Hypothesis::DerivationsIntoAnnU => {
                images_within(name, an.z1_au(), &p.part_u().annihilator_in_module(), "ann_U U")?
            }
            Hypothesis::H1AVanishes => vanishing(name, an.h1_a()?, "H¹(A)"),
            Hypothesis::H1AUVanishes => vanishing(name, an.h1_au()?, "H¹(A,U)"),
            Hypothesis::H1UVanishes => vanishing(name, an.h1_u()?, "H¹(U)"),
            Hypothesis::HomDerivationsReduce => {
                let target = an.r_u().sum(an.n1_u())?;
                let outside = an
                    .hom_z1_u()
                    .basis_maps()
                    .into_iter()
                    .find(|t| !target.contains(t).unwrap_or(false));
                Check::from_witness(
                    name,
                    outside.map(|t| format!("{t} lies in Hom_A(U) ∩ Z¹(U) but not in R_A(U) + N¹(U)")),
                )
            }
            Hypothesis::ASquared => spans(name, p.part_a().square_span(), "A²"),
            Hypothesis::USquared => spans(name, p.part_u().algebra.square_span(), "U²"),
            Hypothesis::AnnAATrivial => trivial(name, p.part_a().annihilator(), "ann_A A"),
            Hypothesis::AnnUUTrivial => trivial(name, p.part_u().annihilator_in_module(), "ann_U U"),
            Hypothesis::NoAnticommutingHom => {
                let space = anticommuting_homs(p);
                Check::from_witness(
                    name,
                    space
                        .basis_maps()
                        .into_iter()
                        .next()
                        .map(|t| format!("T = {t} is a nonzero solution")),
                )
            }
            Hypothesis::DerivationsIntoKerTheta => {
                let theta = p.kind().character().ok_or_else(|| Error::WrongConstructionKind {
                    expected: "theta-lau".into(),
                    found: p.kind().label().into(),
                })?;
                images_within(name, an.z1_a(), &theta.kernel(), "ker θ")?
            }
        };
        Ok(check)
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.key() == s)
            .ok_or_else(|| Error::UnknownHypothesis(s.to_string()))
    }
}

/// Evaluates the hypothesis named `name` on `p`.
pub fn hypothesis_check<T: Field>(name: &str, p: &SemidirectAlgebra<T>) -> Result<Check> {
    let h: Hypothesis = name.parse()?;
    h.check(&Analysis::new(p))
}

/// Checks that every map in `maps` has its image inside `target`; the
/// first offending basis map is the witness.
fn images_within<T: Field>(name: &str, maps: &LinearMapSpace<T>, target: &Subspace<T>, what: &str) -> Result<Check> {
    for d in maps.basis_maps() {
        for row in d.rows() {
            if !target.contains(row)? {
                return Ok(Check::fail(name, format!("derivation {d} has image outside {what}")));
            }
        }
    }
    Ok(Check::pass(name))
}

fn vanishing(name: &str, dim: usize, what: &str) -> Check {
    Check::from_bool(name, dim == 0, || format!("dim {what} = {dim}"))
}

fn spans<T: Field>(name: &str, s: Subspace<T>, what: &str) -> Check {
    Check::from_bool(name, s.is_full(), || {
        format!("{what} has dimension {} of {}", s.dim(), s.ambient_dim())
    })
}

fn trivial<T: Field>(name: &str, s: Subspace<T>, what: &str) -> Check {
    Check::from_bool(name, s.is_zero(), || format!("{what} = {s}"))
}

/// Bimodule maps `T: U -> A` with `T(x)y + xT(y) = 0` for all `x, y`.
pub(crate) fn anticommuting_homs<T: Field>(p: &SemidirectAlgebra<T>) -> LinearMapSpace<T> {
    let (n, m) = (p.n(), p.m());
    let act = p.action();
    let homs = crate::derivations::hom_space(act, &BimoduleAction::regular(p.part_a())).expect("same algebra");
    // T(u_a) u_b + u_a T(u_b), coordinate q: Σ_l T[a][l] L[l][b][q] + Σ_l T[b][l] R[a][l][q].
    let var = |r: usize, l: usize| r * n + l;
    let mut sys: LinearSystem<T, ()> = LinearSystem::new(m * n);
    for a in 0..m {
        for b in 0..m {
            for q in 0..m {
                let mut row = vec![T::zero(); m * n];
                for l in 0..n {
                    row[var(a, l)] += act.basis_left(l, b)[q].clone();
                    row[var(b, l)] += act.basis_right(a, l)[q].clone();
                }
                sys.push((), row);
            }
        }
    }
    let anti = LinearMapSpace::new(m, n, sys.into_solution_space()).expect("sized for U -> A");
    homs.intersect(&anti).expect("both are maps U -> A")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ModuleAlgebra;
    use crate::library;
    use crate::products;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn keys_round_trip() {
        for h in Hypothesis::ALL {
            assert_eq!(h.key().parse::<Hypothesis>().unwrap(), h);
        }
        assert!(matches!(
            hypothesis_check("no-such", &products::unitization(&library::null::<Q>(1))),
            Err(Error::UnknownHypothesis(_))
        ));
    }

    #[test]
    fn trivial_actions_satisfy_ann_a() {
        let p = products::direct_product(&library::dual_numbers::<Q>(), &library::matrix(2));
        assert!(hypothesis_check("delta-ann-a", &p).unwrap().holds);
    }

    #[test]
    fn module_extension_satisfies_ann_u() {
        let a = library::matrix::<Q>(2);
        let p = products::module_extension(&a, &BimoduleAction::regular(&a)).unwrap();
        assert!(hypothesis_check("delta-ann-u", &p).unwrap().holds);
    }

    #[test]
    fn regular_m2_fails_ann_a() {
        let m2 = library::matrix::<Q>(2);
        let u = ModuleAlgebra::new(m2.clone(), BimoduleAction::regular(&m2)).unwrap();
        let p = products::semidirect(&m2, &u).unwrap();
        let c = hypothesis_check("delta-ann-a", &p).unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn anticommuting_homs_for_scalar_extension() {
        let qa = library::scalar::<Q>();
        let p = products::module_extension(&qa, &BimoduleAction::regular(&qa)).unwrap();
        assert_eq!(anticommuting_homs(&p).dim(), 0);
        let (p, _) = products::fixture_nonzero_tau1(&qa).unwrap();
        assert!(anticommuting_homs(&p).dim() > 0);
        assert!(!hypothesis_check("cte-t", &p).unwrap().holds);
    }

    #[test]
    fn ker_theta_requires_theta_lau() {
        let p = products::direct_product(&library::scalar::<Q>(), &library::scalar());
        assert!(matches!(
            hypothesis_check("delta-ker-theta", &p),
            Err(Error::WrongConstructionKind { .. })
        ));
    }
}
