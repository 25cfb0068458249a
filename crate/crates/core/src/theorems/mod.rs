//! Executable versions of the structure and cohomology results for
//! semidirect products.
//!
//! Every verifier is hypothesis-gated: hypotheses are evaluated on the
//! instance, and the claim is only tested when all of them hold. A failed
//! claim on an instance meeting every hypothesis is reported as
//! [`Verdict::Mismatch`].

mod analysis;
pub mod blocks;
pub mod cohomology;
pub mod hypotheses;
pub mod special;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::products::{ProductKind, SemidirectAlgebra};
use crate::scalar::Field;

pub use analysis::Analysis;
pub use blocks::{
    condition_system, single_block_check, inner_characterization, is_derivation_via_blocks, split_blocks,
    tau1_vanishes, block_conditions_equivalence, BlockDecomposition, Condition, ConditionLabel, ConditionReport,
    SingleBlock,
};
pub use cohomology::{build_e, build_f, build_k, verify_theorem, verify_theorem_with};
pub use hypotheses::{hypothesis_check, Hypothesis};
pub use special::{verify_special_case, verify_special_case_with};

/// Runs the verifier for any theorem id.
pub fn verify<T: Field>(id: TheoremId, p: &SemidirectAlgebra<T>) -> Result<TheoremReport> {
    verify_with(id, &Analysis::new(p))
}

pub fn verify_with<T: Field>(id: TheoremId, an: &Analysis<'_, T>) -> Result<TheoremReport> {
    if id == TheoremId::Structure {
        blocks::block_conditions_with(an)
    } else if id.is_cohomology_quotient() {
        verify_theorem_with(id, an)
    } else {
        verify_special_case_with(id, an)
    }
}

/// The results that can be verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Block decomposition of derivations on `A ⋉ U`.
    Structure,
    /// `H¹(A⋉U) ≅ Z¹(A) × [Hom_A(U) ∩ Z¹(U)] / E`.
    QuotientE,
    /// `H¹(A⋉U) ≅ Z¹(A,U) × [Hom_A(U) ∩ Z¹(U)] / F`.
    QuotientF,
    /// `H¹(A⋉U) ≅ Z¹(A) × Z¹(A,U) / K`.
    QuotientK,
    /// `H¹(A⋉U) ≅ [Hom_A(U) ∩ Z¹(U)] / (C_A(U) + I(U))`.
    QuotientCI,
    /// Block conditions for derivations on a direct product.
    DirectBlocks,
    /// `H¹(A×U) ≅ H¹(A) × H¹(U)`.
    DirectSplitting,
    /// `A ⋉_α U ≅ A × U`.
    AlphaIso,
    /// Block conditions for derivations on a module extension.
    ExtensionBlocks,
    /// `H¹(T(A,U)) ≅ H¹(A,U) × Hom_A(U)/C_A(U)`.
    ExtensionCohomology,
    /// Block conditions for derivations on a θ-Lau product.
    LauBlocks,
    /// `H¹(A⋉_θU) ≅ H¹(A) × H¹(U)`.
    LauSplitting,
    /// `H¹(A⋉_θU) ≅ H¹(U)`.
    LauReduced,
    /// `H¹(A,U)` embeds in `H¹(T(A,U))`.
    ExtensionEmbedding,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Structure,
        TheoremId::QuotientE,
        TheoremId::QuotientF,
        TheoremId::QuotientK,
        TheoremId::QuotientCI,
        TheoremId::DirectBlocks,
        TheoremId::DirectSplitting,
        TheoremId::AlphaIso,
        TheoremId::ExtensionBlocks,
        TheoremId::ExtensionCohomology,
        TheoremId::LauBlocks,
        TheoremId::LauSplitting,
        TheoremId::LauReduced,
        TheoremId::ExtensionEmbedding,
    ];

    /// The identifier used in job files and reports.
    pub fn key(self) -> &'static str {
        match self {
            TheoremId::Structure => "3.1",
            TheoremId::QuotientE => "4.1",
            TheoremId::QuotientF => "4.2",
            TheoremId::QuotientK => "4.3",
            TheoremId::QuotientCI => "4.4",
            TheoremId::DirectBlocks => "5.1",
            TheoremId::DirectSplitting => "5.3",
            TheoremId::AlphaIso => "5.4",
            TheoremId::ExtensionBlocks => "ttd",
            TheoremId::ExtensionCohomology => "cte",
            TheoremId::LauBlocks => "lau-der",
            TheoremId::LauSplitting => "a1",
            TheoremId::LauReduced => "prop10",
            TheoremId::ExtensionEmbedding => "embed",
        }
    }

    /// Whether the verifier accepts products built as `kind`.
    pub fn applies_to<T: Field>(self, kind: &ProductKind<T>) -> bool {
        match self {
            TheoremId::Structure
            | TheoremId::QuotientE
            | TheoremId::QuotientF
            | TheoremId::QuotientK
            | TheoremId::QuotientCI => true,
            TheoremId::DirectBlocks | TheoremId::DirectSplitting => *kind == ProductKind::Direct,
            TheoremId::AlphaIso => matches!(kind, ProductKind::Alpha { .. }),
            TheoremId::ExtensionBlocks | TheoremId::ExtensionCohomology | TheoremId::ExtensionEmbedding => {
                kind.is_module_extension()
            }
            TheoremId::LauBlocks | TheoremId::LauSplitting | TheoremId::LauReduced => kind.character().is_some(),
        }
    }

    pub fn is_cohomology_quotient(self) -> bool {
        matches!(
            self,
            TheoremId::QuotientE | TheoremId::QuotientF | TheoremId::QuotientK | TheoremId::QuotientCI
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.key() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Verified,
    HypothesesNotMet,
    Mismatch,
}

impl Verdict {
    pub fn key(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesesNotMet => "hypotheses-not-met",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One evaluated hypothesis or claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    /// A human-readable counterexample when `holds` is false.
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            holds: false,
            witness: Some(witness.into()),
        }
    }

    /// `pass` when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }

    pub fn from_bool(name: impl Into<String>, holds: bool, witness: impl FnOnce() -> String) -> Self {
        if holds {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "FAILS" };
        write!(f, "{}: {mark}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub hypotheses: Vec<Check>,
    /// Claims tested; empty when a hypothesis fails.
    pub claims: Vec<Check>,
    pub lhs_dim: Option<usize>,
    pub rhs_dim: Option<usize>,
    pub verdict: Verdict,
}

/// What a verifier computes once its hypotheses hold.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub claims: Vec<Check>,
    pub lhs_dim: Option<usize>,
    pub rhs_dim: Option<usize>,
}

impl TheoremReport {
    /// Evaluates `body` only if every hypothesis holds. The verdict is
    /// `Verified` when every claim holds and the two dimensions (if any)
    /// agree, `Mismatch` otherwise.
    pub fn gated<F>(theorem: TheoremId, instance: impl Into<String>, hypotheses: Vec<Check>, body: F) -> Result<Self>
    where
        F: FnOnce() -> Result<Outcome>,
    {
        let instance = instance.into();
        if hypotheses.iter().any(|h| !h.holds) {
            return Ok(Self {
                theorem,
                instance,
                hypotheses,
                claims: Vec::new(),
                lhs_dim: None,
                rhs_dim: None,
                verdict: Verdict::HypothesesNotMet,
            });
        }
        let outcome = body()?;
        let dims_agree = match (outcome.lhs_dim, outcome.rhs_dim) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        };
        let verdict = if dims_agree && outcome.claims.iter().all(|c| c.holds) {
            Verdict::Verified
        } else {
            Verdict::Mismatch
        };
        Ok(Self {
            theorem,
            instance,
            hypotheses,
            claims: outcome.claims,
            lhs_dim: outcome.lhs_dim,
            rhs_dim: outcome.rhs_dim,
            verdict,
        })
    }

    pub fn failed_hypotheses(&self) -> impl Iterator<Item = &Check> + '_ {
        self.hypotheses.iter().filter(|h| !h.holds)
    }

    pub fn failed_claims(&self) -> impl Iterator<Item = &Check> + '_ {
        self.claims.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}: {}", self.theorem, self.instance, self.verdict)?;
        if let (Some(l), Some(r)) = (self.lhs_dim, self.rhs_dim) {
            write!(f, " (lhs {l}, rhs {r})")?;
        }
        for h in &self.hypotheses {
            write!(f, "\n  hypothesis {h}")?;
        }
        for c in &self.claims {
            write!(f, "\n  claim {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.key().parse::<TheoremId>().unwrap(), id);
        }
        assert!("4.5".parse::<TheoremId>().is_err());
    }

    #[test]
    fn gating() {
        let r = TheoremReport::gated(TheoremId::QuotientE, "x", vec![Check::fail("h", "w")], || {
            panic!("body must not run")
        })
        .unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesNotMet);

        let r = TheoremReport::gated(TheoremId::QuotientE, "x", vec![Check::pass("h")], || {
            Ok(Outcome {
                claims: vec![],
                lhs_dim: Some(1),
                rhs_dim: Some(2),
            })
        })
        .unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);

        let r = TheoremReport::gated(TheoremId::QuotientE, "x", vec![], || {
            Ok(Outcome {
                claims: vec![Check::pass("c")],
                lhs_dim: Some(2),
                rhs_dim: Some(2),
            })
        })
        .unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
    }
}
