//! The seeded invariant battery.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivations::{self, inner_map, r_map};
use crate::error::{Error, Result};
use crate::families::{random_matrix, CaseSpec};
use crate::fixtures;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{axpy, unit_vector, Field};
use crate::theorems::{self, Analysis, Check, TheoremId, TheoremReport, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    pub max_dim: usize,
    pub cases: usize,
    /// Instances evaluated while shrinking one failure.
    pub shrink_budget: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            max_dim: 3,
            cases: 200,
            shrink_budget: 64,
        }
    }
}

/// Verdict counts for one theorem.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub verified: usize,
    pub hypotheses_not_met: usize,
    pub mismatch: usize,
}

impl VerdictCounts {
    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Verified => self.verified += 1,
            Verdict::HypothesesNotMet => self.hypotheses_not_met += 1,
            Verdict::Mismatch => self.mismatch += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Generated case index, or `None` for a named fixture.
    pub case: Option<usize>,
    pub instance: String,
    pub check: String,
    pub witness: Option<String>,
    /// The smallest recipe found that still fails the same check.
    pub shrunk: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestSummary {
    pub config: SelftestConfig,
    pub cases_passed: usize,
    pub fixtures_run: usize,
    pub checks_run: usize,
    pub checks_failed: usize,
    pub verdicts: BTreeMap<TheoremId, VerdictCounts>,
    pub failures: Vec<Failure>,
}

impl SelftestSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn mismatches(&self) -> usize {
        self.verdicts.values().map(|c| c.mismatch).sum()
    }
}

impl fmt::Display for SelftestSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "selftest seed={} max-dim={} cases={}", c.seed, c.max_dim, c.cases)?;
        writeln!(f, "cases: {} passed, {} failed", self.cases_passed, c.cases - self.cases_passed)?;
        writeln!(f, "fixtures: {}", self.fixtures_run)?;
        writeln!(
            f,
            "checks: {} passed, {} failed",
            self.checks_run - self.checks_failed,
            self.checks_failed
        )?;
        writeln!(f, "verdicts:")?;
        for (id, v) in &self.verdicts {
            writeln!(
                f,
                "  {:<8} verified {:>4}  hypotheses-not-met {:>4}  MISMATCH {}",
                id.key(),
                v.verified,
                v.hypotheses_not_met,
                v.mismatch
            )?;
        }
        for fail in &self.failures {
            let at = fail.case.map_or_else(|| "fixture".to_string(), |i| format!("case {i}"));
            write!(f, "FAIL {at} {}: {}", fail.instance, fail.check)?;
            if let Some(w) = &fail.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
            if let Some(s) = &fail.shrunk {
                writeln!(f, "  shrunk to {s}")?;
            }
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Everything evaluated on one instance.
pub struct InstanceOutcome {
    pub checks: Vec<Check>,
    pub reports: Vec<TheoremReport>,
}

impl InstanceOutcome {
    fn failures(&self) -> impl Iterator<Item = (String, Option<String>)> + '_ {
        let checks = self.checks.iter().filter(|c| !c.holds).map(|c| (c.name.clone(), c.witness.clone()));
        let reports = self
            .reports
            .iter()
            .filter(|r| r.verdict == Verdict::Mismatch)
            .map(|r| (format!("{} MISMATCH", r.theorem), Some(r.to_string())));
        checks.chain(reports)
    }
}

fn attempt(name: &str, f: impl FnOnce() -> Result<bool>) -> Check {
    match f() {
        Ok(true) => Check::pass(name),
        Ok(false) => Check::fail(name, "violated"),
        Err(e) => Check::fail(name, format!("error: {e}")),
    }
}

/// Rank–nullity and the modular law on random matrices and subspaces.
pub fn linear_algebra_checks<T: Field>(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let (rows, cols) = (rng.gen_range(1..=4), rng.gen_range(1..=5));
    let m: Matrix<T> = random_matrix(rows, cols, rng);
    let rank = m.rank();
    let mut checks = vec![
        Check::from_bool("rank + nullity = columns", rank + m.kernel().dim() == cols, || {
            format!("{m}")
        }),
        Check::from_bool("image dimension = rank", m.image().dim() == rank && m.row_space().dim() == rank, || {
            format!("{m}")
        }),
    ];
    let d = rng.gen_range(1..=4);
    let random_span = |rng: &mut ChaCha8Rng| -> Subspace<T> {
        let k = rng.gen_range(0..=d);
        Subspace::span(d, random_matrix::<T>(k, d, rng).to_rows()).expect("rows sized for the ambient")
    };
    let u = random_span(rng);
    let v = random_span(rng);
    let extra = random_span(rng);
    checks.push(attempt("modular law (U+V)∩W = U+(V∩W) for U ⊆ W", || {
        let w = u.sum(&extra)?;
        Ok(u.sum(&v)?.intersect(&w)? == u.sum(&v.intersect(&w)?)?)
    }));
    checks.push(attempt("dim(U+V) + dim(U∩V) = dim U + dim V", || {
        Ok(u.sum(&v)?.dim() + u.intersect(&v)?.dim() == u.dim() + v.dim())
    }));
    checks
}

fn spans_module<T: Field>(vectors: Vec<Vec<T>>, m: usize) -> Result<bool> {
    Ok(Subspace::span(m, vectors)?.is_full())
}

/// The structural invariants of one product. `split` is a known
/// decomposition of `A` into two ideals, if any.
pub fn product_checks<T: Field>(an: &Analysis<'_, T>, split: Option<&(Subspace<T>, Subspace<T>)>) -> Vec<Check> {
    let p = an.product();
    let (n, m) = (p.n(), p.m());
    let a = p.part_a();
    let u = &p.part_u().algebra;
    let act = p.action();
    let mut checks = vec![
        Check::from_bool("A is a subalgebra and U an ideal", p.block_laws_hold(), || p.total().name().into()),
        Check::from_bool(
            "(A⋉U)/U reproduces A",
            p.quotient_by_ideal_block().mult() == a.mult(),
            || "structure constants differ".into(),
        ),
        attempt("N¹(A⋉U) ⊆ Z¹(A⋉U)", || an.n1_total().is_subspace_of(an.z1_total())),
        attempt("N¹(A) ⊆ Z¹(A)", || an.n1_a().is_subspace_of(an.z1_a())),
        attempt("N¹(A,U) ⊆ Z¹(A,U)", || an.n1_au().is_subspace_of(an.z1_au())),
        attempt("N¹(U) ⊆ Z¹(U)", || an.n1_u().is_subspace_of(an.z1_u())),
        attempt("R_A(U) ⊆ Z¹(U)", || an.r_u().is_subspace_of(an.z1_u())),
    ];

    let inner_a: Vec<Matrix<T>> = (0..n).map(|i| inner_map(&unit_vector(n, i), an.regular_a())).collect();
    let r: Vec<Matrix<T>> = (0..n).map(|i| r_map(&unit_vector(n, i), act)).collect();
    // r_a(bx) = b r_a(x) + id_a(b) x
    let mut r_identity = true;
    for (ia, ra) in inner_a.iter().zip(&r) {
        for b in 0..n {
            for x in 0..m {
                let lhs = ra.apply(act.basis_left(b, x));
                let mut rhs = act.act_left(&unit_vector(n, b), ra.row(x));
                axpy(&mut rhs, &T::one(), &act.act_left(ia.row(b), &unit_vector(m, x)));
                r_identity &= lhs == rhs;
            }
        }
    }
    checks.push(Check::from_bool("r_a(bx) = b r_a(x) + id_a(b) x", r_identity, String::new));

    // id_{U,x0}(ax) = a id_{U,x0}(x) + id_{A,x0}(a) x
    let inner_u: Vec<Matrix<T>> = (0..m).map(|q| inner_map(&unit_vector(m, q), an.regular_u())).collect();
    let inner_au: Vec<Matrix<T>> = (0..m).map(|q| inner_map(&unit_vector(m, q), act)).collect();
    let mut id_identity = true;
    for (iu, iau) in inner_u.iter().zip(&inner_au) {
        for i in 0..n {
            for x in 0..m {
                let lhs = iu.apply(act.basis_left(i, x));
                let mut rhs = act.act_left(&unit_vector(n, i), iu.row(x));
                axpy(&mut rhs, &T::one(), &u.mul(iau.row(i), &unit_vector(m, x)));
                id_identity &= lhs == rhs;
            }
        }
    }
    checks.push(Check::from_bool(
        "id_{U,x0}(ax) = a id_{U,x0}(x) + id_{A,x0}(a) x",
        id_identity,
        String::new,
    ));

    if act.annihilator_in_algebra().is_zero() {
        checks.push(attempt("ann_A U = 0 and r_a ∈ Hom_A(U) force id_a = 0", || {
            let rows = Matrix::from_rows(m * m, r.iter().map(|x| x.data().to_vec()).collect())?;
            let hom_params = Subspace::preimage(&rows, an.hom_u().space())?;
            let forced = hom_params.basis_vectors().all(|v| inner_map(v, an.regular_a()).is_zero());
            Ok(forced)
        }));
    }
    if p.part_u().annihilator_in_module().is_zero() {
        checks.push(attempt("ann_U U = 0 and id_{U,x0} ∈ Hom_A(U) force id_{A,x0} = 0", || {
            let rows = Matrix::from_rows(m * m, inner_u.iter().map(|x| x.data().to_vec()).collect())?;
            let hom_params = Subspace::preimage(&rows, an.hom_u().space())?;
            let forced = hom_params.basis_vectors().all(|v| inner_map(v, act).is_zero());
            Ok(forced)
        }));
    }

    checks.push(attempt("C_A(U) ⊆ Hom_A(U) ∩ R_A(U)", || {
        an.c_u().is_subspace_of(&an.hom_u().intersect(an.r_u())?)
    }));
    checks.push(attempt("I(U) ⊆ Hom_A(U) ∩ N¹(U)", || {
        an.i_u().is_subspace_of(&an.hom_u().intersect(an.n1_u())?)
    }));
    checks.push(attempt("C+I ⊆ Hom∩(R+N¹) ⊆ Hom∩Z¹", || {
        let middle = an.hom_u().intersect(&an.r_u().sum(an.n1_u())?)?;
        Ok(an.c_u().sum(an.i_u())?.is_subspace_of(&middle)? && middle.is_subspace_of(an.hom_z1_u())?)
    }));
    if act.is_symmetric() {
        checks.push(attempt("commutative bimodule: N¹(U) = I(U)", || {
            Ok(an.n1_u().space() == an.i_u().space())
        }));
    }
    if a.is_commutative() {
        checks.push(attempt("commutative A: R_A(U) = C_A(U)", || Ok(an.r_u().space() == an.c_u().space())));
    }

    // I₂U = UI₁ = 0 and AU or UA spanning U force U² = 0.
    let mut splits = vec![
        (Subspace::full(n), Subspace::zero(n)),
        (Subspace::zero(n), Subspace::full(n)),
    ];
    splits.extend(split.cloned());
    checks.push(attempt("ideal splitting forces U² = 0", || {
        let au = (0..n).flat_map(|i| (0..m).map(move |x| (i, x)));
        let spans = spans_module(au.clone().map(|(i, x)| act.basis_left(i, x).to_vec()).collect(), m)?
            || spans_module(au.map(|(i, x)| act.basis_right(x, i).to_vec()).collect(), m)?;
        if !spans {
            return Ok(true);
        }
        for (i1, i2) in &splits {
            let i2u = i2
                .basis_vectors()
                .all(|e| (0..m).all(|x| crate::scalar::is_zero_vector(&act.act_left(e, &unit_vector(m, x)))));
            let ui1 = i1
                .basis_vectors()
                .all(|e| (0..m).all(|x| crate::scalar::is_zero_vector(&act.act_right(&unit_vector(m, x), e))));
            if i2u && ui1 && !u.is_null() {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    checks
}

/// Single-block derivation criteria on every matrix unit of each block.
pub fn single_block_checks<T: Field>(p: &crate::products::SemidirectAlgebra<T>) -> Vec<Check> {
    use crate::theorems::SingleBlock;
    let (n, m) = (p.n(), p.m());
    [SingleBlock::Delta1, SingleBlock::Delta2, SingleBlock::Tau1, SingleBlock::Tau2]
        .into_iter()
        .map(|kind| {
            attempt(&format!("{} criterion agrees with (a)-(d)", kind.key()), || {
                let (r, c) = kind.shape(n, m);
                for i in 0..r {
                    for j in 0..c {
                        let mut unit = Matrix::zeros(r, c);
                        unit.set(i, j, T::one());
                        theorems::single_block_check(kind, &unit, p)?;
                    }
                }
                Ok(true)
            })
        })
        .collect()
}

/// Every verifier applicable to the product's construction.
pub fn theorem_reports<T: Field>(an: &Analysis<'_, T>) -> (Vec<TheoremReport>, Vec<Check>) {
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for id in TheoremId::ALL {
        if !id.applies_to(an.product().kind()) {
            continue;
        }
        match theorems::verify_with(id, an) {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(Check::fail(format!("verify {id}"), format!("error: {e}"))),
        }
    }
    (reports, errors)
}

fn evaluate<T: Field>(
    product: &crate::products::SemidirectAlgebra<T>,
    split: Option<&(Subspace<T>, Subspace<T>)>,
    rng: &mut ChaCha8Rng,
) -> InstanceOutcome {
    let an = Analysis::new(product);
    let mut checks = linear_algebra_checks::<T>(rng);
    checks.extend(product_checks(&an, split));
    checks.extend(single_block_checks(product));
    let (reports, errors) = theorem_reports(&an);
    checks.extend(errors);
    InstanceOutcome { checks, reports }
}

/// Builds and evaluates one recipe; `None` if it is not realizable.
pub fn evaluate_case<T: Field>(spec: &CaseSpec, case_seed: u64) -> Option<InstanceOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
    match spec.build::<T>()? {
        Ok(inst) => Some(evaluate(&inst.product, inst.ideal_split.as_ref(), &mut rng)),
        Err(e) => Some(InstanceOutcome {
            checks: vec![Check::fail("construction", format!("error: {e}"))],
            reports: Vec::new(),
        }),
    }
}

/// Greedily replaces `spec` by smaller recipes that still fail `check`.
pub fn shrink<T: Field>(spec: &CaseSpec, case_seed: u64, check: &str, budget: usize) -> CaseSpec {
    let mut current = spec.clone();
    let mut spent = 0;
    'outer: while spent < budget {
        for candidate in current.shrink() {
            if spent >= budget {
                break 'outer;
            }
            spent += 1;
            let Some(outcome) = evaluate_case::<T>(&candidate, case_seed) else {
                continue;
            };
            if outcome.failures().any(|(name, _)| name == check) {
                current = candidate;
                continue 'outer;
            }
        }
        break;
    }
    current
}

/// Fixed expectations on the named fixtures.
pub fn fixture_checks<T: Field>() -> Vec<(String, InstanceOutcome)> {
    let mut out = Vec::new();
    for fx in fixtures::algebra_fixtures::<T>() {
        let reg = crate::algebra::BimoduleAction::regular(&fx.algebra);
        let check = attempt(&format!("H¹({}) = {}", fx.name, fx.h1), || {
            Ok(derivations::h1_dim(&fx.algebra, &reg)? == fx.h1)
        });
        out.push((
            fx.name.to_string(),
            InstanceOutcome {
                checks: vec![check],
                reports: Vec::new(),
            },
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for fx in fixtures::product_fixtures::<T>() {
        let mut outcome = evaluate(&fx.product, None, &mut rng);
        if let Some(d) = &fx.derivation {
            let p = &fx.product;
            outcome.checks.push(attempt("distinguished map is a derivation", || {
                derivations::is_derivation(p.total(), &crate::algebra::BimoduleAction::regular(p.total()), d)
            }));
            outcome.checks.push(attempt("distinguished derivation has τ1 ≠ 0", || {
                Ok(!theorems::split_blocks(d, p)?.tau1.is_zero())
            }));
            outcome.checks.push(attempt("distinguished derivation is not inner", || {
                Ok(theorems::inner_characterization(d, p)?.is_none())
            }));
        }
        for &(id, lhs, rhs) in &fx.expected {
            let found = outcome.reports.iter().find(|r| r.theorem == id).cloned();
            outcome.checks.push(attempt(&format!("{id} gives {lhs} = {rhs}"), || {
                let r = match found {
                    Some(r) => r,
                    None => theorems::verify(id, &fx.product)?,
                };
                Ok(r.verdict == Verdict::Verified && r.lhs_dim == Some(lhs) && r.rhs_dim == Some(rhs))
            }));
        }
        out.push((fx.name.to_string(), outcome));
    }
    out
}

/// Runs the fixtures and `config.cases` generated instances.
pub fn run<T: Field>(config: &SelftestConfig) -> Result<SelftestSummary> {
    if config.cases == 0 || config.max_dim == 0 {
        return Err(Error::InvalidArgument("cases and max-dim must be at least 1".into()));
    }
    let mut summary = SelftestSummary {
        config: config.clone(),
        cases_passed: 0,
        fixtures_run: 0,
        checks_run: 0,
        checks_failed: 0,
        verdicts: BTreeMap::new(),
        failures: Vec::new(),
    };
    let tally = |summary: &mut SelftestSummary, outcome: &InstanceOutcome| {
        summary.checks_run += outcome.checks.len();
        summary.checks_failed += outcome.checks.iter().filter(|c| !c.holds).count();
        for r in &outcome.reports {
            summary.verdicts.entry(r.theorem).or_default().record(r.verdict);
        }
    };

    for (name, outcome) in fixture_checks::<T>() {
        tally(&mut summary, &outcome);
        summary.fixtures_run += 1;
        for (check, witness) in outcome.failures() {
            summary.failures.push(Failure {
                case: None,
                instance: name.clone(),
                check,
                witness,
                shrunk: None,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for index in 0..config.cases {
        let case_seed: u64 = rng.gen();
        let spec = CaseSpec::generate(case_seed, config.max_dim);
        let outcome = evaluate_case::<T>(&spec, case_seed).expect("generated recipes are realizable");
        tally(&mut summary, &outcome);
        let failures: Vec<_> = outcome.failures().collect();
        if failures.is_empty() {
            summary.cases_passed += 1;
        }
        for (check, witness) in failures {
            let shrunk = shrink::<T>(&spec, case_seed, &check, config.shrink_budget);
            summary.failures.push(Failure {
                case: Some(index),
                instance: spec.to_string(),
                check,
                witness,
                shrunk: (shrunk != spec).then(|| shrunk.to_string()),
            });
        }
    }
    Ok(summary)
}
