//! Runs the jobs of an instance in order. A failing job records its error
//! and later jobs still run.

use std::collections::BTreeMap;

use semidirect::algebra::{Algebra, BimoduleAction};
use semidirect::derivations::{self, LinearMapSpace};
use semidirect::products::{self, CornerModule, SemidirectAlgebra};
use semidirect::theorems::{self, BlockDecomposition, TheoremReport, Verdict};
use semidirect::{Error, Rational};

use crate::instance::{Build, Command, Instance, NameKind, Subject};

type Q = Rational;

/// A space of linear maps with its basis in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceResult {
    pub source_dim: usize,
    pub target_dim: usize,
    pub dim: usize,
    /// Each map flattened row-major, in reduced row echelon order.
    pub basis: Vec<Vec<Q>>,
}

impl From<&LinearMapSpace<Q>> for SpaceResult {
    fn from(s: &LinearMapSpace<Q>) -> Self {
        Self {
            source_dim: s.source_dim(),
            target_dim: s.target_dim(),
            dim: s.dim(),
            basis: s.space().basis_vectors().map(<[Q]>::to_vec).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobResult {
    Valid { kind: NameKind, dim: usize },
    Built { name: String, kind: &'static str, n: usize, m: usize },
    Space(SpaceResult),
    H1 { z1_dim: usize, n1_dim: usize, h1_dim: usize },
    Spaces { r: SpaceResult, c: SpaceResult, i: SpaceResult },
    Blocks(BlockDecomposition<Q>),
    InnerAlgebra(Option<Vec<Q>>),
    InnerProduct(Option<(Vec<Q>, Vec<Q>)>),
    Theorem(TheoremReport),
}

#[derive(Clone, Debug)]
pub struct JobOutcome {
    pub label: String,
    pub result: Result<JobResult, String>,
}

impl JobOutcome {
    pub fn is_mismatch(&self) -> bool {
        matches!(&self.result, Ok(JobResult::Theorem(r)) if r.verdict == Verdict::Mismatch)
    }
}

/// Job execution state: the products built so far.
pub struct Session<'a> {
    inst: &'a Instance,
    products: BTreeMap<String, SemidirectAlgebra<Q>>,
}

pub fn run_jobs(inst: &Instance) -> Vec<JobOutcome> {
    Session::new(inst).run_all()
}

impl<'a> Session<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        Self {
            inst,
            products: BTreeMap::new(),
        }
    }

    pub fn run_all(&mut self) -> Vec<JobOutcome> {
        let inst = self.inst;
        inst.jobs
            .iter()
            .map(|job| JobOutcome {
                label: job.label.clone(),
                result: self.run(&job.command).map_err(|e| e.to_string()),
            })
            .collect()
    }

    pub fn products(&self) -> &BTreeMap<String, SemidirectAlgebra<Q>> {
        &self.products
    }
    fn algebra(&self, name: &str) -> &Algebra<Q> {
        &self.inst.algebras[name]
    }

    pub fn product(&self, name: &str) -> Result<&SemidirectAlgebra<Q>, Error> {
        self.products
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("product {name} was not built")))
    }

    /// The algebra and the bimodule a space computation runs on.
    fn acting(&self, subject: &Subject) -> Result<(Algebra<Q>, BimoduleAction<Q>), Error> {
        Ok(match subject {
            Subject::Algebra(a) => {
                let a = self.algebra(a);
                (a.clone(), BimoduleAction::regular(a))
            }
            Subject::Module(m) => {
                let def = &self.inst.modules[m];
                (self.algebra(&def.over).clone(), def.module.action.clone())
            }
            Subject::Product(p) => {
                let t = self.product(p)?.total();
                (t.clone(), BimoduleAction::regular(t))
            }
        })
    }

    fn run(&mut self, command: &Command) -> Result<JobResult, Error> {
        Ok(match command {
            Command::Validate { name, kind } => self.validate(name, *kind)?,
            Command::Build { build, name } => {
                let p = self.build(build)?.with_name(name.clone());
                let result = JobResult::Built {
                    name: name.clone(),
                    kind: p.kind().label(),
                    n: p.n(),
                    m: p.m(),
                };
                self.products.insert(name.clone(), p);
                result
            }
            Command::Z1(s) => {
                let (a, m) = self.acting(s)?;
                JobResult::Space((&derivations::derivations(&a, &m)).into())
            }
            Command::N1(s) => {
                let (_, m) = self.acting(s)?;
                JobResult::Space((&derivations::inner_space(&m)).into())
            }
            Command::H1(s) => {
                let (a, m) = self.acting(s)?;
                let z1 = derivations::derivations(&a, &m);
                let n1 = derivations::inner_space(&m);
                JobResult::H1 {
                    z1_dim: z1.dim(),
                    n1_dim: n1.dim(),
                    h1_dim: derivations::h1_dim(&a, &m)?,
                }
            }
            Command::Hom { module, target } => {
                let u = &self.inst.modules[module].module.action;
                let v = target.as_ref().map_or(u, |t| &self.inst.modules[t].module.action);
                JobResult::Space((&derivations::hom_space(u, v)?).into())
            }
            Command::Spaces(s) => {
                let (a, u) = match s {
                    Subject::Module(m) => {
                        let def = &self.inst.modules[m];
                        (self.algebra(&def.over).clone(), def.module.clone())
                    }
                    Subject::Product(p) => {
                        let p = self.product(p)?;
                        (p.part_a().clone(), p.part_u().clone())
                    }
                    Subject::Algebra(_) => unreachable!("spaces jobs resolve to modules or products"),
                };
                JobResult::Spaces {
                    r: (&derivations::r_space(&u.action)).into(),
                    c: (&derivations::c_space(&a, &u.action)).into(),
                    i: (&derivations::i_space(&u)).into(),
                }
            }
            Command::Decompose { product, map } => JobResult::Blocks(theorems::split_blocks(map, self.product(product)?)?),
            Command::InnerWitness { subject, map } => match subject {
                Subject::Product(p) => JobResult::InnerProduct(theorems::inner_characterization(map, self.product(p)?)?),
                other => {
                    let (a, m) = self.acting(other)?;
                    JobResult::InnerAlgebra(derivations::inner_witness(&a, &m, map)?)
                }
            },
            Command::Verify { id, product } => JobResult::Theorem(theorems::verify(*id, self.product(product)?)?),
        })
    }

    fn validate(&self, name: &str, kind: NameKind) -> Result<JobResult, Error> {
        let dim = match kind {
            NameKind::Algebra => {
                let a = self.algebra(name);
                a.validate().into_result(name)?;
                a.dim()
            }
            NameKind::Module => {
                let def = &self.inst.modules[name];
                def.module.validate(self.algebra(&def.over))?.into_result(name)?;
                def.module.dim()
            }
            NameKind::Character => {
                let def = &self.inst.characters[name];
                def.character.check(self.algebra(&def.over))?;
                def.character.values.len()
            }
            NameKind::Product => {
                let p = self.product(name)?;
                p.total().validate().into_result(name)?;
                if !p.block_laws_hold() {
                    return Err(Error::InternalInvariantViolation(format!("{name} breaks the block laws")));
                }
                p.dim()
            }
        };
        Ok(JobResult::Valid { kind, dim })
    }

    fn build(&self, build: &Build) -> Result<SemidirectAlgebra<Q>, Error> {
        let module = |m: &str| &self.inst.modules[m];
        match build {
            Build::Semidirect { module: m } => products::semidirect(self.algebra(&module(m).over), &module(m).module),
            Build::Direct { a, u } => Ok(products::direct_product(self.algebra(a), self.algebra(u))),
            Build::ModuleExtension { module: m } => {
                let def = module(m);
                require_null(m, &def.module.algebra)?;
                products::module_extension(self.algebra(&def.over), &def.module.action)
            }
            Build::Triangular { module: m } => {
                let def = module(m);
                require_null(m, &def.module.algebra)?;
                let a = self.algebra(&def.over);
                let corner = CornerModule {
                    dim: def.module.dim(),
                    left: def.module.action.left_tensor().to_vec(),
                    right: def.module.action.right_tensor().to_vec(),
                };
                products::triangular(a, a, &corner)
            }
            Build::ThetaLau { a, u, character } => {
                products::theta_lau(self.algebra(a), self.algebra(u), &self.inst.characters[character].character)
            }
            Build::Unitization { u } => Ok(products::unitization(self.algebra(u))),
            Build::Alpha { a, u, alpha } => products::alpha_product(self.algebra(a), self.algebra(u), alpha),
        }
    }
}

/// Module extensions and triangular corners carry the zero product.
fn require_null(name: &str, u: &Algebra<Q>) -> Result<(), Error> {
    if u.is_null() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("module {name} must have zero multiplication here")))
    }
}
