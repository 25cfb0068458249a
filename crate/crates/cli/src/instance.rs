//! Instance files: named algebras, modules and characters, then a list of
//! jobs. Everything is parsed exactly and validated before any job runs.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use semidirect::algebra::{Algebra, BimoduleAction, Character, ModuleAlgebra};
use semidirect::theorems::TheoremId;
use semidirect::{Matrix, Rational};

use crate::error::{CliError, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    algebras: Vec<RawAlgebra>,
    #[serde(default)]
    modules: Vec<RawModule>,
    #[serde(default)]
    characters: Vec<RawCharacter>,
    #[serde(default)]
    jobs: Vec<RawJob>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    name: String,
    dim: usize,
    #[serde(default)]
    mult: Vec<ProductEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    name: String,
    over: String,
    dim: usize,
    #[serde(default)]
    mult: Vec<ProductEntry>,
    #[serde(default)]
    left: Vec<LeftEntry>,
    #[serde(default)]
    right: Vec<RightEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LeftEntry {
    i: usize,
    p: usize,
    q: usize,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RightEntry {
    p: usize,
    i: usize,
    q: usize,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharacter {
    name: String,
    over: String,
    values: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    cmd: String,
    kind: Option<String>,
    id: Option<String>,
    #[serde(default)]
    args: Vec<Value>,
    #[serde(rename = "as")]
    name: Option<String>,
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?` exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let den: BigInt = match den {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || d.starts_with('0') || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            d.parse().ok()?
        }
    };
    Some(Rational::new(num.parse().ok()?, den))
}

fn rational(s: &str, at: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| CliError::Parse(format!("{}: {s:?} is not a rational", at())))
}

fn check_index(at: &str, name: &str, index: usize, bound: usize) -> Result<()> {
    if index >= bound {
        return Err(CliError::Parse(format!("{at}: index {name} = {index} out of range 0..{bound}")));
    }
    Ok(())
}

fn product_tensor(entries: &[ProductEntry], dim: usize, at: &str) -> Result<Vec<Rational>> {
    let mut mult = vec![Rational::from_integer(0.into()); dim * dim * dim];
    for (e, entry) in entries.iter().enumerate() {
        let at = format!("{at}.mult[{e}]");
        check_index(&at, "i", entry.i, dim)?;
        check_index(&at, "j", entry.j, dim)?;
        check_index(&at, "k", entry.k, dim)?;
        mult[(entry.i * dim + entry.j) * dim + entry.k] = rational(&entry.c, || format!("{at}.c"))?;
    }
    Ok(mult)
}

/// A module-algebra together with the algebra it is defined over.
#[derive(Clone, Debug)]
pub struct ModuleDef {
    pub over: String,
    pub module: ModuleAlgebra<Rational>,
}

#[derive(Clone, Debug)]
pub struct CharacterDef {
    pub over: String,
    pub character: Character<Rational>,
}

/// What a name in a job refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameKind {
    Algebra,
    Module,
    Character,
    Product,
}

impl fmt::Display for NameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NameKind::Algebra => "algebra",
            NameKind::Module => "module",
            NameKind::Character => "character",
            NameKind::Product => "product",
        })
    }
}

/// The object a space computation runs on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    /// An algebra acting on itself.
    Algebra(String),
    /// A module over the algebra it names.
    Module(String),
    /// A product acting on itself.
    Product(String),
}

impl Subject {
    pub fn name(&self) -> &str {
        match self {
            Subject::Algebra(s) | Subject::Module(s) | Subject::Product(s) => s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Build {
    Semidirect { module: String },
    Direct { a: String, u: String },
    ModuleExtension { module: String },
    /// `Tri(A, M, A)` for an `A`-bimodule `M`.
    Triangular { module: String },
    ThetaLau { a: String, u: String, character: String },
    Unitization { u: String },
    Alpha { a: String, u: String, alpha: Matrix },
}

impl Build {
    pub fn kind(&self) -> &'static str {
        match self {
            Build::Semidirect { .. } => "semidirect",
            Build::Direct { .. } => "direct",
            Build::ModuleExtension { .. } => "module-extension",
            Build::Triangular { .. } => "triangular",
            Build::ThetaLau { .. } => "theta-lau",
            Build::Unitization { .. } => "unitization",
            Build::Alpha { .. } => "alpha",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate { name: String, kind: NameKind },
    Build { build: Build, name: String },
    Z1(Subject),
    N1(Subject),
    H1(Subject),
    Hom { module: String, target: Option<String> },
    Spaces(Subject),
    Decompose { product: String, map: Matrix },
    InnerWitness { subject: Subject, map: Matrix },
    Verify { id: TheoremId, product: String },
}

/// A resolved job with the text it was written as, for reports.
#[derive(Clone, Debug)]
pub struct Job {
    pub label: String,
    pub command: Command,
}

#[derive(Clone, Debug, Default)]
pub struct Instance {
    pub algebras: BTreeMap<String, Algebra<Rational>>,
    pub modules: BTreeMap<String, ModuleDef>,
    pub characters: BTreeMap<String, CharacterDef>,
    pub jobs: Vec<Job>,
}

impl Instance {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut inst = Instance::default();
        let mut names: BTreeMap<String, NameKind> = BTreeMap::new();
        fn claim(names: &mut BTreeMap<String, NameKind>, name: &str, kind: NameKind) -> Result<()> {
            match names.insert(name.to_string(), kind) {
                Some(previous) => Err(CliError::Validation(format!(
                    "name {name:?} is defined as a {previous} and again as a {kind}"
                ))),
                None => Ok(()),
            }
        }

        for (x, a) in raw.algebras.iter().enumerate() {
            let at = format!("algebras[{x}]");
            claim(&mut names, &a.name, NameKind::Algebra)?;
            let mult = product_tensor(&a.mult, a.dim, &at)?;
            let algebra = Algebra::new(a.name.clone(), a.dim, mult).map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            algebra
                .validate()
                .into_result(&format!("algebra {}", a.name))
                .map_err(|e| CliError::Validation(e.to_string()))?;
            inst.algebras.insert(a.name.clone(), algebra);
        }

        for (x, m) in raw.modules.iter().enumerate() {
            let at = format!("modules[{x}]");
            claim(&mut names, &m.name, NameKind::Module)?;
            let base = inst.algebras.get(&m.over).ok_or_else(|| {
                CliError::UnresolvedReference(format!("{at}: module {} is over unknown algebra {:?}", m.name, m.over))
            })?;
            let (n, d) = (base.dim(), m.dim);
            let zero = Rational::from_integer(0.into());
            let mut left = vec![zero.clone(); n * d * d];
            for (e, entry) in m.left.iter().enumerate() {
                let at = format!("{at}.left[{e}]");
                check_index(&at, "i", entry.i, n)?;
                check_index(&at, "p", entry.p, d)?;
                check_index(&at, "q", entry.q, d)?;
                left[(entry.i * d + entry.p) * d + entry.q] = rational(&entry.c, || format!("{at}.c"))?;
            }
            let mut right = vec![zero; n * d * d];
            for (e, entry) in m.right.iter().enumerate() {
                let at = format!("{at}.right[{e}]");
                check_index(&at, "p", entry.p, d)?;
                check_index(&at, "i", entry.i, n)?;
                check_index(&at, "q", entry.q, d)?;
                right[(entry.p * n + entry.i) * d + entry.q] = rational(&entry.c, || format!("{at}.c"))?;
            }
            let parse_err = |e: semidirect::Error| CliError::Parse(format!("{at}: {e}"));
            let algebra = Algebra::new(m.name.clone(), d, product_tensor(&m.mult, d, &at)?).map_err(parse_err)?;
            let action = BimoduleAction::new(n, d, left, right).map_err(parse_err)?;
            let module = ModuleAlgebra::new(algebra, action).map_err(parse_err)?;
            module
                .validate(base)
                .and_then(|r| r.into_result(&format!("module {}", m.name)))
                .map_err(|e| CliError::Validation(e.to_string()))?;
            inst.modules.insert(
                m.name.clone(),
                ModuleDef {
                    over: m.over.clone(),
                    module,
                },
            );
        }

        for (x, c) in raw.characters.iter().enumerate() {
            let at = format!("characters[{x}]");
            claim(&mut names, &c.name, NameKind::Character)?;
            let base = inst.algebras.get(&c.over).ok_or_else(|| {
                CliError::UnresolvedReference(format!("{at}: character {} is over unknown algebra {:?}", c.name, c.over))
            })?;
            let values = c
                .values
                .iter()
                .enumerate()
                .map(|(v, s)| rational(s, || format!("{at}.values[{v}]")))
                .collect::<Result<Vec<_>>>()?;
            let character = Character::new(values);
            character
                .check(base)
                .map_err(|e| CliError::Validation(format!("character {}: {e}", c.name)))?;
            inst.characters.insert(
                c.name.clone(),
                CharacterDef {
                    over: c.over.clone(),
                    character,
                },
            );
        }

        for (x, job) in raw.jobs.iter().enumerate() {
            let command = resolve_job(&inst, &names, job, x)?;
            if let Command::Build { name, .. } = &command {
                claim(&mut names, name, NameKind::Product)?;
            }
            inst.jobs.push(Job {
                label: job_label(job),
                command,
            });
        }
        Ok(inst)
    }
}

fn job_label(job: &RawJob) -> String {
    let mut parts = vec![job.cmd.clone()];
    parts.extend(job.kind.clone());
    parts.extend(job.id.clone());
    for a in &job.args {
        parts.push(match a {
            Value::String(s) => s.clone(),
            Value::Array(rows) => {
                let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
                format!("<{}x{} map>", rows.len(), cols)
            }
            other => other.to_string(),
        });
    }
    if let Some(name) = &job.name {
        parts.push(format!("as {name}"));
    }
    parts.join(" ")
}

enum Operand {
    Name(String, NameKind),
    Map(Matrix),
}

fn operands(names: &BTreeMap<String, NameKind>, job: &RawJob, at: &str) -> Result<Vec<Operand>> {
    job.args
        .iter()
        .enumerate()
        .map(|(a, v)| {
            let at = format!("{at}.args[{a}]");
            match v {
                Value::String(s) => names
                    .get(s)
                    .map(|k| Operand::Name(s.clone(), *k))
                    .ok_or_else(|| CliError::UnresolvedReference(format!("{at}: no object named {s:?}"))),
                Value::Array(rows) => parse_map(rows, &at).map(Operand::Map),
                other => Err(CliError::Parse(format!(
                    "{at}: expected a name or a matrix of rationals, got {other}"
                ))),
            }
        })
        .collect()
}

fn parse_map(rows: &[Value], at: &str) -> Result<Matrix> {
    let mut parsed = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let entries = row
            .as_array()
            .ok_or_else(|| CliError::Parse(format!("{at}[{r}]: a matrix row must be an array")))?;
        let values = entries
            .iter()
            .enumerate()
            .map(|(c, v)| {
                v.as_str()
                    .and_then(parse_rational)
                    .ok_or_else(|| CliError::Parse(format!("{at}[{r}][{c}]: {v} is not a string rational")))
            })
            .collect::<Result<Vec<_>>>()?;
        parsed.push(values);
    }
    let cols = parsed.first().map_or(0, Vec::len);
    Matrix::from_rows(cols, parsed).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

fn resolve_job(inst: &Instance, names: &BTreeMap<String, NameKind>, job: &RawJob, x: usize) -> Result<Command> {
    let at = format!("jobs[{x}]");
    let ops = operands(names, job, &at)?;
    let bad = |expected: &str| {
        CliError::Validation(format!("{at}: `{}` expects {expected}", job.cmd))
    };
    if job.kind.is_some() && job.cmd != "build" {
        return Err(CliError::Parse(format!("{at}: only build jobs take a kind")));
    }
    if job.id.is_some() && job.cmd != "verify" {
        return Err(CliError::Parse(format!("{at}: only verify jobs take an id")));
    }
    if job.name.is_some() && job.cmd != "build" {
        return Err(CliError::Parse(format!("{at}: only build jobs take a result name")));
    }
    let subject = |ops: &[Operand], allow_module: bool| -> Option<Subject> {
        match ops {
            [Operand::Name(s, NameKind::Algebra)] => Some(Subject::Algebra(s.clone())),
            [Operand::Name(s, NameKind::Product)] => Some(Subject::Product(s.clone())),
            [Operand::Name(s, NameKind::Module)] if allow_module => Some(Subject::Module(s.clone())),
            // `A M` names the module's base explicitly.
            [Operand::Name(a, NameKind::Algebra), Operand::Name(m, NameKind::Module)]
                if allow_module && inst.modules[m].over == *a =>
            {
                Some(Subject::Module(m.clone()))
            }
            _ => None,
        }
    };
    let command = match job.cmd.as_str() {
        "validate" => match ops.as_slice() {
            [Operand::Name(s, kind)] => Command::Validate {
                name: s.clone(),
                kind: *kind,
            },
            _ => return Err(bad("one name")),
        },
        "build" => {
            let kind = job
                .kind
                .as_deref()
                .ok_or_else(|| CliError::Parse(format!("{at}: build needs a kind")))?;
            let name = job
                .name
                .clone()
                .ok_or_else(|| CliError::Parse(format!("{at}: build needs a result name (\"as\")")))?;
            Command::Build {
                build: resolve_build(inst, kind, ops, &at)?,
                name,
            }
        }
        "z1" => Command::Z1(subject(&ops, true).ok_or_else(|| bad("an algebra, a module or a product"))?),
        "n1" => Command::N1(subject(&ops, true).ok_or_else(|| bad("an algebra, a module or a product"))?),
        "h1" => Command::H1(subject(&ops, true).ok_or_else(|| bad("an algebra, a module or a product"))?),
        "hom" => match ops.as_slice() {
            [Operand::Name(m, NameKind::Module)] => Command::Hom {
                module: m.clone(),
                target: None,
            },
            [Operand::Name(m, NameKind::Module), Operand::Name(t, NameKind::Module)] => {
                if inst.modules[m].over != inst.modules[t].over {
                    return Err(CliError::Validation(format!(
                        "{at}: modules {m} and {t} are over different algebras"
                    )));
                }
                Command::Hom {
                    module: m.clone(),
                    target: Some(t.clone()),
                }
            }
            _ => return Err(bad("one or two modules")),
        },
        "spaces" => match ops.as_slice() {
            [Operand::Name(s, NameKind::Module)] => Command::Spaces(Subject::Module(s.clone())),
            [Operand::Name(s, NameKind::Product)] => Command::Spaces(Subject::Product(s.clone())),
            _ => return Err(bad("a module or a product")),
        },
        "decompose" => match ops.as_slice() {
            [Operand::Name(p, NameKind::Product), Operand::Map(d)] => Command::Decompose {
                product: p.clone(),
                map: d.clone(),
            },
            _ => return Err(bad("a product and a map")),
        },
        "inner-witness" => match ops.as_slice() {
            [Operand::Name(s, kind @ (NameKind::Algebra | NameKind::Product)), Operand::Map(d)] => Command::InnerWitness {
                subject: if *kind == NameKind::Algebra {
                    Subject::Algebra(s.clone())
                } else {
                    Subject::Product(s.clone())
                },
                map: d.clone(),
            },
            _ => return Err(bad("an algebra or a product, and a map")),
        },
        "verify" => {
            let id = job
                .id
                .as_deref()
                .ok_or_else(|| CliError::Parse(format!("{at}: verify needs an id")))?;
            let id: TheoremId = id.parse().map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            match ops.as_slice() {
                [Operand::Name(p, NameKind::Product)] => Command::Verify { id, product: p.clone() },
                _ => return Err(bad("one product")),
            }
        }
        other => return Err(CliError::Parse(format!("{at}: unknown command {other:?}"))),
    };
    Ok(command)
}

fn resolve_build(inst: &Instance, kind: &str, ops: Vec<Operand>, at: &str) -> Result<Build> {
    let bad = |expected: &str| CliError::Validation(format!("{at}: build {kind} expects {expected}"));
    // `[M]` or `[A, M]` with `M` over `A`.
    let module = |ops: &[Operand]| -> Option<String> {
        match ops {
            [Operand::Name(m, NameKind::Module)] => Some(m.clone()),
            [Operand::Name(a, NameKind::Algebra), Operand::Name(m, NameKind::Module)] if inst.modules[m].over == *a => {
                Some(m.clone())
            }
            _ => None,
        }
    };
    let build = match kind {
        "semidirect" => Build::Semidirect {
            module: module(&ops).ok_or_else(|| bad("a module, optionally preceded by its algebra"))?,
        },
        "module-extension" => Build::ModuleExtension {
            module: module(&ops).ok_or_else(|| bad("a module, optionally preceded by its algebra"))?,
        },
        "triangular" => Build::Triangular {
            module: module(&ops).ok_or_else(|| bad("a module, optionally preceded by its algebra"))?,
        },
        "direct" => match ops.as_slice() {
            [Operand::Name(a, NameKind::Algebra), Operand::Name(u, NameKind::Algebra)] => Build::Direct {
                a: a.clone(),
                u: u.clone(),
            },
            _ => return Err(bad("two algebras")),
        },
        "theta-lau" => match ops.as_slice() {
            [Operand::Name(a, NameKind::Algebra), Operand::Name(u, NameKind::Algebra), Operand::Name(t, NameKind::Character)] => {
                if inst.characters[t].over != *a {
                    return Err(CliError::Validation(format!("{at}: character {t} is not over {a}")));
                }
                Build::ThetaLau {
                    a: a.clone(),
                    u: u.clone(),
                    character: t.clone(),
                }
            }
            _ => return Err(bad("two algebras and a character")),
        },
        "unitization" => match ops.as_slice() {
            [Operand::Name(u, NameKind::Algebra)] => Build::Unitization { u: u.clone() },
            _ => return Err(bad("one algebra")),
        },
        "alpha" => match ops.as_slice() {
            [Operand::Name(a, NameKind::Algebra), Operand::Name(u, NameKind::Algebra), Operand::Map(alpha)] => Build::Alpha {
                a: a.clone(),
                u: u.clone(),
                alpha: alpha.clone(),
            },
            _ => return Err(bad("two algebras and a map")),
        },
        other => return Err(CliError::Parse(format!("{at}: unknown build kind {other:?}"))),
    };
    Ok(build)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_grammar() {
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(parse_rational("0"), Some(q(0, 1)));
        assert_eq!(parse_rational("-7"), Some(q(-7, 1)));
        assert_eq!(parse_rational("1/3"), Some(q(1, 3)));
        assert_eq!(parse_rational("-2/4"), Some(q(-1, 2)));
        for bad in ["", "-", "+1", "1/0", "1/03", "1/", "/2", "1.5", " 1", "1/-2", "--1", "a"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn minimal_scalar_file() {
        let inst =
            Instance::from_json(r#"{"algebras": [{"name": "Q", "dim": 1, "mult": [{"i":0,"j":0,"k":0,"c":"1"}]}]}"#)
                .unwrap();
        assert_eq!(inst.algebras["Q"].dim(), 1);
        assert!(inst.jobs.is_empty());
    }

    #[test]
    fn thirds_stay_exact() {
        let inst = Instance::from_json(
            r#"{"algebras": [{"name": "A", "dim": 1, "mult": [{"i":0,"j":0,"k":0,"c":"1/3"}]}]}"#,
        )
        .unwrap();
        assert_eq!(*inst.algebras["A"].constant(0, 0, 0), Rational::new(1.into(), 3.into()));
    }

    #[test]
    fn non_associative_tensor_reports_a_witness() {
        // e0 e0 = e1, e0 e1 = e0: (e0 e0) e0 = e1 e0 = 0 but e0 (e0 e0) = e0 e1 = e0.
        let err = Instance::from_json(
            r#"{"algebras": [{"name": "bad", "dim": 2, "mult": [
                {"i":0,"j":0,"k":1,"c":"1"}, {"i":0,"j":1,"k":0,"c":"1"}]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Validation(_)), "{err}");
        assert!(err.to_string().contains("(0,0,0)"), "{err}");
    }

    #[test]
    fn errors_and_exit_codes() {
        let parse = Instance::from_json("{").unwrap_err();
        assert_eq!(parse.exit_code(), 1);
        let bad_rational =
            Instance::from_json(r#"{"algebras": [{"name": "A", "dim": 1, "mult": [{"i":0,"j":0,"k":0,"c":"0.5"}]}]}"#)
                .unwrap_err();
        assert!(bad_rational.to_string().contains("algebras[0].mult[0].c"), "{bad_rational}");
        let out_of_range =
            Instance::from_json(r#"{"algebras": [{"name": "A", "dim": 1, "mult": [{"i":1,"j":0,"k":0,"c":"1"}]}]}"#)
                .unwrap_err();
        assert_eq!(out_of_range.exit_code(), 1);
        let unresolved = Instance::from_json(r#"{"jobs": [{"cmd": "h1", "args": ["M"]}]}"#).unwrap_err();
        assert!(matches!(unresolved, CliError::UnresolvedReference(_)));
        assert_eq!(unresolved.exit_code(), 2);
        let unknown = Instance::from_json(r#"{"extra": 1}"#).unwrap_err();
        assert_eq!(unknown.exit_code(), 1);
    }

    #[test]
    fn products_are_named_by_build_jobs() {
        let inst = Instance::from_json(
            r#"{"algebras": [{"name": "Q", "dim": 1, "mult": [{"i":0,"j":0,"k":0,"c":"1"}]}],
                "jobs": [{"cmd": "build", "kind": "direct", "args": ["Q", "Q"], "as": "P"},
                         {"cmd": "verify", "id": "4.1", "args": ["P"]}]}"#,
        )
        .unwrap();
        assert_eq!(
            inst.jobs[1].command,
            Command::Verify {
                id: TheoremId::QuotientE,
                product: "P".into()
            }
        );
        let before = Instance::from_json(
            r#"{"algebras": [{"name": "Q", "dim": 1, "mult": [{"i":0,"j":0,"k":0,"c":"1"}]}],
                "jobs": [{"cmd": "verify", "id": "4.1", "args": ["P"]},
                         {"cmd": "build", "kind": "direct", "args": ["Q", "Q"], "as": "P"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(before, CliError::UnresolvedReference(_)));
    }
}
