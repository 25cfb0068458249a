//! Seeded generators of valid algebras and products.
//!
//! Random structure tensors are almost never associative, so every instance
//! starts from a known-valid family and is then rewritten in a random basis.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, BimoduleAction, Character};
use crate::error::Result;
use crate::library;
use crate::linalg::{Matrix, Subspace};
use crate::products::{self, CornerModule, SemidirectAlgebra};
use crate::scalar::Field;

/// A recipe for an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Matrix(usize),
    DualNumbers,
    Null(usize),
    Triangular(usize),
    Cyclic(usize),
    DirectSum(Box<AlgebraSpec>, Box<AlgebraSpec>),
    BasisChange { base: Box<AlgebraSpec>, seed: u64 },
}

impl AlgebraSpec {
    pub fn dim(&self) -> usize {
        match self {
            AlgebraSpec::Matrix(k) => k * k,
            AlgebraSpec::DualNumbers => 2,
            AlgebraSpec::Null(m) | AlgebraSpec::Cyclic(m) => *m,
            AlgebraSpec::Triangular(k) => k * (k + 1) / 2,
            AlgebraSpec::DirectSum(a, b) => a.dim() + b.dim(),
            AlgebraSpec::BasisChange { base, .. } => base.dim(),
        }
    }

    pub fn build<T: Field>(&self) -> Algebra<T> {
        match self {
            AlgebraSpec::Matrix(k) => library::matrix(*k),
            AlgebraSpec::DualNumbers => library::dual_numbers(),
            AlgebraSpec::Null(m) => library::null(*m),
            AlgebraSpec::Triangular(k) => library::upper_triangular(*k),
            AlgebraSpec::Cyclic(k) => library::cyclic_group(*k),
            AlgebraSpec::DirectSum(a, b) => library::direct_sum(&a.build(), &b.build()),
            AlgebraSpec::BasisChange { base, seed } => base
                .build()
                .change_basis(&random_invertible(base.dim(), *seed))
                .expect("random basis change is invertible"),
        }
    }

    /// Nonzero characters known for this family, as values on the basis.
    pub fn characters<T: Field>(&self) -> Vec<Vec<T>> {
        match self {
            AlgebraSpec::Matrix(1) => vec![vec![T::one()]],
            AlgebraSpec::Matrix(_) | AlgebraSpec::Null(_) => Vec::new(),
            AlgebraSpec::DualNumbers => vec![vec![T::one(), T::zero()]],
            AlgebraSpec::Triangular(k) => {
                let units: Vec<(usize, usize)> = (0..*k).flat_map(|r| (r..*k).map(move |s| (r, s))).collect();
                (0..*k)
                    .map(|d| {
                        units
                            .iter()
                            .map(|&u| if u == (d, d) { T::one() } else { T::zero() })
                            .collect()
                    })
                    .collect()
            }
            AlgebraSpec::Cyclic(k) => {
                let mut chars = vec![vec![T::one(); *k]];
                if k % 2 == 0 {
                    chars.push((0..*k).map(|i| if i % 2 == 0 { T::one() } else { -T::one() }).collect());
                }
                chars
            }
            AlgebraSpec::DirectSum(a, b) => {
                let (na, nb) = (a.dim(), b.dim());
                let left = a.characters::<T>().into_iter().map(|mut c| {
                    c.extend(std::iter::repeat_n(T::zero(), nb));
                    c
                });
                let right = b.characters::<T>().into_iter().map(|c| {
                    let mut v = vec![T::zero(); na];
                    v.extend(c);
                    v
                });
                left.chain(right).collect()
            }
            AlgebraSpec::BasisChange { base, seed } => {
                let p = random_invertible::<T>(base.dim(), *seed);
                base.characters().iter().map(|c| p.mul_vec(c)).collect()
            }
        }
    }

    pub fn character_count(&self) -> usize {
        self.characters::<crate::Rational>().len()
    }

    /// A decomposition into two ideals `I1 ⊕ I2`, when the family provides one.
    pub fn ideal_split<T: Field>(&self) -> Option<(Subspace<T>, Subspace<T>)> {
        match self {
            AlgebraSpec::DirectSum(a, _) => {
                let (na, n) = (a.dim(), self.dim());
                let first = Subspace::span(n, (0..na).map(|i| crate::scalar::unit_vector(n, i))).ok()?;
                let second = Subspace::span(n, (na..n).map(|i| crate::scalar::unit_vector(n, i))).ok()?;
                Some((first, second))
            }
            AlgebraSpec::BasisChange { base, seed } => {
                let (i1, i2) = base.ideal_split::<T>()?;
                let inv = random_invertible::<T>(base.dim(), *seed).inverse()?;
                Some((i1.map_through(&inv).ok()?, i2.map_through(&inv).ok()?))
            }
            _ => None,
        }
    }

    /// Strictly smaller or simpler recipes, most aggressive first.
    pub fn shrink(&self) -> Vec<AlgebraSpec> {
        use AlgebraSpec::*;
        match self {
            Matrix(k) if *k > 1 => vec![Matrix(k - 1)],
            DualNumbers => vec![Matrix(1), Null(1)],
            Null(m) if *m > 1 => vec![Null(m - 1)],
            Triangular(k) if *k > 2 => vec![Triangular(k - 1)],
            Triangular(_) => vec![Matrix(1)],
            Cyclic(k) if *k > 2 => vec![Cyclic(k - 1), Matrix(1)],
            Cyclic(_) => vec![Matrix(1)],
            DirectSum(a, b) => {
                let mut out = vec![(**a).clone(), (**b).clone()];
                out.extend(a.shrink().into_iter().map(|s| DirectSum(Box::new(s), b.clone())));
                out.extend(b.shrink().into_iter().map(|s| DirectSum(a.clone(), Box::new(s))));
                out
            }
            BasisChange { base, seed } => {
                let mut out = vec![(**base).clone()];
                out.extend(base.shrink().into_iter().map(|s| BasisChange {
                    base: Box::new(s),
                    seed: *seed,
                }));
                out
            }
            _ => Vec::new(),
        }
    }

    /// Every recipe without basis changes of dimension between 1 and `max_dim`.
    pub fn pool(max_dim: usize) -> Vec<AlgebraSpec> {
        use AlgebraSpec::*;
        let mut atoms = Vec::new();
        for k in 1.. {
            if k * k > max_dim {
                break;
            }
            atoms.push(Matrix(k));
        }
        if max_dim >= 2 {
            atoms.push(DualNumbers);
        }
        atoms.extend((1..=max_dim).map(Null));
        for k in 2.. {
            if k * (k + 1) / 2 > max_dim {
                break;
            }
            atoms.push(Triangular(k));
        }
        atoms.extend((2..=max_dim).map(Cyclic));
        let mut pool = atoms.clone();
        for a in &atoms {
            for b in &atoms {
                if a.dim() + b.dim() <= max_dim {
                    pool.push(DirectSum(Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
        pool
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Matrix(k) => write!(f, "matrix({k})"),
            AlgebraSpec::DualNumbers => f.write_str("dual-numbers"),
            AlgebraSpec::Null(m) => write!(f, "null({m})"),
            AlgebraSpec::Triangular(k) => write!(f, "triangular({k})"),
            AlgebraSpec::Cyclic(k) => write!(f, "group-algebra(cyclic {k})"),
            AlgebraSpec::DirectSum(a, b) => write!(f, "direct-sum({a}, {b})"),
            AlgebraSpec::BasisChange { base, seed } => write!(f, "basis-change({seed}, {base})"),
        }
    }
}

/// How `A` acts on the null module in a module extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ActionSpec {
    Regular,
    LeftRegular,
    RightRegular,
    Trivial(usize),
    /// `a x = x a = θ(a) x` on an `m`-dimensional module, with the given
    /// character index.
    Scalar { character: usize, dim: usize },
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::Regular => f.write_str("regular"),
            ActionSpec::LeftRegular => f.write_str("left-regular"),
            ActionSpec::RightRegular => f.write_str("right-regular"),
            ActionSpec::Trivial(m) => write!(f, "trivial({m})"),
            ActionSpec::Scalar { character, dim } => write!(f, "scalar(θ#{character}, {dim})"),
        }
    }
}

/// A recipe for a product `A ⋉ U`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProductSpec {
    Direct(AlgebraSpec, AlgebraSpec),
    /// `A ⋉ A` with the regular action.
    Regular(AlgebraSpec),
    ModuleExtension(AlgebraSpec, ActionSpec),
    /// `Tri(A, A, A)` with the regular corner.
    Triangular(AlgebraSpec),
    ThetaLau { a: AlgebraSpec, u: AlgebraSpec, character: usize },
    Unitization(AlgebraSpec),
    /// `A ⋉_α U` with `α = 0`.
    AlphaZero(AlgebraSpec, AlgebraSpec),
    /// `A ⋉_α A` with `α` the identity.
    AlphaIdentity(AlgebraSpec),
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductSpec::Direct(a, u) => write!(f, "direct({a}, {u})"),
            ProductSpec::Regular(a) => write!(f, "regular-semidirect({a})"),
            ProductSpec::ModuleExtension(a, act) => write!(f, "module-extension({a}, {act})"),
            ProductSpec::Triangular(a) => write!(f, "triangular({a})"),
            ProductSpec::ThetaLau { a, u, character } => write!(f, "theta-lau({a}, {u}, θ#{character})"),
            ProductSpec::Unitization(u) => write!(f, "unitization({u})"),
            ProductSpec::AlphaZero(a, u) => write!(f, "alpha-zero({a}, {u})"),
            ProductSpec::AlphaIdentity(a) => write!(f, "alpha-identity({a})"),
        }
    }
}

fn pick_character<T: Field>(a: &AlgebraSpec, index: usize) -> Option<Character<T>> {
    a.characters().into_iter().nth(index).map(Character::new)
}

impl ProductSpec {
    /// `None` when the recipe refers to a character the algebra lacks.
    pub fn build<T: Field>(&self) -> Option<Result<SemidirectAlgebra<T>>> {
        Some(match self {
            ProductSpec::Direct(a, u) => Ok(products::direct_product(&a.build(), &u.build())),
            ProductSpec::Regular(a) => {
                let alg = a.build();
                crate::algebra::ModuleAlgebra::new(alg.clone(), BimoduleAction::regular(&alg))
                    .and_then(|u| products::semidirect(&alg, &u))
            }
            ProductSpec::ModuleExtension(a, act) => {
                let alg = a.build::<T>();
                let n = alg.dim();
                let action = match act {
                    ActionSpec::Regular => BimoduleAction::regular(&alg),
                    ActionSpec::LeftRegular => {
                        let reg = BimoduleAction::regular(&alg);
                        BimoduleAction::new(n, n, reg.left_tensor().to_vec(), vec![T::zero(); n * n * n])
                            .expect("sized for A")
                    }
                    ActionSpec::RightRegular => {
                        let reg = BimoduleAction::regular(&alg);
                        BimoduleAction::new(n, n, vec![T::zero(); n * n * n], reg.right_tensor().to_vec())
                            .expect("sized for A")
                    }
                    ActionSpec::Trivial(m) => BimoduleAction::trivial(n, *m),
                    ActionSpec::Scalar { character, dim } => {
                        BimoduleAction::scalar(&pick_character::<T>(a, *character)?.values, *dim)
                    }
                };
                products::module_extension(&alg, &action)
            }
            ProductSpec::Triangular(a) => {
                let alg = a.build::<T>();
                let reg = BimoduleAction::regular(&alg);
                let corner = CornerModule {
                    dim: alg.dim(),
                    left: reg.left_tensor().to_vec(),
                    right: reg.right_tensor().to_vec(),
                };
                products::triangular(&alg, &alg, &corner)
            }
            ProductSpec::ThetaLau { a, u, character } => {
                products::theta_lau(&a.build(), &u.build(), &pick_character(a, *character)?)
            }
            ProductSpec::Unitization(u) => Ok(products::unitization(&u.build())),
            ProductSpec::AlphaZero(a, u) => {
                let (a, u) = (a.build::<T>(), u.build::<T>());
                products::alpha_product(&a, &u, &Matrix::zeros(a.dim(), u.dim()))
            }
            ProductSpec::AlphaIdentity(a) => {
                let a = a.build::<T>();
                products::alpha_product(&a, &a, &Matrix::identity(a.dim()))
            }
        })
    }

    /// The algebra playing the role of `A`, when it is one of the recipe's
    /// operands verbatim.
    pub fn algebra_part(&self) -> Option<&AlgebraSpec> {
        match self {
            ProductSpec::Direct(a, _)
            | ProductSpec::Regular(a)
            | ProductSpec::ModuleExtension(a, _)
            | ProductSpec::ThetaLau { a, .. }
            | ProductSpec::AlphaZero(a, _)
            | ProductSpec::AlphaIdentity(a) => Some(a),
            ProductSpec::Triangular(_) | ProductSpec::Unitization(_) => None,
        }
    }

    pub fn shrink(&self) -> Vec<ProductSpec> {
        use ProductSpec::*;
        let mut out = Vec::new();
        match self {
            Direct(a, u) => {
                out.extend(a.shrink().into_iter().map(|s| Direct(s, u.clone())));
                out.extend(u.shrink().into_iter().map(|s| Direct(a.clone(), s)));
            }
            Regular(a) => out.extend(a.shrink().into_iter().map(Regular)),
            ModuleExtension(a, act) => {
                if let ActionSpec::Trivial(m) = act {
                    if *m > 1 {
                        out.push(ModuleExtension(a.clone(), ActionSpec::Trivial(m - 1)));
                    }
                }
                if let ActionSpec::Scalar { character, dim } = act {
                    if *dim > 1 {
                        out.push(ModuleExtension(
                            a.clone(),
                            ActionSpec::Scalar {
                                character: *character,
                                dim: dim - 1,
                            },
                        ));
                    }
                }
                out.extend(a.shrink().into_iter().map(|s| ModuleExtension(s, act.clone())));
            }
            Triangular(a) => out.extend(a.shrink().into_iter().map(Triangular)),
            ThetaLau { a, u, character } => {
                out.extend(a.shrink().into_iter().map(|s| ThetaLau {
                    a: s,
                    u: u.clone(),
                    character: *character,
                }));
                out.extend(u.shrink().into_iter().map(|s| ThetaLau {
                    a: a.clone(),
                    u: s,
                    character: *character,
                }));
            }
            Unitization(u) => out.extend(u.shrink().into_iter().map(Unitization)),
            AlphaZero(a, u) => {
                out.extend(a.shrink().into_iter().map(|s| AlphaZero(s, u.clone())));
                out.extend(u.shrink().into_iter().map(|s| AlphaZero(a.clone(), s)));
            }
            AlphaIdentity(a) => out.extend(a.shrink().into_iter().map(AlphaIdentity)),
        }
        out
    }
}

/// One generated instance: a product recipe, optionally followed by a random
/// change of basis on both factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CaseSpec {
    pub product: ProductSpec,
    pub basis_change: Option<u64>,
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.basis_change {
            Some(seed) => write!(f, "basis-change({seed}, {})", self.product),
            None => write!(f, "{}", self.product),
        }
    }
}

/// A built instance together with the ideal decomposition of `A` known from
/// its recipe.
pub struct Instance<T: Field> {
    pub spec: CaseSpec,
    pub product: SemidirectAlgebra<T>,
    pub ideal_split: Option<(Subspace<T>, Subspace<T>)>,
}

impl CaseSpec {
    /// Draws a recipe with `dim A, dim U <= max_dim`.
    pub fn generate(seed: u64, max_dim: usize) -> CaseSpec {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pool = AlgebraSpec::pool(max_dim.max(1));
        let pick = |rng: &mut ChaCha8Rng, limit: usize| -> AlgebraSpec {
            let fits: Vec<&AlgebraSpec> = pool.iter().filter(|s| s.dim() <= limit).collect();
            (*fits.choose(rng).expect("the pool contains scalar")).clone()
        };
        let with_characters: Vec<&AlgebraSpec> = pool.iter().filter(|s| s.character_count() > 0).collect();
        let a = pick(&mut rng, max_dim);
        let product = match rng.gen_range(0..9) {
            0 => ProductSpec::Direct(a, pick(&mut rng, max_dim)),
            1 => ProductSpec::Regular(a),
            2 => {
                let act = match rng.gen_range(0..5) {
                    0 => ActionSpec::Regular,
                    1 => ActionSpec::LeftRegular,
                    2 => ActionSpec::RightRegular,
                    3 => ActionSpec::Trivial(rng.gen_range(1..=max_dim)),
                    _ => {
                        let chars = a.character_count();
                        if chars == 0 {
                            ActionSpec::Regular
                        } else {
                            ActionSpec::Scalar {
                                character: rng.gen_range(0..chars),
                                dim: rng.gen_range(1..=max_dim),
                            }
                        }
                    }
                };
                ProductSpec::ModuleExtension(a, act)
            }
            3 => ProductSpec::Triangular(pick(&mut rng, (max_dim / 2).max(1))),
            4 | 5 => {
                let a = (*with_characters.choose(&mut rng).expect("scalar has a character")).clone();
                let character = rng.gen_range(0..a.character_count());
                ProductSpec::ThetaLau {
                    a,
                    u: pick(&mut rng, max_dim),
                    character,
                }
            }
            6 => ProductSpec::Unitization(pick(&mut rng, max_dim)),
            7 => ProductSpec::AlphaZero(a, pick(&mut rng, max_dim)),
            _ => ProductSpec::AlphaIdentity(a),
        };
        let basis_change = rng.gen_bool(0.5).then(|| rng.gen());
        CaseSpec { product, basis_change }
    }

    /// `None` when the recipe is not realizable.
    pub fn build<T: Field>(&self) -> Option<Result<Instance<T>>> {
        let built = self.product.build::<T>()?;
        Some(built.and_then(|p| {
            let mut split = self.product.algebra_part().and_then(|a| a.ideal_split::<T>());
            let product = match self.basis_change {
                None => p,
                Some(seed) => {
                    let pa = random_invertible::<T>(p.n(), seed);
                    let qu = random_invertible::<T>(p.m(), seed.wrapping_add(1));
                    if let (Some((i1, i2)), Some(inv)) = (split.take(), pa.inverse()) {
                        split = Some((i1.map_through(&inv)?, i2.map_through(&inv)?));
                    }
                    p.change_basis(&pa, &qu)?
                }
            };
            Ok(Instance {
                spec: self.clone(),
                product: product.with_name(self.to_string()),
                ideal_split: split,
            })
        }))
    }

    pub fn shrink(&self) -> Vec<CaseSpec> {
        let mut out = Vec::new();
        if self.basis_change.is_some() {
            out.push(CaseSpec {
                product: self.product.clone(),
                basis_change: None,
            });
        }
        out.extend(self.product.shrink().into_iter().map(|product| CaseSpec {
            product,
            basis_change: self.basis_change,
        }));
        out
    }
}

/// Small rational used for random entries: mostly integers in `-2..=2`,
/// sometimes halves.
fn small_rational<T: Field>(rng: &mut ChaCha8Rng) -> T {
    let num = T::from_int(rng.gen_range(-2..=2));
    if rng.gen_bool(0.2) {
        num / T::from_int(2)
    } else {
        num
    }
}

/// A random `rows x cols` matrix with small rational entries.
pub fn random_matrix<T: Field>(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<T> {
    let data = (0..rows * cols).map(|_| small_rational(rng)).collect();
    Matrix::from_vec(rows, cols, data).expect("sized data")
}

/// A deterministic random invertible `n x n` matrix.
pub fn random_invertible<T: Field>(n: usize, seed: u64) -> Matrix<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = random_matrix(n, n, &mut rng);
        if m.rank() == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn pool_members_validate_and_characters_hold() {
        for spec in AlgebraSpec::pool(3) {
            let a: Algebra<Q> = spec.build();
            assert!(a.validate().is_valid(), "{spec}");
            assert_eq!(a.dim(), spec.dim());
            for c in spec.characters::<Q>() {
                assert!(Character::new(c).is_valid(&a), "{spec}");
            }
            let changed = AlgebraSpec::BasisChange {
                base: Box::new(spec.clone()),
                seed: 9,
            };
            let b: Algebra<Q> = changed.build();
            assert!(b.validate().is_valid(), "{changed}");
            for c in changed.characters::<Q>() {
                assert!(Character::new(c).is_valid(&b), "{changed}");
            }
        }
    }

    #[test]
    fn ideal_splits_are_ideals() {
        let spec = AlgebraSpec::BasisChange {
            base: Box::new(AlgebraSpec::DirectSum(
                Box::new(AlgebraSpec::DualNumbers),
                Box::new(AlgebraSpec::Matrix(1)),
            )),
            seed: 4,
        };
        let a: Algebra<Q> = spec.build();
        let (i1, i2) = spec.ideal_split::<Q>().unwrap();
        assert!(a.is_ideal(&i1).unwrap() && a.is_ideal(&i2).unwrap());
        assert_eq!(i1.dim() + i2.dim(), 3);
        assert!(i1.intersect(&i2).unwrap().is_zero());
    }

    #[test]
    fn generated_cases_build_within_bounds() {
        for seed in 0..300 {
            let case = CaseSpec::generate(seed, 3);
            let inst = case.build::<Q>().expect("generated recipes are realizable").unwrap();
            let p = &inst.product;
            assert!(p.n() <= 3 && p.m() <= 3, "{case}");
            assert!(p.total().validate().is_valid(), "{case}");
            assert_eq!(CaseSpec::generate(seed, 3), case);
        }
    }

    #[test]
    fn shrinking_reaches_smaller_cases() {
        let case = CaseSpec {
            product: ProductSpec::Direct(AlgebraSpec::Triangular(2), AlgebraSpec::Null(3)),
            basis_change: Some(1),
        };
        let smaller = case.shrink();
        assert!(smaller.iter().any(|c| c.basis_change.is_none()));
        assert!(smaller
            .iter()
            .any(|c| c.product == ProductSpec::Direct(AlgebraSpec::Triangular(2), AlgebraSpec::Null(2))));
    }
}
