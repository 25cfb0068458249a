//! Standard small algebras used as building blocks and fixtures.

use crate::algebra::Algebra;
use crate::scalar::Field;

/// `Q` itself: one basis vector `e` with `e e = e`.
pub fn scalar<T: Field>() -> Algebra<T> {
    Algebra::from_entries("Q", 1, [(0, 0, 0, T::one())]).expect("valid entries")
}

/// `Q[t]/(t^2)` with basis `1, t`.
pub fn dual_numbers<T: Field>() -> Algebra<T> {
    let one = T::one;
    Algebra::from_entries("dual", 2, [(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one())]).expect("valid entries")
}

/// `M_k(Q)` with matrix units `E_rs` in row-major order (`E_rs` has index `r*k + s`).
pub fn matrix<T: Field>(k: usize) -> Algebra<T> {
    let idx = |r: usize, s: usize| r * k + s;
    let mut entries = Vec::new();
    for r in 0..k {
        for s in 0..k {
            for t in 0..k {
                entries.push((idx(r, s), idx(s, t), idx(r, t), T::one()));
            }
        }
    }
    Algebra::from_entries(format!("M{k}"), k * k, entries).expect("valid entries")
}

/// Upper-triangular `k x k` matrices with basis `E_rs`, `r <= s`, row by row.
pub fn upper_triangular<T: Field>(k: usize) -> Algebra<T> {
    let units: Vec<(usize, usize)> = (0..k).flat_map(|r| (r..k).map(move |s| (r, s))).collect();
    let index = |r: usize, s: usize| units.iter().position(|&u| u == (r, s)).expect("upper-triangular unit");
    let mut entries = Vec::new();
    for &(r, s) in &units {
        for t in s..k {
            entries.push((index(r, s), index(s, t), index(r, t), T::one()));
        }
    }
    Algebra::from_entries(format!("T{k}"), units.len(), entries).expect("valid entries")
}

/// The `m`-dimensional algebra with all products zero.
pub fn null<T: Field>(m: usize) -> Algebra<T> {
    Algebra::null(format!("null{m}"), m)
}

/// The group algebra of the cyclic group of order `k`, basis `g^0, ..., g^(k-1)`.
pub fn cyclic_group<T: Field>(k: usize) -> Algebra<T> {
    let entries = (0..k).flat_map(|i| (0..k).map(move |j| (i, j, (i + j) % k, T::one())));
    Algebra::from_entries(format!("C{k}"), k, entries.collect::<Vec<_>>()).expect("valid entries")
}

/// `A x B` with componentwise multiplication; `A` occupies the first coordinates.
pub fn direct_sum<T: Field>(a: &Algebra<T>, b: &Algebra<T>) -> Algebra<T> {
    let (n, m) = (a.dim(), b.dim());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c.clone()));
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for (k, c) in b.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    entries.push((n + i, n + j, n + k, c.clone()));
                }
            }
        }
    }
    Algebra::from_entries(format!("{}x{}", a.name(), b.name()), n + m, entries).expect("valid entries")
}

/// Coordinates of the identity matrix in [`matrix`]`(k)`.
pub fn matrix_identity<T: Field>(k: usize) -> Vec<T> {
    let mut v = vec![T::zero(); k * k];
    for r in 0..k {
        v[r * k + r] = T::one();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn library_algebras_are_associative() {
        let algebras: Vec<Algebra<Q>> = vec![
            scalar(),
            dual_numbers(),
            matrix(1),
            matrix(2),
            matrix(3),
            upper_triangular(2),
            upper_triangular(3),
            null(3),
            cyclic_group(3),
            cyclic_group(4),
            direct_sum(&matrix(2), &dual_numbers()),
        ];
        for a in algebras {
            assert!(a.validate().is_valid(), "{} is not associative", a.name());
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(matrix::<Q>(2).dim(), 4);
        assert_eq!(upper_triangular::<Q>(3).dim(), 6);
        assert_eq!(direct_sum(&scalar::<Q>(), &null(2)).dim(), 3);
    }

    #[test]
    fn matrix_units_multiply() {
        let m2 = matrix::<Q>(2);
        // E12 E21 = E11
        assert_eq!(m2.basis_product(1, 2), &[Q::from_int(1), Q::from_int(0), Q::from_int(0), Q::from_int(0)]);
        // E21 E21 = 0
        assert!(m2.basis_product(2, 2).iter().all(|x| *x == Q::from_int(0)));
        let id = matrix_identity::<Q>(2);
        assert_eq!(m2.mul(&id, &id), id);
    }

    #[test]
    fn upper_triangular_units() {
        let t2 = upper_triangular::<Q>(2);
        // basis E11, E12, E22: E11 E12 = E12, E12 E22 = E12, E12 E11 = 0
        assert_eq!(t2.basis_product(0, 1), &[Q::from_int(0), Q::from_int(1), Q::from_int(0)]);
        assert_eq!(t2.basis_product(1, 2), &[Q::from_int(0), Q::from_int(1), Q::from_int(0)]);
        assert!(t2.basis_product(1, 0).iter().all(|x| *x == Q::from_int(0)));
    }
}
