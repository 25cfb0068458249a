//! The scalar field every structure in this crate is generic over.

use std::fmt;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field.
///
/// Canonical subspace bases are compared bit-for-bit, so equality on the
/// scalar type must be exact. Floating-point types deliberately do not
/// implement this trait.
pub trait Field:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Num
    + Signed
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// `self += a * b` without cloning the operands.
    fn add_mul_assign(&mut self, a: &Self, b: &Self);

    /// `self -= a * b` without cloning the operands.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self);

    fn mul_ref(&self, other: &Self) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every exact field contains the integers")
    }
}

macro_rules! impl_field_for_ratio {
    ($($int:ty),*) => {$(
        impl Field for Ratio<$int> {
            #[inline]
            fn add_mul_assign(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }

            #[inline]
            fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
                *self -= a * b;
            }

            #[inline]
            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
        }
    )*};
}

impl_field_for_ratio!(BigInt, i64, i128);

/// Dot product of two equal-length slices.
pub fn dot<T: Field>(x: &[T], y: &[T]) -> T {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = T::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc.add_mul_assign(a, b);
        }
    }
    acc
}

/// The `i`-th standard basis vector of length `dim`.
pub fn unit_vector<T: Field>(dim: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); dim];
    v[i] = T::one();
    v
}

pub fn is_zero_vector<T: Field>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += scale * v`, skipping zero entries.
pub fn axpy<T: Field>(acc: &mut [T], scale: &T, v: &[T]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            a.add_mul_assign(scale, b);
        }
    }
}

/// Renders a vector as `[a, b, c]` using the scalar's `Display`.
pub fn format_vector<T: Field>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let x = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let zero = BigRational::from_int(0);
        assert_eq!(zero.denom(), &BigInt::from(1));
    }

    #[test]
    fn fused_updates() {
        let mut acc = BigRational::from_int(1);
        acc.add_mul_assign(&BigRational::new(1.into(), 3.into()), &BigRational::from_int(3));
        assert_eq!(acc, BigRational::from_int(2));
        acc.sub_mul_assign(&BigRational::from_int(2), &BigRational::from_int(2));
        assert_eq!(acc, BigRational::from_int(-2));
    }

    #[test]
    fn small_ratio_types_are_fields() {
        let v: Vec<Ratio<i64>> = unit_vector(3, 1);
        assert_eq!(dot(&v, &v), Ratio::from_int(1));
        assert_eq!(format_vector(&v), "[0, 1, 0]");
    }
}
