//! Exact integer scalars.
//!
//! Everything downstream of the root-system layer is generic over an integer
//! type implementing [`Int`]. `BigInt` is the default everywhere; `i64` and
//! `i128` are accepted for callers who know their inputs stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed, Euclidean integer type.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Rationals over an [`Int`].
pub type Rat<T> = Ratio<T>;

/// Lift a machine integer. Every [`Int`] we care about holds all of `i64`.
pub fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("scalar type must represent every i64")
}

/// Lift a slice of machine integers.
pub fn lift<T: Int>(v: &[i64]) -> Vec<T> {
    v.iter().map(|&x| int(x)).collect()
}

/// Narrow back to `i64`, if the value fits.
pub fn narrow<T: Int>(v: &[T]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

pub fn dot<T: Int>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn is_zero_vec<T: Int>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// gcd of all entries; zero for the zero vector.
pub fn content<T: Int>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |g, x| g.gcd(x))
}

/// Divide out the content. The zero vector is returned unchanged.
pub fn primitive<T: Int>(v: &[T]) -> Vec<T> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x.clone() / g.clone()).collect()
}

/// Scale a rational vector to the primitive integer vector on the same ray.
pub fn clear_denominators<T: Int>(v: &[Rat<T>]) -> Vec<T> {
    let l = v.iter().fold(T::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (l.clone() / x.denom().clone()))
        .collect();
    primitive(&scaled)
}
