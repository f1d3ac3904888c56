//! Ring abstraction shared by the exact scalar types.
//!
//! Lattice weights, state-vector contractions and deformation factors are
//! written once over `Scalar` and run either over [`Rational`] (numeric
//! points) or [`crate::laurent::LaurentT`] (symbolic t). The trait is a
//! commutative ring with a partial inverse: `inv` answers for the ring's
//! units only, which is exactly what the operator constructors need to
//! reject z = 0 or a non-unit t.
//!
//! Arithmetic goes through references. Trait-level `where` clauses are not
//! implied at use sites, so generic items repeat the one-line bound
//! `for<'a> &'a S: RefOps<S>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// By-reference ring operations producing owned values; `&'a S: RefOps<S>`
/// is the bound every generic scalar consumer states.
pub trait RefOps<Base>:
    Sized
    + Add<Self, Output = Base>
    + Sub<Self, Output = Base>
    + Mul<Self, Output = Base>
    + Neg<Output = Base>
{
}

impl<R, Base> RefOps<Base> for R where
    R: Sized
        + Add<R, Output = Base>
        + Sub<R, Output = Base>
        + Mul<R, Output = Base>
        + Neg<Output = Base>
{
}

pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Sized
where
    for<'a> &'a Self: RefOps<Self>,
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse for units of the ring, `None` otherwise.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    /// Integer power by repeated squaring; x^0 = 1 for every x.
    /// Negative exponents require a unit and panic otherwise.
    fn pow(&self, e: i64) -> Self {
        if e < 0 {
            let inv = self.inv().expect("negative power of a non-unit scalar");
            return inv.pow(e.checked_neg().expect("exponent overflow"));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}
