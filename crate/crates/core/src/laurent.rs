//! Sparse Laurent polynomials in one variable t over [`Rational`].
//!
//! Terms live in a `BTreeMap<i64, Rational>` keyed by exponent, and the map
//! never stores a zero coefficient, so structural equality is value equality
//! and `exponent_range` reads the two ends of the map. Units of this ring
//! are exactly the single-term elements c·t^k with c ≠ 0, which is why a
//! symbolic t can stand in for an invertible parameter.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentT {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentT {
    pub fn zero() -> Self {
        LaurentT { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentT::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentT::monomial(c, 0)
    }

    pub fn monomial(coeff: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentT { terms }
    }

    /// The generator t.
    pub fn t() -> Self {
        LaurentT::monomial(Rational::one(), 1)
    }

    /// t^{-1}.
    pub fn t_inv() -> Self {
        LaurentT::monomial(Rational::one(), -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending-exponent iteration over the nonzero terms.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn accumulate(&mut self, exp: i64, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Exact value at `t = t0`. Signals when `t0 = 0` meets a negative
    /// exponent; the constant term is the value at zero otherwise.
    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        if t0.is_zero() {
            if self.terms.keys().next().is_some_and(|&min| min < 0) {
                return Err(Error::EvalAtZeroWithPoles);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            acc = &acc + &(c * &t0.pow(e));
        }
        Ok(acc)
    }

    /// `(lowest, highest)` exponent; signals on the zero polynomial.
    pub fn exponent_range(&self) -> Result<(i64, i64)> {
        let min = self.terms.keys().next().ok_or(Error::ZeroPolynomial)?;
        let max = self.terms.keys().next_back().ok_or(Error::ZeroPolynomial)?;
        Ok((*min, *max))
    }
}

impl Add<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn add(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.accumulate(e, c);
        }
        out
    }
}

impl Sub<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn sub(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.accumulate(e, &-c);
        }
        out
    }
}

impl Mul<&LaurentT> for &LaurentT {
    type Output = LaurentT;
    fn mul(self, rhs: &LaurentT) -> LaurentT {
        let mut out = LaurentT::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.accumulate(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentT {
    type Output = LaurentT;
    fn neg(self) -> LaurentT {
        LaurentT {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentT> for LaurentT {
            type Output = LaurentT;
            fn $method(self, rhs: LaurentT) -> LaurentT {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentT> for LaurentT {
            type Output = LaurentT;
            fn $method(self, rhs: &LaurentT) -> LaurentT {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentT> for &LaurentT {
            type Output = LaurentT;
            fn $method(self, rhs: LaurentT) -> LaurentT {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentT {
    type Output = LaurentT;
    fn neg(self) -> LaurentT {
        -&self
    }
}

/// Canonical text form: descending exponents, each term as `c*t^k`,
/// joined by ` + `. The zero polynomial prints as `0`.
impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar for LaurentT {
    fn zero() -> Self {
        LaurentT::zero()
    }

    fn one() -> Self {
        LaurentT::one()
    }

    fn is_zero(&self) -> bool {
        LaurentT::is_zero(self)
    }

    /// Only monomials are units: (c·t^k)^{-1} = c^{-1}·t^{-k}.
    fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().expect("single term");
        Some(LaurentT::monomial(c.inv()?, -e))
    }

    fn from_rational(r: &Rational) -> Self {
        LaurentT::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn no_zero_terms_survive() {
        let p = LaurentT::monomial(q(1, 2), 3);
        let sum = &p - &p;
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
        let cancel = &(&LaurentT::t() + &LaurentT::one()) - &LaurentT::t();
        assert_eq!(cancel, LaurentT::one());
    }

    #[test]
    fn mul_and_display() {
        // (t + t^{-1})^2 = t^2 + 2 + t^{-2}
        let p = &LaurentT::t() + &LaurentT::t_inv();
        let sq = &p * &p;
        assert_eq!(sq.coeff(2), Rational::one());
        assert_eq!(sq.coeff(0), Rational::from_int(2));
        assert_eq!(sq.coeff(-2), Rational::one());
        assert_eq!(sq.to_string(), "1*t^2 + 2*t^0 + 1*t^-2");
        assert_eq!(LaurentT::zero().to_string(), "0");
    }

    #[test]
    fn eval_matches_substitution() {
        let p = LaurentT::monomial(q(3, 1), 2); // 3t^2 - t^{-1}
        let p = &p - &LaurentT::monomial(Rational::one(), -1);
        let t0 = q(2, 3);
        let expected = &(&q(3, 1) * &t0.pow(2)) - &t0.pow(-1);
        assert_eq!(p.eval(&t0).unwrap(), expected);
    }

    #[test]
    fn eval_at_zero() {
        let poly = &LaurentT::t() + &LaurentT::constant(q(5, 1));
        assert_eq!(poly.eval(&Rational::zero()).unwrap(), q(5, 1));
        let pole = &poly + &LaurentT::t_inv();
        assert_eq!(pole.eval(&Rational::zero()), Err(Error::EvalAtZeroWithPoles));
    }

    #[test]
    fn exponent_range_and_zero_signal() {
        let p = &LaurentT::monomial(q(1, 1), -3) + &LaurentT::t();
        assert_eq!(p.exponent_range().unwrap(), (-3, 1));
        assert_eq!(LaurentT::zero().exponent_range(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn units_are_monomials() {
        let m = LaurentT::monomial(q(2, 3), -4);
        let inv = Scalar::inv(&m).unwrap();
        assert_eq!(&m * &inv, LaurentT::one());
        let p = &LaurentT::t() + &LaurentT::one();
        assert!(Scalar::inv(&p).is_none());
        assert!(Scalar::inv(&LaurentT::zero()).is_none());
    }
}
