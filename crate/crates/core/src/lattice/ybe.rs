//! Exact Yang-Baxter check: R_{ab}(z₁/z₂, t) L_{aj}(z₁) L_{bj}(z₂) equals
//! L_{bj}(z₂) L_{aj}(z₁) R_{ab}(z₁/z₂, t) as 8×8 rational matrices.
//!
//! The three lines a, b, j are packed into one index 4a + 2b + j, and every
//! operator is embedded as identity on the line it does not touch.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

use super::weights::{l_weight, r_weight, LKind, OperatorParams, Variant, WeightFixture};

/// First entry (in row-major order) at which the two sides differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YbeMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for YbeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): {} vs {}",
            self.row, self.col, self.lhs, self.rhs
        )
    }
}

fn unpack(i: usize) -> (u8, u8, u8) {
    (((i >> 2) & 1) as u8, ((i >> 1) & 1) as u8, (i & 1) as u8)
}

/// L on lines (a, j), identity on b.
fn l_on_a(params: &OperatorParams<Rational>) -> Result<RatMatrix> {
    let mut m = RatMatrix::from_fn(8, |_, _| Rational::zero());
    for row in 0..8 {
        let (a_out, b_out, j_out) = unpack(row);
        for col in 0..8 {
            let (a_in, b_in, j_in) = unpack(col);
            if b_in != b_out {
                continue;
            }
            let w = l_weight(LKind::First, Variant::Plain, a_in, j_in, a_out, j_out, params, 1)?;
            m.set(row, col, w);
        }
    }
    Ok(m)
}

/// L on lines (b, j), identity on a.
fn l_on_b(params: &OperatorParams<Rational>) -> Result<RatMatrix> {
    let mut m = RatMatrix::from_fn(8, |_, _| Rational::zero());
    for row in 0..8 {
        let (a_out, b_out, j_out) = unpack(row);
        for col in 0..8 {
            let (a_in, b_in, j_in) = unpack(col);
            if a_in != a_out {
                continue;
            }
            let w = l_weight(LKind::First, Variant::Plain, b_in, j_in, b_out, j_out, params, 1)?;
            m.set(row, col, w);
        }
    }
    Ok(m)
}

/// R on lines (a, b), identity on j.
fn r_on_ab(ratio: &Rational, t: &Rational) -> Result<RatMatrix> {
    let mut m = RatMatrix::from_fn(8, |_, _| Rational::zero());
    for row in 0..8 {
        let (a_out, b_out, j_out) = unpack(row);
        for col in 0..8 {
            let (a_in, b_in, j_in) = unpack(col);
            if j_in != j_out {
                continue;
            }
            m.set(row, col, r_weight(a_in, b_in, a_out, b_out, ratio, t)?);
        }
    }
    Ok(m)
}

fn first_mismatch(lhs: &RatMatrix, rhs: &RatMatrix) -> Option<YbeMismatch> {
    for row in 0..lhs.n() {
        for col in 0..lhs.n() {
            if lhs.get(row, col) != rhs.get(row, col) {
                return Some(YbeMismatch {
                    row,
                    col,
                    lhs: lhs.get(row, col).clone(),
                    rhs: rhs.get(row, col).clone(),
                });
            }
        }
    }
    None
}

/// `None` when the relation holds exactly at (z₁, z₂, t); otherwise the
/// first differing entry. All three parameters must be nonzero.
pub fn check_yang_baxter(
    z1: &Rational,
    z2: &Rational,
    t: &Rational,
) -> Result<Option<YbeMismatch>> {
    check_yang_baxter_with_fixture(z1, z2, t, WeightFixture::Reference)
}

pub fn check_yang_baxter_with_fixture(
    z1: &Rational,
    z2: &Rational,
    t: &Rational,
    fixture: WeightFixture,
) -> Result<Option<YbeMismatch>> {
    if t.is_zero() {
        return Err(Error::NonInvertible("t"));
    }
    let p1 = OperatorParams::new(z1.clone(), t.clone())?.with_weight_fixture(fixture);
    let p2 = OperatorParams::new(z2.clone(), t.clone())?.with_weight_fixture(fixture);
    let ratio = z1 * &z2.inv().ok_or(Error::NonInvertible("z"))?;
    let l1 = l_on_a(&p1)?;
    let l2 = l_on_b(&p2)?;
    let r = r_on_ab(&ratio, t)?;
    let lhs = r.mul(&l1).mul(&l2);
    let rhs = l2.mul(&l1).mul(&r);
    Ok(first_mismatch(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn holds_at_generic_points() {
        assert_eq!(check_yang_baxter(&q(2, 1), &q(3, 1), &q(5, 1)).unwrap(), None);
        assert_eq!(check_yang_baxter(&q(1, 2), &q(7, 1), &q(-2, 3)).unwrap(), None);
        assert_eq!(check_yang_baxter(&q(-4, 9), &q(11, 5), &q(13, 3)).unwrap(), None);
    }

    #[test]
    fn dropping_r_breaks_it() {
        // The two L-products alone do not commute at a generic point.
        let p1 = OperatorParams::new(q(2, 1), q(5, 1)).unwrap();
        let p2 = OperatorParams::new(q(3, 1), q(5, 1)).unwrap();
        let l1 = l_on_a(&p1).unwrap();
        let l2 = l_on_b(&p2).unwrap();
        let lhs = l1.mul(&l2);
        let rhs = l2.mul(&l1);
        assert!(first_mismatch(&lhs, &rhs).is_some());
    }

    #[test]
    fn corrupted_weight_breaks_it() {
        let bad = check_yang_baxter_with_fixture(
            &q(2, 1),
            &q(3, 1),
            &q(5, 1),
            WeightFixture::CorruptedFirstL,
        )
        .unwrap();
        let mismatch = bad.expect("corrupted table must fail");
        assert_ne!(mismatch.lhs, mismatch.rhs);
    }

    #[test]
    fn zero_parameters_are_rejected() {
        assert!(check_yang_baxter(&Rational::zero(), &q(3, 1), &q(5, 1)).is_err());
        assert!(check_yang_baxter(&q(2, 1), &Rational::zero(), &q(5, 1)).is_err());
        assert!(check_yang_baxter(&q(2, 1), &q(3, 1), &Rational::zero()).is_err());
    }
}
