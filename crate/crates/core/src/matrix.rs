//! Dense square matrices over [`Rational`] with an exact determinant.
//!
//! The determinant clears each row's denominators (tracking the extracted
//! factor), runs Bareiss fraction-free elimination over `BigInt` — every
//! interior division is exact — and divides the factor back out at the end.
//! The empty matrix has determinant 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    n: usize,
    a: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::invalid(
                "matrix entries",
                format!("expected {} entries for a {n}x{n} matrix, got {}", n * n, entries.len()),
            ));
        }
        Ok(RatMatrix { n, a: entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        RatMatrix { n, a }
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.a[i * self.n + j] = v;
    }

    /// Matrix product; panics on size mismatch.
    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        RatMatrix::from_fn(self.n, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.n {
                acc = &acc + &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        if n == 0 {
            return Rational::one();
        }
        // Integerize: scale row i by the lcm of its denominators.
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                l = l.lcm(self.get(i, j).denom());
            }
            let row = (0..n)
                .map(|j| {
                    let e = self.get(i, j);
                    e.numer() * (&l / e.denom())
                })
                .collect();
            scale *= &l;
            m.push(row);
        }

        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Rational::zero();
                };
                m.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact by Sylvester's identity
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].clone();
        if sign < 0 {
            det = -det;
        }
        Rational::from_bigints(det, scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn int_matrix(n: usize, rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_fn(n, |i, j| Rational::from_int(rows[i][j]))
    }

    /// Independent oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &RatMatrix) -> Rational {
        let n = m.n();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor = RatMatrix::from_fn(n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * &det_cofactor(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn empty_matrix_det_is_one() {
        assert_eq!(RatMatrix::from_fn(0, |_, _| Rational::zero()).det(), Rational::one());
    }

    #[test]
    fn vandermonde_1_2_3() {
        let m = RatMatrix::from_fn(3, |i, j| Rational::from_int((i as i64 + 1).pow(j as u32)));
        assert_eq!(m.det(), Rational::from_int(2));
    }

    #[test]
    fn singular_matrix() {
        let m = int_matrix(3, &[&[1, 2, 3], &[2, 4, 6], &[7, 8, 9]]);
        assert_eq!(m.det(), Rational::zero());
    }

    #[test]
    fn pivoting_handles_zero_diagonal() {
        let m = int_matrix(3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(m.det(), Rational::from_int(-1));
    }

    #[test]
    fn rational_entries() {
        let m = RatMatrix::new(2, vec![q(1, 2), q(1, 3), q(1, 5), q(1, 7)]).unwrap();
        assert_eq!(m.det(), &(&q(1, 2) * &q(1, 7)) - &(&q(1, 3) * &q(1, 5)));
    }

    #[test]
    fn matches_cofactor_oracle_on_seeded_matrices() {
        // Small deterministic pseudo-random integer matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..20 {
            let m = RatMatrix::from_fn(4, |_, _| Rational::from_int((next() % 19) as i64 - 9));
            assert_eq!(m.det(), det_cofactor(&m));
        }
    }

    #[test]
    fn mul_identity() {
        let m = int_matrix(2, &[&[3, 4], &[5, 6]]);
        assert_eq!(m.mul(&RatMatrix::identity(2)), m);
    }
}
