//! Determinant side of the correspondences: symplectic Schur functions,
//! their factorial generalization, the Weyl-denominator factorization and
//! the deformation prefactor.
//!
//! Determinant conventions. Every determinant is N × N with row j the
//! variable z_j and column k the part index:
//!
//!   sp_λ({z}_N)      = det(z_j^{λ_k+N−k+1} − z_j^{−λ_k−N+k−1}) / det(z_j^{N−k+1} − z_j^{−N+k−1})
//!   fsp_λ({z}|{α})   = det(∏_{i=0}^{μ_k}(z_j+α_i) − ∏_{i=0}^{μ_k}(z_j^{-1}+α_i)) / same denominator,
//!                      μ = λ + (N−1, N−2, …, 0)
//!
//! The shared denominator factorizes as
//!
//!   det(z_j^{N−k+1} − z_j^{−N+k−1}) = (−1)^N ∏_j z_j^{j−1−N}(1−z_j²) ∏_{j<k}(1−z_jz_k)(1−z_jz_k^{-1})
//!
//! and the deformation prefactor multiplying sp in the correspondences is
//!
//!   D  = ∏_j z_j^{j−1−N}(1+tz_j²) ∏_{j<k}(1+tz_jz_k)(1+tz_jz_k^{-1})
//!   D′ = ∏_j z_j^{j−1−N}(1+t′z_j²) ∏_{j<k}(1+t′z_jz_k)(t′+z_jz_k^{-1}),   t′ = t^{-1}.

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;
use crate::scalar::{RefOps, Scalar};
use crate::young::YoungDiagram;

fn check_point(lam_len: usize, zs: &[Rational]) -> Result<()> {
    if lam_len != zs.len() {
        return Err(Error::SizeMismatch { left: lam_len, right: zs.len() });
    }
    if zs.iter().any(Rational::is_zero) {
        return Err(Error::NonInvertible("z"));
    }
    Ok(())
}

/// det(z_j^{λ_k+N−k+1} − z_j^{−λ_k−N+k−1}).
pub fn sp_numerator_det(lam: &YoungDiagram, zs: &[Rational]) -> Result<Rational> {
    check_point(lam.len(), zs)?;
    let n = zs.len() as i64;
    let m = RatMatrix::from_fn(zs.len(), |j, k| {
        let e = lam.parts()[k] as i64 + n - k as i64;
        &zs[j].pow(e) - &zs[j].pow(-e)
    });
    Ok(m.det())
}

/// det(z_j^{N−k+1} − z_j^{−N+k−1}).
pub fn weyl_denominator_det(zs: &[Rational]) -> Result<Rational> {
    sp_numerator_det(&YoungDiagram::empty(zs.len()), zs)
}

/// (−1)^N ∏_j z_j^{j−1−N}(1−z_j²) ∏_{j<k}(1−z_jz_k)(1−z_jz_k^{-1}).
pub fn weyl_denominator_factored(zs: &[Rational]) -> Result<Rational> {
    if zs.iter().any(Rational::is_zero) {
        return Err(Error::NonInvertible("z"));
    }
    let n = zs.len() as i64;
    let mut acc = if zs.len() % 2 == 0 { Rational::one() } else { -&Rational::one() };
    for (j, z) in zs.iter().enumerate() {
        let single = &Rational::one() - &(z * z);
        acc = &(&acc * &z.pow(j as i64 + 1 - 1 - n)) * &single;
    }
    for j in 0..zs.len() {
        for k in j + 1..zs.len() {
            let prod = &Rational::one() - &(&zs[j] * &zs[k]);
            let ratio = &Rational::one() - &(&zs[j] * &zs[k].pow(-1));
            acc = &(&acc * &prod) * &ratio;
        }
    }
    Ok(acc)
}

pub fn sp(lam: &YoungDiagram, zs: &[Rational]) -> Result<Rational> {
    let den = weyl_denominator_det(zs)?;
    if den.is_zero() {
        return Err(Error::DegeneratePoint("Weyl denominator vanishes"));
    }
    Ok(&sp_numerator_det(lam, zs)? / &den)
}

/// D (plain) or D′ (primed); primed requires an invertible t.
pub fn deformation_factor<S: Scalar>(zs: &[S], t: &S, primed: bool) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    let n = zs.len() as i64;
    let t_eff = if primed { t.inv().ok_or(Error::NonInvertible("t"))? } else { t.clone() };
    let one = S::one();
    let mut acc = one.clone();
    for (j, z) in zs.iter().enumerate() {
        if z.inv().is_none() {
            return Err(Error::NonInvertible("z"));
        }
        let single = &one + &(&t_eff * &(z * z));
        acc = &(&acc * &z.pow(j as i64 - n)) * &single;
    }
    for j in 0..zs.len() {
        for k in j + 1..zs.len() {
            let prod = &one + &(&t_eff * &(&zs[j] * &zs[k]));
            let cross = &zs[j] * &zs[k].pow(-1);
            let ratio = if primed { &t_eff + &cross } else { &one + &(&t_eff * &cross) };
            acc = &(&acc * &prod) * &ratio;
        }
    }
    Ok(acc)
}

/// det over entry (j, k) = ∏_{i=0}^{μ_k}(z_j + α_i) − ∏_{i=0}^{μ_k}(z_j^{-1} + α_i)
/// for strictly decreasing non-negative μ.
pub fn g_mu(mu: &[u32], zs: &[Rational], alphas: &[Rational]) -> Result<Rational> {
    check_point(mu.len(), zs)?;
    if mu.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::invalid("exponents", format!("not strictly decreasing: {mu:?}")));
    }
    if let Some(&top) = mu.first() {
        let needed = top as usize + 1;
        if alphas.len() < needed {
            return Err(Error::AlphaCount { needed, got: alphas.len() });
        }
    }
    let m = RatMatrix::from_fn(zs.len(), |j, k| {
        let z_inv = zs[j].pow(-1);
        let mut plus = Rational::one();
        let mut minus = Rational::one();
        for alpha in &alphas[..=mu[k] as usize] {
            plus = &plus * &(&zs[j] + alpha);
            minus = &minus * &(&z_inv + alpha);
        }
        &plus - &minus
    });
    Ok(m.det())
}

pub fn factorial_sp(lam: &YoungDiagram, zs: &[Rational], alphas: &[Rational]) -> Result<Rational> {
    let n = lam.len();
    let mu: Vec<u32> = (0..n).map(|k| lam.parts()[k] + (n - 1 - k) as u32).collect();
    let den = weyl_denominator_det(zs)?;
    if den.is_zero() {
        return Err(Error::DegeneratePoint("Weyl denominator vanishes"));
    }
    Ok(&g_mu(&mu, zs, alphas)? / &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lam(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_partition_gives_one() {
        assert_eq!(sp(&lam(&[]), &[]).unwrap(), Rational::one());
        assert_eq!(sp(&lam(&[0, 0]), &[q(2, 1), q(3, 1)]).unwrap(), Rational::one());
        assert_eq!(sp(&lam(&[0, 0, 0]), &[q(2, 1), q(5, 7), q(-3, 2)]).unwrap(), Rational::one());
    }

    #[test]
    fn single_variable_single_box() {
        // sp_{(1)}(z) = z + 1/z.
        assert_eq!(sp(&lam(&[1]), &[q(2, 1)]).unwrap(), q(5, 2));
        assert_eq!(sp(&lam(&[1]), &[q(3, 5)]).unwrap(), q(34, 15));
        // sp_{(x̄−1)}(z) = (z^x̄ − z^{−x̄})/(z − z^{−1}).
        let z = q(5, 7);
        let direct = &(&z.pow(3) - &z.pow(-3)) / &(&z - &z.pow(-1));
        assert_eq!(sp(&lam(&[2]), &[z]).unwrap(), direct);
    }

    #[test]
    fn weyl_determinant_factorizes() {
        let pool = [q(2, 1), q(3, 1), q(5, 2), q(-7, 3)];
        for n in 1..=4 {
            let zs = &pool[..n];
            assert_eq!(
                weyl_denominator_det(zs).unwrap(),
                weyl_denominator_factored(zs).unwrap(),
                "N = {n}",
            );
        }
        assert_eq!(weyl_denominator_det(&[Rational::one()]).unwrap(), Rational::zero());
        assert_eq!(weyl_denominator_factored(&[Rational::one()]).unwrap(), Rational::zero());
    }

    #[test]
    fn deformation_factor_small_cases() {
        // N = 1: 1/z + tz.
        assert_eq!(
            deformation_factor(&[q(2, 1)], &q(3, 1), false).unwrap(),
            q(13, 2),
        );
        // t = 0 leaves the monomial prefactor.
        assert_eq!(
            deformation_factor(&[q(2, 1), q(3, 1)], &Rational::zero(), false).unwrap(),
            q(1, 12),
        );
        // N = 2 at (2, 3, 5): 2^{-2}·3^{-1}·(1+20)(1+45)(1+30)(1+10/3); equals
        // the M = N = 2 wavefunction with both particles packed left.
        assert_eq!(
            deformation_factor(&[q(2, 1), q(3, 1)], &q(5, 1), false).unwrap(),
            q(64883, 6),
        );
    }

    #[test]
    fn primed_deformation_factor() {
        // N = 1: 1/z + z/t at (2, 3) → 1/2 + 2/3.
        assert_eq!(deformation_factor(&[q(2, 1)], &q(3, 1), true).unwrap(), q(7, 6));
        assert_eq!(
            deformation_factor(&[q(2, 1)], &Rational::zero(), true).unwrap_err(),
            Error::NonInvertible("t"),
        );
        // N = 2 cross factor is (t′ + z_1/z_2), not (1 + t′z_1/z_2):
        // D′(2, 3 | t = 3) = (1/12)·(1 + 4/3)(1 + 3)·(1 + 2)(1/3 + 2/3) = 7/3.
        let d = deformation_factor(&[q(2, 1), q(3, 1)], &q(3, 1), true).unwrap();
        assert_eq!(d, q(7, 3));
    }

    #[test]
    fn g_mu_entries() {
        // μ = (0): the α_0 terms cancel.
        let a = q(9, 4);
        assert_eq!(g_mu(&[0], &[q(2, 1)], &[a]).unwrap(), &q(2, 1) - &q(1, 2));
        // μ = (1): (z+a)(z+b) − (1/z+a)(1/z+b).
        let (z, b) = (q(2, 1), q(-3, 7));
        let a = q(9, 4);
        let expect = &(&(&z + &a) * &(&z + &b)) - &(&(&z.pow(-1) + &a) * &(&z.pow(-1) + &b));
        assert_eq!(g_mu(&[1], &[z], &[a, b]).unwrap(), expect);
        // Not enough α's.
        assert_eq!(
            g_mu(&[2], &[q(2, 1)], &[q(1, 1), q(1, 2)]).unwrap_err(),
            Error::AlphaCount { needed: 3, got: 2 },
        );
    }

    #[test]
    fn factorial_reduces_to_plain_at_zero_alpha() {
        let zeros = vec![Rational::zero(); 8];
        let zs = [q(2, 1), q(3, 1), q(-5, 2)];
        for parts in [[0u32, 0, 0], [1, 0, 0], [2, 1, 0], [3, 3, 2], [4, 1, 1]] {
            let l = lam(&parts);
            assert_eq!(
                factorial_sp(&l, &zs, &zeros).unwrap(),
                sp(&l, &zs).unwrap(),
                "λ = {parts:?}",
            );
        }
    }

    #[test]
    fn factorial_single_box_shifts_by_alpha_sum() {
        // fsp_{(1)}(z | a, b) = z + 1/z + a + b.
        let (z, a, b) = (q(2, 1), q(5, 3), q(-1, 4));
        let expect = &(&(&z + &z.pow(-1)) + &a) + &b;
        assert_eq!(factorial_sp(&lam(&[1]), &[z], &[a, b]).unwrap(), expect);
    }
}
