//! Wavefunction and dual wavefunction by direct lattice contraction.
//!
//! The wavefunction is the overlap of an N-fold double-row action on the
//! vacuum with a particle configuration,
//!
//!   W(x | z) = ⟨x_1 … x_N | 𝔅(z_1) ⋯ 𝔅(z_N) |Ω⟩,
//!
//! and the dual wavefunction pairs the same action on an N-hole
//! configuration with the fully occupied row,
//!
//!   W̄(x̄ | z) = ⟨1^M | 𝔅(z_1) ⋯ 𝔅(z_N) |x̄_1 … x̄_N⟩.
//!
//! Operators apply right to left, so 𝔅(z_N) acts first. Both overlaps run
//! over any scalar ring; the symbolic-t checks use Laurent coefficients
//! with numeric z.

use crate::error::{Error, Result};
use crate::lattice::state::{OccupationState, StateVector};
use crate::lattice::weights::{OperatorParams, Variant, WeightFixture};
use crate::lattice::apply_double_row_b;
use crate::scalar::{RefOps, Scalar};
use crate::young::{Config, Role};

/// 𝔅(z_1) ⋯ 𝔅(z_N) |start⟩, rightmost factor first.
pub fn multi_double_row<S: Scalar>(
    zs: &[S],
    t: &S,
    variant: Variant,
    alphas: Option<&[S]>,
    fixture: WeightFixture,
    start: &StateVector<S>,
) -> Result<StateVector<S>>
where
    for<'a> &'a S: RefOps<S>,
{
    let mut v = start.clone();
    for z in zs.iter().rev() {
        let params = match alphas {
            Some(a) => OperatorParams::with_alphas(z.clone(), t.clone(), a.to_vec())?,
            None => OperatorParams::new(z.clone(), t.clone())?,
        };
        let params = params.with_weight_fixture(fixture);
        v = apply_double_row_b(variant, &params, &v)?;
    }
    Ok(v)
}

/// ⟨config | 𝔅(z_1) ⋯ 𝔅(z_N) |Ω⟩ for a particle configuration. A particle
/// count different from N gives 0 (the overlap is charge-graded).
pub fn wavefunction<S: Scalar>(
    zs: &[S],
    t: &S,
    config: &Config,
    variant: Variant,
    alphas: Option<&[S]>,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    wavefunction_with_fixture(zs, t, config, variant, alphas, WeightFixture::Reference)
}

pub fn wavefunction_with_fixture<S: Scalar>(
    zs: &[S],
    t: &S,
    config: &Config,
    variant: Variant,
    alphas: Option<&[S]>,
    fixture: WeightFixture,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    if config.role() != Role::Particles {
        return Err(Error::invalid("config", "wavefunction takes a particle configuration"));
    }
    let vacuum = StateVector::unit(OccupationState::vacuum(config.m())?);
    let image = multi_double_row(zs, t, variant, alphas, fixture, &vacuum)?;
    Ok(image.coeff(&config.state()?))
}

/// ⟨1^M | 𝔅(z_1) ⋯ 𝔅(z_N) |x̄⟩ for a hole configuration with N holes.
pub fn dual_wavefunction<S: Scalar>(
    zs: &[S],
    t: &S,
    config: &Config,
    variant: Variant,
    alphas: Option<&[S]>,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    dual_wavefunction_with_fixture(zs, t, config, variant, alphas, WeightFixture::Reference)
}

pub fn dual_wavefunction_with_fixture<S: Scalar>(
    zs: &[S],
    t: &S,
    config: &Config,
    variant: Variant,
    alphas: Option<&[S]>,
    fixture: WeightFixture,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    if config.role() != Role::Holes {
        return Err(Error::invalid("config", "dual wavefunction takes a hole configuration"));
    }
    let ket = StateVector::unit(config.state()?);
    let image = multi_double_row(zs, t, variant, alphas, fixture, &ket)?;
    Ok(image.coeff(&OccupationState::full(config.m())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{deformation_factor, factorial_sp, sp};
    use crate::young::config_to_partition;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn single_site_overlaps() {
        let c = Config::particles(1, vec![1]).unwrap();
        assert_eq!(
            wavefunction(&[q(2, 1)], &q(3, 1), &c, Variant::Plain, None).unwrap(),
            q(13, 2),
        );
        let h = Config::holes(1, vec![1]).unwrap();
        assert_eq!(
            dual_wavefunction(&[q(2, 1)], &q(3, 1), &h, Variant::Plain, None).unwrap(),
            q(13, 2),
        );
    }

    #[test]
    fn particle_count_mismatch_vanishes() {
        let c = Config::particles(3, vec![1, 2]).unwrap();
        assert_eq!(
            wavefunction(&[q(2, 1)], &q(3, 1), &c, Variant::Plain, None).unwrap(),
            Rational::zero(),
        );
    }

    #[test]
    fn wavefunction_factors_through_schur() {
        // ⟨x|𝔅(z_1)⋯𝔅(z_N)|Ω⟩ = D · sp_λ({z}).
        let points: [(&[Rational], Rational); 2] = [
            (&[q(2, 1), q(3, 1)], q(5, 1)),
            (&[q(-5, 3), q(7, 2)], q(2, 7)),
        ];
        for (zs, t) in points {
            for m in 1..=4usize {
                let n = zs.len();
                if n > m {
                    continue;
                }
                for bits in 0u32..(1 << m) {
                    if bits.count_ones() as usize != n {
                        continue;
                    }
                    let positions: Vec<usize> =
                        (1..=m).filter(|&s| bits >> (s - 1) & 1 == 1).collect();
                    let c = Config::particles(m, positions).unwrap();
                    let lhs = wavefunction(zs, &t, &c, Variant::Plain, None).unwrap();
                    let lam = config_to_partition(&c);
                    let rhs = &deformation_factor(zs, &t, false).unwrap() * &sp(&lam, zs).unwrap();
                    assert_eq!(lhs, rhs, "M = {m}, config {c:?}");
                }
            }
        }
    }

    #[test]
    fn dual_picks_up_rescaled_variables() {
        // ⟨1^M|𝔅(z_1)⋯𝔅(z_N)|x̄⟩ = t^{N(M−N)} · D · sp_λ̄({tz}).
        let zs = [q(2, 1), q(3, 1)];
        let t = q(5, 1);
        let tz: Vec<Rational> = zs.iter().map(|z| &t * z).collect();
        for m in 2..=4usize {
            let n = zs.len();
            for bits in 0u32..(1 << m) {
                if bits.count_ones() as usize != n {
                    continue;
                }
                let positions: Vec<usize> = (1..=m).filter(|&s| bits >> (s - 1) & 1 == 1).collect();
                let c = Config::holes(m, positions).unwrap();
                let lhs = dual_wavefunction(&zs, &t, &c, Variant::Plain, None).unwrap();
                let lam = config_to_partition(&c);
                let rhs = &(&t.pow((n * (m - n)) as i64)
                    * &deformation_factor(&zs, &t, false).unwrap())
                    * &sp(&lam, &tz).unwrap();
                assert_eq!(lhs, rhs, "M = {m}, config {c:?}");
            }
        }
    }

    #[test]
    fn inhomogeneous_wavefunction_factors_through_factorial_schur() {
        // ⟨x|𝔅(z_1)⋯𝔅(z_N)|Ω⟩ = D · fsp_λ({z} | ᾱ) with site inhomogeneities.
        let zs = [q(2, 1), q(5, 7)];
        let t = q(3, 1);
        let m = 3usize;
        let alphas = [q(1, 2), q(-2, 3), q(4, 5), q(1, 7)];
        for bits in 0u32..(1 << m) {
            if bits.count_ones() as usize != zs.len() {
                continue;
            }
            let positions: Vec<usize> = (1..=m).filter(|&s| bits >> (s - 1) & 1 == 1).collect();
            let c = Config::particles(m, positions).unwrap();
            let lhs = wavefunction(&zs, &t, &c, Variant::Inhom, Some(&alphas)).unwrap();
            let lam = config_to_partition(&c);
            let rhs = &deformation_factor(&zs, &t, false).unwrap()
                * &factorial_sp(&lam, &zs, &alphas).unwrap();
            assert_eq!(lhs, rhs, "config {c:?}");
        }
    }

    #[test]
    fn inhomogeneous_dual_inverts_alpha_signs() {
        // ⟨1^M|𝔅(z_1)⋯𝔅(z_N)|x̄⟩ = t^{N(M−N)} · D · fsp_λ̄({tz} | −ᾱ).
        let zs = [q(2, 1)];
        let t = q(3, 1);
        let m = 2usize;
        let alphas = [q(1, 2), q(-2, 3), q(4, 5)];
        let neg: Vec<Rational> = alphas.iter().map(|a| -a).collect();
        let tz = [&t * &zs[0]];
        for xbar in 1..=m {
            let c = Config::holes(m, vec![xbar]).unwrap();
            let lhs = dual_wavefunction(&zs, &t, &c, Variant::Inhom, Some(&alphas)).unwrap();
            let lam = config_to_partition(&c);
            let rhs = &(&t.pow((m - 1) as i64) * &deformation_factor(&zs, &t, false).unwrap())
                * &factorial_sp(&lam, &tz, &neg).unwrap();
            assert_eq!(lhs, rhs, "x̄ = {xbar}");
        }
    }

    #[test]
    fn corrupted_fixture_breaks_the_correspondence() {
        let zs = [q(2, 1), q(3, 1)];
        let t = q(5, 1);
        let c = Config::particles(3, vec![1, 3]).unwrap();
        let honest = wavefunction(&zs, &t, &c, Variant::Plain, None).unwrap();
        let broken = wavefunction_with_fixture(
            &zs,
            &t,
            &c,
            Variant::Plain,
            None,
            WeightFixture::CorruptedFirstL,
        )
        .unwrap();
        assert_ne!(honest, broken);
    }
}
