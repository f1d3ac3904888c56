//! Seeded rejection sampling of admissible rational points.
//!
//! Draws have numerators and denominators bounded by 10^3; each draw is
//! retried until the suite's excluded loci are avoided, and a run of 1000
//! consecutive rejections is reported as a configuration error.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use symplectic_ice::{Error, Rational, Result};

const BOUND: i64 = 1000;
const MAX_REJECTIONS: usize = 1000;

pub struct Sampler {
    rng: ChaCha12Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha12Rng::seed_from_u64(seed) }
    }

    fn draw(&mut self) -> Rational {
        let numer = self.rng.gen_range(-BOUND..=BOUND);
        let denom = self.rng.gen_range(1..=BOUND);
        Rational::new(numer, denom)
    }

    /// One rational satisfying `admissible`, or an error after 1000
    /// consecutive rejections.
    pub fn rational<F>(&mut self, admissible: F) -> Result<Rational>
    where
        F: Fn(&Rational) -> bool,
    {
        for _ in 0..MAX_REJECTIONS {
            let r = self.draw();
            if admissible(&r) {
                return Ok(r);
            }
        }
        Err(Error::invalid("sampler", "1000 consecutive rejections; constraints too tight"))
    }

    /// An unconstrained rational in the bounded box.
    pub fn any(&mut self) -> Rational {
        self.draw()
    }

    /// Spectral parameters: each z ∉ {0, ±1} and z_i ∉ {±z_j, ±z_j^{-1}}
    /// pairwise, which keeps the Weyl denominator (and its tz-substituted
    /// form for admissible t) away from zero.
    pub fn spectral(&mut self, n: usize) -> Result<Vec<Rational>> {
        let one = Rational::from_int(1);
        let mut zs: Vec<Rational> = Vec::with_capacity(n);
        for _ in 0..n {
            let z = self.rational(|z| {
                if z.is_zero() || z.abs() == one {
                    return false;
                }
                zs.iter().all(|w| {
                    let prod = &(w * z).abs();
                    w.abs() != z.abs() && *prod != one
                })
            })?;
            zs.push(z);
        }
        Ok(zs)
    }

    /// Generic deformation parameter: t ∉ {0, −1}.
    pub fn t_generic(&mut self) -> Result<Rational> {
        let minus_one = Rational::from_int(-1);
        self.rational(|t| !t.is_zero() && *t != minus_one)
    }

    /// t admissible for identities phrased in the rescaled variables tz_j:
    /// additionally t²z_j² ≠ 1 and t²z_iz_j ≠ ±1.
    pub fn t_for_rescaled(&mut self, zs: &[Rational]) -> Result<Rational> {
        let one = Rational::from_int(1);
        let minus_one = Rational::from_int(-1);
        self.rational(|t| {
            if t.is_zero() || *t == minus_one {
                return false;
            }
            let t2 = t * t;
            for (i, zi) in zs.iter().enumerate() {
                for zj in &zs[i..] {
                    let p = &t2 * &(zi * zj);
                    if p.abs() == one {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// t admissible for ratios divided by the primed deformation factor:
    /// additionally t ∉ {−z_j², −z_jz_k, −z_j/z_k}.
    pub fn t_for_primed_ratio(&mut self, zs: &[Rational]) -> Result<Rational> {
        let minus_one = Rational::from_int(-1);
        self.rational(|t| {
            if t.is_zero() || *t == minus_one {
                return false;
            }
            for (i, zi) in zs.iter().enumerate() {
                for zj in &zs[i..] {
                    if *t == -&(zi * zj) {
                        return false;
                    }
                    let ratio = zi.inv().map(|inv| -&(&inv * zj));
                    if ratio.as_ref() == Some(t) {
                        return false;
                    }
                    let ratio = zj.inv().map(|inv| -&(&inv * zi));
                    if ratio.as_ref() == Some(t) {
                        return false;
                    }
                }
            }
            true
        })
    }

    pub fn alphas(&mut self, m: usize) -> Vec<Rational> {
        (0..=m).map(|_| self.draw()).collect()
    }
}
