//! Verification suites: each enumerates configurations within its caps,
//! samples admissible rational points, and compares both sides of its
//! defining identity exactly. Reports are deterministic for a fixed spec
//! (seed included) apart from elapsed time.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use symplectic_ice::closed_form::{
    double_row_me_closed, dual_sum_matches_deformed_schur, dual_wavefunction_sum,
    five_vertex_me_closed, me_a_closed, me_atilde_closed, me_b_closed, me_btilde_closed,
    FiveVertexKind,
};
use symplectic_ice::lattice::{
    check_yang_baxter_with_fixture, double_row_matrix_element, OccupationState, OpKind,
    OperatorParams, OperatorSpec, Variant, WeightFixture, MAX_SITES,
};
use symplectic_ice::schur::{
    deformation_factor, factorial_sp, sp, sp_numerator_det, weyl_denominator_det,
    weyl_denominator_factored,
};
use symplectic_ice::wavefunction::{dual_wavefunction_with_fixture, wavefunction_with_fixture};
use symplectic_ice::young::{config_to_partition, Config};
use symplectic_ice::{Error, LaurentT, Rational, Result, Scalar};

use crate::sample::Sampler;

pub const GENERATOR: &str = "chacha12";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteId {
    Ybe,
    Thm32,
    Thm41,
    Thm52,
    Thm53,
    Lemma42,
    Lemma43,
    Eq420,
    Eq437,
    AppendixA,
    CorA9,
    FiveVertex,
}

pub const ALL_SUITES: [SuiteId; 12] = [
    SuiteId::Ybe,
    SuiteId::Thm32,
    SuiteId::Thm41,
    SuiteId::Thm52,
    SuiteId::Thm53,
    SuiteId::Lemma42,
    SuiteId::Lemma43,
    SuiteId::Eq420,
    SuiteId::Eq437,
    SuiteId::AppendixA,
    SuiteId::CorA9,
    SuiteId::FiveVertex,
];

impl SuiteId {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Ybe => "ybe",
            SuiteId::Thm32 => "thm-3-2",
            SuiteId::Thm41 => "thm-4-1",
            SuiteId::Thm52 => "thm-5-2",
            SuiteId::Thm53 => "thm-5-3",
            SuiteId::Lemma42 => "lemma-4-2",
            SuiteId::Lemma43 => "lemma-4-3",
            SuiteId::Eq420 => "eq-4-20",
            SuiteId::Eq437 => "eq-4-37",
            SuiteId::AppendixA => "appendix-a",
            SuiteId::CorA9 => "cor-a-9",
            SuiteId::FiveVertex => "five-vertex",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            SuiteId::Ybe => "R-matrix Yang-Baxter relation on random triples",
            SuiteId::Thm32 => "wavefunction = deformation factor * sp",
            SuiteId::Thm41 => "dual wavefunction = t^{N(M-N)} * deformation factor * sp at tz",
            SuiteId::Thm52 => "inhomogeneous wavefunction = deformation factor * factorial sp",
            SuiteId::Thm53 => "inhomogeneous dual = t^{N(M-N)} * deformation factor * factorial sp",
            SuiteId::Lemma42 => "primed dual: t-exponent bound and t-independent ratio",
            SuiteId::Lemma43 => "primed dual at t = -1 = signed character numerator",
            SuiteId::Eq420 => "single primed double-row overlap in product form",
            SuiteId::Eq437 => "Weyl denominator determinant = product form",
            SuiteId::AppendixA => "closed-form matrix elements vs direct contraction",
            SuiteId::CorA9 => "level-sum dual wavefunction = deformed character",
            SuiteId::FiveVertex => "five-vertex closed forms vs primed lattice at t = -1",
        }
    }

    /// (m_max, n_max, trials); caps a suite does not consume are set to the
    /// values its enumeration would ignore anyway.
    fn default_caps(self) -> (usize, usize, usize) {
        match self {
            SuiteId::Ybe => (1, 1, 100),
            SuiteId::Thm32 | SuiteId::Thm41 | SuiteId::Thm52 | SuiteId::Thm53 => (6, 3, 3),
            SuiteId::Lemma42 => (5, 2, 2),
            SuiteId::Lemma43 => (6, 3, 3),
            SuiteId::Eq420 => (8, 1, 3),
            SuiteId::Eq437 => (1, 4, 10),
            SuiteId::AppendixA => (6, 3, 2),
            SuiteId::CorA9 => (5, 2, 3),
            SuiteId::FiveVertex => (5, 5, 2),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SUITES
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::invalid("suite", format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteSpec {
    pub suite: SuiteId,
    pub m_max: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl SuiteSpec {
    pub fn new(suite: SuiteId) -> Self {
        let (m_max, n_max, trials) = suite.default_caps();
        SuiteSpec { suite, m_max, n_max, trials, seed: 0 }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::invalid("suite spec", "trials must be at least 1"));
        }
        if self.m_max == 0 || self.n_max == 0 {
            return Err(Error::invalid("suite spec", "size caps must be at least 1"));
        }
        if self.m_max > MAX_SITES {
            return Err(Error::invalid(
                "suite spec",
                format!("m_max {} exceeds the {MAX_SITES}-site limit", self.m_max),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        out.push_str(&format!("seed: {} (generator: {GENERATOR})\n", self.seed));
        out.push_str(&format!("instances checked: {}\n", self.instances_checked));
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        for f in &self.failures {
            out.push_str(&format!(
                "FAIL {}\n  point: {}\n  lhs: {}\n  rhs: {}\n",
                f.instance, f.point, f.lhs, f.rhs
            ));
        }
        out
    }
}

struct SuiteCtx {
    sampler: Sampler,
    fixture: WeightFixture,
    instances: u64,
    failures: Vec<Failure>,
}

impl SuiteCtx {
    fn begin(&mut self) {
        self.instances += 1;
    }

    fn check<S: fmt::Display + PartialEq>(&mut self, instance: &str, point: &str, lhs: &S, rhs: &S) {
        if lhs != rhs {
            self.failures.push(Failure {
                instance: instance.to_owned(),
                point: point.to_owned(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

pub fn run_suite(spec: &SuiteSpec) -> Result<Report> {
    run_suite_with_fixture(spec, WeightFixture::Reference)
}

/// Same as `run_suite` with a substituted weight table; the corrupted
/// fixture is the negative control showing the suites can fail.
pub fn run_suite_with_fixture(spec: &SuiteSpec, fixture: WeightFixture) -> Result<Report> {
    spec.validate()?;
    let start = Instant::now();
    let mut ctx = SuiteCtx {
        sampler: Sampler::new(spec.seed),
        fixture,
        instances: 0,
        failures: Vec::new(),
    };
    match spec.suite {
        SuiteId::Ybe => ybe(spec, &mut ctx)?,
        SuiteId::Thm32 => thm_3_2(spec, &mut ctx)?,
        SuiteId::Thm41 => thm_4_1(spec, &mut ctx)?,
        SuiteId::Thm52 => thm_5_2(spec, &mut ctx)?,
        SuiteId::Thm53 => thm_5_3(spec, &mut ctx)?,
        SuiteId::Lemma42 => lemma_4_2(spec, &mut ctx)?,
        SuiteId::Lemma43 => lemma_4_3(spec, &mut ctx)?,
        SuiteId::Eq420 => eq_4_20(spec, &mut ctx)?,
        SuiteId::Eq437 => eq_4_37(spec, &mut ctx)?,
        SuiteId::AppendixA => appendix_a(spec, &mut ctx)?,
        SuiteId::CorA9 => cor_a_9(spec, &mut ctx)?,
        SuiteId::FiveVertex => five_vertex(spec, &mut ctx)?,
    }
    Ok(Report {
        suite: spec.suite.as_str().to_owned(),
        seed: spec.seed,
        instances_checked: ctx.instances,
        failures: ctx.failures,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..=m {
            cur.push(p);
            rec(m, k, p + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 1, &mut Vec::with_capacity(k), &mut out);
    out
}

fn hole_configs(m: usize, k: usize) -> Result<Vec<Config>> {
    subsets(m, k).into_iter().map(|p| Config::holes(m, p)).collect()
}

fn particle_configs(m: usize, k: usize) -> Result<Vec<Config>> {
    subsets(m, k).into_iter().map(|p| Config::particles(m, p)).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn fmt_point(zs: &[Rational], t: &Rational) -> String {
    format!("z=({}), t={t}", join(zs))
}

fn lattice_single(
    kind: OpKind,
    variant: Variant,
    bra: &Config,
    ket: &Config,
    z: &Rational,
    t: &Rational,
    fixture: WeightFixture,
) -> Result<Rational> {
    let params = OperatorParams::new(z.clone(), t.clone())?.with_weight_fixture(fixture);
    let op = OperatorSpec::new(kind, variant, params)?;
    op.matrix_element(&bra.state()?, &ket.state()?)
}

fn ybe(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for trial in 1..=spec.trials {
        let zs = ctx.sampler.spectral(2)?;
        let t = ctx.sampler.t_generic()?;
        ctx.begin();
        if let Some(mm) = check_yang_baxter_with_fixture(&zs[0], &zs[1], &t, ctx.fixture)? {
            ctx.failures.push(Failure {
                instance: format!("triple #{trial}, matrix entry ({}, {})", mm.row, mm.col),
                point: format!("z1={}, z2={}, t={t}", zs[0], zs[1]),
                lhs: mm.lhs.to_string(),
                rhs: mm.rhs.to_string(),
            });
        }
    }
    Ok(())
}

fn thm_3_2(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in particle_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_generic()?;
                    ctx.begin();
                    let lhs = wavefunction_with_fixture(
                        &zs,
                        &t,
                        &config,
                        Variant::Plain,
                        None,
                        ctx.fixture,
                    )?;
                    let rhs = &deformation_factor(&zs, &t, false)? * &sp(&lam, &zs)?;
                    let inst = format!(
                        "M={m} N={n} particles=({}) trial={trial}",
                        join(config.positions())
                    );
                    ctx.check(&inst, &fmt_point(&zs, &t), &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn thm_4_1(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in hole_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_for_rescaled(&zs)?;
                    ctx.begin();
                    let lhs = dual_wavefunction_with_fixture(
                        &zs,
                        &t,
                        &config,
                        Variant::Plain,
                        None,
                        ctx.fixture,
                    )?;
                    let tzs: Vec<Rational> = zs.iter().map(|z| &t * z).collect();
                    let scale = t.pow((n * (m - n)) as i64);
                    let rhs =
                        &(&scale * &deformation_factor(&zs, &t, false)?) * &sp(&lam, &tzs)?;
                    let inst =
                        format!("M={m} N={n} holes=({}) trial={trial}", join(config.positions()));
                    ctx.check(&inst, &fmt_point(&zs, &t), &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn thm_5_2(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in particle_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_generic()?;
                    let alphas = ctx.sampler.alphas(m);
                    ctx.begin();
                    let lhs = wavefunction_with_fixture(
                        &zs,
                        &t,
                        &config,
                        Variant::Inhom,
                        Some(&alphas),
                        ctx.fixture,
                    )?;
                    let rhs = &deformation_factor(&zs, &t, false)?
                        * &factorial_sp(&lam, &zs, &alphas)?;
                    let inst = format!(
                        "M={m} N={n} particles=({}) trial={trial}",
                        join(config.positions())
                    );
                    let point = format!("{}, alphas=({})", fmt_point(&zs, &t), join(&alphas));
                    ctx.check(&inst, &point, &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn thm_5_3(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in hole_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_for_rescaled(&zs)?;
                    let alphas = ctx.sampler.alphas(m);
                    ctx.begin();
                    let lhs = dual_wavefunction_with_fixture(
                        &zs,
                        &t,
                        &config,
                        Variant::Inhom,
                        Some(&alphas),
                        ctx.fixture,
                    )?;
                    let tzs: Vec<Rational> = zs.iter().map(|z| &t * z).collect();
                    let neg: Vec<Rational> = alphas.iter().map(|a| -a).collect();
                    let scale = t.pow((n * (m - n)) as i64);
                    let rhs = &(&scale * &deformation_factor(&zs, &t, false)?)
                        * &factorial_sp(&lam, &tzs, &neg)?;
                    let inst =
                        format!("M={m} N={n} holes=({}) trial={trial}", join(config.positions()));
                    let point = format!("{}, alphas=({})", fmt_point(&zs, &t), join(&alphas));
                    ctx.check(&inst, &point, &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn lemma_4_2(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in hole_configs(m, n)? {
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t1 = ctx.sampler.t_for_primed_ratio(&zs)?;
                    let mut t2 = ctx.sampler.t_for_primed_ratio(&zs)?;
                    let mut retries = 0;
                    while t2 == t1 {
                        retries += 1;
                        if retries > 8 {
                            return Err(Error::invalid("sampler", "no second distinct t"));
                        }
                        t2 = ctx.sampler.t_for_primed_ratio(&zs)?;
                    }
                    ctx.begin();

                    let zs_sym: Vec<LaurentT> =
                        zs.iter().map(|z| LaurentT::constant(z.clone())).collect();
                    let dual_sym = dual_wavefunction_with_fixture(
                        &zs_sym,
                        &LaurentT::t(),
                        &config,
                        Variant::Primed,
                        None,
                        ctx.fixture,
                    )?;
                    let scaled = &LaurentT::t().pow(n as i64) * &dual_sym;
                    let range = if scaled.is_zero() {
                        None
                    } else {
                        Some(scaled.exponent_range()?)
                    };
                    let range_desc = match range {
                        None => "identically zero".to_owned(),
                        Some((lo, hi)) => format!("t-exponents in [{lo}, {hi}]"),
                    };
                    let inst = format!(
                        "M={m} N={n} holes=({}) trial={trial} ({range_desc})",
                        join(config.positions())
                    );
                    let point = format!("z=({}), t1={t1}, t2={t2}", join(&zs));
                    if let Some((_, hi)) = range {
                        if hi > 0 {
                            ctx.check(
                                &inst,
                                &point,
                                &format!("max t-exponent {hi}"),
                                &"max t-exponent <= 0".to_owned(),
                            );
                        }
                    }

                    let fixture = ctx.fixture;
                    let ratio = |t: &Rational| -> Result<Rational> {
                        let dual = dual_wavefunction_with_fixture(
                            &zs,
                            t,
                            &config,
                            Variant::Primed,
                            None,
                            fixture,
                        )?;
                        let dp = deformation_factor(&zs, t, true)?;
                        if dp.is_zero() {
                            return Err(Error::DegeneratePoint(
                                "primed deformation factor vanishes",
                            ));
                        }
                        Ok(&(&t.pow(n as i64) * &dual) / &dp)
                    };
                    let r1 = ratio(&t1)?;
                    let r2 = ratio(&t2)?;
                    ctx.check(&inst, &point, &r1, &r2);
                }
            }
        }
    }
    Ok(())
}

fn lemma_4_3(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    let minus_one = Rational::from_int(-1);
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in hole_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    ctx.begin();
                    let lhs = dual_wavefunction_with_fixture(
                        &zs,
                        &minus_one,
                        &config,
                        Variant::Primed,
                        None,
                        ctx.fixture,
                    )?;
                    let num = sp_numerator_det(&lam, &zs)?;
                    let rhs = if (n * (n - 1) / 2) % 2 == 1 { -&num } else { num };
                    let inst =
                        format!("M={m} N={n} holes=({}) trial={trial}", join(config.positions()));
                    ctx.check(&inst, &fmt_point(&zs, &minus_one), &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn eq_4_20(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for x in 1..=m {
            for trial in 1..=spec.trials {
                let z = ctx.sampler.spectral(1)?.remove(0);
                let t = ctx.sampler.t_generic()?;
                ctx.begin();
                let params = OperatorParams::new(z.clone(), t.clone())?
                    .with_weight_fixture(ctx.fixture);
                let bra = OccupationState::full(m)?;
                let ket = Config::holes(m, vec![x])?;
                let lhs =
                    double_row_matrix_element(Variant::Primed, &params, &bra, &ket.state()?)?;
                let z_inv = z.inv().expect("nonzero by sampling");
                let t_inv = t.inv().expect("nonzero by sampling");
                let front = &(&Rational::from_int(1) + &(&t_inv * &(&z * &z))) / &(&t * &z);
                let xe = x as i64;
                let ratio = &(&z.pow(xe) - &z.pow(-xe)) / &(&z - &z_inv);
                let inst = format!("M={m} hole={x} trial={trial}");
                ctx.check(&inst, &fmt_point(&[z.clone()], &t), &lhs, &(&front * &ratio));
            }
        }
    }
    Ok(())
}

fn eq_4_37(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for n in 1..=spec.n_max {
        for trial in 1..=spec.trials {
            let zs = ctx.sampler.spectral(n)?;
            ctx.begin();
            let lhs = weyl_denominator_det(&zs)?;
            let rhs = weyl_denominator_factored(&zs)?;
            let inst = format!("N={n} trial={trial}");
            ctx.check(&inst, &format!("z=({})", join(&zs)), &lhs, &rhs);
        }
    }
    Ok(())
}

fn appendix_a(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    // Single-row closed forms against direct contraction, all pairs.
    for m in 1..=spec.m_max {
        for k in 0..=m {
            let level = hole_configs(m, k)?;
            let next = if k < m { hole_configs(m, k + 1)? } else { Vec::new() };
            for xb in &level {
                for yb in &level {
                    for trial in 1..=spec.trials {
                        let z = ctx.sampler.spectral(1)?.remove(0);
                        let t = ctx.sampler.t_generic()?;
                        ctx.begin();
                        let inst = format!(
                            "M={m} A/Atilde xbar=({}) ybar=({}) trial={trial}",
                            join(xb.positions()),
                            join(yb.positions())
                        );
                        let point = fmt_point(&[z.clone()], &t);
                        let direct =
                            lattice_single(OpKind::A, Variant::Plain, xb, yb, &z, &t, ctx.fixture)?;
                        ctx.check(&inst, &point, &me_a_closed(xb, yb, &z, &t)?, &direct);
                        let direct = lattice_single(
                            OpKind::ATilde,
                            Variant::Plain,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        ctx.check(&inst, &point, &me_atilde_closed(xb, yb, &z, &t)?, &direct);
                    }
                }
                for yb in &next {
                    for trial in 1..=spec.trials {
                        let z = ctx.sampler.spectral(1)?.remove(0);
                        let t = ctx.sampler.t_generic()?;
                        ctx.begin();
                        let inst = format!(
                            "M={m} B/Btilde xbar=({}) ybar=({}) trial={trial}",
                            join(xb.positions()),
                            join(yb.positions())
                        );
                        let point = fmt_point(&[z.clone()], &t);
                        let direct =
                            lattice_single(OpKind::B, Variant::Plain, xb, yb, &z, &t, ctx.fixture)?;
                        ctx.check(&inst, &point, &me_b_closed(xb, yb, &z, &t)?, &direct);
                        let direct = lattice_single(
                            OpKind::BTilde,
                            Variant::Plain,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        ctx.check(&inst, &point, &me_btilde_closed(xb, yb, &z, &t)?, &direct);
                    }
                }
            }
        }
    }

    // Double-row window sums against the 𝔅-matrix elements.
    for m in 1..=spec.m_max.min(5) {
        for k in 0..=spec.n_max.min(2).min(m - 1) {
            for bra in hole_configs(m, k)? {
                for ket in hole_configs(m, k + 1)? {
                    for trial in 1..=spec.trials {
                        let z = ctx.sampler.spectral(1)?.remove(0);
                        let t = ctx.sampler.t_generic()?;
                        ctx.begin();
                        let params = OperatorParams::new(z.clone(), t.clone())?
                            .with_weight_fixture(ctx.fixture);
                        let direct = double_row_matrix_element(
                            Variant::Plain,
                            &params,
                            &bra.state()?,
                            &ket.state()?,
                        )?;
                        let inst = format!(
                            "M={m} double-row bra=({}) ket=({}) trial={trial}",
                            join(bra.positions()),
                            join(ket.positions())
                        );
                        let point = fmt_point(&[z.clone()], &t);
                        ctx.check(&inst, &point, &double_row_me_closed(&bra, &ket, &z, &t)?, &direct);
                    }
                }
            }
        }
    }

    // Level-sum assembly against the direct dual wavefunction.
    for m in 1..=spec.m_max.min(5) {
        for n in 1..=spec.n_max.min(3).min(m) {
            for config in hole_configs(m, n)? {
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_generic()?;
                    ctx.begin();
                    let lhs = dual_wavefunction_sum(m, &zs, &t, &config)?;
                    let rhs = dual_wavefunction_with_fixture(
                        &zs,
                        &t,
                        &config,
                        Variant::Plain,
                        None,
                        ctx.fixture,
                    )?;
                    let inst = format!(
                        "M={m} N={n} level-sum holes=({}) trial={trial}",
                        join(config.positions())
                    );
                    ctx.check(&inst, &fmt_point(&zs, &t), &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn cor_a_9(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    for m in 1..=spec.m_max {
        for n in 1..=spec.n_max.min(m) {
            for config in hole_configs(m, n)? {
                let lam = config_to_partition(&config);
                for trial in 1..=spec.trials {
                    let zs = ctx.sampler.spectral(n)?;
                    let t = ctx.sampler.t_for_rescaled(&zs)?;
                    ctx.begin();
                    if !dual_sum_matches_deformed_schur(m, &zs, &t, &lam)? {
                        let lhs = dual_wavefunction_sum(m, &zs, &t, &config)?;
                        let tzs: Vec<Rational> = zs.iter().map(|z| &t * z).collect();
                        let scale = t.pow((n * (m - n)) as i64);
                        let rhs = &(&scale * &deformation_factor(&zs, &t, false)?)
                            * &sp(&lam, &tzs)?;
                        ctx.failures.push(Failure {
                            instance: format!(
                                "M={m} N={n} lambda-bar=({}) trial={trial}",
                                join(lam.parts())
                            ),
                            point: fmt_point(&zs, &t),
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn five_vertex(spec: &SuiteSpec, ctx: &mut SuiteCtx) -> Result<()> {
    let t = Rational::from_int(-1);
    for m in 1..=spec.m_max {
        for k in 0..=spec.n_max.min(m) {
            let level = hole_configs(m, k)?;
            let next = if k < m { hole_configs(m, k + 1)? } else { Vec::new() };
            for xb in &level {
                for yb in &level {
                    for trial in 1..=spec.trials {
                        let z = ctx.sampler.spectral(1)?.remove(0);
                        ctx.begin();
                        let inst = format!(
                            "M={m} A'/Atilde' xbar=({}) ybar=({}) trial={trial}",
                            join(xb.positions()),
                            join(yb.positions())
                        );
                        let point = fmt_point(&[z.clone()], &t);
                        let direct = lattice_single(
                            OpKind::A,
                            Variant::Primed,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        let closed = five_vertex_me_closed(FiveVertexKind::APrime, xb, yb, &z)?;
                        ctx.check(&inst, &point, &closed, &direct);
                        let direct = lattice_single(
                            OpKind::ATilde,
                            Variant::Primed,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        let closed =
                            five_vertex_me_closed(FiveVertexKind::ATildePrime, xb, yb, &z)?;
                        ctx.check(&inst, &point, &closed, &direct);
                    }
                }
                for yb in &next {
                    for trial in 1..=spec.trials {
                        let z = ctx.sampler.spectral(1)?.remove(0);
                        ctx.begin();
                        let inst = format!(
                            "M={m} B'/Btilde'/double-row xbar=({}) ybar=({}) trial={trial}",
                            join(xb.positions()),
                            join(yb.positions())
                        );
                        let point = fmt_point(&[z.clone()], &t);
                        let direct = lattice_single(
                            OpKind::B,
                            Variant::Primed,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        let closed = five_vertex_me_closed(FiveVertexKind::BPrime, xb, yb, &z)?;
                        ctx.check(&inst, &point, &closed, &direct);
                        let direct = lattice_single(
                            OpKind::BTilde,
                            Variant::Primed,
                            xb,
                            yb,
                            &z,
                            &t,
                            ctx.fixture,
                        )?;
                        let closed =
                            five_vertex_me_closed(FiveVertexKind::BTildePrime, xb, yb, &z)?;
                        ctx.check(&inst, &point, &closed, &direct);
                        let params = OperatorParams::new(z.clone(), t.clone())?
                            .with_weight_fixture(ctx.fixture);
                        let direct = double_row_matrix_element(
                            Variant::Primed,
                            &params,
                            &xb.state()?,
                            &yb.state()?,
                        )?;
                        let closed =
                            five_vertex_me_closed(FiveVertexKind::DoubleRowBPrime, xb, yb, &z)?;
                        ctx.check(&inst, &point, &closed, &direct);
                    }
                }
            }
        }
    }
    Ok(())
}
