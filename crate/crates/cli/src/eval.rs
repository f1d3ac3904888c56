//! Single-value evaluation behind `eval <what>`: each entry point builds the
//! requested exact quantity from parsed flags and prints it in canonical form.

use std::str::FromStr;

use symplectic_ice::closed_form::{
    double_row_me_closed, me_a_closed, me_atilde_closed, me_b_closed, me_btilde_closed,
};
use symplectic_ice::lattice::Variant;
use symplectic_ice::wavefunction::{dual_wavefunction, wavefunction};
use symplectic_ice::young::{Config, YoungDiagram};
use symplectic_ice::{Error, Rational, Result};
use symplectic_ice::schur::{factorial_sp, sp};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalWhat {
    Wavefunction,
    Dual,
    Sp,
    FactorialSp,
    MeClosed,
    DoubleRowMe,
}

impl FromStr for EvalWhat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wavefunction" => Ok(EvalWhat::Wavefunction),
            "dual" => Ok(EvalWhat::Dual),
            "sp" => Ok(EvalWhat::Sp),
            "factorial-sp" => Ok(EvalWhat::FactorialSp),
            "me-closed" => Ok(EvalWhat::MeClosed),
            "double-row-me" => Ok(EvalWhat::DoubleRowMe),
            _ => Err(Error::invalid("eval target", format!("unknown target {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeOp {
    A,
    B,
    ATilde,
    BTilde,
}

impl FromStr for MeOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(MeOp::A),
            "b" => Ok(MeOp::B),
            "atilde" => Ok(MeOp::ATilde),
            "btilde" => Ok(MeOp::BTilde),
            _ => Err(Error::invalid("operator", format!("unknown operator {s:?}"))),
        }
    }
}

/// Flag bundle for `eval`; each target requires the subset it consumes.
#[derive(Clone, Debug, Default)]
pub struct EvalArgs {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub x: Option<Vec<usize>>,
    pub xbar: Option<Vec<usize>>,
    pub ybar: Option<Vec<usize>>,
    pub lambda: Option<Vec<u32>>,
    pub z: Option<Vec<Rational>>,
    pub t: Option<Rational>,
    pub alphas: Option<Vec<Rational>>,
    pub op: Option<MeOp>,
}

fn need<'a, T>(v: &'a Option<T>, flag: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| Error::invalid("flags", format!("--{flag} is required")))
}

fn single_z(args: &EvalArgs) -> Result<&Rational> {
    let z = need(&args.z, "z")?;
    if z.len() != 1 {
        return Err(Error::invalid("flags", "--z takes exactly one value here"));
    }
    Ok(&z[0])
}

fn check_n(args: &EvalArgs, len: usize) -> Result<()> {
    if let Some(n) = args.n {
        if n != len {
            return Err(Error::invalid(
                "flags",
                format!("--n {n} disagrees with the {len} given positions/parameters"),
            ));
        }
    }
    Ok(())
}

pub fn eval_value(what: EvalWhat, args: &EvalArgs) -> Result<String> {
    if let Some(zs) = &args.z {
        if zs.iter().any(Rational::is_zero) {
            return Err(Error::invalid("flags", "spectral parameters must be nonzero"));
        }
    }
    let value = match what {
        EvalWhat::Wavefunction | EvalWhat::Dual => {
            let m = *need(&args.m, "m")?;
            let x = need(&args.x, "x")?;
            let zs = need(&args.z, "z")?;
            let t = need(&args.t, "t")?;
            if zs.len() != x.len() {
                return Err(Error::invalid(
                    "flags",
                    format!("{} positions but {} spectral parameters", x.len(), zs.len()),
                ));
            }
            check_n(args, zs.len())?;
            let config = if what == EvalWhat::Wavefunction {
                Config::particles(m, x.clone())?
            } else {
                Config::holes(m, x.clone())?
            };
            let variant = if args.alphas.is_some() { Variant::Inhom } else { Variant::Plain };
            if what == EvalWhat::Wavefunction {
                wavefunction(zs, t, &config, variant, args.alphas.as_deref())?
            } else {
                dual_wavefunction(zs, t, &config, variant, args.alphas.as_deref())?
            }
        }
        EvalWhat::Sp => {
            let lam = YoungDiagram::new(need(&args.lambda, "lambda")?.clone())?;
            sp(&lam, need(&args.z, "z")?)?
        }
        EvalWhat::FactorialSp => {
            let lam = YoungDiagram::new(need(&args.lambda, "lambda")?.clone())?;
            factorial_sp(&lam, need(&args.z, "z")?, need(&args.alphas, "alphas")?)?
        }
        EvalWhat::MeClosed => {
            let m = *need(&args.m, "m")?;
            let xbar = Config::holes(m, need(&args.xbar, "xbar")?.clone())?;
            let ybar = Config::holes(m, need(&args.ybar, "ybar")?.clone())?;
            let z = single_z(args)?;
            let t = need(&args.t, "t")?;
            match *need(&args.op, "op")? {
                MeOp::A => me_a_closed(&xbar, &ybar, z, t)?,
                MeOp::B => me_b_closed(&xbar, &ybar, z, t)?,
                MeOp::ATilde => me_atilde_closed(&xbar, &ybar, z, t)?,
                MeOp::BTilde => me_btilde_closed(&xbar, &ybar, z, t)?,
            }
        }
        EvalWhat::DoubleRowMe => {
            let m = *need(&args.m, "m")?;
            let xbar = Config::holes(m, need(&args.xbar, "xbar")?.clone())?;
            let ybar = Config::holes(m, need(&args.ybar, "ybar")?.clone())?;
            double_row_me_closed(&xbar, &ybar, single_z(args)?, need(&args.t, "t")?)?
        }
    };
    Ok(value.to_string())
}
