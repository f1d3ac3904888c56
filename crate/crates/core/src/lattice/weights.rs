//! Vertex weights: the two L-operator families, the boundary K-matrix and
//! the R-matrix, in plain / primed / inhomogeneous variants.
//!
//! Conventions. A weight is indexed ⟨a_out s_out| · |a_in s_in⟩ with a the
//! auxiliary line and s the site (quantum) line; every weight vanishes
//! unless a_in + s_in = a_out + s_out (the ice rule). The first family
//! carries the z^{-1}-normalized free-fermion weights, the second family
//! the z-normalized ones used for the returning row of a double-row sweep.
//! Primed weights are the rescaled operators: first family multiplied by
//! t^{-1} with z ↦ t^{-1}z, and the boundary kernel likewise; they require
//! an invertible t. The inhomogeneous variant attaches one parameter α_j
//! per site plus α_0 on the boundary kernel.
//!
//! Weight tables over any [`Scalar`] ring:
//!
//!   first, plain:   (00|00)=1   (01|01)=t      (01|10)=1    (10|01)=(t+1)/z  (10|10)=1/z     (11|11)=1/z
//!   first, primed:  (00|00)=1/t (01|01)=1      (01|10)=1/t  (10|01)=(t+1)/z  (10|10)=1/z     (11|11)=1/z
//!   first, inhom:   plain except (10|10)=1/z+α_j, (11|11)=1/z−tα_j
//!   second, plain:  (00|00)=z   (01|01)=tz     (01|10)=1    (10|01)=(t+1)z   (10|10)=1       (11|11)=1
//!   second, primed: (00|00)=z/t (01|01)=z      (01|10)=1    (10|01)=(1+1/t)z (10|10)=1       (11|11)=1
//!   second, inhom:  plain except (00|00)=z+α_j, (01|01)=tz−α_j
//!   K plain  = diag(tz, 1/z);  K primed = diag(z/t, 1/z);  K inhom = diag(tz−α_0, 1/z+α_0)
//!
//! The entries are written (a_out s_out | a_in s_in).

use crate::error::{Error, Result};
use crate::scalar::{RefOps, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LKind {
    First,
    Second,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Plain,
    Primed,
    Inhom,
}

/// Test fixture for negative controls: `CorruptedFirstL` changes the first
/// family's plain (01|01) weight from t to t+1. The ice rule is untouched,
/// so contractions still run — they just stop agreeing with anything.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum WeightFixture {
    #[default]
    Reference,
    CorruptedFirstL,
}

/// Spectral parameter z (must be a unit), deformation t, and optional
/// per-site inhomogeneities α_0..α_M.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorParams<S> {
    z: S,
    z_inv: S,
    t: S,
    t_inv: Option<S>,
    alphas: Option<Vec<S>>,
    fixture: WeightFixture,
}

impl<S: Scalar> OperatorParams<S>
where
    for<'a> &'a S: RefOps<S>,
{
    pub fn new(z: S, t: S) -> Result<Self> {
        let z_inv = z.inv().ok_or(Error::NonInvertible("z"))?;
        let t_inv = t.inv();
        Ok(OperatorParams {
            z,
            z_inv,
            t,
            t_inv,
            alphas: None,
            fixture: WeightFixture::Reference,
        })
    }

    /// `alphas[j]` is α_j; index 0 belongs to the boundary kernel and index
    /// j ≥ 1 to site j, so the vector must have length M + 1.
    pub fn with_alphas(z: S, t: S, alphas: Vec<S>) -> Result<Self> {
        let mut p = OperatorParams::new(z, t)?;
        p.alphas = Some(alphas);
        Ok(p)
    }

    pub fn with_weight_fixture(mut self, fixture: WeightFixture) -> Self {
        self.fixture = fixture;
        self
    }

    pub fn z(&self) -> &S {
        &self.z
    }

    pub fn z_inv(&self) -> &S {
        &self.z_inv
    }

    pub fn t(&self) -> &S {
        &self.t
    }

    pub fn t_inv(&self) -> Result<&S> {
        self.t_inv.as_ref().ok_or(Error::NonInvertible("t"))
    }

    pub fn has_t_inv(&self) -> bool {
        self.t_inv.is_some()
    }

    pub fn alphas(&self) -> Option<&[S]> {
        self.alphas.as_deref()
    }

    pub fn fixture(&self) -> WeightFixture {
        self.fixture
    }

    pub fn alpha(&self, index: usize) -> Result<&S> {
        let alphas = self.alphas.as_ref().ok_or(Error::AlphaCount { needed: index + 1, got: 0 })?;
        alphas.get(index).ok_or(Error::AlphaCount {
            needed: index + 1,
            got: alphas.len(),
        })
    }

    /// Checks the inhomogeneity vector covers sites 1..=m plus the boundary.
    pub fn require_alphas(&self, m: usize) -> Result<()> {
        let got = self.alphas.as_ref().map_or(0, Vec::len);
        if got != m + 1 {
            return Err(Error::AlphaCount { needed: m + 1, got });
        }
        Ok(())
    }
}

fn bit_ok(b: u8) -> Result<()> {
    if b > 1 {
        return Err(Error::invalid("index", format!("bit value {b} out of range")));
    }
    Ok(())
}

/// One L-operator vertex weight at 1-based `site` (the site index only
/// matters for the inhomogeneous variant). Ice-violating index tuples give
/// zero.
pub fn l_weight<S: Scalar>(
    kind: LKind,
    variant: Variant,
    a_in: u8,
    s_in: u8,
    a_out: u8,
    s_out: u8,
    params: &OperatorParams<S>,
    site: usize,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    for b in [a_in, s_in, a_out, s_out] {
        bit_ok(b)?;
    }
    if a_in + s_in != a_out + s_out {
        return Ok(S::zero());
    }
    let z = params.z();
    let z_inv = params.z_inv();
    let t = params.t();
    let one = S::one();
    let t_plus_1 = || t + &one;

    // (a_in, s_in, a_out, s_out) over the six ice-respecting tuples.
    let key = (a_in, s_in, a_out, s_out);
    let w = match (kind, variant) {
        (LKind::First, Variant::Plain) => match key {
            (0, 0, 0, 0) => one,
            (0, 1, 0, 1) => {
                if params.fixture() == WeightFixture::CorruptedFirstL {
                    t_plus_1()
                } else {
                    t.clone()
                }
            }
            (1, 0, 0, 1) => one,
            (0, 1, 1, 0) => &t_plus_1() * z_inv,
            (1, 0, 1, 0) => z_inv.clone(),
            (1, 1, 1, 1) => z_inv.clone(),
            _ => S::zero(),
        },
        (LKind::First, Variant::Primed) => {
            let t_inv = params.t_inv()?;
            match key {
                (0, 0, 0, 0) => t_inv.clone(),
                (0, 1, 0, 1) => one,
                (1, 0, 0, 1) => t_inv.clone(),
                (0, 1, 1, 0) => &t_plus_1() * z_inv,
                (1, 0, 1, 0) => z_inv.clone(),
                (1, 1, 1, 1) => z_inv.clone(),
                _ => S::zero(),
            }
        }
        (LKind::First, Variant::Inhom) => {
            let alpha = params.alpha(site)?;
            match key {
                (0, 0, 0, 0) => one,
                (0, 1, 0, 1) => t.clone(),
                (1, 0, 0, 1) => one,
                (0, 1, 1, 0) => &t_plus_1() * z_inv,
                (1, 0, 1, 0) => z_inv + alpha,
                (1, 1, 1, 1) => z_inv - &(t * alpha),
                _ => S::zero(),
            }
        }
        (LKind::Second, Variant::Plain) => match key {
            (0, 0, 0, 0) => z.clone(),
            (0, 1, 0, 1) => t * z,
            (1, 0, 0, 1) => one,
            (0, 1, 1, 0) => &t_plus_1() * z,
            (1, 0, 1, 0) => one,
            (1, 1, 1, 1) => one,
            _ => S::zero(),
        },
        (LKind::Second, Variant::Primed) => {
            let t_inv = params.t_inv()?;
            match key {
                (0, 0, 0, 0) => t_inv * z,
                (0, 1, 0, 1) => z.clone(),
                (1, 0, 0, 1) => one,
                (0, 1, 1, 0) => &(&one + t_inv) * z,
                (1, 0, 1, 0) => one,
                (1, 1, 1, 1) => one,
                _ => S::zero(),
            }
        }
        (LKind::Second, Variant::Inhom) => {
            let alpha = params.alpha(site)?;
            match key {
                (0, 0, 0, 0) => z + alpha,
                (0, 1, 0, 1) => &(t * z) - alpha,
                (1, 0, 0, 1) => one,
                (0, 1, 1, 0) => &t_plus_1() * z,
                (1, 0, 1, 0) => one,
                (1, 1, 1, 1) => one,
                _ => S::zero(),
            }
        }
    };
    Ok(w)
}

/// Diagonal boundary kernel entry ⟨a_out|K|a_in⟩.
pub fn k_weight<S: Scalar>(
    variant: Variant,
    a_in: u8,
    a_out: u8,
    params: &OperatorParams<S>,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    bit_ok(a_in)?;
    bit_ok(a_out)?;
    if a_in != a_out {
        return Ok(S::zero());
    }
    let w = match variant {
        Variant::Plain => {
            if a_in == 0 {
                params.t() * params.z()
            } else {
                params.z_inv().clone()
            }
        }
        Variant::Primed => {
            if a_in == 0 {
                params.t_inv()? * params.z()
            } else {
                params.z_inv().clone()
            }
        }
        Variant::Inhom => {
            if a_in == 0 {
                &(params.t() * params.z()) - params.alpha(0)?
            } else {
                params.z_inv() + params.alpha(0)?
            }
        }
    };
    Ok(w)
}

/// Intertwiner weight ⟨a_out b_out|R(z, t)|a_in b_in⟩ where `z` is already
/// the spectral ratio z_1/z_2 of the two lines it swaps.
pub fn r_weight<S: Scalar>(
    a_in: u8,
    b_in: u8,
    a_out: u8,
    b_out: u8,
    z: &S,
    t: &S,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    for b in [a_in, b_in, a_out, b_out] {
        bit_ok(b)?;
    }
    if a_in + b_in != a_out + b_out {
        return Ok(S::zero());
    }
    let z_inv = z.inv().ok_or(Error::NonInvertible("z"))?;
    let one = S::one();
    let w = match (a_in, b_in, a_out, b_out) {
        (0, 0, 0, 0) => &one + &(t * &z_inv),
        (0, 1, 0, 1) => t * &(&one - &z_inv),
        (1, 0, 0, 1) => t + &one,
        (0, 1, 1, 0) => &(t + &one) * &z_inv,
        (1, 0, 1, 0) => &z_inv - &one,
        (1, 1, 1, 1) => &z_inv + t,
        _ => S::zero(),
    };
    Ok(w)
}
