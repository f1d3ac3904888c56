//! Bit-encoded occupation states and sparse state vectors.
//!
//! Site j of a chain with M ≤ 24 sites lives at bit j−1, so the vacuum is
//! the zero word and the fully occupied state is (1 << M) − 1. A
//! [`StateVector`] maps occupied-state words to scalar amplitudes and never
//! stores a zero amplitude; iteration order is the word order, which keeps
//! every downstream report deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{RefOps, Scalar};

pub const MAX_SITES: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccupationState {
    m: u8,
    bits: u32,
}

impl OccupationState {
    pub fn new(m: usize, bits: u32) -> Result<Self> {
        if m > MAX_SITES {
            return Err(Error::invalid("site count", format!("M = {m} exceeds {MAX_SITES}")));
        }
        if m < 32 && bits >> m != 0 {
            return Err(Error::invalid(
                "occupation bits",
                format!("bits {bits:#b} outside {m} sites"),
            ));
        }
        Ok(OccupationState { m: m as u8, bits })
    }

    /// No particles.
    pub fn vacuum(m: usize) -> Result<Self> {
        OccupationState::new(m, 0)
    }

    /// Every site occupied.
    pub fn full(m: usize) -> Result<Self> {
        OccupationState::new(m, if m == 0 { 0 } else { (1u32 << m) - 1 })
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// 1-based site occupancy.
    pub fn occupied(&self, site: usize) -> bool {
        debug_assert!(site >= 1 && site <= self.m());
        (self.bits >> (site - 1)) & 1 == 1
    }

    pub fn particle_count(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// Site-order rendering: site 1 leftmost, `1` = occupied.
impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for site in 1..=self.m() {
            write!(f, "{}", if self.occupied(site) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}>")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateVector<S> {
    m: usize,
    amps: BTreeMap<u32, S>,
}

impl<S: Scalar> StateVector<S>
where
    for<'a> &'a S: RefOps<S>,
{
    pub fn zero(m: usize) -> Self {
        StateVector { m, amps: BTreeMap::new() }
    }

    pub fn unit(state: OccupationState) -> Self {
        let mut v = StateVector::zero(state.m());
        v.amps.insert(state.bits(), S::one());
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.amps.len()
    }

    /// Amplitude on a basis state (zero when absent).
    pub fn coeff(&self, state: &OccupationState) -> S {
        debug_assert_eq!(state.m(), self.m);
        self.amps.get(&state.bits()).cloned().unwrap_or_else(S::zero)
    }

    /// Accumulate `amp` on the basis word `bits`, dropping exact zeros.
    pub fn add_term(&mut self, bits: u32, amp: S) {
        if amp.is_zero() {
            return;
        }
        match self.amps.entry(bits) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(amp);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &amp;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        if c.is_zero() {
            return StateVector::zero(self.m);
        }
        StateVector {
            m: self.m,
            amps: self.amps.iter().map(|(&b, a)| (b, c * a)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::SizeMismatch { left: self.m, right: other.m });
        }
        let mut out = self.clone();
        for (&b, a) in &other.amps {
            out.add_term(b, a.clone());
        }
        Ok(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = (OccupationState, &S)> {
        let m = self.m;
        self.amps.iter().map(move |(&bits, amp)| {
            (OccupationState { m: m as u8, bits }, amp)
        })
    }
}
