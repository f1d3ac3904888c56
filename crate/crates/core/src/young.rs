//! Particle/hole configurations on the chain and their Young diagrams.
//!
//! A configuration lists N strictly increasing positions in [1, M] and a
//! role: `Particles` marks the listed sites occupied over an empty
//! background, `Holes` marks them empty over a full background. Either way
//! the positions determine a partition through
//!
//!   λ_j = positions[N−j+1] − N + j − 1,   j = 1..N,
//!
//! whose inverse is positions[k] = λ_{N−k+1} + k; the partition fits the
//! N × (M−N) box.

use crate::error::{Error, Result};
use crate::lattice::state::OccupationState;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Particles,
    Holes,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Config {
    m: usize,
    role: Role,
    positions: Vec<usize>,
}

impl Config {
    pub fn new(m: usize, role: Role, positions: Vec<usize>) -> Result<Self> {
        for (i, &p) in positions.iter().enumerate() {
            if p < 1 || p > m {
                return Err(Error::invalid("config", format!("position {p} outside 1..={m}")));
            }
            if i > 0 && positions[i - 1] >= p {
                return Err(Error::invalid(
                    "config",
                    format!("positions must strictly increase, got {} then {p}", positions[i - 1]),
                ));
            }
        }
        Ok(Config { m, role, positions })
    }

    pub fn particles(m: usize, positions: Vec<usize>) -> Result<Self> {
        Config::new(m, Role::Particles, positions)
    }

    pub fn holes(m: usize, positions: Vec<usize>) -> Result<Self> {
        Config::new(m, Role::Holes, positions)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The occupation word this configuration describes.
    pub fn state(&self) -> Result<OccupationState> {
        let mut bits = 0u32;
        for &p in &self.positions {
            bits |= 1 << (p - 1);
        }
        match self.role {
            Role::Particles => OccupationState::new(self.m, bits),
            Role::Holes => {
                let full = OccupationState::full(self.m)?;
                OccupationState::new(self.m, full.bits() & !bits)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty(n: usize) -> Self {
        YoungDiagram { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

pub fn config_to_partition(c: &Config) -> YoungDiagram {
    let n = c.n();
    let parts = (1..=n)
        .map(|j| (c.positions()[n - j] + j - 1 - n) as u32)
        .collect();
    YoungDiagram { parts }
}

pub fn partition_to_config(lam: &YoungDiagram, m: usize, role: Role) -> Result<Config> {
    let n = lam.len();
    if n > m {
        return Err(Error::invalid("partition", format!("{n} parts exceed {m} sites")));
    }
    if let Some(&first) = lam.parts().first() {
        let room = m as i64 - n as i64;
        if (first as i64) > room {
            return Err(Error::PartitionTooWide { lambda1: first, room });
        }
    }
    let positions = (1..=n).map(|k| lam.parts()[n - k] as usize + k).collect();
    Config::new(m, role, positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn states_for_both_roles() {
        let vac = Config::particles(3, vec![]).unwrap();
        assert_eq!(vac.state().unwrap().to_string(), "000");
        let p = Config::particles(5, vec![2, 3, 5]).unwrap();
        assert_eq!(p.state().unwrap().bits(), 0b10110);
        assert_eq!(p.state().unwrap().to_string(), "01101");
        let h = Config::holes(5, vec![1, 2, 4]).unwrap();
        assert_eq!(h.state().unwrap().to_string(), "00101");
    }

    #[test]
    fn invalid_positions_rejected() {
        assert!(Config::particles(3, vec![0]).is_err());
        assert!(Config::particles(3, vec![4]).is_err());
        assert!(Config::particles(3, vec![2, 2]).is_err());
        assert!(Config::particles(3, vec![3, 1]).is_err());
    }

    #[test]
    fn partition_from_config() {
        let minimal = Config::particles(6, vec![1, 2, 3]).unwrap();
        assert_eq!(config_to_partition(&minimal).parts(), &[0, 0, 0]);
        let c = Config::particles(5, vec![2, 3, 5]).unwrap();
        assert_eq!(config_to_partition(&c).parts(), &[2, 1, 1]);
        let single = Config::holes(7, vec![4]).unwrap();
        assert_eq!(config_to_partition(&single).parts(), &[3]);
    }

    #[test]
    fn config_from_partition() {
        let lam = YoungDiagram::new(vec![0, 0, 0]).unwrap();
        let c = partition_to_config(&lam, 5, Role::Particles).unwrap();
        assert_eq!(c.positions(), &[1, 2, 3]);
        let lam = YoungDiagram::new(vec![2, 1, 1]).unwrap();
        let c = partition_to_config(&lam, 5, Role::Particles).unwrap();
        assert_eq!(c.positions(), &[2, 3, 5]);
        let too_wide = YoungDiagram::new(vec![3]).unwrap();
        assert_eq!(
            partition_to_config(&too_wide, 3, Role::Particles).unwrap_err(),
            Error::PartitionTooWide { lambda1: 3, room: 2 },
        );
    }

    #[test]
    fn round_trip_over_all_small_configs() {
        for m in 0..=8usize {
            for bits in 0u32..(1 << m) {
                let positions: Vec<usize> = (1..=m).filter(|&s| bits >> (s - 1) & 1 == 1).collect();
                for role in [Role::Particles, Role::Holes] {
                    let c = Config::new(m, role, positions.clone()).unwrap();
                    let lam = config_to_partition(&c);
                    assert!(lam.parts().windows(2).all(|w| w[0] >= w[1]));
                    let back = partition_to_config(&lam, m, role).unwrap();
                    assert_eq!(back, c);
                }
            }
        }
    }

    #[test]
    fn weakly_decreasing_enforced() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![3, 3, 1, 0]).is_ok());
        assert_eq!(YoungDiagram::empty(3).parts(), &[0, 0, 0]);
    }
}
