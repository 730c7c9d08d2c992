use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard bound on the side length of a matrix handed to the determinant routine.
pub const MAX_DET_DIM: usize = 16;

/// Hard bound on the vertex count of a simplicial complex (subset scans are exponential).
pub const MAX_COMPLEX_VERTICES: usize = 16;

/// Resource caps. Every expensive routine checks the relevant field and
/// fails with [`Error::Resource`] instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of exponent tuples scanned when enumerating a symbolic power.
    pub enumeration: u64,
    /// Maximum number of minimal generators any intermediate ideal may carry.
    pub generators: u64,
    /// Override for the largest ordinary power exponent `r`; `None` uses [`Limits::power_exponent_cap`].
    pub max_power: Option<u32>,
    /// Override for the Hilbert-function degree cap; `None` uses `4 * (1 + max generator degree)`.
    pub degree_cap: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 50_000_000,
            generators: 5_000_000,
            max_power: None,
            degree_cap: None,
        }
    }
}

impl Limits {
    /// Largest admissible ordinary power exponent for `s` variables: 8 up to
    /// four variables, 5 for five, shrinking beyond.
    pub fn power_exponent_cap(&self, s: usize) -> u32 {
        if let Some(cap) = self.max_power {
            return cap;
        }
        match s {
            0..=4 => 8,
            5 => 5,
            6 => 4,
            _ => 3,
        }
    }

    pub fn check_power(&self, s: usize, r: u32) -> Result<()> {
        let cap = self.power_exponent_cap(s);
        if r > cap {
            return Err(Error::resource(
                format!("ordinary power exponent r = {r} in {s} variables"),
                cap as u64,
            ));
        }
        Ok(())
    }

    pub fn check_generators(&self, what: &str, count: usize) -> Result<()> {
        if count as u64 > self.generators {
            return Err(Error::resource(
                format!("{what}: {count} generators"),
                self.generators,
            ));
        }
        Ok(())
    }

    pub fn degree_cap_for(&self, max_generator_degree: usize) -> usize {
        self.degree_cap.unwrap_or(4 * (1 + max_generator_degree))
    }
}
