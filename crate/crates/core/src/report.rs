//! Violation collection shared by the verification routines.

use crate::error::{Error, Result};

/// Upper bound on the number of violating tuples kept as samples.
pub const SAMPLE_LIMIT: usize = 64;

/// Count of failing instances of one identity plus the first few of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations<T> {
    pub count: usize,
    pub samples: Vec<T>,
}

impl<T> Default for Violations<T> {
    fn default() -> Self {
        Violations {
            count: 0,
            samples: Vec::new(),
        }
    }
}

impl<T> Violations<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, item: T) {
        self.count += 1;
        if self.samples.len() < SAMPLE_LIMIT {
            self.samples.push(item);
        }
    }

    pub fn record(&mut self, ok: bool, item: impl FnOnce() -> T) {
        if !ok {
            self.push(item());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn first(&self) -> Option<&T> {
        self.samples.first()
    }
}

/// Guard on the dimension for checks that loop over basis quintuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckLimits {
    pub max_dim: usize,
}

pub const DEFAULT_MAX_DIM: usize = 12;
pub const MAX_DIM_ENV: &str = "SUPERBRACKET_MAX_DIM";

impl Default for CheckLimits {
    fn default() -> Self {
        CheckLimits {
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl CheckLimits {
    pub fn unlimited() -> Self {
        CheckLimits { max_dim: usize::MAX }
    }

    /// Default guard, overridden by `SUPERBRACKET_MAX_DIM` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_DIM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_dim| CheckLimits { max_dim })
            .unwrap_or_default()
    }

    pub fn admit(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            Err(Error::DimensionGuard {
                dim,
                max: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

/// A failing basis tuple of some identity with the difference of its sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub indices: Vec<usize>,
    pub residual: Vec<crate::exact::Rational>,
}

impl Residual {
    pub fn new(indices: impl Into<Vec<usize>>, residual: Vec<crate::exact::Rational>) -> Self {
        Residual {
            indices: indices.into(),
            residual,
        }
    }
}
