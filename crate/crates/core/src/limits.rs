//! Order caps for construction and exhaustive search.
//!
//! Three caps apply: graphs built from family expressions, exhaustive
//! enumeration, and enumeration with a spectral post-filter (where one
//! characteristic polynomial per graph dominates the cost). None may exceed
//! [`MAX_ORDER`], the width of the adjacency bitrows.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard upper bound on the order of any [`Graph`](crate::Graph).
pub const MAX_ORDER: usize = 16;

pub const DEFAULT_CONSTRUCTION_CAP: usize = 12;
pub const DEFAULT_ENUMERATION_CAP: usize = 10;
pub const DEFAULT_SPECTRAL_CAP: usize = 9;

/// Environment variable overriding the enumeration cap.
pub const ENV_ENUMERATION_CAP: &str = "DQSPEC_ENUM_CAP";
/// Environment variable overriding the construction cap.
pub const ENV_CONSTRUCTION_CAP: &str = "DQSPEC_BUILD_CAP";
/// Environment variable overriding the spectral-filter cap.
pub const ENV_SPECTRAL_CAP: &str = "DQSPEC_SPECTRAL_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub construction: usize,
    pub enumeration: usize,
    pub spectral: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            construction: DEFAULT_CONSTRUCTION_CAP,
            enumeration: DEFAULT_ENUMERATION_CAP,
            spectral: DEFAULT_SPECTRAL_CAP,
        }
    }
}

impl Limits {
    /// Defaults overridden by any of the `DQSPEC_*_CAP` environment variables.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        for (var, slot) in [
            (ENV_CONSTRUCTION_CAP, &mut limits.construction),
            (ENV_ENUMERATION_CAP, &mut limits.enumeration),
            (ENV_SPECTRAL_CAP, &mut limits.spectral),
        ] {
            if let Ok(raw) = std::env::var(var) {
                *slot = raw.trim().parse().map_err(|_| {
                    Error::InvalidParameters(format!("{var}={raw:?} is not an order"))
                })?;
            }
        }
        limits.validate()?;
        Ok(limits)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, cap) in [
            ("construction", self.construction),
            ("enumeration", self.enumeration),
            ("spectral", self.spectral),
        ] {
            if cap == 0 || cap > MAX_ORDER {
                return Err(Error::InvalidParameters(format!(
                    "{name} cap {cap} must lie in 1..={MAX_ORDER}"
                )));
            }
        }
        Ok(())
    }

    pub fn check_construction(&self, what: &str, order: usize) -> Result<()> {
        check(
            what,
            order,
            self.construction,
            "--build-cap or DQSPEC_BUILD_CAP",
        )
    }

    pub fn check_enumeration(&self, what: &str, order: usize) -> Result<()> {
        check(what, order, self.enumeration, "--cap or DQSPEC_ENUM_CAP")
    }

    pub fn check_spectral(&self, what: &str, order: usize) -> Result<()> {
        check(
            what,
            order,
            self.spectral.min(self.enumeration),
            "--spectral-cap or DQSPEC_SPECTRAL_CAP",
        )
    }
}

pub(crate) fn check(what: &str, order: usize, cap: usize, hint: &'static str) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded {
            what: what.to_string(),
            order,
            cap,
            hint,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_hard(what: &str, order: usize) -> Result<()> {
    check(
        what,
        order,
        MAX_ORDER,
        "a smaller input; this is the bitrow width",
    )
}
