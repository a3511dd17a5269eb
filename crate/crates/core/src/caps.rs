//! Enumeration budgets.

use crate::error::{Error, Result};

pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;
pub const DEFAULT_RANK_CAP: usize = 12;

pub const ENV_CAP_WEYL: &str = "ENVLAT_CAP_WEYL";
pub const ENV_CAP_RANK: &str = "ENVLAT_CAP_RANK";

/// Limits on brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest Weyl group order that may be enumerated element by element.
    pub weyl: u64,
    /// Largest diagram rank for which all `2^(2l)` pairs are scanned.
    pub rank: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            weyl: DEFAULT_WEYL_CAP,
            rank: DEFAULT_RANK_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by `ENVLAT_CAP_WEYL` / `ENVLAT_CAP_RANK` when set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var(ENV_CAP_WEYL) {
            caps.weyl = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{ENV_CAP_WEYL}={v:?} is not an integer")))?;
        }
        if let Ok(v) = std::env::var(ENV_CAP_RANK) {
            caps.rank = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{ENV_CAP_RANK}={v:?} is not an integer")))?;
        }
        Ok(caps)
    }
}
