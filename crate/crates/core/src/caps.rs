//! Size caps for the exhaustive procedures.
//!
//! Every exponential search in this crate refuses inputs above a desk-scale
//! cap instead of running for hours. Setting `PATHPAIR_CAP_OVERRIDE` to any
//! non-empty value other than `0` lifts the soft caps; the representation
//! limits (64 vertices in bitmask searches, 128 edges in the path solver)
//! still apply. Use at your own risk.

use thiserror::Error;

pub const CAP_ENV: &str = "PATHPAIR_CAP_OVERRIDE";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{what} is {actual}, above the cap of {cap} (set {CAP_ENV} to lift)")]
pub struct CapExceeded {
    pub what: &'static str,
    pub actual: u128,
    pub cap: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Vertices for the clique-minor search.
    pub minor_vertices: usize,
    /// Vertices for the exhaustive cut-condition sweep.
    pub cut_vertices: usize,
    /// Multiedges for the good-matching search.
    pub matching_multiedges: usize,
    /// Pairings enumerated by the verifier.
    pub pairings: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            minor_vertices: 15,
            cut_vertices: 24,
            matching_multiedges: 40,
            pairings: 2_000_000,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps {
            minor_vertices: 64,
            cut_vertices: 64,
            matching_multiedges: usize::MAX,
            pairings: u128::MAX,
        }
    }

    /// Defaults, or [`Caps::unlimited`] when the override variable is set.
    pub fn from_env() -> Self {
        match std::env::var(CAP_ENV) {
            Ok(v) if !v.is_empty() && v != "0" => Caps::unlimited(),
            _ => Caps::default(),
        }
    }

    pub(crate) fn check(what: &'static str, actual: u128, cap: u128) -> Result<(), CapExceeded> {
        if actual > cap {
            Err(CapExceeded { what, actual, cap })
        } else {
            Ok(())
        }
    }
}
