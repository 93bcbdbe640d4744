//! Process-wide resource caps.
//!
//! Anything that runs elimination is capped on the dense entry count
//! `rows * cols`, since fill-in can approach it. Structured operators that
//! are only applied or composed (face maps, transpositions, norms) are
//! capped on their stored entries instead.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_ENTRY_CAP: u64 = 10_000_000;
pub const DEFAULT_SECTION_CAP: u64 = 1_000_000;
pub const ENTRY_CAP_ENV: &str = "SYMCOH_GUARD_ENTRIES";

static ENTRY_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ENTRY_CAP);

pub fn entry_cap() -> u64 {
    ENTRY_CAP.load(Ordering::Relaxed)
}

pub fn set_entry_cap(cap: u64) {
    ENTRY_CAP.store(cap, Ordering::Relaxed);
}

/// Reads the cap from `SYMCOH_GUARD_ENTRIES` if set.
pub fn entry_cap_from_env() -> Result<Option<u64>> {
    match std::env::var(ENTRY_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{ENTRY_CAP_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

pub fn check_entries(what: &str, rows: u128, cols: u128) -> Result<()> {
    let requested = rows.saturating_mul(cols);
    let cap = entry_cap() as u128;
    if requested > cap {
        return Err(Error::ResourceGuard { what: what.to_string(), requested, cap });
    }
    Ok(())
}

/// `base^exp`, saturating.
pub fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
