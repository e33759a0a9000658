pub mod fisher;
pub mod phase;
pub mod shift;
pub mod wigner;

use crate::error::{CliError, CliResult};

/// Atom numbers from a comma-separated list.
pub fn parse_atoms(raw: &str) -> CliResult<Vec<u32>> {
    raw.split(',')
        .map(|s| {
            let s = s.trim();
            match s.parse::<u32>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(CliError::Param(format!("--n: `{s}` is not a positive atom number"))),
            }
        })
        .collect()
}

/// `count` evenly spaced points on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect(),
    }
}
