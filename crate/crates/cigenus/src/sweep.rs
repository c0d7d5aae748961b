//! Bounds over a range of degrees `d`, computed in parallel and emitted in
//! input order.

use std::env;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_report, BoundReport, ModeSet};
use crate::error::{invalid, Result};
use crate::gamma::{CurveInstance, SurfaceSpec};

/// Environment variable capping the worker count.
pub const THREADS_VAR: &str = "CIGENUS_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n: u32,
    pub degrees: Vec<u64>,
    pub d_start: u64,
    /// Inclusive.
    pub d_stop: u64,
    pub d_step: u64,
    pub modes: ModeSet,
}

impl SweepSpec {
    /// Degrees visited, or an error for an empty range or zero step.
    pub fn degrees_of_curve(&self) -> Result<Vec<u64>> {
        if self.d_step == 0 {
            return Err(invalid("d step must be at least 1"));
        }
        if self.d_start == 0 {
            return Err(invalid("d must be positive"));
        }
        if self.d_start > self.d_stop {
            return Err(invalid(format!("empty d range {}..={}", self.d_start, self.d_stop)));
        }
        Ok((self.d_start..=self.d_stop).step_by(self.d_step as usize).collect())
    }
}

/// Worker count from [`THREADS_VAR`]; `None` leaves rayon's default.
pub fn thread_cap() -> Result<Option<usize>> {
    match env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(invalid(format!("{THREADS_VAR} must be a positive integer, got {raw:?}"))),
        },
    }
}

/// One report per `d`, in increasing `d`.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<BoundReport>> {
    let surface = SurfaceSpec::new(spec.n, spec.degrees.clone())?;
    let ds = spec.degrees_of_curve()?;
    let work = || -> Result<Vec<BoundReport>> {
        ds.par_iter()
            .map(|&d| CurveInstance::new(surface.clone(), d).map(|i| bound_report(&i, spec.modes)))
            .collect()
    };
    match thread_cap()? {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| crate::Error::Internal(format!("thread pool: {e}")))?
            .install(work),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(start: u64, stop: u64, step: u64) -> SweepSpec {
        SweepSpec { n: 4, degrees: vec![2, 2], d_start: start, d_stop: stop, d_step: step, modes: ModeSet::ALL }
    }

    #[test]
    fn rows_in_order() {
        let rows = run_sweep(&spec(16, 24, 1)).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.windows(2).all(|w| w[0].instance.d() < w[1].instance.d()));
        assert_eq!(rows[4].closed_form.as_ref().unwrap().to_string(), "42");
    }

    #[test]
    fn step_and_empty_range() {
        assert_eq!(spec(16, 24, 4).degrees_of_curve().unwrap(), vec![16, 20, 24]);
        assert!(spec(25, 24, 1).degrees_of_curve().is_err());
        assert!(spec(16, 24, 0).degrees_of_curve().is_err());
    }
}
