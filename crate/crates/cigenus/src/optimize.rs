//! Maximizing `Σ (i - 1) γ_i` over admissible profiles.
//!
//! The genus of the curve is at most that sum plus one, so the largest value
//! over all admissible profiles is a genus bound. Two constraint families are
//! supported:
//!
//! * **relaxed**: the envelope cap is dropped and only the vanishing index is
//!   kept. The optimum spreads the tail mass evenly over
//!   `m ≤ i < m + Σk - n + 2`, and the objective decreases in `m` past `d/K`,
//!   so only `m = m0` is evaluated.
//! * **tight**: integer profiles under the envelope cap. Each `m` in a finite
//!   window is solved exactly and the best is kept.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, ExactInt, ExactRat};
use crate::gamma::{
    gamma_envelope, initial_segment, smallest_feasible_m, tail_mass, vanish_index, CurveInstance,
    GammaProfile, ProfileMode,
};

/// Constraint family to optimize over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OptMode {
    Relaxed,
    Tight,
}

impl fmt::Display for OptMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OptMode::Relaxed => "relaxed",
            OptMode::Tight => "tight",
        })
    }
}

/// Best profile found for an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub mode: OptMode,
    pub chosen_m: u64,
    pub profile: GammaProfile,
    /// `Σ (i - 1) γ_i`.
    pub objective: ExactRat,
    /// `objective + 1`.
    pub genus_bound: ExactRat,
    /// Inclusive range of `m` that was searched.
    pub window: (u64, u64),
}

fn infeasible(inst: &CurveInstance, m: u64, reason: String) -> Error {
    Error::Infeasible { m, reason, smallest_feasible: smallest_feasible_m(inst) }
}

fn check_m(inst: &CurveInstance, m: u64) -> Result<()> {
    if m < inst.m0() {
        return Err(infeasible(
            inst,
            m,
            format!("Bezout requires m ≥ ⌈d/K⌉ = {}", inst.m0()),
        ));
    }
    Ok(())
}

/// Relaxed extremal profile for a fixed `m`: the forced initial segment
/// followed by a constant plateau carrying the remaining mass.
///
/// When every `k_i = 1` the plateau has width zero; that is admissible only
/// when nothing is left to place.
pub fn relaxed_profile(inst: &CurveInstance, m: u64) -> Result<GammaProfile> {
    check_m(inst, m)?;
    let surface = inst.surface();
    let tail = tail_mass(inst, m)?;
    let width = surface.plateau_width();
    let mut values: Vec<ExactRat> = initial_segment(surface, m).into_iter().map(rat_int).collect();
    if width == 0 {
        if !tail.is_zero() {
            return Err(infeasible(
                inst,
                m,
                format!("tail mass {tail} cannot be placed on a zero-width plateau"),
            ));
        }
    } else {
        let height = &tail / rat_int(width);
        values.extend(std::iter::repeat_n(height, width as usize));
    }
    Ok(GammaProfile { mode: ProfileMode::Relaxed, m, values, support_end: vanish_index(surface, m) })
}

/// Tight extremal profile for a fixed `m`.
///
/// The tail is built in horizontal layers: each unit of height is a run
/// starting at `m` and extending as far right as the (monotone hull of the)
/// envelope allows. Row lengths are then as long as possible, which pushes
/// mass to the right and maximizes the increasing weights `i - 1`.
pub fn tight_profile(inst: &CurveInstance, m: u64) -> Result<GammaProfile> {
    check_m(inst, m)?;
    let surface = inst.surface();
    let tail = tail_mass(inst, m)?;
    let mut remaining = tail
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal("tail mass exceeds u64".into()))?;
    let end = vanish_index(surface, m);

    // nonincreasing tail ⇒ γ_i ≤ min_{m ≤ j ≤ i} cap_j
    let mut hull = Vec::with_capacity((end - m) as usize);
    let mut running = u64::MAX;
    for i in m..end {
        let cap = gamma_envelope(surface, m, i)
            .to_u64()
            .ok_or_else(|| Error::Internal("envelope value out of range".into()))?;
        running = running.min(cap);
        hull.push(running);
    }
    let capacity: u64 = hull.iter().sum();
    if remaining > capacity {
        return Err(infeasible(
            inst,
            m,
            format!("tail mass {remaining} exceeds envelope capacity {capacity}"),
        ));
    }

    let mut tail_values = vec![0u64; hull.len()];
    let mut layer = 1u64;
    while remaining > 0 {
        let reach = hull.iter().take_while(|&&h| h >= layer).count() as u64;
        let run = reach.min(remaining);
        for v in &mut tail_values[..run as usize] {
            *v += 1;
        }
        remaining -= run;
        layer += 1;
    }

    let values = initial_segment(surface, m)
        .into_iter()
        .chain(tail_values.into_iter().map(ExactInt::from))
        .map(rat_int)
        .collect();
    Ok(GammaProfile { mode: ProfileMode::Tight, m, values, support_end: end })
}

/// Search window for `m`, inclusive.
pub fn search_window(inst: &CurveInstance, mode: OptMode) -> (u64, u64) {
    match mode {
        OptMode::Relaxed => (inst.m0(), inst.m0()),
        OptMode::Tight => (inst.m0(), inst.m0() + inst.surface().degree_sum()),
    }
}

/// Genus bound `max Σ (i - 1) γ_i + 1` over the chosen family.
///
/// Ties between values of `m` go to the smallest `m`.
///
/// ```
/// use cigenus::gamma::{CurveInstance, SurfaceSpec};
/// use cigenus::optimize::{genus_bound_opt, OptMode};
/// use cigenus::exactnum::rat_int;
///
/// let inst = CurveInstance::new(SurfaceSpec::new(4, vec![2, 2]).unwrap(), 20).unwrap();
/// assert_eq!(genus_bound_opt(&inst, OptMode::Relaxed).unwrap().genus_bound, rat_int(42));
/// assert_eq!(genus_bound_opt(&inst, OptMode::Tight).unwrap().genus_bound, rat_int(41));
/// ```
pub fn genus_bound_opt(inst: &CurveInstance, mode: OptMode) -> Result<OptimizationResult> {
    let window = search_window(inst, mode);
    let mut best: Option<(GammaProfile, ExactRat)> = None;
    let mut last_err = None;
    for m in window.0..=window.1 {
        let profile = match mode {
            OptMode::Relaxed => relaxed_profile(inst, m),
            OptMode::Tight => tight_profile(inst, m),
        };
        match profile {
            Ok(p) => {
                let obj = p.objective();
                if best.as_ref().is_none_or(|(_, b)| obj > *b) {
                    best = Some((p, obj));
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    match best {
        Some((profile, objective)) => Ok(OptimizationResult {
            mode,
            chosen_m: profile.m,
            genus_bound: &objective + rat_int(1),
            objective,
            profile,
            window,
        }),
        None => Err(last_err.unwrap_or_else(|| {
            Error::Internal(format!("empty search window {window:?}"))
        })),
    }
}

/// `Σ (i - 1) γ_i` for an explicit integer tail starting at `m`.
pub fn tail_objective(m: u64, tail: &[u64]) -> BigInt {
    tail.iter()
        .enumerate()
        .map(|(j, &v)| BigInt::from(m as i64 + j as i64 - 1) * v)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::gamma::SurfaceSpec;

    fn inst(n: u32, k: &[u64], d: u64) -> CurveInstance {
        CurveInstance::new(SurfaceSpec::new(n, k.to_vec()).unwrap(), d).unwrap()
    }

    fn ints(v: &[ExactRat]) -> Vec<i64> {
        v.iter().map(|x| x.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn relaxed_examples() {
        let p = relaxed_profile(&inst(4, &[2, 2], 20), 5).unwrap();
        assert_eq!(ints(&p.values), [1, 3, 4, 4, 4, 2, 2]);
        assert_eq!(p.support_end, 7);

        let p = relaxed_profile(&inst(4, &[2, 2], 18), 5).unwrap();
        assert_eq!(ints(&p.values[5..]), [1, 1]);

        let p = relaxed_profile(&inst(4, &[2, 2], 16), 4).unwrap();
        assert_eq!(ints(&p.values), [1, 3, 4, 4, 2, 2]);
    }

    #[test]
    fn relaxed_plateau_can_be_fractional() {
        // n=4, k=(2,3): width 3, d=31, m0=6, tail = 31 - (1+3+5+6+6+6) = 4
        let c = inst(4, &[2, 3], 31);
        let p = relaxed_profile(&c, 6).unwrap();
        assert_eq!(p.values[6], rat(4, 3));
        assert!(p.violations(&c).is_empty());
    }

    #[test]
    fn relaxed_plateau_matches_displayed_height() {
        // ½K + (d - Km)/(Σk - n + 2) once the initial segment is stable
        let c = inst(5, &[2, 2, 3], 150);
        let s = c.surface();
        let m = c.m0();
        let expected = rat(s.product() as i64, 2)
            + rat(c.d() as i64 - (s.product() * m) as i64, s.plateau_width() as i64);
        let p = relaxed_profile(&c, m).unwrap();
        assert_eq!(p.values[m as usize], expected);
    }

    #[test]
    fn tight_examples() {
        let p = tight_profile(&inst(4, &[2, 2], 20), 5).unwrap();
        assert_eq!(ints(&p.values[5..]), [3, 1]);
        let p = tight_profile(&inst(4, &[2, 2], 18), 5).unwrap();
        assert_eq!(ints(&p.values[5..]), [1, 1]);
        let p = tight_profile(&inst(4, &[2, 2], 16), 4).unwrap();
        assert_eq!(ints(&p.values[4..]), [3, 1]);
    }

    #[test]
    fn tight_keeps_tail_monotone_when_envelope_steps_down() {
        // k=(2,3), m=6: envelope on 6..9 is (5,3,1). Mass 4 must not become (0,3,1).
        let c = inst(4, &[2, 3], 31);
        let p = tight_profile(&c, 6).unwrap();
        assert_eq!(ints(&p.values[6..]), [2, 1, 1]);
        assert!(p.violations(&c).is_empty());
    }

    #[test]
    fn below_m0_is_infeasible_and_names_m0() {
        let c = inst(4, &[2, 2], 20);
        for f in [relaxed_profile, tight_profile] {
            match f(&c, 4) {
                Err(Error::Infeasible { m: 4, smallest_feasible: Some(5), .. }) => {}
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn zero_width_plateau() {
        // plane curves: k = (1,1) in P^4
        let c = inst(4, &[1, 1], 7);
        let p = relaxed_profile(&c, 7).unwrap();
        assert_eq!(p.values.len(), 7);
        let r = genus_bound_opt(&c, OptMode::Relaxed).unwrap();
        assert_eq!(r.genus_bound, rat_int(15)); // (d-1)(d-2)/2
        assert!(relaxed_profile(&c, 8).is_err());
    }

    #[test]
    fn genus_bound_examples() {
        let r = genus_bound_opt(&inst(4, &[2, 2], 20), OptMode::Relaxed).unwrap();
        assert_eq!(r.genus_bound, rat_int(42));
        assert_eq!(r.window, (5, 5));
        let t = genus_bound_opt(&inst(4, &[2, 2], 20), OptMode::Tight).unwrap();
        assert_eq!(t.genus_bound, rat_int(41));
        assert_eq!(t.chosen_m, 5);
        assert_eq!(t.window, (5, 9));
        let r = genus_bound_opt(&inst(4, &[2, 2], 18), OptMode::Relaxed).unwrap();
        assert_eq!(r.genus_bound, rat_int(33));
        assert_eq!(r.genus_bound, &r.objective + rat_int(1));
    }

    #[test]
    fn m0_is_always_feasible() {
        // Σ_{i<m0} γ_i ≤ 1 + (m0 - 1)K ≤ d, so the search never comes up empty.
        for k in [&[1u64, 3][..], &[3, 3], &[2, 2], &[4, 5]] {
            for d in 1..60 {
                let c = inst(4, k, d);
                assert!(genus_bound_opt(&c, OptMode::Relaxed).is_ok());
                assert!(genus_bound_opt(&c, OptMode::Tight).is_ok());
            }
        }
        let c = inst(5, &[3, 3, 3], 2);
        assert!(genus_bound_opt(&c, OptMode::Tight).is_ok());
    }

    #[test]
    fn tail_objective_weights() {
        assert_eq!(tail_objective(5, &[3, 1]), BigInt::from(17));
        assert_eq!(tail_objective(0, &[1]), BigInt::from(-1));
    }
}
