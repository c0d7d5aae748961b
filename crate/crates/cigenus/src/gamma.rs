//! Constraint data for the second-difference profile `γ` of a curve's
//! hyperplane section.
//!
//! For a degree-`d` curve on a complete intersection surface `S ⊂ P^n` cut out
//! by degrees `k_1 ≤ ... ≤ k_{n-2}`, a general hyperplane section is a set of
//! `d` points. Below the least degree `m` of a hypersurface through those
//! points that does not contain `S`, the profile is forced: it is the Hilbert
//! function of the complete intersection `(k_1, ..., k_{n-2})` in `P^{n-2}`.
//! From `m` on it is capped by the Hilbert function of `(k_1, ..., k_{n-2}, m)`,
//! nonincreasing, and the whole profile sums to `d`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exactnum::{ceil_div, rat, rat_int, ExactInt, ExactRat};
use crate::hilbert::{quotient_hf, IdealSpec};

/// Ambient dimension and sorted defining degrees of a complete intersection surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    n: u32,
    degrees: Vec<u64>,
    product: u64,
    degree_sum: u64,
}

impl SurfaceSpec {
    /// `degrees` must hold exactly `n - 2` positive entries; they are sorted.
    pub fn new(n: u32, mut degrees: Vec<u64>) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("ambient dimension must be at least 3, got {n}")));
        }
        if degrees.len() != n as usize - 2 {
            return Err(invalid(format!(
                "a surface in P^{n} needs {} defining degrees, got {}",
                n - 2,
                degrees.len()
            )));
        }
        if degrees.contains(&0) {
            return Err(invalid("surface degrees must be positive"));
        }
        degrees.sort_unstable();
        let product = degrees
            .iter()
            .try_fold(1u64, |acc, &k| acc.checked_mul(k))
            .ok_or_else(|| invalid("product of surface degrees overflows u64"))?;
        let degree_sum = degrees.iter().sum();
        Ok(SurfaceSpec { n, degrees, product, degree_sum })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `K = k_1 ⋯ k_{n-2}`, the degree of the surface.
    pub fn product(&self) -> u64 {
        self.product
    }

    /// `k_1 + ... + k_{n-2}`.
    pub fn degree_sum(&self) -> u64 {
        self.degree_sum
    }

    /// `Σk - n + 2 = Σ(k_i - 1)`: number of indices on which the relaxed
    /// profile is constant, and the level from which the initial segment
    /// has stabilized at `K`.
    pub fn plateau_width(&self) -> u64 {
        self.degree_sum - (u64::from(self.n) - 2)
    }

    /// Ideal of the surface restricted to a general `P^{n-2}`.
    pub fn section_ideal(&self) -> IdealSpec {
        IdealSpec::new(self.n - 2, self.degrees.clone()).expect("n-2 generators in n-1 variables")
    }

    /// Section ideal with one extra generator of degree `m`.
    pub fn envelope_ideal(&self, m: u64) -> IdealSpec {
        let mut degs = self.degrees.clone();
        degs.push(m);
        IdealSpec::new(self.n - 2, degs).expect("n-1 generators in n-1 variables")
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "P^{} ({})", self.n, degs.join(","))
    }
}

/// A surface together with a curve degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveInstance {
    surface: SurfaceSpec,
    d: u64,
    m0: u64,
    epsilon: i64,
}

impl CurveInstance {
    pub fn new(surface: SurfaceSpec, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(invalid("curve degree must be positive"));
        }
        let k = surface.product();
        let m0 = ceil_div(d, k);
        let epsilon = i64::try_from(i128::from(d) - i128::from(k) * i128::from(m0))
            .map_err(|_| invalid("remainder out of range"))?;
        Ok(CurveInstance { surface, d, m0, epsilon })
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `⌈d / K⌉`, the smallest degree Bezout allows for a hypersurface
    /// through the hyperplane section that does not contain the surface.
    pub fn m0(&self) -> u64 {
        self.m0
    }

    /// `d - K⌈d/K⌉`, in `(-K, 0]`. Only its square enters the bound.
    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }
}

/// Which family a profile belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMode {
    /// Initial segment, vanishing index, monotone tail, total mass.
    Relaxed,
    /// Relaxed constraints plus the envelope cap.
    Tight,
    /// Caller-supplied values.
    Custom,
}

impl fmt::Display for ProfileMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileMode::Relaxed => "relaxed",
            ProfileMode::Tight => "tight",
            ProfileMode::Custom => "custom",
        })
    }
}

/// One admissibility condition on a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    /// `γ_i` equals the surface's initial segment for `i < m`.
    InitialSegment,
    /// `γ_i ≤ gamma_envelope(i)` for `i ≥ m`.
    EnvelopeCap,
    /// `γ_{i+1} ≤ γ_i` for `i ≥ m`.
    MonotoneTail,
    /// `γ_i = 0` from the vanishing index on.
    Vanishing,
    /// `Σ γ_i = d`.
    TotalMass,
}

impl ProfileMode {
    pub fn constraints(self) -> &'static [Constraint] {
        use Constraint::*;
        match self {
            ProfileMode::Relaxed => &[InitialSegment, Vanishing, MonotoneTail, TotalMass],
            ProfileMode::Tight => &[InitialSegment, EnvelopeCap, MonotoneTail, Vanishing, TotalMass],
            ProfileMode::Custom => &[InitialSegment, MonotoneTail, Vanishing, TotalMass],
        }
    }
}

/// Finitely supported profile, indexed from `i = 0`. Entries past
/// `values.len()` are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaProfile {
    pub mode: ProfileMode,
    pub m: u64,
    pub values: Vec<ExactRat>,
    /// First index at which every later value is forced to vanish.
    pub support_end: u64,
}

impl GammaProfile {
    pub fn value(&self, i: u64) -> ExactRat {
        self.values.get(i as usize).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn total(&self) -> ExactRat {
        self.values.iter().sum()
    }

    /// `Σ (i - 1) γ_i`.
    pub fn objective(&self) -> ExactRat {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat_int(i as i64 - 1))
            .sum()
    }

    pub fn constraints(&self) -> &'static [Constraint] {
        self.mode.constraints()
    }

    /// Every violated constraint of this profile's mode, as readable messages.
    pub fn violations(&self, inst: &CurveInstance) -> Vec<String> {
        let surface = inst.surface();
        let m = self.m;
        let vanish = vanish_index(surface, m);
        let mut out = Vec::new();
        if self.values.iter().any(Signed::is_negative) {
            out.push("negative entry".to_string());
        }
        for &c in self.constraints() {
            match c {
                Constraint::InitialSegment => {
                    for i in 0..m {
                        if self.value(i) != rat_int(gamma_initial(surface, i)) {
                            out.push(format!("γ_{i} differs from the initial segment"));
                        }
                    }
                }
                Constraint::EnvelopeCap => {
                    for i in m..vanish.max(self.values.len() as u64) {
                        if self.value(i) > rat_int(gamma_envelope(surface, m, i)) {
                            out.push(format!("γ_{i} exceeds the envelope"));
                        }
                    }
                }
                Constraint::MonotoneTail => {
                    for i in m..self.values.len() as u64 {
                        if self.value(i + 1) > self.value(i) {
                            out.push(format!("γ_{} > γ_{i}", i + 1));
                        }
                    }
                }
                Constraint::Vanishing => {
                    for i in vanish..self.values.len() as u64 {
                        if !self.value(i).is_zero() {
                            out.push(format!("γ_{i} nonzero past the vanishing index {vanish}"));
                        }
                    }
                }
                Constraint::TotalMass => {
                    if self.total() != rat_int(inst.d()) {
                        out.push(format!("profile sums to {}, not d = {}", self.total(), inst.d()));
                    }
                }
            }
        }
        out
    }
}

/// Forced profile value below `m`: the Hilbert function of the surface's
/// section ideal in `P^{n-2}` at level `i`.
pub fn gamma_initial(surface: &SurfaceSpec, i: u64) -> ExactInt {
    quotient_hf(&surface.section_ideal(), i)
}

/// `gamma_initial(i)` for `i < m`.
pub fn initial_segment(surface: &SurfaceSpec, m: u64) -> Vec<ExactInt> {
    let ideal = surface.section_ideal();
    (0..m).map(|i| quotient_hf(&ideal, i)).collect()
}

/// Upper cap for `γ_i`, `i ≥ m`: the Hilbert function of the section ideal
/// plus a degree-`m` generator.
pub fn gamma_envelope(surface: &SurfaceSpec, m: u64, i: u64) -> ExactInt {
    quotient_hf(&surface.envelope_ideal(m), i)
}

/// `m + Σk - n + 2`: every admissible profile vanishes from here on.
pub fn vanish_index(surface: &SurfaceSpec, m: u64) -> u64 {
    m + surface.plateau_width()
}

/// Mass left for indices `≥ m` once the forced initial segment is placed.
pub fn tail_mass(inst: &CurveInstance, m: u64) -> Result<ExactRat> {
    let placed: ExactInt = initial_segment(inst.surface(), m).into_iter().sum();
    let rest = ExactInt::from(inst.d()) - placed;
    if rest.is_negative() {
        return Err(Error::Infeasible {
            m,
            reason: format!("the forced initial segment already exceeds d = {}", inst.d()),
            smallest_feasible: smallest_feasible_m(inst),
        });
    }
    Ok(rat_int(rest))
}

/// Sign used for the `n - 2` term of the closed-form tail mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailSign {
    /// `d - mK + ½K(Σk - n + 2)`; agrees with direct summation.
    MinusNPlusTwo,
    /// `d - mK + ½K(Σk + n - 2)`; retained for auditing only.
    PlusNMinusTwo,
}

/// Closed-form tail mass, valid once the initial segment has stabilized
/// (`m ≥ Σk - n + 2`).
pub fn tail_mass_closed_form(inst: &CurveInstance, m: u64, sign: TailSign) -> ExactRat {
    let s = inst.surface();
    let k = BigInt::from(s.product());
    let sum = BigInt::from(s.degree_sum());
    let n2 = BigInt::from(s.n()) - 2;
    let bracket = match sign {
        TailSign::MinusNPlusTwo => sum - n2,
        TailSign::PlusNMinusTwo => sum + n2,
    };
    rat_int(inst.d()) - rat_int(BigInt::from(m) * &k) + rat(k * bracket, 2)
}

/// Inequality `d ≥ K · Σk` under which the closed-form bound is proved.
pub fn threshold_check(inst: &CurveInstance) -> bool {
    u128::from(inst.d()) >= threshold(inst.surface())
}

/// `K · Σk`.
pub fn threshold(surface: &SurfaceSpec) -> u128 {
    u128::from(surface.product()) * u128::from(surface.degree_sum())
}

/// Least `m` with a nonnegative tail mass and enough envelope capacity.
///
/// The envelope quotient has total length `K m`, so capacity covers the tail
/// exactly when `m ≥ m0`; the tail mass only shrinks as `m` grows. Hence the
/// feasible set is either empty or an interval starting at `m0`.
pub fn smallest_feasible_m(inst: &CurveInstance) -> Option<u64> {
    let placed: ExactInt = initial_segment(inst.surface(), inst.m0()).into_iter().sum();
    (placed <= ExactInt::from(inst.d())).then_some(inst.m0())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(n: u32, k: &[u64]) -> SurfaceSpec {
        SurfaceSpec::new(n, k.to_vec()).unwrap()
    }

    fn inst(n: u32, k: &[u64], d: u64) -> CurveInstance {
        CurveInstance::new(surf(n, k), d).unwrap()
    }

    fn int(v: ExactInt) -> i64 {
        v.try_into().unwrap()
    }

    #[test]
    fn surface_validation() {
        assert!(SurfaceSpec::new(2, vec![]).is_err());
        assert!(SurfaceSpec::new(4, vec![2]).is_err());
        assert!(SurfaceSpec::new(4, vec![2, 0]).is_err());
        let s = surf(5, &[3, 1, 2]);
        assert_eq!(s.degrees(), &[1, 2, 3]);
        assert_eq!(s.product(), 6);
        assert_eq!(s.degree_sum(), 6);
        assert_eq!(s.plateau_width(), 3);
    }

    #[test]
    fn instance_m0_and_epsilon() {
        let c = inst(4, &[2, 2], 18);
        assert_eq!((c.m0(), c.epsilon()), (5, -2));
        let c = inst(4, &[2, 2], 20);
        assert_eq!((c.m0(), c.epsilon()), (5, 0));
        assert!(CurveInstance::new(surf(4, &[2, 2]), 0).is_err());
    }

    #[test]
    fn initial_examples() {
        let s = surf(4, &[2, 2]);
        let vals: Vec<i64> = (0..=4).map(|i| int(gamma_initial(&s, i))).collect();
        assert_eq!(vals, [1, 3, 4, 4, 4]);
        for i in 2..40 {
            assert_eq!(int(gamma_initial(&s, i)), 4);
        }
        for k in [&[1u64][..], &[3], &[2, 5], &[1, 2, 3]] {
            let s = surf(k.len() as u32 + 2, k);
            assert_eq!(int(gamma_initial(&s, 0)), 1);
        }
    }

    #[test]
    fn envelope_examples() {
        let s = surf(4, &[2, 2]);
        assert_eq!(int(gamma_envelope(&s, 5, 5)), 3);
        assert_eq!(int(gamma_envelope(&s, 5, 6)), 1);
        assert_eq!(int(gamma_envelope(&s, 5, 7)), 0);
    }

    #[test]
    fn vanish_examples() {
        assert_eq!(vanish_index(&surf(4, &[2, 2]), 5), 7);
        assert_eq!(vanish_index(&surf(5, &[1, 1, 1]), 1), 1);
        assert_eq!(vanish_index(&surf(4, &[2, 3]), 6), 9);
        let s = surf(4, &[2, 3]);
        assert_eq!(int(gamma_envelope(&s, 6, 8)), 1);
        assert_eq!(int(gamma_envelope(&s, 6, 9)), 0);
    }

    #[test]
    fn tail_mass_examples() {
        assert_eq!(tail_mass(&inst(4, &[2, 2], 20), 5).unwrap(), rat_int(4));
        assert_eq!(tail_mass(&inst(4, &[2, 2], 18), 5).unwrap(), rat_int(2));
        assert_eq!(tail_mass(&inst(4, &[2, 2], 16), 5).unwrap(), rat_int(0));
        let err = tail_mass(&inst(4, &[2, 2], 15), 5).unwrap_err();
        assert!(matches!(err, Error::Infeasible { m: 5, .. }));
    }

    #[test]
    fn tail_mass_closed_form_signs() {
        let c = inst(4, &[2, 2], 20);
        assert_eq!(tail_mass_closed_form(&c, 5, TailSign::MinusNPlusTwo), rat_int(4));
        assert_eq!(tail_mass_closed_form(&c, 5, TailSign::PlusNMinusTwo), rat_int(12));
    }

    #[test]
    fn threshold_examples() {
        assert!(threshold_check(&inst(4, &[2, 2], 20)));
        assert!(!threshold_check(&inst(4, &[2, 2], 15)));
        assert!(threshold_check(&inst(3, &[1], 1)));
        assert!(threshold_check(&inst(5, &[1, 1, 1], 3)));
    }

    #[test]
    fn envelope_below_initial_and_equal_before_m() {
        for k in [&[2u64, 2][..], &[2, 3], &[1, 4], &[3, 3]] {
            let s = surf(4, k);
            for m in 1..10 {
                for i in 0..20 {
                    let env = gamma_envelope(&s, m, i);
                    let init = gamma_initial(&s, i);
                    assert!(env <= init);
                    if i < m {
                        assert_eq!(env, init);
                    }
                }
            }
        }
    }

    #[test]
    fn profile_violations_detected() {
        let c = inst(4, &[2, 2], 20);
        let good = GammaProfile {
            mode: ProfileMode::Tight,
            m: 5,
            values: [1, 3, 4, 4, 4, 3, 1].map(rat_int).to_vec(),
            support_end: 7,
        };
        assert!(good.violations(&c).is_empty(), "{:?}", good.violations(&c));
        assert_eq!(good.objective(), rat_int(40));

        let bad = GammaProfile { values: [1, 3, 4, 4, 4, 2, 2].map(rat_int).to_vec(), ..good.clone() };
        assert_eq!(bad.violations(&c).len(), 1);

        let bad = GammaProfile { values: [1, 3, 4, 4, 4, 1, 2].map(rat_int).to_vec(), ..good };
        assert_eq!(bad.violations(&c).len(), 3);
    }
}
