use proptest::prelude::*;

use cigenus::bounds::{bound_report, calclem_check, closed_form_bound, leading_terms, ModeSet};
use cigenus::exactnum::{binom_trunc, rat_int, ExactInt};
use cigenus::gamma::{
    gamma_envelope, gamma_initial, tail_mass, tail_mass_closed_form, vanish_index, CurveInstance, SurfaceSpec,
    TailSign,
};
use cigenus::hilbert::{quotient_hf, quotient_hf_series_oracle, IdealSpec};
use cigenus::optimize::{genus_bound_opt, OptMode};
use cigenus::report::{csv_record, ReportEnvelope};

fn ideal() -> impl Strategy<Value = IdealSpec> {
    (0u32..6).prop_flat_map(|n| {
        prop::collection::vec(1u64..6, 0..=n as usize + 1).prop_map(move |d| IdealSpec::new(n, d).unwrap())
    })
}

fn surface() -> impl Strategy<Value = SurfaceSpec> {
    (3u32..6).prop_flat_map(|n| {
        prop::collection::vec(1u64..5, n as usize - 2).prop_map(move |k| SurfaceSpec::new(n, k).unwrap())
    })
}

/// Instances within the proven range `d ≥ K·Σk`.
fn instance() -> impl Strategy<Value = CurveInstance> {
    (surface(), 0u64..200).prop_map(|(s, extra)| {
        let d = s.product() * s.degree_sum() + extra;
        CurveInstance::new(s, d).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quotient_matches_series(ideal in ideal()) {
        let series = quotient_hf_series_oracle(&ideal, 25);
        for l in 0..=25u64 {
            prop_assert_eq!(&series[l as usize], &quotient_hf(&ideal, l));
        }
    }

    #[test]
    fn quotient_is_nonnegative_and_bounded(ideal in ideal(), l in 0u64..30) {
        let h = quotient_hf(&ideal, l);
        let n = ideal.ambient_dim();
        prop_assert!(h >= ExactInt::from(0));
        prop_assert!(h <= binom_trunc(l as i64 + i64::from(n), i64::from(n)).unwrap());
    }

    #[test]
    fn envelope_vanishes_at_index(s in surface(), m in 1u64..10) {
        let v = vanish_index(&s, m);
        prop_assert!(gamma_envelope(&s, m, v) == ExactInt::from(0));
        prop_assert!(gamma_envelope(&s, m, v - 1) > ExactInt::from(0));
        for i in 0..m {
            prop_assert_eq!(gamma_envelope(&s, m, i), gamma_initial(&s, i));
        }
    }

    #[test]
    fn epsilon_in_range(inst in instance()) {
        let k = inst.surface().product() as i64;
        prop_assert!(inst.epsilon() <= 0 && inst.epsilon() > -k);
        prop_assert_eq!(inst.d() as i64, k * inst.m0() as i64 + inst.epsilon());
    }

    #[test]
    fn closed_form_equals_relaxed(inst in instance()) {
        let relaxed = genus_bound_opt(&inst, OptMode::Relaxed).unwrap();
        prop_assert_eq!(closed_form_bound(&inst), relaxed.genus_bound);
    }

    #[test]
    fn tight_dominated_and_admissible(inst in instance()) {
        let relaxed = genus_bound_opt(&inst, OptMode::Relaxed).unwrap();
        let tight = genus_bound_opt(&inst, OptMode::Tight).unwrap();
        prop_assert!(tight.genus_bound <= relaxed.genus_bound);
        prop_assert!(tight.profile.violations(&inst).is_empty());
        prop_assert!(relaxed.profile.violations(&inst).is_empty());
        prop_assert!(tight.chosen_m >= inst.m0());
    }

    #[test]
    fn bound_minus_leading_terms_periodic(inst in instance()) {
        let s = inst.surface();
        let (a, b) = leading_terms(s);
        let rest = |d: u64| {
            let dd = rat_int(d);
            closed_form_bound(&CurveInstance::new(s.clone(), d).unwrap()) - (&a * &dd * &dd + &b * &dd)
        };
        prop_assert_eq!(rest(inst.d()), rest(inst.d() + s.product()));
    }

    #[test]
    fn tail_mass_closed_form_once_stable(inst in instance()) {
        let m = inst.m0();
        if m >= inst.surface().plateau_width() {
            prop_assert_eq!(
                tail_mass(&inst, m).unwrap(),
                tail_mass_closed_form(&inst, m, TailSign::MinusNPlusTwo)
            );
        }
    }

    #[test]
    fn weighted_binomial_identity(a in 0u64..60, b in 0u64..60, n in 2u32..12) {
        prop_assert!(calclem_check(a, b, n).unwrap().equal);
    }

    #[test]
    fn report_json_round_trip(inst in instance()) {
        let report = bound_report(&inst, ModeSet::ALL);
        prop_assert!(report.checks.iter().all(|c| !c.is_failure()));
        let env = ReportEnvelope::new(&report, ModeSet::ALL, false, 0.5);
        let text = serde_json::to_string(&env).unwrap();
        let back: ReportEnvelope = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, env);
    }

    #[test]
    fn csv_record_echoes_instance(inst in instance()) {
        let rec = csv_record(&bound_report(&inst, ModeSet { closed_form: true, relaxed: false, tight: false }));
        let degrees: Vec<u64> = rec[1].split(',').map(|x| x.parse().unwrap()).collect();
        prop_assert_eq!(degrees.as_slice(), inst.surface().degrees());
        prop_assert_eq!(rec[2].parse::<u64>().unwrap(), inst.d());
        prop_assert!(rec[7].is_empty() && rec[8].is_empty());
    }
}
