//! Serialized and printed forms of bound reports.
//!
//! JSON carries every rational twice, as an exact fraction string and as a
//! 15-significant-digit decimal. CSV carries fraction strings only.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, Comparison, ModeSet};
use crate::check::{Check, Outcome};
use crate::exactnum::{approx, ExactRat};
use crate::gamma::{gamma_envelope, gamma_initial, CurveInstance, GammaProfile};
use crate::optimize::OptimizationResult;

pub const SCHEMA_VERSION: &str = "1";

/// Fixed sweep/bound CSV header.
pub const CSV_HEADER: [&str; 9] =
    ["n", "degrees", "d", "m0", "epsilon", "hypothesis_ok", "closed_form", "relaxed", "tight"];

/// Significant digits of the decimal approximation in JSON.
pub const APPROX_DIGITS: usize = 15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatValue {
    pub exact: String,
    pub approx: f64,
}

impl From<&ExactRat> for RatValue {
    fn from(v: &ExactRat) -> Self {
        RatValue { exact: v.to_string(), approx: approx(v, APPROX_DIGITS) }
    }
}

/// Comma-separated mode names in canonical order.
pub fn mode_names(modes: ModeSet) -> Vec<String> {
    [(modes.closed_form, "closed-form"), (modes.relaxed, "relaxed"), (modes.tight, "tight")]
        .into_iter()
        .filter(|(on, _)| *on)
        .map(|(_, name)| name.to_string())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub n: u32,
    pub degrees: Vec<u64>,
    pub d: u64,
    pub modes: Vec<String>,
    pub force: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerSummary {
    pub genus_bound: RatValue,
    pub objective: RatValue,
    pub chosen_m: u64,
    pub window: [u64; 2],
    /// Profile values from `i = 0`, as exact strings.
    pub profile: Vec<String>,
}

impl From<&OptimizationResult> for OptimizerSummary {
    fn from(r: &OptimizationResult) -> Self {
        OptimizerSummary {
            genus_bound: (&r.genus_bound).into(),
            objective: (&r.objective).into(),
            chosen_m: r.chosen_m,
            window: [r.window.0, r.window.1],
            profile: r.profile.values.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResults {
    pub m0: u64,
    pub epsilon: i64,
    pub threshold: u128,
    pub closed_form: Option<RatValue>,
    pub relaxed: Option<OptimizerSummary>,
    pub tight: Option<OptimizerSummary>,
    /// Coefficients of `d²` and `d`.
    pub leading_terms: [RatValue; 2],
    pub comparisons: BTreeMap<String, RatValue>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: String,
    pub inputs: BoundInputs,
    pub results: BoundResults,
    pub hypothesis_ok: bool,
    pub discrepancies: Vec<String>,
    pub timing: Timing,
}

/// Failed asserts and audit discrepancies, as `name: detail` lines.
pub fn discrepancies(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| matches!(c.outcome, Outcome::Fail | Outcome::Discrepancy))
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect()
}

impl ReportEnvelope {
    pub fn new(report: &BoundReport, modes: ModeSet, force: bool, elapsed_ms: f64) -> Self {
        let inst = &report.instance;
        let results = BoundResults {
            m0: inst.m0(),
            epsilon: inst.epsilon(),
            threshold: report.threshold,
            closed_form: report.closed_form.as_ref().map(Into::into),
            relaxed: report.relaxed.as_ref().map(Into::into),
            tight: report.tight.as_ref().map(Into::into),
            leading_terms: [(&report.leading_terms.0).into(), (&report.leading_terms.1).into()],
            comparisons: report.comparisons.iter().map(|(k, v)| (k.clone(), v.into())).collect(),
            checks: report.checks.clone(),
        };
        ReportEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            inputs: BoundInputs {
                n: inst.surface().n(),
                degrees: inst.surface().degrees().to_vec(),
                d: inst.d(),
                modes: mode_names(modes),
                force,
            },
            results,
            hypothesis_ok: report.hypothesis_ok,
            discrepancies: discrepancies(&report.checks),
            timing: Timing { elapsed_ms },
        }
    }
}

/// Comma-joined degrees, e.g. `2,2`.
pub fn join_degrees(degrees: &[u64]) -> String {
    degrees.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// One CSV record in [`CSV_HEADER`] order. Unrequested or failed modes are
/// empty cells.
pub fn csv_record(report: &BoundReport) -> [String; 9] {
    let inst = &report.instance;
    let cell = |v: Option<&ExactRat>| v.map(ToString::to_string).unwrap_or_default();
    [
        inst.surface().n().to_string(),
        join_degrees(inst.surface().degrees()),
        inst.d().to_string(),
        inst.m0().to_string(),
        inst.epsilon().to_string(),
        report.hypothesis_ok.to_string(),
        cell(report.closed_form.as_ref()),
        cell(report.relaxed_bound()),
        cell(report.tight_bound()),
    ]
}

/// Header plus one record per report.
pub fn write_csv<W: io::Write>(out: W, reports: &[BoundReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record(csv_record(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(reports: &[BoundReport]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, reports).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

fn optimizer_line(label: &str, r: &OptimizationResult) -> String {
    format!(
        "{label:<16}{}  (m = {}, searched {}..={})\n",
        r.genus_bound, r.chosen_m, r.window.0, r.window.1
    )
}

/// Human-readable single-instance report.
pub fn render_table(report: &BoundReport) -> String {
    let inst = &report.instance;
    let mut out = String::new();
    let _ = writeln!(out, "{:<16}{}, d = {}", "instance", inst.surface(), inst.d());
    let _ = writeln!(out, "{:<16}{}", "m0", inst.m0());
    let _ = writeln!(out, "{:<16}{}", "epsilon", inst.epsilon());
    let _ = writeln!(
        out,
        "{:<16}d ≥ {} {}",
        "hypothesis",
        report.threshold,
        if report.hypothesis_ok { "holds" } else { "VIOLATED" }
    );
    if let Some(cf) = &report.closed_form {
        let _ = writeln!(out, "{:<16}{cf}", "closed-form");
    }
    if let Some(r) = &report.relaxed {
        out.push_str(&optimizer_line("relaxed", r));
    }
    if let Some(t) = &report.tight {
        out.push_str(&optimizer_line("tight", t));
    }
    let (a, b) = &report.leading_terms;
    let _ = writeln!(out, "{:<16}({a})·d² + ({b})·d", "leading");
    for (name, v) in &report.comparisons {
        let _ = writeln!(out, "{:<16}{v}", name);
    }
    for c in &report.checks {
        let _ = writeln!(out, "{c}");
    }
    out
}

/// Aligned table of several reports, one row per instance.
pub fn render_rows(reports: &[BoundReport]) -> String {
    let rows: Vec<[String; 9]> = reports.iter().map(csv_record).collect();
    let mut widths = CSV_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(CSV_HEADER.to_vec(), &mut out);
    for row in &rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

/// One line of a profile listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub i: u64,
    pub gamma: String,
    pub envelope: String,
    pub initial: String,
}

/// Rows `0 ≤ i ≤ support_end` with the profile, the envelope cap at `m` and
/// the surface's initial segment side by side.
pub fn profile_rows(inst: &CurveInstance, profile: &GammaProfile) -> Vec<ProfileRow> {
    let s = inst.surface();
    (0..=profile.support_end)
        .map(|i| ProfileRow {
            i,
            gamma: profile.value(i).to_string(),
            envelope: gamma_envelope(s, profile.m, i).to_string(),
            initial: gamma_initial(s, i).to_string(),
        })
        .collect()
}

pub fn render_profile(inst: &CurveInstance, profile: &GammaProfile) -> String {
    let mut out = format!(
        "{} profile, {}, d = {}, m = {}\n{:>4}  {:>10}  {:>10}  {:>10}\n",
        profile.mode,
        inst.surface(),
        inst.d(),
        profile.m,
        "i",
        "gamma",
        "envelope",
        "initial"
    );
    for row in profile_rows(inst, profile) {
        let _ = writeln!(out, "{:>4}  {:>10}  {:>10}  {:>10}", row.i, row.gamma, row.envelope, row.initial);
    }
    out
}

pub fn profile_csv(inst: &CurveInstance, profile: &GammaProfile) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["i", "gamma", "envelope", "initial"]).expect("memory");
    for row in profile_rows(inst, profile) {
        w.write_record([row.i.to_string(), row.gamma, row.envelope, row.initial]).expect("memory");
    }
    String::from_utf8(w.into_inner().expect("memory")).expect("UTF-8")
}

/// One `d` of a sweep in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: u64,
    pub hypothesis_ok: bool,
    pub results: BoundResults,
    pub discrepancies: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepInputs {
    pub n: u32,
    pub degrees: Vec<u64>,
    pub d_start: u64,
    pub d_stop: u64,
    pub d_step: u64,
    pub modes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEnvelope {
    pub schema_version: String,
    pub inputs: SweepInputs,
    pub rows: Vec<SweepRow>,
    pub timing: Timing,
}

impl SweepEnvelope {
    pub fn new(spec: &crate::sweep::SweepSpec, reports: &[BoundReport], elapsed_ms: f64) -> Self {
        let rows = reports
            .iter()
            .map(|r| {
                let env = ReportEnvelope::new(r, spec.modes, true, 0.0);
                SweepRow {
                    d: r.instance.d(),
                    hypothesis_ok: env.hypothesis_ok,
                    results: env.results,
                    discrepancies: env.discrepancies,
                }
            })
            .collect();
        SweepEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            inputs: SweepInputs {
                n: spec.n,
                degrees: spec.degrees.clone(),
                d_start: spec.d_start,
                d_stop: spec.d_stop,
                d_step: spec.d_step,
                modes: mode_names(spec.modes),
            },
            rows,
            timing: Timing { elapsed_ms },
        }
    }
}

/// One line of a comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub bound: String,
    pub value: Option<RatValue>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareInputs {
    pub n: u32,
    pub threefold_degrees: Vec<u64>,
    pub d: u64,
    pub m: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareEnvelope {
    pub schema_version: String,
    pub inputs: CompareInputs,
    pub surface_degrees: Vec<u64>,
    pub m0: u64,
    pub epsilon: i64,
    pub hypothesis_ok: bool,
    pub rows: Vec<CompareRow>,
    pub discrepancies: Vec<String>,
    pub timing: Timing,
}

pub fn compare_rows(c: &Comparison) -> Vec<CompareRow> {
    let row = |bound: &str, value: Option<&ExactRat>, note: String| CompareRow {
        bound: bound.to_string(),
        value: value.map(Into::into),
        note,
    };
    let r = &c.report;
    let optimizer_note = |o: Option<&OptimizationResult>| match o {
        Some(o) => format!("m = {}", o.chosen_m),
        None => "no admissible profile".to_string(),
    };
    vec![
        row("closed-form", r.closed_form.as_ref(), String::new()),
        row("relaxed", r.relaxed_bound(), optimizer_note(r.relaxed.as_ref())),
        row("tight", r.tight_bound(), optimizer_note(r.tight.as_ref())),
        row("threefold-castelnuovo", Some(&c.castelnuovo), String::new()),
        row(
            "threefold-small-degree",
            Some(&c.small_degree),
            if c.small_degree_applies { "applies (2d ≤ ∏k)".into() } else { "out of range (2d > ∏k)".into() },
        ),
        row(
            "ci-curve-genus",
            Some(&ExactRat::from_integer(c.ci_genus.clone())),
            format!("complete intersection of degree {}", c.ci_degree),
        ),
    ]
}

impl CompareEnvelope {
    pub fn new(n: u32, c: &Comparison, elapsed_ms: f64) -> Self {
        let inst = &c.report.instance;
        CompareEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            inputs: CompareInputs { n, threefold_degrees: c.threefold.clone(), d: inst.d(), m: c.m },
            surface_degrees: inst.surface().degrees().to_vec(),
            m0: inst.m0(),
            epsilon: inst.epsilon(),
            hypothesis_ok: c.report.hypothesis_ok,
            rows: compare_rows(c),
            discrepancies: discrepancies(&c.report.checks),
            timing: Timing { elapsed_ms },
        }
    }
}

pub fn render_compare(c: &Comparison) -> String {
    let inst = &c.report.instance;
    let mut out = format!(
        "curve of degree {} on the threefold {:?} in P^{}, surface {} (m = {}), m0 = {}, epsilon = {}, hypothesis {}\n",
        inst.d(),
        c.threefold,
        inst.surface().n(),
        inst.surface(),
        c.m,
        inst.m0(),
        inst.epsilon(),
        if c.report.hypothesis_ok { "holds" } else { "VIOLATED" }
    );
    let _ = writeln!(out, "{:<24}{:>16}  {:>16}  note", "bound", "exact", "approx");
    for row in compare_rows(c) {
        let (exact, approx) = match &row.value {
            Some(v) => (v.exact.clone(), format!("{}", v.approx)),
            None => ("-".to_string(), "-".to_string()),
        };
        let _ = writeln!(out, "{:<24}{exact:>16}  {approx:>16}  {}", row.bound, row.note);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_report;
    use crate::gamma::SurfaceSpec;

    fn anchor(d: u64, modes: ModeSet) -> BoundReport {
        let inst = CurveInstance::new(SurfaceSpec::new(4, vec![2, 2]).unwrap(), d).unwrap();
        bound_report(&inst, modes)
    }

    #[test]
    fn csv_header_and_row() {
        let text = csv_string(&[anchor(20, ModeSet::ALL)]);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,degrees,d,m0,epsilon,hypothesis_ok,closed_form,relaxed,tight"));
        assert_eq!(lines.next(), Some("4,\"2,2\",20,5,0,true,42,42,41"));
    }

    #[test]
    fn unrequested_modes_are_empty() {
        let modes = ModeSet { closed_form: true, relaxed: false, tight: false };
        let rec = csv_record(&anchor(20, modes));
        assert_eq!(rec[6], "42");
        assert_eq!(rec[7], "");
        assert_eq!(rec[8], "");
    }

    #[test]
    fn json_round_trip() {
        let env = ReportEnvelope::new(&anchor(21, ModeSet::ALL), ModeSet::ALL, false, 1.25);
        let text = serde_json::to_string_pretty(&env).unwrap();
        let back: ReportEnvelope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, env);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
        assert_eq!(env.schema_version, "1");
    }

    #[test]
    fn rat_value_has_both_forms() {
        let v = RatValue::from(&crate::exactnum::rat(87, 2));
        assert_eq!(v.exact, "87/2");
        assert_eq!(v.approx, 43.5);
    }

    #[test]
    fn profile_listing_tail() {
        let inst = CurveInstance::new(SurfaceSpec::new(4, vec![2, 2]).unwrap(), 20).unwrap();
        let p = crate::optimize::tight_profile(&inst, 5).unwrap();
        let rows = profile_rows(&inst, &p);
        assert_eq!(rows[5].gamma, "3");
        assert_eq!(rows[6].gamma, "1");
        assert_eq!(rows[7].gamma, "0");
    }
}
