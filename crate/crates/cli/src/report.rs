//! Deterministic JSON reports.
//!
//! The schema is fixed: a ring report is
//! `{ring, order, classification, checks: [{id, status, details}]}`
//! and a corpus report wraps a list of ring reports behind its caveat
//! and aggregate counts.  Field order never varies, arrays are in
//! canonical order (catalog order for checks, corpus order for rings,
//! sorted flag names for witnesses), and timing data is deliberately
//! absent, so two runs over the same input produce identical bytes.

use pure_spectra::classify::ClassReport;
use pure_spectra::corpus::CorpusReport;
use pure_spectra::verify::CheckResult;
use serde_json::{json, Value};

pub fn check_json(check: &CheckResult) -> Value {
    json!({
        "id": check.id,
        "status": check.status.to_string(),
        "details": check.details,
    })
}

pub fn classification_json(report: &ClassReport) -> Value {
    let mut witnesses = report.witnesses.clone();
    witnesses.sort();
    json!({
        "is_reduced": report.is_reduced,
        "is_gelfand": report.is_gelfand,
        "is_mp": report.is_mp,
        "krull_dimension": report.krull_dimension,
        "is_pp_ring": report.is_pp_ring,
        "is_von_neumann_regular": report.is_von_neumann_regular,
        "all_pure_idempotent_generated": report.all_pure_idempotent_generated,
        "is_semi_noetherian": report.is_semi_noetherian,
        "nu_surjective": report.nu_surjective,
        "witnesses": witnesses
            .iter()
            .map(|(flag, witness)| json!({"flag": flag, "witness": witness}))
            .collect::<Vec<_>>(),
    })
}

pub fn ring_report_json(
    ring: &str,
    order: Option<u64>,
    classification: Option<&ClassReport>,
    checks: &[CheckResult],
) -> Value {
    json!({
        "ring": ring,
        "order": order,
        "classification": classification.map(classification_json),
        "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

pub fn corpus_report_json(report: &CorpusReport) -> Value {
    json!({
        "caveat": report.caveat,
        "aggregate": {
            "pass": report.passes,
            "fail": report.fails,
            "skipped": report.skips,
        },
        "conjecture": {
            "rings": report.conjecture.rings,
            "agreements": report.conjecture.agreements,
            "disagreements": report.conjecture.disagreements,
        },
        "rings": report
            .rings
            .iter()
            .map(|r| ring_report_json(&r.label, r.order, r.classification.as_ref(), &r.checks))
            .collect::<Vec<_>>(),
    })
}

/// Pretty-print with a trailing newline (the on-disk report format).
pub fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report values are plain data");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use pure_spectra::ring::build_zmod;
    use pure_spectra::spectra::Analysis;
    use pure_spectra::verify::run_check;
    use pure_spectra::Limits;

    #[test]
    fn ring_report_has_the_stable_field_order() {
        let limits = Limits::default();
        let ring = build_zmod(4, &limits).unwrap();
        let analysis = Analysis::new(&ring, &limits).unwrap();
        let check = run_check(&analysis, "P-T3.10").unwrap();
        let report = ring_report_json(
            "Z/4",
            Some(4),
            Some(&pure_spectra::classify::classify(&analysis)),
            &[check],
        );
        let keys: Vec<&String> = report.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["ring", "order", "classification", "checks"]);
        let check_keys: Vec<&String> = report["checks"][0].as_object().unwrap().keys().collect();
        assert_eq!(check_keys, ["id", "status", "details"]);
        assert_eq!(report["checks"][0]["status"], "pass");
        assert_eq!(report["order"], 4);
    }

    #[test]
    fn symbolic_rings_serialize_with_a_null_order() {
        let report = ring_report_json("Z", None, None, &[]);
        assert!(report["order"].is_null());
        assert!(report["classification"].is_null());
        assert_eq!(report["checks"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn rendering_is_deterministic() {
        let limits = Limits::default();
        let ring = build_zmod(6, &limits).unwrap();
        let analysis = Analysis::new(&ring, &limits).unwrap();
        let checks = pure_spectra::verify::run_all(&analysis);
        let a = render(&ring_report_json("Z/6", Some(6), None, &checks));
        let checks2 = pure_spectra::verify::run_all(&analysis);
        let b = render(&ring_report_json("Z/6", Some(6), None, &checks2));
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
