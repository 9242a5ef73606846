//! Named, reproducible checks binding the other modules together, with
//! machine-readable JSON reports.
//!
//! Every numeric detail in a passing report is recomputed on the spot; the
//! only inputs taken on faith are the builtin presentations and the automizer
//! identification for the sporadic cases, and those are labelled as input
//! data inside the reports. Each check has a deliberately corrupted variant;
//! `run_all` executes them and requires them to fail, guarding the passing
//! checks against vacuity.

mod checks;
mod fusioncheck;
mod report;
mod wreath;

pub use checks::{
    check_lemma31, check_lemma31_corrupted, check_lemma32_corrupted, check_lemma32_scenarios,
    check_lemma33, check_lemma33_corrupted, AUTOMIZER_INPUT_DATA,
};
pub use fusioncheck::{
    builtin_group, check_fusion_axioms, check_fusion_axioms_from_file, check_fusion_corrupted,
};
pub use report::{negative_control, CheckReport, CheckStatus, ReportBuilder};
pub use wreath::{check_wreath_corrupted, check_wreath_model, WreathBase};

use crate::pcgroup::SylowKind;
use crate::Result;

/// All checks in declaration order, each paired with its negative control.
pub fn run_all(seed: u64, only: Option<&str>) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = Vec::new();
    let mut push = |r: CheckReport| reports.push(r);

    push(check_lemma31(seed));
    push(negative_control(
        "check_lemma31:negative_control",
        check_lemma31_corrupted(seed),
    ));
    for kind in SylowKind::ALL {
        push(check_lemma33(kind));
    }
    push(negative_control(
        "check_lemma33:negative_control",
        check_lemma33_corrupted(),
    ));
    push(check_lemma32_scenarios(seed));
    push(negative_control(
        "check_lemma32_scenarios:negative_control",
        check_lemma32_corrupted(),
    ));
    for base in [WreathBase::A6, WreathBase::L32] {
        push(check_wreath_model(base));
    }
    push(negative_control(
        "check_wreath_model:negative_control",
        check_wreath_corrupted(),
    ));
    for name in ["S4", "D8", "A6", "L3(2)"] {
        push(check_fusion_axioms(
            builtin_group(name).expect("builtin group name"),
        ));
    }
    push(negative_control(
        "check_fusion_axioms:negative_control",
        check_fusion_corrupted(),
    ));

    match only {
        None => reports,
        Some(filter) => reports
            .into_iter()
            .filter(|r| r.check_id == filter)
            .collect(),
    }
}

/// 0 when everything passed, 1 when some check failed, 2 on operational
/// errors (including an empty selection).
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.is_empty() || reports.iter().any(|r| r.status == CheckStatus::Error) {
        2
    } else if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

/// Serialize a report array deterministically (keys sorted, fixed field
/// order).
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn write_reports(path: &std::path::Path, reports: &[CheckReport]) -> Result<()> {
    std::fs::write(path, reports_to_json(reports))?;
    Ok(())
}
