//! Runs a directory of cases described by `manifest.json`:
//!
//! ```json
//! {"cases": [
//!   {"name": "lhalf", "kind": "tnorm", "file": "tnorms/lhalf.json",
//!    "expect": {"verdict": "fails"}},
//!   {"name": "m3", "kind": "qcat", "file": "qcats/m3_bool.json",
//!    "expect": {"cd": false, "continuous": true, "lambda-gamma": "not_integral"}}
//! ]}
//! ```
//!
//! A t-norm case compares the classifier, the off-diagonal scan and the
//! counterexample report against the expected verdict. A Q-category case runs
//! each listed check with both arms; the expectation is a verdict or the
//! snake_case name of the expected error.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use qdl_core::checkers::{Arm, CheckOptions};
use qdl_core::interval::counterexample_report;
use qdl_core::rat;
use qdl_core::tnorm::{classify, scan_offdiagonal, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::args::CheckKind;
use crate::commands::{run_check, Outcome};
use crate::load::{load_category, load_tnorm, read_json};

const COUNTEREXAMPLE_SAMPLES: usize = 8;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    cases: Vec<Case>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Case {
    Tnorm {
        name: String,
        file: String,
        expect: TnormExpect,
    },
    Qcat {
        name: String,
        file: String,
        expect: BTreeMap<String, Expected>,
    },
}

impl Case {
    fn name(&self) -> &str {
        match self {
            Case::Tnorm { name, .. } | Case::Qcat { name, .. } => name,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TnormExpect {
    verdict: Verdict,
    offending: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Expected {
    Verdict(bool),
    Error(String),
}

#[derive(Serialize)]
struct Row {
    case: String,
    check: String,
    expected: serde_json::Value,
    actual: serde_json::Value,
    ok: bool,
}

fn row(case: &str, check: &str, expected: impl Serialize, actual: impl Serialize) -> Row {
    let expected = serde_json::to_value(expected).expect("serializable");
    let actual = serde_json::to_value(actual).expect("serializable");
    Row {
        case: case.into(),
        check: check.into(),
        ok: expected == actual,
        expected,
        actual,
    }
}

fn tnorm_rows(name: &str, path: &Path, expect: &TnormExpect) -> Result<Vec<Row>> {
    let t = load_tnorm(path)?;
    let c = classify(&t);
    let passes = expect.verdict.passes();
    let scan = scan_offdiagonal(&t, &rat(1, 64), &rat(1, 8))?;
    let report = counterexample_report(&t, COUNTEREXAMPLE_SAMPLES)?;
    let mut rows = vec![
        row(name, "classify", expect.verdict, c.verdict),
        row(name, "scan_empty", passes, scan.is_empty()),
        row(name, "counterexample_empty", passes, report.is_empty()),
    ];
    if let Some(n) = expect.offending {
        rows.push(row(name, "offending", n, c.offending.len()));
    }
    Ok(rows)
}

fn qcat_rows(
    name: &str,
    path: &Path,
    expect: &BTreeMap<String, Expected>,
    cap: usize,
) -> Result<Vec<Row>> {
    let a = load_category(path)?;
    let opts = CheckOptions {
        arm: Arm::Both,
        cap,
    };
    let mut rows = Vec::new();
    for (check, expected) in expect {
        let kind = CheckKind::from_str(check, false)
            .map_err(|_| anyhow::anyhow!("case `{name}`: unknown check `{check}`"))?;
        let actual = match run_check(kind, &a, opts) {
            Ok(r) => Expected::Verdict(r.verdict),
            Err(e) => Expected::Error(e.kind().to_string()),
        };
        rows.push(row(name, check, expected, actual));
    }
    Ok(rows)
}

pub fn run(path: &Path, cap: usize) -> Result<Outcome> {
    let (dir, manifest_path) = if path.is_dir() {
        (path.to_path_buf(), path.join("manifest.json"))
    } else {
        (
            path.parent().unwrap_or(Path::new(".")).to_path_buf(),
            path.to_path_buf(),
        )
    };
    let mut cases = if manifest_path.exists() {
        read_json::<Manifest>(&manifest_path)?.cases
    } else if path.is_dir() {
        Vec::new()
    } else {
        bail!("no manifest at {}", manifest_path.display());
    };
    cases.sort_by(|a, b| a.name().cmp(b.name()));
    for pair in cases.windows(2) {
        if pair[0].name() == pair[1].name() {
            bail!("duplicate case name `{}`", pair[0].name());
        }
    }

    let mut rows = Vec::new();
    for case in &cases {
        let more = match case {
            Case::Tnorm { name, file, expect } => tnorm_rows(name, &dir.join(file), expect),
            Case::Qcat { name, file, expect } => qcat_rows(name, &dir.join(file), expect, cap),
        }
        .with_context(|| format!("case `{}`", case.name()))?;
        rows.extend(more);
    }
    let mismatches: Vec<&Row> = rows.iter().filter(|r| !r.ok).collect();
    let summary = format!(
        "{} cases, {} checks, {} mismatches",
        cases.len(),
        rows.len(),
        mismatches.len()
    );
    let result = json!({
        "summary": summary,
        "cases": cases.len(),
        "checks": rows.len(),
        "mismatches": mismatches,
        "results": &rows,
    });
    Ok(Outcome {
        exit_code: if mismatches.is_empty() { 0 } else { 1 },
        result,
    })
}
