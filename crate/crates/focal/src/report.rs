//! Report documents and their text/JSON/CSV renderings, plus the drivers
//! behind the `focal` command-line tool. JSON round-trips losslessly;
//! rationals are serialized as exact `num/den` strings, never floats.

use crate::exact::Rat;
use crate::scenarios::{
    all_clean, reconciliation_ledger, run_scenario, run_suite, Bindings, CertConfig, LedgerEntry,
    ScenarioError, ScenarioReport, Status, Suite,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A full document: one scenario report (or an aggregated suite run under
/// the suite's name), the reconciliation ledger for the rows it contains,
/// and the overall verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub scenario: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<crate::scenarios::ResultRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ledger: Vec<LedgerEntry>,
    pub overall: String,
}

impl ReportDocument {
    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }
}

fn aggregate(name: &str, reports: Vec<ScenarioReport>, with_ledger: bool) -> ReportDocument {
    let ledger = if with_ledger {
        reconciliation_ledger(&reports)
    } else {
        Vec::new()
    };
    let ok = all_clean(&reports);
    let mut results = Vec::new();
    let mut notes = Vec::new();
    let many = reports.len() > 1;
    let mut params = BTreeMap::new();
    for report in reports {
        for mut row in report.results {
            if many {
                row.name = format!("{}.{}", report.scenario, row.name);
            }
            results.push(row);
        }
        for note in report.notes {
            notes.push(if many {
                format!("{}: {}", report.scenario, note)
            } else {
                note
            });
        }
        for (k, v) in report.params {
            params.insert(k, v);
        }
    }
    ReportDocument {
        scenario: name.to_string(),
        params,
        results,
        notes,
        ledger,
        overall: if ok { "pass" } else { "fail" }.to_string(),
    }
}

/// `verify`: run a suite symbolically; exit status 0 iff the document
/// passes.
pub fn cmd_verify(suite: Suite, cfg: &CertConfig) -> Result<ReportDocument, ScenarioError> {
    let reports = run_suite(suite, cfg)?;
    let name = match suite {
        Suite::All => "all",
        Suite::Focal => "focal",
        Suite::Jets => "jets",
        Suite::Bisecants => "bisecants",
        Suite::Tangency => "tangency",
        Suite::Plucker => "plucker",
    };
    Ok(aggregate(name, reports, true))
}

/// `run`: one scenario at the given bindings (unbound parameters stay
/// symbolic).
pub fn cmd_run(
    scenario: &str,
    bindings: &Bindings,
    cfg: &CertConfig,
) -> Result<ReportDocument, ScenarioError> {
    let report = run_scenario(scenario, bindings, cfg)?;
    Ok(aggregate(scenario, vec![report], false))
}

/// A parameter sweep table: one row per binding set, columns are the
/// scenario's result names.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub scenario: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub params: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
}

/// Built-in example bindings used when `table` is called without a sweep.
pub fn builtin_table_bindings(scenario: &str) -> Vec<Bindings> {
    let mk = |pairs: &[(&str, i64)]| -> Bindings {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Rat::from_int(*v)))
            .collect()
    };
    match scenario {
        "focal" | "jets" => vec![
            mk(&[("a", 2), ("b", 2), ("g", 1), ("k2", 4), ("chi", 1)]),
            mk(&[("a", 2), ("b", 3), ("g", 1), ("k2", 5), ("chi", 1)]),
        ],
        "bisecants" => vec![mk(&[("d", 3), ("p", 0)]), mk(&[("d", 4), ("p", 1)])],
        "tangency" => (4..=6).map(|d| mk(&[("d", d)])).collect(),
        "plucker" => vec![
            mk(&[("d", 4), ("mu1", 3), ("kappa", 3)]),
            mk(&[("d", 8), ("mu1", 4), ("kappa", 12)]),
            mk(&[("d", 4), ("mu1", 12), ("kappa", 0)]),
        ],
        _ => Vec::new(),
    }
}

/// `table`: run a scenario over a sweep (or the built-in example bindings)
/// and collect the computed values by result name.
pub fn cmd_table(
    scenario: &str,
    bindings_list: Vec<Bindings>,
    cfg: &CertConfig,
) -> Result<TableDocument, ScenarioError> {
    let mut columns: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    for bindings in bindings_list {
        let report = run_scenario(scenario, &bindings, cfg)?;
        if columns.is_empty() {
            columns = report.results.iter().map(|r| r.name.clone()).collect();
        }
        let values = report
            .results
            .iter()
            .map(|r| (r.name.clone(), r.computed.clone()))
            .collect();
        rows.push(TableRow {
            params: report.params.clone(),
            values,
        });
    }
    Ok(TableDocument {
        scenario: scenario.to_string(),
        columns,
        rows,
    })
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", doc.scenario);
    if !doc.params.is_empty() {
        let params = doc
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "params:   {params}");
    }
    let _ = writeln!(out);
    let name_width = doc
        .results
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    for row in &doc.results {
        let marker = match row.status {
            Status::Match => "ok  ",
            Status::Mismatch => "FAIL",
            Status::PaperTypoSuspected => "typo",
        };
        let _ = writeln!(
            out,
            "[{marker}] {:name_width$}  [{}]",
            row.name, row.paper_ref
        );
        let _ = writeln!(out, "       claimed:  {}", row.paper);
        let _ = writeln!(out, "       computed: {}", row.computed);
        if let Some(detail) = &row.detail {
            let _ = writeln!(out, "       detail:   {detail}");
        }
    }
    if !doc.notes.is_empty() {
        let _ = writeln!(out, "\nnotes:");
        for n in &doc.notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    if !doc.ledger.is_empty() {
        let _ = writeln!(
            out,
            "\nreconciliation ledger ({} entries):",
            doc.ledger.len()
        );
        for e in &doc.ledger {
            let _ = writeln!(out, "  * {} [{}]", e.id, e.paper_ref);
            let _ = writeln!(out, "      printed:   {}", e.printed);
            let _ = writeln!(out, "      corrected: {}", e.corrected);
            let _ = writeln!(out, "      note:      {}", e.note);
            let _ = writeln!(out, "      oracle:    {}", e.certificate);
        }
    }
    let matches = doc
        .results
        .iter()
        .filter(|r| r.status == Status::Match)
        .count();
    let typos = doc
        .results
        .iter()
        .filter(|r| r.status == Status::PaperTypoSuspected)
        .count();
    let fails = doc.results.len() - matches - typos;
    let _ = writeln!(
        out,
        "\n{} checks: {matches} matched, {typos} typo-suspected, {fails} mismatched -> {}",
        doc.results.len(),
        doc.overall
    );
    out
}

pub fn render_json(doc: &ReportDocument) -> String {
    serde_json::to_string_pretty(doc).expect("report serializes")
}

pub fn parse_json(text: &str) -> Result<ReportDocument, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn render_table_text(doc: &TableDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", doc.scenario);
    for row in &doc.rows {
        let params = row
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "\n{params}");
        for col in &doc.columns {
            if let Some(v) = row.values.get(col) {
                let _ = writeln!(out, "  {col}: {v}");
            }
        }
    }
    out
}

pub fn render_table_json(doc: &TableDocument) -> String {
    serde_json::to_string_pretty(doc).expect("table serializes")
}

/// CSV with a mandatory header row; parameters come first, then one column
/// per result name. Cells containing separators are quoted.
pub fn render_table_csv(doc: &TableDocument) -> String {
    let mut out = String::new();
    let param_names: Vec<String> = doc
        .rows
        .first()
        .map(|r| r.params.keys().cloned().collect())
        .unwrap_or_default();
    let mut header: Vec<String> = param_names.clone();
    header.extend(doc.columns.iter().cloned());
    let _ = writeln!(out, "{}", header.join(","));
    for row in &doc.rows {
        let mut cells: Vec<String> = param_names
            .iter()
            .map(|p| csv_cell(row.params.get(p).cloned().unwrap_or_default()))
            .collect();
        for col in &doc.columns {
            cells.push(csv_cell(row.values.get(col).cloned().unwrap_or_default()));
        }
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

fn csv_cell(s: String) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}
