//! Plain-text tables.

use rsdkit::rational::{self, Rational};
use rsdkit::voting::SampleReport;
use rsdkit::Lottery;
use serde_json::Value;
use std::fmt::Write;

fn cell(r: &Rational, float: bool) -> String {
    if float {
        format!("{} ({:.6})", rational::format(r), rational::to_f64(r))
    } else {
        rational::format(r)
    }
}

fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn lottery_table(lottery: &Lottery, float: bool) -> String {
    let mut rows = vec![vec!["alternative".to_string(), "probability".to_string()]];
    for (a, p) in lottery.alternatives().iter().zip(lottery.probabilities()) {
        rows.push(vec![a.to_string(), cell(p, float)]);
    }
    columns(&rows)
}

pub fn sample_table(report: &SampleReport, float: bool) -> String {
    let mut rows = vec![vec!["alternative".into(), "count".into(), "estimate".into()]];
    for ((a, c), e) in report.alternatives.iter().zip(&report.counts).zip(report.estimate()) {
        rows.push(vec![a.to_string(), c.to_string(), cell(&e, float)]);
    }
    let mut out = columns(&rows);
    let _ = writeln!(out, "total {} seed {} generator {}", report.total, report.seed, report.generator);
    out
}

pub fn matrix_table(agents: &[String], houses: &[String], cells: &[Vec<Rational>], float: bool) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(houses.iter().cloned()).collect()];
    for (name, row) in agents.iter().zip(cells) {
        rows.push(
            std::iter::once(name.clone())
                .chain(row.iter().map(|r| cell(r, float)))
                .collect(),
        );
    }
    columns(&rows)
}

pub fn membership_table(value: &Value) -> String {
    let mut out = format!("member {}\n", value["member"]);
    let perm = value["permutation"]
        .as_array()
        .or_else(|| value["witness"]["permutation"].as_array());
    if let Some(perm) = perm {
        let names: Vec<&str> = perm.iter().filter_map(Value::as_str).collect();
        let _ = writeln!(out, "permutation {}", names.join(" "));
    }
    if let Some(trace) = value["witness"]["trace"].as_array() {
        for step in trace {
            let surviving: Vec<&str> = step["surviving"]
                .as_array()
                .map(|a| a.iter().filter_map(Value::as_str).collect())
                .unwrap_or_default();
            let _ = writeln!(out, "  {} -> {{{}}}", step["agent"].as_str().unwrap_or("?"), surviving.join(", "));
        }
    }
    out
}

pub fn recovery_table(value: &Value) -> String {
    let mut rows = vec![vec![
        "unknown".into(),
        "exact".into(),
        "recovered".into(),
        "brute_force".into(),
        "equal".into(),
    ]];
    for row in value["counts"].as_array().into_iter().flatten() {
        let recovered = row["recovered"].as_str().unwrap_or("-").to_string();
        let brute = row["brute_force"].as_str().unwrap_or("-").to_string();
        let equal = (recovered == brute).to_string();
        rows.push(vec![
            row["unknown"].as_str().unwrap_or("?").to_string(),
            row["exact"].as_str().unwrap_or("?").to_string(),
            recovered,
            brute,
            equal,
        ]);
    }
    let mut out = columns(&rows);
    if let Some(err) = value["error"].as_str() {
        let _ = writeln!(out, "error: {err}");
    }
    out
}
