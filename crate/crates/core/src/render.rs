//! Text renderers: aligned markdown tables, CSV and OEIS b-files.
//!
//! Every renderer is a pure function of its input, so identical inputs give
//! byte-identical output.

use std::fmt::Write;

use crate::bench::CostReport;
use crate::family::SequenceWindow;
use crate::triangle::{Rectangle, TriangleProfile};
use crate::verify::{Exploration, VerificationReport, Witness};

/// Markdown table with every column padded to its widest cell. Numeric-looking
/// cells are right-aligned.
pub fn markdown_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len().max(3)).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let numeric = |cell: &str| cell.parse::<f64>().is_ok();
    let line = |cells: &[String]| {
        let mut out = String::from("|");
        for (cell, &w) in cells.iter().zip(&widths) {
            if numeric(cell) {
                let _ = write!(out, " {cell:>w$} |");
            } else {
                let _ = write!(out, " {cell:<w$} |");
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(headers);
    out.push('|');
    for &w in &widths {
        out.push_str(&"-".repeat(w + 2));
        out.push('|');
    }
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

fn position_header(cols: usize) -> Vec<String> {
    std::iter::once("Position".to_string())
        .chain((1..=cols).map(|s| s.to_string()))
        .collect()
}

/// The rectangle as a "Position" header row followed by one line per row.
pub fn rectangle_table(rect: &Rectangle) -> String {
    let rows: Vec<Vec<String>> = rect
        .entries()
        .iter()
        .enumerate()
        .map(|(t, row)| {
            std::iter::once(format!("R{},*", t + 1))
                .chain(row.iter().map(ToString::to_string))
                .collect()
        })
        .collect();
    markdown_table(&position_header(rect.cols()), &rows)
}

/// Header `position,1,2,...,c`, then `t,R[t][1],...,R[t][c]` per row.
pub fn rectangle_csv(rect: &Rectangle) -> String {
    let mut out = String::from("position");
    for s in 1..=rect.cols() {
        let _ = write!(out, ",{s}");
    }
    out.push('\n');
    for (t, row) in rect.entries().iter().enumerate() {
        let _ = write!(out, "{}", t + 1);
        for v in row {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

pub fn profile_line(profile: &TriangleProfile) -> String {
    let l: Vec<String> = profile
        .l
        .iter()
        .map(|l| l.map_or_else(|| "undefined".to_string(), |l| l.to_string()))
        .collect();
    format!("l = [{}]; embedded = {}\n", l.join(", "), profile.embedded)
}

/// OEIS b-file: `n G(n)` per line, 1-based.
pub fn bfile(window: &SequenceWindow) -> String {
    let mut out = String::new();
    for (n, v) in window.terms() {
        let _ = writeln!(out, "{n} {v}");
    }
    out
}

pub fn window_csv(window: &SequenceWindow) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in window.terms() {
        let _ = writeln!(out, "{n},{v}");
    }
    out
}

pub fn window_table(window: &SequenceWindow) -> String {
    let rows: Vec<Vec<String>> = window
        .terms()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    markdown_table(&["n".to_string(), "G(n)".to_string()], &rows)
}

fn witness_text(witness: &Option<Witness>) -> String {
    let Some(w) = witness else {
        return "-".to_string();
    };
    let field = |name: &str, v: Option<usize>| v.map(|v| format!("{name}={v}"));
    [field("r", w.r), field("t", w.t), field("s", w.s)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn report_table(report: &VerificationReport) -> String {
    let rows: Vec<Vec<String>> = report
        .clauses
        .iter()
        .map(|c| {
            vec![
                c.clause.name().to_string(),
                if c.pass { "pass" } else { "FAIL" }.to_string(),
                witness_text(&c.witness),
            ]
        })
        .collect();
    let mut out = format!(
        "family {} checked for r = 1..{}: {}\n\n",
        report.spec.to_json(),
        report.r_max,
        if report.pass { "all clauses pass" } else { "FAILED" }
    );
    out.push_str(&markdown_table(
        &["Clause".to_string(), "Result".to_string(), "Witness".to_string()],
        &rows,
    ));
    out
}

fn time_cell(ns: Option<u128>) -> String {
    ns.map_or_else(|| "-".to_string(), |ns| format!("{:.3} ms", ns as f64 / 1e6))
}

/// Two-row comparison of the G and T schemes.
pub fn cost_table(report: &CostReport) -> String {
    let headers: Vec<String> = ["Scheme", "Lookback", "Mults/term", "Terms", "Total mults", "Median time"]
        .iter()
        .map(ToString::to_string)
        .collect();
    let rows = vec![
        vec![
            "G recursion".to_string(),
            format!("{} columns", report.k),
            report.g_mults_per_term.to_string(),
            report.g_terms.to_string(),
            report.g_total_mults.to_string(),
            time_cell(report.g_wall_time_ns),
        ],
        vec![
            "T recursion".to_string(),
            format!("{} columns, one row up", report.q),
            report.t_mults_per_term.to_string(),
            report.t_terms.to_string(),
            report.t_total_mults.to_string(),
            time_cell(report.t_wall_time_ns),
        ],
    ];
    let mut out = format!(
        "q = {}, r = {}, k = {}, c = {}; per-term ratio k/(q+1) = {:.3}\n\n",
        report.q, report.r, report.k, report.c, report.per_term_ratio
    );
    out.push_str(&markdown_table(&headers, &rows));
    out
}

pub fn exploration_table(exploration: &Exploration) -> String {
    let mut out = rectangle_table(&exploration.rectangle);
    out.push('\n');
    out.push_str(&profile_line(&exploration.profile));
    out
}
