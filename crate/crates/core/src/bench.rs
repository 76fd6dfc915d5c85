//! Cost of the two ways of producing a rectangle.
//!
//! The G scheme runs the order-`k` recursion over the whole prefix, costing
//! `k` multiplications per term. The T scheme fills rows `2..r` from the row
//! above with `q + 1` multiplications per entry. `k` grows with `r`, `q` does
//! not.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{positive, FamilySpec};
use crate::triangle::{extract_rectangle, fill_rectangle_fast, Rectangle};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostReport {
    pub q: usize,
    pub r: usize,
    pub k: usize,
    pub c: usize,
    pub g_mults_per_term: usize,
    pub t_mults_per_term: usize,
    /// Terms the G scheme evaluates: `G_{k+1}..G_{k+rc}`.
    pub g_terms: usize,
    /// Entries the T scheme evaluates: rows `2..r`.
    pub t_terms: usize,
    pub g_total_mults: usize,
    pub t_total_mults: usize,
    /// `k / (q + 1)`.
    pub per_term_ratio: f64,
    pub terms_computed: usize,
    pub g_wall_time_ns: Option<u128>,
    pub t_wall_time_ns: Option<u128>,
    pub repetitions: usize,
}

impl CostReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cost report serializes")
    }

    pub fn g_wall_time(&self) -> Option<Duration> {
        self.g_wall_time_ns.map(nanos)
    }

    pub fn t_wall_time(&self) -> Option<Duration> {
        self.t_wall_time_ns.map(nanos)
    }
}

fn nanos(ns: u128) -> Duration {
    Duration::from_nanos(u64::try_from(ns).unwrap_or(u64::MAX))
}

/// Multiplication counts only.
pub fn count_ops(spec: &FamilySpec, r: usize) -> Result<CostReport> {
    let k = spec.k_of_r(r)?;
    let c = spec.c_of_r(r)?;
    let q = spec.q();
    let g_terms = r * c;
    let t_terms = (r - 1) * c;
    Ok(CostReport {
        q,
        r,
        k,
        c,
        g_mults_per_term: k,
        t_mults_per_term: q + 1,
        g_terms,
        t_terms,
        g_total_mults: k * g_terms,
        t_total_mults: (q + 1) * t_terms,
        per_term_ratio: k as f64 / (q + 1) as f64,
        terms_computed: g_terms,
        g_wall_time_ns: None,
        t_wall_time_ns: None,
        repetitions: 0,
    })
}

/// Rectangle via the order-`k` recursion and extraction.
pub fn g_scheme(spec: &FamilySpec, r: usize) -> Result<Rectangle> {
    let k = spec.k_of_r(r)?;
    let c = spec.c_of_r(r)?;
    let window = spec.generate_sequence(k, k + r * c)?;
    extract_rectangle(&window, spec, r)
}

/// Rectangle via the T recursion.
pub fn t_scheme(spec: &FamilySpec, r: usize) -> Result<Rectangle> {
    fill_rectangle_fast(spec, r)
}

fn ensure_identical(g: &Rectangle, t: &Rectangle) -> Result<()> {
    for (ti, (g_row, t_row)) in g.entries().iter().zip(t.entries()).enumerate() {
        if let Some(si) = g_row.iter().zip(t_row).position(|(a, b)| a != b) {
            return Err(Error::SchemeMismatch {
                t: ti + 1,
                s: si + 1,
                g_value: g_row[si].clone(),
                t_value: t_row[si].clone(),
            });
        }
    }
    Ok(())
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// Times both schemes on the same rectangle, single-threaded.
///
/// The schemes must agree entry for entry before any timing is reported; a
/// disagreement is returned as [`Error::SchemeMismatch`].
pub fn time_compare(spec: &FamilySpec, r: usize, repetitions: usize) -> Result<CostReport> {
    positive(repetitions, "repetitions")?;
    let mut report = count_ops(spec, r)?;

    ensure_identical(&g_scheme(spec, r)?, &t_scheme(spec, r)?)?;

    let mut g_samples = Vec::with_capacity(repetitions);
    let mut t_samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        std::hint::black_box(g_scheme(spec, r)?);
        g_samples.push(start.elapsed());

        let start = Instant::now();
        std::hint::black_box(t_scheme(spec, r)?);
        t_samples.push(start.elapsed());
    }
    report.g_wall_time_ns = Some(median(g_samples).as_nanos());
    report.t_wall_time_ns = Some(median(t_samples).as_nanos());
    report.repetitions = repetitions;
    Ok(report)
}
