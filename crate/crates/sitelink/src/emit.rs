//! CSV and JSON writers.
//!
//! CSV floats carry 17 significant digits so they read back to the same
//! `f64`. Column indices and row labels are 1-based.

use std::fmt::Write;

use serde::Serialize;
use sitelink_core::{Link, Method, RemovalTrace, SpectrumEntry, System};

use crate::config::RunConfig;
use crate::error::Result;

pub const SPECTRUM_HEADER: &str = "i,j,distance_nats,potential_nats,s,method,samples,stderr,seed";

/// A float with 17 significant digits.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn preamble(out: &mut String, config: Option<&RunConfig>) -> Result<()> {
    if let Some(config) = config {
        writeln!(out, "# {}", config.tool).unwrap();
        writeln!(out, "# config: {}", serde_json::to_string(config)?).unwrap();
    }
    Ok(())
}

pub fn spectrum_csv(entries: &[SpectrumEntry], config: Option<&RunConfig>) -> Result<String> {
    let mut out = String::new();
    preamble(&mut out, config)?;
    out.push_str(SPECTRUM_HEADER);
    out.push('\n');
    for e in entries {
        let p = &e.potential;
        let (samples, seed) = match p.method {
            Method::MonteCarlo { samples, seed } => (samples.to_string(), seed.to_string()),
            _ => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            e.link.i + 1,
            e.link.j + 1,
            float(e.distance),
            float(p.value),
            p.s,
            p.method.name(),
            samples,
            p.stderr.map(float).unwrap_or_default(),
            seed
        )
        .unwrap();
    }
    Ok(out)
}

/// `i,j,distance_nats` rows, plus a 1-based `rank` column when `ranked`.
pub fn distances_csv(
    rows: &[(Link, f64)],
    ranked: bool,
    config: Option<&RunConfig>,
) -> Result<String> {
    let mut out = String::new();
    preamble(&mut out, config)?;
    out.push_str(if ranked {
        "rank,i,j,distance_nats\n"
    } else {
        "i,j,distance_nats\n"
    });
    for (r, (l, d)) in rows.iter().enumerate() {
        if ranked {
            write!(out, "{},", r + 1).unwrap();
        }
        writeln!(out, "{},{},{}", l.i + 1, l.j + 1, float(*d)).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct TraceStep {
    row_label: usize,
    #[serde(rename = "Q")]
    q: f64,
    q_before: f64,
    q_after: f64,
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    config: &'a RunConfig,
    steps: Vec<TraceStep>,
    stop_reason: &'static str,
}

/// `{config, steps: [{row_label, Q, q_before, q_after}], stop_reason}`.
pub fn trace_json(trace: &RemovalTrace, config: &RunConfig) -> Result<String> {
    let doc = TraceDoc {
        config,
        steps: trace
            .steps
            .iter()
            .map(|s| TraceStep {
                row_label: s.row_label,
                q: s.q_drop,
                q_before: s.q_before,
                q_after: s.q_after,
            })
            .collect(),
        stop_reason: trace.stop_reason.name(),
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

/// One row of symbols per line.
pub fn system_raw(sys: &System) -> String {
    let mut out = String::with_capacity(sys.k() * (sys.n() + 1));
    for row in sys.rows() {
        out.extend(
            row.iter()
                .map(|&c| sys.alphabet().symbol(c).unwrap() as char),
        );
        out.push('\n');
    }
    out
}

/// FASTA records named `row<label>`.
pub fn system_fasta(sys: &System) -> String {
    let mut out = String::new();
    for (row, label) in sys.rows().zip(sys.labels()) {
        writeln!(out, ">row{label}").unwrap();
        out.extend(
            row.iter()
                .map(|&c| sys.alphabet().symbol(c).unwrap() as char),
        );
        out.push('\n');
    }
    out
}
