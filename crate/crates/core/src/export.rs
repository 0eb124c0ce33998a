//! On-disk formats. Vertex labels and spectrum indices are 1-based.
//!
//! - Edge list: `# n=<n> k=<k> p=<p> seed=<seed> exhausted=<count>` followed by
//!   one `u v` line per edge, `u < v`, sorted lexicographically.
//! - Rewire log: JSON lines
//!   `{"i":…,"d":…,"outcome":"kept|rewired|exhausted","target":…,"pool":…}`,
//!   with `target` null unless the edge was rewired.
//! - Tables (spectrum, histogram, moments, scaling): CSV with a header row, or
//!   a JSON array of objects with the same field names.

use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::configurations::{ScalingPoint, SlopeFit};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::montecarlo::ConvergenceRow;
use crate::rewire::{Outcome, RewireLog};
use crate::spectral::{Histogram, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(invalid(format!(
                "unknown format {other:?}; expected csv or json"
            ))),
        }
    }
}

/// Writes serializable rows as CSV (header from the field names) or as a
/// pretty JSON array.
pub fn write_rows<W: Write, T: Serialize>(mut writer: W, rows: &[T], format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(writer);
            for row in rows {
                csv.serialize(row)?;
            }
            csv.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut writer, rows)?;
            writeln!(writer)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeListHeader {
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
    pub exhausted: usize,
}

impl std::fmt::Display for EdgeListHeader {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "# n={} k={} p={} seed={} exhausted={}",
            self.n, self.k, self.p, self.seed, self.exhausted
        )
    }
}

pub fn write_edge_list<W: Write>(
    mut writer: W,
    graph: &Graph,
    header: &EdgeListHeader,
) -> Result<()> {
    writeln!(writer, "{header}")?;
    for (u, v) in graph.edges() {
        writeln!(writer, "{} {}", u + 1, v + 1)?;
    }
    Ok(())
}

/// Parses an edge list written by [`write_edge_list`]. Only the first header
/// line is interpreted; other `#` lines are skipped.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<(EdgeListHeader, Graph)> {
    let mut header = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let parse_err = |reason: String| Error::Parse {
            line: lineno,
            reason,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if header.is_none() {
                header = Some(parse_header(rest).map_err(parse_err)?);
            }
            continue;
        }
        let h: &EdgeListHeader = header
            .as_ref()
            .ok_or_else(|| parse_err("edge before header".into()))?;
        let mut fields = trimmed.split_whitespace();
        let (Some(u), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(format!("expected `u v`, got {trimmed:?}")));
        };
        let label = |s: &str| -> std::result::Result<usize, String> {
            let x: usize = s.parse().map_err(|_| format!("bad vertex {s:?}"))?;
            if x == 0 || x > h.n {
                return Err(format!("vertex {x} outside 1..={}", h.n));
            }
            Ok(x - 1)
        };
        let u = label(u).map_err(parse_err)?;
        let v = label(v).map_err(parse_err)?;
        edges.push((u, v));
    }
    let header = header.ok_or_else(|| Error::Parse {
        line: 0,
        reason: "missing header".into(),
    })?;
    let graph = Graph::from_edges(header.n, header.k, &edges)?;
    Ok((header, graph))
}

fn parse_header(rest: &str) -> std::result::Result<EdgeListHeader, String> {
    let mut n = None;
    let mut k = None;
    let mut p = None;
    let mut seed = None;
    let mut exhausted = None;
    for token in rest.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("header token {token:?} is not key=value"))?;
        let bad = |_| format!("bad value for {key}: {value:?}");
        match key {
            "n" => n = Some(value.parse().map_err(bad)?),
            "k" => k = Some(value.parse().map_err(bad)?),
            "p" => {
                p = Some(
                    value
                        .parse()
                        .map_err(|_| format!("bad value for p: {value:?}"))?,
                )
            }
            "seed" => seed = Some(value.parse().map_err(bad)?),
            "exhausted" => exhausted = Some(value.parse().map_err(bad)?),
            _ => {}
        }
    }
    let missing = |name: &str| format!("header is missing {name}");
    Ok(EdgeListHeader {
        n: n.ok_or_else(|| missing("n"))?,
        k: k.ok_or_else(|| missing("k"))?,
        p: p.ok_or_else(|| missing("p"))?,
        seed: seed.ok_or_else(|| missing("seed"))?,
        exhausted: exhausted.ok_or_else(|| missing("exhausted"))?,
    })
}

#[derive(Serialize)]
struct LogLine {
    i: usize,
    d: usize,
    outcome: &'static str,
    target: Option<usize>,
    pool: usize,
}

pub fn write_rewire_log<W: Write>(mut writer: W, log: &RewireLog) -> Result<()> {
    for e in log.events() {
        let (outcome, target) = match e.outcome {
            Outcome::Kept => ("kept", None),
            Outcome::Rewired(t) => ("rewired", Some(t + 1)),
            Outcome::ExhaustedKept => ("exhausted", None),
        };
        let line = LogLine {
            i: e.source + 1,
            d: e.offset,
            outcome,
            target,
            pool: e.candidate_pool_size,
        };
        serde_json::to_writer(&mut writer, &line)?;
        writeln!(writer)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct EigenRow {
    index: usize,
    eigenvalue: f64,
}

pub fn write_spectrum<W: Write>(writer: W, spectrum: &Spectrum, format: Format) -> Result<()> {
    let rows: Vec<_> = spectrum
        .eigenvalues()
        .iter()
        .enumerate()
        .map(|(i, &eigenvalue)| EigenRow {
            index: i + 1,
            eigenvalue,
        })
        .collect();
    write_rows(writer, &rows, format)
}

#[derive(Serialize)]
struct BinRow {
    bin_lo: f64,
    bin_hi: f64,
    count: u64,
}

pub fn write_histogram<W: Write>(writer: W, histogram: &Histogram, format: Format) -> Result<()> {
    let rows: Vec<_> = histogram
        .bins()
        .map(|(bin_lo, bin_hi, count)| BinRow {
            bin_lo,
            bin_hi,
            count,
        })
        .collect();
    write_rows(writer, &rows, format)
}

#[derive(Serialize)]
struct MomentRow {
    n: usize,
    k: usize,
    p: f64,
    order: u32,
    trials: u64,
    mean: f64,
    stderr: f64,
    limit: Option<f64>,
    gap: Option<f64>,
}

pub fn write_moments<W: Write>(writer: W, rows: &[ConvergenceRow], format: Format) -> Result<()> {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| MomentRow {
            n: r.n,
            k: r.estimate.params.k,
            p: r.estimate.params.p,
            order: r.estimate.order,
            trials: r.estimate.trials,
            mean: r.estimate.mean,
            stderr: r.estimate.stderr,
            limit: r.limit,
            gap: r.gap,
        })
        .collect();
    write_rows(writer, &rows, format)
}

#[derive(Serialize)]
struct ScalingRow {
    n: usize,
    class: &'static str,
    estimate: f64,
    stderr: f64,
    trials: u64,
}

pub fn write_scaling<W: Write>(writer: W, points: &[ScalingPoint], format: Format) -> Result<()> {
    let rows: Vec<_> = points
        .iter()
        .map(|pt| ScalingRow {
            n: pt.n,
            class: pt.class.name(),
            estimate: pt.estimate.point,
            stderr: pt.estimate.stderr,
            trials: pt.estimate.trials,
        })
        .collect();
    write_rows(writer, &rows, format)
}

/// JSON summary of a fitted slope (exponent, intercept, residual, points).
pub fn write_slope_fit<W: Write>(mut writer: W, fit: &SlopeFit) -> Result<()> {
    serde_json::to_writer_pretty(&mut writer, fit)?;
    writeln!(writer)?;
    Ok(())
}
