use std::fmt::Write as _;

use glaisher_core::glaisher::{DensityStats, EpsilonRoute, Failure, IdentityReport, Status};
use glaisher_core::partitions::CountTable;
use glaisher_core::series::Series;
use serde::{Deserialize, Serialize};

use crate::Format;

/// `(n, value)` row with the value as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub value: String,
}

fn rows<'a>(values: impl Iterator<Item = &'a glaisher_core::Integer>) -> Vec<Row> {
    values
        .enumerate()
        .map(|(n, v)| Row {
            n,
            value: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRows {
    pub family: String,
    pub m: usize,
    pub j: Option<usize>,
    pub n_max: usize,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandRows {
    pub series: String,
    pub m: usize,
    pub route: Option<String>,
    pub precision: usize,
    pub rows: Vec<Row>,
}

impl ExpandRows {
    pub fn new(series: &str, m: usize, route: Option<EpsilonRoute>, s: &Series) -> Self {
        ExpandRows {
            series: series.to_string(),
            m,
            route: route.map(|r| r.to_string()),
            precision: s.precision(),
            rows: rows(s.coeffs().iter()),
        }
    }
}

/// Verify report in its wire form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub theorem: String,
    pub m: usize,
    pub range: [usize; 2],
    pub status: Status,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: u64,
    pub routes: Vec<String>,
}

impl From<&IdentityReport> for VerifyJson {
    fn from(r: &IdentityReport) -> Self {
        VerifyJson {
            theorem: r.theorem.to_string(),
            m: r.m,
            range: [r.range.0, r.range.1],
            status: r.status,
            first_failure: r.first_failure.clone(),
            elapsed_ms: u64::try_from(r.elapsed.as_millis()).unwrap_or(u64::MAX),
            routes: r.routes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub fraction: String,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityJson {
    pub m: usize,
    pub x: usize,
    pub nonzero_count: usize,
    #[serde(rename = "N_x")]
    pub n_x: usize,
    pub ratio: Ratio,
    pub window_bound: u64,
    pub bound_satisfied: bool,
}

/// `num/den` to six places, rounded half up, using integer arithmetic only.
fn decimal(num: usize, den: usize) -> String {
    let scaled = (num as u128 * 2_000_000 + den as u128) / (2 * den as u128);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

impl From<&DensityStats> for DensityJson {
    fn from(d: &DensityStats) -> Self {
        DensityJson {
            m: d.m,
            x: d.x,
            nonzero_count: d.nonzero_count,
            n_x: d.n_x,
            ratio: Ratio {
                fraction: d.ratio_fraction(),
                decimal: decimal(d.n_x, d.x),
            },
            window_bound: d.window_bound,
            bound_satisfied: d.bound_satisfied,
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_rows(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "value"]).expect("in-memory write");
    for r in rows {
        w.serialize((r.n, &r.value)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

fn csv_pairs(pairs: &[(&str, String)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["field", "value"]).expect("in-memory write");
    for (k, v) in pairs {
        w.write_record([k, v.as_str()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

fn text_rows(title: &str, rows: &[Row]) -> String {
    let width = rows.last().map_or(1, |r| r.n.to_string().len());
    let mut out = format!("{title}\n");
    for r in rows {
        let _ = writeln!(out, "{:>width$}  {}", r.n, r.value);
    }
    out
}

pub fn count(table: &CountTable, fmt: Format) -> String {
    let spec = table.spec();
    let data = CountRows {
        family: spec.family().to_string(),
        m: spec.m(),
        j: spec.j(),
        n_max: table.n_max(),
        rows: rows(table.counts().iter()),
    };
    match fmt {
        Format::Json => json(&data),
        Format::Csv => csv_rows(&data.rows),
        Format::Text => text_rows(&format!("{spec}(n), n = 0..={}", data.n_max), &data.rows),
    }
}

pub fn expand(data: &ExpandRows, fmt: Format) -> String {
    match fmt {
        Format::Json => json(data),
        Format::Csv => csv_rows(&data.rows),
        Format::Text => {
            let route = data
                .route
                .as_deref()
                .map_or(String::new(), |r| format!(" via {r}"));
            let title = format!(
                "{} for m = {}{route}, coefficients of q^0..q^{}",
                data.series, data.m, data.precision
            );
            text_rows(&title, &data.rows)
        }
    }
}

fn paint(s: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

pub fn verify(report: &IdentityReport, fmt: Format, color: bool) -> String {
    let data = VerifyJson::from(report);
    let status = match data.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
    };
    let failure = data
        .first_failure
        .as_ref()
        .map(|f| (f.n.to_string(), f.lhs.clone(), f.rhs.clone()));
    match fmt {
        Format::Json => json(&data),
        Format::Csv => {
            let (n, lhs, rhs) = failure.unwrap_or_default();
            csv_pairs(&[
                ("theorem", data.theorem.clone()),
                ("m", data.m.to_string()),
                ("range_start", data.range[0].to_string()),
                ("range_end", data.range[1].to_string()),
                ("status", status.to_string()),
                ("failure_n", n),
                ("failure_lhs", lhs),
                ("failure_rhs", rhs),
                ("elapsed_ms", data.elapsed_ms.to_string()),
                ("routes", data.routes.join(";")),
            ])
        }
        Format::Text => {
            let code = if report.passed() { "32" } else { "31" };
            let mut out = format!(
                "{} m = {} n = {}..={}: {}\n",
                data.theorem,
                data.m,
                data.range[0],
                data.range[1],
                paint(&status.to_uppercase(), code, color)
            );
            if let Some((n, lhs, rhs)) = failure {
                let _ = writeln!(out, "  first failure at n = {n}: lhs = {lhs}, rhs = {rhs}");
            }
            if !data.routes.is_empty() {
                let _ = writeln!(out, "  routes: {}", data.routes.join(", "));
            }
            for note in &report.notes {
                let _ = writeln!(out, "  note: {note}");
            }
            let _ = writeln!(out, "  elapsed: {} ms", data.elapsed_ms);
            out
        }
    }
}

pub fn density(stats: &DensityStats, fmt: Format) -> String {
    let data = DensityJson::from(stats);
    match fmt {
        Format::Json => json(&data),
        Format::Csv => csv_pairs(&[
            ("m", data.m.to_string()),
            ("x", data.x.to_string()),
            ("nonzero_count", data.nonzero_count.to_string()),
            ("N_x", data.n_x.to_string()),
            ("ratio", data.ratio.fraction.clone()),
            ("ratio_decimal", data.ratio.decimal.clone()),
            ("window_bound", data.window_bound.to_string()),
            ("bound_satisfied", data.bound_satisfied.to_string()),
        ]),
        Format::Text => format!(
            "m = {}, x = {}\n  nonzero_count   {}\n  N_x             {}\n  ratio           {} = {}\n  window_bound    {}\n  bound_satisfied {}\n",
            data.m,
            data.x,
            data.nonzero_count,
            data.n_x,
            data.ratio.fraction,
            data.ratio.decimal,
            data.window_bound,
            data.bound_satisfied
        ),
    }
}
