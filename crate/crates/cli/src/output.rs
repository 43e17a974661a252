//! Output documents and their JSON / CSV / plain renderings.
//!
//! JSON matrices use `{"kind": "matrix", "n": N, "entries": [[re, im], ...]}`
//! in row-major order. Floats are written in shortest round-trip form, so
//! `parse(serialize(doc)) == doc` for every finite value.

use std::fmt::Write as _;

use antitrid_core::{ComplexScalar, DenseMatrix};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

pub type Pair = [f64; 2];

pub fn pair(z: ComplexScalar) -> Pair {
    [z.re, z.im]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputDocument {
    Matrix(MatrixPayload),
    Eigenvalues(EigenPayload),
    Scalar(ScalarPayload),
    ReportTable(ReportTable),
    BenchTable(BenchTable),
    VerifyReport(VerifyReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixPayload {
    pub n: usize,
    pub entries: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl MatrixPayload {
    pub fn from_matrix(m: &DenseMatrix) -> Self {
        Self {
            n: m.n(),
            entries: m.as_slice().iter().copied().map(pair).collect(),
            verification: None,
        }
    }

    pub fn to_matrix(&self) -> Option<DenseMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|&[re, im]| ComplexScalar::new(re, im))
            .collect();
        DenseMatrix::from_row_major(self.n, entries).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub max_rel_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenPayload {
    pub family: String,
    pub n: usize,
    pub values: Vec<EigenRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenRow {
    /// 1-based angle index.
    pub k: usize,
    pub theta: f64,
    pub value: Pair,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarPayload {
    pub values: Vec<NamedScalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedScalar {
    pub name: String,
    pub value: Pair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportTable {
    pub rows: Vec<ReportRow>,
    pub all_passed: bool,
}

mod decimal_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<i128>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<i128>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|text| text.parse().map_err(D::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub identity: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Pair>,
    /// Exact integer value, written as a decimal string so that values past
    /// the 64-bit range survive the tagged-enum buffering in serde.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "decimal_string")]
    pub exact_integer: Option<i128>,
    pub exact: Pair,
    pub product: Pair,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub r: u64,
    pub method: String,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub negative_tolerance: f64,
    pub max_deviation: f64,
    pub worst: Option<TrialRecord>,
    pub passed: bool,
    pub records: Vec<TrialRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: usize,
    pub family: String,
    pub n: usize,
    pub a: Pair,
    pub b: Pair,
    pub r: i64,
    pub deviation: f64,
    pub passed: bool,
}

/// Six significant digits, `%g` style.
pub fn fmt_sig(x: f64) -> String {
    const SIG: usize = 6;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIG - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIG as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (SIG as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Complex value at six significant digits: `54`, `-2.5i`, `1+2i`.
pub fn fmt_complex_short(z: ComplexScalar) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => fmt_sig(z.re),
        (true, false) => format!("{}i", fmt_sig(z.im)),
        (false, false) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", fmt_sig(z.re), fmt_sig(z.im.abs()))
        }
    }
}

/// Lossless `re+imi` cell for CSV.
pub fn fmt_complex_cell(z: ComplexScalar) -> String {
    crate::literal::format_complex(z)
}

fn c(p: Pair) -> ComplexScalar {
    ComplexScalar::new(p[0], p[1])
}

fn right_aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{cell:>w$}", w = widths[j]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn opt_pair_cell(p: Option<Pair>) -> String {
    p.map(|p| fmt_complex_cell(c(p))).unwrap_or_default()
}

impl OutputDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents hold finite values");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    fn render_csv(&self) -> String {
        match self {
            OutputDocument::Matrix(m) => {
                let header: Vec<String> = (1..=m.n).map(|j| format!("c{j}")).collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                let rows = m
                    .entries
                    .chunks(m.n.max(1))
                    .map(|row| row.iter().map(|&p| fmt_complex_cell(c(p))).collect());
                csv(&header, rows)
            }
            OutputDocument::Eigenvalues(e) => csv(
                &["k", "theta", "value", "residual"],
                e.values.iter().map(|v| {
                    vec![
                        v.k.to_string(),
                        v.theta.to_string(),
                        fmt_complex_cell(c(v.value)),
                        v.residual.map(|r| r.to_string()).unwrap_or_default(),
                    ]
                }),
            ),
            OutputDocument::Scalar(s) => csv(
                &["name", "value"],
                s.values
                    .iter()
                    .map(|v| vec![v.name.clone(), fmt_complex_cell(c(v.value))]),
            ),
            OutputDocument::ReportTable(t) => csv(
                &[
                    "identity",
                    "n",
                    "x",
                    "exact",
                    "product",
                    "abs_residual",
                    "rel_residual",
                    "passed",
                ],
                t.rows.iter().map(|r| {
                    vec![
                        r.identity.clone(),
                        r.n.to_string(),
                        opt_pair_cell(r.x),
                        r.exact_integer
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| fmt_complex_cell(c(r.exact))),
                        fmt_complex_cell(c(r.product)),
                        r.abs_residual.to_string(),
                        r.rel_residual.to_string(),
                        r.passed.to_string(),
                    ]
                }),
            ),
            OutputDocument::BenchTable(t) => csv(
                &["n", "r", "method", "millis"],
                t.rows.iter().map(|r| {
                    vec![r.n.to_string(), r.r.to_string(), r.method.clone(), r.millis.to_string()]
                }),
            ),
            OutputDocument::VerifyReport(v) => csv(
                &["index", "family", "n", "a", "b", "r", "deviation", "passed"],
                v.records.iter().map(|t| {
                    vec![
                        t.index.to_string(),
                        t.family.clone(),
                        t.n.to_string(),
                        fmt_complex_cell(c(t.a)),
                        fmt_complex_cell(c(t.b)),
                        t.r.to_string(),
                        t.deviation.to_string(),
                        t.passed.to_string(),
                    ]
                }),
            ),
        }
    }

    fn render_plain(&self) -> String {
        match self {
            OutputDocument::Matrix(m) => {
                let rows: Vec<Vec<String>> = m
                    .entries
                    .chunks(m.n.max(1))
                    .map(|row| row.iter().map(|&p| fmt_complex_short(c(p))).collect())
                    .collect();
                let mut out = right_aligned(&rows);
                if let Some(v) = &m.verification {
                    let _ = writeln!(
                        out,
                        "verify: max relative deviation {} (tolerance {}) {}",
                        fmt_sig(v.max_rel_deviation),
                        fmt_sig(v.tolerance),
                        if v.passed { "PASS" } else { "FAIL" }
                    );
                }
                out
            }
            OutputDocument::Eigenvalues(e) => {
                let mut rows = vec![vec!["k".to_string(), "theta".into(), "eigenvalue".into()]];
                let with_residuals = e.values.iter().any(|v| v.residual.is_some());
                if with_residuals {
                    rows[0].push("residual".into());
                }
                for v in &e.values {
                    let mut row = vec![v.k.to_string(), fmt_sig(v.theta), fmt_complex_short(c(v.value))];
                    if let Some(r) = v.residual {
                        row.push(fmt_sig(r));
                    }
                    rows.push(row);
                }
                right_aligned(&rows)
            }
            OutputDocument::Scalar(s) => {
                let rows: Vec<Vec<String>> = s
                    .values
                    .iter()
                    .map(|v| vec![v.name.clone(), fmt_complex_short(c(v.value))])
                    .collect();
                right_aligned(&rows)
            }
            OutputDocument::ReportTable(t) => {
                let mut rows = vec![vec![
                    "identity".to_string(),
                    "n".into(),
                    "x".into(),
                    "exact".into(),
                    "product".into(),
                    "rel_residual".into(),
                    "status".into(),
                ]];
                for r in &t.rows {
                    rows.push(vec![
                        r.identity.clone(),
                        r.n.to_string(),
                        r.x.map(|p| fmt_complex_short(c(p))).unwrap_or_else(|| "-".into()),
                        r.exact_integer
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| fmt_complex_short(c(r.exact))),
                        fmt_complex_short(c(r.product)),
                        fmt_sig(r.rel_residual),
                        if r.passed { "PASS" } else { "FAIL" }.into(),
                    ]);
                }
                right_aligned(&rows)
            }
            OutputDocument::BenchTable(t) => {
                let mut rows = vec![vec!["n".to_string(), "r".into(), "method".into(), "millis".into()]];
                for r in &t.rows {
                    rows.push(vec![r.n.to_string(), r.r.to_string(), r.method.clone(), fmt_sig(r.millis)]);
                }
                right_aligned(&rows)
            }
            OutputDocument::VerifyReport(v) => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "verify: seed {} trials {} max deviation {} (tolerance {} / {} for r < 0) {}",
                    v.seed,
                    v.trials,
                    fmt_sig(v.max_deviation),
                    fmt_sig(v.tolerance),
                    fmt_sig(v.negative_tolerance),
                    if v.passed { "PASS" } else { "FAIL" }
                );
                if let Some(w) = &v.worst {
                    let _ = writeln!(
                        out,
                        "worst: trial {} family {} n {} a {} b {} r {} deviation {}",
                        w.index,
                        w.family,
                        w.n,
                        fmt_complex_short(c(w.a)),
                        fmt_complex_short(c(w.b)),
                        w.r,
                        fmt_sig(w.deviation)
                    );
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(54.0), "54");
        assert_eq!(fmt_sig(-756.0), "-756");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333");
        assert_eq!(fmt_sig(123456789.0), "1.23457e8");
        assert_eq!(fmt_sig(999999.7), "1e6");
        assert_eq!(fmt_sig(1e-7), "1e-7");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(2f64.sqrt()), "1.41421");
    }

    #[test]
    fn complex_short_forms() {
        assert_eq!(fmt_complex_short(ComplexScalar::new(1.0, 2.0)), "1+2i");
        assert_eq!(fmt_complex_short(ComplexScalar::new(1.0, -2.0)), "1-2i");
        assert_eq!(fmt_complex_short(ComplexScalar::new(0.0, -0.5)), "-0.5i");
        assert_eq!(fmt_complex_short(ComplexScalar::new(7.0, 0.0)), "7");
    }

    #[test]
    fn matrix_json_schema() {
        let m = DenseMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let doc = OutputDocument::Matrix(MatrixPayload::from_matrix(&m));
        let value: serde_json::Value = serde_json::from_str(&doc.render(Format::Json)).unwrap();
        assert_eq!(value["kind"], "matrix");
        assert_eq!(value["n"], 2);
        assert_eq!(value["entries"][1], serde_json::json!([2.0, 0.0]));
        assert_eq!(value["entries"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn bench_csv_header() {
        let doc = OutputDocument::BenchTable(BenchTable {
            rows: vec![BenchRow {
                n: 100,
                r: 8,
                method: "closed_form".into(),
                millis: 1.5,
            }],
        });
        let text = doc.render(Format::Csv);
        assert_eq!(text.lines().next(), Some("n,r,method,millis"));
        assert_eq!(text.lines().nth(1), Some("100,8,closed_form,1.5"));
    }

    #[test]
    fn plain_matrix_is_right_aligned() {
        let m = DenseMatrix::from_real_rows(&[[54.0, 234.0], [5.0, -1.0]]).unwrap();
        let text = OutputDocument::Matrix(MatrixPayload::from_matrix(&m)).render(Format::Plain);
        assert_eq!(text, "54  234\n 5   -1\n");
    }
}
