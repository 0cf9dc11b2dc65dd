//! Machine-readable renderings. Numbers are always exact strings: decimal
//! integers or `p/q`.

use num_rational::BigRational;
use serde_json::{json, Map, Value};
use weylroots_core::chartables::{CharacterTable, MultiplicityReport};
use weylroots_core::classfn::{ClassFunction, ClassLabel};
use weylroots_core::combinatorics::{enumerate_bipartitions, enumerate_partitions, factorial};
use weylroots_core::group::class_data;
use weylroots_core::hlc::HlcResult;
use weylroots_core::{Error, GroupTag, Sign};

use crate::suites::SuiteOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn exact(q: &BigRational) -> String {
    q.to_string()
}

fn csv_error(e: csv::Error) -> Error {
    Error::Inconsistent(format!("csv: {e}"))
}

fn csv_rows(
    header: &[String],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(csv_error)?;
    for r in rows {
        w.write_record(&r).map_err(csv_error)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Inconsistent(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Left-aligned columns separated by two spaces.
fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render(
    format: Format,
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
) -> Result<String, Error> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&json).expect("json") + "\n"),
        Format::Csv => csv_rows(&header, rows),
        Format::Table => Ok(text_table(&header, &rows)),
    }
}

fn values_json<L: ClassLabel>(f: &ClassFunction<L>) -> Value {
    Value::Array(
        f.entries()
            .iter()
            .map(|(c, v)| json!({"class": c.to_string(), "value": exact(v)}))
            .collect(),
    )
}

/// `{"group","n",<extra>...,"values":[{"class","value"}]}`.
pub fn class_function<L: ClassLabel>(
    f: &ClassFunction<L>,
    extra: &[(&str, Value)],
    format: Format,
) -> Result<String, Error> {
    let mut m = Map::new();
    m.insert("group".into(), json!(f.group.name()));
    m.insert("n".into(), json!(f.n));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m.insert("values".into(), values_json(f));
    let rows = f
        .entries()
        .iter()
        .map(|(c, v)| vec![c.to_string(), exact(v)])
        .collect();
    render(
        format,
        Value::Object(m),
        vec!["class".into(), "value".into()],
        rows,
    )
}

/// Conjugacy classes with sizes, centralizer orders and linear characters.
pub fn classes(group: GroupTag, n: usize, format: Format) -> Result<String, Error> {
    let (header, rows): (Vec<String>, Vec<Vec<String>>) = match group {
        GroupTag::S => {
            let fact = factorial(n);
            let rows = enumerate_partitions(n)
                .into_iter()
                .map(|p| {
                    let z = p.z_value();
                    let sign = if (n - p.len()).is_multiple_of(2) {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    vec![
                        p.to_string(),
                        (fact / z).to_string(),
                        z.to_string(),
                        sign.value().to_string(),
                    ]
                })
                .collect();
            let header = ["class", "class_size", "centralizer_order", "sign"];
            (header.iter().map(|s| s.to_string()).collect(), rows)
        }
        GroupTag::B => {
            let rows = enumerate_bipartitions(n)
                .into_iter()
                .map(|l| {
                    let d = class_data(&l);
                    vec![
                        l.to_string(),
                        d.class_size.to_string(),
                        d.centralizer_order.to_string(),
                        d.chi.value().to_string(),
                        d.chi_prime.value().to_string(),
                    ]
                })
                .collect();
            let header = [
                "class",
                "class_size",
                "centralizer_order",
                "chi",
                "chi_prime",
            ];
            (header.iter().map(|s| s.to_string()).collect(), rows)
        }
        GroupTag::Sub(s) => {
            return Err(Error::InvalidArgument(format!(
                "classes are listed for S and B, not {}",
                s.name()
            )))
        }
    };
    let list: Vec<Value> = rows
        .iter()
        .map(|r| {
            Value::Object(
                header
                    .iter()
                    .zip(r)
                    .map(|(h, c)| (h.clone(), json!(c)))
                    .collect(),
            )
        })
        .collect();
    let json = json!({"group": group.name(), "n": n, "classes": list});
    render(format, json, header, rows)
}

/// Rows are irreducibles, columns are classes.
pub fn chartable<L: ClassLabel>(t: &CharacterTable<L>, format: Format) -> Result<String, Error> {
    let mut header = vec![String::new()];
    header.extend(t.labels().iter().map(|l| l.to_string()));
    let rows: Vec<Vec<String>> = t
        .labels()
        .iter()
        .zip(t.rows())
        .map(|(l, r)| {
            std::iter::once(l.to_string())
                .chain(r.iter().map(|v| v.to_string()))
                .collect()
        })
        .collect();
    let json = json!({
        "group": t.group.name(),
        "n": t.n,
        "classes": t.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "class_sizes": t.class_sizes().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "rows": t.labels().iter().zip(t.rows()).map(|(l, r)| json!({
            "row": l.to_string(),
            "values": r.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    render(format, json, header, rows)
}

fn report_json(r: &MultiplicityReport) -> Value {
    let mut m = Map::new();
    m.insert("group".into(), json!(r.group.name()));
    m.insert("n".into(), json!(r.n));
    if let Some(k) = r.k {
        m.insert("k".into(), json!(k));
    }
    m.insert("verdict".into(), json!(r.verdict.name()));
    m.insert(
        "negative_witnesses".into(),
        r.negative_witnesses()
            .map(|c| json!({"row": c.label, "multiplicity": c.multiplicity.to_string()}))
            .collect(),
    );
    m.insert(
        "constituents".into(),
        r.constituents
            .iter()
            .map(|c| json!({"row": c.label, "multiplicity": c.multiplicity.to_string(), "split": c.split}))
            .collect(),
    );
    Value::Object(m)
}

/// One report per `k`; JSON is a single object for one report, an array
/// otherwise.
pub fn reports(rs: &[MultiplicityReport], format: Format) -> Result<String, Error> {
    let json = match rs {
        [one] => report_json(one),
        _ => Value::Array(rs.iter().map(report_json).collect()),
    };
    let header = ["group", "n", "k", "row", "multiplicity", "split"];
    let rows = rs
        .iter()
        .flat_map(|r| {
            r.constituents.iter().map(move |c| {
                vec![
                    r.group.name().to_string(),
                    r.n.to_string(),
                    r.k.map(|k| k.to_string()).unwrap_or_default(),
                    c.label.clone(),
                    c.multiplicity.to_string(),
                    c.split.to_string(),
                ]
            })
        })
        .collect();
    render(
        format,
        json,
        header.iter().map(|s| s.to_string()).collect(),
        rows,
    )
}

fn hlc_json(r: &HlcResult) -> Value {
    json!({
        "lambda": r.lambda.to_string(),
        "group": r.values.group.name(),
        "n": r.values.n,
        "provenance": r.provenance.name(),
        "values": values_json(&r.values),
    })
}

/// `ψ^λ` results; one object for a single `λ`, an array otherwise.
pub fn hlc_results(rs: &[HlcResult], format: Format) -> Result<String, Error> {
    let json = match rs {
        [one] => hlc_json(one),
        _ => Value::Array(rs.iter().map(hlc_json).collect()),
    };
    let header = ["lambda", "class", "value"];
    let rows = rs
        .iter()
        .flat_map(|r| {
            r.values
                .entries()
                .iter()
                .map(move |(c, v)| vec![r.lambda.to_string(), c.to_string(), exact(v)])
        })
        .collect();
    render(
        format,
        json,
        header.iter().map(|s| s.to_string()).collect(),
        rows,
    )
}

fn status(o: &SuiteOutcome) -> &'static str {
    if o.passed() {
        "pass"
    } else {
        "fail"
    }
}

fn outcome_json(o: &SuiteOutcome) -> Value {
    let witness = o
        .failure
        .as_ref()
        .map(|w| json!({"n": w.n, "k": w.k, "class": w.class, "detail": w.detail}));
    json!({
        "suite": o.suite.name(),
        "n_max": o.n_max,
        "cases": o.cases,
        "status": status(o),
        "witness": witness,
    })
}

/// Verification outcomes; one object for a single suite, an array otherwise.
pub fn suite_outcomes(os: &[SuiteOutcome], format: Format) -> Result<String, Error> {
    let json = match os {
        [one] => outcome_json(one),
        _ => Value::Array(os.iter().map(outcome_json).collect()),
    };
    let header = ["suite", "n_max", "cases", "status", "witness"];
    let rows = os
        .iter()
        .map(|o| {
            vec![
                o.suite.name().to_string(),
                o.n_max.to_string(),
                o.cases.to_string(),
                status(o).to_string(),
                o.failure
                    .as_ref()
                    .map(|w| w.to_string())
                    .unwrap_or_default(),
            ]
        })
        .collect();
    render(
        format,
        json,
        header.iter().map(|s| s.to_string()).collect(),
        rows,
    )
}
