//! Command implementations behind the binary: compute series, emit Bratteli
//! levels, run verification suites, ingest character tables and graph files,
//! and export JSON/DOT. Everything returns its output as a string so the
//! whole surface is testable in-process.

mod dot;
pub mod verify;

pub use verify::{run_suite, VerifyReport};

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::groups::{class_data, descriptor, GroupDescriptor, GroupKind};
use crate::poincare::{series_cramer, SeriesResult};
use crate::polyring::IntPoly;
use crate::repgraph::{
    bratteli, graph_from_chartable, graph_from_json, graph_to_json, mckay_graph, CharTable,
    RepGraph,
};

/// Version tag carried by every JSON document.
pub const SCHEMA_VERSION: &str = "1";

/// Default number of series terms when neither the flag nor the environment
/// override is present.
pub const DEFAULT_TERMS: usize = 20;

/// Environment variable overriding the default expansion length.
pub const TERMS_ENV_VAR: &str = "MCKAY_TERMS_DEFAULT";

/// Where a graph comes from: a catalog group, a graph JSON file, or a
/// character-table CSV with a selected module.
pub enum Source {
    Group(GroupKind),
    GraphFile(String),
    CharTable {
        path: String,
        v_label: Option<String>,
    },
}

/// A loaded graph plus provenance for output documents. `warnings` carries
/// non-fatal findings (an asymmetric adjacency from a non-self-dual module).
pub struct LoadedGraph {
    pub graph: RepGraph,
    pub kind: Option<GroupKind>,
    pub source: String,
    pub warnings: Vec<String>,
}

pub fn load_source(source: &Source) -> Result<LoadedGraph> {
    match source {
        Source::Group(kind) => {
            let desc = descriptor(*kind)?;
            Ok(LoadedGraph {
                graph: mckay_graph(&desc)?,
                kind: Some(*kind),
                source: desc.kind.name(),
                warnings: Vec::new(),
            })
        }
        Source::GraphFile(path) => {
            let text = std::fs::read_to_string(Path::new(path))?;
            let graph = graph_from_json(&text)?;
            let mut warnings = Vec::new();
            if !graph.is_symmetric() {
                warnings.push("adjacency matrix is not symmetric".into());
            }
            Ok(LoadedGraph {
                graph,
                kind: None,
                source: path.clone(),
                warnings,
            })
        }
        Source::CharTable { path, v_label } => {
            let text = std::fs::read_to_string(Path::new(path))?;
            let table = CharTable::parse_csv(&text)?;
            let label = v_label
                .clone()
                .or_else(|| table.v_label.clone())
                .ok_or_else(|| {
                    Error::InvalidParameter(
                        "no module selected: pass --v <label> or add a #V= directive".into(),
                    )
                })?;
            let v_index = table.irrep_index(&label).ok_or_else(|| {
                Error::InvalidParameter(format!("irrep `{label}` not found in the table"))
            })?;
            let graph = graph_from_chartable(&table, v_index)?;
            let mut warnings = Vec::new();
            if !graph.is_symmetric() {
                warnings.push(format!(
                    "module `{label}` is not self-dual: walk counts are available, series are not"
                ));
            }
            Ok(LoadedGraph {
                graph,
                kind: None,
                source: format!("{path} (V = {label})"),
                warnings,
            })
        }
    }
}

fn bigint_number(v: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(v.to_string()))
}

fn poly_coeffs(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_number).collect())
}

fn doc(kind: &str, fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("kind".into(), json!(kind));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Dot,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

fn render(value: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// `series`: the Poincaré series of one node — reduced fraction, the
/// determinant pair it came from, and the first `terms` coefficients.
pub fn cmd_series(
    loaded: &LoadedGraph,
    node: &str,
    terms: usize,
    format: Format,
) -> Result<String> {
    let graph = &loaded.graph;
    let mu = graph.node_index(node).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "node `{node}` not found; known nodes: {}",
            graph.labels.join(", ")
        ))
    })?;
    let result = series_cramer(graph, mu)?;
    let coeffs = result.series.series(terms);
    match format {
        Format::Json => render(&series_doc(loaded, &result, &coeffs, terms)),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "source: {}", loaded.source).unwrap();
            writeln!(out, "node: {}", result.node).unwrap();
            writeln!(out, "m(t) = {}", result.series).unwrap();
            writeln!(
                out,
                "det pair: ({}) / ({})",
                result.numerator_det, result.denominator_det
            )
            .unwrap();
            let rendered: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
            writeln!(out, "coefficients: [{}]", rendered.join(", ")).unwrap();
            Ok(out)
        }
        Format::Dot => Err(Error::InvalidParameter(
            "series has no dot rendering".into(),
        )),
    }
}

fn series_doc(loaded: &LoadedGraph, r: &SeriesResult, coeffs: &[BigInt], terms: usize) -> Value {
    doc(
        "series",
        vec![
            ("source", json!(loaded.source)),
            ("group", json!(loaded.kind.map(|k| k.name()))),
            ("node", json!(r.node)),
            ("numerator", poly_coeffs(r.series.num())),
            ("denominator", poly_coeffs(r.series.den())),
            ("numerator_det", poly_coeffs(&r.numerator_det)),
            ("denominator_det", poly_coeffs(&r.denominator_det)),
            ("terms", json!(terms)),
            (
                "coefficients",
                Value::Array(coeffs.iter().map(bigint_number).collect()),
            ),
        ],
    )
}

/// `bratteli`: level-by-level multiplicities and centralizer dimensions.
pub fn cmd_bratteli(loaded: &LoadedGraph, levels: usize, format: Format) -> Result<String> {
    let graph = &loaded.graph;
    let data = bratteli(graph, levels)?;
    match format {
        Format::Json => {
            let levels_json: Vec<Value> = data
                .iter()
                .map(|level| {
                    json!({
                        "k": level.k,
                        "mults": Value::Array(
                            graph
                                .labels
                                .iter()
                                .zip(&level.mults)
                                .map(|(label, m)| json!({"label": label, "count": bigint_number(m)}))
                                .collect(),
                        ),
                        "z_dim": bigint_number(&level.z_dim),
                    })
                })
                .collect();
            render(&doc(
                "bratteli",
                vec![
                    ("source", json!(loaded.source)),
                    ("group", json!(loaded.kind.map(|k| k.name()))),
                    ("levels", Value::Array(levels_json)),
                ],
            ))
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "source: {}", loaded.source).unwrap();
            for level in &data {
                let entries: Vec<String> = graph
                    .labels
                    .iter()
                    .zip(&level.mults)
                    .filter(|(_, m)| !num_traits::Zero::is_zero(*m))
                    .map(|(label, m)| format!("{label}:{m}"))
                    .collect();
                writeln!(
                    out,
                    "k={:<3} {}  dim Z_{} = {}",
                    level.k,
                    entries.join(" "),
                    level.k,
                    level.z_dim
                )
                .unwrap();
            }
            Ok(out)
        }
        Format::Dot => Ok(dot::bratteli_dot(graph, &data, &loaded.source)),
    }
}

/// `verify`: run a suite and render its report. The boolean is the overall
/// pass flag (drives the process exit code).
pub fn cmd_verify(suite: &str, tolerance: f64, format: Format) -> Result<(String, bool)> {
    let report = run_suite(suite, tolerance)?;
    let passed = report.passed();
    let rendered = match format {
        Format::Json => render(&doc(
            "verify",
            vec![
                ("suite", json!(report.suite)),
                ("tolerance", json!(report.tolerance)),
                ("passed", json!(passed)),
                ("checks", serde_json::to_value(&report.checks)?),
            ],
        ))?,
        Format::Text => {
            let mut out = String::new();
            for check in &report.checks {
                writeln!(
                    out,
                    "{} {} ({})",
                    if check.pass { "ok  " } else { "FAIL" },
                    check.name,
                    check.detail
                )
                .unwrap();
            }
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            writeln!(
                out,
                "suite `{}`: {}/{} checks passed{}",
                report.suite,
                report.checks.len() - failed,
                report.checks.len(),
                if failed == 0 { "" } else { " — FAILURE" }
            )
            .unwrap();
            out
        }
        Format::Dot => {
            return Err(Error::InvalidParameter(
                "verify has no dot rendering".into(),
            ))
        }
    };
    Ok((rendered, passed))
}

/// `export`: the representation graph (JSON or DOT) or the full catalog
/// entry (descriptor plus class data) of one group.
pub fn cmd_export(kind: GroupKind, what: &str, format: Format) -> Result<String> {
    let desc = descriptor(kind)?;
    let graph = mckay_graph(&desc)?;
    match (what, format) {
        ("graph", Format::Json) => graph_to_json(&graph),
        ("graph", Format::Dot) => Ok(dot::graph_dot(&graph, &kind.name())),
        ("graph", Format::Text) => Err(Error::InvalidParameter(
            "graph export supports json or dot".into(),
        )),
        ("catalog", Format::Json) => render(&catalog_doc(&desc)?),
        ("catalog", _) => Err(Error::InvalidParameter(
            "catalog export supports json only".into(),
        )),
        (other, _) => Err(Error::InvalidParameter(format!(
            "unknown export target `{other}` (expected graph or catalog)"
        ))),
    }
}

fn catalog_doc(desc: &GroupDescriptor) -> Result<Value> {
    let classes = class_data(desc.kind)?;
    let class_json: Vec<Value> = classes
        .classes
        .iter()
        .map(|c| {
            let chi = match c.chi_v {
                crate::groups::CharValue::Int(v) => json!({"int": v}),
                crate::groups::CharValue::CosPi { p, q } => {
                    json!({"two_cos_pi": [p, q], "approx": c.chi_v.value()})
                }
            };
            json!({"label": c.label, "size": c.size, "chi_v": chi})
        })
        .collect();
    let su2 = desc.su2.as_ref().map(|s| {
        json!({
            "h": s.h,
            "h_hat": s.h_hat,
            "exponents_finite": s.exponents_finite,
            "exponents_affine": s.exponents_affine,
            "a": s.a_const,
            "b": s.b_const,
        })
    });
    Ok(doc(
        "catalog",
        vec![
            ("group", json!(desc.kind.name())),
            ("order", json!(desc.order)),
            ("node_labels", json!(desc.node_labels)),
            ("marks", json!(desc.marks)),
            ("su2", su2.map_or(Value::Null, |v| v)),
            ("classes", Value::Array(class_json)),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_source(spec: &str) -> LoadedGraph {
        load_source(&Source::Group(GroupKind::parse(spec).unwrap())).unwrap()
    }

    #[test]
    fn series_command_s4() {
        let loaded = group_source("S4");
        let out = cmd_series(&loaded, "(3,1)", 7, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], "1");
        let coeffs: Vec<i64> = v["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_i64().unwrap())
            .collect();
        assert_eq!(coeffs, vec![0, 1, 1, 4, 10, 31, 91]);
    }

    #[test]
    fn series_single_term() {
        let loaded = group_source("C3");
        let out = cmd_series(&loaded, "0", 1, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 1);
        assert_eq!(v["coefficients"][0].as_i64().unwrap(), 1);
    }

    #[test]
    fn icosahedral_series_through_t12() {
        let loaded = group_source("I");
        let out = cmd_series(&loaded, "0", 13, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"][12].as_i64().unwrap(), 133);
    }

    #[test]
    fn unknown_node_is_rejected() {
        let loaded = group_source("C3");
        assert!(cmd_series(&loaded, "7", 5, Format::Text).is_err());
    }

    #[test]
    fn bratteli_zero_levels() {
        let loaded = group_source("C5");
        let out = cmd_bratteli(&loaded, 0, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let levels = v["levels"].as_array().unwrap();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0]["z_dim"].as_i64().unwrap(), 1);
    }

    #[test]
    fn bratteli_text_levels() {
        let loaded = group_source("S4");
        let out = cmd_bratteli(&loaded, 6, Format::Text).unwrap();
        assert!(out.contains("dim Z_2 = 4"));
        assert!(out.contains("dim Z_6 = 22144"));
    }

    #[test]
    fn export_tetrahedral_graph() {
        let out = cmd_export(GroupKind::BinaryTetrahedral, "graph", Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let nodes = v["nodes"].as_array().unwrap();
        assert_eq!(nodes.len(), 7);
        let marks: Vec<u64> = nodes.iter().map(|n| n["mark"].as_u64().unwrap()).collect();
        let mut sorted = marks.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn export_octahedral_marks_sum_to_coxeter_number() {
        let out = cmd_export(GroupKind::BinaryOctahedral, "graph", Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let total: u64 = v["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|n| n["mark"].as_u64().unwrap())
            .sum();
        assert_eq!(total, 18);
    }

    #[test]
    fn export_catalog_entry() {
        let out = cmd_export(GroupKind::BinaryIcosahedral, "catalog", Format::Json).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["order"].as_u64().unwrap(), 120);
        assert_eq!(v["su2"]["h"].as_u64().unwrap(), 30);
        assert_eq!(v["classes"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn output_is_deterministic() {
        let loaded = group_source("D6");
        let a = cmd_series(&loaded, "0", 16, Format::Json).unwrap();
        let b = cmd_series(&loaded, "0", 16, Format::Json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn verify_single_suite_passes() {
        let (out, passed) = cmd_verify("chebyshev", 1e-9, Format::Text).unwrap();
        assert!(passed, "{out}");
        assert!(out.contains("checks passed"));
    }
}
