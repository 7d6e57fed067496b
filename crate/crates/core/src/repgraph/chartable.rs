//! Character-table ingestion: CSV parsing and construction of the
//! representation graph from tensor-product multiplicities
//! `a_{μλ} = (1/|G|) Σ_c size_c · χ_μ(c) · χ_V(c) · conj(χ_λ(c))`.
//!
//! The arithmetic is floating point behind a strict integrality gate; a
//! corrupt table fails the gate or the row-orthonormality test instead of
//! producing a wrong graph.

use num_complex::Complex64;

use super::RepGraph;
use crate::error::{Error, Result};

/// Tolerance for the orthonormality and integrality gates.
const GATE: f64 = 1e-6;

/// An ingested character table. Column 0 is the identity class; row 0 must
/// be the trivial character.
#[derive(Debug, Clone, PartialEq)]
pub struct CharTable {
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<u64>,
    pub irrep_labels: Vec<String>,
    pub rows: Vec<Vec<Complex64>>,
    /// Irrep selected by a `#V=<label>` directive, if any.
    pub v_label: Option<String>,
}

impl CharTable {
    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn irrep_index(&self, label: &str) -> Option<usize> {
        self.irrep_labels.iter().position(|l| l == label)
    }

    /// Parses the CSV interchange format: an optional `#V=<label>` directive,
    /// then one row of class labels, one row of class sizes, and one row per
    /// irreducible (`label, v1, v2, ...`). Entries are decimal literals,
    /// optionally complex (`a`, `a+bi`, `a-bi`).
    pub fn parse_csv(text: &str) -> Result<CharTable> {
        let mut v_label = None;
        let mut body = String::new();
        for line in text.lines() {
            let trimmed = line.trim();
            if let Some(rest) = trimmed.strip_prefix("#V=") {
                v_label = Some(rest.trim().to_string());
            } else if trimmed.starts_with('#') || trimmed.is_empty() {
                continue;
            } else {
                body.push_str(line);
                body.push('\n');
            }
        }
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(body.as_bytes());
        let mut records = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| Error::BadCharTable(e.to_string()))?;
            records.push(record.iter().map(str::to_string).collect::<Vec<_>>());
        }
        if records.len() < 3 {
            return Err(Error::BadCharTable(
                "need a class-label row, a size row, and at least one character row".into(),
            ));
        }
        let class_labels = records[0].clone();
        let n = class_labels.len();
        if records[1].len() != n {
            return Err(Error::BadCharTable(format!(
                "size row has {} entries for {n} classes",
                records[1].len()
            )));
        }
        let class_sizes = records[1]
            .iter()
            .map(|s| {
                s.parse::<u64>()
                    .map_err(|_| Error::BadCharTable(format!("bad class size `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut irrep_labels = Vec::new();
        let mut rows = Vec::new();
        for record in &records[2..] {
            if record.len() != n + 1 {
                return Err(Error::BadCharTable(format!(
                    "character row `{}` has {} values for {n} classes",
                    record.first().map(String::as_str).unwrap_or(""),
                    record.len().saturating_sub(1)
                )));
            }
            irrep_labels.push(record[0].clone());
            rows.push(
                record[1..]
                    .iter()
                    .map(|s| parse_complex(s))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(CharTable {
            class_labels,
            class_sizes,
            irrep_labels,
            rows,
            v_label,
        })
    }
}

/// Parses `a`, `a+bi`, `a-bi`, or a pure-imaginary `bi`.
fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || Error::BadCharTable(format!("bad entry `{s}`"));
    let t = s.trim();
    let Some(body) = t.strip_suffix(['i', 'I']) else {
        return t.parse::<f64>().map(Complex64::from).map_err(|_| bad());
    };
    // split real and imaginary parts at the last sign that is not an
    // exponent sign and not leading
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| {
            (c == '+' || c == '-') && i > 0 && !matches!(body.as_bytes()[i - 1], b'e' | b'E')
        })
        .map(|(i, _)| i);
    let (re_str, im_str) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => im_str.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

/// Builds the representation graph of the irrep at `v_index` from a complete
/// character table.
///
/// Asymmetric output (a non-self-dual choice of V) is accepted here — walk
/// counting is still meaningful — and rejected later by the series engine.
pub fn graph_from_chartable(table: &CharTable, v_index: usize) -> Result<RepGraph> {
    let n_classes = table.class_labels.len();
    let n_irreps = table.rows.len();
    if v_index >= n_irreps {
        return Err(Error::InvalidParameter(format!(
            "irrep index {v_index} out of range"
        )));
    }
    if n_irreps != n_classes {
        return Err(Error::BadCharTable(format!(
            "{n_irreps} characters for {n_classes} classes; the table must be complete"
        )));
    }
    if table.class_sizes.first() != Some(&1) {
        return Err(Error::BadCharTable(
            "column 0 must be the identity class (size 1)".into(),
        ));
    }
    if !table.rows[0]
        .iter()
        .all(|v| (v - Complex64::new(1.0, 0.0)).norm() <= GATE)
    {
        return Err(Error::BadCharTable(
            "row 0 must be the trivial character".into(),
        ));
    }
    let order = table.order() as f64;

    let marks = (0..n_irreps)
        .map(|mu| {
            round_nonneg(
                table.rows[mu][0],
                &format!("dim of `{}`", table.irrep_labels[mu]),
            )
        })
        .collect::<Result<Vec<u64>>>()?;
    let v_dim = marks[v_index];

    let chi_v = &table.rows[v_index];
    let mut adj = vec![vec![0u64; n_irreps]; n_irreps];
    for mu in 0..n_irreps {
        for la in 0..n_irreps {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n_classes {
                acc += table.class_sizes[c] as f64
                    * table.rows[mu][c]
                    * chi_v[c]
                    * table.rows[la][c].conj();
            }
            acc /= order;
            adj[mu][la] = round_nonneg(
                acc,
                &format!(
                    "multiplicity of `{}` in `{}`⊗V",
                    table.irrep_labels[la], table.irrep_labels[mu]
                ),
            )?;
        }
    }

    // row orthonormality under the size-weighted inner product; catches
    // corruption the integrality gate can miss (a uniformly scaled table)
    let mut worst = 0.0f64;
    for mu in 0..n_irreps {
        for nu in mu..n_irreps {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n_classes {
                acc += table.class_sizes[c] as f64 * table.rows[mu][c] * table.rows[nu][c].conj();
            }
            acc /= order;
            let target = if mu == nu { 1.0 } else { 0.0 };
            worst = worst.max((acc - Complex64::from(target)).norm());
        }
    }
    if worst > GATE {
        return Err(Error::NotOrthonormal(format!(
            "max deviation {worst:.3e} exceeds {GATE:.0e}"
        )));
    }

    let graph = RepGraph {
        labels: table.irrep_labels.clone(),
        marks,
        adj,
        v_dim,
    };
    graph
        .validate()
        .map_err(|e| Error::BadCharTable(format!("ingested table is inconsistent: {e}")))?;
    Ok(graph)
}

fn round_nonneg(v: Complex64, what: &str) -> Result<u64> {
    let r = v.re.round();
    if v.im.abs() > GATE || (v.re - r).abs() > GATE || r < 0.0 {
        return Err(Error::NotIntegral(format!(
            "{what} = {:.8}{:+.8}i is not a nonnegative integer",
            v.re, v.im
        )));
    }
    Ok(r as u64)
}

/// The built-in character table of the demo group, matching the CSV fixture.
pub fn s4_character_table() -> CharTable {
    let c = |v: i64| Complex64::new(v as f64, 0.0);
    CharTable {
        class_labels: ["(1)", "(12)", "(123)", "(1234)", "(12)(34)"]
            .map(String::from)
            .to_vec(),
        class_sizes: vec![1, 6, 8, 6, 3],
        irrep_labels: ["(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"]
            .map(String::from)
            .to_vec(),
        rows: vec![
            [1, 1, 1, 1, 1].map(c).to_vec(),
            [3, 1, 0, -1, -1].map(c).to_vec(),
            [2, 0, -1, 0, 2].map(c).to_vec(),
            [3, -1, 0, 1, -1].map(c).to_vec(),
            [1, -1, 1, -1, 1].map(c).to_vec(),
        ],
        v_label: Some("(3,1)".into()),
    }
}
