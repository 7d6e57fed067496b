//! Catalog of the finite subgroups of SU(2) — cyclic, binary dihedral,
//! binary tetrahedral/octahedral/icosahedral — plus a symmetric-group demo
//! entry, with the per-group metadata the series formulas consume: order,
//! node labels and dimension marks, Coxeter numbers and exponents, the
//! symmetric-algebra constants `a`, `b`, and conjugacy-class data for the
//! character of the defining module.

use crate::error::{Error, Result};
use crate::repgraph;
use crate::spectral;

/// A catalog entry identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Cyclic group of order `n ≥ 2`.
    Cyclic(u32),
    /// Binary dihedral group of order `4n`, `n ≥ 2`.
    BinaryDihedral(u32),
    /// Binary tetrahedral group, order 24.
    BinaryTetrahedral,
    /// Binary octahedral group, order 48.
    BinaryOctahedral,
    /// Binary icosahedral group, order 120.
    BinaryIcosahedral,
    /// The symmetric group on four letters with its standard 3-dimensional
    /// module; a non-SU(2) demo that runs through the same pipeline.
    S4Demo,
}

impl GroupKind {
    /// Parses specs like `C5`, `d6`, `T`, `o`, `I`, `S4` (case-insensitive).
    pub fn parse(spec: &str) -> Result<GroupKind> {
        let s = spec.trim().to_ascii_uppercase();
        let bad = || Error::InvalidParameter(format!("unrecognized group `{spec}`"));
        let kind = match s.as_str() {
            "T" => GroupKind::BinaryTetrahedral,
            "O" => GroupKind::BinaryOctahedral,
            "I" => GroupKind::BinaryIcosahedral,
            "S4" => GroupKind::S4Demo,
            _ => {
                let (family, digits) = s.split_at(1);
                let n: u32 = digits.parse().map_err(|_| bad())?;
                match family {
                    "C" => GroupKind::Cyclic(n),
                    "D" => GroupKind::BinaryDihedral(n),
                    _ => return Err(bad()),
                }
            }
        };
        kind.validate()?;
        Ok(kind)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GroupKind::Cyclic(n) | GroupKind::BinaryDihedral(n) if n < 2 => Err(
                Error::InvalidParameter(format!("parameter must be at least 2, got {n}")),
            ),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupKind::Cyclic(n) => format!("C{n}"),
            GroupKind::BinaryDihedral(n) => format!("D{n}"),
            GroupKind::BinaryTetrahedral => "T".into(),
            GroupKind::BinaryOctahedral => "O".into(),
            GroupKind::BinaryIcosahedral => "I".into(),
            GroupKind::S4Demo => "S4".into(),
        }
    }

    /// True for the SU(2) subgroups (everything except the demo entry).
    pub fn is_su2(&self) -> bool {
        !matches!(self, GroupKind::S4Demo)
    }

    /// The full catalog with parametric families swept over `2..=max_n`.
    pub fn catalog(max_n: u32) -> Vec<GroupKind> {
        let mut kinds = Vec::new();
        for n in 2..=max_n {
            kinds.push(GroupKind::Cyclic(n));
        }
        for n in 2..=max_n {
            kinds.push(GroupKind::BinaryDihedral(n));
        }
        kinds.extend([
            GroupKind::BinaryTetrahedral,
            GroupKind::BinaryOctahedral,
            GroupKind::BinaryIcosahedral,
            GroupKind::S4Demo,
        ]);
        kinds
    }
}

/// Spectral metadata of an SU(2) catalog entry: Coxeter numbers, exponent
/// multisets of the finite and affine diagrams, and the symmetric-algebra
/// degrees `a = 2·max mark`, `b = h + 2 - a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su2Spectral {
    pub h: u32,
    pub h_hat: u32,
    pub exponents_finite: Vec<u32>,
    pub exponents_affine: Vec<u32>,
    pub a_const: u32,
    pub b_const: u32,
}

/// Full catalog entry for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    pub order: u64,
    /// Node labels of the representation graph; index 0 is the trivial module.
    pub node_labels: Vec<String>,
    /// Dimensions of the irreducible modules, in node order.
    pub marks: Vec<u64>,
    /// Spectral data; present exactly for SU(2) kinds.
    pub su2: Option<Su2Spectral>,
}

impl GroupDescriptor {
    pub fn node_count(&self) -> usize {
        self.node_labels.len()
    }

    /// Spectral data, or an error for the demo entry.
    pub fn su2(&self) -> Result<&Su2Spectral> {
        self.su2.as_ref().ok_or_else(|| {
            Error::InvalidKind(format!("{} is not an SU(2) subgroup", self.kind.name()))
        })
    }
}

/// Builds the fully populated descriptor for `kind`.
pub fn descriptor(kind: GroupKind) -> Result<GroupDescriptor> {
    kind.validate()?;
    let desc = match kind {
        GroupKind::Cyclic(n) => cyclic_descriptor(n),
        GroupKind::BinaryDihedral(n) => dihedral_descriptor(n),
        GroupKind::BinaryTetrahedral => exceptional_descriptor(kind),
        GroupKind::BinaryOctahedral => exceptional_descriptor(kind),
        GroupKind::BinaryIcosahedral => exceptional_descriptor(kind),
        GroupKind::S4Demo => s4_descriptor(),
    };
    debug_assert!(desc.su2.as_ref().is_none_or(|s| {
        u64::from(s.h) == desc.marks.iter().sum::<u64>()
            && s.a_const + s.b_const == s.h + 2
            && s.exponents_finite.len() + 1 == desc.node_labels.len()
            && s.exponents_affine.len() == desc.node_labels.len()
    }));
    Ok(desc)
}

fn cyclic_descriptor(n: u32) -> GroupDescriptor {
    let node_labels = (0..n).map(|i| i.to_string()).collect();
    let marks = vec![1u64; n as usize];
    // finite diagram: path on n-1 nodes; exponents 1..n-1, Coxeter number n
    let exponents_finite: Vec<u32> = (1..n).collect();
    let (h_hat, exponents_affine) = if n.is_multiple_of(2) {
        // affine exponents 0, 1, 1, ..., l, l, l+1 with l = n/2 - 1
        let l = n / 2 - 1;
        let mut e = vec![0];
        for m in 1..=l {
            e.push(m);
            e.push(m);
        }
        e.push(l + 1);
        (n / 2, e)
    } else {
        // odd order: eigenvalues 2cos(2πr/n) rewritten over denominator n
        let mut e = vec![0];
        for m in 1..=(n - 1) / 2 {
            e.push(2 * m);
            e.push(2 * m);
        }
        (n, e)
    };
    GroupDescriptor {
        kind: GroupKind::Cyclic(n),
        order: u64::from(n),
        node_labels,
        marks,
        su2: Some(Su2Spectral {
            h: n,
            h_hat,
            exponents_finite,
            exponents_affine,
            a_const: 2,
            b_const: n,
        }),
    }
}

/// Node order for the binary dihedral entry: trivial leaf, its twin leaf,
/// the chain of 2-dimensional modules, then the two far leaves.
fn dihedral_labels(n: u32) -> Vec<String> {
    let mut labels = vec!["0".to_string(), "0'".to_string()];
    labels.extend((1..n).map(|i| i.to_string()));
    labels.push(n.to_string());
    labels.push(format!("{n}'"));
    labels
}

fn dihedral_descriptor(n: u32) -> GroupDescriptor {
    let node_labels = dihedral_labels(n);
    let mut marks = vec![1u64, 1];
    marks.extend(std::iter::repeat_n(2, n as usize - 1));
    marks.extend([1, 1]);
    let h = 2 * n + 2;
    // finite diagram D_{n+2}: exponents 1, 3, ..., 2n+1 and n+1
    let mut exponents_finite: Vec<u32> = (0..=n).map(|r| 2 * r + 1).collect();
    exponents_finite.push(n + 1);
    let (h_hat, exponents_affine) = if n.is_multiple_of(2) {
        // 0..=n with n/2 appearing three times in total
        let mut e: Vec<u32> = (0..=n).collect();
        e.push(n / 2);
        e.push(n / 2);
        (n, e)
    } else {
        // even values 0, 2, ..., 2n with n appearing twice
        let mut e: Vec<u32> = (0..=n).map(|r| 2 * r).collect();
        e.push(n);
        e.push(n);
        (2 * n, e)
    };
    GroupDescriptor {
        kind: GroupKind::BinaryDihedral(n),
        order: 4 * u64::from(n),
        node_labels,
        marks,
        su2: Some(Su2Spectral {
            h,
            h_hat,
            exponents_finite,
            exponents_affine,
            a_const: 4,
            b_const: 2 * n,
        }),
    }
}

struct ExceptionalEntry {
    order: u64,
    labels: &'static [&'static str],
    marks: &'static [u64],
    h: u32,
    h_hat: u32,
    exponents_finite: &'static [u32],
    exponents_affine: &'static [u32],
}

fn exceptional_descriptor(kind: GroupKind) -> GroupDescriptor {
    let entry = match kind {
        GroupKind::BinaryTetrahedral => ExceptionalEntry {
            order: 24,
            labels: &["0", "1", "2", "3", "2'", "1'", "2''"],
            marks: &[1, 1, 2, 3, 2, 1, 2],
            h: 12,
            h_hat: 6,
            exponents_finite: &[1, 4, 5, 7, 8, 11],
            exponents_affine: &[0, 2, 2, 3, 4, 4, 6],
        },
        GroupKind::BinaryOctahedral => ExceptionalEntry {
            order: 48,
            labels: &["0", "2", "3", "4", "3'", "2'", "1", "2''"],
            marks: &[1, 2, 3, 4, 3, 2, 1, 2],
            h: 18,
            h_hat: 12,
            exponents_finite: &[1, 5, 7, 9, 11, 13, 17],
            exponents_affine: &[0, 3, 4, 6, 6, 8, 9, 12],
        },
        GroupKind::BinaryIcosahedral => ExceptionalEntry {
            order: 120,
            labels: &["0", "2", "3", "4", "5", "6", "4'", "2'", "3'"],
            marks: &[1, 2, 3, 4, 5, 6, 4, 2, 3],
            h: 30,
            h_hat: 30,
            exponents_finite: &[1, 7, 11, 13, 17, 19, 23, 29],
            exponents_affine: &[0, 6, 10, 12, 15, 18, 20, 24, 30],
        },
        _ => unreachable!(),
    };
    let max_mark = *entry.marks.iter().max().unwrap() as u32;
    GroupDescriptor {
        kind,
        order: entry.order,
        node_labels: entry.labels.iter().map(|&l| l.to_string()).collect(),
        marks: entry.marks.to_vec(),
        su2: Some(Su2Spectral {
            h: entry.h,
            h_hat: entry.h_hat,
            exponents_finite: entry.exponents_finite.to_vec(),
            exponents_affine: entry.exponents_affine.to_vec(),
            a_const: 2 * max_mark,
            b_const: entry.h + 2 - 2 * max_mark,
        }),
    }
}

fn s4_descriptor() -> GroupDescriptor {
    GroupDescriptor {
        kind: GroupKind::S4Demo,
        order: 24,
        node_labels: ["(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"]
            .into_iter()
            .map(String::from)
            .collect(),
        marks: vec![1, 3, 2, 3, 1],
        su2: None,
    }
}

/// Exact character value of the defining module at a class: either a
/// rational integer or `2cos(πp/q)` stored symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Int(i64),
    /// `2·cos(π·p/q)`.
    CosPi {
        p: u32,
        q: u32,
    },
}

impl CharValue {
    pub fn value(&self) -> f64 {
        match *self {
            CharValue::Int(v) => v as f64,
            CharValue::CosPi { p, q } => {
                2.0 * (std::f64::consts::PI * f64::from(p) / f64::from(q)).cos()
            }
        }
    }
}

/// One conjugacy class: a label, its size, and the defining character value.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjClass {
    pub label: String,
    pub size: u64,
    pub chi_v: CharValue,
}

/// Conjugacy-class data for one catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassData {
    pub kind: GroupKind,
    pub classes: Vec<ConjClass>,
}

impl ClassData {
    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn chi_values(&self) -> Vec<f64> {
        self.classes.iter().map(|c| c.chi_v.value()).collect()
    }
}

/// Conjugacy classes with exact defining-character values.
///
/// The exceptional class sizes ship as curated constants; they are validated
/// by the class-sum and Molien identities in the verification suite.
pub fn class_data(kind: GroupKind) -> Result<ClassData> {
    kind.validate()?;
    let classes = match kind {
        GroupKind::Cyclic(n) => (0..n)
            .map(|r| ConjClass {
                label: format!("g^{r}"),
                size: 1,
                // 2cos(2πr/n) = 2cos(π·2r/n)
                chi_v: cos_class(2 * r, n),
            })
            .collect(),
        GroupKind::BinaryDihedral(n) => {
            let mut classes = vec![
                ConjClass {
                    label: "1".into(),
                    size: 1,
                    chi_v: CharValue::Int(2),
                },
                ConjClass {
                    label: "-1".into(),
                    size: 1,
                    chi_v: CharValue::Int(-2),
                },
            ];
            for r in 1..n {
                classes.push(ConjClass {
                    label: format!("x^{r}"),
                    size: 2,
                    chi_v: cos_class(r, n),
                });
            }
            classes.push(ConjClass {
                label: "y".into(),
                size: n.into(),
                chi_v: CharValue::Int(0),
            });
            classes.push(ConjClass {
                label: "yx".into(),
                size: n.into(),
                chi_v: CharValue::Int(0),
            });
            classes
        }
        GroupKind::BinaryTetrahedral => curated(&[
            ("1", 1, CharValue::Int(2)),
            ("-1", 1, CharValue::Int(-2)),
            ("6a", 4, CharValue::Int(1)),
            ("6b", 4, CharValue::Int(1)),
            ("3a", 4, CharValue::Int(-1)),
            ("3b", 4, CharValue::Int(-1)),
            ("4a", 6, CharValue::Int(0)),
        ]),
        GroupKind::BinaryOctahedral => curated(&[
            ("1", 1, CharValue::Int(2)),
            ("-1", 1, CharValue::Int(-2)),
            ("8a", 6, CharValue::CosPi { p: 1, q: 4 }),
            ("8b", 6, CharValue::CosPi { p: 3, q: 4 }),
            ("6a", 8, CharValue::Int(1)),
            ("3a", 8, CharValue::Int(-1)),
            ("4a", 12, CharValue::Int(0)),
            ("4b", 6, CharValue::Int(0)),
        ]),
        GroupKind::BinaryIcosahedral => curated(&[
            ("1", 1, CharValue::Int(2)),
            ("-1", 1, CharValue::Int(-2)),
            ("10a", 12, CharValue::CosPi { p: 1, q: 5 }),
            ("5a", 12, CharValue::CosPi { p: 2, q: 5 }),
            ("10b", 12, CharValue::CosPi { p: 3, q: 5 }),
            ("5b", 12, CharValue::CosPi { p: 4, q: 5 }),
            ("6a", 20, CharValue::Int(1)),
            ("3a", 20, CharValue::Int(-1)),
            ("4a", 30, CharValue::Int(0)),
        ]),
        GroupKind::S4Demo => curated(&[
            ("(1)", 1, CharValue::Int(3)),
            ("(12)", 6, CharValue::Int(1)),
            ("(123)", 8, CharValue::Int(0)),
            ("(1234)", 6, CharValue::Int(-1)),
            ("(12)(34)", 3, CharValue::Int(-1)),
        ]),
    };
    let data = ClassData { kind, classes };
    let expected_order = descriptor(kind)?.order;
    if data.order() != expected_order {
        return Err(Error::Internal(format!(
            "class sizes of {} sum to {}, expected {expected_order}",
            kind.name(),
            data.order()
        )));
    }
    Ok(data)
}

fn cos_class(p: u32, q: u32) -> CharValue {
    // fold the angle into [0, π], reduce the ratio, then take the integer
    // fast path where 2cos(πp/q) is rational
    let mut p = p % (2 * q);
    if p > q {
        p = 2 * q - p;
    }
    let g = num_integer::gcd(p.max(1), q);
    let (p, q) = if p == 0 { (0, 1) } else { (p / g, q / g) };
    match (p, q) {
        (0, _) => CharValue::Int(2),
        (1, 1) => CharValue::Int(-2),
        (1, 2) => CharValue::Int(0),
        (1, 3) => CharValue::Int(1),
        (2, 3) => CharValue::Int(-1),
        _ => CharValue::CosPi { p, q },
    }
}

fn curated(rows: &[(&str, u64, CharValue)]) -> Vec<ConjClass> {
    rows.iter()
        .map(|&(label, size, chi_v)| ConjClass {
            label: label.into(),
            size,
            chi_v,
        })
        .collect()
}

/// Result of comparing the adjacency spectrum with the character values and,
/// where defined, with the affine exponent angles.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub kind: GroupKind,
    /// Eigenvalues of the adjacency matrix, ascending.
    pub eigenvalues: Vec<f64>,
    /// Character values of the defining module, ascending.
    pub char_values: Vec<f64>,
    /// Max absolute mismatch between the two multisets under sorted pairing.
    pub chi_mismatch: f64,
    /// `2cos(π·m̂/ĥ)` over the affine exponents, ascending, when applicable.
    pub exponent_values: Option<Vec<f64>>,
    pub exponent_mismatch: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Computes the eigenvalues of the adjacency matrix numerically and compares
/// them with the character values of the defining module; for kinds other
/// than odd cyclic, also with the cosine values of the affine exponents.
pub fn steinberg_spectrum_check(kind: GroupKind, tolerance: f64) -> Result<SpectrumReport> {
    let desc = descriptor(kind)?;
    let graph = repgraph::mckay_graph(&desc)?;
    let mut eigenvalues = spectral::symmetric_eigenvalues(&graph.adj);
    eigenvalues.sort_by(f64::total_cmp);

    let mut char_values = class_data(kind)?.chi_values();
    char_values.sort_by(f64::total_cmp);
    let chi_mismatch = spectral::sorted_mismatch(&eigenvalues, &char_values);

    let covered = match kind {
        GroupKind::Cyclic(n) => n % 2 == 0,
        GroupKind::S4Demo => false,
        _ => true,
    };
    let (exponent_values, exponent_mismatch) = if covered {
        let su2 = desc.su2()?;
        let mut vals: Vec<f64> = su2
            .exponents_affine
            .iter()
            .map(|&m| 2.0 * (std::f64::consts::PI * f64::from(m) / f64::from(su2.h_hat)).cos())
            .collect();
        vals.sort_by(f64::total_cmp);
        let mismatch = spectral::sorted_mismatch(&eigenvalues, &vals);
        (Some(vals), Some(mismatch))
    } else {
        (None, None)
    };

    let pass = chi_mismatch < tolerance && exponent_mismatch.is_none_or(|m| m < tolerance);
    Ok(SpectrumReport {
        kind,
        eigenvalues,
        char_values,
        chi_mismatch,
        exponent_values,
        exponent_mismatch,
        tolerance,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(GroupKind::parse("c5").unwrap(), GroupKind::Cyclic(5));
        assert_eq!(
            GroupKind::parse("D12").unwrap(),
            GroupKind::BinaryDihedral(12)
        );
        assert_eq!(GroupKind::parse("t").unwrap(), GroupKind::BinaryTetrahedral);
        assert_eq!(GroupKind::parse("S4").unwrap(), GroupKind::S4Demo);
        assert!(GroupKind::parse("C1").is_err());
        assert!(GroupKind::parse("X9").is_err());
        assert!(GroupKind::parse("C").is_err());
    }

    #[test]
    fn icosahedral_spectral_data() {
        let d = descriptor(GroupKind::BinaryIcosahedral).unwrap();
        assert_eq!(d.order, 120);
        let s = d.su2().unwrap();
        assert_eq!(s.h, 30);
        assert_eq!(s.exponents_finite, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(s.a_const, 12);
        assert_eq!(s.b_const, 20);
    }

    #[test]
    fn tetrahedral_symmetric_algebra_constants() {
        let d = descriptor(GroupKind::BinaryTetrahedral).unwrap();
        let s = d.su2().unwrap();
        assert_eq!((s.a_const, s.b_const, s.h), (6, 8, 12));
    }

    #[test]
    fn cyclic_marks_and_coxeter() {
        let d = descriptor(GroupKind::Cyclic(4)).unwrap();
        assert!(d.marks.iter().all(|&m| m == 1));
        assert_eq!(d.su2().unwrap().h, 4);
    }

    #[test]
    fn descriptor_invariants_across_catalog() {
        for kind in GroupKind::catalog(12) {
            let d = descriptor(kind).unwrap();
            assert_eq!(
                class_data(kind).unwrap().order(),
                d.order,
                "{}",
                kind.name()
            );
            if let Some(s) = &d.su2 {
                assert_eq!(u64::from(s.h), d.marks.iter().sum::<u64>());
                assert_eq!(s.a_const + s.b_const, s.h + 2);
                assert_eq!(s.exponents_finite.len(), d.node_count() - 1);
                assert_eq!(s.exponents_affine.len(), d.node_count());
            }
        }
    }

    #[test]
    fn cyclic_character_values() {
        let data = class_data(GroupKind::Cyclic(4)).unwrap();
        let chi: Vec<f64> = data.chi_values();
        assert_eq!(chi, vec![2.0, 0.0, -2.0, 0.0]);
    }

    #[test]
    fn icosahedral_character_multiset() {
        let data = class_data(GroupKind::BinaryIcosahedral).unwrap();
        let mut chi = data.chi_values();
        chi.sort_by(f64::total_cmp);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut want = vec![2.0, -2.0, 1.0, -1.0, 0.0, phi, phi - 1.0, 1.0 - phi, -phi];
        want.sort_by(f64::total_cmp);
        for (a, b) in chi.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn tetrahedral_spectrum_matches_characters() {
        let report = steinberg_spectrum_check(GroupKind::BinaryTetrahedral, 1e-9).unwrap();
        assert!(report.pass, "mismatch {}", report.chi_mismatch);
        let want = [-2.0, -1.0, -1.0, 0.0, 1.0, 1.0, 2.0];
        for (a, b) in report.eigenvalues.iter().zip(want) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn double_edge_spectrum() {
        let report = steinberg_spectrum_check(GroupKind::Cyclic(2), 1e-9).unwrap();
        assert!(report.pass);
        assert!((report.eigenvalues[0] + 2.0).abs() < 1e-9);
        assert!((report.eigenvalues[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn dihedral_even_affine_exponents() {
        // 7-node affine diagram for the order-16 binary dihedral group
        let d = descriptor(GroupKind::BinaryDihedral(4)).unwrap();
        let s = d.su2().unwrap();
        assert_eq!(s.h_hat, 4);
        let mut e = s.exponents_affine.clone();
        e.sort_unstable();
        assert_eq!(e, vec![0, 1, 2, 2, 2, 3, 4]);
        let report = steinberg_spectrum_check(GroupKind::BinaryDihedral(4), 1e-9).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn odd_cyclic_not_covered_by_exponent_form() {
        let report = steinberg_spectrum_check(GroupKind::Cyclic(5), 1e-9).unwrap();
        assert!(report.exponent_values.is_none());
        assert!(report.pass, "mismatch {}", report.chi_mismatch);
    }

    #[test]
    fn s4_spectrum_matches_characters() {
        let report = steinberg_spectrum_check(GroupKind::S4Demo, 1e-9).unwrap();
        assert!(report.pass, "mismatch {}", report.chi_mismatch);
    }
}
