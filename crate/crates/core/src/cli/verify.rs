//! Verification suites run by the `verify` subcommand. Every identity the
//! library relies on is rechecked here across the whole catalog (parametric
//! families swept over 2..=12), each as one report line carrying either an
//! exact-pass flag or a numeric residual.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::chebyshev::{
    cheb_p, cheb_p_closed, cheb_t, cheb_t_closed, cheb_u, cheb_u_closed, dynkin_a,
    dynkin_a_recurrence, dynkin_d, dynkin_d_recurrence, verify_identities,
};
use crate::closedform::{
    class_product_exact, class_product_numeric, cyclic_closed, cyclic_denominator,
    cyclic_denominator_by_reversal, dihedral_closed, exceptional_closed, exceptional_m0,
    exponent_product,
};
use crate::error::{Error, Result};
use crate::groups::{class_data, descriptor, steinberg_spectrum_check, GroupKind};
use crate::poincare::{
    invariants_series, molien_invariants, series_all, sym_invariants_series, system_matrix,
};
use crate::repgraph::{
    graph_from_chartable, graph_from_json, graph_to_json, mckay_graph, s4_character_table,
    walk_counts,
};

/// Parameter bound for the cyclic/dihedral sweeps.
pub const SWEEP_MAX_N: u32 = 12;

/// Fixed tolerance of the Molien cross-check.
pub const MOLIEN_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub tolerance: f64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn exact(checks: &mut Vec<Check>, name: impl Into<String>, pass: bool) {
    checks.push(Check {
        name: name.into(),
        pass,
        detail: if pass {
            "exact".into()
        } else {
            "mismatch".into()
        },
    });
}

fn residual(checks: &mut Vec<Check>, name: impl Into<String>, r: f64, tol: f64) {
    checks.push(Check {
        name: name.into(),
        pass: r < tol,
        detail: format!("residual {r:.3e} (tol {tol:.1e})"),
    });
}

/// Runs one named suite. `all` concatenates every suite.
pub fn run_suite(suite: &str, tolerance: f64) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    match suite {
        "chebyshev" => suite_chebyshev(tolerance, &mut checks),
        "steinberg" => suite_steinberg(tolerance, &mut checks)?,
        "closedform" => suite_closedform(tolerance, &mut checks)?,
        "molien" => suite_molien(&mut checks)?,
        "oracle" => suite_oracle(&mut checks)?,
        "all" => {
            suite_chebyshev(tolerance, &mut checks);
            suite_steinberg(tolerance, &mut checks)?;
            suite_closedform(tolerance, &mut checks)?;
            suite_molien(&mut checks)?;
            suite_oracle(&mut checks)?;
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite `{other}` (expected all, chebyshev, steinberg, closedform, molien, oracle)"
            )))
        }
    }
    Ok(VerifyReport {
        suite: suite.to_string(),
        tolerance,
        checks,
    })
}

fn suite_chebyshev(tol: f64, checks: &mut Vec<Check>) {
    let mut rec_vs_closed = true;
    let mut first_bad = None;
    for n in 0..=50usize {
        let ok = cheb_t(n) == cheb_t_closed(n)
            && cheb_u(n) == cheb_u_closed(n)
            && cheb_p(n) == cheb_p_closed(n)
            && dynkin_a(n) == dynkin_a_recurrence(n)
            && dynkin_d(n)
                .map(|d| d == dynkin_d_recurrence(n))
                .unwrap_or(false);
        if !ok && first_bad.is_none() {
            first_bad = Some(n);
        }
        rec_vs_closed &= ok;
    }
    checks.push(Check {
        name: "T/U/p/a/d recurrence vs closed form, n ≤ 50".into(),
        pass: rec_vs_closed,
        detail: first_bad.map_or("exact".into(), |n| format!("first failure at n = {n}")),
    });

    let pass = (2..=50).all(|n| {
        let lhs = &cheb_u(n) - &cheb_u(n - 2);
        lhs == cheb_t(n).scale(&BigInt::from(2))
    });
    exact(checks, "U_n - U_{n-2} = 2T_n, n ≤ 50", pass);

    let report = verify_identities(20, tol);
    let worst_root = report
        .checks
        .iter()
        .filter(|c| c.name.starts_with('p'))
        .fold(0.0f64, |m, c| m.max(c.residual));
    residual(
        checks,
        "roots of p_n at 2cos(πr/(n+1)), n ≤ 20",
        worst_root,
        tol,
    );
    let worst_prod = report
        .checks
        .iter()
        .filter(|c| c.name.starts_with('T'))
        .fold(0.0f64, |m, c| m.max(c.residual));
    residual(
        checks,
        "T_n product form at sample points, n ≤ 20",
        worst_prod,
        tol,
    );

    let parity = (0..=30usize).all(|n| {
        let a = dynkin_a(n);
        let d = dynkin_d(n).unwrap();
        a.degree() == Some(2 * (n / 2))
            && d.degree() == Some(2 * n.div_ceil(2))
            && a.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
            && d.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
    });
    exact(
        checks,
        "degrees and even parity of a_n, d_n, n ≤ 30",
        parity,
    );
}

fn suite_steinberg(tol: f64, checks: &mut Vec<Check>) -> Result<()> {
    for kind in GroupKind::catalog(SWEEP_MAX_N) {
        let name = kind.name();
        let desc = descriptor(kind)?;
        let graph = mckay_graph(&desc)?;

        let report = steinberg_spectrum_check(kind, tol)?;
        let worst = report
            .chi_mismatch
            .max(report.exponent_mismatch.unwrap_or(0.0));
        residual(
            checks,
            format!(
                "{name}: spectrum of A vs character values{}",
                if report.exponent_values.is_some() {
                    " and affine exponents"
                } else {
                    ""
                }
            ),
            worst,
            tol,
        );

        let pf = (0..graph.node_count()).all(|mu| {
            let w: u64 = (0..graph.node_count())
                .map(|la| graph.adj[mu][la] * graph.marks[la])
                .sum();
            w == graph.v_dim * graph.marks[mu]
        });
        exact(
            checks,
            format!("{name}: A·marks = {}·marks", graph.v_dim),
            pf,
        );

        let det = system_matrix(&graph).det();
        let at_inv_v =
            det.eval_rational(&BigRational::new(BigInt::one(), BigInt::from(graph.v_dim)));
        exact(
            checks,
            format!("{name}: det(I - tA) vanishes at t = 1/{}", graph.v_dim),
            at_inv_v.is_zero(),
        );

        let data = class_data(kind)?;
        exact(
            checks,
            format!("{name}: class sizes sum to the group order"),
            data.order() == desc.order,
        );

        if kind.is_su2() {
            match class_product_exact(kind)? {
                Some(product) => exact(
                    checks,
                    format!("{name}: Π(1 - χ_V t) over classes = det(I - tA)"),
                    product == det,
                ),
                None => {
                    let numeric = class_product_numeric(kind)?;
                    let worst = numeric.iter().enumerate().fold(0.0f64, |m, (k, c)| {
                        m.max((c - det.coeff(k).to_f64().unwrap_or(f64::NAN)).abs())
                    });
                    residual(
                        checks,
                        format!("{name}: Π(1 - χ_V t) over classes ≈ det(I - tA)"),
                        worst,
                        tol,
                    );
                }
            }
        }
    }
    Ok(())
}

fn suite_closedform(tol: f64, checks: &mut Vec<Check>) -> Result<()> {
    let cyclic_golden: [(u32, &[i64], &[i64]); 5] = [
        (3, &[1, 0, -1], &[1, 0, -3, -2]),
        (4, &[1, 0, -2], &[1, 0, -4]),
        (5, &[1, 0, -3, 0, 1], &[1, 0, -5, 0, 5, -2]),
        (6, &[1, 0, -4, 0, 3], &[1, 0, -6, 0, 9, 0, -4]),
        (7, &[1, 0, -5, 0, 6, 0, -1], &[1, 0, -7, 0, 14, 0, -7, -2]),
    ];
    let pass = cyclic_golden.iter().all(|(n, num, den)| {
        let c = cyclic_closed(*n).unwrap();
        c.numerator == crate::polyring::IntPoly::from_i64(num)
            && c.denominator == crate::polyring::IntPoly::from_i64(den)
    });
    exact(checks, "cyclic golden pairs, n = 3..7", pass);

    let dihedral_golden: [(u32, &[i64], &[i64]); 5] = [
        (2, &[1, 0, -3], &[1, 0, -4]),
        (3, &[1, 0, -4, 0, 2], &[1, 0, -5, 0, 4]),
        (4, &[1, 0, -5, 0, 5], &[1, 0, -6, 0, 8]),
        (5, &[1, 0, -6, 0, 9, 0, -2], &[1, 0, -7, 0, 13, 0, -4]),
        (6, &[1, 0, -7, 0, 14, 0, -7], &[1, 0, -8, 0, 19, 0, -12]),
    ];
    let pass = dihedral_golden.iter().all(|(n, num, den)| {
        let c = dihedral_closed(*n).unwrap();
        c.numerator == crate::polyring::IntPoly::from_i64(num)
            && c.denominator == crate::polyring::IntPoly::from_i64(den)
    });
    exact(checks, "dihedral golden pairs, n = 2..6", pass);

    for n in 2..=SWEEP_MAX_N {
        for (kind, closed) in [
            (GroupKind::Cyclic(n), cyclic_closed(n)?),
            (GroupKind::BinaryDihedral(n), dihedral_closed(n)?),
        ] {
            let inv = invariants_series(&mckay_graph(&descriptor(kind)?)?)?;
            exact(
                checks,
                format!("{}: closed form ≡ determinant engine", kind.name()),
                inv.series
                    .equivalent_pair(&closed.numerator, &closed.denominator),
            );
        }
    }

    for kind in [
        GroupKind::BinaryTetrahedral,
        GroupKind::BinaryOctahedral,
        GroupKind::BinaryIcosahedral,
    ] {
        let c = exceptional_closed(kind)?;
        let inv = invariants_series(&mckay_graph(&descriptor(kind)?)?)?;
        exact(
            checks,
            format!(
                "{}: stored invariant pair = recomputed determinants",
                kind.name()
            ),
            inv.numerator_det == c.numerator && inv.denominator_det == c.denominator,
        );

        let series = inv.series.series(31);
        let pass = (1..=15).all(|n| exceptional_m0(kind, n).unwrap() == series[2 * n]);
        exact(
            checks,
            format!(
                "{}: Lucas-form multiplicities match coefficients, n ≤ 15",
                kind.name()
            ),
            pass,
        );
    }

    for kind in GroupKind::catalog(SWEEP_MAX_N) {
        let applicable = match kind {
            GroupKind::Cyclic(n) => n % 2 == 0,
            GroupKind::S4Demo => false,
            _ => true,
        };
        if !applicable {
            continue;
        }
        let report = exponent_product(kind, 64, tol)?;
        residual(
            checks,
            format!("{}: exponent products vs determinants", kind.name()),
            report.finite_residual.max(report.affine_residual),
            tol,
        );
    }

    let pass = (2..=30)
        .all(|n| cyclic_denominator(n).unwrap() == cyclic_denominator_by_reversal(n).unwrap());
    exact(checks, "cyclic denominator reversal identity, n ≤ 30", pass);
    Ok(())
}

fn suite_molien(checks: &mut Vec<Check>) -> Result<()> {
    for kind in GroupKind::catalog(SWEEP_MAX_N) {
        if !kind.is_su2() {
            continue;
        }
        let desc = descriptor(kind)?;
        let molien = molien_invariants(&desc, 40)?;
        let series = sym_invariants_series(&desc)?.series(40);
        let worst = molien
            .iter()
            .zip(&series)
            .fold(0.0f64, |m, (a, b)| m.max((a - b.to_f64().unwrap()).abs()));
        residual(
            checks,
            format!(
                "{}: Molien sum vs symmetric-invariant series, 40 terms",
                kind.name()
            ),
            worst,
            MOLIEN_TOLERANCE,
        );
    }
    Ok(())
}

fn suite_oracle(checks: &mut Vec<Check>) -> Result<()> {
    for kind in GroupKind::catalog(SWEEP_MAX_N) {
        let name = kind.name();
        let graph = mckay_graph(&descriptor(kind)?)?;
        let walks = walk_counts(&graph, 20);
        let all = series_all(&graph)?;

        let mut series_match = true;
        for (mu, result) in all.iter().enumerate() {
            let coeffs = result.series.series(21);
            for (k, walk) in walks.iter().enumerate() {
                if coeffs[k] != walk[mu] {
                    series_match = false;
                }
            }
        }
        exact(
            checks,
            format!("{name}: series coefficients = walk counts, every node, k ≤ 20"),
            series_match,
        );

        let dims_ok = walks.iter().enumerate().all(|(k, level)| {
            let total: BigInt = level
                .iter()
                .zip(&graph.marks)
                .map(|(m, &d)| m * BigInt::from(d))
                .sum();
            total == BigInt::from(graph.v_dim).pow(k as u32)
        });
        exact(
            checks,
            format!("{name}: Σ m_k^λ·d^λ = {}^k, k ≤ 20", graph.v_dim),
            dims_ok,
        );

        let z_ok = (0..=10).all(|k| {
            let z: BigInt = walks[k].iter().map(|m| m * m).sum();
            z == walks[2 * k][0]
        });
        exact(checks, format!("{name}: Σ (m_k^λ)² = m_2k^0, k ≤ 10"), z_ok);

        let json = graph_to_json(&graph)?;
        exact(
            checks,
            format!("{name}: graph JSON round-trip"),
            graph_from_json(&json)? == graph,
        );
    }

    let table = s4_character_table();
    let v = table.irrep_index("(3,1)").expect("V row present");
    let ingested = graph_from_chartable(&table, v)?;
    let catalog = mckay_graph(&descriptor(GroupKind::S4Demo)?)?;
    exact(
        checks,
        "S4: character-table ingestion reproduces the catalog graph",
        ingested == catalog,
    );

    let mut perturbed = table.clone();
    perturbed.rows[2][1] += num_complex::Complex64::new(1e-3, 0.0);
    let rejected = matches!(
        graph_from_chartable(&perturbed, v),
        Err(Error::NotIntegral(_))
    );
    exact(
        checks,
        "S4: perturbed table fails the integrality gate",
        rejected,
    );

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for suite in ["chebyshev", "steinberg", "closedform", "molien", "oracle"] {
            let report = run_suite(suite, 1e-9).unwrap();
            let failures: Vec<&Check> = report.checks.iter().filter(|c| !c.pass).collect();
            assert!(
                failures.is_empty(),
                "suite {suite} failed: {:?}",
                failures
                    .iter()
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("bogus", 1e-9),
            Err(Error::InvalidParameter(_))
        ));
    }
}
