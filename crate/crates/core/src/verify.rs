//! Cross-route verification: every counting family computed several ways,
//! every determinant identity recomputed from scratch, one outcome per
//! check group. The CLI renders these outcomes; the acceptance suite runs
//! the same comparisons at its own ranges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::closed_form::{a_closed, b_closed, c_closed, d_closed};
use crate::determinant::{
    bordered_det, d_sequence, d_star, det_exact, f_stabilization, psi_stabilization,
    tau_explicit, tau_sequence, BandKind, BandMatrixSpec, binet_numeric,
};
use crate::error::Result;
use crate::genfun::{binet_poly, f_series, g_series, girard_waring_poly, phi_series, psi_series};
use crate::path::{oracle_counts, Direction};
use crate::recurrence::{ab_tables, cd_tables, CountTable};
use crate::series::Var;
use crate::{QSeries, ZPoly};

/// Result of one check group.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    /// Number of individual comparisons the group performed.
    pub compared: usize,
    /// First failure, or a short summary for informative passes.
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, compared: usize, detail: String) -> Self {
        CheckOutcome { name, pass: true, compared, detail }
    }

    fn fail(name: &'static str, compared: usize, detail: String) -> Self {
        CheckOutcome { name, pass: false, compared, detail }
    }
}

/// Ranges for one crosscheck run.
#[derive(Debug, Clone)]
pub struct CrosscheckConfig {
    /// Row bound for DP vs series and DP vs closed-form comparisons.
    pub n_max: usize,
    /// Row bound for the exhaustive oracle (hard-capped at
    /// [`crate::ORACLE_MAX_N`]).
    pub oracle_bound: usize,
    /// Family index bound for the series comparisons.
    pub series_k_max: usize,
    /// Matrix size bound for determinant-vs-recursion checks.
    pub det_h_max: usize,
    /// Size bound for the bordered-determinant identity.
    pub bordered_n_max: usize,
    /// Truncation order for the Cramer stabilization scans.
    pub stab_order: usize,
    /// Largest family index scanned for stabilization.
    pub stab_i_max: usize,
    /// Index bound for the Girard-Waring / Binet polynomial identity.
    pub gw_k_max: usize,
    /// Debug hook: corrupt one DP entry to prove mismatches are caught.
    pub inject_fault: bool,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            n_max: 40,
            oracle_bound: 10,
            series_k_max: 8,
            det_h_max: 10,
            bordered_n_max: 9,
            stab_order: 20,
            stab_i_max: 3,
            gw_k_max: 40,
            inject_fault: false,
        }
    }
}

fn compare_tables(dp: &CountTable, oracle: &CountTable) -> (usize, Option<String>) {
    let mut compared = 0;
    for n in 0..=oracle.n_max().min(dp.n_max()) {
        for k in 0..=n {
            compared += 1;
            if dp.get(n, k) != oracle.get(n, k) {
                return (
                    compared,
                    Some(format!(
                        "{}({n},{k}): dp={} oracle={}",
                        dp.family().letter(),
                        dp.get(n, k),
                        oracle.get(n, k)
                    )),
                );
            }
        }
    }
    (compared, None)
}

fn corrupt(table: &CountTable) -> CountTable {
    let mut rows = table.rows().to_vec();
    rows[2][1] += BigInt::one();
    CountTable::from_rows(table.family(), rows)
}

fn check_oracle_vs_dp(cfg: &CrosscheckConfig, direction: Direction) -> Result<CheckOutcome> {
    let name = match direction {
        Direction::Forward => "oracle-vs-dp-forward",
        Direction::Reverse => "oracle-vs-dp-reverse",
    };
    let bound = cfg.oracle_bound;
    let (o1, o2) = oracle_counts(direction, bound)?;
    let (mut t1, t2) = match direction {
        Direction::Forward => ab_tables(bound),
        Direction::Reverse => cd_tables(bound),
    };
    if cfg.inject_fault && direction == Direction::Forward {
        t1 = corrupt(&t1);
    }
    let (c1, err1) = compare_tables(&t1, &o1);
    if let Some(e) = err1 {
        return Ok(CheckOutcome::fail(name, c1, e));
    }
    let (c2, err2) = compare_tables(&t2, &o2);
    if let Some(e) = err2 {
        return Ok(CheckOutcome::fail(name, c1 + c2, e));
    }
    Ok(CheckOutcome::pass(name, c1 + c2, format!("n <= {bound}, both families")))
}

fn check_dp_vs_series(cfg: &CrosscheckConfig) -> Result<CheckOutcome> {
    let name = "dp-vs-series";
    let order = cfg.n_max;
    let (a, b) = ab_tables(order);
    let (c, d) = cd_tables(order);
    let mut compared = 0;
    for k in 0..=cfg.series_k_max {
        let series = [
            (f_series(k, order)?, &a),
            (g_series(k, order)?, &b),
            (phi_series(k, order)?, &c),
            (psi_series(k, order)?, &d),
        ];
        for (s, table) in &series {
            for n in 0..=order {
                compared += 1;
                let want = if k <= n { table.get(n, k) } else { BigInt::ZERO };
                if s.coeff(n) != &BigRational::from(want.clone()) {
                    return Ok(CheckOutcome::fail(
                        name,
                        compared,
                        format!(
                            "{}({n},{k}): series={} dp={want}",
                            table.family().letter(),
                            s.coeff(n)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        compared,
        format!("k <= {}, n <= {order}", cfg.series_k_max),
    ))
}

fn check_dp_vs_closed_form(cfg: &CrosscheckConfig) -> Result<CheckOutcome> {
    let name = "dp-vs-closed-form";
    let n_max = cfg.n_max;
    let (a, b) = ab_tables(n_max + 1);
    let (c, d) = cd_tables(n_max + 1);
    let mut compared = 0;
    for n in 0..=n_max {
        for k in 0..=n {
            compared += 4;
            let (ni, ki) = (n as i64, k as i64);
            let quads = [
                ('a', a_closed(ni, ki), a.get(n, k)),
                ('b', b_closed(ni, ki), b.get(n, k)),
                ('c', c_closed(ni, ki), c.get(n, k)),
                ('d', d_closed(ni, ki), d.get(n, k)),
            ];
            for (fam, closed, dp) in quads {
                if closed != dp {
                    return Ok(CheckOutcome::fail(
                        name,
                        compared,
                        format!("{fam}({n},{k}): closed={closed} dp={dp}"),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, compared, format!("n <= {n_max}, all four families")))
}

fn check_determinant_recursion(cfg: &CrosscheckConfig) -> Result<CheckOutcome> {
    let name = "determinant-recursion";
    let h_max = cfg.det_h_max;
    let ds = d_sequence(h_max);
    let mut compared = 0;
    for h in 1..=h_max {
        compared += 1;
        let direct = det_exact(&BandMatrixSpec::new(BandKind::FirstSystem, h));
        if direct != ds[h] {
            return Ok(CheckOutcome::fail(name, compared, format!("D_{h} mismatch")));
        }
        if h >= 2 {
            compared += 1;
            let star = det_exact(&BandMatrixSpec::new(BandKind::FirstSystemStar, h));
            if star != d_star(h) {
                return Ok(CheckOutcome::fail(name, compared, format!("D*_{h} mismatch")));
            }
        }
    }
    Ok(CheckOutcome::pass(name, compared, format!("h <= {h_max}, plain and starred")))
}

fn check_bordered_tau_identity(cfg: &CrosscheckConfig) -> Result<CheckOutcome> {
    let name = "bordered-tau-identity";
    let n_max = cfg.bordered_n_max;
    let ds = d_sequence(n_max);
    let taus = tau_sequence(n_max.max(30));
    let mut compared = 0;
    for (i, tau) in taus.iter().enumerate() {
        compared += 1;
        if tau != &tau_explicit(i) {
            return Ok(CheckOutcome::fail(name, compared, format!("tau_{i} explicit form")));
        }
    }
    for n in 1..=n_max {
        for i in 1..=n {
            compared += 1;
            let lead = taus[i].shift_up(i - 1).mul(&ds[n - i]);
            let trail = if n >= i + 1 {
                taus[i - 1].shift_up(i + 2).mul(&ds[n - i - 1])
            } else {
                ZPoly::zero()
            };
            if bordered_det(n, i)? != lead.sub(&trail) {
                return Ok(CheckOutcome::fail(name, compared, format!("D_({n},{i})")));
            }
        }
    }
    Ok(CheckOutcome::pass(
        name,
        compared,
        format!("n <= {n_max}, tau explicit form up to 30"),
    ))
}

fn check_cramer_stabilization(cfg: &CrosscheckConfig) -> Result<(CheckOutcome, CheckOutcome)> {
    let order = cfg.stab_order;
    let mut f_check = None;
    let mut f_thresholds = Vec::new();
    for i in 0..=cfg.stab_i_max {
        let h_check = order + i + 5;
        let stab = f_stabilization(i, order, h_check)?;
        if stab.limit != f_series(i, order)? {
            f_check = Some(CheckOutcome::fail(
                "cramer-stabilization-f",
                i + 1,
                format!("f_{i} quotient at h={h_check} differs from the series"),
            ));
            break;
        }
        f_thresholds.push(stab.threshold);
    }
    let f_check = f_check.unwrap_or_else(|| {
        CheckOutcome::pass(
            "cramer-stabilization-f",
            cfg.stab_i_max + 1,
            format!("order {order}, measured h0 = {f_thresholds:?}"),
        )
    });

    let mut psi_check = None;
    let mut psi_thresholds = Vec::new();
    for i in 0..=cfg.stab_i_max {
        let n_check = order + i + 5;
        let stab = psi_stabilization(i, order, n_check)?;
        if stab.limit != psi_series(i, order)? {
            psi_check = Some(CheckOutcome::fail(
                "cramer-stabilization-psi",
                i + 1,
                format!("psi_{i} quotient at n={n_check} differs from the series"),
            ));
            break;
        }
        psi_thresholds.push(stab.threshold);
    }
    let psi_check = psi_check.unwrap_or_else(|| {
        CheckOutcome::pass(
            "cramer-stabilization-psi",
            cfg.stab_i_max + 1,
            format!("order {order}, measured n0 = {psi_thresholds:?}"),
        )
    });
    Ok((f_check, psi_check))
}

fn check_girard_waring(cfg: &CrosscheckConfig) -> CheckOutcome {
    let name = "girard-waring-vs-binet";
    let mut compared = 0;
    for k in 0..=cfg.gw_k_max {
        compared += 1;
        if girard_waring_poly(k) != binet_poly(k + 1) {
            return CheckOutcome::fail(name, compared, format!("k={k}"));
        }
    }
    CheckOutcome::pass(name, compared, format!("k <= {}", cfg.gw_k_max))
}

fn check_consistency_identities(cfg: &CrosscheckConfig) -> Result<CheckOutcome> {
    let name = "consistency-identities";
    let order = cfg.n_max;
    let mut compared = 0;

    let phi0 = phi_series(0, order)?;
    let rhs = psi_series(0, order)?.shift_up(1).add(&QSeries::one(Var::Z, order))?;
    compared += 1;
    if phi0 != rhs {
        return Ok(CheckOutcome::fail(name, compared, "phi_0 != 1 + z psi_0".into()));
    }

    for k in 0..=cfg.series_k_max {
        compared += 1;
        let lhs = g_series(k, order)?.shift_up(1);
        let rhs = f_series(k + 1, order)?.sub(&f_series(k + 2, order)?.shift_up(1))?;
        if lhs != rhs {
            return Ok(CheckOutcome::fail(
                name,
                compared,
                format!("z g_{k} != f_{} - z f_{}", k + 1, k + 2),
            ));
        }
    }

    let (a, _) = ab_tables(cfg.n_max);
    let (c, _) = cd_tables(cfg.n_max);
    for n in 0..=cfg.n_max {
        compared += 1;
        if a.get(n, 0) != c.get(n, 0) {
            return Ok(CheckOutcome::fail(name, compared, format!("a({n},0) != c({n},0)")));
        }
    }
    Ok(CheckOutcome::pass(name, compared, format!("order {order}")))
}

fn check_binet_numerics() -> Result<CheckOutcome> {
    let name = "binet-numeric-residuals";
    let mut compared = 0;
    let mut worst = 0.0f64;
    for &t in &[0.1, 0.2, 0.3] {
        for h in 0..=20 {
            compared += 1;
            let residual = binet_numeric(t, h)?;
            worst = worst.max(residual);
            if residual > 1e-8 {
                return Ok(CheckOutcome::fail(
                    name,
                    compared,
                    format!("t={t} h={h}: residual {residual:.3e}"),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(name, compared, format!("worst residual {worst:.3e}")))
}

/// Run every check group; outcomes come back in a fixed order.
pub fn run_crosscheck(cfg: &CrosscheckConfig) -> Result<Vec<CheckOutcome>> {
    let (f_check, psi_check) = check_cramer_stabilization(cfg)?;
    Ok(vec![
        check_oracle_vs_dp(cfg, Direction::Forward)?,
        check_oracle_vs_dp(cfg, Direction::Reverse)?,
        check_dp_vs_series(cfg)?,
        check_dp_vs_closed_form(cfg)?,
        check_determinant_recursion(cfg)?,
        check_bordered_tau_identity(cfg)?,
        f_check,
        psi_check,
        check_girard_waring(cfg),
        check_consistency_identities(cfg)?,
        check_binet_numerics()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_crosscheck_passes() {
        let cfg = CrosscheckConfig {
            n_max: 18,
            oracle_bound: 8,
            series_k_max: 4,
            det_h_max: 7,
            bordered_n_max: 6,
            stab_order: 9,
            stab_i_max: 2,
            gw_k_max: 15,
            inject_fault: false,
        };
        let outcomes = run_crosscheck(&cfg).unwrap();
        assert!(outcomes.len() >= 6);
        for o in &outcomes {
            assert!(o.pass, "{}: {}", o.name, o.detail);
            assert!(o.compared > 0);
        }
    }

    #[test]
    fn injected_fault_is_detected_and_named() {
        let cfg = CrosscheckConfig {
            n_max: 10,
            oracle_bound: 6,
            series_k_max: 2,
            det_h_max: 4,
            bordered_n_max: 4,
            stab_order: 6,
            stab_i_max: 1,
            gw_k_max: 5,
            inject_fault: true,
        };
        let outcomes = run_crosscheck(&cfg).unwrap();
        let forward = outcomes.iter().find(|o| o.name == "oracle-vs-dp-forward").unwrap();
        assert!(!forward.pass);
        assert!(forward.detail.contains("(2,1)"), "detail: {}", forward.detail);
    }

    #[test]
    fn degenerate_bounds_still_pass() {
        let cfg = CrosscheckConfig {
            n_max: 0,
            oracle_bound: 0,
            series_k_max: 0,
            det_h_max: 1,
            bordered_n_max: 1,
            stab_order: 2,
            stab_i_max: 0,
            gw_k_max: 0,
            inject_fault: false,
        };
        for o in run_crosscheck(&cfg).unwrap() {
            assert!(o.pass, "{}: {}", o.name, o.detail);
        }
    }
}
