//! Closed-form thresholds of the interaction bound, their consequences for
//! the stacked architecture, and the symbolic table for known families.

pub mod symbolic;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use symbolic::{families, family_row, family_table, stacked_verdict, Bound, Exponent, Family, FamilyRow, Growth, StackedVerdict};

pub const DEFAULT_C0: f64 = 1.0 / 100.0;
pub const DEFAULT_C1: f64 = 100.0;

/// `max(d / sqrt n, (k d^2 / n)^(1/4))`.
pub fn ell_star(n: f64, k: f64, d: f64) -> f64 {
    (d / n.sqrt()).max((k * d * d / n).powf(0.25))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub ell_star: f64,
    pub count_star: usize,
    /// `k d^2 / n`.
    pub bpt_ratio: f64,
    /// `k d^2 >= c1 n`; below it the theorem makes no claim.
    pub above_threshold: bool,
    /// `c0 max(k, d)` long interactions are required when above threshold.
    pub required_count: Option<f64>,
    /// ... of length at least `c0 ell_star`.
    pub required_length: Option<f64>,
    pub stacked_d_ok: bool,
    pub stacked_kd_ok: bool,
    pub c0: f64,
    pub c1: f64,
}

pub fn evaluate_bounds(n: usize, k: usize, d: usize, c0: f64, c1: f64) -> Result<BoundReport> {
    if n == 0 || k == 0 || d == 0 || k > n || d > n {
        return Err(Error::contract(format!("need 1 <= k, d <= n (n = {n}, k = {k}, d = {d})")));
    }
    if !(c0 > 0.0 && c1 > 0.0) {
        return Err(Error::contract("c0 and c1 must be positive"));
    }
    let (nf, kf, df) = (n as f64, k as f64, d as f64);
    let ratio = kf * df * df / nf;
    let above = ratio >= c1;
    let ell = ell_star(nf, kf, df);
    let count = k.max(d);
    let s = stacked_feasibility(n, k, d, c0, c1)?;
    Ok(BoundReport {
        n,
        k,
        d,
        ell_star: ell,
        count_star: count,
        bpt_ratio: ratio,
        above_threshold: above,
        required_count: above.then_some(c0 * count as f64),
        required_length: above.then_some(c0 * ell),
        stacked_d_ok: s.d_bound_ok,
        stacked_kd_ok: s.combined_ok,
        c0,
        c1,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StackedFeasibility {
    /// `n / ell^2 >= c0 d` at `ell = c0 d / sqrt n`, i.e. `n^2 >= c0^3 d^3`.
    pub d_bound_ok: bool,
    /// `n / ell^2 >= c0 max(k, d)` at `ell = c0 (k d^2 / n)^(1/4)`,
    /// i.e. `n^3 >= c0^6 k d^2 max(k, d)^2`.
    pub combined_ok: bool,
    pub above_threshold: bool,
}

/// Numeric check of the stacked-architecture constraints, taking the
/// architecture's supply of interactions of length at least `ell` as
/// `n / ell^2`. Below the threshold the theorem is silent and both pass.
pub fn stacked_feasibility(n: usize, k: usize, d: usize, c0: f64, c1: f64) -> Result<StackedFeasibility> {
    if n == 0 || k == 0 || d == 0 {
        return Err(Error::contract("need n, k, d >= 1"));
    }
    let (nf, kf, df) = (n as f64, k as f64, d as f64);
    let above = kf * df * df >= c1 * nf;
    let m = kf.max(df);
    let d_ok = !above || nf * nf >= c0.powi(3) * df.powi(3);
    let kd_ok = !above || nf.powi(3) >= c0.powi(6) * kf * df * df * m * m;
    Ok(StackedFeasibility {
        d_bound_ok: d_ok,
        combined_ok: kd_ok,
        above_threshold: above,
    })
}
