use serde::{Deserialize, Serialize};

use super::concat::{concatenate, direct_sum};
use super::surface::build_surface_code;
use super::EmbeddedCode;
use crate::code_geometry::{default_edges, extract_interactions, histogram, is_long, Embedding, Histogram, Point};
use crate::error::{Error, Result};
use crate::pauli_algebra::{code_distance, StabilizerCode};

/// Parameter choices for a target `[[n, k, d]]`, rounded to what the inner
/// code and integer lattice sides allow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalityPlan {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `min(k1, d1) / n1` of the inner code.
    pub epsilon: f64,
    pub c0: f64,
    pub ell: f64,
    /// `d^2 / ell^2` before rounding.
    pub n_prime_target: f64,
    /// `ell^2 / 100` before rounding; the supplied inner code is used as is.
    pub n1_target: f64,
    pub n1: usize,
    pub side: usize,
    pub copies: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalityReport {
    pub ell: f64,
    pub side: usize,
    pub copies: usize,
    pub spacing: f64,
    pub block_extent: f64,
    pub n: usize,
    pub k: usize,
    pub inner_n: usize,
    pub inner_k: usize,
    pub inner_d: Option<usize>,
    /// `d1 * side` when the inner distance is known.
    pub d_lower_bound: Option<usize>,
    pub max_interaction_length: f64,
    pub long_interactions: usize,
    /// `(ell / 20 + 4 ell / 10 + ell / 20) sqrt 2`.
    pub plaquette_bound: f64,
    pub histogram: Histogram,
    pub plan: Option<LocalityPlan>,
}

#[derive(Clone, Debug)]
pub struct LocalityBuild {
    pub embedded: EmbeddedCode,
    pub report: LocalityReport,
}

fn inner_distance(inner: &StabilizerCode) -> Option<usize> {
    code_distance(inner, None).ok().and_then(|r| r.exact())
}

/// Chooses `ell`, the outer surface-code side and the number of copies for
/// target parameters. `c0` defaults to `100 / epsilon`.
///
/// The outer lattice is at least `2 x 2` and at least one copy is made, so
/// small targets round up rather than down.
pub fn plan_locality(
    n: usize,
    k: usize,
    d: usize,
    inner: &StabilizerCode,
    c0: Option<f64>,
    c1: f64,
) -> Result<LocalityPlan> {
    if k == 0 || d == 0 || k > n || d > n {
        return Err(Error::contract(format!("need 1 <= k, d <= n (n = {n}, k = {k}, d = {d})")));
    }
    let (nf, kf, df) = (n as f64, k as f64, d as f64);
    if kf * df * df < c1 * nf {
        return Err(Error::contract(format!(
            "k d^2 = {} below c1 n = {}",
            kf * df * df,
            c1 * nf
        )));
    }
    let n1 = inner.n();
    let k1 = inner.k();
    if k1 == 0 {
        return Err(Error::contract("inner code encodes no logical qubits"));
    }
    let d1 = inner_distance(inner).unwrap_or(1);
    let epsilon = k1.min(d1) as f64 / n1 as f64;
    let c0 = c0.unwrap_or(100.0 / epsilon);
    let ell = c0 * (df / nf.sqrt()).max((kf * df * df / nf).powf(0.25));
    let n_prime_target = df * df / (ell * ell);
    let side = ((n_prime_target / n1 as f64).sqrt().ceil() as usize).max(2);
    let n_prime = n1 * side * side;
    let copies = (n / n_prime).max(1);
    Ok(LocalityPlan {
        n,
        k,
        d,
        epsilon,
        c0,
        ell,
        n_prime_target,
        n1_target: ell * ell / 100.0,
        n1,
        side,
        copies,
    })
}

/// Plans and builds the construction for target `[[n, k, d]]`.
pub fn build_locality_construction(
    n: usize,
    k: usize,
    d: usize,
    inner: &StabilizerCode,
    c0: Option<f64>,
    c1: f64,
) -> Result<LocalityBuild> {
    let plan = plan_locality(n, k, d, inner, c0, c1)?;
    let mut build = build_embedded_concatenation(inner, plan.side, plan.ell, plan.copies)?;
    build.report.plan = Some(plan);
    Ok(build)
}

/// `inner` concatenated into a `side x side` surface code, `copies` times,
/// laid out so no interaction reaches length `ell`.
///
/// Inner blocks sit on the outer lattice vertices with spacing `0.4 ell`
/// (at least one unit more than a block's extent); each block's qubits
/// fill a centered row-major unit grid, which must fit in an `ell / 10`
/// square. Copies are placed side by side along x.
pub fn build_embedded_concatenation(
    inner: &StabilizerCode,
    side: usize,
    ell: f64,
    copies: usize,
) -> Result<LocalityBuild> {
    if !(ell > 0.0) {
        return Err(Error::contract(format!("ell must be positive (ell = {ell})")));
    }
    let n1 = inner.n();
    let g = (n1 as f64).sqrt().ceil() as usize;
    let extent = (g - 1) as f64;
    if extent > ell / 10.0 {
        return Err(Error::Sizing {
            message: format!(
                "inner block of {n1} qubits needs a {g} x {g} unit grid of extent {extent}, larger than ell / 10 = {}",
                ell / 10.0
            ),
            min_ell: 10.0 * extent,
        });
    }
    let outer = build_surface_code(side)?;
    let one = concatenate(inner, &outer.code)?;
    let code = direct_sum(&one, copies)?;

    let spacing = (0.4 * ell).max(extent + 1.0);
    let stride = side as f64 * spacing + extent;
    let mut points: Vec<Point> = Vec::with_capacity(code.n());
    for c in 0..copies {
        for b in 0..side * side {
            let (col, row) = ((b % side) as f64, (b / side) as f64);
            for t in 0..n1 {
                let (u, v) = ((t % g) as f64, (t / g) as f64);
                points.push([
                    c as f64 * stride + col * spacing + u - extent / 2.0,
                    row * spacing + v - extent / 2.0,
                ]);
            }
        }
    }
    let embedding = Embedding::new(points)?;

    let its = extract_interactions(&code, &embedding)?;
    let max_len = its.iter().map(|i| i.length).fold(0.0, f64::max);
    let long = its.iter().filter(|i| is_long(i.length, ell)).count();
    if long > 0 {
        return Err(Error::contract(format!(
            "layout has {long} interactions of length >= ell = {ell} (longest {max_len})"
        )));
    }
    let inner_d = inner_distance(inner);
    let report = LocalityReport {
        ell,
        side,
        copies,
        spacing,
        block_extent: extent,
        n: code.n(),
        k: code.k(),
        inner_n: n1,
        inner_k: inner.k(),
        inner_d,
        d_lower_bound: inner_d.map(|d1| d1 * side),
        max_interaction_length: max_len,
        long_interactions: long,
        plaquette_bound: (ell / 20.0 + 0.4 * ell + ell / 20.0) * 2f64.sqrt(),
        histogram: histogram(&its, &default_edges(max_len)),
        plan: None,
    };
    Ok(LocalityBuild {
        embedded: EmbeddedCode::new(code, embedding)?,
        report,
    })
}
