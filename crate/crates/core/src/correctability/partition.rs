use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::certificate::{verify_certificate, CertBuilder, Certificate, NodeId};
use super::grow::{grow_into, Context, Failure};
use crate::code_geometry::{find_tiling, subdivide_rectangle, GridTiling, Point, Rectangle, TilingResult};
use crate::error::{Error, Result};
use crate::pauli_algebra::QubitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `k >= d`: bad qubits go to `C`.
    KGeD,
    /// `d > k`: bad qubits go to `B` unless they touch the widened edge zone.
    DGeK,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub case: Case,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub ell: f64,
    pub w: f64,
    pub tiling: TilingResult,
    pub good_squares: usize,
    pub bad_squares: usize,
    pub bad_rectangles: usize,
    /// Qubits near a region vertex.
    pub vertex_zone: usize,
    pub bad_qubits: usize,
    pub cert_a_failure: Option<String>,
    pub cert_b_failure: Option<String>,
    pub anomalies: Vec<String>,
    /// `|C| >= k`, evaluated when both certificates verified.
    pub c_at_least_k: Option<bool>,
}

/// Qubits split as `A`, `B`, `C` with optional certificates for `A` and `B`.
/// Certificates are kept only if they verify.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub a: QubitSet,
    pub b: QubitSet,
    pub c: QubitSet,
    pub cert_a: Option<Certificate>,
    pub cert_b: Option<Certificate>,
    pub report: PartitionReport,
}

// Good squares and bad rectangles of the tiling, indexed by cell.
struct Regions {
    tiling: GridTiling,
    pieces: BTreeMap<(i64, i64), Vec<Rectangle>>,
}

impl Regions {
    fn is_bad(&self, cell: (i64, i64)) -> bool {
        self.pieces.contains_key(&cell)
    }

    fn rects(&self, cell: (i64, i64)) -> Vec<Rectangle> {
        match self.pieces.get(&cell) {
            Some(p) => p.clone(),
            None => vec![self.tiling.cell(cell.0, cell.1)],
        }
    }

    // Cell and piece holding `p`; pieces are half-open in y.
    fn locate(&self, p: Point) -> ((i64, i64), usize) {
        let cell = self.tiling.cell_of(p);
        let idx = match self.pieces.get(&cell) {
            Some(pieces) => pieces
                .iter()
                .position(|r| p[1] < r.y_hi)
                .unwrap_or(pieces.len() - 1),
            None => 0,
        };
        (cell, idx)
    }

    fn neighborhood(&self, cell: (i64, i64)) -> impl Iterator<Item = ((i64, i64), Rectangle)> + '_ {
        (-1..=1).flat_map(move |di| {
            (-1..=1).flat_map(move |dj| {
                let c = (cell.0 + di, cell.1 + dj);
                self.rects(c).into_iter().map(move |r| (c, r))
            })
        })
    }
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let (vx, vy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = vx * vx + vy * vy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p[0] - a[0]) * vx + (p[1] - a[1]) * vy) / len2).clamp(0.0, 1.0)
    };
    let (qx, qy) = (a[0] + t * vx, a[1] + t * vy);
    ((p[0] - qx).powi(2) + (p[1] - qy).powi(2)).sqrt()
}

#[derive(Clone, Copy, Default)]
struct Zones {
    vertex: bool,
    edge: bool,
    wide_edge: bool,
}

/// Partition of all qubits into `A`, `B`, `C` following the tiling
/// argument: a `w x w` grid chosen to keep few qubits near vertices and few
/// long interactions near edges, bad squares cut into rectangles, and the
/// plane divided into a vertex zone (`C`), an edge zone (`B`) and the
/// interiors (`A`). `w` defaults to `tiling_width_factor * d / ell`.
pub fn build_partition(ctx: &Context, w: Option<f64>) -> Result<Partition> {
    let ell = ctx.ell;
    if ell < 1.0 {
        return Err(Error::contract(format!("partition needs ell >= 1 (ell = {ell})")));
    }
    let (n, k, d) = (ctx.code.n(), ctx.code.k(), ctx.d);
    let w = w.unwrap_or(ctx.consts.tiling_width_factor * d as f64 / ell);
    let counts = &ctx.graph.counter.counts;
    let pts = ctx.emb.points();

    let ys: Vec<Point> = (0..n)
        .flat_map(|q| std::iter::repeat_n(pts[q], counts[q]))
        .collect();
    let tiling_result = find_tiling(pts, &ys, w, ell)?;
    let tiling = tiling_result.tiling;

    let mut anomalies = Vec::new();
    let mut cell_f: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut occupied = BTreeSet::new();
    for q in 0..n {
        let c = tiling.cell_of(pts[q]);
        occupied.insert(c);
        *cell_f.entry(c).or_default() += counts[q];
    }
    let d1 = ctx.consts.good_square_fraction * d as f64;
    let mut pieces = BTreeMap::new();
    let mut bad_rectangles = 0;
    for (&cell, &f) in &cell_f {
        if (f as f64) < d1 {
            continue;
        }
        let rect = tiling.cell(cell.0, cell.1);
        let list = if w < 5.0 * ell {
            anomalies.push(format!(
                "bad square {cell:?} kept whole: w = {w} below 5 ell, no subdivision"
            ));
            vec![rect]
        } else {
            let weights: Vec<(Point, u64)> = (0..n)
                .filter(|&q| counts[q] > 0 && tiling.cell_of(pts[q]) == cell)
                .map(|q| (pts[q], counts[q] as u64))
                .collect();
            let sub = subdivide_rectangle(&rect, &weights, d1, ell)?;
            if !sub.count_bound_met {
                anomalies.push(format!(
                    "bad square {cell:?}: {} pieces exceed 2 f / d1",
                    sub.pieces.len()
                ));
            }
            sub.pieces
        };
        bad_rectangles += list.len();
        pieces.insert(cell, list);
    }
    let bad_squares = pieces.len();
    let good_squares = occupied.len() - bad_squares;
    let regions = Regions { tiling, pieces };

    let mut case = if k >= d { Case::KGeD } else { Case::DGeK };
    if case == Case::DGeK && bad_squares > 0 {
        anomalies.push(format!(
            "d > k but {bad_squares} bad squares exist; handled as k >= d"
        ));
        case = Case::KGeD;
    }

    let zones: Vec<Zones> = (0..n)
        .map(|q| {
            let p = pts[q];
            let cell = tiling.cell_of(p);
            let mut z = Zones::default();
            for (c, r) in regions.neighborhood(cell) {
                if r.corners().iter().any(|v| (p[0] - v[0]).abs().max((p[1] - v[1]).abs()) <= 2.0 * ell) {
                    z.vertex = true;
                }
                for (a, b) in r.edges() {
                    let e = segment_distance(p, a, b);
                    if e <= ell {
                        z.edge = true;
                    }
                    if e <= 2.0 * ell && !regions.is_bad(c) {
                        z.wide_edge = true;
                    }
                }
            }
            z.edge &= !z.vertex;
            z.wide_edge &= !z.vertex;
            z
        })
        .collect();

    let bad = |q: usize| counts[q] > 0;
    let mut in_c: Vec<bool> = zones.iter().map(|z| z.vertex).collect();
    match case {
        Case::KGeD => {
            for q in 0..n {
                in_c[q] |= bad(q);
            }
        }
        Case::DGeK => {
            for q in 0..n {
                if zones[q].wide_edge && bad(q) {
                    in_c[q] = true;
                    for &p in &ctx.graph.bad_neighbors[q] {
                        in_c[p] = true;
                    }
                }
            }
        }
    }
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for q in 0..n {
        if in_c[q] {
            c.push(q);
        } else if bad(q) || zones[q].edge {
            b.push(q);
        } else {
            a.push(q);
        }
    }
    let (a, b, c): (QubitSet, QubitSet, QubitSet) = (a.into(), b.into(), c.into());

    let (cert_a, cert_a_failure) = settle(ctx, cert_a(ctx, &regions, &a));
    let (cert_b, cert_b_failure) = settle(ctx, cert_b(ctx, &b));
    let c_at_least_k = (cert_a.is_some() && cert_b.is_some()).then(|| c.len() >= k);

    let report = PartitionReport {
        case,
        n,
        k,
        d,
        ell,
        w,
        tiling: tiling_result,
        good_squares,
        bad_squares,
        bad_rectangles,
        vertex_zone: zones.iter().filter(|z| z.vertex).count(),
        bad_qubits: (0..n).filter(|&q| bad(q)).count(),
        cert_a_failure,
        cert_b_failure,
        anomalies,
        c_at_least_k,
    };
    Ok(Partition {
        a,
        b,
        c,
        cert_a,
        cert_b,
        report,
    })
}

fn settle(ctx: &Context, built: std::result::Result<Certificate, Failure>) -> (Option<Certificate>, Option<String>) {
    match built {
        Ok(cert) => {
            let v = verify_certificate(ctx.code, &cert);
            if v.valid {
                (Some(cert), None)
            } else {
                let reason = format!(
                    "certificate rejected at node {}: {}",
                    v.failing_node.unwrap_or(0),
                    v.reason.unwrap_or_default()
                );
                (None, Some(reason))
            }
        }
        Err(f) => (None, Some(f.reason)),
    }
}

// Each region's qubits are certified (growing, or a single leaf when small),
// cut down to its share of `A`, and the shares are joined.
fn cert_a(ctx: &Context, regions: &Regions, a: &QubitSet) -> std::result::Result<Certificate, Failure> {
    let mut groups: BTreeMap<((i64, i64), usize), Vec<usize>> = BTreeMap::new();
    for q in a.iter() {
        groups.entry(regions.locate(ctx.emb.point(q))).or_default().push(q);
    }
    let mut b = CertBuilder::new(ctx.d);
    let mut parts = Vec::new();
    for ((cell, idx), members) in groups {
        let rect = regions.rects(cell)[idx];
        let v = rect.qubits(ctx.emb);
        let node = if v.len() < ctx.d {
            b.leaf(v)
        } else {
            grow_into(ctx, &mut b, &rect)
                .map_err(|f| Failure::new(format!("region {cell:?}/{idx}: {}", f.reason)))?
        };
        parts.push(b.subset(members.into(), node));
    }
    let root = b.union(parts);
    Ok(b.finish(root))
}

// Connected components of the interaction graph on `B`, each a leaf.
fn cert_b(ctx: &Context, set: &QubitSet) -> std::result::Result<Certificate, Failure> {
    let n = ctx.code.n();
    let mut member = vec![false; n];
    for q in set.iter() {
        member[q] = true;
    }
    let mut seen = vec![false; n];
    let mut b = CertBuilder::new(ctx.d);
    let mut parts: Vec<NodeId> = Vec::new();
    for start in set.iter() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(q) = stack.pop() {
            for &p in &ctx.graph.neighbors[q] {
                if member[p] && !seen[p] {
                    seen[p] = true;
                    comp.push(p);
                    stack.push(p);
                }
            }
        }
        if comp.len() >= ctx.d {
            return Err(Failure::new(format!(
                "B component of {} qubits around qubit {start} is not below d = {}",
                comp.len(),
                ctx.d
            )));
        }
        parts.push(b.leaf(comp.into()));
    }
    let root = b.union(parts);
    Ok(b.finish(root))
}
