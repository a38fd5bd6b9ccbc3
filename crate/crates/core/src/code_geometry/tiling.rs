use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rectangle::Rectangle;
use super::Point;
use crate::error::{Error, Result};

/// Cells `[ox + i w, ox + (i+1) w] x [oy + j w, oy + (j+1) w]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridTiling {
    pub w: f64,
    pub ox: f64,
    pub oy: f64,
}

impl GridTiling {
    /// Cell index containing `p`; points on a grid line go to the upper cell.
    pub fn cell_of(&self, p: Point) -> (i64, i64) {
        (
            ((p[0] - self.ox) / self.w).floor() as i64,
            ((p[1] - self.oy) / self.w).floor() as i64,
        )
    }

    pub fn cell(&self, i: i64, j: i64) -> Rectangle {
        Rectangle {
            x_lo: self.ox + i as f64 * self.w,
            x_hi: self.ox + (i + 1) as f64 * self.w,
            y_lo: self.oy + j as f64 * self.w,
            y_hi: self.oy + (j + 1) as f64 * self.w,
        }
    }

    /// Distances from `p` to the nearest vertical and horizontal grid line.
    pub fn line_distances(&self, p: Point) -> (f64, f64) {
        (circular(p[0] - self.ox, self.w), circular(p[1] - self.oy, self.w))
    }
}

fn circular(t: f64, w: f64) -> f64 {
    let r = t.rem_euclid(w);
    r.min(w - r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TilingResult {
    pub tiling: GridTiling,
    pub x_bad: usize,
    pub y_bad: usize,
    pub x_fraction: f64,
    pub y_fraction: f64,
    pub x_bound: f64,
    pub y_bound: f64,
}

/// Grid offset keeping few points of `xs` near a cell vertex (l-infinity
/// distance at most `2 ell`) and few of `ys` near a cell edge.
///
/// Both counts are piecewise constant in the offset, changing only when a
/// coordinate crosses `offset +- 2 ell (mod w)`. Every open cell of that
/// arrangement contains a midpoint between consecutive breakpoints, so the
/// midpoints (plus a 32 x 32 uniform grid) are swept in lexicographic order
/// and the first offset meeting both bounds is returned.
pub fn find_tiling(xs: &[Point], ys: &[Point], w: f64, ell: f64) -> Result<TilingResult> {
    if !(ell > 0.0 && w >= 4.0 * ell) {
        return Err(Error::contract(format!("tiling needs w >= 4 ell > 0 (w = {w}, ell = {ell})")));
    }
    let r = 2.0 * ell;
    let x_bound = 32.0 * ell * ell / (w * w);
    let y_bound = 16.0 * ell / w;

    let cand_x = candidates(xs.iter().chain(ys).map(|p| p[0]), w, r);
    let cand_y = candidates(xs.iter().chain(ys).map(|p| p[1]), w, r);

    let x_limit = x_bound * xs.len() as f64;
    let y_limit = y_bound * ys.len() as f64;

    // For a fixed ox, the points whose x is near a vertical line contribute
    // over an interval of oy; accumulate with difference arrays.
    let found = cand_x.par_iter().find_map_first(|&ox| {
        let m = cand_y.len();
        let mut x_diff = vec![0i64; m + 1];
        let mut y_diff = vec![0i64; m + 1];
        let mut y_always = 0i64;
        for p in xs {
            if circular(p[0] - ox, w) <= r {
                add_arc(&mut x_diff, &cand_y, p[1], r, w);
            }
        }
        for p in ys {
            if circular(p[0] - ox, w) <= r {
                y_always += 1;
            } else {
                add_arc(&mut y_diff, &cand_y, p[1], r, w);
            }
        }
        let (mut xc, mut yc) = (0i64, 0i64);
        for j in 0..m {
            xc += x_diff[j];
            yc += y_diff[j];
            if xc as f64 <= x_limit && (yc + y_always) as f64 <= y_limit {
                // Re-check directly so rounding at band edges cannot slip through.
                let t = GridTiling { w, ox, oy: cand_y[j] };
                let (xb, yb) = bad_counts(&t, xs, ys, ell);
                if xb as f64 <= x_limit && yb as f64 <= y_limit {
                    return Some((ox, cand_y[j]));
                }
            }
        }
        None
    });

    let (ox, oy) = found.ok_or_else(|| Error::contract("no tiling offset met both bounds"))?;
    let tiling = GridTiling { w, ox, oy };
    let (x_bad, y_bad) = bad_counts(&tiling, xs, ys, ell);
    let frac = |c: usize, total: usize| if total == 0 { 0.0 } else { c as f64 / total as f64 };
    Ok(TilingResult {
        tiling,
        x_bad,
        y_bad,
        x_fraction: frac(x_bad, xs.len()),
        y_fraction: frac(y_bad, ys.len()),
        x_bound,
        y_bound,
    })
}

/// Points of `xs` within l-infinity `2 ell` of a vertex, and of `ys`
/// within `2 ell` of an edge.
pub fn bad_counts(t: &GridTiling, xs: &[Point], ys: &[Point], ell: f64) -> (usize, usize) {
    let r = 2.0 * ell;
    let xb = xs
        .iter()
        .filter(|&&p| {
            let (dx, dy) = t.line_distances(p);
            dx <= r && dy <= r
        })
        .count();
    let yb = ys
        .iter()
        .filter(|&&p| {
            let (dx, dy) = t.line_distances(p);
            dx.min(dy) <= r
        })
        .count();
    (xb, yb)
}

fn candidates(coords: impl Iterator<Item = f64>, w: f64, r: f64) -> Vec<f64> {
    let mut breaks: Vec<f64> = coords
        .flat_map(|c| [(c - r).rem_euclid(w), (c + r).rem_euclid(w)])
        .collect();
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let mut out: Vec<f64> = (0..32).map(|i| w * i as f64 / 32.0).collect();
    for (i, &b) in breaks.iter().enumerate() {
        let next = if i + 1 < breaks.len() { breaks[i + 1] } else { breaks[0] + w };
        out.push(((b + next) / 2.0).rem_euclid(w));
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

// Adds 1 over the sorted candidates `t` with circular distance to `c` at most `r`.
fn add_arc(diff: &mut [i64], t: &[f64], c: f64, r: f64, w: f64) {
    let m = t.len();
    if 2.0 * r >= w {
        diff[0] += 1;
        diff[m] -= 1;
        return;
    }
    let mut range = |a: f64, b: f64| {
        let i = t.partition_point(|&v| v < a);
        let j = t.partition_point(|&v| v <= b);
        if i < j {
            diff[i] += 1;
            diff[j] -= 1;
        }
    };
    let c = c.rem_euclid(w);
    let (a, b) = (c - r, c + r);
    if a < 0.0 {
        range(a + w, w);
        range(0.0, b);
    } else if b >= w {
        range(a, w);
        range(0.0, b - w);
    } else {
        range(a, b);
    }
}
