use serde::{Deserialize, Serialize};

use super::{Point, EPS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Lines `x = line_1` and `x = line_2`.
    Vertical,
    /// Lines `y = line_1` and `y = line_2`.
    Horizontal,
}

impl Orientation {
    pub fn axis(self) -> usize {
        match self {
            Orientation::Vertical => 0,
            Orientation::Horizontal => 1,
        }
    }
}

/// Which of the three regions a point falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Middle,
    Second,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Separator {
    pub orientation: Orientation,
    pub line_1: f64,
    pub line_2: f64,
    pub side_1: usize,
    pub middle: usize,
    pub side_2: usize,
    /// The whole point set lies between the lines.
    pub trivial: bool,
}

impl Separator {
    pub fn side(&self, p: Point) -> Side {
        let c = p[self.orientation.axis()];
        if c < self.line_1 {
            Side::First
        } else if c > self.line_2 {
            Side::Second
        } else {
            Side::Middle
        }
    }
}

/// Two parallel lines at distance at least `ell`, with the strip between
/// them holding at most `8 ell sqrt n` points, each outer region at most
/// `9n/10`, and no point on either line.
///
/// Follows the quantile construction: on the axis whose decile gap is at
/// least `sqrt(n/10)`, the span between the deciles is cut into
/// `floor(sqrt(n/10) / ell)` equal strips and the emptiest strip is taken.
pub fn find_separator(points: &[Point], ell: f64) -> Result<Separator> {
    let n = points.len();
    if n < 10 {
        return Err(Error::TooFewPoints(n));
    }
    if !(ell > 0.0) {
        return Err(Error::contract("separator width must be positive"));
    }
    let nf = n as f64;
    if ell > nf.sqrt() / 8.0 {
        return Ok(trivial_separator(points, ell));
    }

    // At least ceil(n/10) points on each side of the deciles.
    let tenth = n.div_ceil(10);
    let decile_gap = |axis: usize| {
        let mut c: Vec<f64> = points.iter().map(|p| p[axis]).collect();
        c.sort_by(f64::total_cmp);
        (c[tenth - 1], c[n - tenth])
    };
    let need = (nf / 10.0).sqrt();
    let (ax1, ax2) = decile_gap(0);
    let (ay1, ay2) = decile_gap(1);
    let (orientation, lo, hi) = if ax2 - ax1 >= ay2 - ay1 {
        (Orientation::Vertical, ax1, ax2)
    } else {
        (Orientation::Horizontal, ay1, ay2)
    };
    if hi - lo < need - EPS {
        return Err(Error::contract(format!(
            "decile gap {} below sqrt(n/10) = {need}; points are not 1-separated",
            hi - lo
        )));
    }
    let axis = orientation.axis();
    // Floor: the strip count must not exceed what keeps each strip >= ell wide.
    let strips = ((need / ell).floor() as usize).max(1);
    let width = (hi - lo) / strips as f64;
    let mut coords: Vec<f64> = points.iter().map(|p| p[axis]).collect();
    coords.sort_by(f64::total_cmp);
    let closed_count = |a: f64, b: f64| {
        coords.partition_point(|&c| c <= b) - coords.partition_point(|&c| c < a)
    };
    let mut best = (usize::MAX, 0.0, 0.0);
    for i in 0..strips {
        let a = lo + width * i as f64;
        let b = if i + 1 == strips { hi } else { lo + width * (i + 1) as f64 };
        let c = closed_count(a, b);
        if c < best.0 {
            best = (c, a, b);
        }
    }
    let (_, a, b) = best;
    let eps = perturbation(&coords, &[a, b]);
    Ok(build(points, orientation, a - eps, b + eps, false))
}

/// Half the smallest positive gap among `coords` and `extra`, at most 1e-6.
pub fn perturbation(coords: &[f64], extra: &[f64]) -> f64 {
    let mut all: Vec<f64> = coords.iter().chain(extra).copied().collect();
    all.sort_by(f64::total_cmp);
    all.dedup();
    let gap = all
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    (gap / 2.0).min(1e-6)
}

fn trivial_separator(points: &[Point], ell: f64) -> Separator {
    let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min) - 1.0;
    let hi = points.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    build(points, Orientation::Vertical, lo, hi.max(lo + ell + 1.0), true)
}

fn build(points: &[Point], orientation: Orientation, line_1: f64, line_2: f64, trivial: bool) -> Separator {
    let mut s = Separator {
        orientation,
        line_1,
        line_2,
        side_1: 0,
        middle: 0,
        side_2: 0,
        trivial,
    };
    for &p in points {
        match s.side(p) {
            Side::First => s.side_1 += 1,
            Side::Middle => s.middle += 1,
            Side::Second => s.side_2 += 1,
        }
    }
    s
}
