use serde::{Deserialize, Serialize};

use super::embedding::Embedding;
use super::{Point, EPS};
use crate::error::{Error, Result};
use crate::pauli_algebra::QubitSet;

/// Closed axis-parallel rectangle `[x_lo, x_hi] x [y_lo, y_hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub x_lo: f64,
    pub x_hi: f64,
    pub y_lo: f64,
    pub y_hi: f64,
}

impl Rectangle {
    pub fn new(x_lo: f64, x_hi: f64, y_lo: f64, y_hi: f64) -> Result<Self> {
        if !(x_lo <= x_hi && y_lo <= y_hi) {
            return Err(Error::contract(format!(
                "degenerate rectangle [{x_lo}, {x_hi}] x [{y_lo}, {y_hi}]"
            )));
        }
        Ok(Self { x_lo, x_hi, y_lo, y_hi })
    }

    /// Square of side `side` centered at `c`.
    pub fn square(c: Point, side: f64) -> Self {
        let h = side / 2.0;
        Self {
            x_lo: c[0] - h,
            x_hi: c[0] + h,
            y_lo: c[1] - h,
            y_hi: c[1] + h,
        }
    }

    /// Smallest rectangle containing all `points`, `None` if empty.
    pub fn bounding(points: impl IntoIterator<Item = Point>) -> Option<Self> {
        points.into_iter().fold(None, |acc, p| {
            Some(match acc {
                None => Self {
                    x_lo: p[0],
                    x_hi: p[0],
                    y_lo: p[1],
                    y_hi: p[1],
                },
                Some(r) => Self {
                    x_lo: r.x_lo.min(p[0]),
                    x_hi: r.x_hi.max(p[0]),
                    y_lo: r.y_lo.min(p[1]),
                    y_hi: r.y_hi.max(p[1]),
                },
            })
        })
    }

    pub fn width(&self) -> f64 {
        self.x_hi - self.x_lo
    }

    pub fn height(&self) -> f64 {
        self.y_hi - self.y_lo
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> Point {
        [(self.x_lo + self.x_hi) / 2.0, (self.y_lo + self.y_hi) / 2.0]
    }

    /// Boundary included, within tolerance.
    pub fn contains(&self, p: Point) -> bool {
        p[0] >= self.x_lo - EPS && p[0] <= self.x_hi + EPS && p[1] >= self.y_lo - EPS && p[1] <= self.y_hi + EPS
    }

    /// Qubits of `emb` inside the rectangle.
    pub fn qubits(&self, emb: &Embedding) -> QubitSet {
        (0..emb.n()).filter(|&q| self.contains(emb.point(q))).collect()
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            [self.x_lo, self.y_lo],
            [self.x_hi, self.y_lo],
            [self.x_hi, self.y_hi],
            [self.x_lo, self.y_hi],
        ]
    }

    /// Edges as segments, counter-clockwise from the bottom.
    pub fn edges(&self) -> [(Point, Point); 4] {
        let c = self.corners();
        [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectCount {
    pub count: usize,
    pub density_check: bool,
}

/// Exact count plus the point-density check: at most six points per unit
/// area when both sides are at least 1, and at most four per unit of the
/// long side otherwise. A rectangle with both sides below 1 is held to
/// four points, since a `s x t` box with `s, t < 1` can still hold two.
pub fn count_in_rectangle(emb: &Embedding, r: &Rectangle) -> RectCount {
    let count = emb.points().iter().filter(|&&p| r.contains(p)).count();
    RectCount {
        count,
        density_check: density_bound_holds(count, r),
    }
}

pub fn density_bound_holds(count: usize, r: &Rectangle) -> bool {
    let (short, long) = if r.width() <= r.height() {
        (r.width(), r.height())
    } else {
        (r.height(), r.width())
    };
    if short >= 1.0 {
        count as f64 <= 6.0 * r.area()
    } else {
        count as f64 <= 4.0 * long.max(1.0)
    }
}
