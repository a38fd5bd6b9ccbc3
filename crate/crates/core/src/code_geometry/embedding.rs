use serde::{Deserialize, Serialize};

use super::{Point, EPS};
use crate::error::{Error, Result};

/// Planar positions of the qubits, pairwise at least one unit apart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEmbedding")]
pub struct Embedding {
    points: Vec<Point>,
}

#[derive(Deserialize)]
struct RawEmbedding {
    points: Vec<Point>,
}

impl TryFrom<RawEmbedding> for Embedding {
    type Error = Error;

    fn try_from(raw: RawEmbedding) -> Result<Self> {
        Embedding::new(raw.points)
    }
}

impl Embedding {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().position(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(Error::contract(format!("point {p} has a non-finite coordinate")));
        }
        if let Some((a, b, distance)) = closest_violation(&points) {
            return Err(Error::InvalidEmbedding { a, b, distance });
        }
        Ok(Self { points })
    }

    /// Points on the integer lattice, row-major: qubit `r * cols + c` at `(c, r)`.
    pub fn lattice(cols: usize, rows: usize) -> Self {
        let points = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| [c as f64, r as f64]))
            .collect();
        Self { points }
    }

    /// The first `n` points of a lattice with `cols` columns.
    pub fn grid(n: usize, cols: usize) -> Self {
        let cols = cols.max(1);
        let points = (0..n).map(|q| [(q % cols) as f64, (q / cols) as f64]).collect();
        Self { points }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, q: usize) -> Point {
        self.points[q]
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        dist(self.points[a], self.points[b])
    }

    /// Smallest pairwise distance, `None` for fewer than two points.
    pub fn min_distance(&self) -> Option<f64> {
        min_pair(&self.points).map(|(_, _, d)| d)
    }
}

pub fn dist(a: Point, b: Point) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn closest_violation(points: &[Point]) -> Option<(usize, usize, f64)> {
    min_pair(points).filter(|&(_, _, d)| d < 1.0 - EPS)
}

// Sweep in x order, stopping once the x gap alone exceeds the best so far.
// Ties are broken towards the lexicographically smallest index pair.
fn min_pair(points: &[Point]) -> Option<(usize, usize, f64)> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a][0].total_cmp(&points[b][0]).then(a.cmp(&b)));
    let mut best: Option<(usize, usize, f64)> = None;
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            let dx = points[b][0] - points[a][0];
            if best.is_some_and(|(_, _, d)| dx > d) {
                break;
            }
            let d = dist(points[a], points[b]);
            let pair = (a.min(b), a.max(b));
            let better = match best {
                None => true,
                Some((ba, bb, bd)) => d < bd || (d == bd && pair < (ba, bb)),
            };
            if better {
                best = Some((pair.0, pair.1, d));
            }
        }
    }
    best
}
