use serde::{Deserialize, Serialize};

use super::rectangle::Rectangle;
use super::{Point, EPS};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Subdivision {
    /// Bottom to top.
    pub pieces: Vec<Rectangle>,
    pub total_weight: u64,
    /// Whether `pieces.len() <= 2 f(R) / d1`.
    pub count_bound_met: bool,
}

/// Horizontal cuts of `r` into pieces of height at least `5 ell`, each
/// carrying weight at most `d1` or no taller than `10 ell`, using as few
/// pieces as possible.
///
/// Cut heights reachable with `j` pieces form a union of intervals: from
/// a cut anywhere in `[s, t]` the next cut can go anywhere in
/// `[s + 5 ell, max(t + 10 ell, b)]`, with `b` the highest point such that
/// `[t, b]` weighs at most `d1`. Cuts keep a margin of `100 eps` from
/// every support height. The layers grow until the top edge is reachable,
/// and the cuts are read back from the top.
///
/// The piece count bound `m <= 2 f(R) / d1` does not hold for every weight
/// profile even with the fewest pieces, so `count_bound_met` reports it.
pub fn subdivide_rectangle(r: &Rectangle, weights: &[(Point, u64)], d1: f64, ell: f64) -> Result<Subdivision> {
    if !(ell > 0.0 && d1 > 0.0) {
        return Err(Error::contract("subdivision needs ell > 0 and d1 > 0"));
    }
    if r.height() < 5.0 * ell - EPS {
        return Err(Error::contract(format!(
            "height {} below 5 ell = {}",
            r.height(),
            5.0 * ell
        )));
    }
    // Support inside r, as (height above the bottom edge, weight), sorted.
    let mut support: Vec<(f64, u64)> = weights
        .iter()
        .filter(|(p, w)| *w > 0 && r.contains(*p))
        .map(|(p, w)| (p[1] - r.y_lo, *w))
        .collect();
    support.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: u64 = support.iter().map(|s| s.1).sum();
    if (total as f64) < d1 {
        return Err(Error::contract(format!("f(R) = {total} below d1 = {d1}")));
    }

    let profile = Profile {
        support: &support,
        height: r.height(),
        d1,
        ell,
    };
    let cuts = profile
        .cuts()
        .ok_or_else(|| Error::contract("support too dense to place cuts away from it"))?;
    let mut pieces = Vec::with_capacity(cuts.len() + 1);
    let mut lo = r.y_lo;
    for &c in &cuts {
        pieces.push(Rectangle {
            x_lo: r.x_lo,
            x_hi: r.x_hi,
            y_lo: lo,
            y_hi: r.y_lo + c,
        });
        lo = r.y_lo + c;
    }
    pieces.push(Rectangle {
        x_lo: r.x_lo,
        x_hi: r.x_hi,
        y_lo: lo,
        y_hi: r.y_hi,
    });
    let count_bound_met = pieces.len() as f64 * d1 <= 2.0 * total as f64;
    Ok(Subdivision {
        pieces,
        total_weight: total,
        count_bound_met,
    })
}

/// Distance kept between a cut and any support height.
const MARGIN: f64 = 100.0 * EPS;

struct Profile<'a> {
    support: &'a [(f64, u64)],
    height: f64,
    d1: f64,
    ell: f64,
}

impl Profile<'_> {
    /// Weight with height in `[a, b]`, boundary tolerance as in `Rectangle::contains`.
    fn weight(&self, a: f64, b: f64) -> u64 {
        self.support
            .iter()
            .filter(|(y, _)| *y >= a - EPS && *y <= b + EPS)
            .map(|s| s.1)
            .sum()
    }

    /// Highest `b` with `[t, b]` weighing at most `d1`.
    fn light_reach(&self, t: f64) -> f64 {
        let mut acc = 0u64;
        for &(y, w) in self.support.iter().filter(|s| s.0 >= t - EPS) {
            acc += w;
            if acc as f64 > self.d1 {
                return y - MARGIN;
            }
        }
        self.height
    }

    /// `[lo, hi]` minus the margins around support heights.
    fn admissible(&self, lo: f64, hi: f64, out: &mut Vec<(f64, f64)>) {
        let mut a = lo;
        for &(y, _) in self.support {
            if y + MARGIN < a {
                continue;
            }
            if y - MARGIN > hi {
                break;
            }
            if y - MARGIN >= a {
                out.push((a, y - MARGIN));
            }
            a = a.max(y + MARGIN);
        }
        if a <= hi {
            out.push((a, hi));
        }
    }

    /// Interior cut heights, bottom to top.
    fn cuts(&self) -> Option<Vec<f64>> {
        let (ell, h) = (self.ell, self.height);
        let reach = |s: f64, t: f64| (s + 5.0 * ell, (t + 10.0 * ell).max(self.light_reach(t)));
        let mut layers: Vec<Vec<(f64, f64)>> = vec![vec![(0.0, 0.0)]];
        while !layers.last().unwrap().iter().any(|&(s, t)| {
            let (lo, hi) = reach(s, t);
            lo <= h && hi >= h
        }) {
            let mut next = Vec::new();
            for &(s, t) in layers.last().unwrap() {
                let (lo, hi) = reach(s, t);
                self.admissible(lo, hi.min(h), &mut next);
            }
            next.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut merged: Vec<(f64, f64)> = Vec::with_capacity(next.len());
            for iv in next {
                match merged.last_mut() {
                    Some(last) if iv.0 <= last.1 => last.1 = last.1.max(iv.1),
                    _ => merged.push(iv),
                }
            }
            if merged.is_empty() {
                return None;
            }
            layers.push(merged);
        }

        // Read back from the top: the highest admissible start is best for
        // both the height and the weight condition.
        let mut cuts = Vec::with_capacity(layers.len() - 1);
        let mut b = h;
        for layer in layers[1..].iter().rev() {
            let a = layer.iter().rev().find_map(|&(s, t)| {
                let a = t.min(b - 5.0 * ell);
                let ok = a >= s && (b - a <= 10.0 * ell + EPS || self.weight(a, b) as f64 <= self.d1);
                ok.then_some(a)
            })?;
            cuts.push(a);
            b = a;
        }
        cuts.reverse();
        Some(cuts)
    }
}
