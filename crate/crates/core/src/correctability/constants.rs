use serde::{Deserialize, Serialize};

/// Numeric constants of the certification procedures. Defaults are the
/// values used in the lower-bound proofs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Constants {
    /// Largest square side for growing, as a multiple of `d / ell`.
    pub grow_side_factor: f64,
    /// Growing requires `f(V) <= grow_bad_fraction * d`.
    pub grow_bad_fraction: f64,
    /// Growing starts from a square of side `base_side_factor * sqrt d`.
    pub base_side_factor: f64,
    /// Recursive certification requires `f(V) <= recursive_bad_fraction * d`.
    pub recursive_bad_fraction: f64,
    /// Separator strips hold at most `separator_middle_factor * ell * sqrt n` points.
    pub separator_middle_factor: f64,
    /// Each side of a separator holds at most this fraction of the points.
    pub separator_side_fraction: f64,
    /// A tiling square is good if `f(S) < good_square_fraction * d`;
    /// bad squares are subdivided with `d1 = good_square_fraction * d`.
    pub good_square_fraction: f64,
    /// Default tiling width is `tiling_width_factor * d / ell`.
    pub tiling_width_factor: f64,
    pub c0: f64,
    pub c1: f64,
    /// `c0` of the distance-only bound.
    pub c0_distance: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            grow_side_factor: 1.0 / 100.0,
            grow_bad_fraction: 1.0 / 8.0,
            base_side_factor: 1.0 / 4.0,
            recursive_bad_fraction: 1.0 / 10.0,
            separator_middle_factor: 8.0,
            separator_side_fraction: 9.0 / 10.0,
            good_square_fraction: 1.0 / 10.0,
            tiling_width_factor: 1.0 / 100.0,
            c0: 1.0 / 100.0,
            c1: 100.0,
            c0_distance: 1.0 / 200.0,
        }
    }
}

impl Constants {
    /// Boundary budget for a region holding `v` of `n` qubits:
    /// `8 ell sqrt n * sum_{i=0}^{m-1} sqrt(9/10)^i`, `m = floor(log_{9/10}(v/n))`.
    /// For `v = n` the sum is empty.
    pub fn boundary_budget(&self, ell: f64, n: usize, v: usize) -> f64 {
        let ratio = v as f64 / n as f64;
        let terms = (ratio.ln() / self.separator_side_fraction.ln()).floor() as i64;
        let q = self.separator_side_fraction.sqrt();
        let sum: f64 = (0..terms.max(0)).map(|i| q.powi(i as i32)).sum();
        self.separator_middle_factor * ell * (n as f64).sqrt() * sum
    }

    /// Upper bound on `|T|` in the recursive step:
    /// `d/10 + 8 ell sqrt n / (1 - sqrt(9/10))`.
    pub fn recursive_t_bound(&self, ell: f64, n: usize, d: usize) -> f64 {
        self.recursive_bad_fraction * d as f64
            + self.separator_middle_factor * ell * (n as f64).sqrt() / (1.0 - self.separator_side_fraction.sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sum_at_top_level() {
        let c = Constants::default();
        assert_eq!(c.boundary_budget(1.0, 100, 100), 0.0);
        // |V|/n = 0.8: floor(log_0.9 0.8) = 2 terms.
        let b = c.boundary_budget(1.0, 100, 80);
        assert!((b - 80.0 * (1.0 + 0.9f64.sqrt())).abs() < 1e-9);
        assert!(c.boundary_budget(1.0, 100, 1) < 160.0 * 10.0);
    }
}
