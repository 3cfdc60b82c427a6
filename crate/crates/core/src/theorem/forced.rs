//! The only response compatible with the vanishing of every harmonic other
//! than `n = ±1`: `F(θ) = √2 cos(φ + 2θ)`. It takes the values ±1 at just
//! four angles per period, so it is not an admissible ±1 response.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use crate::angle::reduce;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcedResponse {
    pub phase: f64,
}

pub fn forced_response(phase: f64) -> ForcedResponse {
    ForcedResponse { phase }
}

impl ForcedResponse {
    pub fn eval(&self, theta: f64) -> f64 {
        SQRT_2 * (self.phase + 2.0 * theta).cos()
    }

    /// The four angles in `[0, π)` where `|F| = 1`, from
    /// `φ + 2θ = (2k + 1)π/4`.
    pub fn unit_points(&self) -> [f64; 4] {
        let mut pts =
            [0, 1, 2, 3].map(|k| reduce(((2 * k + 1) as f64 * FRAC_PI_4 - self.phase) / 2.0));
        pts.sort_by(f64::total_cmp);
        pts
    }

    /// Grid cells `[θ_i, θ_{i+1})` (periodically wrapped) across which
    /// `|F| − 1` changes sign, on `points` equispaced samples.
    pub fn bracketed_unit_points(&self, points: usize) -> Vec<(f64, f64)> {
        let h = PI / points as f64;
        let g = |i: usize| self.eval(i as f64 * h).abs() - 1.0;
        (0..points)
            .filter(|&i| {
                let (a, b) = (g(i), g((i + 1) % points));
                (a < 0.0) != (b < 0.0)
            })
            .map(|i| (i as f64 * h, (i + 1) as f64 * h))
            .collect()
    }

    /// Fraction of `points` equispaced samples with `||F| − 1| > eps`.
    pub fn off_unit_fraction(&self, points: usize, eps: f64) -> f64 {
        let h = PI / points as f64;
        let far = (0..points)
            .filter(|&i| (self.eval(i as f64 * h).abs() - 1.0).abs() > eps)
            .count();
        far as f64 / points as f64
    }
}
