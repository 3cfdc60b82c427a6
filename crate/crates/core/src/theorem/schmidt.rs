use serde::{Deserialize, Serialize};

use crate::correlation::Correlation;
use crate::error::{Error, Result};
use crate::fourier::coefficients_2d;

/// Largest off-anti-diagonal share of spectral mass for a stationary input.
pub const STATIONARITY_TOL: f64 = 1e-6;

/// Default tensor-grid size; aliasing of a `1/n²` spectrum is `O(1/R²)`.
pub const SCHMIDT_RESOLUTION: usize = 4096;

/// Diagonal weights `σ_n = |c_{n,−n}|` of a stationary correlation.
///
/// In the bivariate convention these are the Schmidt coefficients with
/// respect to the mode pairs `e^{2inα}/√π`, `−e^{−2inβ}/√π`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchmidtSpectrum {
    pub max_index: usize,
    /// `(n, σ_n)` for `n ∈ [−N, N]`.
    pub weights: Vec<(i64, f64)>,
    pub threshold: f64,
    pub count_above: usize,
    pub off_diagonal_fraction: f64,
}

impl SchmidtSpectrum {
    pub fn weight(&self, n: i64) -> f64 {
        self.weights
            .iter()
            .find(|&&(k, _)| k == n)
            .map_or(0.0, |&(_, w)| w)
    }

    /// Indices whose weight exceeds the threshold.
    pub fn support(&self) -> Vec<i64> {
        self.weights
            .iter()
            .filter(|&&(_, w)| w > self.threshold)
            .map(|&(n, _)| n)
            .collect()
    }
}

pub fn schmidt_spectrum<C>(c: &C, max_index: usize, threshold: f64) -> Result<SchmidtSpectrum>
where
    C: Correlation + Sync + ?Sized,
{
    schmidt_spectrum_with_resolution(
        c,
        max_index,
        threshold,
        SCHMIDT_RESOLUTION.max(8 * max_index),
    )
}

pub fn schmidt_spectrum_with_resolution<C>(
    c: &C,
    max_index: usize,
    threshold: f64,
    resolution: usize,
) -> Result<SchmidtSpectrum>
where
    C: Correlation + Sync + ?Sized,
{
    let s = coefficients_2d(c, max_index, resolution)?;
    let fraction = s.off_diagonal_fraction();
    if fraction > STATIONARITY_TOL {
        return Err(Error::NotStationary { fraction });
    }
    let k = max_index as i64;
    let weights: Vec<(i64, f64)> = (-k..=k).map(|n| (n, s.get(n, -n).norm())).collect();
    let count_above = weights.iter().filter(|&&(_, w)| w > threshold).count();
    Ok(SchmidtSpectrum {
        max_index,
        weights,
        threshold,
        count_above,
        off_diagonal_fraction: fraction,
    })
}
