use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::FourierSpectrum;

/// Nodes per Gauss–Legendre panel in the breakpoint-aligned rule.
pub const GL_ORDER: usize = 16;

/// Gauss–Legendre nodes and weights on `[−1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = nf * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn gl16() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GL_ORDER))
}

fn check_window(max_index: usize, resolution: usize) -> Result<()> {
    if resolution < 4 * max_index || resolution == 0 {
        return Err(Error::InvalidArgument(format!(
            "resolution {resolution} is below the floor 4N = {} (and must be positive)",
            4 * max_index
        )));
    }
    Ok(())
}

fn period_check(period: f64) -> Result<()> {
    if !(period.is_finite() && period > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "period must be positive, got {period}"
        )));
    }
    Ok(())
}

/// Accumulates `Σ_j w_j f(t_j) e^{−2πi n t_j / T} / √T` for all `|n| ≤ N`.
///
/// Positive and negative indices are summed separately, so conjugate
/// symmetry of the result is a genuine check on the rule.
fn accumulate(
    period: f64,
    max_index: usize,
    nodes: impl Iterator<Item = (f64, f64)>,
    f: impl Fn(f64) -> f64,
) -> FourierSpectrum {
    let m = max_index;
    let mut acc = vec![Complex64::new(0.0, 0.0); 2 * m + 1];
    for (t, w) in nodes {
        let v = w * f(t);
        if v == 0.0 {
            continue;
        }
        let phase = -2.0 * PI * t / period;
        for dir in [1.0, -1.0] {
            let step = Complex64::from_polar(1.0, dir * phase);
            let mut e = Complex64::new(1.0, 0.0);
            for k in 0..=m {
                if k > 0 && k % 32 == 0 {
                    // re-anchor the recurrence to bound rounding drift
                    e = Complex64::from_polar(1.0, dir * k as f64 * phase);
                }
                let idx = if dir > 0.0 { m + k } else { m - k };
                if dir > 0.0 || k > 0 {
                    acc[idx] += v * e;
                }
                e *= step;
            }
        }
    }
    let scale = 1.0 / period.sqrt();
    FourierSpectrum::from_fn(period, m, |n| acc[(n + m as i64) as usize] * scale)
}

/// Coefficients of a smooth `T`-periodic real function by the trapezoid rule
/// on `resolution` equispaced nodes.
///
/// Spectrally accurate for smooth periodic input; for functions with jumps
/// prefer [`coefficients_quadrature_aligned`] or the closed form.
pub fn coefficients_quadrature(
    f: impl Fn(f64) -> f64,
    period: f64,
    max_index: usize,
    resolution: usize,
) -> Result<FourierSpectrum> {
    period_check(period)?;
    check_window(max_index, resolution)?;
    let h = period / resolution as f64;
    let nodes = (0..resolution).map(|j| (j as f64 * h, h));
    Ok(accumulate(period, max_index, nodes, f))
}

/// Coefficients by composite Gauss–Legendre quadrature with panel edges at
/// every listed discontinuity.
///
/// `resolution` is the approximate total number of panels over one period;
/// each smooth piece gets at least one.
pub fn coefficients_quadrature_aligned(
    f: impl Fn(f64) -> f64,
    period: f64,
    max_index: usize,
    breakpoints: &[f64],
    resolution: usize,
) -> Result<FourierSpectrum> {
    period_check(period)?;
    check_window(max_index, resolution)?;
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .map(|b| b.rem_euclid(period))
        .filter(|&b| b > 0.0 && b < period)
        .collect();
    cuts.push(0.0);
    cuts.push(period);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let (x, w) = gl16();
    let mut nodes = Vec::new();
    for piece in cuts.windows(2) {
        let (a, b) = (piece[0], piece[1]);
        let panels = ((resolution as f64 * (b - a) / period).ceil() as usize).max(1);
        let width = (b - a) / panels as f64;
        for p in 0..panels {
            let lo = a + p as f64 * width;
            let half = 0.5 * width;
            for (xi, wi) in x.iter().zip(w) {
                nodes.push((lo + half * (1.0 + xi), half * wi));
            }
        }
    }
    Ok(accumulate(period, max_index, nodes.into_iter(), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let (x, w) = gauss_legendre(GL_ORDER);
        for deg in 0..(2 * GL_ORDER) {
            let q: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(deg as i32))
                .sum();
            let exact = if deg % 2 == 1 {
                0.0
            } else {
                2.0 / (deg as f64 + 1.0)
            };
            assert_abs_diff_eq!(q, exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn constant_function() {
        let s = coefficients_quadrature(|_| 1.0, PI, 8, 64).unwrap();
        assert_abs_diff_eq!(s.get(0).re, PI.sqrt(), epsilon = 1e-12);
        for n in 1..=8 {
            assert!(s.get(n).norm() < 1e-10);
            assert!(s.get(-n).norm() < 1e-10);
        }
    }

    #[test]
    fn cosine() {
        let s = coefficients_quadrature(|t| (2.0 * t).cos(), PI, 6, 64).unwrap();
        let t = coefficients_quadrature(|t| (2.0 * t).cos(), PI, 6, 128).unwrap();
        assert!(s.max_abs_diff(&t).unwrap() < 1e-10);
        for n in -6..=6i64 {
            let want = if n.abs() == 1 { PI.sqrt() / 2.0 } else { 0.0 };
            assert_abs_diff_eq!(s.get(n).re, want, epsilon = 1e-12);
            assert!(s.get(n).im.abs() < 1e-12);
        }
    }

    #[test]
    fn general_period() {
        // sin(2πt/T) on T = 3: f_{±1} = ∓i√T/2
        let s = coefficients_quadrature(|t| (2.0 * PI * t / 3.0).sin(), 3.0, 3, 32).unwrap();
        assert_abs_diff_eq!(s.get(1).im, -(3f64).sqrt() / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.get(-1).im, (3f64).sqrt() / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn resolution_floor() {
        assert!(coefficients_quadrature(|_| 1.0, PI, 16, 63).is_err());
        assert!(coefficients_quadrature(|_| 1.0, PI, 0, 0).is_err());
        assert!(coefficients_quadrature_aligned(|_| 1.0, PI, 16, &[], 63).is_err());
        assert!(coefficients_quadrature(|_| 1.0, -1.0, 1, 8).is_err());
    }

    #[test]
    fn aligned_rule_is_exact_on_step() {
        // step: +1 on [0, 1), −1 on [1, π)
        let f = |t: f64| if t < 1.0 { 1.0 } else { -1.0 };
        let s = coefficients_quadrature_aligned(f, PI, 4, &[1.0], 16).unwrap();
        let want0 = (1.0 - (PI - 1.0)) / PI.sqrt();
        assert_abs_diff_eq!(s.get(0).re, want0, epsilon = 1e-14);
    }
}
