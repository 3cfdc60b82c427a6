use std::f64::consts::PI;

use num_complex::Complex64;

use crate::correlation::{check_constraints, Correlation, EXACT_TOL};
use crate::error::{Error, Result};
use crate::fourier::Spectrum2D;

/// C1 tolerance applied to sampled correlations before transforming them.
const STATISTICAL_C1_TOL: f64 = 0.05;

/// `c_nm = ∫₀^π ∫₀^π C(α, β) e^{−2i(nα + mβ)} / π dα dβ` by the tensor
/// trapezoid rule on a `resolution × resolution` grid.
///
/// The rule is exact for trigonometric polynomials of degree below
/// `resolution`, and for stationary inputs it leaves every off-anti-diagonal
/// coefficient at rounding level.
pub fn coefficients_2d<C>(c: &C, max_index: usize, resolution: usize) -> Result<Spectrum2D>
where
    C: Correlation + Sync + ?Sized,
{
    if resolution < 4 * max_index || resolution == 0 {
        return Err(Error::InvalidArgument(format!(
            "resolution {resolution} is below the floor 4N = {}",
            4 * max_index
        )));
    }
    let tol = if c.kind().is_statistical() {
        STATISTICAL_C1_TOL
    } else {
        EXACT_TOL
    };
    let report = check_constraints(c, 16, tol)?;
    if report.c1_max_violation > tol {
        return Err(Error::NotPeriodic {
            violation: report.c1_max_violation,
        });
    }

    let k = max_index as i64;
    let width = 2 * max_index + 1;
    let h = PI / resolution as f64;
    let nodes: Vec<f64> = (0..resolution).map(|j| j as f64 * h).collect();
    // twiddle[(n + k) * resolution + j] = e^{−2inα_j}
    let mut twiddle = Vec::with_capacity(width * resolution);
    for n in -k..=k {
        twiddle.extend(
            nodes
                .iter()
                .map(|&a| Complex64::from_polar(1.0, -2.0 * n as f64 * a)),
        );
    }

    let row_transform = |j: usize| -> Vec<Complex64> {
        let alpha = nodes[j];
        let values: Vec<f64> = nodes.iter().map(|&b| c.eval(alpha, b)).collect();
        let mut out = vec![Complex64::new(0.0, 0.0); width * width];
        for mi in 0..width {
            let tw = &twiddle[mi * resolution..(mi + 1) * resolution];
            let inner: Complex64 = values.iter().zip(tw).map(|(&v, &e)| e * v).sum();
            for ni in 0..width {
                out[ni * width + mi] = twiddle[ni * resolution + j] * inner;
            }
        }
        out
    };
    let add = |mut a: Vec<Complex64>, b: Vec<Complex64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };

    #[cfg(feature = "parallel")]
    let total = {
        use rayon::prelude::*;
        (0..resolution)
            .into_par_iter()
            .map(row_transform)
            .reduce(|| vec![Complex64::new(0.0, 0.0); width * width], add)
    };
    #[cfg(not(feature = "parallel"))]
    let total = (0..resolution)
        .map(row_transform)
        .fold(vec![Complex64::new(0.0, 0.0); width * width], add);

    let scale = h * h / PI;
    Ok(Spectrum2D::from_fn(max_index, |n, m| {
        total[((n + k) as usize) * width + (m + k) as usize] * scale
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{CorrelationKind, FnCorrelation};
    use crate::lhv::AspectTriangle;
    use crate::quantum::Singlet;
    use approx::assert_abs_diff_eq;

    #[test]
    fn singlet_spectrum() {
        let s = coefficients_2d(&Singlet, 5, 64).unwrap();
        for (n, m, c) in s.iter() {
            let want = if (n, m) == (1, -1) || (n, m) == (-1, 1) {
                -PI / 2.0
            } else {
                0.0
            };
            assert!(
                (c - Complex64::new(want, 0.0)).norm() < 1e-9,
                "({n},{m}) {c}"
            );
        }
    }

    #[test]
    fn constant_spectrum() {
        let one = FnCorrelation::new(CorrelationKind::LhvExact, |_, _| 1.0);
        let s = coefficients_2d(&one, 3, 16).unwrap();
        assert_abs_diff_eq!(s.get(0, 0).re, PI, epsilon = 1e-12);
        let rest = s
            .iter()
            .filter(|&(n, m, _)| (n, m) != (0, 0))
            .map(|(_, _, c)| c.norm())
            .fold(0.0, f64::max);
        assert!(rest < 1e-12);
    }

    #[test]
    fn triangle_ratios() {
        let s = coefficients_2d(&AspectTriangle, 5, 4096).unwrap();
        let d = |n: i64| s.get(n, -n).norm();
        assert!(d(2) < 1e-9 && d(4) < 1e-9 && d(0) < 1e-9);
        assert_abs_diff_eq!(d(3) / d(1), 1.0 / 9.0, epsilon = 1e-6);
        assert_abs_diff_eq!(d(5) / d(1), 1.0 / 25.0, epsilon = 1e-6);
        assert!(s.off_diagonal_fraction() < 1e-20);
        assert!(s.conjugate_asymmetry() < 1e-12);
    }

    #[test]
    fn stationary_input_stays_on_anti_diagonal() {
        let g = FnCorrelation::new(CorrelationKind::LhvExact, |a: f64, b: f64| {
            let d = 2.0 * (a - b);
            0.3 * d.cos() + 0.2 * (3.0 * d).sin() * (2.0 * d).sin()
        });
        let s = coefficients_2d(&g, 6, 64).unwrap();
        assert!(s.off_diagonal_fraction() < 1e-20);
    }

    #[test]
    fn rejects_period_two_pi() {
        let bad = FnCorrelation::new(CorrelationKind::Quantum, |a: f64, b: f64| (a - b).cos());
        assert!(matches!(
            coefficients_2d(&bad, 2, 16),
            Err(Error::NotPeriodic { .. })
        ));
        assert!(coefficients_2d(&Singlet, 8, 31).is_err());
    }
}
