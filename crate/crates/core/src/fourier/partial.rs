use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::FourierSpectrum;

/// Largest tolerated imaginary part of a partial sum of a real function.
pub const RESIDUE_TOL: f64 = 1e-9;

/// `f_N(t) = Σ_{|n| ≤ N} f_n e^{2πint/T} / √T` without discarding the
/// imaginary part.
pub fn partial_sum_complex(spectrum: &FourierSpectrum, t: f64) -> Complex64 {
    let period = spectrum.period();
    let sum: Complex64 = spectrum
        .iter()
        .map(|(n, c)| c * Complex64::from_polar(1.0, 2.0 * PI * n as f64 * t / period))
        .sum();
    sum / period.sqrt()
}

/// Real partial sum; fails if the spectrum is not conjugate symmetric.
pub fn partial_sum(spectrum: &FourierSpectrum, t: f64) -> Result<f64> {
    let z = partial_sum_complex(spectrum, t);
    if z.im.abs() > RESIDUE_TOL {
        return Err(Error::ImaginaryResidue {
            residue: z.im.abs(),
        });
    }
    Ok(z.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::coefficients_simple;
    use crate::lhv::SimpleFunctionSpec;
    use crate::outcome::Outcome;
    use approx::assert_abs_diff_eq;

    fn square() -> SimpleFunctionSpec {
        SimpleFunctionSpec::new(vec![PI / 2.0], Outcome::Plus).unwrap()
    }

    #[test]
    fn constant_spectrum() {
        let s = FourierSpectrum::new(PI, vec![Complex64::new(PI.sqrt(), 0.0)]).unwrap();
        for t in [0.0, 0.7, 2.0, -5.0] {
            assert_abs_diff_eq!(partial_sum(&s, t).unwrap(), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn square_wave_interior() {
        let s = coefficients_simple(&square(), 128);
        let v = partial_sum(&s, PI / 4.0).unwrap();
        assert_eq!(square().eval(PI / 4.0), Outcome::Plus);
        assert!((v - 1.0).abs() < 0.02, "{v}");
    }

    #[test]
    fn square_wave_jump_midpoint() {
        for n in [64, 128, 256] {
            let s = coefficients_simple(&square(), n);
            let v = partial_sum(&s, PI / 2.0).unwrap();
            assert!(v.abs() < 1e-9, "N={n}: {v}");
            let w = partial_sum(&s, 0.0).unwrap();
            assert!(w.abs() < 1e-9, "N={n}: {w}");
        }
    }

    #[test]
    fn asymmetric_spectrum_rejected() {
        let s = FourierSpectrum::new(
            PI,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            partial_sum(&s, 0.3),
            Err(Error::ImaginaryResidue { .. })
        ));
    }
}
