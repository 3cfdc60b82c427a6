//! Exact coefficients of ±1 step functions.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::fourier::FourierSpectrum;
use crate::lhv::SimpleFunctionSpec;

/// `f_n = Σ_k s_k ∫_{θ_{k−1}}^{θ_k} e^{−2inθ} / √π dθ`, each piece integrated
/// in closed form:
/// `f₀ = Σ_k s_k (θ_k − θ_{k−1}) / √π` and
/// `f_n = Σ_k s_k · i (e^{−2inθ_k} − e^{−2inθ_{k−1}}) / (2n√π)`.
pub fn coefficients_simple(spec: &SimpleFunctionSpec, max_index: usize) -> FourierSpectrum {
    let p = spec.partition();
    let norm = PI.sqrt();
    FourierSpectrum::from_fn(PI, max_index, |n| {
        let mut acc = Complex64::new(0.0, 0.0);
        if n == 0 {
            for (k, w) in p.windows(2).enumerate() {
                acc += spec.sign_of(k).value() * (w[1] - w[0]);
            }
            return acc / norm;
        }
        let nf = n as f64;
        for (k, w) in p.windows(2).enumerate() {
            acc += spec.sign_of(k).value() * (phase(nf, w[1]) - phase(nf, w[0]));
        }
        Complex64::i() * acc / (2.0 * nf * norm)
    })
}

// e^{−2inθ}, exact at the period ends so a constant has no spurious harmonics.
fn phase(n: f64, t: f64) -> Complex64 {
    if t == 0.0 || t == PI {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, -2.0 * n * t)
    }
}

/// `Σ_{|n| ≤ N} |f_n|²`; tends to π from below for any ±1 function.
pub fn parseval_check(spec: &SimpleFunctionSpec, max_index: usize) -> f64 {
    coefficients_simple(spec, max_index).energy()
}

/// Fully expanded, endpoint-sum forms of the step-function coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointVariant {
    /// Telescoped interval sum:
    /// `f₀ = −(s₁/√π)[π(−1)^K + 2 Σ_{k<K} (−1)^k θ_k]`,
    /// `f_n = s₁/(2in√π) [1 + (−1)^K + 2 Σ_{k<K} (−1)^k e^{−2inθ_k}]`.
    Telescoped,
    /// As `Telescoped` for `n ≠ 0` but with the wrap term written
    /// `1 + π(−1)^K`.
    PiWeightedWrap,
    /// Interval sum with the lower endpoint written `e^{−2nθ_{k−1}}`
    /// (no imaginary unit in the exponent).
    RealLowerExponent,
}

/// Evaluates one of the expanded forms for a single index.
pub fn endpoint_form(spec: &SimpleFunctionSpec, n: i64, variant: EndpointVariant) -> Complex64 {
    let s1 = spec.first_sign().value();
    let k = spec.intervals() as i32;
    let b = spec.breakpoints();
    let norm = PI.sqrt();
    let alt = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
    let parity_k = f64::from((-1i32).pow(k as u32 % 2));
    if n == 0 && variant != EndpointVariant::RealLowerExponent {
        let inner: f64 = b.iter().enumerate().map(|(i, t)| alt(i + 1) * t).sum();
        return Complex64::new(-s1 / norm * (PI * parity_k + 2.0 * inner), 0.0);
    }
    let nf = n as f64;
    match variant {
        EndpointVariant::Telescoped | EndpointVariant::PiWeightedWrap => {
            let wrap = match variant {
                EndpointVariant::Telescoped => 1.0 + parity_k,
                _ => 1.0 + PI * parity_k,
            };
            let mut bracket = Complex64::new(wrap, 0.0);
            for (i, t) in b.iter().enumerate() {
                bracket += 2.0 * alt(i + 1) * Complex64::from_polar(1.0, -2.0 * nf * t);
            }
            s1 * bracket / (2.0 * Complex64::i() * nf * norm)
        }
        EndpointVariant::RealLowerExponent => {
            if n == 0 {
                return Complex64::new(f64::NAN, f64::NAN);
            }
            let p = spec.partition();
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, w) in p.windows(2).enumerate() {
                let hi = Complex64::from_polar(1.0, -2.0 * nf * w[1]);
                let lo = Complex64::new((-2.0 * nf * w[0]).exp(), 0.0);
                acc += alt(i) * (hi - lo);
            }
            Complex64::i() * s1 * acc / (2.0 * nf * norm)
        }
    }
}

/// Largest deviation of each expanded form from [`coefficients_simple`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrintedFormAudit {
    pub zero_index: f64,
    pub telescoped: f64,
    pub pi_weighted_wrap: f64,
    pub real_lower_exponent: f64,
}

impl PrintedFormAudit {
    pub fn run(spec: &SimpleFunctionSpec, max_index: usize) -> Self {
        let exact = coefficients_simple(spec, max_index);
        let m = max_index as i64;
        let dev = |v: EndpointVariant| {
            (-m..=m)
                .filter(|&n| n != 0)
                .map(|n| (endpoint_form(spec, n, v) - exact.get(n)).norm())
                .fold(0.0, f64::max)
        };
        PrintedFormAudit {
            zero_index: (endpoint_form(spec, 0, EndpointVariant::Telescoped) - exact.get(0)).norm(),
            telescoped: dev(EndpointVariant::Telescoped),
            pi_weighted_wrap: dev(EndpointVariant::PiWeightedWrap),
            real_lower_exponent: dev(EndpointVariant::RealLowerExponent),
        }
    }

    /// Worst case over two audits.
    pub fn merge(self, other: Self) -> Self {
        PrintedFormAudit {
            zero_index: self.zero_index.max(other.zero_index),
            telescoped: self.telescoped.max(other.telescoped),
            pi_weighted_wrap: self.pi_weighted_wrap.max(other.pi_weighted_wrap),
            real_lower_exponent: self.real_lower_exponent.max(other.real_lower_exponent),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::coefficients_quadrature_aligned;
    use crate::outcome::Outcome;
    use crate::testutil::arb_spec;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn square() -> SimpleFunctionSpec {
        SimpleFunctionSpec::new(vec![PI / 2.0], Outcome::Plus).unwrap()
    }

    #[test]
    fn constant_spec() {
        let s = coefficients_simple(&SimpleFunctionSpec::constant(Outcome::Plus), 6);
        assert_abs_diff_eq!(s.get(0).re, PI.sqrt(), epsilon = 1e-15);
        for n in 1..=6 {
            assert_eq!(s.get(n).norm(), 0.0);
        }
        assert_abs_diff_eq!(
            parseval_check(&SimpleFunctionSpec::constant(Outcome::Minus), 0),
            PI,
            epsilon = 1e-15
        );
    }

    #[test]
    fn square_wave() {
        let s = coefficients_simple(&square(), 8);
        assert_abs_diff_eq!(s.get(0).norm(), 0.0, epsilon = 1e-15);
        let want = Complex64::new(0.0, -2.0 / PI.sqrt());
        assert!((s.get(1) - want).norm() < 1e-15);
        assert_abs_diff_eq!(
            s.get(1).norm_sqr() + s.get(-1).norm_sqr(),
            8.0 / PI,
            epsilon = 1e-14
        );
        // oracle: aligned quadrature on 2^20 nodes
        let q = coefficients_quadrature_aligned(
            |t| square().eval(t).value(),
            PI,
            8,
            &[PI / 2.0],
            1 << 16,
        )
        .unwrap();
        assert!(s.max_abs_diff(&q).unwrap() < 1e-12);
    }

    #[test]
    fn square_wave_parseval() {
        let p = parseval_check(&square(), 512);
        assert!(p <= PI && p > 0.99 * PI, "{p}");
    }

    #[test]
    fn audit_of_expanded_forms() {
        let spec = SimpleFunctionSpec::new(vec![0.4, 1.1, 2.0], Outcome::Minus).unwrap();
        let a = PrintedFormAudit::run(&spec, 16);
        assert!(a.zero_index < 1e-14, "{a:?}");
        assert!(a.telescoped < 1e-13, "{a:?}");
        assert!(a.pi_weighted_wrap > 0.1, "{a:?}");
        assert!(a.real_lower_exponent > 0.1, "{a:?}");
    }

    proptest! {
        #[test]
        fn exact_conjugate_symmetry(spec in arb_spec(16)) {
            prop_assert_eq!(coefficients_simple(&spec, 64).conjugate_asymmetry(), 0.0);
        }

        #[test]
        fn parseval_monotone_and_bounded(spec in arb_spec(16)) {
            let mut prev = 0.0;
            for n in [0, 1, 2, 4, 8, 16, 64, 256] {
                let p = parseval_check(&spec, n);
                prop_assert!(p >= prev - 1e-12);
                prop_assert!(p <= PI + 1e-9);
                prev = p;
            }
        }

        #[test]
        fn shift_theorem(spec in arb_spec(10), shift in -3f64..3.0) {
            let a = coefficients_simple(&spec, 24);
            let b = coefficients_simple(&spec.shifted(shift).unwrap(), 24);
            for n in -24i64..=24 {
                let rotated = a.get(n) * Complex64::from_polar(1.0, -2.0 * n as f64 * shift);
                prop_assert!((rotated - b.get(n)).norm() < 1e-10);
            }
        }
    }
}
