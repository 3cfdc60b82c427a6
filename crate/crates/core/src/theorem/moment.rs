use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{coefficients_simple, Spectrum2D};
use crate::lhv::{LhvModel, Pairing};

/// `M_nm` for `n, m ∈ [−N, N]`, row-major in `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentMatrix {
    max_index: usize,
    entries: Vec<Complex64>,
    /// `None` for the quantum target.
    pairing: Option<Pairing>,
}

impl MomentMatrix {
    fn zeros(max_index: usize, pairing: Option<Pairing>) -> Self {
        MomentMatrix {
            max_index,
            entries: vec![Complex64::new(0.0, 0.0); (2 * max_index + 1).pow(2)],
            pairing,
        }
    }

    fn index(&self, n: i64, m: i64) -> Option<usize> {
        let k = self.max_index as i64;
        (n.abs() <= k && m.abs() <= k).then(|| ((n + k) * (2 * k + 1) + (m + k)) as usize)
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn pairing(&self) -> Option<Pairing> {
        self.pairing
    }

    /// `M_nm`, zero outside the window.
    pub fn get(&self, n: i64, m: i64) -> Complex64 {
        self.index(n, m)
            .map_or(Complex64::new(0.0, 0.0), |i| self.entries[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, Complex64)> + '_ {
        let k = self.max_index as i64;
        let w = 2 * k + 1;
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 / w - k, i as i64 % w - k, c))
    }

    /// `Σ_n M_{n,−n}`.
    pub fn trace(&self) -> f64 {
        let k = self.max_index as i64;
        (-k..=k).map(|n| self.get(n, -n).re).sum()
    }

    /// `max |M_nm − M_mn|`.
    pub fn asymmetry(&self) -> f64 {
        self.iter()
            .map(|(n, m, c)| (c - self.get(m, n)).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise sup-norm distance; windows must match.
    pub fn distance(&self, other: &MomentMatrix) -> Result<f64> {
        if self.max_index != other.max_index {
            return Err(Error::InvalidArgument(format!(
                "window mismatch: N = {} vs {}",
                self.max_index, other.max_index
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// The same numbers as 2D coefficients of the model's correlation: with
    /// `f_n` normalized by `1/√π`, `c_nm = M_nm` exactly.
    pub fn to_spectrum(&self) -> Spectrum2D {
        Spectrum2D::from_fn(self.max_index, |n, m| self.get(n, m))
    }

    /// `Σ_nm M_nm e^{2i(nα + mβ)} / π`, the correlation these moments encode.
    pub fn reconstruct(&self, alpha: f64, beta: f64) -> f64 {
        let k = self.max_index as i64;
        let eb: Vec<Complex64> = (-k..=k)
            .map(|m| Complex64::from_polar(1.0, 2.0 * m as f64 * beta))
            .collect();
        let mut total = Complex64::new(0.0, 0.0);
        for n in -k..=k {
            let row: Complex64 = (-k..=k).zip(&eb).map(|(m, e)| self.get(n, m) * e).sum();
            total += Complex64::from_polar(1.0, 2.0 * n as f64 * alpha) * row;
        }
        total.re / PI
    }
}

/// `M_nm = pairing · Σ_i w_i f_n(λ_i) f_m(λ_i)` from the exact coefficients of
/// each atom's response.
pub fn moment_matrix(model: &LhvModel, max_index: usize) -> MomentMatrix {
    let width = 2 * max_index + 1;
    let atom_moments = |atom: &crate::lhv::Atom| -> Vec<Complex64> {
        let f: Vec<Complex64> = coefficients_simple(&atom.response, max_index)
            .iter()
            .map(|(_, c)| c)
            .collect();
        let mut out = Vec::with_capacity(width * width);
        for a in &f {
            for b in &f {
                out.push(atom.weight * a * b);
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
    let zero = || vec![Complex64::new(0.0, 0.0); width * width];

    #[cfg(feature = "parallel")]
    let sum = {
        use rayon::prelude::*;
        model.atoms().par_iter().map(atom_moments).reduce(zero, add)
    };
    #[cfg(not(feature = "parallel"))]
    let sum = model.atoms().iter().map(atom_moments).fold(zero(), add);

    let sign = model.pairing().sign();
    let mut m = MomentMatrix::zeros(max_index, Some(model.pairing()));
    for (dst, src) in m.entries.iter_mut().zip(sum) {
        *dst = sign * src;
    }
    m
}

/// The singlet's moments: `−π/2` at `(1, −1)` and `(−1, 1)`, zero elsewhere.
pub fn quantum_target(max_index: usize) -> Result<MomentMatrix> {
    if max_index == 0 {
        return Err(Error::InvalidArgument(
            "the target has entries at |n| = 1; the window must have N ≥ 1".into(),
        ));
    }
    let mut m = MomentMatrix::zeros(max_index, None);
    for (n, k) in [(1, -1), (-1, 1)] {
        let i = m.index(n, k).expect("inside window");
        m.entries[i] = Complex64::new(-PI / 2.0, 0.0);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lhv::{aspect_model, lhv_correlation_exact, SimpleFunctionSpec};
    use crate::outcome::Outcome;
    use crate::rng::RandomStream;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_atom() {
        let m = moment_matrix(
            &LhvModel::single(
                SimpleFunctionSpec::constant(Outcome::Plus),
                Pairing::Correlated,
            ),
            3,
        );
        assert_abs_diff_eq!(m.get(0, 0).re, PI, epsilon = 1e-14);
        let rest = m
            .iter()
            .filter(|&(n, k, _)| (n, k) != (0, 0))
            .map(|(_, _, c)| c.norm())
            .fold(0.0, f64::max);
        assert_eq!(rest, 0.0);
    }

    #[test]
    fn square_atom() {
        let spec = SimpleFunctionSpec::new(vec![PI / 2.0], Outcome::Plus).unwrap();
        let m = moment_matrix(&LhvModel::single(spec.clone(), Pairing::Correlated), 3);
        let f = coefficients_simple(&spec, 1);
        let oracle = f.get(1) * f.get(-1);
        assert!((m.get(1, -1) - oracle).norm() < 1e-15);
        assert_abs_diff_eq!(m.get(1, -1).re, 4.0 / PI, epsilon = 1e-14);
    }

    #[test]
    fn aspect_first_harmonic() {
        let model = aspect_model(1024);
        let m = moment_matrix(&model, 3);
        // oracle: direct mixture sum of |f_1|²
        let direct: f64 = model
            .atoms()
            .iter()
            .map(|a| a.weight * coefficients_simple(&a.response, 1).get(1).norm_sqr())
            .sum();
        assert_abs_diff_eq!(m.get(1, -1).re, -direct, epsilon = 1e-12);
        assert_abs_diff_eq!(m.get(1, -1).re, -4.0 / PI, epsilon = 1e-12);
        assert_abs_diff_eq!(m.get(3, -3).re, -4.0 / (9.0 * PI), epsilon = 1e-12);
    }

    #[test]
    fn spectrum_matches_direct_2d_coefficients() {
        let model = aspect_model(64);
        // trapezoid error on the jumps is O(1/R)
        let direct = crate::fourier::coefficients_2d(&model, 3, 2048).unwrap();
        let m = moment_matrix(&model, 3).to_spectrum();
        for (n, k, c) in m.iter() {
            assert!(
                (c - direct.get(n, k)).norm() < 1e-3,
                "({n},{k}) {c} {}",
                direct.get(n, k)
            );
        }
    }

    #[test]
    fn target() {
        assert!(quantum_target(0).is_err());
        for n in [1, 3] {
            let t = quantum_target(n).unwrap();
            let nonzero: Vec<_> = t.iter().filter(|(_, _, c)| c.norm() > 0.0).collect();
            assert_eq!(nonzero.len(), 2);
            assert_eq!(t.get(1, -1).re, -PI / 2.0);
            assert_eq!(t.get(-1, 1).re, -PI / 2.0);
            assert_abs_diff_eq!(t.trace(), -PI, epsilon = 1e-15);
        }
    }

    #[test]
    fn structure_of_random_models() {
        let mut rng = RandomStream::new(5);
        for pairing in [Pairing::Correlated, Pairing::AntiCorrelated] {
            for _ in 0..20 {
                let model = LhvModel::random(&mut rng, 16, 12, pairing);
                let m = moment_matrix(&model, 64);
                assert!(m.asymmetry() < 1e-12);
                let s = pairing.sign();
                for n in -64..=64 {
                    let d = m.get(n, -n);
                    assert!(d.im.abs() < 1e-12);
                    assert!(s * d.re >= -1e-15);
                }
                // Parseval: trace approaches ±π from inside; each jump leaves
                // roughly 2/(πN) outside the window
                let jumps: f64 = model
                    .atoms()
                    .iter()
                    .map(|a| a.weight * a.response.jumps().len() as f64)
                    .sum();
                let tr = s * m.trace();
                assert!(tr <= PI + 1e-9, "trace {tr}");
                assert!(tr >= PI - 2.0 * jumps * 2.0 / (PI * 64.0), "trace {tr}");
            }
        }
    }

    #[test]
    fn reconstruction_matches_in_mean_square() {
        let mut rng = RandomStream::new(77);
        let n = 32;
        for pairing in [Pairing::Correlated, Pairing::AntiCorrelated] {
            let model = LhvModel::random(&mut rng, 6, 6, pairing);
            let m = moment_matrix(&model, n);
            // bound: ‖FF − F_N F_N‖ ≤ 2√(π e) per atom, e the Parseval tail
            let bound: f64 = model
                .atoms()
                .iter()
                .map(|a| {
                    let tail = PI - coefficients_simple(&a.response, n).energy();
                    a.weight * 2.0 * (tail.max(0.0) / PI).sqrt()
                })
                .sum();
            let g = 96;
            let mut sq = 0.0;
            for i in 0..g {
                for j in 0..g {
                    let (a, b) = (
                        (i as f64 + 0.5) * PI / g as f64,
                        (j as f64 + 0.5) * PI / g as f64,
                    );
                    sq += (m.reconstruct(a, b) - lhv_correlation_exact(&model, a, b)).powi(2);
                }
            }
            let rms = (sq / (g * g) as f64).sqrt();
            assert!(rms <= 1.5 * bound, "rms {rms} vs bound {bound}");
        }
    }
}
