//! Fourier series on period-π angles.
//!
//! One-dimensional coefficients use the unitary convention
//! `f_n = ∫₀^T f(t) e^{−2πint/T} / √T dt` with reconstruction
//! `f(t) = Σ f_n e^{2πint/T} / √T`. Two-dimensional coefficients of a
//! correlation use `c_nm = ∫∫ C(α, β) e^{−2i(nα + mβ)} / π dα dβ` with
//! reconstruction `C = Σ c_nm e^{2i(nα + mβ)} / π`. Each spectrum carries its
//! convention; comparing spectra with different conventions is an error.

mod closed;
mod export;
mod partial;
mod quadrature;
mod twod;

pub use closed::{
    coefficients_simple, endpoint_form, parseval_check, EndpointVariant, PrintedFormAudit,
};
pub use export::{
    fmt_full, Coefficient2DRecord, CoefficientRecord, Spectrum2DDocument, SpectrumDocument,
};
pub use partial::{partial_sum, partial_sum_complex, RESIDUE_TOL};
pub use quadrature::{
    coefficients_quadrature, coefficients_quadrature_aligned, gauss_legendre, GL_ORDER,
};
pub use twod::coefficients_2d;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Normalization attached to a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Convention {
    /// `e^{∓2πint/T} / √T` with the given period.
    Unitary { period: f64 },
    /// `e^{∓2i(nα + mβ)} / π` on the period-π square.
    Bivariate,
}

impl Convention {
    pub fn describe(&self) -> String {
        match self {
            Convention::Unitary { period } => format!("unitary 1/sqrt(T), T = {period}"),
            Convention::Bivariate => "bivariate 1/pi, period pi in each argument".to_owned(),
        }
    }
}

/// Coefficients `f_n` for `n ∈ [−N, N]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierSpectrum {
    max_index: usize,
    period: f64,
    coefficients: Vec<Complex64>,
}

impl FourierSpectrum {
    pub fn new(period: f64, coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.len() % 2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "a symmetric window needs an odd number of coefficients, got {}",
                coefficients.len()
            )));
        }
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "period must be positive, got {period}"
            )));
        }
        Ok(FourierSpectrum {
            max_index: coefficients.len() / 2,
            period,
            coefficients,
        })
    }

    pub(crate) fn from_fn(period: f64, max_index: usize, f: impl Fn(i64) -> Complex64) -> Self {
        let n = max_index as i64;
        FourierSpectrum {
            max_index,
            period,
            coefficients: (-n..=n).map(f).collect(),
        }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn convention(&self) -> Convention {
        Convention::Unitary {
            period: self.period,
        }
    }

    /// `f_n`, or zero outside the window.
    pub fn get(&self, n: i64) -> Complex64 {
        let m = self.max_index as i64;
        if n.abs() > m {
            Complex64::new(0.0, 0.0)
        } else {
            self.coefficients[(n + m) as usize]
        }
    }

    /// `(n, f_n)` pairs from `−N` to `N`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let m = self.max_index as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - m, c))
    }

    /// `max_n |f_{−n} − conj(f_n)|`.
    pub fn conjugate_asymmetry(&self) -> f64 {
        let m = self.max_index as i64;
        (0..=m)
            .map(|n| (self.get(-n) - self.get(n).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// `Σ |f_n|²` over the window.
    pub fn energy(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest coefficient difference; both spectra must share a convention.
    pub fn max_abs_diff(&self, other: &FourierSpectrum) -> Result<f64> {
        if self.convention() != other.convention() {
            return Err(Error::ConventionMismatch(format!(
                "{} vs {}",
                self.convention().describe(),
                other.convention().describe()
            )));
        }
        let m = self.max_index.max(other.max_index) as i64;
        Ok((-m..=m)
            .map(|n| (self.get(n) - other.get(n)).norm())
            .fold(0.0, f64::max))
    }

    /// Restricts (or zero-pads) the window to `[−n, n]`.
    pub fn truncated(&self, n: usize) -> FourierSpectrum {
        FourierSpectrum::from_fn(self.period, n, |k| self.get(k))
    }
}

/// Coefficients `c_nm` for `n, m ∈ [−N, N]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum2D {
    max_index: usize,
    /// Row-major in `n`, then `m`.
    coefficients: Vec<Complex64>,
}

impl Spectrum2D {
    pub(crate) fn from_fn(max_index: usize, f: impl Fn(i64, i64) -> Complex64) -> Self {
        let k = max_index as i64;
        let mut coefficients = Vec::with_capacity((2 * max_index + 1).pow(2));
        for n in -k..=k {
            for m in -k..=k {
                coefficients.push(f(n, m));
            }
        }
        Spectrum2D {
            max_index,
            coefficients,
        }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn convention(&self) -> Convention {
        Convention::Bivariate
    }

    pub fn get(&self, n: i64, m: i64) -> Complex64 {
        let k = self.max_index as i64;
        if n.abs() > k || m.abs() > k {
            return Complex64::new(0.0, 0.0);
        }
        let w = 2 * k + 1;
        self.coefficients[((n + k) * w + (m + k)) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, Complex64)> + '_ {
        let k = self.max_index as i64;
        let w = 2 * k + 1;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 / w - k, i as i64 % w - k, c))
    }

    /// `max |c_{−n,−m} − conj(c_nm)|`.
    pub fn conjugate_asymmetry(&self) -> f64 {
        self.iter()
            .map(|(n, m, c)| (self.get(-n, -m) - c.conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Fraction of `Σ|c_nm|²` lying off the anti-diagonal `m = −n`.
    pub fn off_diagonal_fraction(&self) -> f64 {
        let (mut off, mut total) = (0.0, 0.0);
        for (n, m, c) in self.iter() {
            let e = c.norm_sqr();
            total += e;
            if m != -n {
                off += e;
            }
        }
        if total == 0.0 {
            0.0
        } else {
            off / total
        }
    }
}
