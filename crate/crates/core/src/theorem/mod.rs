//! The moment-matrix incompatibility check and related diagnostics.
//!
//! Expanding both sides of `C^Q = C^HV` in the bivariate Fourier basis turns
//! the question into whether some mixture of ±1 responses has moment matrix
//! `M_nm = ∫ρ f_n f_m` equal to the singlet target (`−π/2` at `(±1, ∓1)`,
//! zero elsewhere). The diagonal entries `M_{n,−n} = ±∫ρ|f_n|²` have a fixed
//! sign and sum to `±π`, which is what makes the target unreachable.

mod bound;
mod chsh;
mod forced;
mod moment;
mod report;
mod schmidt;

pub use bound::{
    exhaustive_first_harmonic, first_harmonic_sq, sign_pattern_first_harmonic, HarmonicSearch,
};
pub use chsh::{chsh_score, STANDARD_CHSH_ANGLES};
pub use forced::{forced_response, ForcedResponse};
pub use moment::{moment_matrix, quantum_target, MomentMatrix};
pub use report::{
    incompatibility_report, IncompatibilityReport, Verdict, Witness, INCOMPATIBILITY_TOL,
};
pub use schmidt::{
    schmidt_spectrum, schmidt_spectrum_with_resolution, SchmidtSpectrum, SCHMIDT_RESOLUTION,
    STATIONARITY_TOL,
};
