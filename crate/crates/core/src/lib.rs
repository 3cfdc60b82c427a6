//! Correlation functions of the two-photon polarization experiment and a
//! Fourier-series check that no local hidden-variable model with ±1
//! responses reproduces the singlet correlation `−cos 2(α − β)`.
//!
//! * [`quantum`]: exact singlet correlation, joint outcome table, sampling.
//! * [`lhv`]: step-function responses, mixtures, Aspect's model.
//! * [`fourier`]: coefficients, partial sums, 2D spectra, exports.
//! * [`theorem`]: moment matrices, incompatibility reports, Schmidt
//!   spectra, CHSH scores.

pub mod angle;
pub mod correlation;
pub mod error;
pub mod fourier;
pub mod lhv;
pub mod outcome;
pub mod quantum;
pub mod rng;
pub mod theorem;

#[cfg(test)]
mod testutil;

pub use angle::{normalize_angle, Angle};
pub use correlation::{
    check_constraints, ConstraintReport, Correlation, CorrelationKind, FnCorrelation, EXACT_TOL,
};
pub use error::{Error, Result};
pub use outcome::Outcome;
pub use rng::RandomStream;
