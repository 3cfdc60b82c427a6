//! Polarizer orientations.
//!
//! An analyzer at θ and one at θ + π are the same physical device, so every
//! angle reduces to a canonical representative in `[0, π)`. Angles are kept
//! as raw `f64` radians inside formulas and only reduced at API boundaries,
//! which keeps difference formulas like `α − β` free of wrap-around surprises.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polarizer orientation in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// Reduces `theta` modulo π.
    pub fn new(theta: f64) -> Result<Self> {
        normalize_angle(theta)
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Reduces `theta` to its representative in `[0, π)`.
pub fn normalize_angle(theta: f64) -> Result<Angle> {
    if !theta.is_finite() {
        return Err(Error::NonFiniteAngle(theta));
    }
    Ok(Angle(reduce(theta)))
}

/// Infallible reduction for values already known to be finite.
///
/// Non-finite input yields NaN.
pub(crate) fn reduce(theta: f64) -> f64 {
    let r = theta.rem_euclid(PI);
    // rem_euclid can round up to exactly π for tiny negative inputs
    if r >= PI {
        0.0
    } else {
        r
    }
}
