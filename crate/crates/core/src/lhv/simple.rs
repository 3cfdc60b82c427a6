use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::angle::reduce;
use crate::error::{Error, Result};
use crate::outcome::Outcome;
use crate::rng::RandomStream;

/// A ±1 step function on `[0, π)`, extended with period π.
///
/// The interval `[0, π)` is split at `0 < θ₁ < … < θ_{K−1} < π` into `K`
/// half-open pieces `[θ_{k−1}, θ_k)`. Signs alternate from piece to piece,
/// so the first sign fixes all of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimpleFunctionSpec {
    breakpoints: Vec<f64>,
    first_sign: Outcome,
}

impl SimpleFunctionSpec {
    pub fn new(breakpoints: Vec<f64>, first_sign: Outcome) -> Result<Self> {
        for (i, &b) in breakpoints.iter().enumerate() {
            if !b.is_finite() || b <= 0.0 || b >= PI {
                return Err(Error::InvalidModel(format!(
                    "breakpoint {i} = {b} lies outside the open interval (0, π)"
                )));
            }
        }
        if let Some(i) = breakpoints.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidModel(format!(
                "breakpoints must be strictly increasing: θ_{} = {} ≥ θ_{} = {}",
                i + 1,
                breakpoints[i],
                i + 2,
                breakpoints[i + 1]
            )));
        }
        Ok(SimpleFunctionSpec {
            breakpoints,
            first_sign,
        })
    }

    /// Builds a spec from explicit per-interval signs, which must alternate.
    pub fn from_signs(breakpoints: Vec<f64>, signs: &[Outcome]) -> Result<Self> {
        if signs.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidModel(format!(
                "{} breakpoints need {} signs, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                signs.len()
            )));
        }
        if let Some(p) = signs.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::InvalidModel(format!(
                "adjacent interval signs must alternate (s_p + s_(p+1) = 0), \
                 but s_{} = s_{} = {}",
                p + 1,
                p + 2,
                signs[p].sign()
            )));
        }
        Self::new(breakpoints, signs[0])
    }

    /// The constant function with the given sign.
    pub fn constant(sign: Outcome) -> Self {
        SimpleFunctionSpec {
            breakpoints: Vec::new(),
            first_sign: sign,
        }
    }

    /// `k` equal pieces of width π/k.
    pub fn equal_intervals(k: usize, first_sign: Outcome) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("need at least one interval".into()));
        }
        let step = PI / k as f64;
        Self::new((1..k).map(|i| i as f64 * step).collect(), first_sign)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn first_sign(&self) -> Outcome {
        self.first_sign
    }

    /// Number of pieces `K`.
    pub fn intervals(&self) -> usize {
        self.breakpoints.len() + 1
    }

    /// Sign on piece `k` (zero-based).
    pub fn sign_of(&self, k: usize) -> Outcome {
        if k % 2 == 0 {
            self.first_sign
        } else {
            -self.first_sign
        }
    }

    pub fn signs(&self) -> Vec<Outcome> {
        (0..self.intervals()).map(|k| self.sign_of(k)).collect()
    }

    /// Piece boundaries including the implicit `0` and `π`.
    pub fn partition(&self) -> Vec<f64> {
        let mut p = Vec::with_capacity(self.breakpoints.len() + 2);
        p.push(0.0);
        p.extend_from_slice(&self.breakpoints);
        p.push(PI);
        p
    }

    /// Evaluates at θ, reduced modulo π, using right-continuous pieces.
    pub fn eval(&self, theta: f64) -> Outcome {
        let t = reduce(theta);
        let k = self.breakpoints.partition_point(|&b| b <= t);
        self.sign_of(k)
    }

    /// Discontinuities of the periodic extension within `[0, π)`.
    ///
    /// Includes `0` when the first and last pieces have opposite signs.
    pub fn jumps(&self) -> Vec<f64> {
        let mut j = Vec::with_capacity(self.breakpoints.len() + 1);
        if self.intervals() % 2 == 0 {
            j.push(0.0);
        }
        j.extend_from_slice(&self.breakpoints);
        j
    }

    /// The translate `θ ↦ F(θ − shift)`.
    pub fn shifted(&self, shift: f64) -> Result<Self> {
        if !shift.is_finite() {
            return Err(Error::NonFiniteAngle(shift));
        }
        let mut moved: Vec<f64> = self
            .jumps()
            .into_iter()
            .map(|j| reduce(j + shift))
            .filter(|&j| j > 0.0)
            .collect();
        moved.sort_by(f64::total_cmp);
        let first = self.eval(reduce(-shift));
        Self::new(moved, first)
    }
}

impl SimpleFunctionSpec {
    /// Random spec with `1..=max_intervals` pieces and uniform breakpoints.
    pub fn random(rng: &mut RandomStream, max_intervals: usize) -> Self {
        let max_intervals = max_intervals.max(1) as u64;
        let k = 1 + (rng.next_u64() % max_intervals) as usize;
        let mut b: Vec<f64> = Vec::with_capacity(k - 1);
        while b.len() < k - 1 {
            let t = rng.next_f64() * PI;
            if t > 0.0 && b.iter().all(|&x| x != t) {
                b.push(t);
            }
        }
        b.sort_by(f64::total_cmp);
        let sign = if rng.next_u64() & 1 == 0 {
            Outcome::Plus
        } else {
            Outcome::Minus
        };
        SimpleFunctionSpec {
            breakpoints: b,
            first_sign: sign,
        }
    }
}
