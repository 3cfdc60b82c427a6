//! Aspect's hidden-variable model: λ uniform on `[0, π)`,
//! `A(θ, λ) = sign cos 2(θ − λ)` with zero counted as `+1`, and `B = −A`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::angle::reduce;
use crate::correlation::{Correlation, CorrelationKind};
use crate::lhv::{Atom, LhvModel, Pairing, SimpleFunctionSpec};
use crate::outcome::Outcome;

pub fn aspect_response(theta: f64, lambda: f64) -> Outcome {
    if (2.0 * (theta - lambda)).cos() >= 0.0 {
        Outcome::Plus
    } else {
        Outcome::Minus
    }
}

/// `A(·, λ)` as a step function.
///
/// The breakpoints are the zeros of `cos 2(θ − λ)` reduced modulo π. The two
/// representations agree everywhere except at the zero where the cosine
/// turns negative, which the step function assigns to the `−1` piece.
pub fn aspect_to_simple(lambda: f64) -> SimpleFunctionSpec {
    let mut roots: Vec<f64> = [reduce(lambda + FRAC_PI_4), reduce(lambda + 3.0 * FRAC_PI_4)]
        .into_iter()
        .filter(|&r| r > 0.0)
        .collect();
    roots.sort_by(f64::total_cmp);
    let first_end = roots.first().copied().unwrap_or(PI);
    let first = aspect_response(first_end / 2.0, lambda);
    SimpleFunctionSpec::new(roots, first).expect("two distinct roots in (0, π)")
}

/// The triangle wave `−1 + 4δ/π` on `[0, π/2)`, `3 − 4δ/π` on `[π/2, π)`,
/// with `δ = (α − β) mod π`.
pub fn aspect_correlation_closed(alpha: f64, beta: f64) -> f64 {
    let d = reduce(alpha - beta);
    if d < FRAC_PI_2 {
        -1.0 + 4.0 * d / PI
    } else {
        3.0 - 4.0 * d / PI
    }
}

/// `(1/π) ∫₀^π A(α, λ) B(β, λ) dλ`, integrated exactly piece by piece.
pub fn aspect_correlation_quadrature(alpha: f64, beta: f64) -> f64 {
    let mut cuts = vec![0.0, PI];
    for t in [alpha, beta] {
        cuts.push(reduce(t - FRAC_PI_4));
        cuts.push(reduce(t + FRAC_PI_4));
    }
    cuts.sort_by(f64::total_cmp);
    let mut s = 0.0;
    for w in cuts.windows(2) {
        let len = w[1] - w[0];
        if len <= 0.0 {
            continue;
        }
        let mid = 0.5 * (w[0] + w[1]);
        let a = aspect_response(alpha, mid);
        let b = -aspect_response(beta, mid);
        s += (a * b).value() * len;
    }
    s / PI
}

/// Uniform discretization with atoms at the midpoints `λ_j = (j + ½)π/atoms`.
pub fn aspect_model(atoms: usize) -> LhvModel {
    let atoms = atoms.max(1);
    let w = 1.0 / atoms as f64;
    let list = (0..atoms)
        .map(|j| Atom {
            weight: w,
            response: aspect_to_simple((j as f64 + 0.5) * PI / atoms as f64),
        })
        .collect();
    LhvModel::normalized(
        list,
        Pairing::AntiCorrelated,
        format!("aspect model, {atoms} atoms"),
    )
    .expect("uniform weights")
}

/// The closed-form Aspect correlation.
#[derive(Debug, Clone, Copy, Default)]
pub struct AspectTriangle;

impl Correlation for AspectTriangle {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        aspect_correlation_closed(alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        CorrelationKind::LhvExact
    }
}
