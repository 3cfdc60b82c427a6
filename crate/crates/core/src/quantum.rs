//! The singlet-state side of the experiment: exact correlation, the
//! four-outcome joint distribution, outcome sampling and the Monte Carlo
//! estimate of the measured correlation.

use serde::{Deserialize, Serialize};

use crate::angle::reduce;
use crate::correlation::{Correlation, CorrelationKind};
use crate::error::{Error, Result};
use crate::outcome::Outcome;
use crate::rng::{sum_chunks, RandomStream};

/// Fixed sampling order for the inverse-CDF draw.
pub const OUTCOME_ORDER: [(Outcome, Outcome); 4] = [
    (Outcome::Plus, Outcome::Plus),
    (Outcome::Plus, Outcome::Minus),
    (Outcome::Minus, Outcome::Plus),
    (Outcome::Minus, Outcome::Minus),
];

/// `−cos 2(α − β)`.
pub fn singlet_correlation(alpha: f64, beta: f64) -> f64 {
    -(2.0 * (alpha - beta)).cos()
}

/// Born-rule probability of outcomes `(a, b)` at settings `(α, β)`:
/// `(1 − ab·cos 2(α−β)) / 4`.
pub fn joint_probability(a: Outcome, b: Outcome, alpha: f64, beta: f64) -> f64 {
    let ab = (a * b).value();
    (1.0 - ab * (2.0 * (alpha - beta)).cos()) / 4.0
}

/// The four probabilities in [`OUTCOME_ORDER`].
pub fn joint_table(alpha: f64, beta: f64) -> [f64; 4] {
    OUTCOME_ORDER.map(|(a, b)| joint_probability(a, b, alpha, beta))
}

/// Draws one outcome pair; always consumes exactly one uniform.
pub fn sample_pair(alpha: f64, beta: f64, rng: &mut RandomStream) -> (Outcome, Outcome) {
    pick(&joint_table(alpha, beta), rng.next_f64())
}

fn pick(table: &[f64; 4], u: f64) -> (Outcome, Outcome) {
    let mut cum = 0.0;
    for (p, pair) in table.iter().zip(OUTCOME_ORDER).take(3) {
        cum += p;
        if u < cum {
            return pair;
        }
    }
    OUTCOME_ORDER[3]
}

/// Monte Carlo estimate of a correlation with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasuredCorrelation {
    pub alpha: f64,
    pub beta: f64,
    pub estimate: f64,
    pub standard_error: f64,
    pub n_runs: u64,
    pub seed: u64,
}

impl MeasuredCorrelation {
    pub(crate) fn from_sum(alpha: f64, beta: f64, sum: i64, n_runs: u64, seed: u64) -> Self {
        let estimate = sum as f64 / n_runs as f64;
        let standard_error = ((1.0 - estimate * estimate).max(0.0) / n_runs as f64).sqrt();
        MeasuredCorrelation {
            alpha,
            beta,
            estimate,
            standard_error,
            n_runs,
            seed,
        }
    }
}

/// Averages `a·b` over `n_runs` simulated pairs.
///
/// Runs are split into fixed-size chunks, each with its own sub-stream
/// derived from `seed`, so the result is identical with or without threads.
pub fn estimate_correlation(
    alpha: f64,
    beta: f64,
    n_runs: u64,
    seed: u64,
) -> Result<MeasuredCorrelation> {
    if n_runs == 0 {
        return Err(Error::InvalidArgument("n_runs must be at least 1".into()));
    }
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::NonFiniteAngle(if alpha.is_finite() {
            beta
        } else {
            alpha
        }));
    }
    let (alpha, beta) = (reduce(alpha), reduce(beta));
    let table = joint_table(alpha, beta);
    let root = RandomStream::new(seed);
    let sum = sum_chunks(n_runs, |chunk, len| {
        let mut rng = root.split(chunk);
        (0..len)
            .map(|_| {
                let (a, b) = pick(&table, rng.next_f64());
                i64::from((a * b).sign())
            })
            .sum()
    });
    Ok(MeasuredCorrelation::from_sum(
        alpha, beta, sum, n_runs, seed,
    ))
}

/// The exact singlet correlation as a [`Correlation`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Singlet;

impl Correlation for Singlet {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        singlet_correlation(alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        CorrelationKind::Quantum
    }
}

/// The simulated measured correlation at a fixed run count and seed.
#[derive(Debug, Clone, Copy)]
pub struct SimulatedSinglet {
    pub n_runs: u64,
    pub seed: u64,
}

impl Correlation for SimulatedSinglet {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        estimate_correlation(alpha, beta, self.n_runs, self.seed)
            .map(|m| m.estimate)
            .unwrap_or(f64::NAN)
    }

    fn kind(&self) -> CorrelationKind {
        CorrelationKind::Measured
    }
}
