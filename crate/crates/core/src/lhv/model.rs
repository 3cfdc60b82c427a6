use serde::{Deserialize, Serialize};

use crate::angle::reduce;
use crate::correlation::{Correlation, CorrelationKind};
use crate::error::{Error, Result};
use crate::lhv::SimpleFunctionSpec;
use crate::outcome::Outcome;
use crate::quantum::MeasuredCorrelation;
use crate::rng::{sum_chunks, RandomStream};

/// How Bob's response relates to Alice's for the same hidden variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pairing {
    /// `B(θ, λ) = A(θ, λ)`, as forced by the swap symmetry.
    Correlated,
    /// `B(θ, λ) = −A(θ, λ)`, as in Aspect's model.
    AntiCorrelated,
}

impl Pairing {
    pub fn sign(self) -> f64 {
        match self {
            Pairing::Correlated => 1.0,
            Pairing::AntiCorrelated => -1.0,
        }
    }

    pub fn apply(self, o: Outcome) -> Outcome {
        match self {
            Pairing::Correlated => o,
            Pairing::AntiCorrelated => -o,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub weight: f64,
    pub response: SimpleFunctionSpec,
}

/// Tolerance on `Σ w_i = 1` for constructed models.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// A finite mixture of deterministic responses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LhvModel {
    atoms: Vec<Atom>,
    pairing: Pairing,
    description: String,
}

impl LhvModel {
    pub fn new(atoms: Vec<Atom>, pairing: Pairing, description: impl Into<String>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidModel("model has no atoms".into()));
        }
        if let Some((i, a)) = atoms
            .iter()
            .enumerate()
            .find(|(_, a)| !(a.weight.is_finite() && a.weight > 0.0))
        {
            return Err(Error::InvalidModel(format!(
                "atoms[{i}].weight must be positive and finite, got {}",
                a.weight
            )));
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidModel(format!(
                "weights must sum to 1, got {total}"
            )));
        }
        Ok(LhvModel {
            atoms,
            pairing,
            description: description.into(),
        })
    }

    /// One response with weight 1.
    pub fn single(response: SimpleFunctionSpec, pairing: Pairing) -> Self {
        LhvModel {
            atoms: vec![Atom {
                weight: 1.0,
                response,
            }],
            pairing,
            description: "single atom".into(),
        }
    }

    /// Normalizes positive weights to sum to one before validating.
    pub fn normalized(
        mut atoms: Vec<Atom>,
        pairing: Pairing,
        description: impl Into<String>,
    ) -> Result<Self> {
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if total > 0.0 && total.is_finite() {
            for a in &mut atoms {
                a.weight /= total;
            }
        }
        Self::new(atoms, pairing, description)
    }

    /// Random mixture of `1..=max_atoms` atoms, each with up to
    /// `max_intervals` pieces.
    pub fn random(
        rng: &mut RandomStream,
        max_atoms: usize,
        max_intervals: usize,
        pairing: Pairing,
    ) -> Self {
        let n = 1 + (rng.next_u64() % max_atoms.max(1) as u64) as usize;
        let atoms = (0..n)
            .map(|_| Atom {
                weight: 0.05 + rng.next_f64(),
                response: SimpleFunctionSpec::random(rng, max_intervals),
            })
            .collect();
        Self::normalized(atoms, pairing, "random mixture").expect("positive weights")
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn pairing(&self) -> Pairing {
        self.pairing
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn with_description(mut self, d: impl Into<String>) -> Self {
        self.description = d.into();
        self
    }

    /// Alice's and Bob's outcomes for atom `i`.
    pub fn responses(&self, i: usize, alpha: f64, beta: f64) -> (Outcome, Outcome) {
        let f = &self.atoms[i].response;
        (f.eval(alpha), self.pairing.apply(f.eval(beta)))
    }
}

/// `pairing · Σ_i w_i F_i(α) F_i(β)`, exact for the finite mixture.
pub fn lhv_correlation_exact(model: &LhvModel, alpha: f64, beta: f64) -> f64 {
    let s: f64 = model
        .atoms
        .iter()
        .map(|a| a.weight * (a.response.eval(alpha) * a.response.eval(beta)).value())
        .sum();
    model.pairing.sign() * s
}

/// Samples an atom per run with probability `w_i` and averages `A·B`.
pub fn lhv_estimate_correlation(
    model: &LhvModel,
    alpha: f64,
    beta: f64,
    n_runs: u64,
    seed: u64,
) -> Result<MeasuredCorrelation> {
    if n_runs == 0 {
        return Err(Error::InvalidArgument("n_runs must be at least 1".into()));
    }
    if model.atoms.is_empty() {
        return Err(Error::InvalidModel("model has no atoms".into()));
    }
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::NonFiniteAngle(if alpha.is_finite() {
            beta
        } else {
            alpha
        }));
    }
    let (alpha, beta) = (reduce(alpha), reduce(beta));
    let products: Vec<i64> = (0..model.atoms.len())
        .map(|i| {
            let (a, b) = model.responses(i, alpha, beta);
            i64::from((a * b).sign())
        })
        .collect();
    let mut cum = Vec::with_capacity(model.atoms.len());
    let mut acc = 0.0;
    for a in &model.atoms {
        acc += a.weight;
        cum.push(acc);
    }
    let last = products.len() - 1;
    let root = RandomStream::new(seed);
    let sum = sum_chunks(n_runs, |chunk, len| {
        let mut rng = root.split(chunk);
        (0..len)
            .map(|_| {
                let u = rng.next_f64() * acc;
                let i = cum.partition_point(|&c| c <= u).min(last);
                products[i]
            })
            .sum()
    });
    Ok(MeasuredCorrelation::from_sum(
        alpha, beta, sum, n_runs, seed,
    ))
}

impl Correlation for LhvModel {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        lhv_correlation_exact(self, alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        CorrelationKind::LhvExact
    }
}

/// Monte Carlo estimate of a model's correlation at a fixed run count and seed.
#[derive(Debug, Clone, Copy)]
pub struct SampledLhv<'a> {
    pub model: &'a LhvModel,
    pub n_runs: u64,
    pub seed: u64,
}

impl Correlation for SampledLhv<'_> {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        lhv_estimate_correlation(self.model, alpha, beta, self.n_runs, self.seed)
            .map(|m| m.estimate)
            .unwrap_or(f64::NAN)
    }

    fn kind(&self) -> CorrelationKind {
        CorrelationKind::LhvEstimated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::check_constraints;
    use std::f64::consts::PI;

    fn square() -> SimpleFunctionSpec {
        SimpleFunctionSpec::new(vec![PI / 2.0], Outcome::Plus).unwrap()
    }

    #[test]
    fn equal_settings() {
        let mut rng = RandomStream::new(1);
        for _ in 0..20 {
            let m = LhvModel::random(&mut rng, 8, 8, Pairing::Correlated);
            let a = rng.next_f64() * PI;
            assert!((lhv_correlation_exact(&m, a, a) - 1.0).abs() < 1e-12);
            let m = LhvModel::random(&mut rng, 8, 8, Pairing::AntiCorrelated);
            assert!((lhv_correlation_exact(&m, a, a) + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_atom_square_wave() {
        let m = LhvModel::single(square(), Pairing::Correlated);
        // F(π/4) = +1, F(3π/4) = −1
        let oracle = (square().eval(PI / 4.0) * square().eval(0.75 * PI)).value();
        assert_eq!(oracle, -1.0);
        assert_eq!(lhv_correlation_exact(&m, PI / 4.0, 0.75 * PI), oracle);
    }

    #[test]
    fn construction_validation() {
        let a = |w| Atom {
            weight: w,
            response: square(),
        };
        assert!(LhvModel::new(vec![], Pairing::Correlated, "").is_err());
        assert!(LhvModel::new(vec![a(0.5)], Pairing::Correlated, "").is_err());
        assert!(LhvModel::new(vec![a(-0.5), a(1.5)], Pairing::Correlated, "").is_err());
        assert!(LhvModel::new(vec![a(0.25), a(0.75)], Pairing::Correlated, "").is_ok());
        let m = LhvModel::normalized(vec![a(2.0), a(6.0)], Pairing::Correlated, "").unwrap();
        assert_eq!(m.atoms()[1].weight, 0.75);
    }

    #[test]
    fn exact_model_satisfies_constraints() {
        let mut rng = RandomStream::new(8);
        for pairing in [Pairing::Correlated, Pairing::AntiCorrelated] {
            for _ in 0..10 {
                let m = LhvModel::random(&mut rng, 16, 10, pairing);
                let r = check_constraints(&m, 16, 1e-12).unwrap();
                assert!(r.pass, "{r:?}");
                for i in 0..50 {
                    let (a, b) = (i as f64 * 0.17, i as f64 * 0.31);
                    assert!(lhv_correlation_exact(&m, a, b).abs() <= 1.0 + 1e-15);
                }
            }
        }
    }

    #[test]
    fn estimator_single_atom_is_exact() {
        let m = LhvModel::single(square(), Pairing::Correlated);
        let e = lhv_estimate_correlation(&m, PI / 4.0, 0.75 * PI, 10_000, 1).unwrap();
        assert_eq!(e.estimate, -1.0);
        assert_eq!(e.standard_error, 0.0);
    }

    #[test]
    fn estimator_within_five_sigma() {
        let mut rng = RandomStream::new(21);
        let m = LhvModel::random(&mut rng, 32, 8, Pairing::AntiCorrelated);
        for (a, b) in [(0.0, 0.4), (1.0, 2.5), (0.3, 0.31)] {
            let exact = lhv_correlation_exact(&m, a, b);
            let e = lhv_estimate_correlation(&m, a, b, 200_000, 4).unwrap();
            let sigma = ((1.0 - exact * exact) / 200_000.0).sqrt();
            assert!(
                (e.estimate - exact).abs() <= 5.0 * sigma + 1e-12,
                "{e:?} vs {exact}"
            );
        }
        // correlated mixture at α = β: every product is +1
        let m = LhvModel::random(&mut rng, 32, 8, Pairing::Correlated);
        let e = lhv_estimate_correlation(&m, 0.7, 0.7, 12_345, 9).unwrap();
        assert_eq!(e.estimate, 1.0);
    }

    #[test]
    fn estimator_rejects_zero_runs() {
        let m = LhvModel::single(square(), Pairing::Correlated);
        assert!(lhv_estimate_correlation(&m, 0.0, 0.0, 0, 1).is_err());
    }

    #[test]
    fn sampled_model_constraints_within_five_sigma() {
        let mut rng = RandomStream::new(33);
        let m = LhvModel::random(&mut rng, 16, 6, Pairing::AntiCorrelated);
        let n = 20_000;
        let s = SampledLhv {
            model: &m,
            n_runs: n,
            seed: 2,
        };
        let r = check_constraints(&s, 6, 5.0 / (n as f64).sqrt()).unwrap();
        assert!(r.pass, "{r:?}");
    }
}
