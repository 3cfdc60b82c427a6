//! The correlation-function abstraction and the two physical constraints
//! every measured correlation must satisfy: period π in each analyzer angle
//! (C1) and symmetry under exchanging the analyzers (C2).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a correlation value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorrelationKind {
    Quantum,
    LhvExact,
    LhvEstimated,
    Measured,
}

impl CorrelationKind {
    /// Whether values carry sampling noise.
    pub fn is_statistical(self) -> bool {
        matches!(
            self,
            CorrelationKind::LhvEstimated | CorrelationKind::Measured
        )
    }
}

/// A two-setting correlation `C(α, β) ∈ [−1, 1]`.
///
/// Arguments are raw radians; implementations reduce them as needed.
pub trait Correlation {
    fn eval(&self, alpha: f64, beta: f64) -> f64;

    fn kind(&self) -> CorrelationKind;
}

impl<C: Correlation + ?Sized> Correlation for &C {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        (**self).eval(alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        (**self).kind()
    }
}

impl<C: Correlation + ?Sized> Correlation for Box<C> {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        (**self).eval(alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        (**self).kind()
    }
}

/// Wraps a closure as a correlation of a given kind.
pub struct FnCorrelation<F> {
    f: F,
    kind: CorrelationKind,
}

impl<F: Fn(f64, f64) -> f64> FnCorrelation<F> {
    pub fn new(kind: CorrelationKind, f: F) -> Self {
        FnCorrelation { f, kind }
    }
}

impl<F: Fn(f64, f64) -> f64> Correlation for FnCorrelation<F> {
    fn eval(&self, alpha: f64, beta: f64) -> f64 {
        (self.f)(alpha, beta)
    }

    fn kind(&self) -> CorrelationKind {
        self.kind
    }
}

/// Default tolerance for closed-form evaluators.
pub const EXACT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstraintReport {
    /// Largest `|C(α+π, β) − C(α, β)|` or `|C(α, β+π) − C(α, β)|` on the grid.
    pub c1_max_violation: f64,
    /// Largest `|C(β, α) − C(α, β)|` on the grid.
    pub c2_max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Checks C1 and C2 on the `grid_size × grid_size` grid `α_i = iπ/grid_size`.
pub fn check_constraints<C: Correlation + ?Sized>(
    c: &C,
    grid_size: usize,
    tol: f64,
) -> Result<ConstraintReport> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid_size must be at least 2, got {grid_size}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let step = PI / grid_size as f64;
    let mut c1 = 0.0f64;
    let mut c2 = 0.0f64;
    for i in 0..grid_size {
        let a = i as f64 * step;
        for j in 0..grid_size {
            let b = j as f64 * step;
            let v = c.eval(a, b);
            c1 = c1
                .max((c.eval(a + PI, b) - v).abs())
                .max((c.eval(a, b + PI) - v).abs());
            c2 = c2.max((c.eval(b, a) - v).abs());
        }
    }
    Ok(ConstraintReport {
        c1_max_violation: c1,
        c2_max_violation: c2,
        tolerance: tol,
        pass: c1 <= tol && c2 <= tol,
    })
}
