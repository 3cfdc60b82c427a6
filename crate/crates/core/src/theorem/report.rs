use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lhv::{LhvModel, Pairing};
use crate::theorem::{moment_matrix, quantum_target};

/// Residuals at or below this count as a match.
pub const INCOMPATIBILITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Incompatible,
    /// Never expected for a valid model.
    Compatible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Incompatible => "incompatible",
            Verdict::Compatible => "compatible",
        })
    }
}

/// A moment-matrix entry that cannot meet its target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub n: i64,
    pub m: i64,
    pub value: Complex64,
    pub target: Complex64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncompatibilityReport {
    pub description: String,
    pub pairing: Pairing,
    pub max_index: usize,
    /// `max |M_nm − target_nm|` over the window.
    pub residual_inf: f64,
    pub witnesses: Vec<Witness>,
    /// `Σ_n M_{n,−n}`; tends to `±π`.
    pub parseval_total: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// Compares a model's moment matrix with the singlet target on `[−N, N]²`.
pub fn incompatibility_report(model: &LhvModel, max_index: usize) -> Result<IncompatibilityReport> {
    if max_index < 2 {
        return Err(Error::InvalidArgument(format!(
            "the window must reach beyond |n| = 1 (N ≥ 2), got N = {max_index}"
        )));
    }
    let m = moment_matrix(model, max_index);
    let target = quantum_target(max_index)?;
    let residual_inf = m.distance(&target)?;

    let mut witnesses = Vec::new();
    let first = m.get(1, -1);
    witnesses.push(Witness {
        n: 1,
        m: -1,
        value: first,
        target: target.get(1, -1),
        reason: match model.pairing() {
            Pairing::Correlated => {
                "M(1,-1) is a weighted mean of |f_1|^2 and cannot be negative".to_owned()
            }
            Pairing::AntiCorrelated => {
                "|M(1,-1)| is a weighted mean of |f_1|^2 <= 4/pi < pi/2".to_owned()
            }
        },
    });
    let k = max_index as i64;
    if let Some(n) = (0..=k)
        .filter(|&n| n != 1)
        .max_by(|&a, &b| m.get(a, -a).norm().total_cmp(&m.get(b, -b).norm()))
    {
        witnesses.push(Witness {
            n,
            m: -n,
            value: m.get(n, -n),
            target: target.get(n, -n),
            reason: format!(
                "target is zero, but M({n},{}) is a weighted mean of |f_{n}|^2 \
                 and any +-1 response has harmonics outside |n| = 1",
                -n
            ),
        });
    }
    if let Some((n, mm, value)) = m.iter().max_by(|a, b| {
        (a.2 - target.get(a.0, a.1))
            .norm()
            .total_cmp(&(b.2 - target.get(b.0, b.1)).norm())
    }) {
        if !witnesses
            .iter()
            .any(|w| (w.n, w.m) == (n, mm) || (w.n, w.m) == (mm, n))
        {
            witnesses.push(Witness {
                n,
                m: mm,
                value,
                target: target.get(n, mm),
                reason: "largest entrywise residual".to_owned(),
            });
        }
    }

    Ok(IncompatibilityReport {
        description: model.description().to_owned(),
        pairing: model.pairing(),
        max_index,
        residual_inf,
        witnesses,
        parseval_total: m.trace(),
        tolerance: INCOMPATIBILITY_TOL,
        verdict: if residual_inf > INCOMPATIBILITY_TOL {
            Verdict::Incompatible
        } else {
            Verdict::Compatible
        },
    })
}
