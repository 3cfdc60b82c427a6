//! Searches for the largest first harmonic `|f₁|²` of a ±1 response.
//!
//! Analytically `|f₁| ≤ ∫|cos(2θ − φ)| dθ / √π = 2/√π`, attained by the
//! square wave, so `|f₁|² ≤ 4/π`. Against an anti-correlated pairing this
//! bounds the reachable `|M_{1,−1}|` below the `π/2` the singlet needs. The
//! searches here confirm the constant over grid-aligned responses.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::fourier::coefficients_simple;
use crate::lhv::SimpleFunctionSpec;
use crate::outcome::Outcome;

pub fn first_harmonic_sq(spec: &SimpleFunctionSpec) -> f64 {
    coefficients_simple(spec, 1).get(1).norm_sqr()
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSearch {
    pub best: f64,
    pub argmax: SimpleFunctionSpec,
    pub candidates: u64,
}

/// Enumerates every response with breakpoints on the grid `jπ/cells` and at
/// most `max_intervals` pieces, returning the largest `|f₁|²`.
///
/// `|f₁|` is invariant under a global sign flip, so only `first_sign = +1`
/// is visited.
pub fn exhaustive_first_harmonic(cells: usize, max_intervals: usize) -> HarmonicSearch {
    assert!(cells >= 2 && max_intervals >= 1);
    // e_j = e^{−2iθ_j}; with θ_0 = 0 and θ_K = π both equal to 1
    let grid: Vec<Complex64> = (0..=cells)
        .map(|j| Complex64::from_polar(1.0, -2.0 * PI * j as f64 / cells as f64))
        .collect();

    struct State<'a> {
        grid: &'a [Complex64],
        cells: usize,
        max_breaks: usize,
        stack: Vec<usize>,
        best: f64,
        best_stack: Vec<usize>,
        visited: u64,
    }

    // f₁·(2√π/i) = Σ_k s_k (e_k − e_{k−1}); `acc` holds the sum over closed
    // pieces, `last` the index of the most recent breakpoint.
    fn visit(st: &mut State<'_>, last: usize, acc: Complex64, sign: f64) {
        let closing = acc + sign * (st.grid[st.cells] - st.grid[last]);
        let value = closing.norm_sqr() / (4.0 * PI);
        st.visited += 1;
        if value > st.best {
            st.best = value;
            st.best_stack = st.stack.clone();
        }
        if st.stack.len() == st.max_breaks {
            return;
        }
        for next in (last + 1)..st.cells {
            let piece = sign * (st.grid[next] - st.grid[last]);
            st.stack.push(next);
            visit(st, next, acc + piece, -sign);
            st.stack.pop();
        }
    }

    let mut st = State {
        grid: &grid,
        cells,
        max_breaks: max_intervals - 1,
        stack: Vec::new(),
        best: -1.0,
        best_stack: Vec::new(),
        visited: 0,
    };
    visit(&mut st, 0, Complex64::new(0.0, 0.0), 1.0);

    let breakpoints = st
        .best_stack
        .iter()
        .map(|&j| PI * j as f64 / cells as f64)
        .collect();
    HarmonicSearch {
        best: st.best,
        argmax: SimpleFunctionSpec::new(breakpoints, Outcome::Plus).expect("grid breakpoints"),
        candidates: st.visited,
    }
}

/// Exact maximum of `|f₁|²` over all `2^cells` sign patterns on the grid
/// `jπ/cells`, with no limit on the number of pieces.
///
/// `max_s |Σ s_j z_j| = max_φ Σ_j |Re(e^{−iφ} z_j)|`; the optimal pattern
/// `s_j = sign Re(e^{−iφ} z_j)` only changes where some `Re(e^{−iφ} z_j)`
/// vanishes, so one pattern per arc between those angles covers every
/// candidate.
pub fn sign_pattern_first_harmonic(cells: usize) -> HarmonicSearch {
    assert!(cells >= 2);
    let h = PI / cells as f64;
    let z: Vec<Complex64> = (0..cells)
        .map(|j| {
            let (a, b) = (j as f64 * h, (j + 1) as f64 * h);
            Complex64::i()
                * (Complex64::from_polar(1.0, -2.0 * b) - Complex64::from_polar(1.0, -2.0 * a))
                / (2.0 * PI.sqrt())
        })
        .collect();
    let mut crit: Vec<f64> = z
        .iter()
        .flat_map(|c| {
            let a = c.arg();
            [
                (a + PI / 2.0).rem_euclid(2.0 * PI),
                (a - PI / 2.0).rem_euclid(2.0 * PI),
            ]
        })
        .collect();
    crit.sort_by(f64::total_cmp);
    crit.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let mut best = -1.0;
    let mut best_signs = vec![1.0; cells];
    let mut count = 0;
    for (i, &c) in crit.iter().enumerate() {
        let next = crit.get(i + 1).copied().unwrap_or(crit[0] + 2.0 * PI);
        let phi = 0.5 * (c + next);
        let rot = Complex64::from_polar(1.0, -phi);
        let signs: Vec<f64> = z
            .iter()
            .map(|zj| if (rot * zj).re >= 0.0 { 1.0 } else { -1.0 })
            .collect();
        let total: Complex64 = z.iter().zip(&signs).map(|(zj, s)| s * zj).sum();
        count += 1;
        if total.norm_sqr() > best {
            best = total.norm_sqr();
            best_signs = signs;
        }
    }

    if best_signs[0] < 0.0 {
        for s in &mut best_signs {
            *s = -*s;
        }
    }
    let breakpoints = (1..cells)
        .filter(|&j| best_signs[j] != best_signs[j - 1])
        .map(|j| j as f64 * h)
        .collect();
    HarmonicSearch {
        best,
        argmax: SimpleFunctionSpec::new(breakpoints, Outcome::Plus).expect("grid breakpoints"),
        candidates: count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn small_exhaustive_search_finds_square_wave() {
        let r = exhaustive_first_harmonic(16, 4);
        assert_abs_diff_eq!(r.best, 4.0 / PI, epsilon = 1e-12);
        // a square wave up to rotation: two sign changes per period
        assert_eq!(r.argmax.jumps().len(), 2);
        assert_abs_diff_eq!(first_harmonic_sq(&r.argmax), r.best, epsilon = 1e-12);
        // 1 + 15 + C(15,2) + C(15,3)
        assert_eq!(r.candidates, 1 + 15 + 105 + 455);
    }

    #[test]
    fn sign_patterns_agree_with_enumeration() {
        // on 12 cells every pattern has at most 12 pieces
        let brute = exhaustive_first_harmonic(12, 12);
        let fast = sign_pattern_first_harmonic(12);
        assert_abs_diff_eq!(brute.best, fast.best, epsilon = 1e-12);
        assert_abs_diff_eq!(first_harmonic_sq(&fast.argmax), fast.best, epsilon = 1e-12);
        assert_eq!(brute.candidates, 1 << 11);
    }

    #[test]
    fn odd_grid_stays_below_bound() {
        let r = sign_pattern_first_harmonic(7);
        assert!(r.best < 4.0 / PI);
    }
}
