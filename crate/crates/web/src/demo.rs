use std::f64::consts::PI;

use bell_fourier::fourier::{coefficients_2d, coefficients_simple, partial_sum};
use bell_fourier::lhv::{
    aspect_correlation_closed, aspect_model, lhv_correlation_exact, SimpleFunctionSpec,
};
use bell_fourier::quantum::{singlet_correlation, Singlet};
use bell_fourier::theorem::{chsh_score, moment_matrix};
use bell_fourier::Outcome;

// keep the page responsive
const MAX_POINTS: usize = 20_000;
const MAX_ATOMS: usize = 4096;
const MAX_WINDOW: usize = 512;

fn check(name: &str, v: usize, max: usize) -> Result<(), String> {
    if v == 0 || v > max {
        return Err(format!("{name} must be in 1..={max}, got {v}"));
    }
    Ok(())
}

pub fn correlation_curves(points: usize, atoms: usize) -> Result<Vec<f64>, String> {
    check("points", points, MAX_POINTS)?;
    check("atoms", atoms, MAX_ATOMS)?;
    let model = aspect_model(atoms);
    let mut out = Vec::with_capacity(4 * points);
    for i in 0..points {
        let d = i as f64 * PI / points as f64;
        out.extend([
            d,
            singlet_correlation(0.0, d),
            aspect_correlation_closed(0.0, d),
            lhv_correlation_exact(&model, 0.0, d),
        ]);
    }
    Ok(out)
}

pub fn reconstruction(pieces: usize, window: usize, points: usize) -> Result<Vec<f64>, String> {
    check("pieces", pieces, 64)?;
    check("window", window, MAX_WINDOW)?;
    check("points", points, MAX_POINTS)?;
    let spec =
        SimpleFunctionSpec::equal_intervals(pieces, Outcome::Plus).map_err(|e| e.to_string())?;
    let s = coefficients_simple(&spec, window);
    let mut out = Vec::with_capacity(3 * points);
    for i in 0..points {
        let t = i as f64 * PI / points as f64;
        out.extend([
            t,
            spec.eval(t).value(),
            partial_sum(&s, t).map_err(|e| e.to_string())?,
        ]);
    }
    Ok(out)
}

pub fn schmidt_weights(window: usize, atoms: usize) -> Result<Vec<f64>, String> {
    check("window", window, 64)?;
    check("atoms", atoms, MAX_ATOMS)?;
    // a trigonometric polynomial: a small grid is exact
    let q = coefficients_2d(&Singlet, window, 8 * window + 8).map_err(|e| e.to_string())?;
    let m = moment_matrix(&aspect_model(atoms), window);
    let k = window as i64;
    Ok((-k..=k)
        .flat_map(|n| [n as f64, q.get(n, -n).norm(), m.get(n, -n).norm()])
        .collect())
}

pub fn chsh_pair(angles: [f64; 4], atoms: usize) -> Result<Vec<f64>, String> {
    check("atoms", atoms, MAX_ATOMS)?;
    if angles.iter().any(|a| !a.is_finite()) {
        return Err("angles must be finite".into());
    }
    let [a, a2, b, b2] = angles;
    let model = aspect_model(atoms);
    Ok(vec![
        chsh_score(&Singlet, a, a2, b, b2),
        chsh_score(&model, a, a2, b, b2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves() {
        let c = correlation_curves(8, 256).unwrap();
        assert_eq!(c.len(), 32);
        // δ = π/4: quantum and triangle both vanish
        assert!(c[4 * 2 + 1].abs() < 1e-15 && c[4 * 2 + 2] == 0.0);
        for row in c.chunks(4) {
            assert!((row[2] - row[3]).abs() <= 4.0 / 256.0);
        }
        assert!(correlation_curves(0, 4).is_err());
    }

    #[test]
    fn square_wave_reconstruction() {
        let r = reconstruction(2, 64, 16).unwrap();
        assert_eq!(r.len(), 48);
        assert!(r[2].abs() < 1e-12); // jump at 0: midpoint
        assert!((r[3 * 4 + 2] - 1.0).abs() < 0.05); // θ = π/4
        assert!(reconstruction(2, 0, 16).is_err());
    }

    #[test]
    fn weights() {
        let w = schmidt_weights(3, 1024).unwrap();
        let row = |n: i64| &w[3 * (n + 3) as usize..3 * (n + 4) as usize];
        assert!((row(1)[1] - PI / 2.0).abs() < 1e-12);
        assert!(row(2)[1] < 1e-12 && row(0)[1] < 1e-12);
        assert!((row(1)[2] - 4.0 / PI).abs() < 1e-12);
        assert!((row(3)[2] - 4.0 / (9.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn chsh_defaults() {
        let s = chsh_pair([0.0, PI / 4.0, PI / 8.0, 3.0 * PI / 8.0], 1024).unwrap();
        assert!((s[0].abs() - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!((s[1].abs() - 2.0).abs() < 1e-12);
        assert!(chsh_pair([f64::NAN, 0.0, 0.0, 0.0], 4).is_err());
    }
}
