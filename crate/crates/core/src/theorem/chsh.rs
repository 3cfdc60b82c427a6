use std::f64::consts::PI;

use crate::correlation::Correlation;

/// `(a, a′, b, b′) = (0, π/4, π/8, 3π/8)`.
pub const STANDARD_CHSH_ANGLES: [f64; 4] = [0.0, PI / 4.0, PI / 8.0, 3.0 * PI / 8.0];

/// `|C(a, b) − C(a, b′) + C(a′, b) + C(a′, b′)|`.
pub fn chsh_score<C: Correlation + ?Sized>(c: &C, a: f64, a2: f64, b: f64, b2: f64) -> f64 {
    (c.eval(a, b) - c.eval(a, b2) + c.eval(a2, b) + c.eval(a2, b2)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lhv::{AspectTriangle, LhvModel, Pairing};
    use crate::quantum::{singlet_correlation, Singlet};
    use crate::rng::RandomStream;
    use approx::assert_abs_diff_eq;

    #[test]
    fn standard_angles() {
        let [a, a2, b, b2] = STANDARD_CHSH_ANGLES;
        let direct = (singlet_correlation(a, b) - singlet_correlation(a, b2)
            + singlet_correlation(a2, b)
            + singlet_correlation(a2, b2))
        .abs();
        let q = chsh_score(&Singlet, a, a2, b, b2);
        assert_eq!(q, direct);
        assert_abs_diff_eq!(q, 2.0 * 2f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            chsh_score(&AspectTriangle, a, a2, b, b2),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn single_atom_bound() {
        let mut rng = RandomStream::new(12);
        let [a, a2, b, b2] = STANDARD_CHSH_ANGLES;
        for _ in 0..200 {
            let m = LhvModel::random(&mut rng, 1, 10, Pairing::Correlated);
            let f = &m.atoms()[0].response;
            // exhaustive check over the atom's four response values
            let (x, x2, y, y2) = (
                f.eval(a).value(),
                f.eval(a2).value(),
                f.eval(b).value(),
                f.eval(b2).value(),
            );
            let s = (x * y - x * y2 + x2 * y + x2 * y2).abs();
            assert!(s == 2.0);
            assert_eq!(chsh_score(&m, a, a2, b, b2), s);
        }
    }

    #[test]
    fn degenerate_angles() {
        let s = chsh_score(&Singlet, 0.3, 0.3, 1.0, 1.0);
        assert_abs_diff_eq!(
            s,
            (2.0 * singlet_correlation(0.3, 1.0)).abs(),
            epsilon = 1e-15
        );
        assert!(s <= 2.0);
    }
}
