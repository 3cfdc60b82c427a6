//! Angle and settings-grid syntax.
//!
//! An angle is raw radians (`0.3927`) or a multiple of π (`0.125pi`, `pi/8`,
//! `3pi/8`, `-pi`). A list is comma-separated angles and ranges
//! `START..END@COUNT`, which yield `COUNT` points from `START` with `END`
//! excluded. A grid is `ALPHAS:BETAS`.

use std::f64::consts::PI;

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace('π', "pi");
    let bad = || {
        format!("cannot read angle `{s}` (expected radians or a multiple of pi such as 0.125pi or pi/8)")
    };
    let value = if let Some(pos) = t.find("pi") {
        let (head, tail) = (&t[..pos], &t[pos + 2..]);
        let coeff = match head {
            "" | "+" => 1.0,
            "-" => -1.0,
            h => h.trim_end_matches('*').parse::<f64>().map_err(|_| bad())?,
        };
        let div = match tail {
            "" => 1.0,
            d => d
                .strip_prefix('/')
                .ok_or_else(bad)?
                .parse::<f64>()
                .map_err(|_| bad())?,
        };
        coeff * PI / div
    } else {
        t.parse::<f64>().map_err(|_| bad())?
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        if let Some((range, count)) = item.split_once('@') {
            let (a, b) = range
                .split_once("..")
                .ok_or_else(|| format!("range `{item}` must look like START..END@COUNT"))?;
            let (a, b) = (parse_angle(a)?, parse_angle(b)?);
            let n: usize = count
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| format!("range `{item}`: COUNT must be a positive integer"))?;
            out.extend((0..n).map(|i| a + (b - a) * i as f64 / n as f64));
        } else {
            out.push(parse_angle(item)?);
        }
    }
    if out.is_empty() {
        return Err(format!("empty angle list `{s}`"));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl Grid {
    /// Settings pairs: the Cartesian product, or element-wise when `zip`.
    pub fn pairs(&self, zip: bool) -> Result<Vec<(f64, f64)>, String> {
        if zip {
            if self.alphas.len() != self.betas.len() {
                return Err(format!(
                    "--zip needs lists of equal length, got {} and {}",
                    self.alphas.len(),
                    self.betas.len()
                ));
            }
            return Ok(self
                .alphas
                .iter()
                .copied()
                .zip(self.betas.iter().copied())
                .collect());
        }
        Ok(self
            .alphas
            .iter()
            .flat_map(|&a| self.betas.iter().map(move |&b| (a, b)))
            .collect())
    }
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("grid `{s}` must look like ALPHAS:BETAS"))?;
    Ok(Grid {
        alphas: parse_list(a)?,
        betas: parse_list(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("0.125pi").unwrap(), PI / 8.0);
        assert_eq!(parse_angle("pi/8").unwrap(), PI / 8.0);
        assert_eq!(parse_angle("3pi/8").unwrap(), 3.0 * PI / 8.0);
        assert_eq!(parse_angle("-pi").unwrap(), -PI);
        assert_eq!(parse_angle("π").unwrap(), PI);
        assert_eq!(parse_angle("0.5").unwrap(), 0.5);
        for bad in ["", "x", "pi/", "2pi/0", "1e400", "nan"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_list("0,pi/4").unwrap(), vec![0.0, PI / 4.0]);
        let r = parse_list("0..1pi@4").unwrap();
        assert_eq!(r, vec![0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0]);
        assert!(parse_list("0..1@0").is_err());
        assert!(parse_list("0@3").is_err());
    }

    #[test]
    fn grids() {
        let g = parse_grid("0,pi/2:0..pi@2").unwrap();
        assert_eq!(g.pairs(false).unwrap().len(), 4);
        assert_eq!(
            g.pairs(true).unwrap(),
            vec![(0.0, 0.0), (PI / 2.0, PI / 2.0)]
        );
        assert!(parse_grid("0,1").is_err());
        assert!(parse_grid("0,1:0").unwrap().pairs(true).is_err());
    }
}
