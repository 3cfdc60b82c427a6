//! Tabular and document exports of spectra.
//!
//! Tables are comma-separated with a header row and 17 significant digits,
//! so a written table reads back bit-for-bit.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{Convention, FourierSpectrum, Spectrum2D};

/// Formats with 17 significant digits.
pub fn fmt_full(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub n: i64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coefficient2DRecord {
    pub n: i64,
    pub m: i64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub source: String,
    pub max_index: usize,
    pub convention: Convention,
    pub coefficients: Vec<CoefficientRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum2DDocument {
    pub source: String,
    pub max_index: usize,
    pub convention: Convention,
    pub coefficients: Vec<Coefficient2DRecord>,
}

impl FourierSpectrum {
    pub fn to_document(&self, source: impl Into<String>) -> SpectrumDocument {
        SpectrumDocument {
            source: source.into(),
            max_index: self.max_index(),
            convention: self.convention(),
            coefficients: self
                .iter()
                .map(|(n, c)| CoefficientRecord {
                    n,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &SpectrumDocument) -> Result<Self> {
        let Convention::Unitary { period } = doc.convention else {
            return Err(Error::ConventionMismatch(
                "a one-dimensional spectrum needs the unitary convention".into(),
            ));
        };
        Self::from_records(period, &doc.coefficients)
    }

    fn from_records(period: f64, records: &[CoefficientRecord]) -> Result<Self> {
        let m = (records.len() / 2) as i64;
        for (i, r) in records.iter().enumerate() {
            if r.n != i as i64 - m {
                return Err(Error::InvalidArgument(format!(
                    "row {i}: expected n = {}, found {}",
                    i as i64 - m,
                    r.n
                )));
            }
        }
        FourierSpectrum::new(
            period,
            records.iter().map(|r| Complex64::new(r.re, r.im)).collect(),
        )
    }

    /// Writes `n,re,im` rows.
    pub fn write_table<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["n", "re", "im"])?;
        for (n, c) in self.iter() {
            out.write_record([n.to_string(), fmt_full(c.re), fmt_full(c.im)])?;
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a table written by [`FourierSpectrum::write_table`].
    pub fn read_table<R: Read>(r: R, period: f64) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let records = rdr
            .deserialize::<CoefficientRecord>()
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_records(period, &records)
    }
}

impl Spectrum2D {
    pub fn to_document(&self, source: impl Into<String>) -> Spectrum2DDocument {
        Spectrum2DDocument {
            source: source.into(),
            max_index: self.max_index(),
            convention: self.convention(),
            coefficients: self
                .iter()
                .map(|(n, m, c)| Coefficient2DRecord {
                    n,
                    m,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    /// Writes `n,m,re,im` rows.
    pub fn write_table<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["n", "m", "re", "im"])?;
        for (n, m, c) in self.iter() {
            out.write_record([n.to_string(), m.to_string(), fmt_full(c.re), fmt_full(c.im)])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_table<R: Read>(r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let records = rdr
            .deserialize::<Coefficient2DRecord>()
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let width = (records.len() as f64).sqrt().round() as usize;
        if width * width != records.len() || width % 2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "{} rows do not form an odd square window",
                records.len()
            )));
        }
        let k = (width / 2) as i64;
        let lookup = |n: i64, m: i64| {
            let r = &records[((n + k) * width as i64 + (m + k)) as usize];
            Complex64::new(r.re, r.im)
        };
        for (i, r) in records.iter().enumerate() {
            let (n, m) = (i as i64 / width as i64 - k, i as i64 % width as i64 - k);
            if (r.n, r.m) != (n, m) {
                return Err(Error::InvalidArgument(format!(
                    "row {i}: expected (n, m) = ({n}, {m}), found ({}, {})",
                    r.n, r.m
                )));
            }
        }
        Ok(Spectrum2D::from_fn(k as usize, lookup))
    }
}
