//! JSON model documents.
//!
//! ```json
//! {
//!   "description": "square wave",
//!   "pairing": "correlated",
//!   "atoms": [ { "weight": 1.0, "first_sign": 1, "breakpoints": [1.5707963267948966] } ]
//! }
//! ```
//!
//! An atom may list explicit per-piece `signs` instead of (or alongside)
//! `first_sign`; they are checked for alternation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lhv::model::WEIGHT_SUM_TOL;
use crate::lhv::{Atom, LhvModel, Pairing, SimpleFunctionSpec};
use crate::outcome::Outcome;

/// Tolerance on the weight sum when loading a document.
pub const FILE_WEIGHT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default)]
    pub description: String,
    pub pairing: Pairing,
    pub atoms: Vec<AtomRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomRecord {
    pub weight: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_sign: Option<Outcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<Outcome>>,
    #[serde(default)]
    pub breakpoints: Vec<f64>,
}

impl ModelFile {
    pub fn from_model(model: &LhvModel) -> Self {
        ModelFile {
            description: model.description().to_owned(),
            pairing: model.pairing(),
            atoms: model
                .atoms()
                .iter()
                .map(|a| AtomRecord {
                    weight: a.weight,
                    first_sign: Some(a.response.first_sign()),
                    signs: None,
                    breakpoints: a.response.breakpoints().to_vec(),
                })
                .collect(),
        }
    }

    /// Validates every atom and the weight normalization.
    pub fn into_model(self) -> Result<LhvModel> {
        if self.atoms.is_empty() {
            return Err(Error::InvalidModel("atoms: model has no atoms".into()));
        }
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, rec) in self.atoms.into_iter().enumerate() {
            let ctx = |e: Error| match e {
                Error::InvalidModel(m) => Error::InvalidModel(format!("atoms[{i}]: {m}")),
                other => other,
            };
            if !(rec.weight.is_finite() && rec.weight > 0.0) {
                return Err(Error::InvalidModel(format!(
                    "atoms[{i}].weight must be positive and finite, got {}",
                    rec.weight
                )));
            }
            let response = match (rec.first_sign, rec.signs) {
                (_, Some(signs)) if signs.is_empty() => {
                    return Err(Error::InvalidModel(format!("atoms[{i}].signs is empty")))
                }
                (first, Some(signs)) => {
                    if first.is_some_and(|f| f != signs[0]) {
                        return Err(Error::InvalidModel(format!(
                            "atoms[{i}].first_sign disagrees with signs[0]"
                        )));
                    }
                    SimpleFunctionSpec::from_signs(rec.breakpoints, &signs).map_err(ctx)?
                }
                (Some(first), None) => {
                    SimpleFunctionSpec::new(rec.breakpoints, first).map_err(ctx)?
                }
                (None, None) => {
                    return Err(Error::InvalidModel(format!(
                        "atoms[{i}]: missing field `first_sign` (or `signs`)"
                    )))
                }
            };
            atoms.push(Atom {
                weight: rec.weight,
                response,
            });
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > FILE_WEIGHT_TOL {
            return Err(Error::InvalidModel(format!(
                "weights must sum to 1 within {FILE_WEIGHT_TOL:e}, got {total}"
            )));
        }
        if (total - 1.0).abs() <= WEIGHT_SUM_TOL {
            LhvModel::new(atoms, self.pairing, self.description)
        } else {
            LhvModel::normalized(atoms, self.pairing, self.description)
        }
    }
}

impl LhvModel {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<ModelFile>(text)?.into_model()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ModelFile::from_model(self)).expect("serializable")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lhv::aspect_model;
    use crate::rng::RandomStream;
    use proptest::prelude::*;

    #[test]
    fn parses_minimal_document() {
        let m = LhvModel::from_json(
            r#"{"pairing":"anti-correlated","atoms":[{"weight":1,"first_sign":-1,"breakpoints":[]}]}"#,
        )
        .unwrap();
        assert_eq!(m.pairing(), Pairing::AntiCorrelated);
        assert_eq!(m.atoms()[0].response.first_sign(), Outcome::Minus);
    }

    #[test]
    fn reports_offending_field() {
        let bad_pairing = r#"{"pairing":"sideways","atoms":[]}"#;
        let e = LhvModel::from_json(bad_pairing).unwrap_err().to_string();
        assert!(e.contains("sideways"), "{e}");

        let missing = r#"{"atoms":[]}"#;
        let e = LhvModel::from_json(missing).unwrap_err().to_string();
        assert!(e.contains("pairing"), "{e}");

        let unknown =
            r#"{"pairing":"correlated","atoms":[{"weight":1,"first_sign":1,"breaks":[]}]}"#;
        let e = LhvModel::from_json(unknown).unwrap_err().to_string();
        assert!(e.contains("breaks"), "{e}");
    }

    #[test]
    fn validation_errors() {
        let doc = |atoms: &str| format!(r#"{{"pairing":"correlated","atoms":[{atoms}]}}"#);
        let cases = [
            (
                doc(r#"{"weight":1,"signs":[1,1],"breakpoints":[1.0]}"#),
                "alternate",
            ),
            (
                doc(r#"{"weight":1,"first_sign":1,"breakpoints":[2.0,1.0]}"#),
                "increasing",
            ),
            (
                doc(r#"{"weight":1,"first_sign":1,"breakpoints":[4.0]}"#),
                "(0, π)",
            ),
            (doc(r#"{"weight":0.5,"first_sign":1}"#), "sum to 1"),
            (doc(r#"{"weight":-1,"first_sign":1}"#), "positive"),
            (doc(r#"{"weight":1}"#), "first_sign"),
            (doc(""), "no atoms"),
        ];
        for (text, needle) in cases {
            let e = LhvModel::from_json(&text).unwrap_err();
            assert!(matches!(e, Error::InvalidModel(_)), "{e}");
            assert!(e.to_string().contains(needle), "{e} lacks {needle}");
        }
    }

    #[test]
    fn accepts_weights_within_file_tolerance() {
        let text = r#"{"pairing":"correlated","atoms":[
            {"weight":0.5000000001,"first_sign":1},
            {"weight":0.5,"first_sign":-1,"breakpoints":[1.0]}]}"#;
        let m = LhvModel::from_json(text).unwrap();
        let total: f64 = m.atoms().iter().map(|a| a.weight).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn aspect_round_trip() {
        let m = aspect_model(64);
        assert_eq!(LhvModel::from_json(&m.to_json()).unwrap(), m);
    }

    proptest! {
        #[test]
        fn random_models_round_trip(seed in any::<u64>()) {
            let mut rng = RandomStream::new(seed);
            let m = LhvModel::random(&mut rng, 8, 12, Pairing::Correlated);
            prop_assert_eq!(LhvModel::from_json(&m.to_json()).unwrap(), m);
        }
    }
}
