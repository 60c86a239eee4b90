//! JSON instance configs.
//!
//! ```json
//! { "n": 4, "gamma": 1, "delta": [[1, 3, 3], [3, 1, 3], [3, 3, 1]], "field": "Q" }
//! ```
//!
//! Optional keys: `u` (exponent matrix for `hilbert`), `gens_a`, `gens_b`
//! (polynomials in the text format) and `weights` (for `intersect`).
//! Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kuroda::KurodaInstance;
use crate::laurent::{Field, LaurentPoly};

/// `(gens_a, gens_b, weights)` from a config.
pub type GeneratorSets = (Vec<LaurentPoly>, Vec<LaurentPoly>, Vec<i64>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Gamma {
    One(i64),
    Many(Vec<i64>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Gamma>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens_a: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens_b: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    /// Compact canonical JSON, for report headers.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// The coefficient field: `flag` wins over the config's `field` key.
    pub fn field(&self, flag: Option<&str>) -> Result<Field> {
        match flag.or(self.field.as_deref()) {
            Some(s) => s.parse(),
            None => Ok(Field::Rational),
        }
    }

    pub fn has_instance(&self) -> bool {
        self.delta.is_some()
    }

    /// The Kuroda instance described by `n`, `gamma`, `delta`.
    pub fn instance(&self, field: Field) -> Result<KurodaInstance> {
        let delta = self
            .delta
            .as_ref()
            .ok_or_else(|| Error::Usage("config has no delta".into()))?;
        let n = self.n.unwrap_or(delta.len() + 1);
        let gamma = match &self.gamma {
            None => vec![1],
            Some(Gamma::One(g)) => vec![*g],
            Some(Gamma::Many(g)) => g.clone(),
        };
        KurodaInstance::new(n, &gamma, delta, field)
    }

    /// `gens_a`, `gens_b` and `weights`, parsed over `field`.
    pub fn generator_sets(&self, field: Field) -> Result<Option<GeneratorSets>> {
        let (Some(a), Some(b)) = (&self.gens_a, &self.gens_b) else {
            return Ok(None);
        };
        let weights = self
            .weights
            .clone()
            .ok_or_else(|| Error::Usage("gens_a/gens_b need weights".into()))?;
        let nvars = weights.len();
        let parse = |v: &Vec<String>| -> Result<Vec<LaurentPoly>> {
            v.iter()
                .map(|s| LaurentPoly::from_text(s, nvars, field))
                .collect()
        };
        Ok(Some((parse(a)?, parse(b)?, weights)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_instances() {
        let c = Config::parse(r#"{"n": 3, "gamma": 1, "delta": [[3, 1], [1, 1]]}"#).unwrap();
        let inst = c.instance(Field::Rational).unwrap();
        assert_eq!(inst.det_t(), 2.into());
        let c = Config::parse(
            r#"{"gamma": [1, 1, 1], "delta": [[1,1,1],[1,1,1],[1,1,1]], "field": "Fp:5"}"#,
        )
        .unwrap();
        assert_eq!(c.field(None).unwrap(), Field::Prime(5));
        assert_eq!(c.field(Some("Q")).unwrap(), Field::Rational);
        assert_eq!(c.instance(Field::Rational).unwrap().n(), 4);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_delta() {
        assert!(matches!(
            Config::parse(r#"{"dleta": []}"#),
            Err(Error::Parse(_))
        ));
        let c = Config::parse(r#"{"n": 3, "delta": [[0, 1], [1, 1]]}"#).unwrap();
        assert!(matches!(
            c.instance(Field::Rational),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn generator_sets() {
        let c = Config::parse(
            r#"{"gens_a": ["1 * X1^1 X2^1"], "gens_b": ["1 * X1^1 X2^0", "1 * X1^0 X2^1"], "weights": [1, 1]}"#,
        )
        .unwrap();
        let (a, b, w) = c.generator_sets(Field::Rational).unwrap().unwrap();
        assert_eq!((a.len(), b.len(), w), (1, 2, vec![1, 1]));
    }
}
