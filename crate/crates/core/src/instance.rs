//! JSON instance files.

use serde::{Deserialize, Serialize};

use crate::arith::{PrimeField, DEFAULT_PRIME};
use crate::config::RING_CAP;
use crate::error::{Error, Result};
use crate::module::Presentation;
use crate::ring::{parse_poly, RingSpec};

fn default_p() -> u32 {
    DEFAULT_PRIME
}

/// One instance: `M = coker(phi)` over `Q / (f)`, `Q = k[[variables]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub label: String,
    #[serde(default = "default_p")]
    pub p: u32,
    pub variables: Vec<String>,
    pub f: String,
    /// Row-major `t x t` matrix of expressions; columns are relations.
    pub phi: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("instance JSON, line {} column {}: {e}", e.line(), e.column()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Parse every expression and validate the presentation. `p` overrides
    /// the file's prime when given.
    pub fn to_presentation(&self, p: Option<u32>) -> Result<Presentation> {
        let field = PrimeField::new(p.unwrap_or(self.p))?;
        let spec = RingSpec::new(self.variables.clone(), field, RING_CAP)?;
        let t = self.phi.len();
        if self.phi.iter().any(|row| row.len() != t) {
            return Err(Error::validation(format!("phi must be a square matrix, found {t} rows of unequal length")));
        }
        let located = |what: String, e: Error| match e {
            Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("{what}: {msg}") },
            Error::UnknownIdentifier { name, pos } => Error::Parse {
                pos,
                msg: format!("{what}: unknown identifier `{name}`"),
            },
            other => other,
        };
        let f = parse_poly(&self.f, &spec).map_err(|e| located("f".into(), e))?;
        let mut phi = Vec::with_capacity(t);
        for (i, row) in self.phi.iter().enumerate() {
            let mut out = Vec::with_capacity(t);
            for (j, s) in row.iter().enumerate() {
                out.push(parse_poly(s, &spec).map_err(|e| located(format!("phi[{i}][{j}]"), e))?);
            }
            phi.push(out);
        }
        Presentation::new(&spec, phi, f, self.label.clone())
    }
}
