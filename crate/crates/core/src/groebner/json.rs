//! JSON exchange format for ideals.
//!
//! ```json
//! {"vars": ["x1", "x2"], "field": "Q", "gens": ["x2 - x1^2"], "codim": 1}
//! ```
//!
//! `field` is `"Q"` or `"Fp:<prime>"`.

use serde::{Deserialize, Serialize};

use super::ideal::IdealSpec;
use crate::error::{Error, Result};
use crate::exactmath::{Field, MonomialOrder, PolyRing, PrimeField, Rationals};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: Vec<String>,
    #[serde(default = "default_field")]
    pub field: String,
    pub gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<usize>,
}

fn default_field() -> String {
    "Q".to_string()
}

/// An ideal over whichever coefficient field the file names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyIdeal {
    Rational(IdealSpec<Rationals>),
    Modular(IdealSpec<PrimeField>),
}

/// Parses a field descriptor: `Q` or `Fp:<prime>`.
pub fn parse_field(desc: &str) -> Result<Option<PrimeField>> {
    let d = desc.trim();
    if d == "Q" {
        return Ok(None);
    }
    match d.strip_prefix("Fp:") {
        Some(p) => {
            let p: u32 = p.trim().parse().map_err(|_| Error::InvalidInput(format!("bad prime in field {d:?}")))?;
            Ok(Some(PrimeField::new(p)?))
        }
        None => Err(Error::InvalidInput(format!("unknown field {d:?}, expected Q or Fp:<prime>"))),
    }
}

impl IdealFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column().saturating_sub(1), msg: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn build(&self) -> Result<AnyIdeal> {
        Ok(match parse_field(&self.field)? {
            None => AnyIdeal::Rational(self.build_over(Rationals)?),
            Some(f) => AnyIdeal::Modular(self.build_over(f)?),
        })
    }

    pub fn build_over<K: Field>(&self, field: K) -> Result<IdealSpec<K>> {
        let ring = PolyRing::new(field, &self.vars, MonomialOrder::GrevLex)?;
        Ok(IdealSpec::parse(&ring, &self.gens)?.with_codim(self.codim))
    }

    pub fn from_ideal<K: Field>(ideal: &IdealSpec<K>) -> Self {
        IdealFile {
            vars: ideal.ring().vars().to_vec(),
            field: ideal.ring().field().descriptor(),
            gens: ideal.generators().iter().map(|g| g.to_string()).collect(),
            codim: ideal.codim(),
        }
    }
}
