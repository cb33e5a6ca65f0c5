use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::rational;

/// Wire form: `{"nvars": N, "terms": [{"e": [..], "c": "num/den"}]}` with
/// terms in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: String,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| TermJson { e: m.exponents().collect(), c: rational::to_string(c) })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Poly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Poly> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.e.len() != j.nvars {
                return Err(Error::Malformed(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    t.e.len(),
                    j.nvars
                )));
            }
            if t.e.iter().any(|&e| e > u16::MAX as u32) {
                return Err(Error::Malformed("exponent too large".into()));
            }
            terms.push((Monomial::from_exponents(&t.e), rational::parse(&t.c)?));
        }
        Ok(Poly::from_terms(j.nvars, terms))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly::try_from(j).map_err(serde::de::Error::custom)
    }
}
