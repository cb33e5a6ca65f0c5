//! Parametric solutions and their certificates, with the JSON wire format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    /// `F(x) = 0` identically.
    Zero,
    /// `F(x) = q` identically.
    Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateMethod {
    Symbolic,
    Randomized,
}

/// Evidence that a tuple satisfies its defining identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub q: Option<Rational>,
    pub method: CertificateMethod,
    /// Number of exact evaluations (zero for symbolic certificates).
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Every sampled parameter point, for randomized certificates.
    #[serde(default, skip_serializing_if = "Vec::is_empty", with = "points")]
    pub points: Vec<Vec<Rational>>,
}

impl Certificate {
    pub fn target(&self) -> Rational {
        self.q.clone().unwrap_or_default()
    }
}

/// A tuple of polynomials (over an optional common denominator) in named
/// free parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametricSolution {
    /// Number of form variables, i.e. the tuple length.
    pub nvars: usize,
    pub params: Vec<String>,
    pub solutions: Vec<Poly>,
    /// Common denominator; absent for polynomial solutions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Poly>,
    /// Parameter values where the construction divided by zero.
    pub excluded_locus: Vec<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub zero_sum: bool,
}

impl ParametricSolution {
    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.params.iter().position(|p| p == name).ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let sol: ParametricSolution = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        sol.validate()?;
        Ok(sol)
    }

    fn validate(&self) -> Result<()> {
        if self.solutions.len() != self.nvars {
            return Err(Error::Malformed(format!("{} solutions for {} variables", self.solutions.len(), self.nvars)));
        }
        let k = self.params.len();
        for p in self.solutions.iter().chain(&self.excluded_locus).chain(&self.denominator) {
            if p.nvars() != k {
                return Err(Error::Malformed(format!("polynomial over {} variables, {} params declared", p.nvars(), k)));
            }
        }
        Ok(())
    }

    /// Exact values of the tuple at a parameter point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        let den = match &self.denominator {
            Some(d) => d.evaluate(point)?,
            None => rational::int(1),
        };
        if num_traits::Zero::is_zero(&den) {
            return Err(Error::ExcludedLocusHit("denominator".into()));
        }
        self.solutions.iter().map(|p| Ok(p.evaluate(point)? / &den)).collect()
    }
}

mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&rational::to_string(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s: Option<String> = Option::deserialize(d)?;
        s.map(|s| rational::parse(&s).map_err(serde::de::Error::custom)).transpose()
    }
}

mod points {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(pts: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<Vec<String>> = pts.iter().map(|p| p.iter().map(rational::to_string).collect()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let strs: Vec<Vec<String>> = Vec::deserialize(d)?;
        strs.into_iter()
            .map(|p| p.iter().map(|s| rational::parse(s).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}
