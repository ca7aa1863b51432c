use serde::{Deserialize, Serialize};

use super::{QSeries, TextCoefficient};
use crate::error::{Error, Result};

/// Structured text form of a series. Coefficients are strings so that big
/// integers and rationals survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub valuation: i64,
    pub precision: i64,
    pub coefficients: Vec<String>,
}

impl<C: TextCoefficient> QSeries<C> {
    pub fn to_document(&self) -> SeriesDocument {
        SeriesDocument {
            valuation: self.valuation,
            precision: self.precision,
            coefficients: self.coeffs.iter().map(|c| c.to_text()).collect(),
        }
    }

    pub fn from_document(doc: &SeriesDocument) -> Result<Self> {
        if !doc.coefficients.is_empty()
            && doc.valuation + doc.coefficients.len() as i64 != doc.precision
        {
            return Err(Error::Parse(format!(
                "{} coefficients starting at q^{} do not reach precision {}",
                doc.coefficients.len(),
                doc.valuation,
                doc.precision
            )));
        }
        let coeffs = doc
            .coefficients
            .iter()
            .map(|s| C::parse_text(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(doc.valuation, coeffs, doc.precision))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("series document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(s)?)
    }
}

impl<C: TextCoefficient> std::fmt::Display for QSeries<C> {
    /// Human-readable form, e.g. `q^-1 + 24 + 324*q + O(q^2)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = self.valuation + i as i64;
            let text = c.to_text();
            let coeff = if text.contains(' ') { format!("({text})") } else { text };
            let term = match n {
                0 => coeff,
                1 if coeff == "1" => "q".to_string(),
                1 => format!("{coeff}*q"),
                _ if coeff == "1" => format!("q^{n}"),
                _ => format!("{coeff}*q^{n}"),
            };
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{term}")?;
            first = false;
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.precision)
    }
}
