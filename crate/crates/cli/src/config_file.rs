//! The JSON configuration file: either four general lines in cyclic order
//! or the canonical slope form, never both.

use std::path::Path;

use rectflow::{normalize, Config64, GeneralLine, Input64, NormalizationRecord};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanonicalSpec {
    #[serde(rename = "mA")]
    pub m_a: f64,
    #[serde(rename = "bA")]
    pub b_a: f64,
    #[serde(rename = "mB")]
    pub m_b: f64,
    #[serde(rename = "mC")]
    pub m_c: f64,
    #[serde(rename = "mD")]
    pub m_d: f64,
}

impl From<&Config64> for CanonicalSpec {
    fn from(c: &Config64) -> Self {
        Self {
            m_a: c.m_a,
            b_a: c.b_a,
            m_b: c.m_b,
            m_c: c.m_c,
            m_d: c.m_d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<LineSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalSpec>,
}

/// A configuration ready for analysis, with the transformation that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Loaded {
    pub config: Config64,
    pub record: NormalizationRecord<f64>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn resolve(&self, tol: f64) -> CliResult<Loaded> {
        match (&self.lines, &self.canonical) {
            (Some(lines), None) => {
                if lines.len() != 4 {
                    return Err(CliError::Config(format!("expected 4 lines, found {}", lines.len())));
                }
                let mut parsed = Vec::with_capacity(4);
                for l in lines {
                    parsed.push(GeneralLine::new(l.a, l.b, l.c)?);
                }
                let input = Input64::new([parsed[0], parsed[1], parsed[2], parsed[3]]);
                let (config, record) = normalize(&input, tol)?;
                Ok(Loaded { config, record })
            }
            (None, Some(c)) => {
                let config = Config64::new(c.m_a, c.b_a, c.m_b, c.m_c, c.m_d)?;
                Ok(Loaded {
                    config,
                    record: NormalizationRecord::identity(),
                })
            }
            _ => Err(CliError::Config(
                "exactly one of \"lines\" and \"canonical\" must be present".into(),
            )),
        }
    }
}

pub fn load(path: &Path, tol: f64) -> CliResult<Loaded> {
    let text = std::fs::read_to_string(path)?;
    ConfigFile::parse(&text)?.resolve(tol)
}
