//! Serializable result shapes shared by the command-line tool and the test
//! suites. All JSON is compact, field order is fixed, and rationals travel as
//! `num/den` strings, so equal inputs produce byte-identical reports.

use serde::{Deserialize, Serialize};

use crate::class::CurveClass;
use crate::engine::{ContributionReport, OcTable};
use crate::error::Error;
use crate::partitions::subclasses;
use crate::rational::{format_rational, is_integral, Rational};
use crate::space::AmbientSpace;
use crate::verify::Check;

/// How a space appears in reports: factor dimensions for products, pairing
/// coefficients for generic spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRepr {
    Dims(Vec<u32>),
    Generic { chern: Vec<u64> },
}

impl From<&AmbientSpace> for SpaceRepr {
    fn from(space: &AmbientSpace) -> Self {
        match space.dims() {
            Some(dims) => SpaceRepr::Dims(dims.to_vec()),
            None => SpaceRepr::Generic {
                chern: space.chern_coefficients(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub space: SpaceRepr,
    pub beta: Vec<u32>,
    pub oc: String,
    pub integral: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zero_component: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cache_hits: Option<u64>,
}

impl ComputeReport {
    pub fn new(space: &AmbientSpace, beta: &CurveClass, value: &Rational) -> Self {
        ComputeReport {
            space: space.into(),
            beta: beta.coeffs().to_vec(),
            oc: format_rational(value),
            integral: is_integral(value),
            zero_component: beta.has_zero_component().then_some(true),
            cache_hits: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwReport {
    pub space: SpaceRepr,
    pub beta: Vec<u32>,
    pub gw: String,
}

impl GwReport {
    pub fn new(space: &AmbientSpace, beta: &CurveClass, value: &Rational) -> Self {
        GwReport {
            space: space.into(),
            beta: beta.coeffs().to_vec(),
            gw: format_rational(value),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionRepr {
    pub partition: String,
    pub weight: String,
    pub product: String,
    pub total: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownReport {
    pub space: SpaceRepr,
    pub beta: Vec<u32>,
    pub contact_constant: u64,
    pub leading: String,
    pub corrections: Vec<CorrectionRepr>,
    pub result: String,
    pub integral: bool,
}

impl BreakdownReport {
    pub fn new(space: &AmbientSpace, breakdown: &ContributionReport) -> Self {
        BreakdownReport {
            space: space.into(),
            beta: breakdown.beta.coeffs().to_vec(),
            contact_constant: breakdown.contact_constant,
            leading: format_rational(&breakdown.leading_term),
            corrections: breakdown
                .corrections
                .iter()
                .map(|c| CorrectionRepr {
                    partition: c.partition.to_string(),
                    weight: format_rational(&c.weight),
                    product: format_rational(&c.product_term),
                    total: format_rational(&c.total),
                })
                .collect(),
            result: format_rational(&breakdown.result),
            integral: is_integral(&breakdown.result),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        VerifyReport {
            checks,
            passed,
            failed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// CSV rows `beta_1,...,beta_t,oc`, one per subclass of `max_beta` in the
/// subclass order.
pub fn table_csv(table: &OcTable, max_beta: &CurveClass) -> Result<String, Error> {
    let mut out = String::new();
    for i in 1..=max_beta.len() {
        out.push_str(&format!("beta_{i},"));
    }
    out.push_str("oc\n");
    for class in subclasses(max_beta) {
        let value = table
            .get(&class)
            .ok_or_else(|| Error::MissingCount(class.clone()))?;
        out.push_str(&format!("{class},{}\n", format_rational(value)));
    }
    Ok(out)
}

/// Plain-text table: one `class<TAB>value` line per subclass.
pub fn table_text(table: &OcTable, max_beta: &CurveClass) -> Result<String, Error> {
    let mut out = String::new();
    for class in subclasses(max_beta) {
        let value = table
            .get(&class)
            .ok_or_else(|| Error::MissingCount(class.clone()))?;
        out.push_str(&format!("{class}\t{}\n", format_rational(value)));
    }
    Ok(out)
}
