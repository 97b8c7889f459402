//! Effective curve classes as vectors of non-negative integers.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An effective 1-cycle class `beta = (beta_1, ..., beta_t)` on a space with
/// `t` factors.
///
/// The derived `Ord` is lexicographic on the coefficients; it is the total
/// order used for canonical partition forms and memo-table keys. The geometric
/// partial order (componentwise comparison) is [`CurveClass::componentwise_le`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    coeffs: Vec<u32>,
}

impl CurveClass {
    pub fn new(coeffs: Vec<u32>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyClass);
        }
        Ok(CurveClass { coeffs })
    }

    pub(crate) fn zero(len: usize) -> Self {
        CurveClass {
            coeffs: vec![0; len],
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Sum of the coefficients.
    pub fn total_degree(&self) -> u64 {
        self.coeffs.iter().map(|&c| u64::from(c)).sum()
    }

    /// True when the class is nonzero but vanishes in some factor.
    pub fn has_zero_component(&self) -> bool {
        !self.is_zero() && self.coeffs.contains(&0)
    }

    /// The geometric partial order: `self <= other` in every component.
    pub fn componentwise_le(&self, other: &CurveClass) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| a <= b)
    }

    /// Componentwise difference, or `None` if any component would go negative.
    pub fn checked_sub(&self, other: &CurveClass) -> Option<CurveClass> {
        if !other.componentwise_le(self) {
            return None;
        }
        Some(CurveClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let malformed = |reason: &str| Error::MalformedClass {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        if s.trim().is_empty() {
            return Err(malformed("empty"));
        }
        let coeffs = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| malformed(&format!("bad coefficient {tok:?}: {e}")))
            })
            .collect::<Result<Vec<u32>, Error>>()?;
        CurveClass::new(coeffs)
    }
}
