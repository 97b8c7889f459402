//! Ambient spaces and the two geometric scalars the recursion consumes.
//!
//! A space is either a product of projective spaces `P^{s_1} x ... x P^{s_t}`,
//! for which everything is built in, or a generic homogeneous space described
//! by its anticanonical pairing coefficients together with a table of
//! one-point invariants. In both cases the recursion only ever reads two
//! numbers from the geometry:
//!
//! - the anticanonical degree `c_1(X) . beta = sum_i c_i beta_i`
//!   (with `c_i = s_i + 1` for products), and
//! - the one-point invariant `I_beta(pt)`, which equals
//!   `prod_i 1/(beta_i!)^(s_i+1)` on a product of projective spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num::bigint::BigInt;
use num::traits::Pow;
use num::One;
use serde::Deserialize;

use crate::class::CurveClass;
use crate::combinatorics::factorial;
use crate::error::Error;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Product {
        dims: Vec<u32>,
    },
    Generic {
        chern: Vec<u64>,
        invariants: BTreeMap<CurveClass, Rational>,
    },
}

/// The target space `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientSpace {
    kind: Kind,
}

impl AmbientSpace {
    /// A product of projective spaces with the given factor dimensions.
    pub fn product(dims: Vec<u32>) -> Result<Self, Error> {
        if dims.is_empty() {
            return Err(Error::EmptySpace);
        }
        if let Some(&bad) = dims.iter().find(|&&s| s < 1) {
            return Err(Error::InvalidDimension(bad));
        }
        Ok(AmbientSpace {
            kind: Kind::Product { dims },
        })
    }

    /// A generic homogeneous space given by its anticanonical pairing
    /// coefficients and a table of one-point invariants.
    pub fn generic(
        chern: Vec<u64>,
        invariants: BTreeMap<CurveClass, Rational>,
    ) -> Result<Self, Error> {
        if chern.is_empty() {
            return Err(Error::EmptySpace);
        }
        if let Some(&bad) = chern.iter().find(|&&c| c < 1) {
            return Err(Error::InvalidChernCoefficient(bad));
        }
        for class in invariants.keys() {
            if class.len() != chern.len() {
                return Err(Error::DimensionMismatch {
                    expected: chern.len(),
                    found: class.clone(),
                });
            }
            if class.is_zero() {
                return Err(Error::ZeroClass);
            }
        }
        Ok(AmbientSpace {
            kind: Kind::Generic { chern, invariants },
        })
    }

    /// Number of factors `t`; curve classes for this space have this length.
    pub fn factor_count(&self) -> usize {
        match &self.kind {
            Kind::Product { dims } => dims.len(),
            Kind::Generic { chern, .. } => chern.len(),
        }
    }

    /// Factor dimensions, when this is a product of projective spaces.
    pub fn dims(&self) -> Option<&[u32]> {
        match &self.kind {
            Kind::Product { dims } => Some(dims),
            Kind::Generic { .. } => None,
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.kind, Kind::Product { .. })
    }

    /// The pairing coefficients `c_i`, derived as `s_i + 1` for products.
    pub fn chern_coefficients(&self) -> Vec<u64> {
        match &self.kind {
            Kind::Product { dims } => dims.iter().map(|&s| u64::from(s) + 1).collect(),
            Kind::Generic { chern, .. } => chern.clone(),
        }
    }

    pub(crate) fn check_class(&self, beta: &CurveClass) -> Result<(), Error> {
        if beta.len() != self.factor_count() {
            return Err(Error::DimensionMismatch {
                expected: self.factor_count(),
                found: beta.clone(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_nonzero_class(&self, beta: &CurveClass) -> Result<(), Error> {
        self.check_class(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroClass);
        }
        Ok(())
    }

    /// The anticanonical degree `c_1(X) . beta = sum_i c_i beta_i`.
    pub fn anticanonical_degree(&self, beta: &CurveClass) -> Result<u64, Error> {
        self.check_nonzero_class(beta)?;
        let mut total: u128 = 0;
        for (&c, &b) in self.chern_coefficients().iter().zip(beta.coeffs()) {
            total += u128::from(c) * u128::from(b);
        }
        u64::try_from(total).map_err(|_| Error::DegreeOverflow(beta.clone()))
    }

    /// The constant `c_1(X) . beta - 2` governing the recursion: osculating
    /// curves of class `beta` have contact order at least this plus one.
    ///
    /// Always at least `-1`; non-negative whenever every pairing coefficient
    /// is at least 2 (so for every product of projective spaces) or the total
    /// degree of `beta` is at least 2.
    pub fn contact_constant(&self, beta: &CurveClass) -> Result<i64, Error> {
        let degree = self.anticanonical_degree(beta)?;
        let degree = i64::try_from(degree).map_err(|_| Error::DegreeOverflow(beta.clone()))?;
        Ok(degree - 2)
    }

    /// The one-point invariant `I_beta(pt)`.
    ///
    /// For products this is `prod_i 1/(beta_i!)^(s_i+1)`, with `0! = 1` making
    /// the product total over classes with vanishing components. For generic
    /// spaces the value is looked up in the supplied table.
    pub fn one_point_invariant(&self, beta: &CurveClass) -> Result<Rational, Error> {
        self.check_nonzero_class(beta)?;
        match &self.kind {
            Kind::Product { dims } => {
                let mut denom = BigInt::one();
                for (&s, &b) in dims.iter().zip(beta.coeffs()) {
                    denom *= factorial(u64::from(b)).pow(s + 1);
                }
                Ok(Rational::new(BigInt::one(), denom))
            }
            Kind::Generic { invariants, .. } => invariants
                .get(beta)
                .cloned()
                .ok_or_else(|| Error::InvariantUnavailable(beta.clone())),
        }
    }

    /// Parse a generic-space descriptor:
    /// `{"chern": [c_1,...,c_t], "invariants": {"b1,...,bt": "num/den", ...}}`.
    pub fn from_descriptor_json(text: &str) -> Result<Self, Error> {
        let file: DescriptorFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        let mut invariants = BTreeMap::new();
        for (key, value) in &file.invariants {
            let class: CurveClass = key
                .parse()
                .map_err(|e| Error::InvalidDescriptor(format!("key {key:?}: {e}")))?;
            let rational = parse_rational(value)
                .map_err(|e| Error::InvalidDescriptor(format!("value for {key:?}: {e}")))?;
            invariants.insert(class, rational);
        }
        AmbientSpace::generic(file.chern, invariants)
    }

    pub fn load_descriptor(path: &Path) -> Result<Self, Error> {
        Self::from_descriptor_json(&std::fs::read_to_string(path)?)
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Product { dims } => {
                let mut first = true;
                for s in dims {
                    if !first {
                        write!(f, " x ")?;
                    }
                    write!(f, "P^{s}")?;
                    first = false;
                }
                Ok(())
            }
            Kind::Generic { chern, .. } => {
                write!(f, "generic(c=")?;
                let mut first = true;
                for c in chern {
                    write!(f, "{}{c}", if first { "" } else { "," })?;
                    first = false;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Deserialize)]
struct DescriptorFile {
    chern: Vec<u64>,
    invariants: BTreeMap<String, String>,
}
