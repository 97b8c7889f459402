//! Truncated bivariate polynomials for the jet-bundle Chern class check.
//!
//! Polynomials live in commuting variables `xi` and `psi` with exact rational
//! coefficients, subject to the truncation `xi^i = 0` for `i > s`. The check
//! expands `d xi . prod_{i=1}^{s-1} (i psi + d xi) . (1/d) xi^(s-1)`: after
//! truncation a single monomial `xi^s psi^(s-1)` survives, with coefficient
//! `(s-1)!` independent of the hypersurface degree `d`.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::Zero;

use crate::rational::Rational;

/// Polynomial in `xi` and `psi`, truncated by `xi^i = 0` for `i > xi_order`.
/// Keys are `(xi exponent, psi exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetPolynomial {
    xi_order: u32,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl JetPolynomial {
    pub fn zero(xi_order: u32) -> Self {
        JetPolynomial {
            xi_order,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(xi_order: u32, xi: u32, psi: u32, coefficient: Rational) -> Self {
        let mut poly = JetPolynomial::zero(xi_order);
        poly.add_term((xi, psi), coefficient);
        poly
    }

    fn add_term(&mut self, (xi, psi): (u32, u32), coefficient: Rational) {
        if xi > self.xi_order || coefficient.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((xi, psi))
            .or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&(xi, psi));
        }
    }

    pub fn mul(&self, other: &JetPolynomial) -> JetPolynomial {
        assert_eq!(self.xi_order, other.xi_order, "mixed truncation orders");
        let mut out = JetPolynomial::zero(self.xi_order);
        for (&(xa, pa), ca) in &self.terms {
            for (&(xb, pb), cb) in &other.terms {
                out.add_term((xa + xb, pa + pb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, xi: u32, psi: u32) -> Rational {
        self.terms
            .get(&(xi, psi))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }
}

/// `d xi . prod_{i=1}^{s-1} (i psi + d xi) . (1/d) xi^(s-1)`, truncated at
/// `xi^s`: the top jet-bundle Chern class paired with the dual hypersurface
/// class, for lines counted with contact order `s` in `P^s` and hypersurface
/// degree `d`.
pub fn jet_contact_product(s: u32, d: u64) -> JetPolynomial {
    assert!(s >= 2, "the expansion needs s >= 2");
    assert!(d >= 1, "hypersurface degree must be positive");
    let degree = Rational::from_integer(BigInt::from(d));
    let mut poly = JetPolynomial::monomial(s, 1, 0, degree.clone());
    for i in 1..s {
        let mut factor = JetPolynomial::monomial(s, 0, 1, Rational::from_integer(i.into()));
        factor.add_term((1, 0), degree.clone());
        poly = poly.mul(&factor);
    }
    let closing = JetPolynomial::monomial(s, s - 1, 0, Rational::from_integer(1.into()) / degree);
    poly.mul(&closing)
}

/// Coefficient of `xi^s psi^(s-1)` in [`jet_contact_product`]; equals
/// `(s-1)!` for every degree `d`. The expansion must leave no other monomial.
pub fn jet_coefficient(s: u32, d: u64) -> Rational {
    let product = jet_contact_product(s, d);
    assert_eq!(
        product.term_count(),
        1,
        "truncated product should have one surviving monomial, got {:?}",
        product
    );
    product.coefficient(s, s - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::factorial;

    #[test]
    fn smallest_case_by_hand() {
        // 5 xi (psi + 5 xi) (1/5) xi  ==  xi^2 psi  after killing xi^3
        assert_eq!(jet_coefficient(2, 5), Rational::from_integer(1.into()));
    }

    #[test]
    fn factorial_coefficients() {
        assert_eq!(jet_coefficient(3, 1), Rational::from_integer(2.into()));
        assert_eq!(jet_coefficient(6, 100), Rational::from_integer(120.into()));
    }

    #[test]
    fn degree_independence_and_single_survivor() {
        for s in 2..=8 {
            for d in [1u64, 5, 100] {
                let product = jet_contact_product(s, d);
                assert_eq!(product.term_count(), 1, "s = {s}, d = {d}");
                assert_eq!(
                    product.coefficient(s, s - 1),
                    Rational::from_integer(factorial(u64::from(s) - 1)),
                    "s = {s}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn truncation_drops_high_xi_powers() {
        let mut poly = JetPolynomial::zero(2);
        poly.add_term((3, 0), Rational::from_integer(7.into()));
        assert_eq!(poly.term_count(), 0);
        let xi = JetPolynomial::monomial(2, 1, 0, Rational::from_integer(1.into()));
        let cube = xi.mul(&xi).mul(&xi);
        assert_eq!(cube.term_count(), 0);
    }

    #[test]
    fn cancelling_terms_are_pruned() {
        let mut poly = JetPolynomial::monomial(4, 1, 1, Rational::from_integer(3.into()));
        poly.add_term((1, 1), Rational::from_integer((-3).into()));
        assert_eq!(poly.term_count(), 0);
    }
}
