//! Ordered-tuple brute force for osculating counts.
//!
//! Evaluates the recursion in its raw form: the correction sum runs over
//! every ordered tuple `(beta_1, ..., beta_r)` of nonzero classes summing to
//! `beta`, each weighted by `C!/((C+2-r)! r!)`, and subcounts are recomputed
//! from scratch on every use. Exponentially slower than the engine on
//! purpose; it exists only to fail independently.

use num::bigint::BigInt;
use num::One;

use crate::class::CurveClass;
use crate::combinatorics::factorial;
use crate::error::Error;
use crate::partitions::subclasses;
use crate::rational::Rational;
use crate::space::AmbientSpace;

/// Default cap on the total degree of the class handed to the brute force.
pub const DEFAULT_DEGREE_CAP: u64 = 6;

/// Exact osculating count by direct recursion over ordered tuples.
pub fn oc_bruteforce(
    space: &AmbientSpace,
    beta: &CurveClass,
    degree_cap: u64,
) -> Result<Rational, Error> {
    space.check_nonzero_class(beta)?;
    let degree = beta.total_degree();
    if degree > degree_cap {
        return Err(Error::BruteforceCapExceeded {
            class: beta.clone(),
            cap: degree_cap,
            degree,
        });
    }
    evaluate(space, beta)
}

fn evaluate(space: &AmbientSpace, beta: &CurveClass) -> Result<Rational, Error> {
    let contact = space.contact_constant(beta)?;
    if contact < 0 {
        return Err(Error::NegativeContactConstant {
            class: beta.clone(),
            value: contact,
        });
    }
    let contact = contact as u64;
    let mut value =
        Rational::from_integer(factorial(contact)) * space.one_point_invariant(beta)?;
    for tuple_len in 2..=beta.total_degree() {
        for tuple in ordered_tuples(beta, tuple_len) {
            let mut product = Rational::one();
            for part in &tuple {
                let part_contact = space.contact_constant(part)?;
                product *= Rational::from_integer(BigInt::from(part_contact + 1))
                    * evaluate(space, part)?;
            }
            let weight = Rational::new(
                factorial(contact),
                factorial(contact + 2 - tuple_len) * factorial(tuple_len),
            );
            value -= weight * product;
        }
    }
    Ok(value)
}

/// Every ordered tuple of `len` nonzero classes summing to `target`.
fn ordered_tuples(target: &CurveClass, len: u64) -> Vec<Vec<CurveClass>> {
    if len == 0 {
        return if target.is_zero() {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in subclasses(target) {
        let rest_target = target.checked_sub(&first).expect("subclass fits");
        for mut rest in ordered_tuples(&rest_target, len - 1) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Budget, OcTable};

    fn space(dims: &[u32]) -> AmbientSpace {
        AmbientSpace::product(dims.to_vec()).unwrap()
    }

    fn class(coeffs: &[u32]) -> CurveClass {
        CurveClass::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(
            oc_bruteforce(&space(&[3]), &class(&[2]), DEFAULT_DEGREE_CAP).unwrap(),
            Rational::from_integer(27.into())
        );
        assert_eq!(
            oc_bruteforce(&space(&[1]), &class(&[4]), DEFAULT_DEGREE_CAP).unwrap(),
            Rational::from_integer(0.into())
        );
    }

    #[test]
    fn agrees_with_engine_on_a_product() {
        let beta = class(&[1, 1]);
        let from_engine = OcTable::new(space(&[2, 2]))
            .osculating_count(&beta, &Budget::unlimited())
            .unwrap();
        assert_eq!(
            oc_bruteforce(&space(&[2, 2]), &beta, DEFAULT_DEGREE_CAP).unwrap(),
            from_engine
        );
    }

    #[test]
    fn cap_is_enforced() {
        match oc_bruteforce(&space(&[1]), &class(&[7]), DEFAULT_DEGREE_CAP) {
            Err(Error::BruteforceCapExceeded { degree: 7, cap: 6, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn tuple_enumeration_counts() {
        // compositions of 3 into >= 1 nonzero parts: 3, 1+2, 2+1, 1+1+1
        let three = class(&[3]);
        assert_eq!(ordered_tuples(&three, 1).len(), 1);
        assert_eq!(ordered_tuples(&three, 2).len(), 2);
        assert_eq!(ordered_tuples(&three, 3).len(), 1);
        // every tuple sums back to the target
        for len in 1..=4 {
            for tuple in ordered_tuples(&class(&[2, 2]), len) {
                let mut sum = CurveClass::zero(2);
                for part in &tuple {
                    sum = CurveClass::new(
                        sum.coeffs()
                            .iter()
                            .zip(part.coeffs())
                            .map(|(a, b)| a + b)
                            .collect(),
                    )
                    .unwrap();
                }
                assert_eq!(sum, class(&[2, 2]));
            }
        }
    }
}
