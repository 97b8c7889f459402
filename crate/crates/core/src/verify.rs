//! Built-in verification suite: published values hard-coded as literals,
//! oracle cross-checks, and the integrality audit. Self-contained and
//! offline; the CLI `verify` subcommand runs [`run_all`] and reports one
//! line per check.

use num::bigint::BigInt;
use num::traits::Pow;
use num::One;

use crate::class::CurveClass;
use crate::combinatorics::factorial;
use crate::engine::{compute_table, Budget, OcTable};
use crate::error::Error;
use crate::oracles::{jet_contact_product, oc_bruteforce, schubert_line_count};
use crate::partitions::subclasses;
use crate::rational::{format_rational, is_integral, Rational};
use crate::space::AmbientSpace;

/// Outcome of one verification item. Expected and actual values are exact
/// strings; `pass` demands equality, there are no tolerances anywhere.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn new(name: String, expected: String, actual: Result<String, Error>) -> Self {
        match actual {
            Ok(actual) => Check {
                pass: actual == expected,
                name,
                expected,
                actual,
            },
            Err(err) => Check {
                name,
                expected,
                actual: format!("error: {err}"),
                pass: false,
            },
        }
    }
}

fn space(dims: &[u32]) -> AmbientSpace {
    AmbientSpace::product(dims.to_vec()).expect("manifest dims are valid")
}

fn class(coeffs: &[u32]) -> CurveClass {
    CurveClass::new(coeffs.to_vec()).expect("manifest classes are valid")
}

fn count_string(dims: &[u32], coeffs: &[u32], budget: &Budget) -> Result<String, Error> {
    let value = OcTable::new(space(dims)).osculating_count(&class(coeffs), budget)?;
    Ok(format_rational(&value))
}

/// The count collapses on the projective line: 1 for lines, 0 beyond.
pub fn projective_line_checks(budget: &Budget) -> Vec<Check> {
    (1..=8u32)
        .map(|n| {
            let expected = if n == 1 { "1" } else { "0" };
            Check::new(
                format!("oc(P^1, {n}) == {expected}"),
                expected.to_owned(),
                count_string(&[1], &[n], budget),
            )
        })
        .collect()
}

/// Lines on P^s: `(s-1)!` of them osculate at a general point.
pub fn line_count_checks(budget: &Budget) -> Vec<Check> {
    (1..=10u32)
        .map(|s| {
            let expected = factorial(u64::from(s) - 1).to_string();
            Check::new(
                format!("oc(P^{s}, 1) == {expected}"),
                expected,
                count_string(&[s], &[1], budget),
            )
        })
        .collect()
}

/// The classical small cases: inflexional lines and osculating conics.
pub fn classical_value_checks(budget: &Budget) -> Vec<Check> {
    vec![
        Check::new(
            "oc(P^3, 1) == 2".into(),
            "2".into(),
            count_string(&[3], &[1], budget),
        ),
        Check::new(
            "oc(P^3, 2) == 27".into(),
            "27".into(),
            count_string(&[3], &[2], budget),
        ),
        Check::new(
            "oc(P^2, 2) == 1".into(),
            "1".into(),
            count_string(&[2], &[2], budget),
        ),
    ]
}

/// The flagship product-space value.
pub const PRODUCT_FLAGSHIP: &str = "12376517721901538931574978120540650000000";

pub fn product_space_check(budget: &Budget) -> Check {
    Check::new(
        "oc(P^5 x P^6, (3,4))".into(),
        PRODUCT_FLAGSHIP.to_owned(),
        count_string(&[5, 6], &[3, 4], budget),
    )
}

/// One-point invariants pinned directly.
pub fn invariant_checks() -> Vec<Check> {
    let mut checks: Vec<Check> = (1..=6u32)
        .map(|s| {
            Check::new(
                format!("invariant(P^{s}, 1) == 1"),
                "1".into(),
                space(&[s])
                    .one_point_invariant(&class(&[1]))
                    .map(|v| format_rational(&v)),
            )
        })
        .collect();
    checks.push(Check::new(
        "invariant(P^1, 3) == 1/36".into(),
        "1/36".into(),
        space(&[1])
            .one_point_invariant(&class(&[3]))
            .map(|v| format_rational(&v)),
    ));
    for s in [2u32, 3] {
        let expected = format!("1/{}", 1u64 << (s + 1));
        checks.push(Check::new(
            format!("invariant(P^{s}, 2) == {expected}"),
            expected.clone(),
            space(&[s])
                .one_point_invariant(&class(&[2]))
                .map(|v| format_rational(&v)),
        ));
    }
    checks
}

/// Recover `1/(n!)^(s+1)` from computed count tables, comparing against a
/// direct factorial expansion.
pub fn inverse_roundtrip_checks(budget: &Budget) -> Vec<Check> {
    let mut checks = Vec::new();
    for s in 1..=4u32 {
        let table = compute_table(space(&[s]), &class(&[5]), budget);
        for n in 1..=5u32 {
            let name = format!("inverse(P^{s}, {n}) == 1/({n}!)^{}", s + 1);
            let expected = Rational::new(BigInt::one(), factorial(u64::from(n)).pow(s + 1));
            let actual = match &table {
                Ok(table) => table
                    .invariant_from_counts(&class(&[n]))
                    .map(|v| format_rational(&v)),
                Err(err) => Ok(format!("table error: {err}")),
            };
            checks.push(Check::new(name, format_rational(&expected), actual));
        }
    }
    checks
}

/// Every nonzero class of total degree at most 5 on the six test spaces,
/// engine against ordered-tuple brute force.
pub fn bruteforce_equivalence_checks(budget: &Budget) -> Vec<Check> {
    let mut checks = Vec::new();
    for dims in [&[1u32][..], &[2], &[3], &[1, 1], &[2, 2], &[2, 3]] {
        let x = space(dims);
        let mut table = OcTable::new(x.clone());
        for beta in degree_capped_classes(dims.len(), 5) {
            let expected = oc_bruteforce(&x, &beta, 5).map(|v| format_rational(&v));
            let actual = table
                .osculating_count(&beta, budget)
                .map(|v| format_rational(&v));
            let name = format!("engine == brute force on {x}, beta=({beta})");
            match expected {
                Ok(expected) => checks.push(Check::new(name, expected, actual)),
                Err(err) => checks.push(Check {
                    name,
                    expected: format!("oracle error: {err}"),
                    actual: "unavailable".into(),
                    pass: false,
                }),
            }
        }
    }
    checks
}

/// All nonzero classes of length `t` with total degree at most `cap`.
fn degree_capped_classes(t: usize, cap: u32) -> Vec<CurveClass> {
    let bound = CurveClass::new(vec![cap; t]).expect("t >= 1");
    subclasses(&bound)
        .filter(|c| c.total_degree() <= u64::from(cap))
        .collect()
}

/// Pieri products: exactly one line through a point and s-1 general
/// codimension-2 subspaces.
pub fn schubert_checks() -> Vec<Check> {
    (2..=10u32)
        .map(|s| {
            Check::new(
                format!("schubert line count, s={s}"),
                "1".into(),
                Ok(schubert_line_count(s).to_string()),
            )
        })
        .collect()
}

/// Jet expansion: coefficient `(s-1)!`, a single surviving monomial, and no
/// dependence on the hypersurface degree.
pub fn jet_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for s in 2..=8u32 {
        for d in [1u64, 5, 100] {
            let expected = factorial(u64::from(s) - 1).to_string();
            let product = jet_contact_product(s, d);
            let actual = if product.term_count() != 1 {
                format!("{} surviving monomials", product.term_count())
            } else {
                format_rational(&product.coefficient(s, s - 1))
            };
            checks.push(Check::new(
                format!("jet coefficient s={s}, d={d} == {expected}"),
                expected,
                Ok(actual),
            ));
        }
    }
    checks
}

/// Every value computed for the checks above must be an integer; violations
/// are reported with the offending class.
pub fn integrality_audit(budget: &Budget) -> Vec<Check> {
    let mut targets: Vec<(AmbientSpace, CurveClass)> = vec![
        (space(&[1]), class(&[8])),
        (space(&[2]), class(&[2])),
        (space(&[3]), class(&[2])),
        (space(&[5, 6]), class(&[3, 4])),
    ];
    for s in 4..=10u32 {
        targets.push((space(&[s]), class(&[1])));
    }
    for dims in [&[1u32, 1][..], &[2, 2], &[2, 3]] {
        targets.push((space(dims), class(&[3, 2])));
    }
    targets
        .into_iter()
        .map(|(x, max_beta)| {
            let name = format!("integrality audit on {x} up to ({max_beta})");
            match compute_table(x, &max_beta, budget) {
                Ok(table) => {
                    let violations: Vec<String> = table
                        .entries()
                        .filter(|(_, v)| !is_integral(v))
                        .map(|(c, v)| format!("beta=({c}) -> {}", format_rational(v)))
                        .collect();
                    let actual = if violations.is_empty() {
                        format!("all {} values integral", table.len())
                    } else {
                        format!("non-integral: {}", violations.join("; "))
                    };
                    Check {
                        name,
                        expected: "all values integral".into(),
                        pass: violations.is_empty(),
                        actual,
                    }
                }
                Err(err) => Check {
                    name,
                    expected: "all values integral".into(),
                    actual: format!("error: {err}"),
                    pass: false,
                },
            }
        })
        .collect()
}

/// The whole suite, in a fixed order.
pub fn run_all(budget: &Budget) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(projective_line_checks(budget));
    checks.extend(line_count_checks(budget));
    checks.extend(classical_value_checks(budget));
    checks.push(product_space_check(budget));
    checks.extend(invariant_checks());
    checks.extend(inverse_roundtrip_checks(budget));
    checks.extend(bruteforce_equivalence_checks(budget));
    checks.extend(schubert_checks());
    checks.extend(jet_checks());
    checks.extend(integrality_audit(budget));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_manifest_groups_pass() {
        let budget = Budget::unlimited();
        for check in projective_line_checks(&budget)
            .into_iter()
            .chain(classical_value_checks(&budget))
            .chain(invariant_checks())
            .chain(schubert_checks())
        {
            assert!(check.pass, "{}: expected {}, got {}", check.name, check.expected, check.actual);
        }
    }

    #[test]
    fn capped_class_enumeration() {
        // nonzero scalar degrees 1..=5
        assert_eq!(degree_capped_classes(1, 5).len(), 5);
        // pairs with 1 <= a+b <= 5
        assert_eq!(degree_capped_classes(2, 5).len(), 20);
    }
}
