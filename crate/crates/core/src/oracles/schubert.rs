//! Two-row Schubert classes on the Grassmannian of lines, with just enough
//! Pieri calculus to count lines through a point and general codimension-2
//! subspaces. No general Littlewood-Richardson machinery.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::Zero;

/// Integer combination of Schubert cycles `sigma_(a,b)` on the Grassmannian
/// of lines in `P^s`, indices constrained by `s-1 >= a >= b >= 0`. Zero
/// coefficients are pruned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    ambient: u32,
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl SchubertClass {
    /// The single cycle `sigma_(a,b)` for lines in `P^ambient`.
    pub fn sigma(ambient: u32, a: u32, b: u32) -> Self {
        assert!(ambient >= 2, "lines need an ambient P^s with s >= 2");
        assert!(a < ambient && b <= a, "inadmissible index ({a},{b})");
        let mut terms = BTreeMap::new();
        terms.insert((a, b), BigInt::from(1));
        SchubertClass { ambient, terms }
    }

    pub fn zero(ambient: u32) -> Self {
        SchubertClass {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, index: (u32, u32), coefficient: BigInt) {
        let entry = self.terms.entry(index).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// Pieri product with the special cycle `sigma_(1,0)`:
    /// `sigma_(a,b) . sigma_(1,0) = sigma_(a+1,b) + sigma_(a,b+1)`,
    /// dropping any term whose indices leave the admissible range.
    pub fn pieri_multiply(&self) -> SchubertClass {
        let mut out = SchubertClass::zero(self.ambient);
        for (&(a, b), coefficient) in &self.terms {
            if a < self.ambient - 1 {
                out.add_term((a + 1, b), coefficient.clone());
            }
            if b < a {
                out.add_term((a, b + 1), coefficient.clone());
            }
        }
        out
    }
}

/// Coefficient of the point cycle `sigma_(s-1,s-1)` in
/// `(sigma_(1,0))^(s-1) . sigma_(s-1,0)`: the number of lines in `P^s`
/// through a point and `s-1` general codimension-2 linear subspaces.
pub fn schubert_line_count(s: u32) -> BigInt {
    assert!(s >= 2);
    let mut class = SchubertClass::sigma(s, s - 1, 0);
    for _ in 0..s - 1 {
        class = class.pieri_multiply();
    }
    class.coefficient(s - 1, s - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieri_rule_examples() {
        // both terms admissible
        let product = SchubertClass::sigma(3, 1, 0).pieri_multiply();
        assert_eq!(product.coefficient(2, 0), BigInt::from(1));
        assert_eq!(product.coefficient(1, 1), BigInt::from(1));
        assert_eq!(product.terms().count(), 2);
        // first term leaves the range
        let product = SchubertClass::sigma(2, 1, 0).pieri_multiply();
        assert_eq!(product.coefficient(1, 1), BigInt::from(1));
        assert_eq!(product.terms().count(), 1);
        // second index saturates
        let product = SchubertClass::sigma(4, 3, 2).pieri_multiply();
        assert_eq!(product.coefficient(3, 3), BigInt::from(1));
        assert_eq!(product.terms().count(), 1);
    }

    #[test]
    fn line_counts_are_one() {
        for s in 2..=10 {
            assert_eq!(schubert_line_count(s), BigInt::from(1), "s = {s}");
        }
    }

    #[test]
    fn products_stay_admissible() {
        for s in 2..=6u32 {
            let mut class = SchubertClass::sigma(s, 1, 0);
            for _ in 0..2 * s {
                class = class.pieri_multiply();
                for (&(a, b), coefficient) in class.terms() {
                    assert!(a < s && b <= a);
                    assert!(!coefficient.is_zero());
                }
            }
        }
    }
}
