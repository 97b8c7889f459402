//! Unordered partitions of a curve class into nonzero effective parts.
//!
//! [`enumerate_partitions`] streams every way of writing `beta` as an
//! unordered sum of at least two nonzero classes, each partition in a
//! canonical form (parts strictly decreasing in the lexicographic order, with
//! multiplicities). [`VectorPartition::ordered_count`] gives the number of
//! ordered sequences collapsing to a given partition, which is the weight the
//! recursion needs because its sum runs over ordered partitions.
//!
//! Enumeration works by recursive descent over lexicographically
//! non-increasing part sequences, bounded by the previous part, so canonical
//! forms are produced directly and exactly once. The stream is lazy: partition
//! counts grow super-polynomially and callers never need the full list.

use std::fmt;

use num::bigint::BigInt;

use crate::class::CurveClass;
use crate::combinatorics::factorial;
use crate::error::Error;

/// An unordered partition of a curve class, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPartition {
    /// `(part, multiplicity)` pairs, parts strictly decreasing (lex order).
    parts: Vec<(CurveClass, u32)>,
}

impl VectorPartition {
    fn from_sequence(sequence: &[CurveClass]) -> Self {
        let mut parts: Vec<(CurveClass, u32)> = Vec::new();
        for class in sequence {
            match parts.last_mut() {
                Some((prev, mult)) if prev == class => *mult += 1,
                _ => parts.push((class.clone(), 1)),
            }
        }
        VectorPartition { parts }
    }

    pub fn parts(&self) -> &[(CurveClass, u32)] {
        &self.parts
    }

    /// Total number of parts `r`, multiplicities included.
    pub fn part_count(&self) -> u64 {
        self.parts.iter().map(|(_, m)| u64::from(*m)).sum()
    }

    /// Number of distinct ordered sequences collapsing to this partition:
    /// `r! / prod_k multiplicity_k!`.
    pub fn ordered_count(&self) -> BigInt {
        let mut count = factorial(self.part_count());
        for (_, mult) in &self.parts {
            count /= factorial(u64::from(*mult));
        }
        count
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (class, mult) in &self.parts {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({class})")?;
            if *mult > 1 {
                write!(f, "x{mult}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Stream of all unordered partitions of `beta` into at least two nonzero
/// parts, each exactly once, in decreasing lexicographic order of the
/// canonical part sequences.
pub fn enumerate_partitions(beta: &CurveClass) -> Result<Partitions, Error> {
    if beta.is_empty() {
        return Err(Error::EmptyClass);
    }
    if beta.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(Partitions {
        stack: vec![Frame {
            part: beta.clone(),
            remaining: CurveClass::zero(beta.len()),
            pool: beta.clone(),
        }],
    })
}

struct Frame {
    /// Part currently chosen at this level.
    part: CurveClass,
    /// What is left to decompose after this level: `pool - part`.
    remaining: CurveClass,
    /// What was left before this level chose anything.
    pool: CurveClass,
}

pub struct Partitions {
    stack: Vec<Frame>,
}

impl Iterator for Partitions {
    type Item = VectorPartition;

    fn next(&mut self) -> Option<VectorPartition> {
        loop {
            let top = self.stack.last()?;
            if top.remaining.is_zero() {
                let complete = (self.stack.len() >= 2).then(|| {
                    let sequence: Vec<CurveClass> =
                        self.stack.iter().map(|f| f.part.clone()).collect();
                    VectorPartition::from_sequence(&sequence)
                });
                self.advance();
                if let Some(partition) = complete {
                    return Some(partition);
                }
            } else if let Some(child) = largest_part_within(&top.remaining, &top.part) {
                let remaining = top.remaining.checked_sub(&child).expect("child fits pool");
                let pool = top.remaining.clone();
                self.stack.push(Frame {
                    part: child,
                    remaining,
                    pool,
                });
            } else {
                self.advance();
            }
        }
    }
}

impl Partitions {
    /// Move the deepest frame to its next smaller candidate, popping levels
    /// whose candidates are exhausted.
    fn advance(&mut self) {
        while let Some(top) = self.stack.last_mut() {
            if let Some(part) = previous_part(&top.part, &top.pool) {
                top.remaining = top.pool.checked_sub(&part).expect("part fits pool");
                top.part = part;
                return;
            }
            self.stack.pop();
        }
    }
}

/// Lexicographically largest nonzero class that fits in `pool` componentwise
/// and does not exceed `bound` in the lex order.
fn largest_part_within(pool: &CurveClass, bound: &CurveClass) -> Option<CurveClass> {
    let mut out = Vec::with_capacity(pool.len());
    let mut tight = true;
    for (&limit, &cap) in bound.coeffs().iter().zip(pool.coeffs()) {
        if tight && limit <= cap {
            out.push(limit);
        } else {
            out.push(cap);
            tight = false;
        }
    }
    let candidate = CurveClass::new(out).expect("pool is nonempty");
    (!candidate.is_zero()).then_some(candidate)
}

/// Lexicographic predecessor of `part` among nonzero classes in the box
/// `[0, pool]`: decrement the rightmost positive coordinate and max out
/// everything to its right.
fn previous_part(part: &CurveClass, pool: &CurveClass) -> Option<CurveClass> {
    let mut coeffs = part.coeffs().to_vec();
    let pivot = coeffs.iter().rposition(|&c| c > 0)?;
    coeffs[pivot] -= 1;
    for (slot, &cap) in coeffs.iter_mut().zip(pool.coeffs()).skip(pivot + 1) {
        *slot = cap;
    }
    let candidate = CurveClass::new(coeffs).expect("same length as part");
    (!candidate.is_zero()).then_some(candidate)
}

/// All nonzero classes `gamma <= beta` componentwise, in an order compatible
/// with the partial order (every class precedes anything strictly above it):
/// the first coordinate varies fastest.
pub fn subclasses(beta: &CurveClass) -> Subclasses {
    Subclasses {
        bounds: beta.coeffs().to_vec(),
        state: Some(vec![0; beta.len()]),
    }
}

pub struct Subclasses {
    bounds: Vec<u32>,
    state: Option<Vec<u32>>,
}

impl Iterator for Subclasses {
    type Item = CurveClass;

    fn next(&mut self) -> Option<CurveClass> {
        let current = self.state.as_mut()?;
        for i in 0..current.len() {
            if current[i] < self.bounds[i] {
                current[i] += 1;
                for slot in &mut current[..i] {
                    *slot = 0;
                }
                return Some(CurveClass::new(current.clone()).expect("nonempty"));
            }
        }
        self.state = None;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn class(coeffs: &[u32]) -> CurveClass {
        CurveClass::new(coeffs.to_vec()).unwrap()
    }

    fn all_partitions(beta: &CurveClass) -> Vec<VectorPartition> {
        enumerate_partitions(beta).unwrap().collect()
    }

    /// Independent check: enumerate ordered tuples by brute force, sort each
    /// into canonical order, and deduplicate.
    fn bruteforce_partitions(beta: &CurveClass) -> BTreeSet<Vec<CurveClass>> {
        fn tuples(target: &CurveClass, acc: &mut Vec<CurveClass>, out: &mut BTreeSet<Vec<CurveClass>>) {
            if target.is_zero() {
                if acc.len() >= 2 {
                    let mut sorted = acc.clone();
                    sorted.sort();
                    sorted.reverse();
                    out.insert(sorted);
                }
                return;
            }
            for part in subclasses(target) {
                let rest = target.checked_sub(&part).unwrap();
                acc.push(part);
                tuples(&rest, acc, out);
                acc.pop();
            }
        }
        let mut out = BTreeSet::new();
        tuples(beta, &mut Vec::new(), &mut out);
        out
    }

    fn expand(p: &VectorPartition) -> Vec<CurveClass> {
        let mut seq = Vec::new();
        for (part, mult) in p.parts() {
            for _ in 0..*mult {
                seq.push(part.clone());
            }
        }
        seq
    }

    #[test]
    fn scalar_three() {
        let got = all_partitions(&class(&[3]));
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].parts(), &[(class(&[2]), 1), (class(&[1]), 1)]);
        assert_eq!(got[1].parts(), &[(class(&[1]), 3)]);
    }

    #[test]
    fn unit_bidegree() {
        let got = all_partitions(&class(&[1, 1]));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].parts(), &[(class(&[1, 0]), 1), (class(&[0, 1]), 1)]);
    }

    #[test]
    fn bidegree_two_one() {
        let got = all_partitions(&class(&[2, 1]));
        let shapes: Vec<Vec<(CurveClass, u32)>> =
            got.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            shapes,
            vec![
                vec![(class(&[2, 0]), 1), (class(&[0, 1]), 1)],
                vec![(class(&[1, 1]), 1), (class(&[1, 0]), 1)],
                vec![(class(&[1, 0]), 2), (class(&[0, 1]), 1)],
            ]
        );
    }

    #[test]
    fn zero_class_is_rejected() {
        assert!(matches!(
            enumerate_partitions(&class(&[0, 0])),
            Err(Error::ZeroClass)
        ));
    }

    #[test]
    fn ordered_counts() {
        let two_one = VectorPartition::from_sequence(&[class(&[2]), class(&[1])]);
        assert_eq!(two_one.ordered_count(), BigInt::from(2));
        let ones = VectorPartition::from_sequence(&[class(&[1]), class(&[1]), class(&[1])]);
        assert_eq!(ones.ordered_count(), BigInt::from(1));
        let mixed = VectorPartition::from_sequence(&[
            class(&[1, 0]),
            class(&[1, 0]),
            class(&[0, 1]),
        ]);
        assert_eq!(mixed.ordered_count(), BigInt::from(3));
    }

    #[test]
    fn subclass_order_examples() {
        let got: Vec<String> = subclasses(&class(&[2])).map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["1", "2"]);
        let got: Vec<String> = subclasses(&class(&[1, 1])).map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["1,0", "0,1", "1,1"]);
        let got: Vec<String> = subclasses(&class(&[2, 1])).map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["1,0", "2,0", "0,1", "1,1", "2,1"]);
    }

    #[test]
    fn subclass_order_respects_partial_order() {
        let listed: Vec<CurveClass> = subclasses(&class(&[2, 3, 1])).collect();
        assert_eq!(listed.len(), 3 * 4 * 2 - 1);
        for (i, gamma) in listed.iter().enumerate() {
            for delta in &listed[i + 1..] {
                assert!(!delta.componentwise_le(gamma) || delta == gamma);
            }
        }
    }

    #[test]
    fn scalar_count_matches_classical_partitions() {
        // p(n) via the standard coin-counting recurrence, independent of the
        // enumerator under test
        fn partition_count(n: usize) -> u64 {
            let mut ways = vec![0u64; n + 1];
            ways[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    ways[total] += ways[total - part];
                }
            }
            ways[n]
        }
        for n in 1..=12u32 {
            let emitted = all_partitions(&class(&[n])).len() as u64;
            assert_eq!(emitted, partition_count(n as usize) - 1, "n = {n}");
        }
    }

    #[test]
    fn matches_bruteforce_on_vectors() {
        for beta in [class(&[4]), class(&[2, 2]), class(&[2, 1, 1]), class(&[3, 2])] {
            let expected = bruteforce_partitions(&beta);
            let got: BTreeSet<Vec<CurveClass>> =
                all_partitions(&beta).iter().map(expand).collect();
            assert_eq!(got, expected, "beta = {beta}");
            // no duplicates slipped through the stream either
            assert_eq!(all_partitions(&beta).len(), expected.len());
        }
    }

    #[test]
    fn ordered_count_totals_match_tuple_enumeration() {
        fn count_tuples(target: &CurveClass, parts_left: u64) -> u64 {
            if parts_left == 0 {
                return u64::from(target.is_zero());
            }
            if target.is_zero() {
                return 0;
            }
            subclasses(target)
                .map(|p| count_tuples(&target.checked_sub(&p).unwrap(), parts_left - 1))
                .sum()
        }
        for beta in [class(&[6]), class(&[3, 3]), class(&[4, 2]), class(&[2, 2])] {
            for r in 2..=beta.total_degree() {
                let from_partitions: BigInt = all_partitions(&beta)
                    .iter()
                    .filter(|p| p.part_count() == r)
                    .map(|p| p.ordered_count())
                    .sum();
                assert_eq!(
                    from_partitions,
                    BigInt::from(count_tuples(&beta, r)),
                    "beta = {beta}, r = {r}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn stream_is_canonical_and_sums_back(
            coeffs in proptest::collection::vec(0u32..4, 1..3),
        ) {
            prop_assume!(coeffs.iter().any(|&c| c > 0));
            let beta = class(&coeffs);
            let seen: Vec<VectorPartition> = all_partitions(&beta);
            let mut canonical_forms = BTreeSet::new();
            for p in &seen {
                // parts strictly decreasing, all nonzero, all within beta
                for window in p.parts().windows(2) {
                    prop_assert!(window[0].0 > window[1].0);
                }
                let mut sum = CurveClass::zero(beta.len());
                for (part, mult) in p.parts() {
                    prop_assert!(!part.is_zero());
                    prop_assert!(part.componentwise_le(&beta));
                    prop_assert!(subclasses(&beta).any(|c| &c == part));
                    for _ in 0..*mult {
                        sum = CurveClass::new(
                            sum.coeffs()
                                .iter()
                                .zip(part.coeffs())
                                .map(|(a, b)| a + b)
                                .collect(),
                        )
                        .unwrap();
                    }
                }
                prop_assert_eq!(&sum, &beta);
                prop_assert!(p.part_count() >= 2);
                let rendered = format!("{p}");
                prop_assert!(canonical_forms.insert(rendered));
            }
        }
    }
}
