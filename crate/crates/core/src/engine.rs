//! The memoized recursion for osculating-curve counts, its per-partition
//! breakdown, and the inverse solver recovering one-point invariants.
//!
//! For a nonzero class `beta` with contact constant `C = c_1(X).beta - 2`,
//! the count satisfies
//!
//! ```text
//! OC(beta) = C! I_beta(pt)
//!          - sum over unordered partitions P of beta into r >= 2 parts of
//!            ordered(P) * binom(C, r-2) / (r(r-1))
//!            * prod over parts p of ((C_p + 1) OC(p))
//! ```
//!
//! where `ordered(P)` counts the ordered sequences collapsing to `P`. Every
//! class strictly below `beta` is visited many times, so values are memoized
//! in an [`OcTable`]; correction terms are accumulated in the canonical
//! partition order, making results bit-identical across runs.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::class::CurveClass;
use crate::combinatorics::{binomial, factorial};
use crate::error::Error;
use crate::partitions::{enumerate_partitions, subclasses, VectorPartition};
use crate::rational::{bit_length, pow, Rational};
use crate::space::AmbientSpace;

/// Resource caps. Both default to unlimited; tests and the CLI flags
/// `--max-partitions` / `--max-bits` supply finite values.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    /// Cap on the number of partitions visited in one top-level call.
    pub max_partitions: Option<u64>,
    /// Cap on the bit length of any computed value or leading factorial.
    pub max_bits: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

struct BudgetState<'a> {
    budget: &'a Budget,
    partitions_visited: u64,
}

impl<'a> BudgetState<'a> {
    fn new(budget: &'a Budget) -> Self {
        BudgetState {
            budget,
            partitions_visited: 0,
        }
    }

    fn visit_partition(&mut self, class: &CurveClass) -> Result<(), Error> {
        self.partitions_visited += 1;
        match self.budget.max_partitions {
            Some(limit) if self.partitions_visited > limit => {
                Err(Error::PartitionBudgetExceeded {
                    class: class.clone(),
                    limit,
                })
            }
            _ => Ok(()),
        }
    }

    fn check_bits(&self, class: &CurveClass, observed: u64) -> Result<(), Error> {
        match self.budget.max_bits {
            Some(limit) if observed > limit => Err(Error::BitBudgetExceeded {
                class: class.clone(),
                limit,
                observed,
            }),
            _ => Ok(()),
        }
    }
}

/// Memo table of osculating-curve counts for one space.
///
/// The table is closed under the recursion: storing a class implies every
/// class needed by its partitions is stored too. A table is an ordinary owned
/// value; independent tables may be used from any number of threads, and the
/// same exact values come out regardless of scheduling.
#[derive(Clone, Debug)]
pub struct OcTable {
    space: AmbientSpace,
    entries: BTreeMap<CurveClass, Rational>,
    cache_hits: u64,
}

impl OcTable {
    pub fn new(space: AmbientSpace) -> Self {
        OcTable {
            space,
            entries: BTreeMap::new(),
            cache_hits: 0,
        }
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn get(&self, class: &CurveClass) -> Option<&Rational> {
        self.entries.get(class)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CurveClass, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Memo lookups that were answered from the table since construction.
    pub fn cache_hits(&self) -> u64 {
        self.cache_hits
    }

    /// Store a known value, e.g. when seeding the inverse solver.
    pub fn insert(&mut self, class: CurveClass, value: Rational) -> Result<(), Error> {
        self.space.check_nonzero_class(&class)?;
        self.entries.insert(class, value);
        Ok(())
    }

    pub(crate) fn from_parts(
        space: AmbientSpace,
        entries: BTreeMap<CurveClass, Rational>,
    ) -> Self {
        OcTable {
            space,
            entries,
            cache_hits: 0,
        }
    }

    /// The exact number of osculating curves of class `beta`, memoizing every
    /// intermediate class. Warm entries are returned as-is, so a prior
    /// [`extend_table`] makes this a pure lookup.
    pub fn osculating_count(
        &mut self,
        beta: &CurveClass,
        budget: &Budget,
    ) -> Result<Rational, Error> {
        self.space.check_nonzero_class(beta)?;
        let mut state = BudgetState::new(budget);
        self.count_memoized(beta, &mut state)
    }

    fn count_memoized(
        &mut self,
        beta: &CurveClass,
        state: &mut BudgetState<'_>,
    ) -> Result<Rational, Error> {
        if let Some(value) = self.entries.get(beta) {
            self.cache_hits += 1;
            return Ok(value.clone());
        }
        let contact = self.contact_constant_checked(beta)?;
        let leading_factorial = factorial(contact);
        state.check_bits(beta, leading_factorial.bits())?;
        let leading =
            Rational::from_integer(leading_factorial) * self.space.one_point_invariant(beta)?;

        let mut corrections = Rational::zero();
        for partition in enumerate_partitions(beta)? {
            state.visit_partition(beta)?;
            let product = self.partition_product(&partition, state)?;
            corrections += unordered_weight(contact, &partition) * product;
        }
        let value = leading - corrections;
        state.check_bits(beta, bit_length(&value))?;
        self.entries.insert(beta.clone(), value.clone());
        Ok(value)
    }

    /// `prod_k ((C_part + 1) OC(part))^multiplicity` for one partition.
    fn partition_product(
        &mut self,
        partition: &VectorPartition,
        state: &mut BudgetState<'_>,
    ) -> Result<Rational, Error> {
        let mut product = Rational::one();
        for (part, mult) in partition.parts() {
            let part_contact = self.contact_constant_checked(part)?;
            let count = self.count_memoized(part, state)?;
            let factor = Rational::from_integer(BigInt::from(part_contact + 1)) * count;
            product *= pow(&factor, *mult);
        }
        Ok(product)
    }

    fn contact_constant_checked(&self, class: &CurveClass) -> Result<u64, Error> {
        let contact = self.space.contact_constant(class)?;
        if contact < 0 {
            return Err(Error::NegativeContactConstant {
                class: class.clone(),
                value: contact,
            });
        }
        Ok(contact as u64)
    }

    /// Like [`OcTable::osculating_count`], but reporting the leading term and
    /// every partition's exact contribution.
    pub fn contribution_breakdown(
        &mut self,
        beta: &CurveClass,
        budget: &Budget,
    ) -> Result<ContributionReport, Error> {
        self.space.check_nonzero_class(beta)?;
        let mut state = BudgetState::new(budget);
        let contact = self.contact_constant_checked(beta)?;
        let leading_term = Rational::from_integer(factorial(contact))
            * self.space.one_point_invariant(beta)?;

        let mut corrections = Vec::new();
        let mut correction_sum = Rational::zero();
        for partition in enumerate_partitions(beta)? {
            state.visit_partition(beta)?;
            let product_term = self.partition_product(&partition, &mut state)?;
            let weight = unordered_weight(contact, &partition);
            // the two published forms of the coefficient must agree exactly
            assert_eq!(
                weight,
                unordered_weight_factorial_form(contact, &partition),
                "weight forms disagree for {partition}"
            );
            let total = weight.clone() * product_term.clone();
            correction_sum += total.clone();
            corrections.push(Correction {
                partition,
                weight,
                product_term,
                total,
            });
        }
        let result = leading_term.clone() - correction_sum;
        self.entries.insert(beta.clone(), result.clone());
        Ok(ContributionReport {
            beta: beta.clone(),
            contact_constant: contact,
            leading_term,
            corrections,
            result,
        })
    }

    /// Recover the one-point invariant `I_beta(pt)` from stored counts:
    /// the recursion rearranged as `(OC(beta) + corrections) / C!`.
    ///
    /// Requires a stored count for `beta` and for every class appearing in a
    /// partition of `beta`; a missing class is reported by name.
    pub fn invariant_from_counts(&self, beta: &CurveClass) -> Result<Rational, Error> {
        self.space.check_nonzero_class(beta)?;
        let contact = self.contact_constant_checked(beta)?;
        let count = self
            .entries
            .get(beta)
            .ok_or_else(|| Error::MissingCount(beta.clone()))?
            .clone();
        let corrections = self.corrections_from_entries(beta, contact)?;
        Ok((count + corrections) / Rational::from_integer(factorial(contact)))
    }

    /// Re-derive the stored value of `beta` from the other entries; used to
    /// validate persisted tables.
    pub(crate) fn rederive_from_entries(&self, beta: &CurveClass) -> Result<Rational, Error> {
        let contact = self.contact_constant_checked(beta)?;
        let leading = Rational::from_integer(factorial(contact))
            * self.space.one_point_invariant(beta)?;
        Ok(leading - self.corrections_from_entries(beta, contact)?)
    }

    fn corrections_from_entries(
        &self,
        beta: &CurveClass,
        contact: u64,
    ) -> Result<Rational, Error> {
        let mut sum = Rational::zero();
        for partition in enumerate_partitions(beta)? {
            let mut product = Rational::one();
            for (part, mult) in partition.parts() {
                let part_contact = self.contact_constant_checked(part)?;
                let count = self
                    .entries
                    .get(part)
                    .ok_or_else(|| Error::MissingCount(part.clone()))?;
                let factor =
                    Rational::from_integer(BigInt::from(part_contact + 1)) * count.clone();
                product *= pow(&factor, *mult);
            }
            sum += unordered_weight(contact, &partition) * product;
        }
        Ok(sum)
    }
}

/// Per-partition weight in the unordered formulation:
/// `ordered(P) * binom(C, r-2) / (r(r-1))`.
fn unordered_weight(contact: u64, partition: &VectorPartition) -> Rational {
    let r = partition.part_count();
    let numerator = binomial(contact, r - 2) * partition.ordered_count();
    let denominator = BigInt::from(r) * BigInt::from(r - 1);
    Rational::new(numerator, denominator)
}

/// The equivalent pre-simplification form `ordered(P) * C! / ((C+2-r)! r!)`.
/// Every partition satisfies `r <= C + 2`, since each part contributes at
/// least 1 to the anticanonical degree.
fn unordered_weight_factorial_form(contact: u64, partition: &VectorPartition) -> Rational {
    let r = partition.part_count();
    let numerator = factorial(contact) * partition.ordered_count();
    let denominator = factorial(contact + 2 - r) * factorial(r);
    Rational::new(numerator, denominator)
}

/// One partition's exact contribution to the recursion for a class.
#[derive(Clone, Debug)]
pub struct Correction {
    pub partition: VectorPartition,
    pub weight: Rational,
    pub product_term: Rational,
    pub total: Rational,
}

/// The recursion for one class, term by term. Satisfies
/// `result == leading_term - sum of correction totals` exactly.
#[derive(Clone, Debug)]
pub struct ContributionReport {
    pub beta: CurveClass,
    pub contact_constant: u64,
    pub leading_term: Rational,
    pub corrections: Vec<Correction>,
    pub result: Rational,
}

/// Fill `table` with the count of every nonzero class below `max_beta`
/// componentwise, bottom-up in the subclass order. Warm entries are reused.
pub fn extend_table(
    table: &mut OcTable,
    max_beta: &CurveClass,
    budget: &Budget,
) -> Result<(), Error> {
    table.space.check_nonzero_class(max_beta)?;
    let mut state = BudgetState::new(budget);
    for class in subclasses(max_beta) {
        table.count_memoized(&class, &mut state)?;
    }
    Ok(())
}

/// Table of counts for every nonzero class below `max_beta` componentwise.
pub fn compute_table(
    space: AmbientSpace,
    max_beta: &CurveClass,
    budget: &Budget,
) -> Result<OcTable, Error> {
    let mut table = OcTable::new(space);
    extend_table(&mut table, max_beta, budget)?;
    Ok(table)
}
