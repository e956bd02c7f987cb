//! The two characterizations of symplectic matroids.
//!
//! A basis family is checked against the greedy definition by running the
//! greedy algorithm under every admissible ordering and testing that the
//! chosen basis gale-dominates every member; domination along `o` is the
//! same as optimality for all `2n + 1` threshold weights of `o`, and every
//! compatible weight is a constant plus a nonnegative combination of those.
//!
//! An independence family is checked against the exchange axiom: for
//! members `I`, `J` with `|I| < |J|` such that no `y ∈ J \ I` extends `I`,
//! the union `I ∪ J` must be inadmissible and some `x ∉ I` must have both
//! `I ∪ {x}` and `({-x} ∪ I) \ -J` independent.

use std::fmt;

use crate::error::{Error, Result};
use crate::greedy::{check_member, dominates, first_beating_threshold, greedy_choice, BasisFamily};
use crate::orderings::{ordering_at, ordering_count, threshold_weight, AdmissibleOrdering};
use crate::parallel::{find_map_first, Execution};
use crate::signed_sets::{subsets_of, GroundSize, SignedSubset};

/// Orderings above this count are searched in parallel by the single-family checks.
const PARALLEL_ORDERING_THRESHOLD: u64 = 4096;

/// A nonempty, subset-closed family of admissible subsets, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndependenceFamily {
    n: GroundSize,
    sets: Vec<SignedSubset>,
}

impl IndependenceFamily {
    pub fn new(n: GroundSize, mut sets: Vec<SignedSubset>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for &s in &sets {
            check_member(n, s)?;
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedMember(w[0]));
        }
        let family = IndependenceFamily { n, sets };
        for &s in &family.sets {
            if let Some(e) = s.iter().find(|&e| !family.contains(s.without(e))) {
                return Err(Error::NotSubsetClosed {
                    set: s,
                    missing: s.without(e),
                });
            }
        }
        Ok(family)
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn sets(&self) -> &[SignedSubset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: SignedSubset) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Size of the largest member.
    pub fn rank(&self) -> usize {
        self.sets.last().map_or(0, |s| s.len())
    }

    /// Inclusion-maximal members, in canonical order, whatever their sizes.
    pub fn maximal_sets(&self) -> Vec<SignedSubset> {
        self.sets
            .iter()
            .copied()
            .filter(|&s| {
                self.n
                    .elements()
                    .filter(|&e| !s.contains(e))
                    .all(|e| !self.contains(s.with(e)))
            })
            .collect()
    }
}

/// All subsets of members of `family`.
pub fn downward_closure(family: &BasisFamily) -> IndependenceFamily {
    let mut sets: Vec<SignedSubset> = family.sets().iter().flat_map(|&b| subsets_of(b)).collect();
    sets.sort_unstable();
    sets.dedup();
    IndependenceFamily { n: family.n(), sets }
}

/// The inclusion-maximal members as a basis family.
///
/// Fails with [`Error::UnequalCardinality`] when the maximal members do not
/// all have the same size.
pub fn maximal_members(family: &IndependenceFamily) -> Result<BasisFamily> {
    BasisFamily::new(family.n, family.maximal_sets())
}

/// Outcome of checking the greedy definition on one basis family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionCheck {
    pub holds: bool,
    pub orderings_checked: u64,
    pub rank: usize,
    pub lagrangian: bool,
    pub witness: Option<Witness>,
}

/// An ordering and threshold under which greedy is beaten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ordering: AdmissibleOrdering,
    /// Weight 1 on the `threshold` largest elements of `ordering`, 0 elsewhere.
    pub threshold: usize,
    pub greedy: SignedSubset,
    pub beating: SignedSubset,
}

impl Witness {
    /// Re-runs greedy and weighs both sets with an explicit threshold weight.
    pub fn verify(&self, sets: &[SignedSubset]) -> bool {
        let Ok(w) = threshold_weight(&self.ordering, self.threshold) else {
            return false;
        };
        let greedy = crate::greedy::greedy_over(sets, &self.ordering).chosen;
        greedy == self.greedy
            && sets.contains(&self.beating)
            && w.weight_of(self.beating) > w.weight_of(greedy)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ordering: {}", self.ordering)?;
        writeln!(f, "threshold: {}", self.threshold)?;
        writeln!(f, "greedy: {}", self.greedy)?;
        write!(f, "beating: {}", self.beating)
    }
}

fn default_execution(n: GroundSize) -> Execution {
    if ordering_count(n) > PARALLEL_ORDERING_THRESHOLD {
        Execution::default()
    } else {
        Execution::Sequential
    }
}

/// Greedy is optimal for every admissible ordering and compatible weight.
pub fn is_symplectic_matroid_by_definition(family: &BasisFamily) -> bool {
    definition_holds_with(family.n(), family.sets(), default_execution(family.n()))
}

pub(crate) fn definition_holds_with(n: GroundSize, sets: &[SignedSubset], exec: Execution) -> bool {
    find_map_first(0..ordering_count(n), exec, |index| {
        let o = ordering_at(n, index);
        let chosen = greedy_choice(sets, &o);
        let beaten = sets.iter().any(|&b| !dominates(&o, chosen, b));
        beaten.then_some(())
    })
    .is_none()
}

/// The definition check with metadata and, on failure, a witness.
pub fn check_definition(family: &BasisFamily) -> DefinitionCheck {
    let witness = find_counterexample(family);
    DefinitionCheck {
        holds: witness.is_none(),
        orderings_checked: ordering_count(family.n()),
        rank: family.rank(),
        lagrangian: family.is_lagrangian(),
        witness,
    }
}

/// First ordering (in enumeration order) and smallest threshold that defeat greedy.
pub fn find_counterexample(family: &BasisFamily) -> Option<Witness> {
    find_counterexample_in(family.n(), family.sets(), default_execution(family.n()))
}

/// [`find_counterexample`] over any nonempty antichain of admissible sets,
/// equinumerous or not.
pub fn find_counterexample_in(n: GroundSize, sets: &[SignedSubset], exec: Execution) -> Option<Witness> {
    find_map_first(0..ordering_count(n), exec, |index| {
        let ordering = ordering_at(n, index);
        counterexample_under(sets, ordering)
    })
}

/// Witness restricted to one ordering.
pub fn counterexample_under(sets: &[SignedSubset], ordering: AdmissibleOrdering) -> Option<Witness> {
    let greedy = greedy_choice(sets, &ordering);
    first_beating_threshold(sets, &ordering, greedy).map(|(threshold, beating)| Witness {
        ordering,
        threshold,
        greedy,
        beating,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// `I ∪ J` is admissible.
    UnionAdmissible,
    /// No `x` satisfies both membership conditions.
    NoAugmentingX,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::UnionAdmissible => "union_admissible",
            FailureKind::NoAugmentingX => "no_augmenting_x",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub i: SignedSubset,
    pub j: SignedSubset,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheckResult {
    pub holds: bool,
    pub violation: Option<Violation>,
    pub rank: usize,
    pub lagrangian: bool,
}

/// `|I| < |J|` and no `y ∈ J \ I` has `I ∪ {y}` independent.
pub fn is_blocked_pair(family: &IndependenceFamily, i: SignedSubset, j: SignedSubset) -> bool {
    i.len() < j.len() && j.difference(i).iter().all(|y| !family.contains(i.with(y)))
}

/// Checks the axiom conclusion for one pair; `None` when it holds or the
/// hypothesis does not apply.
pub fn pair_violation(family: &IndependenceFamily, i: SignedSubset, j: SignedSubset) -> Option<FailureKind> {
    if !is_blocked_pair(family, i, j) {
        return None;
    }
    if i.union(j).is_admissible() {
        return Some(FailureKind::UnionAdmissible);
    }
    let negated_j = j.negate();
    let augmentable = family
        .n
        .elements()
        .filter(|&x| !i.contains(x))
        .any(|x| family.contains(i.with(x)) && family.contains(i.with(x.negate()).difference(negated_j)));
    (!augmentable).then_some(FailureKind::NoAugmentingX)
}

/// Runs the axiom over every ordered pair, by `|I|`, then `|J|`, then
/// canonical order of `I` and of `J`; reports the first violation.
pub fn axiom_holds(family: &IndependenceFamily) -> AxiomCheckResult {
    let sets = family.sets();
    let blocks = cardinality_blocks(sets);
    let violation = blocks.iter().enumerate().find_map(|(bi, small)| {
        blocks[bi + 1..].iter().find_map(|large| {
            small.iter().find_map(|&i| {
                large
                    .iter()
                    .find_map(|&j| pair_violation(family, i, j).map(|kind| Violation { i, j, kind }))
            })
        })
    });
    let rank = family.rank();
    AxiomCheckResult {
        holds: violation.is_none(),
        violation,
        rank,
        lagrangian: rank == family.n.get() as usize,
    }
}

/// Consecutive runs of equal cardinality in a canonically sorted slice.
fn cardinality_blocks(sets: &[SignedSubset]) -> Vec<&[SignedSubset]> {
    sets.chunk_by(|a, b| a.len() == b.len()).collect()
}
