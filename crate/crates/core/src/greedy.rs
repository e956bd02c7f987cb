//! The greedy algorithm over a basis family, weights of sets, and optimality.

use std::fmt;

use crate::error::{Error, Result};
use crate::orderings::{random_compatible_weight, AdmissibleOrdering, Weight, WeightFunction};
use crate::signed_sets::{GroundSize, SignedElement, SignedSubset};

/// A nonempty family of distinct, equinumerous, admissible subsets of `E±n`.
///
/// Members are kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisFamily {
    n: GroundSize,
    sets: Vec<SignedSubset>,
    rank: usize,
}

impl BasisFamily {
    pub fn new(n: GroundSize, mut sets: Vec<SignedSubset>) -> Result<Self> {
        let first = *sets.first().ok_or(Error::EmptyFamily)?;
        for &s in &sets {
            check_member(n, s)?;
            if s.len() != first.len() {
                return Err(Error::UnequalCardinality {
                    first: first.len(),
                    other: s.len(),
                });
            }
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedMember(w[0]));
        }
        Ok(BasisFamily {
            n,
            sets,
            rank: first.len(),
        })
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn sets(&self) -> &[SignedSubset] {
        &self.sets
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    /// Rank equals `n`.
    pub fn is_lagrangian(&self) -> bool {
        self.rank == self.n.get() as usize
    }
}

pub(crate) fn check_member(n: GroundSize, s: SignedSubset) -> Result<()> {
    if !s.fits(n) {
        let outside = s.difference(SignedSubset::from_bits(n.full_mask()));
        let e = outside.iter().next().expect("nonempty difference");
        return Err(Error::ElementOutOfRange {
            value: e.value() as i64,
            n: n.get(),
        });
    }
    if !s.is_admissible() {
        return Err(Error::InadmissibleSet(s));
    }
    Ok(())
}

/// One considered element of a greedy run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyStep {
    pub element: SignedElement,
    pub accepted: bool,
    /// The set tested for extendability: the current choice plus `element`.
    pub candidate: SignedSubset,
}

impl GreedyStep {
    pub fn reason(&self) -> String {
        if self.accepted {
            format!("{} extends a member", self.candidate.braced())
        } else {
            format!("{} extends no member", self.candidate.braced())
        }
    }
}

impl fmt::Display for GreedyStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.accepted { "ACCEPT" } else { "SKIP" };
        write!(f, "{} {} {}", self.element, verdict, self.reason())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub chosen: SignedSubset,
    pub steps: Vec<GreedyStep>,
}

impl GreedyTrace {
    /// Accepted elements, largest first.
    pub fn accepted(&self) -> impl Iterator<Item = SignedElement> + '_ {
        self.steps.iter().filter(|s| s.accepted).map(|s| s.element)
    }
}

/// `s` is contained in some member of the family.
pub fn feasible_extension(family: &BasisFamily, s: SignedSubset) -> bool {
    extends_any(family.sets(), s)
}

fn extends_any(sets: &[SignedSubset], s: SignedSubset) -> bool {
    sets.iter().any(|&b| s.is_subset(b))
}

/// Scans `E±n` from largest to smallest, keeping each element whose
/// addition still leaves the choice inside some member.
pub fn greedy_solution(family: &BasisFamily, o: &AdmissibleOrdering) -> GreedyTrace {
    greedy_over(family.sets(), o)
}

/// Greedy over an arbitrary nonempty family. On an antichain the result is
/// always a member.
pub(crate) fn greedy_over(sets: &[SignedSubset], o: &AdmissibleOrdering) -> GreedyTrace {
    let mut chosen = SignedSubset::EMPTY;
    let steps = o
        .elements()
        .iter()
        .map(|&element| {
            let candidate = chosen.with(element);
            let accepted = extends_any(sets, candidate);
            if accepted {
                chosen = candidate;
            }
            GreedyStep {
                element,
                accepted,
                candidate,
            }
        })
        .collect();
    GreedyTrace { chosen, steps }
}

/// Chosen set only, without recording a trace.
pub(crate) fn greedy_choice(sets: &[SignedSubset], o: &AdmissibleOrdering) -> SignedSubset {
    o.elements().iter().fold(SignedSubset::EMPTY, |chosen, &e| {
        let candidate = chosen.with(e);
        if extends_any(sets, candidate) {
            candidate
        } else {
            chosen
        }
    })
}

pub fn weight_of(s: SignedSubset, w: &WeightFunction) -> Weight {
    w.weight_of(s)
}

/// No member of the family outweighs `candidate`.
pub fn is_optimal(family: &BasisFamily, candidate: SignedSubset, w: &WeightFunction) -> Result<bool> {
    if !family.contains(candidate) {
        return Err(Error::NotAMember(candidate));
    }
    Ok(outweighs_all(family.sets(), candidate, w))
}

fn outweighs_all(sets: &[SignedSubset], candidate: SignedSubset, w: &WeightFunction) -> bool {
    let own = w.weight_of(candidate);
    sets.iter().all(|&b| w.weight_of(b) <= own)
}

/// For every `i`, the `i`-th largest member of `b1` is at least the `i`-th
/// largest member of `b2` along `o`.
pub fn gale_dominates(o: &AdmissibleOrdering, b1: SignedSubset, b2: SignedSubset) -> Result<bool> {
    if b1.len() != b2.len() {
        return Err(Error::CardinalityMismatch {
            left: b1.len(),
            right: b2.len(),
        });
    }
    Ok(dominates(o, b1, b2))
}

pub(crate) fn dominates(o: &AdmissibleOrdering, b1: SignedSubset, b2: SignedSubset) -> bool {
    // Walking largest-first, b1 must never fall behind b2 in count.
    let mut lead = 0i32;
    for &e in o.elements() {
        lead += i32::from(b1.contains(e)) - i32::from(b2.contains(e));
        if lead < 0 {
            return false;
        }
    }
    true
}

/// `candidate` gale-dominates every member.
pub fn dominates_all(family: &BasisFamily, o: &AdmissibleOrdering, candidate: SignedSubset) -> bool {
    family.sets().iter().all(|&b| dominates(o, candidate, b))
}

/// `candidate` is optimal under `threshold_weight(o, k)` for every `k` in `0..=2n`.
pub fn optimal_for_all_thresholds(
    family: &BasisFamily,
    o: &AdmissibleOrdering,
    candidate: SignedSubset,
) -> bool {
    first_beating_threshold(family.sets(), o, candidate).is_none()
}

/// Smallest threshold `k` and the first member that strictly outweighs `candidate` under it.
pub(crate) fn first_beating_threshold(
    sets: &[SignedSubset],
    o: &AdmissibleOrdering,
    candidate: SignedSubset,
) -> Option<(usize, SignedSubset)> {
    (0..=o.n().element_count()).find_map(|k| {
        let prefix = o.prefix(k);
        let own = candidate.intersection(prefix).len();
        sets.iter()
            .find(|b| b.intersection(prefix).len() > own)
            .map(|&b| (k, b))
    })
}

/// `candidate` is optimal under `random_compatible_weight(o, seed)` for every seed given.
pub fn optimal_for_sampled_weights(
    family: &BasisFamily,
    o: &AdmissibleOrdering,
    candidate: SignedSubset,
    seeds: impl IntoIterator<Item = u64>,
) -> bool {
    seeds
        .into_iter()
        .all(|seed| outweighs_all(family.sets(), candidate, &random_compatible_weight(o, seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orderings::{all_admissible_orderings, ordering_from_top_row, threshold_weight};

    fn n(v: i64) -> GroundSize {
        GroundSize::new(v).unwrap()
    }

    fn set(values: &[i8]) -> SignedSubset {
        SignedSubset::from_values(values)
    }

    fn family(size: i64, sets: &[&[i8]]) -> BasisFamily {
        BasisFamily::new(n(size), sets.iter().map(|s| set(s)).collect()).unwrap()
    }

    fn two_bases() -> BasisFamily {
        family(3, &[&[-2, -1, 3], &[-2, 1, 3]])
    }

    fn worked_example() -> BasisFamily {
        family(3, &[&[1, -3], &[2, -3], &[-1, 2], &[-1, 3]])
    }

    #[test]
    fn family_validation() {
        assert!(matches!(BasisFamily::new(n(3), vec![]), Err(Error::EmptyFamily)));
        assert!(matches!(
            BasisFamily::new(n(3), vec![set(&[1, -1])]),
            Err(Error::InadmissibleSet(_))
        ));
        assert!(matches!(
            BasisFamily::new(n(3), vec![set(&[1]), set(&[1, 2])]),
            Err(Error::UnequalCardinality { first: 1, other: 2 })
        ));
        assert!(matches!(
            BasisFamily::new(n(3), vec![set(&[1]), set(&[1])]),
            Err(Error::RepeatedMember(_))
        ));
        assert!(matches!(
            BasisFamily::new(n(2), vec![set(&[3])]),
            Err(Error::ElementOutOfRange { value: 3, n: 2 })
        ));
        assert!(family(3, &[&[1, 2, 3]]).is_lagrangian());
        assert!(!worked_example().is_lagrangian());
    }

    #[test]
    fn feasible_extension_examples() {
        assert!(!feasible_extension(&two_bases(), set(&[2, 3])));
        assert!(feasible_extension(&two_bases(), SignedSubset::EMPTY));
        assert!(feasible_extension(&worked_example(), set(&[-1])));
    }

    #[test]
    fn feasible_extension_is_antitone() {
        let f = worked_example();
        for t in crate::signed_sets::all_subsets(n(3)) {
            if feasible_extension(&f, t) {
                for s in crate::signed_sets::subsets_of(t) {
                    assert!(feasible_extension(&f, s));
                }
            }
        }
    }

    #[test]
    fn greedy_two_bases_standard() {
        let trace = greedy_solution(&two_bases(), &AdmissibleOrdering::standard(n(3)));
        assert_eq!(trace.chosen, set(&[-2, 1, 3]));
        let lines: Vec<String> = trace.steps.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            lines,
            vec![
                "3 ACCEPT {3} extends a member",
                "2 SKIP {2,3} extends no member",
                "1 ACCEPT {1,3} extends a member",
                "-1 SKIP {1,-1,3} extends no member",
                "-2 ACCEPT {1,-2,3} extends a member",
                "-3 SKIP {1,-2,3,-3} extends no member",
            ]
        );
    }

    #[test]
    fn greedy_worked_example_standard() {
        // 3 fits {-1,3}; 2 and 1 are blocked by 3; -1 completes {-1,3}.
        let trace = greedy_solution(&worked_example(), &AdmissibleOrdering::standard(n(3)));
        assert_eq!(trace.chosen, set(&[-1, 3]));
        let accepted: Vec<i8> = trace.accepted().map(|e| e.value()).collect();
        assert_eq!(accepted, vec![3, -1]);
    }

    #[test]
    fn greedy_single_member() {
        let f = family(3, &[&[1, -2]]);
        for o in all_admissible_orderings(n(3)) {
            assert_eq!(greedy_solution(&f, &o).chosen, set(&[1, -2]));
        }
    }

    #[test]
    fn greedy_returns_members_with_decreasing_acceptances() {
        let f = worked_example();
        for o in all_admissible_orderings(n(3)) {
            let trace = greedy_solution(&f, &o);
            assert!(f.contains(trace.chosen));
            assert_eq!(trace.steps.len(), 6);
            let positions: Vec<usize> = trace.accepted().map(|e| o.position(e)).collect();
            assert!(positions.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(trace, greedy_solution(&f, &o));
            assert_eq!(trace.chosen, greedy_choice(f.sets(), &o));
        }
    }

    #[test]
    fn weight_examples() {
        let o = ordering_from_top_row(&[-2, 1, 3].map(SignedElement::from_value), n(3)).unwrap();
        assert_eq!(
            weight_of(SignedSubset::EMPTY, &threshold_weight(&o, 3).unwrap()),
            Weight::from_integer(0)
        );
        let all_one = threshold_weight(&o, 6).unwrap();
        assert_eq!(weight_of(set(&[1, -2, 3]), &all_one), Weight::from_integer(3));
        assert_eq!(
            weight_of(set(&[-2, 3]), &threshold_weight(&o, 2).unwrap()),
            Weight::from_integer(1)
        );
    }

    #[test]
    fn optimality_examples() {
        let single = family(2, &[&[1]]);
        let w = threshold_weight(&AdmissibleOrdering::standard(n(2)), 1).unwrap();
        assert!(is_optimal(&single, set(&[1]), &w).unwrap());

        let constant = WeightFunction::constant(n(3), Weight::new(7, 3));
        for &b in worked_example().sets() {
            assert!(is_optimal(&worked_example(), b, &constant).unwrap());
        }

        let w = threshold_weight(&AdmissibleOrdering::standard(n(3)), 3).unwrap();
        // {-2,1,3} weighs 2, {-2,-1,3} weighs 1.
        assert_eq!(weight_of(set(&[-2, 1, 3]), &w), Weight::from_integer(2));
        assert_eq!(weight_of(set(&[-2, -1, 3]), &w), Weight::from_integer(1));
        assert!(is_optimal(&two_bases(), set(&[-2, 1, 3]), &w).unwrap());
        assert!(!is_optimal(&two_bases(), set(&[-2, -1, 3]), &w).unwrap());

        assert!(matches!(
            is_optimal(&two_bases(), set(&[1, 2, 3]), &w),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn gale_examples() {
        let std3 = AdmissibleOrdering::standard(n(3));
        let b = set(&[1, -2]);
        assert!(gale_dominates(&std3, b, b).unwrap());
        assert!(gale_dominates(&std3, set(&[3, 2]), set(&[1, -2])).unwrap());
        assert!(!gale_dominates(&std3, set(&[1, -2]), set(&[3, 2])).unwrap());
        assert!(matches!(
            gale_dominates(&std3, set(&[1]), set(&[1, 2])),
            Err(Error::CardinalityMismatch { left: 1, right: 2 })
        ));
    }

    /// The i-th-largest comparison written out directly.
    fn dominates_by_rank(o: &AdmissibleOrdering, b1: SignedSubset, b2: SignedSubset) -> bool {
        o.descending(b1)
            .zip(o.descending(b2))
            .all(|(x, y)| o.position(x) <= o.position(y))
    }

    #[test]
    fn dominance_counter_matches_rankwise_comparison() {
        let g = n(3);
        let admissible: Vec<_> = crate::signed_sets::all_subsets(g)
            .filter(|s| s.is_admissible())
            .collect();
        for o in all_admissible_orderings(g) {
            for &a in &admissible {
                for &b in admissible.iter().filter(|b| b.len() == a.len()) {
                    assert_eq!(dominates(&o, a, b), dominates_by_rank(&o, a, b));
                }
            }
        }
    }

    #[test]
    fn thresholds_match_dominance_on_examples() {
        for f in [worked_example(), two_bases(), family(2, &[&[1, 2], &[-1, -2]])] {
            for o in all_admissible_orderings(f.n()) {
                let chosen = greedy_solution(&f, &o).chosen;
                assert_eq!(
                    optimal_for_all_thresholds(&f, &o, chosen),
                    dominates_all(&f, &o, chosen)
                );
            }
        }
    }
}
