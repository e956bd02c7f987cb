//! WXYZ decompositions and orderings, and a witness search that follows the
//! necessity argument for the independent-set axiom.
//!
//! For independent `I`, `J`:
//! `W = I \ -J`, `Y = J \ (I ∪ -I)`, `Z = I ∩ -J`, and `X` is everything
//! not touched by `W`, `Y`, `Z` or their negatives. A half of `X` picks one
//! element from each mirror pair of `X`. A WXYZ ordering lists `W`, a half
//! `H`, `Y`, then `Z` as its top row.

use crate::axioms::{
    axiom_holds, downward_closure, find_counterexample_in, FailureKind, IndependenceFamily, Violation,
    Witness,
};
use crate::greedy::{greedy_choice, BasisFamily};
use crate::orderings::AdmissibleOrdering;
use crate::parallel::Execution;
use crate::signed_sets::{GroundSize, SignedElement, SignedSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WxyzDecomposition {
    pub w: SignedSubset,
    pub y: SignedSubset,
    pub z: SignedSubset,
}

impl WxyzDecomposition {
    /// Elements of `E±n` outside `W ∪ Y ∪ Z` and their negatives.
    pub fn x(&self, n: GroundSize) -> SignedSubset {
        let touched = self.w.union(self.y).union(self.z);
        SignedSubset::from_bits(n.full_mask()).difference(touched.union(touched.negate()))
    }
}

pub fn wxyz_decompose(i: SignedSubset, j: SignedSubset) -> WxyzDecomposition {
    let negated_j = j.negate();
    WxyzDecomposition {
        w: i.difference(negated_j),
        y: j.difference(i.union(i.negate())),
        z: i.intersection(negated_j),
    }
}

/// Every half of `x` (which must be closed under negation), in order of
/// sign choices over ascending magnitudes, positive first.
pub fn halves(x: SignedSubset) -> Vec<SignedSubset> {
    let positives: Vec<SignedElement> = x.iter().filter(|e| !e.is_negative()).collect();
    (0..1u32 << positives.len())
        .map(|signs| {
            positives
                .iter()
                .enumerate()
                .map(|(slot, &e)| {
                    if signs >> (positives.len() - 1 - slot) & 1 == 1 {
                        e.negate()
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

fn by_magnitude(s: SignedSubset) -> Vec<SignedElement> {
    // Canonical order is already ascending magnitude.
    s.iter().collect()
}

/// All arrangements of `items` in lexicographic order of positions.
fn permutations(items: &[SignedElement]) -> Vec<Vec<SignedElement>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// WXYZ orderings for `d`, one per half of `X`.
///
/// Blocks are laid out in ascending magnitude; with `expand_blocks` every
/// arrangement inside each of the four blocks is produced as well.
pub fn wxyz_orderings(d: &WxyzDecomposition, n: GroundSize, expand_blocks: bool) -> Vec<AdmissibleOrdering> {
    let arrangements = |s: SignedSubset| {
        if expand_blocks {
            permutations(&by_magnitude(s))
        } else {
            vec![by_magnitude(s)]
        }
    };
    let mut out = Vec::new();
    for h in halves(d.x(n)) {
        for w in arrangements(d.w) {
            for hh in arrangements(h) {
                for y in arrangements(d.y) {
                    for z in arrangements(d.z) {
                        let top: Vec<SignedElement> =
                            [&w, &hh, &y, &z].into_iter().flatten().copied().collect();
                        out.push(
                            AdmissibleOrdering::from_top_row(&top, n)
                                .expect("W, H, Y, Z cover each magnitude once"),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Moves `moved` (a subset of the top row) to the end of the top row,
/// keeping relative order; the bottom half follows by mirror symmetry.
pub fn reposition(o: &AdmissibleOrdering, moved: SignedSubset) -> AdmissibleOrdering {
    let top = o.top_row();
    let reordered: Vec<SignedElement> = top
        .iter()
        .filter(|e| !moved.contains(**e))
        .chain(top.iter().filter(|e| moved.contains(**e)))
        .copied()
        .collect();
    AdmissibleOrdering::from_top_row(&reordered, o.n()).expect("a rearranged top row stays valid")
}

/// Which step of the construction produced the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessStage {
    /// A plain WXYZ ordering with weight one through the end of `-Z`.
    WxyzOrdering,
    /// The ordering with the elements of `(H ∪ Y) ∩ S` moved after `Z`.
    Repositioned,
    /// Neither construction applied; exhaustive search found the witness.
    BruteForceFallback,
}

impl std::fmt::Display for WitnessStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WitnessStage::WxyzOrdering => "wxyz-ordering",
            WitnessStage::Repositioned => "repositioned",
            WitnessStage::BruteForceFallback => "brute-force-fallback",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WxyzTrace {
    /// The axiom violation the construction starts from.
    pub violation: Violation,
    pub decomposition: WxyzDecomposition,
    /// `S`: elements of `X` with both signs extending `W`, plus elements of
    /// `Y` extending `W`.
    pub s: SignedSubset,
    /// The half of `X` minimizing the number of its elements extending `W`.
    pub minimizing_half: SignedSubset,
    pub stage: WitnessStage,
    pub witness: Option<Witness>,
}

/// `S` from the necessity argument, with independence in `family`.
pub fn augmenting_candidates(family: &IndependenceFamily, d: &WxyzDecomposition) -> SignedSubset {
    let n = family.n();
    let extends = |e: SignedElement| family.contains(d.w.with(e));
    let from_x = d.x(n).iter().filter(|&x| extends(x) && extends(x.negate()));
    let from_y = d.y.iter().filter(|&y| extends(y));
    from_x.chain(from_y).collect()
}

/// Searches for a witness against `family` by the WXYZ construction.
///
/// Returns `None` when the closure of `family` satisfies the axiom. The
/// returned witness, when present, always verifies; the stage says whether
/// it came from the construction or from the exhaustive fallback.
pub fn wxyz_witness(family: &BasisFamily) -> Option<WxyzTrace> {
    let closure = downward_closure(family);
    let violation = axiom_holds(&closure).violation?;
    let n = family.n();
    let sets = family.sets();
    let d = wxyz_decompose(violation.i, violation.j);
    // Weight one on W, H, Y, Z and -Z.
    let through_negated_z = n.get() as usize + d.z.len();
    let s = augmenting_candidates(&closure, &d);
    let extends_w = |e: SignedElement| closure.contains(d.w.with(e));
    let minimizing_half = halves(d.x(n))
        .into_iter()
        .min_by_key(|h| h.iter().filter(|&e| extends_w(e)).count())
        .expect("X always has at least the empty half");

    let mut trace = WxyzTrace {
        violation,
        decomposition: d,
        s,
        minimizing_half,
        stage: WitnessStage::WxyzOrdering,
        witness: None,
    };

    for o in wxyz_orderings(&d, n, false) {
        if let Some(w) = beaten_at(sets, o, through_negated_z) {
            trace.witness = Some(w);
            return Some(trace);
        }
    }

    let base = wxyz_orderings_for_half(&d, n, minimizing_half);
    let moved = minimizing_half.union(d.y).intersection(s);
    let repositioned = reposition(&base, moved);
    if let Some(w) = beaten_at(sets, repositioned, through_negated_z + moved.len()) {
        trace.stage = WitnessStage::Repositioned;
        trace.witness = Some(w);
        return Some(trace);
    }

    trace.stage = WitnessStage::BruteForceFallback;
    trace.witness = find_counterexample_in(n, sets, Execution::default());
    Some(trace)
}

fn wxyz_orderings_for_half(d: &WxyzDecomposition, n: GroundSize, h: SignedSubset) -> AdmissibleOrdering {
    let top: Vec<SignedElement> = [d.w, h, d.y, d.z].into_iter().flat_map(by_magnitude).collect();
    AdmissibleOrdering::from_top_row(&top, n).expect("W, H, Y, Z cover each magnitude once")
}

/// A witness at exactly threshold `k`, if greedy loses there.
fn beaten_at(sets: &[SignedSubset], ordering: AdmissibleOrdering, k: usize) -> Option<Witness> {
    let greedy = greedy_choice(sets, &ordering);
    let prefix = ordering.prefix(k);
    let own = greedy.intersection(prefix).len();
    let beating = sets
        .iter()
        .copied()
        .find(|b| b.intersection(prefix).len() > own)?;
    Some(Witness {
        ordering,
        threshold: k,
        greedy,
        beating,
    })
}

/// True when a violation of this kind is covered by the constructive argument.
pub fn is_constructive(kind: FailureKind) -> bool {
    kind == FailureKind::NoAugmentingX
}
