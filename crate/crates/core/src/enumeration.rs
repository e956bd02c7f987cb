//! Exhaustive sweeps that cross-check the greedy definition against the
//! independent-set axiom on every small family.
//!
//! A basis family is identified by a bitmask over
//! [`admissible_k_subsets`]: bit `b` set means the `b`-th set (in canonical
//! order) is a member. Downsets use the same scheme over all admissible
//! subsets of `E±n`.

use std::fmt;
use std::io::Write;
use std::ops::Range;

use crate::axioms::{
    axiom_holds, definition_holds_with, downward_closure, find_counterexample_in, IndependenceFamily,
};
use crate::error::{Error, Result};
use crate::family_file::format_family;
use crate::greedy::{greedy_choice, optimal_for_all_thresholds, optimal_for_sampled_weights, BasisFamily};
use crate::orderings::{ordering_at, ordering_count};
use crate::parallel::{fold_reduce, Execution};
use crate::signed_sets::{GroundSize, SignedElement, SignedSubset};

/// Admissible `k`-subsets of `E±n` in canonical order; there are `C(n,k)·2^k`.
pub fn admissible_k_subsets(n: GroundSize, k: usize) -> Result<Vec<SignedSubset>> {
    if k > n.get() as usize {
        return Err(Error::RankTooLarge { n: n.get(), k });
    }
    let mut out = Vec::new();
    let mut magnitudes = Vec::with_capacity(k);
    choose_magnitudes(n.get(), 1, k, &mut magnitudes, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn choose_magnitudes(n: u8, from: u8, k: usize, chosen: &mut Vec<u8>, out: &mut Vec<SignedSubset>) {
    if chosen.len() == k {
        for signs in 0..1u32 << k {
            out.push(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| {
                        let v = m as i8;
                        SignedElement::from_value(if signs >> i & 1 == 1 { -v } else { v })
                    })
                    .collect(),
            );
        }
        return;
    }
    for m in from..=n {
        chosen.push(m);
        choose_magnitudes(n, m + 1, k, chosen, out);
        chosen.pop();
    }
}

/// `(n, k)` pairs small enough to sweep every family.
pub fn within_budget(n: GroundSize, k: usize) -> bool {
    k <= n.get() as usize && (n.get() <= 3 || (n.get() == 4 && k <= 1))
}

fn check_budget(n: GroundSize, k: usize) -> Result<()> {
    if k > n.get() as usize {
        return Err(Error::RankTooLarge { n: n.get(), k });
    }
    if !within_budget(n, k) {
        return Err(Error::BudgetExceeded { n: n.get(), k });
    }
    Ok(())
}

/// Members selected by a family identifier.
pub fn family_from_id(universe: &[SignedSubset], id: u64) -> Vec<SignedSubset> {
    universe
        .iter()
        .enumerate()
        .filter(|(b, _)| id >> b & 1 == 1)
        .map(|(_, &s)| s)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: GroundSize,
    pub k: usize,
    pub total_families: u64,
    pub matroid_count: u64,
    /// Identifiers where the definition and the axiom disagree, ascending.
    pub mismatches: Vec<u64>,
    /// Rank `n`: every matroid in the sweep is Lagrangian.
    pub lagrangian: bool,
    /// `(family, ordering)` pairs where threshold optimality and sampled
    /// optimality disagree; present only when sampling was requested.
    pub sampled_weight_discrepancies: Option<u64>,
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "lagrangian: {}", self.lagrangian)?;
        writeln!(f, "total_families: {}", self.total_families)?;
        writeln!(f, "matroid_count: {}", self.matroid_count)?;
        if let Some(d) = self.sampled_weight_discrepancies {
            writeln!(f, "sampled_weight_discrepancies: {d}")?;
        }
        let ids: Vec<String> = self.mismatches.iter().map(|id| id.to_string()).collect();
        write!(f, "mismatches: {}", ids.len())?;
        if !ids.is_empty() {
            write!(f, " [{}]", ids.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepOptions {
    pub execution: Option<Execution>,
    /// Random compatible weights tried per `(family, ordering)`; 0 disables sampling.
    pub sampled_weights: u64,
    pub seed: u64,
}

#[derive(Default)]
struct Tally {
    total: u64,
    matroids: u64,
    mismatches: Vec<u64>,
    discrepancies: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.matroids += other.matroids;
        self.mismatches.extend(other.mismatches);
        self.discrepancies += other.discrepancies;
        self
    }
}

/// Definition versus axiom on every nonempty family of admissible `k`-subsets.
pub fn sweep_basis_families(n: GroundSize, k: usize) -> Result<EnumerationReport> {
    sweep_basis_families_with(n, k, SweepOptions::default())
}

pub fn sweep_basis_families_with(
    n: GroundSize,
    k: usize,
    options: SweepOptions,
) -> Result<EnumerationReport> {
    check_budget(n, k)?;
    let universe = admissible_k_subsets(n, k)?;
    let ids = 1..1u64 << universe.len();
    let exec = options.execution.unwrap_or_default();
    let samples = options.sampled_weights;
    let seeds = options.seed..options.seed.wrapping_add(samples);
    let mut tally = fold_reduce(
        ids,
        exec,
        Tally::default,
        |mut acc, id| {
            let sets = family_from_id(&universe, id);
            let family = BasisFamily::new(n, sets).expect("sweep families are valid");
            let by_definition = definition_holds_with(n, family.sets(), Execution::Sequential);
            let by_axiom = axiom_holds(&downward_closure(&family)).holds;
            acc.total += 1;
            acc.matroids += u64::from(by_definition);
            if by_definition != by_axiom {
                acc.mismatches.push(id);
            }
            if samples > 0 {
                acc.discrepancies += threshold_reduction_discrepancies(&family, seeds.clone());
            }
            acc
        },
        Tally::merge,
    );
    tally.mismatches.sort_unstable();
    Ok(EnumerationReport {
        n,
        k,
        total_families: tally.total,
        matroid_count: tally.matroids,
        mismatches: tally.mismatches,
        lagrangian: k == n.get() as usize,
        sampled_weight_discrepancies: (samples > 0).then_some(tally.discrepancies),
    })
}

/// Orderings of `E±n` under which "greedy optimal for all thresholds"
/// and "greedy optimal for every sampled weight" disagree.
pub fn threshold_reduction_discrepancies(family: &BasisFamily, seeds: Range<u64>) -> u64 {
    let n = family.n();
    (0..ordering_count(n))
        .filter(|&index| {
            let o = ordering_at(n, index);
            let chosen = greedy_choice(family.sets(), &o);
            optimal_for_all_thresholds(family, &o, chosen)
                != optimal_for_sampled_weights(family, &o, chosen, seeds.clone())
        })
        .count() as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownsetReport {
    pub n: GroundSize,
    /// Nonempty downward-closed families of admissible sets.
    pub total_families: u64,
    pub axiom_count: u64,
    /// Downsets whose maximal members have more than one size.
    pub unequal_maxima: u64,
    /// Failing downsets for which a verified witness was produced.
    pub witnesses_verified: u64,
    pub mismatches: Vec<u64>,
}

impl fmt::Display for DownsetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "total_downsets: {}", self.total_families)?;
        writeln!(f, "axiom_count: {}", self.axiom_count)?;
        writeln!(f, "unequal_maxima: {}", self.unequal_maxima)?;
        writeln!(f, "witnesses_verified: {}", self.witnesses_verified)?;
        let ids: Vec<String> = self.mismatches.iter().map(|id| id.to_string()).collect();
        write!(f, "mismatches: {}", ids.len())?;
        if !ids.is_empty() {
            write!(f, " [{}]", ids.join(", "))?;
        }
        Ok(())
    }
}

/// Every admissible subset of `E±n` in canonical order.
pub fn admissible_subsets(n: GroundSize) -> Vec<SignedSubset> {
    (0..=n.get() as usize)
        .flat_map(|k| admissible_k_subsets(n, k).expect("k <= n"))
        .collect()
}

/// Outcome for one downset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownsetVerdict {
    pub axiom_holds: bool,
    pub equal_maxima: bool,
    pub definition_holds: bool,
    pub witness_verified: bool,
}

impl DownsetVerdict {
    /// Axiom holds exactly when the maxima are equinumerous and pass the
    /// definition, and every failure carries a verified witness.
    pub fn consistent(&self) -> bool {
        if self.axiom_holds {
            self.equal_maxima && self.definition_holds
        } else {
            !(self.equal_maxima && self.definition_holds) && self.witness_verified
        }
    }
}

pub fn classify_downset(family: &IndependenceFamily) -> DownsetVerdict {
    let n = family.n();
    let axiom = axiom_holds(family).holds;
    let maxima = family.maximal_sets();
    let equal_maxima = maxima.iter().all(|s| s.len() == maxima[0].len());
    let definition_holds = equal_maxima && definition_holds_with(n, &maxima, Execution::Sequential);
    let witness_verified = !axiom
        && find_counterexample_in(n, &maxima, Execution::Sequential).is_some_and(|w| w.verify(&maxima));
    DownsetVerdict {
        axiom_holds: axiom,
        equal_maxima,
        definition_holds,
        witness_verified,
    }
}

/// Every nonempty downset of admissible subsets, `n <= 2`.
pub fn sweep_downsets(n: GroundSize) -> Result<DownsetReport> {
    sweep_downsets_with(n, Execution::default())
}

pub fn sweep_downsets_with(n: GroundSize, exec: Execution) -> Result<DownsetReport> {
    if n.get() > 2 {
        return Err(Error::BudgetExceeded {
            n: n.get(),
            k: n.get() as usize,
        });
    }
    let universe = admissible_subsets(n);

    #[derive(Default)]
    struct DownTally {
        total: u64,
        axiom: u64,
        unequal: u64,
        witnesses: u64,
        mismatches: Vec<u64>,
    }

    let mut tally = fold_reduce(
        1..1u64 << universe.len(),
        exec,
        DownTally::default,
        |mut acc, id| {
            let Ok(family) = IndependenceFamily::new(n, family_from_id(&universe, id)) else {
                return acc;
            };
            let verdict = classify_downset(&family);
            acc.total += 1;
            acc.axiom += u64::from(verdict.axiom_holds);
            acc.unequal += u64::from(!verdict.equal_maxima);
            acc.witnesses += u64::from(verdict.witness_verified);
            if !verdict.consistent() {
                acc.mismatches.push(id);
            }
            acc
        },
        |mut a, b| {
            a.total += b.total;
            a.axiom += b.axiom;
            a.unequal += b.unequal;
            a.witnesses += b.witnesses;
            a.mismatches.extend(b.mismatches);
            a
        },
    );
    tally.mismatches.sort_unstable();
    Ok(DownsetReport {
        n,
        total_families: tally.total,
        axiom_count: tally.axiom,
        unequal_maxima: tally.unequal,
        witnesses_verified: tally.witnesses,
        mismatches: tally.mismatches,
    })
}

/// Identifiers of every symplectic matroid in the `(n, k)` sweep, ascending.
pub fn matroid_ids(n: GroundSize, k: usize, exec: Execution) -> Result<Vec<u64>> {
    check_budget(n, k)?;
    let universe = admissible_k_subsets(n, k)?;
    let mut ids = fold_reduce(
        1..1u64 << universe.len(),
        exec,
        Vec::new,
        |mut acc, id| {
            if definition_holds_with(n, &family_from_id(&universe, id), Execution::Sequential) {
                acc.push(id);
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    ids.sort_unstable();
    Ok(ids)
}

/// Writes every symplectic matroid of the `(n, k)` sweep as a family-file
/// block, blocks separated by `---` lines. Returns the number written.
pub fn catalog<W: Write>(n: GroundSize, k: usize, sink: &mut W) -> Result<usize> {
    let universe = admissible_k_subsets(n, k)?;
    let ids = matroid_ids(n, k, Execution::default())?;
    for (i, &id) in ids.iter().enumerate() {
        let mut block = String::new();
        if i > 0 {
            block.push_str("---\n");
        }
        block.push_str(&format_family(&family_from_id(&universe, id)));
        sink.write_all(block.as_bytes())?;
    }
    sink.flush()?;
    Ok(ids.len())
}
