//! Admissible total orderings of `E±n` and weight functions compatible with them.
//!
//! An ordering is stored largest-first: positions `0..n` hold the top row,
//! positions `n..2n` hold the top row reversed and negated, so the element
//! at position `p` is the negative of the element at position `2n - 1 - p`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::signed_sets::{GroundSize, SignedElement, SignedSubset};

pub type Weight = Rational64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrdering {
    n: GroundSize,
    full: Vec<SignedElement>,
    /// Position of each element (indexed by `SignedElement::index`), 0 = largest.
    position: [u8; 32],
}

impl AdmissibleOrdering {
    /// Builds the ordering whose largest `n` elements are `top_row`, largest first.
    pub fn from_top_row(top_row: &[SignedElement], n: GroundSize) -> Result<Self> {
        if top_row.len() != n.get() as usize {
            return Err(Error::OrderingLength {
                expected: n.get() as usize,
                found: top_row.len(),
            });
        }
        let mut seen = 0u32;
        for &e in top_row {
            if !n.contains(e) {
                return Err(Error::ElementOutOfRange {
                    value: e.value() as i64,
                    n: n.get(),
                });
            }
            let bit = 1 << (e.magnitude() - 1);
            if seen & bit != 0 {
                return Err(Error::RepeatedMagnitude(e.magnitude()));
            }
            seen |= bit;
        }
        let full: Vec<SignedElement> = top_row
            .iter()
            .copied()
            .chain(top_row.iter().rev().map(|e| e.negate()))
            .collect();
        let mut position = [u8::MAX; 32];
        for (p, e) in full.iter().enumerate() {
            position[e.index()] = p as u8;
        }
        Ok(AdmissibleOrdering { n, full, position })
    }

    /// Parses the CLI syntax: the top row as space-separated integers.
    pub fn parse(text: &str, n: GroundSize) -> Result<Self> {
        let top_row = text
            .split_whitespace()
            .map(|t| {
                let value: i64 = t
                    .parse()
                    .map_err(|_| Error::InvalidOrdering(format!("malformed token {t:?}")))?;
                SignedElement::new(value, n)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_top_row(&top_row, n)
    }

    /// `n ≻ … ≻ 1 ≻ -1 ≻ … ≻ -n`, ordinary integer order.
    pub fn standard(n: GroundSize) -> Self {
        let top: Vec<_> = (1..=n.get() as i8).rev().map(SignedElement::from_value).collect();
        Self::from_top_row(&top, n).expect("standard top row is valid")
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn top_row(&self) -> &[SignedElement] {
        &self.full[..self.n.get() as usize]
    }

    /// All `2n` elements, largest first.
    pub fn elements(&self) -> &[SignedElement] {
        &self.full
    }

    /// 0-based position of `e`, 0 being the largest.
    pub fn position(&self, e: SignedElement) -> usize {
        self.position[e.index()] as usize
    }

    pub fn element_at(&self, position: usize) -> SignedElement {
        self.full[position]
    }

    /// `Greater` when `x ≻ y`.
    pub fn compare(&self, x: SignedElement, y: SignedElement) -> Ordering {
        self.position(y).cmp(&self.position(x))
    }

    /// Members of `s`, largest first.
    pub fn descending(&self, s: SignedSubset) -> impl Iterator<Item = SignedElement> + '_ {
        self.full.iter().copied().filter(move |&e| s.contains(e))
    }

    /// The `k` largest elements.
    pub fn prefix(&self, k: usize) -> SignedSubset {
        self.full[..k].iter().copied().collect()
    }
}

impl fmt::Debug for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.full.iter().map(|e| e.to_string()).collect();
        write!(f, "AdmissibleOrdering({})", items.join(" > "))
    }
}

/// Top row as CLI syntax, e.g. `-2 1 3`.
impl fmt::Display for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.top_row().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn ordering_from_top_row(seq: &[SignedElement], n: GroundSize) -> Result<AdmissibleOrdering> {
    AdmissibleOrdering::from_top_row(seq, n)
}

pub fn compare(o: &AdmissibleOrdering, x: SignedElement, y: SignedElement) -> Ordering {
    o.compare(x, y)
}

/// `2^n · n!`.
pub fn ordering_count(n: GroundSize) -> u64 {
    let n = n.get() as u64;
    (1..=n).product::<u64>() << n
}

/// The `index`-th ordering in enumeration order: lexicographic over the
/// magnitude permutation, then over the sign vector (positive first, first
/// position most significant).
pub fn ordering_at(n: GroundSize, index: u64) -> AdmissibleOrdering {
    let size = n.get() as usize;
    assert!(index < ordering_count(n), "ordering index out of range");
    let signs = index & ((1u64 << size) - 1);
    let mut rank = index >> size;
    let mut remaining: Vec<u8> = (1..=n.get()).collect();
    let mut top = Vec::with_capacity(size);
    for slot in 0..size {
        let block: u64 = (1..(size - slot) as u64).product();
        let pick = (rank / block) as usize;
        rank %= block;
        let magnitude = remaining.remove(pick) as i8;
        let negative = signs >> (size - 1 - slot) & 1 == 1;
        top.push(SignedElement::from_value(if negative {
            -magnitude
        } else {
            magnitude
        }));
    }
    AdmissibleOrdering::from_top_row(&top, n).expect("unranked top row is valid")
}

/// Restartable stream of every admissible ordering of `E±n`.
#[derive(Debug, Clone)]
pub struct OrderingStream {
    n: GroundSize,
    next: u64,
    end: u64,
}

impl OrderingStream {
    /// The sub-stream covering indices `start..end`.
    pub fn range(n: GroundSize, start: u64, end: u64) -> Self {
        let end = end.min(ordering_count(n));
        OrderingStream {
            n,
            next: start.min(end),
            end,
        }
    }
}

impl Iterator for OrderingStream {
    type Item = AdmissibleOrdering;

    fn next(&mut self) -> Option<AdmissibleOrdering> {
        if self.next >= self.end {
            return None;
        }
        let o = ordering_at(self.n, self.next);
        self.next += 1;
        Some(o)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn all_admissible_orderings(n: GroundSize) -> OrderingStream {
    OrderingStream::range(n, 0, ordering_count(n))
}

/// A total map `E±n → ℚ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    n: GroundSize,
    weights: Vec<Weight>,
}

impl WeightFunction {
    pub fn constant(n: GroundSize, value: Weight) -> Self {
        WeightFunction {
            n,
            weights: vec![value; n.element_count()],
        }
    }

    /// Builds from a closure over every element.
    pub fn from_fn(n: GroundSize, f: impl Fn(SignedElement) -> Weight) -> Self {
        WeightFunction {
            n,
            weights: n.elements().map(f).collect(),
        }
    }

    pub fn n(&self) -> GroundSize {
        self.n
    }

    pub fn get(&self, e: SignedElement) -> Weight {
        self.weights[e.index()]
    }

    /// Sum over the members of `s`.
    pub fn weight_of(&self, s: SignedSubset) -> Weight {
        s.iter().map(|e| self.get(e)).sum()
    }
}

/// Weights never increase when read largest-first along `o`.
pub fn is_compatible(w: &WeightFunction, o: &AdmissibleOrdering) -> bool {
    w.n == o.n
        && o.elements()
            .windows(2)
            .all(|pair| w.get(pair[0]) >= w.get(pair[1]))
}

/// Weight 1 on the `k` largest elements of `o`, 0 elsewhere.
pub fn threshold_weight(o: &AdmissibleOrdering, k: usize) -> Result<WeightFunction> {
    let max = o.n.element_count();
    if k > max {
        return Err(Error::ThresholdOutOfRange { k, max });
    }
    Ok(WeightFunction::from_fn(o.n, |e| {
        if o.position(e) < k {
            Weight::from_integer(1)
        } else {
            Weight::from_integer(0)
        }
    }))
}

/// A seeded weight compatible with `o`, with values in `[-10, 10]`.
///
/// Denominators are drawn from `1..=4` so that ties and near-step
/// functions are common.
pub fn random_compatible_weight(o: &AdmissibleOrdering, seed: u64) -> WeightFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<Weight> = (0..o.n.element_count())
        .map(|_| {
            let denom: i64 = rng.random_range(1..=4);
            let numer: i64 = rng.random_range(-10 * denom..=10 * denom);
            Weight::new(numer, denom)
        })
        .collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    WeightFunction::from_fn(o.n, |e| values[o.position(e)])
}
