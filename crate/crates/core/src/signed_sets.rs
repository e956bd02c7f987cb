//! The signed ground set `E±n = {±1, …, ±n}` and its subsets.
//!
//! A [`SignedSubset`] is a 32-bit mask. Element `e` lives at bit
//! `2(|e| - 1)` when positive and at the next bit when negative, so the bit
//! order is the canonical element order `1, -1, 2, -2, …` and negation is a
//! swap of adjacent bits.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// Largest supported `n`; `2n` elements must fit in a `u32`.
pub const MAX_GROUND_SIZE: u8 = 16;

const EVEN_BITS: u32 = 0x5555_5555;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSize(u8);

impl GroundSize {
    pub fn new(n: i64) -> Result<Self> {
        if (1..=MAX_GROUND_SIZE as i64).contains(&n) {
            Ok(GroundSize(n as u8))
        } else {
            Err(Error::InvalidGroundSize(n))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Number of elements of `E±n`, i.e. `2n`.
    pub fn element_count(self) -> usize {
        2 * self.0 as usize
    }

    /// Mask containing every element of `E±n`.
    pub fn full_mask(self) -> u32 {
        if self.0 == 16 {
            u32::MAX
        } else {
            (1u32 << (2 * self.0)) - 1
        }
    }

    /// All elements in canonical order.
    pub fn elements(self) -> impl Iterator<Item = SignedElement> {
        (0..self.element_count()).map(SignedElement::from_index)
    }

    pub fn contains(self, e: SignedElement) -> bool {
        e.magnitude() <= self.0
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A nonzero element of `E±n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedElement(i8);

impl SignedElement {
    pub fn new(value: i64, n: GroundSize) -> Result<Self> {
        if value == 0 || value.unsigned_abs() > n.get() as u64 {
            return Err(Error::ElementOutOfRange { value, n: n.get() });
        }
        Ok(SignedElement(value as i8))
    }

    /// Builds an element without a ground-size check. Panics on zero or on
    /// magnitudes above [`MAX_GROUND_SIZE`].
    pub fn from_value(value: i8) -> Self {
        assert!(
            value != 0 && value.unsigned_abs() <= MAX_GROUND_SIZE,
            "invalid signed element {value}"
        );
        SignedElement(value)
    }

    pub(crate) fn from_index(index: usize) -> Self {
        let magnitude = (index / 2 + 1) as i8;
        SignedElement(if index.is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        })
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn magnitude(self) -> u8 {
        self.0.unsigned_abs()
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Bit position inside a [`SignedSubset`] mask.
    pub fn index(self) -> usize {
        2 * (self.magnitude() as usize - 1) + usize::from(self.is_negative())
    }

    pub fn bit(self) -> u32 {
        1 << self.index()
    }

    pub fn negate(self) -> Self {
        SignedElement(-self.0)
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn negate_element(e: SignedElement) -> SignedElement {
    e.negate()
}

/// A subset of `E±n` stored as a bitmask.
///
/// The `Ord` impl is the canonical family order: by cardinality, then
/// lexicographically on the members listed in canonical element order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignedSubset(u32);

impl SignedSubset {
    pub const EMPTY: SignedSubset = SignedSubset(0);

    pub fn from_bits(bits: u32) -> Self {
        SignedSubset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Panics if a value is zero or exceeds [`MAX_GROUND_SIZE`]; duplicates collapse.
    pub fn from_values(values: &[i8]) -> Self {
        values.iter().map(|&v| SignedElement::from_value(v)).collect()
    }

    pub fn singleton(e: SignedElement) -> Self {
        SignedSubset(e.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: SignedElement) -> bool {
        self.0 & e.bit() != 0
    }

    pub fn with(self, e: SignedElement) -> Self {
        SignedSubset(self.0 | e.bit())
    }

    pub fn without(self, e: SignedElement) -> Self {
        SignedSubset(self.0 & !e.bit())
    }

    pub fn union(self, other: Self) -> Self {
        SignedSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SignedSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SignedSubset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// `{-s : s ∈ self}`.
    pub fn negate(self) -> Self {
        SignedSubset(((self.0 & EVEN_BITS) << 1) | ((self.0 >> 1) & EVEN_BITS))
    }

    /// No pair `{i, -i}` inside the set.
    pub fn is_admissible(self) -> bool {
        self.0 & (self.0 >> 1) & EVEN_BITS == 0
    }

    /// Magnitudes present, as a mask with bit `m - 1` for magnitude `m`.
    pub fn magnitude_mask(self) -> u32 {
        let folded = (self.0 | (self.0 >> 1)) & EVEN_BITS;
        (0..16)
            .filter(|i| folded & (1 << (2 * i)) != 0)
            .fold(0, |acc, i| acc | (1 << i))
    }

    pub fn max_magnitude(self) -> u8 {
        if self.0 == 0 {
            0
        } else {
            (31 - self.0.leading_zeros()) as u8 / 2 + 1
        }
    }

    pub fn fits(self, n: GroundSize) -> bool {
        self.0 & !n.full_mask() == 0
    }

    /// Members in canonical order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// `{a,b,c}` with comma separators, for diagnostics.
    pub fn braced(self) -> Braced {
        Braced(self)
    }
}

pub fn negate_set(s: SignedSubset) -> SignedSubset {
    s.negate()
}

pub fn is_admissible(s: SignedSubset) -> bool {
    s.is_admissible()
}

impl Ord for SignedSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // The first differing element belongs to `self`.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for SignedSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<SignedElement> for SignedSubset {
    fn from_iter<T: IntoIterator<Item = SignedElement>>(iter: T) -> Self {
        SignedSubset(iter.into_iter().fold(0, |acc, e| acc | e.bit()))
    }
}

impl IntoIterator for SignedSubset {
    type Item = SignedElement;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = SignedElement;

    fn next(&mut self) -> Option<SignedElement> {
        if self.0 == 0 {
            return None;
        }
        let index = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(SignedElement::from_index(index))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for Elements {}

/// File syntax: space-separated members in canonical order, `{}` when empty.
impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.braced())
    }
}

pub struct Braced(SignedSubset);

impl fmt::Display for Braced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub fn format_set(s: SignedSubset) -> String {
    s.to_string()
}

/// Parses one set in family-file syntax.
pub fn parse_set(text: &str, n: GroundSize) -> Result<SignedSubset, ParseError> {
    if text == "{}" {
        return Ok(SignedSubset::EMPTY);
    }
    if text.is_empty() {
        return Err(ParseError {
            column: 1,
            kind: ParseErrorKind::EmptyLine,
        });
    }
    let mut set = SignedSubset::EMPTY;
    let mut column = 1;
    for token in text.split(' ') {
        if token.is_empty() {
            return Err(ParseError {
                column,
                kind: ParseErrorKind::BadSeparator,
            });
        }
        let at = |kind| ParseError { column, kind };
        let value =
            parse_integer(token).ok_or_else(|| at(ParseErrorKind::MalformedToken(token.to_string())))?;
        if value == 0 {
            return Err(at(ParseErrorKind::ZeroElement));
        }
        let e =
            SignedElement::new(value, n).map_err(|_| at(ParseErrorKind::OutOfRange { value, n: n.get() }))?;
        if set.contains(e) {
            return Err(at(ParseErrorKind::DuplicateElement(e.value())));
        }
        set = set.with(e);
        column += token.len() + 1;
    }
    Ok(set)
}

/// Signed decimal integer: optional `-`, then ASCII digits.
fn parse_integer(token: &str) -> Option<i64> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // Saturate long digit strings so they report as out of range.
    let magnitude = digits
        .bytes()
        .try_fold(0i64, |acc, b| acc.checked_mul(10)?.checked_add((b - b'0') as i64))
        .unwrap_or(i64::MAX);
    Some(if token.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

/// Every subset of `E±n`, as masks `0..2^(2n)`.
pub fn all_subsets(n: GroundSize) -> impl Iterator<Item = SignedSubset> {
    (0..=n.full_mask() as u64).map(|b| SignedSubset(b as u32))
}

/// Subsets of `s`, the empty set and `s` included.
pub fn subsets_of(s: SignedSubset) -> impl Iterator<Item = SignedSubset> {
    let full = s.0;
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == full {
            None
        } else {
            Some((current.wrapping_sub(full)) & full)
        };
        Some(SignedSubset(current))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: i64) -> GroundSize {
        GroundSize::new(v).unwrap()
    }

    fn set(values: &[i8]) -> SignedSubset {
        SignedSubset::from_values(values)
    }

    #[test]
    fn negate_element_examples() {
        assert_eq!(negate_element(SignedElement::from_value(1)).value(), -1);
        assert_eq!(negate_element(SignedElement::from_value(-3)).value(), 3);
        let two = SignedElement::from_value(2);
        assert_eq!(negate_element(negate_element(two)), two);
    }

    #[test]
    fn negate_set_examples() {
        assert_eq!(negate_set(set(&[1, -3])), set(&[-1, 3]));
        assert_eq!(negate_set(SignedSubset::EMPTY), SignedSubset::EMPTY);
        assert_eq!(negate_set(set(&[-2, 1, 3])), set(&[2, -1, -3]));
    }

    #[test]
    fn admissibility_examples() {
        assert!(!is_admissible(set(&[1, -1])));
        assert!(is_admissible(SignedSubset::EMPTY));
        assert!(is_admissible(set(&[-2, 1, 3])));
    }

    #[test]
    fn admissible_iff_disjoint_from_negation() {
        for n in 1..=3 {
            for s in all_subsets(self::n(n)) {
                assert_eq!(s.is_admissible(), s.is_disjoint(s.negate()), "{s:?}");
            }
        }
    }

    #[test]
    fn admissible_subset_counts_by_cardinality() {
        fn binomial(n: u64, k: u64) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 1..=4u64 {
            let mut counts = vec![0u64; 2 * n as usize + 1];
            for s in all_subsets(self::n(n as i64)).filter(|s| s.is_admissible()) {
                counts[s.len()] += 1;
            }
            for k in 0..=n {
                assert_eq!(counts[k as usize], binomial(n, k) << k, "n={n} k={k}");
            }
            assert!(counts[n as usize + 1..].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_set("-2 1 3", n(3)).unwrap(), set(&[-2, 1, 3]));
        assert_eq!(parse_set("{}", n(3)).unwrap(), SignedSubset::EMPTY);
        let err = parse_set("0", n(3)).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroElement);
        assert_eq!(err.column, 1);
    }

    #[test]
    fn parse_errors_report_position() {
        let err = parse_set("1 4", n(3)).unwrap_err();
        assert_eq!(err.column, 3);
        assert_eq!(err.kind, ParseErrorKind::OutOfRange { value: 4, n: 3 });

        let err = parse_set("1 -2 1", n(3)).unwrap_err();
        assert_eq!(err.column, 6);
        assert_eq!(err.kind, ParseErrorKind::DuplicateElement(1));

        let err = parse_set("1 x", n(3)).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedToken("x".into()));

        let err = parse_set("1  2", n(3)).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadSeparator);

        assert!(parse_set("+1", n(3)).is_err());
        assert!(parse_set("--1", n(3)).is_err());
        assert!(matches!(
            parse_set("99999999999999999999999", n(3)).unwrap_err().kind,
            ParseErrorKind::OutOfRange { .. }
        ));
    }

    #[test]
    fn canonical_formatting() {
        assert_eq!(set(&[-2, 1, 3]).to_string(), "1 -2 3");
        assert_eq!(set(&[-1, 1, 2]).to_string(), "1 -1 2");
        assert_eq!(SignedSubset::EMPTY.to_string(), "{}");
        assert_eq!(set(&[3, 2]).braced().to_string(), "{2,3}");
    }

    #[test]
    fn format_then_parse_is_identity() {
        for n in 1..=3 {
            for s in all_subsets(self::n(n)) {
                assert_eq!(parse_set(&format_set(s), self::n(n)).unwrap(), s);
            }
        }
    }

    #[test]
    fn canonical_order_is_cardinality_then_lexicographic() {
        let g = n(3);
        let mut all: Vec<_> = all_subsets(g).collect();
        all.sort();
        let keys: Vec<(usize, Vec<usize>)> = all
            .iter()
            .map(|s| (s.len(), s.iter().map(|e| e.index()).collect()))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subsets_of_enumerates_power_set() {
        let s = set(&[1, -2, 3]);
        let mut subs: Vec<_> = subsets_of(s).collect();
        subs.sort();
        subs.dedup();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subsets_of(SignedSubset::EMPTY).count(), 1);
    }

    #[test]
    fn ground_size_bounds() {
        assert!(GroundSize::new(0).is_err());
        assert!(GroundSize::new(17).is_err());
        assert_eq!(n(16).full_mask(), u32::MAX);
        assert_eq!(n(3).full_mask(), 0b11_1111);
        assert!(SignedElement::new(0, n(3)).is_err());
        assert!(SignedElement::new(-4, n(3)).is_err());
    }

    #[test]
    fn magnitude_helpers() {
        assert_eq!(set(&[-2, 3]).magnitude_mask(), 0b110);
        assert_eq!(set(&[-2, 3]).max_magnitude(), 3);
        assert_eq!(SignedSubset::EMPTY.max_magnitude(), 0);
        assert!(set(&[-16]).fits(n(16)));
        assert!(!set(&[4]).fits(n(3)));
    }
}
