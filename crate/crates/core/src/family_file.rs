//! Family files: one set per line, `#` comments and blank lines ignored.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::signed_sets::{parse_set, GroundSize, SignedSubset, MAX_GROUND_SIZE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFile {
    pub n: GroundSize,
    /// Sets in file order.
    pub sets: Vec<SignedSubset>,
}

/// Parses a family file.
///
/// Without `n`, the ground size is the largest magnitude in the file (at
/// least 1). With `n`, every element must lie in `E±n`.
pub fn parse_family(text: &str, n: Option<GroundSize>) -> Result<FamilyFile> {
    let parse_n = n.unwrap_or(GroundSize::new(MAX_GROUND_SIZE as i64)?);
    let mut sets = Vec::new();
    let mut seen: HashMap<SignedSubset, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw);
        if content.trim().is_empty() || content.starts_with('#') {
            continue;
        }
        let set = parse_set(content, parse_n).map_err(|source| Error::Parse { line, source })?;
        if let Some(&first_line) = seen.get(&set) {
            return Err(Error::DuplicateSet {
                line,
                first_line,
                set,
            });
        }
        seen.insert(set, line);
        sets.push(set);
    }
    let n = match n {
        Some(n) => n,
        None => {
            let largest = sets.iter().map(|s| s.max_magnitude()).max().unwrap_or(0);
            GroundSize::new(largest.max(1) as i64)?
        }
    };
    Ok(FamilyFile { n, sets })
}

/// Writes sets one per line in the given order.
pub fn format_family<'a>(sets: impl IntoIterator<Item = &'a SignedSubset>) -> String {
    let mut out = String::new();
    for s in sets {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
