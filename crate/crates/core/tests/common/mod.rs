//! Test-only reference implementations.
//!
//! Everything here works on `BTreeSet<i8>` and plain permutations and shares
//! no code with the library's bitmask paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Set = BTreeSet<i8>;

pub fn to_set(values: &[i8]) -> Set {
    values.iter().copied().collect()
}

pub fn ground(n: i8) -> Vec<i8> {
    (1..=n).flat_map(|m| [m, -m]).collect()
}

pub fn admissible(s: &Set) -> bool {
    s.iter().all(|x| !s.contains(&-x))
}

/// All permutations of `items` (Heap's algorithm).
pub fn permutations(items: &[i8]) -> Vec<Vec<i8>> {
    let mut a = items.to_vec();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; a.len()];
    let mut i = 0;
    while i < a.len() {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Admissible orderings, largest first, found by filtering all `(2n)!`
/// arrangements of `E±n`. Each arrangement determines the unique
/// permutation `w` sending the `r`-th smallest element to the `r`-th
/// smallest integer of `E±n`; keep it when `w(-x) = -w(x)` for all `x`.
pub fn admissible_orderings(n: i8) -> Vec<Vec<i8>> {
    let mut integers = ground(n);
    integers.sort();
    permutations(&ground(n))
        .into_iter()
        .filter(|order| {
            let ascending: Vec<i8> = order.iter().rev().copied().collect();
            let w = |x: i8| integers[ascending.iter().position(|&y| y == x).unwrap()];
            ascending.iter().all(|&x| w(-x) == -w(x))
        })
        .collect()
}

/// Greedy read literally: keep `e` unless no member contains the current
/// choice plus `e` using only `e` and later elements for the rest.
pub fn literal_greedy(family: &[Set], order: &[i8]) -> Set {
    let mut chosen = Set::new();
    for (p, &e) in order.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.insert(e);
        let later: Set = order[p..].iter().copied().collect();
        let completable = family
            .iter()
            .any(|m| trial.is_subset(m) && m.difference(&trial).all(|x| later.contains(x)));
        if completable {
            chosen = trial;
        }
    }
    chosen
}

pub fn weight(s: &Set, order: &[i8], prefix: usize) -> usize {
    order[..prefix].iter().filter(|x| s.contains(x)).count()
}

/// Greedy is optimal for every threshold weight of every admissible ordering.
pub fn is_matroid_by_definition(n: i8, family: &[Set], orderings: &[Vec<i8>]) -> bool {
    let _ = n;
    orderings.iter().all(|order| {
        let chosen = literal_greedy(family, order);
        (0..=order.len()).all(|k| {
            let own = weight(&chosen, order, k);
            family.iter().all(|m| weight(m, order, k) <= own)
        })
    })
}

/// Subsets of `s` by recursion.
pub fn power_set(s: &Set) -> Vec<Set> {
    let items: Vec<i8> = s.iter().copied().collect();
    let mut out = vec![Set::new()];
    for x in items {
        let extended: Vec<Set> = out
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.insert(x);
                t
            })
            .collect();
        out.extend(extended);
    }
    out
}

pub fn closure(family: &[Set]) -> BTreeSet<Set> {
    family.iter().flat_map(power_set).collect()
}

/// The axiom evaluated straight from its statement.
pub fn axiom_holds(n: i8, family: &BTreeSet<Set>) -> bool {
    let e = ground(n);
    for i in family {
        for j in family {
            if i.len() >= j.len() {
                continue;
            }
            let blocked = j.difference(i).all(|y| {
                let mut t = i.clone();
                t.insert(*y);
                !family.contains(&t)
            });
            if !blocked {
                continue;
            }
            let union: Set = i.union(j).copied().collect();
            if admissible(&union) {
                return false;
            }
            let neg_j: Set = j.iter().map(|x| -x).collect();
            let ok = e.iter().filter(|x| !i.contains(x)).any(|&x| {
                let mut with_x = i.clone();
                with_x.insert(x);
                let mut other = i.clone();
                other.insert(-x);
                let other: Set = other.difference(&neg_j).copied().collect();
                family.contains(&with_x) && family.contains(&other)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Admissible `k`-subsets by filtering every `k`-combination of `E±n`.
pub fn admissible_k_subsets(n: i8, k: usize) -> Vec<Set> {
    let e = ground(n);
    power_set(&e.iter().copied().collect())
        .into_iter()
        .filter(|s| s.len() == k && admissible(s))
        .collect()
}

/// Number of antichains in a poset given by a `less_eq` relation, by
/// recursion on "include or exclude the first remaining element".
pub fn count_antichains<T>(elements: &[T], less_eq: impl Fn(&T, &T) -> bool + Copy) -> u64 {
    fn go<T>(rest: &[T], chosen: &mut Vec<usize>, all: &[T], less_eq: impl Fn(&T, &T) -> bool + Copy) -> u64 {
        let Some((first, tail)) = rest.split_first() else {
            return 1;
        };
        let index = all.len() - rest.len();
        let mut total = go(tail, chosen, all, less_eq);
        let comparable = chosen
            .iter()
            .any(|&c| less_eq(&all[c], first) || less_eq(first, &all[c]));
        if !comparable {
            chosen.push(index);
            total += go(tail, chosen, all, less_eq);
            chosen.pop();
        }
        total
    }
    go(elements, &mut Vec::new(), elements, less_eq)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
