//! Brute-force reference implementations of net frequency, for testing only.
//!
//! Everything here works by naive text scans and window counting; nothing
//! touches the suffix array machinery, so these functions serve as
//! independent oracles for it. Costs are quadratic-ish and fine for the
//! small texts they run on.

use std::collections::HashMap;

use crate::query::NfValue;
use crate::text::{Occurrence, Text};

/// The extension sets of a string: left/right characters whose unidirectional
/// extension repeats, and the pairs among them that occur bidirectionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSets {
    pub left: Vec<u8>,
    pub right: Vec<u8>,
    pub bidir: Vec<(u8, u8)>,
}

/// Every occurrence of `pattern`, as (start, end) position pairs.
pub fn occurrences(t: &Text, pattern: &[u8]) -> Vec<Occurrence> {
    assert!(!pattern.is_empty());
    let bytes = t.bytes();
    let m = pattern.len();
    if m > bytes.len() {
        return Vec::new();
    }
    (0..=bytes.len() - m)
        .filter(|&i| &bytes[i..i + m] == pattern)
        .map(|i| Occurrence::new(i + 1, i + m))
        .collect()
}

/// Occurrence count of `pattern`, by naive scan.
pub fn frequency(t: &Text, pattern: &[u8]) -> usize {
    occurrences(t, pattern).len()
}

fn left_char(t: &Text, occ: Occurrence) -> Option<u8> {
    if occ.start > 1 {
        Some(t.byte(occ.start - 1))
    } else {
        None
    }
}

fn right_char(t: &Text, occ: Occurrence) -> u8 {
    // Sentinel-free patterns end at position <= n-1, so this is in bounds.
    t.byte(occ.end + 1)
}

/// Left/right/bidirectional extension sets; sorted for determinism.
pub fn extension_sets(t: &Text, pattern: &[u8]) -> ExtensionSets {
    let occ = occurrences(t, pattern);
    let mut left_counts: HashMap<u8, usize> = HashMap::new();
    let mut right_counts: HashMap<u8, usize> = HashMap::new();
    for &o in &occ {
        if let Some(x) = left_char(t, o) {
            *left_counts.entry(x).or_insert(0) += 1;
        }
        *right_counts.entry(right_char(t, o)).or_insert(0) += 1;
    }
    let mut left: Vec<u8> =
        left_counts.iter().filter(|&(_, &c)| c >= 2).map(|(&x, _)| x).collect();
    let mut right: Vec<u8> =
        right_counts.iter().filter(|&(_, &c)| c >= 2).map(|(&y, _)| y).collect();
    left.sort_unstable();
    right.sort_unstable();
    let mut bidir = Vec::new();
    for &x in &left {
        for &y in &right {
            // f(xSy) >= 1: some occurrence carries exactly this pair
            let hit =
                occ.iter().any(|&o| left_char(t, o) == Some(x) && right_char(t, o) == y);
            if hit {
                bidir.push((x, y));
            }
        }
    }
    ExtensionSets { left, right, bidir }
}

/// Net frequency by the inclusion-exclusion definition:
/// `f(S) - sum f(xS) - sum f(Sy) + sum f(xSy)` over the repeated extensions,
/// and 0 whenever `S` is unique or absent.
pub fn nf_by_definition(t: &Text, pattern: &[u8]) -> NfValue {
    let occ = occurrences(t, pattern);
    if occ.len() < 2 {
        return NfValue(0);
    }
    let mut left_counts: HashMap<u8, usize> = HashMap::new();
    let mut right_counts: HashMap<u8, usize> = HashMap::new();
    for &o in &occ {
        if let Some(x) = left_char(t, o) {
            *left_counts.entry(x).or_insert(0) += 1;
        }
        *right_counts.entry(right_char(t, o)).or_insert(0) += 1;
    }
    let sum_left: usize = left_counts.values().filter(|&&c| c >= 2).sum();
    let sum_right: usize = right_counts.values().filter(|&&c| c >= 2).sum();
    // sum over B of f(xSy) = occurrences whose left and right extensions both repeat
    let sum_bidir = occ
        .iter()
        .filter(|&&o| {
            let lx = left_char(t, o).is_some_and(|x| left_counts[&x] >= 2);
            let ry = right_counts[&right_char(t, o)] >= 2;
            lx && ry
        })
        .count();
    // grouped to keep the intermediate sums non-negative
    NfValue(occ.len() + sum_bidir - sum_left - sum_right)
}

/// Net frequency as the count of net occurrences: occurrences whose left and
/// right single-character extensions are both unique, a text edge counting
/// as unique.
pub fn nf_by_characteristic(t: &Text, pattern: &[u8]) -> NfValue {
    let occ = occurrences(t, pattern);
    if occ.len() < 2 {
        return NfValue(0);
    }
    let mut left_counts: HashMap<u8, usize> = HashMap::new();
    let mut right_counts: HashMap<u8, usize> = HashMap::new();
    for &o in &occ {
        if let Some(x) = left_char(t, o) {
            *left_counts.entry(x).or_insert(0) += 1;
        }
        *right_counts.entry(right_char(t, o)).or_insert(0) += 1;
    }
    let nets = occ
        .iter()
        .filter(|&&o| {
            let left_unique = left_char(t, o).is_none_or(|x| left_counts[&x] == 1);
            let right_unique = right_counts[&right_char(t, o)] == 1;
            left_unique && right_unique
        })
        .count();
    NfValue(nets)
}

/// Net frequency with extension blocks of length exactly `k`: an occurrence
/// counts when, at every block length `1..=k`, its left and right extension
/// blocks are unique. A block cut off by a text edge counts as unique.
pub fn nf_order_k(t: &Text, pattern: &[u8], k: usize) -> NfValue {
    assert!(k >= 1);
    let occ = occurrences(t, pattern);
    if occ.len() < 2 {
        return NfValue(0);
    }
    let n = t.n();
    let bytes = t.bytes();
    // 0-based slice of the length-j block ending just before / starting just
    // after the occurrence; None when it would cross a text edge
    let left_block = |o: Occurrence, j: usize| -> Option<&[u8]> {
        (o.start > j).then(|| &bytes[o.start - 1 - j..o.start - 1])
    };
    let right_block = |o: Occurrence, j: usize| -> Option<&[u8]> {
        (o.end + j <= n).then(|| &bytes[o.end..o.end + j])
    };
    let mut passes = vec![true; occ.len()];
    for j in 1..=k {
        let mut left_counts: HashMap<&[u8], usize> = HashMap::new();
        let mut right_counts: HashMap<&[u8], usize> = HashMap::new();
        for &o in &occ {
            if let Some(b) = left_block(o, j) {
                *left_counts.entry(b).or_insert(0) += 1;
            }
            if let Some(b) = right_block(o, j) {
                *right_counts.entry(b).or_insert(0) += 1;
            }
        }
        for (pass, &o) in passes.iter_mut().zip(&occ) {
            let left_ok = left_block(o, j).is_none_or(|b| left_counts[b] == 1);
            let right_ok = right_block(o, j).is_none_or(|b| right_counts[b] == 1);
            *pass = *pass && left_ok && right_ok;
        }
    }
    NfValue(passes.into_iter().filter(|&p| p).count())
}

/// Whether `pattern` occurs with at least two distinct right-extension
/// symbols (the sentinel counts as a symbol); equivalently, whether it is the
/// longest common prefix of two distinct suffixes.
pub fn is_branching(t: &Text, pattern: &[u8]) -> bool {
    let occ = occurrences(t, pattern);
    if occ.len() < 2 {
        return false;
    }
    let first = right_char(t, occ[0]);
    occ[1..].iter().any(|&o| right_char(t, o) != first)
}

/// Brute-force ALL-NF: every string with positive net frequency and its NF,
/// sorted lexicographically.
///
/// Counts windows per length with a hash map; a string can have positive NF
/// only while repeated windows exist at its length, which bounds the sweep.
pub fn extract_all(t: &Text) -> Vec<(Vec<u8>, usize)> {
    let bytes = t.bytes();
    let n = bytes.len();
    let mut result: Vec<(Vec<u8>, usize)> = Vec::new();
    let mut len = 1usize;
    loop {
        if len > n {
            break;
        }
        let counts = window_counts(bytes, len);
        if !counts.values().any(|&c| c >= 2) {
            break;
        }
        let ext_counts = window_counts(bytes, len + 1);
        let mut nf: HashMap<&[u8], usize> = HashMap::new();
        for start in 0..=n - len {
            let w = &bytes[start..start + len];
            if counts[w] < 2 {
                continue;
            }
            let left_unique =
                start == 0 || ext_counts[&bytes[start - 1..start + len]] == 1;
            let right_unique =
                start + len == n || ext_counts[&bytes[start..start + len + 1]] == 1;
            if left_unique && right_unique {
                *nf.entry(w).or_insert(0) += 1;
            }
        }
        for (w, count) in nf {
            result.push((w.to_vec(), count));
        }
        len += 1;
    }
    result.sort();
    result
}

fn window_counts(bytes: &[u8], len: usize) -> HashMap<&[u8], usize> {
    let mut counts: HashMap<&[u8], usize> = HashMap::new();
    if len <= bytes.len() {
        for start in 0..=bytes.len() - len {
            *counts.entry(&bytes[start..start + len]).or_insert(0) += 1;
        }
    }
    counts
}
