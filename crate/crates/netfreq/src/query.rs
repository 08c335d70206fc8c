//! SINGLE-NF: net frequency of one query string, by three interchangeable
//! strategies.
//!
//! * [`single_nf_crl`]: examine one row per distinct BWT character in the
//!   query's SA interval (coloured range listing).
//! * [`single_nf_asa`]: examine every row of the interval.
//! * [`single_nf_hsa`]: tally extension frequencies in hash maps, the
//!   baseline that uses neither LF, LCP nor CRL for the decision.
//!
//! All three count net occurrences: an occurrence of a repeated string whose
//! one-character left and right extensions are both unique.

use std::collections::HashMap;

use crate::crl::CrlIndex;
use crate::index::SuffixIndex;

/// A net frequency value. Zero for unique or absent strings; never exceeds
/// the plain frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NfValue(pub usize);

impl NfValue {
    pub fn get(&self) -> usize {
        self.0
    }
}

impl std::fmt::Display for NfValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Whether the length-`m` string occurring at `sa(row)` is a net occurrence:
/// `m` must equal `ell(row)` (repeated, unique right extension) and be at
/// least `ell(lf(row))` (unique left extension; row 1 maps to `ell = 0`, so
/// a text edge passes automatically).
pub fn is_net_occurrence(idx: &SuffixIndex, row: usize, m: usize) -> bool {
    debug_assert!(m >= 1);
    m == idx.ell(row) && m >= idx.ell(idx.lf(row))
}

/// SINGLE-NF via coloured range listing: `O(m log n + sigma)` per query.
///
/// Only rows whose BWT character is the first of its kind in the interval can
/// pass the net-occurrence test, and the listing returns exactly those.
pub fn single_nf_crl(idx: &SuffixIndex, crl: &CrlIndex, pattern: &[u8]) -> NfValue {
    let iv = match idx.sa_interval(pattern) {
        Some(iv) if iv.width() >= 2 => iv,
        _ => return NfValue(0),
    };
    let m = pattern.len();
    let rows = crl.list_distinct(iv.lo, iv.hi);
    debug_assert!(rows.len() <= idx.text().sigma().min(iv.width()));
    let nf = rows.into_iter().filter(|&r| is_net_occurrence(idx, r, m)).count();
    NfValue(nf)
}

/// SINGLE-NF by scanning the whole SA interval: `O(m log n + f)` per query.
pub fn single_nf_asa(idx: &SuffixIndex, pattern: &[u8]) -> NfValue {
    let iv = match idx.sa_interval(pattern) {
        Some(iv) if iv.width() >= 2 => iv,
        _ => return NfValue(0),
    };
    let m = pattern.len();
    let nf = iv.rows().filter(|&r| is_net_occurrence(idx, r, m)).count();
    NfValue(nf)
}

/// SINGLE-NF baseline: scan the interval once, tallying left, right, and
/// pair extension frequencies in hash maps, then count the pairs unique on
/// both sides. `O(m log n + f)` with hashing on every row.
pub fn single_nf_hsa(idx: &SuffixIndex, pattern: &[u8]) -> NfValue {
    let iv = match idx.sa_interval(pattern) {
        Some(iv) if iv.width() >= 2 => iv,
        _ => return NfValue(0),
    };
    let m = pattern.len();
    let text = idx.text();
    let mut left: HashMap<u8, u32> = HashMap::new();
    let mut right: HashMap<u8, u32> = HashMap::new();
    let mut pairs: HashMap<(u8, u8), u32> = HashMap::new();
    for r in iv.rows() {
        // The BWT character doubles as the left extension; at the text edge it
        // is the sentinel, which occurs once and therefore reads as unique.
        let x = idx.bwt(r);
        // Patterns are sentinel-free, so the right neighbour always exists.
        let y = text.byte(idx.sa(r) + m);
        *left.entry(x).or_insert(0) += 1;
        *right.entry(y).or_insert(0) += 1;
        *pairs.entry((x, y)).or_insert(0) += 1;
    }
    let nf = pairs
        .keys()
        .filter(|&&(x, y)| left[&x] == 1 && right[&y] == 1)
        .count();
    NfValue(nf)
}
