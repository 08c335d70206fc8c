//! Linear-time suffix array construction by induced sorting (SA-IS).
//!
//! Works on any byte string that ends with a unique, lexicographically
//! smallest terminator; recursion levels operate on renamed LMS substrings,
//! which preserve that property.

use std::cmp::Ordering;

const EMPTY: u32 = u32::MAX;

/// Builds the suffix array of `text` (0-based positions).
///
/// `text` must be non-empty and end with a byte that occurs nowhere else and
/// compares smaller than every other byte present.
pub(crate) fn suffix_array(text: &[u8]) -> Vec<u32> {
    assert!(!text.is_empty());
    assert!(
        text.len() < EMPTY as usize,
        "text of {} bytes exceeds 32-bit index capacity",
        text.len()
    );
    let mut sa = vec![EMPTY; text.len()];
    sais(text, 256, &mut sa);
    sa
}

trait Symbols {
    fn len(&self) -> usize;
    fn sym(&self, i: usize) -> usize;
}

impl Symbols for &[u8] {
    fn len(&self) -> usize {
        <[u8]>::len(self)
    }
    fn sym(&self, i: usize) -> usize {
        self[i] as usize
    }
}

impl Symbols for &[u32] {
    fn len(&self) -> usize {
        <[u32]>::len(self)
    }
    fn sym(&self, i: usize) -> usize {
        self[i] as usize
    }
}

fn bucket_heads(counts: &[u32]) -> Vec<u32> {
    let mut heads = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        heads.push(sum);
        sum += c;
    }
    heads
}

fn bucket_tails(counts: &[u32]) -> Vec<u32> {
    let mut tails = Vec::with_capacity(counts.len());
    let mut sum = 0u32;
    for &c in counts {
        sum += c;
        tails.push(sum);
    }
    tails
}

fn sais<S: Symbols>(s: S, alphabet: usize, sa: &mut [u32]) {
    let n = s.len();
    debug_assert_eq!(sa.len(), n);
    if n == 1 {
        sa[0] = 0;
        return;
    }

    // S/L classification; the terminator is S-type by convention.
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = match s.sym(i).cmp(&s.sym(i + 1)) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => stype[i + 1],
        };
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut counts = vec![0u32; alphabet];
    for i in 0..n {
        counts[s.sym(i)] += 1;
    }

    // Pass 1: place LMS suffixes in arbitrary order and induce; afterwards
    // the LMS suffixes appear in SA sorted by their LMS substrings.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for i in 1..n {
        if is_lms(i) {
            let c = s.sym(i);
            tails[c] -= 1;
            sa[tails[c] as usize] = i as u32;
        }
    }
    induce(&s, sa, &counts, &stype);

    let lms_count = (1..n).filter(|&i| is_lms(i)).count();
    let mut lms_sorted: Vec<u32> = Vec::with_capacity(lms_count);
    for &p in sa.iter() {
        if p != EMPTY && is_lms(p as usize) {
            lms_sorted.push(p);
        }
    }
    debug_assert_eq!(lms_sorted.len(), lms_count);

    // Name LMS substrings in their sorted order; equal substrings share a name.
    let mut names = vec![EMPTY; n];
    let mut name_count = 0u32;
    let mut prev = EMPTY;
    for &p in &lms_sorted {
        if prev == EMPTY || !lms_substrings_equal(&s, &stype, prev as usize, p as usize) {
            name_count += 1;
        }
        names[p as usize] = name_count - 1;
        prev = p;
    }

    if (name_count as usize) < lms_count {
        // Names repeat: recurse on the reduced string of LMS names in text
        // order. Its terminator is the sentinel's name, unique and smallest.
        let lms_in_text_order: Vec<u32> =
            (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
        let reduced: Vec<u32> =
            lms_in_text_order.iter().map(|&p| names[p as usize]).collect();
        let mut sub_sa = vec![EMPTY; reduced.len()];
        sais(reduced.as_slice(), name_count as usize, &mut sub_sa);
        for (k, &r) in sub_sa.iter().enumerate() {
            lms_sorted[k] = lms_in_text_order[r as usize];
        }
    }

    // Pass 2: place LMS suffixes in their final relative order and induce.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for &p in lms_sorted.iter().rev() {
        let c = s.sym(p as usize);
        tails[c] -= 1;
        sa[tails[c] as usize] = p;
    }
    induce(&s, sa, &counts, &stype);
}

fn induce<S: Symbols>(s: &S, sa: &mut [u32], counts: &[u32], stype: &[bool]) {
    let n = s.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 && !stype[p as usize - 1] {
            let c = s.sym(p as usize - 1);
            sa[heads[c] as usize] = p - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 && stype[p as usize - 1] {
            let c = s.sym(p as usize - 1);
            tails[c] -= 1;
            sa[tails[c] as usize] = p - 1;
        }
    }
}

/// Two LMS substrings are equal iff they match in characters and types up to
/// and including their closing LMS positions. The unique terminator bounds
/// every comparison, so no index can run past the end.
fn lms_substrings_equal<S: Symbols>(s: &S, stype: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    if a == b {
        return true;
    }
    if a == n - 1 || b == n - 1 {
        return false; // the terminator's LMS substring is unique
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let mut k = 0;
    loop {
        if s.sym(a + k) != s.sym(b + k) || stype[a + k] != stype[b + k] {
            return false;
        }
        if k > 0 {
            let a_end = is_lms(a + k);
            let b_end = is_lms(b + k);
            if a_end || b_end {
                return a_end && b_end;
            }
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(text: &[u8]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..text.len() as u32).collect();
        sa.sort_by(|&a, &b| text[a as usize..].cmp(&text[b as usize..]));
        sa
    }

    fn with_sentinel(raw: &[u8]) -> Vec<u8> {
        let mut v = raw.to_vec();
        v.push(0);
        v
    }

    #[test]
    fn sentinel_only() {
        assert_eq!(suffix_array(&[0]), vec![0]);
    }

    #[test]
    fn two_chars() {
        let t = with_sentinel(b"a");
        assert_eq!(suffix_array(&t), naive(&t));
    }

    #[test]
    fn known_examples() {
        for raw in [
            b"aa".as_slice(),
            b"ab",
            b"banana",
            b"mississippi",
            b"rstkstcastarstast",
            b"aaaaaaaaaa",
            b"abababab",
            b"abaababaabaab",
        ] {
            let t = with_sentinel(raw);
            assert_eq!(suffix_array(&t), naive(&t), "text {:?}", String::from_utf8_lossy(raw));
        }
    }

    #[test]
    fn random_texts_match_naive() {
        // xorshift for self-contained determinism
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..300 {
            let len = (next() % 300 + 1) as usize;
            let sigma = [1u64, 2, 3, 4, 16, 255][round % 6];
            let raw: Vec<u8> = (0..len).map(|_| (next() % sigma) as u8 + 1).collect();
            let t = with_sentinel(&raw);
            assert_eq!(suffix_array(&t), naive(&t), "len={} sigma={}", len, sigma);
        }
    }
}
