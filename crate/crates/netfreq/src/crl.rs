//! Coloured range listing over the BWT.
//!
//! `prev[i]` holds the previous row with the same BWT character (0 if none);
//! an argmin range-minimum structure over `prev` then lists one row per
//! distinct character in any range, in constant time per reported row.

use crate::index::SuffixIndex;

/// Preprocessed structure answering "one row per distinct BWT character in
/// `[l, r]`" queries. Immutable after build.
pub struct CrlIndex {
    prev: Vec<u32>, // 1-based previous occurrence, 0 = first of its character
    rmq: SparseTable,
}

impl CrlIndex {
    /// Builds the previous-occurrence array and its sparse table;
    /// `O(n log n)` space, `O(1)` argmin queries.
    pub fn build(idx: &SuffixIndex) -> CrlIndex {
        let bwt = idx.bwt_bytes();
        let mut last = [0u32; 256];
        let mut prev = Vec::with_capacity(bwt.len());
        for (i, &c) in bwt.iter().enumerate() {
            prev.push(last[c as usize]);
            last[c as usize] = i as u32 + 1;
        }
        let rmq = SparseTable::build(&prev);
        CrlIndex { prev, rmq }
    }

    /// Previous row (1-based) with the same BWT character as row `r`, 0 if none.
    pub fn prev(&self, r: usize) -> usize {
        assert!(r >= 1 && r <= self.prev.len(), "row {} out of 1..={}", r, self.prev.len());
        self.prev[r - 1] as usize
    }

    /// One row per distinct BWT character in `[l, r]` (1-based, inclusive):
    /// exactly the rows `p` with `prev(p) < l`. Sorted ascending.
    pub fn list_distinct(&self, l: usize, r: usize) -> Vec<usize> {
        assert!(
            l >= 1 && l <= r && r <= self.prev.len(),
            "range [{}, {}] out of bounds for {} rows",
            l,
            r,
            self.prev.len()
        );
        let mut out = Vec::new();
        self.collect(l - 1, r - 1, l as u32, &mut out);
        out.sort_unstable();
        out
    }

    // 0-based recursion: report the range argmin while its prev value lies
    // before the query start, then split around it.
    fn collect(&self, lo: usize, hi: usize, query_lo: u32, out: &mut Vec<usize>) {
        let p = self.rmq.argmin(lo, hi);
        if self.prev[p] >= query_lo {
            return;
        }
        out.push(p + 1);
        if p > lo {
            self.collect(lo, p - 1, query_lo, out);
        }
        if p < hi {
            self.collect(p + 1, hi, query_lo, out);
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.prev.len() * 4 + self.rmq.heap_bytes()
    }
}

/// Sparse-table argmin: ties broken by smallest position.
struct SparseTable {
    levels: Vec<Vec<u32>>,
    values: Vec<u32>,
}

impl SparseTable {
    fn build(values: &[u32]) -> SparseTable {
        let n = values.len();
        let height = if n <= 1 { 1 } else { n.ilog2() as usize + 1 };
        let mut levels: Vec<Vec<u32>> = Vec::with_capacity(height);
        levels.push((0..n as u32).collect());
        for k in 1..height {
            let half = 1usize << (k - 1);
            let prev_level = &levels[k - 1];
            let width = n - (1usize << k) + 1;
            let mut level = Vec::with_capacity(width);
            for i in 0..width {
                let a = prev_level[i];
                let b = prev_level[i + half];
                level.push(pick(values, a, b));
            }
            levels.push(level);
        }
        SparseTable { levels, values: values.to_vec() }
    }

    /// Position of the minimum value in `[lo, hi]` (0-based, inclusive),
    /// smallest position on ties.
    fn argmin(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi && hi < self.values.len());
        let k = (hi - lo + 1).ilog2() as usize;
        let a = self.levels[k][lo];
        let b = self.levels[k][hi + 1 - (1usize << k)];
        pick(&self.values, a, b) as usize
    }

    fn heap_bytes(&self) -> usize {
        self.values.len() * 4 + self.levels.iter().map(|l| l.len() * 4).sum::<usize>()
    }
}

fn pick(values: &[u32], a: u32, b: u32) -> u32 {
    let (va, vb) = (values[a as usize], values[b as usize]);
    if va < vb || (va == vb && a < b) {
        a
    } else {
        b
    }
}
