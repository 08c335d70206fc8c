//! The augmented suffix array: SA, ISA, LCP (with boundary zeros), BWT, LF.
//!
//! All public accessors speak 1-based positions and rows, matching the text
//! addressing convention; storage is 0-based `u32` arrays.

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::sais;
use crate::text::{Text, SENTINEL};

const MAGIC: &[u8; 5] = b"NFIX1";

/// A maximal SA row range (1-based, inclusive) whose suffixes share a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaInterval {
    pub lo: usize,
    pub hi: usize,
}

impl SaInterval {
    pub fn width(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// Suffix array of a [`Text`], augmented with ISA, LCP, BWT and LF.
///
/// Immutable after construction; concurrent queries need no synchronization.
pub struct SuffixIndex {
    text: Text,
    sa: Vec<u32>,  // sa[r0] = 0-based start of the suffix at 0-based row r0
    isa: Vec<u32>, // isa[p0] = 0-based row of the suffix starting at p0
    lcp: Vec<u32>, // n+1 cells; lcp[j] = LCP between rows j-1 and j (0-based), boundaries 0
    bwt: Vec<u8>,
    lf: Vec<u32>, // 0-based rows
}

impl SuffixIndex {
    /// Builds the full augmented index; `O(n)` time and linear space.
    pub fn build(text: Text) -> SuffixIndex {
        let n = text.n();
        let sa = sais::suffix_array(text.bytes());
        debug_assert_eq!(sa[0] as usize, n - 1, "sentinel suffix must sort first");

        let mut isa = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            isa[p as usize] = r as u32;
        }

        // Kasai: lcp[r] = longest common prefix of rows r-1 and r.
        let bytes = text.bytes();
        let mut lcp = vec![0u32; n + 1];
        let mut h = 0usize;
        for p in 0..n {
            let r = isa[p] as usize;
            if r > 0 {
                let q = sa[r - 1] as usize;
                while p + h < n && q + h < n && bytes[p + h] == bytes[q + h] {
                    h += 1;
                }
                lcp[r] = h as u32;
                h = h.saturating_sub(1);
            } else {
                h = 0;
            }
        }

        let mut bwt = vec![0u8; n];
        let mut lf = vec![0u32; n];
        for r in 0..n {
            let p = sa[r] as usize;
            if p == 0 {
                bwt[r] = SENTINEL;
                lf[r] = 0;
            } else {
                bwt[r] = bytes[p - 1];
                lf[r] = isa[p - 1];
            }
        }

        SuffixIndex { text, sa, isa, lcp, bwt, lf }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    /// Number of rows (equals the text length including the sentinel).
    pub fn n(&self) -> usize {
        self.sa.len()
    }

    /// Text position (1-based) of the suffix at 1-based row `r`.
    pub fn sa(&self, r: usize) -> usize {
        self.check_row(r);
        self.sa[r - 1] as usize + 1
    }

    /// Row (1-based) of the suffix starting at 1-based position `p`.
    pub fn isa(&self, p: usize) -> usize {
        assert!(p >= 1 && p <= self.n(), "position {} out of 1..={}", p, self.n());
        self.isa[p - 1] as usize + 1
    }

    /// LCP value at 1-based index `i` in `1..=n+1`; `lcp(1)` and `lcp(n+1)`
    /// are the boundary zeros.
    pub fn lcp(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n() + 1, "lcp index {} out of 1..={}", i, self.n() + 1);
        self.lcp[i - 1] as usize
    }

    /// BWT character at 1-based row `r`.
    pub fn bwt(&self, r: usize) -> u8 {
        self.check_row(r);
        self.bwt[r - 1]
    }

    /// LF mapping at 1-based row `r`: the row of the one-step-left suffix.
    pub fn lf(&self, r: usize) -> usize {
        self.check_row(r);
        self.lf[r - 1] as usize + 1
    }

    /// Longest repeated-prefix length at row `r`: `max(lcp(r), lcp(r+1))`.
    pub fn ell(&self, r: usize) -> usize {
        self.check_row(r);
        self.lcp[r - 1].max(self.lcp[r]) as usize
    }

    fn check_row(&self, r: usize) {
        assert!(r >= 1 && r <= self.n(), "row {} out of 1..={}", r, self.n());
    }

    pub(crate) fn bwt_bytes(&self) -> &[u8] {
        &self.bwt
    }

    /// The maximal row interval whose suffixes have `pattern` as a prefix,
    /// or `None` if the pattern is absent. Binary search, `O(m log n)`.
    pub fn sa_interval(&self, pattern: &[u8]) -> Option<SaInterval> {
        assert!(!pattern.is_empty(), "pattern must be non-empty");
        debug_assert!(!pattern.contains(&SENTINEL), "pattern must be sentinel-free");
        let bytes = self.text.bytes();
        let n = self.n();
        // Compare a suffix against the pattern, truncated to pattern length;
        // a strictly shorter prefix-matching suffix orders Less.
        let cmp = |r0: usize| -> std::cmp::Ordering {
            let suf = &bytes[self.sa[r0] as usize..];
            let k = suf.len().min(pattern.len());
            match suf[..k].cmp(&pattern[..k]) {
                std::cmp::Ordering::Equal if suf.len() < pattern.len() => std::cmp::Ordering::Less,
                o => o,
            }
        };
        let lo = partition_point(n, |r0| cmp(r0) == std::cmp::Ordering::Less);
        let hi = partition_point(n, |r0| cmp(r0) != std::cmp::Ordering::Greater);
        if lo < hi {
            Some(SaInterval { lo: lo + 1, hi })
        } else {
            None
        }
    }

    /// Number of occurrences of `pattern` in the text.
    pub fn frequency(&self, pattern: &[u8]) -> usize {
        self.sa_interval(pattern).map_or(0, |iv| iv.width())
    }

    /// The suffix at row `r` as a byte slice (sentinel included).
    pub fn suffix(&self, r: usize) -> &[u8] {
        self.check_row(r);
        &self.text.bytes()[self.sa[r - 1] as usize..]
    }

    /// Bytes held by the index arrays and the text, for memory accounting.
    pub fn heap_bytes(&self) -> usize {
        self.text.bytes().len()
            + self.sa.len() * 4
            + self.isa.len() * 4
            + self.lcp.len() * 4
            + self.lf.len() * 4
            + self.bwt.len()
    }

    /// Serializes as `NFIX1 | n | sa | isa | lcp (n+1) | lf | bwt`, integers
    /// little-endian 64-bit, positions and rows 1-based.
    pub fn write_to<W: Write>(&self, w: &mut W) -> io::Result<()> {
        let n = self.n();
        w.write_all(MAGIC)?;
        w.write_all(&(n as u64).to_le_bytes())?;
        write_u32s_as_u64(w, &self.sa, 1)?;
        write_u32s_as_u64(w, &self.isa, 1)?;
        write_u32s_as_u64(w, &self.lcp, 0)?;
        write_u32s_as_u64(w, &self.lf, 1)?;
        w.write_all(&self.bwt)?;
        Ok(())
    }

    pub fn save(&self, path: impl AsRef<Path>) -> io::Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_to(&mut w)?;
        w.flush()
    }

    /// Reads an index back, validating the magic and permutation invariants
    /// and reconstructing the text from BWT and LF.
    pub fn read_from<R: Read>(r: &mut R) -> Result<SuffixIndex, IndexIoError> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(IndexIoError::BadMagic);
        }
        let mut n8 = [0u8; 8];
        r.read_exact(&mut n8)?;
        let n64 = u64::from_le_bytes(n8);
        if n64 == 0 || n64 >= u32::MAX as u64 {
            return Err(IndexIoError::Corrupt("unreasonable length field"));
        }
        let n = n64 as usize;
        // stored values are 1-based positions/rows in [1, n] and lcp lengths
        let max0 = n as u64 - 1;
        let sa = read_u64s_as_u32(r, n, 1, max0)?;
        let isa = read_u64s_as_u32(r, n, 1, max0)?;
        let lcp = read_u64s_as_u32(r, n + 1, 0, max0)?;
        let lf = read_u64s_as_u32(r, n, 1, max0)?;
        let mut bwt = vec![0u8; n];
        r.read_exact(&mut bwt)?;

        // Permutation and inverse checks.
        let mut seen = vec![false; n];
        for &p in &sa {
            if seen[p as usize] {
                return Err(IndexIoError::Corrupt("sa is not a permutation"));
            }
            seen[p as usize] = true;
        }
        if sa[0] as usize != n - 1 {
            return Err(IndexIoError::Corrupt("sentinel suffix not at row 1"));
        }
        for (r0, &p) in sa.iter().enumerate() {
            if isa[p as usize] as usize != r0 {
                return Err(IndexIoError::Corrupt("isa is not the inverse of sa"));
            }
        }
        for (r0, &j) in lf.iter().enumerate() {
            let p = sa[r0] as usize;
            let expect = if p == 0 { 0 } else { isa[p - 1] as usize };
            if j as usize != expect {
                return Err(IndexIoError::Corrupt("lf disagrees with sa/isa"));
            }
        }
        if lcp[0] != 0 || lcp[n] != 0 {
            return Err(IndexIoError::Corrupt("lcp boundary cells must be zero"));
        }

        // Recover the text by walking LF from the sentinel row.
        let mut bytes = vec![0u8; n];
        bytes[n - 1] = SENTINEL;
        let mut row = 0usize;
        for pos in (0..n.saturating_sub(1)).rev() {
            let b = bwt[row];
            if b == SENTINEL {
                return Err(IndexIoError::Corrupt("sentinel inside reconstructed text"));
            }
            bytes[pos] = b;
            row = lf[row] as usize;
        }
        let text = Text::from_bytes(&bytes[..n - 1])
            .map_err(|_| IndexIoError::Corrupt("reconstructed text invalid"))?;

        // BWT must agree with the reconstructed text.
        for (r0, &p) in sa.iter().enumerate() {
            let expect = if p == 0 { SENTINEL } else { text.bytes()[p as usize - 1] };
            if bwt[r0] != expect {
                return Err(IndexIoError::Corrupt("bwt disagrees with text"));
            }
        }

        Ok(SuffixIndex { text, sa, isa, lcp, bwt, lf })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SuffixIndex, IndexIoError> {
        let mut r = BufReader::new(File::open(path)?);
        Self::read_from(&mut r)
    }
}

fn partition_point(n: usize, pred: impl Fn(usize) -> bool) -> usize {
    let mut lo = 0;
    let mut hi = n;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

fn write_u32s_as_u64<W: Write>(w: &mut W, values: &[u32], offset: u64) -> io::Result<()> {
    let mut buf = Vec::with_capacity(8 * 1024);
    for chunk in values.chunks(1024) {
        buf.clear();
        for &v in chunk {
            buf.extend_from_slice(&(v as u64 + offset).to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

fn read_u64s_as_u32<R: Read>(
    r: &mut R,
    count: usize,
    offset: u64,
    max: u64,
) -> Result<Vec<u32>, IndexIoError> {
    let mut out = Vec::with_capacity(count);
    let mut buf = [0u8; 8 * 1024];
    let mut remaining = count;
    while remaining > 0 {
        let take = remaining.min(1024);
        r.read_exact(&mut buf[..take * 8])?;
        for i in 0..take {
            let v = u64::from_le_bytes(buf[i * 8..i * 8 + 8].try_into().unwrap());
            if v < offset || v - offset > max {
                return Err(IndexIoError::Corrupt("array value out of range"));
            }
            out.push((v - offset) as u32);
        }
        remaining -= take;
    }
    Ok(out)
}

/// Errors raised while reading a serialized index.
#[derive(Debug)]
pub enum IndexIoError {
    Io(io::Error),
    BadMagic,
    Corrupt(&'static str),
}

impl fmt::Display for IndexIoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexIoError::Io(e) => write!(f, "index i/o error: {}", e),
            IndexIoError::BadMagic => write!(f, "not an index file (bad magic)"),
            IndexIoError::Corrupt(what) => write!(f, "corrupt index file: {}", what),
        }
    }
}

impl std::error::Error for IndexIoError {}

impl From<io::Error> for IndexIoError {
    fn from(e: io::Error) -> Self {
        IndexIoError::Io(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(raw: &[u8]) -> SuffixIndex {
        SuffixIndex::build(Text::from_bytes(raw).unwrap())
    }

    #[test]
    fn aa_example() {
        let i = idx(b"aa");
        assert_eq!((1..=3).map(|r| i.sa(r)).collect::<Vec<_>>(), vec![3, 2, 1]);
        assert_eq!((1..=4).map(|r| i.lcp(r)).collect::<Vec<_>>(), vec![0, 0, 1, 0]);
        assert_eq!((1..=3).map(|r| i.bwt(r)).collect::<Vec<_>>(), vec![b'a', b'a', SENTINEL]);
        assert_eq!((1..=3).map(|r| i.lf(r)).collect::<Vec<_>>(), vec![2, 3, 1]);
    }

    #[test]
    fn sentinel_only_text() {
        let i = idx(b"");
        assert_eq!(i.sa(1), 1);
        assert_eq!(i.lcp(1), 0);
        assert_eq!(i.lcp(2), 0);
        assert_eq!(i.bwt(1), SENTINEL);
        assert_eq!(i.lf(1), 1);
    }

    #[test]
    fn ab_example() {
        let i = idx(b"ab");
        assert_eq!((1..=3).map(|r| i.sa(r)).collect::<Vec<_>>(), vec![3, 1, 2]);
        assert!((1..=4).all(|r| i.lcp(r) == 0));
    }

    #[test]
    fn ell_values() {
        let i = idx(b"aa");
        assert_eq!(i.ell(1), 0);
        assert_eq!(i.ell(2), 1);
        assert_eq!(i.ell(3), 1);
    }

    #[test]
    fn lf_walks_backward() {
        let i = idx(b"mississippi");
        for r in 1..=i.n() {
            if i.sa(r) > 1 {
                assert_eq!(i.sa(i.lf(r)), i.sa(r) - 1);
            } else {
                assert_eq!(i.lf(r), 1);
            }
        }
    }

    #[test]
    fn interval_and_frequency() {
        let i = idx(b"rstkstcastarstast");
        let iv = i.sa_interval(b"st").unwrap();
        assert_eq!(iv.width(), 5);
        assert_eq!(i.frequency(b"st"), 5);
        assert_eq!(i.frequency(b"kst"), 1);
        assert_eq!(i.frequency(b"zzz"), 0);

        let aa = idx(b"aa");
        assert_eq!(aa.sa_interval(b"a"), Some(SaInterval { lo: 2, hi: 3 }));
        assert_eq!(aa.sa_interval(b"b"), None);
        assert_eq!(aa.frequency(b"aa"), 1);
    }

    #[test]
    fn roundtrip_serialization() {
        let i = idx(b"rstkstcastarstast");
        let mut buf = Vec::new();
        i.write_to(&mut buf).unwrap();
        let j = SuffixIndex::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(j.text().bytes(), i.text().bytes());
        for r in 1..=i.n() {
            assert_eq!(j.sa(r), i.sa(r));
            assert_eq!(j.lf(r), i.lf(r));
            assert_eq!(j.bwt(r), i.bwt(r));
        }
        for k in 1..=i.n() + 1 {
            assert_eq!(j.lcp(k), i.lcp(k));
        }
    }

    #[test]
    fn read_rejects_bad_magic() {
        let mut buf = Vec::new();
        idx(b"abc").write_to(&mut buf).unwrap();
        buf[0] = b'X';
        match SuffixIndex::read_from(&mut buf.as_slice()) {
            Err(IndexIoError::BadMagic) => {}
            other => panic!("expected BadMagic, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn read_rejects_tampered_sa() {
        let mut buf = Vec::new();
        idx(b"abcabc").write_to(&mut buf).unwrap();
        // duplicate the first sa entry into the second
        let sa0 = buf[13..21].to_vec();
        buf[21..29].copy_from_slice(&sa0);
        assert!(SuffixIndex::read_from(&mut buf.as_slice()).is_err());
    }
}
