//! ALL-NF: enumerate every string with positive net frequency.
//!
//! Two routes with identical output:
//!
//! * [`all_nf_extract_direct`]: one pass over the suffix array, bumping a
//!   multiset entry for each row whose candidate is a net occurrence; each
//!   string is hashed once per net occurrence.
//! * [`all_nf_traverse`]: stack-based LCP-interval traversal that credits
//!   net occurrences to their intervals and emits one report per distinct
//!   string; each string is handled once.

use std::collections::HashMap;
use std::io::{self, Write};

use crate::index::SuffixIndex;
use crate::text::Span;

/// The only occurrence at a suffix-array row that can be a net occurrence:
/// it starts at `sa(row)` and has length `ell(row)` (possibly zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub row: usize,
    pub span: Span,
}

/// The net occurrence candidate at `row`.
pub fn candidate(idx: &SuffixIndex, row: usize) -> Candidate {
    Candidate { row, span: Span::new(idx.sa(row), idx.ell(row)) }
}

/// Multiset of strings with positive net frequency; the multiplicity of a
/// string is exactly its NF.
#[derive(Debug, Default, Clone)]
pub struct NfMultiset {
    entries: HashMap<Box<[u8]>, usize>,
}

impl NfMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    fn bump(&mut self, key: &[u8]) {
        if let Some(c) = self.entries.get_mut(key) {
            *c += 1;
        } else {
            self.entries.insert(key.into(), 1);
        }
    }

    fn insert_count(&mut self, key: &[u8], count: usize) -> bool {
        self.entries.insert(key.into(), count).is_none()
    }

    pub fn nf(&self, key: &[u8]) -> usize {
        self.entries.get(key).copied().unwrap_or(0)
    }

    /// Number of distinct strings with positive NF.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all net frequencies (total net occurrences).
    pub fn total_nf(&self) -> usize {
        self.entries.values().sum()
    }

    /// Sum of string lengths over the distinct strings.
    pub fn total_length(&self) -> usize {
        self.entries.keys().map(|k| k.len()).sum()
    }

    /// Sum of `nf * length` over the distinct strings.
    pub fn weighted_length(&self) -> usize {
        self.entries.iter().map(|(k, &c)| k.len() * c).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u8], usize)> {
        self.entries.iter().map(|(k, &c)| (k.as_ref(), c))
    }

    /// Entries sorted lexicographically by string, for deterministic output.
    pub fn sorted(&self) -> Vec<(&[u8], usize)> {
        let mut v: Vec<(&[u8], usize)> = self.iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Approximate owned heap size, for memory accounting.
    pub fn heap_bytes(&self) -> usize {
        let slot = std::mem::size_of::<(Box<[u8]>, usize)>() + 1;
        self.entries.capacity() * slot
            + self.entries.keys().map(|k| k.len()).sum::<usize>()
    }
}

impl PartialEq for NfMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for NfMultiset {}

impl FromIterator<(Vec<u8>, usize)> for NfMultiset {
    fn from_iter<I: IntoIterator<Item = (Vec<u8>, usize)>>(iter: I) -> Self {
        let mut m = NfMultiset::new();
        for (k, c) in iter {
            m.entries.insert(k.into_boxed_slice(), c);
        }
        m
    }
}

/// One distinct string with positive NF: a witness occurrence and the NF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetReport {
    pub span: Span,
    pub nf: usize,
}

/// ALL-NF by direct scan: for every row whose nonempty candidate passes the
/// net-occurrence test, bump the candidate string. `O(n + L)` where `L` is
/// the total hashed length.
pub fn all_nf_extract_direct(idx: &SuffixIndex) -> NfMultiset {
    let n = idx.n();
    let text = idx.text();
    let mut out = NfMultiset::new();
    for row in 1..=n {
        let len = idx.ell(row);
        if len >= 1 && len >= idx.ell(idx.lf(row)) {
            out.bump(text.substring(Span::new(idx.sa(row), len)));
        }
    }
    // At most one net occurrence per row.
    assert!(out.total_nf() <= n, "total NF exceeds text length");
    out
}

/// ALL-NF by LCP-interval traversal: emits exactly one [`NetReport`] per
/// distinct string with positive NF. `O(n)` plus the sink's own cost.
///
/// The stack holds `(len, lb, phi)` frames with `len` strictly increasing
/// towards the top; a frame's string is the length-`len` prefix of the suffix
/// at row `lb`. A net occurrence at row `i` credits the frame of its
/// candidate string: the current top when `lcp(i) = ell(i)`, otherwise the
/// frame pushed in the next iteration (`for_next`).
pub fn all_nf_traverse(idx: &SuffixIndex, mut sink: impl FnMut(NetReport)) {
    #[derive(Debug)]
    struct Frame {
        len: usize,
        lb: usize,
        phi: usize,
    }

    let n = idx.n();
    let mut stack: Vec<Frame> = vec![Frame { len: 0, lb: 0, phi: 0 }];
    let mut for_next = false;

    let process = |frame: Frame, sink: &mut dyn FnMut(NetReport)| {
        if frame.phi > 0 {
            debug_assert!(frame.len >= 1);
            sink(NetReport { span: Span::new(idx.sa(frame.lb), frame.len), nf: frame.phi });
        }
    };

    for i in 2..=n {
        let lcp_i = idx.lcp(i);
        let mut lb = i - 1;
        while lcp_i < stack.last().expect("bottom frame").len {
            let frame = stack.pop().unwrap();
            lb = frame.lb;
            process(frame, &mut sink);
        }
        if lcp_i > stack.last().expect("bottom frame").len {
            stack.push(Frame { len: lcp_i, lb, phi: 0 });
            debug_assert!(stack.windows(2).all(|w| w[0].len < w[1].len));
            if for_next {
                stack.last_mut().unwrap().phi += 1;
                for_next = false;
            }
        }
        let len = idx.ell(i);
        if len >= 1 && len >= idx.ell(idx.lf(i)) {
            if lcp_i == len {
                stack.last_mut().unwrap().phi += 1;
            } else {
                for_next = true;
            }
        }
    }
    debug_assert!(!for_next, "pending credit at end of traversal");
    while let Some(frame) = stack.pop() {
        process(frame, &mut sink);
    }
}

/// Convenience: run the traversal and collect the reports into a multiset,
/// also returning each report. Panics if the traversal were to emit the same
/// string twice (it cannot).
pub fn all_nf_extract_traverse(idx: &SuffixIndex) -> (NfMultiset, Vec<NetReport>) {
    let mut out = NfMultiset::new();
    let mut reports = Vec::new();
    let text = idx.text();
    all_nf_traverse(idx, |report| {
        let fresh = out.insert_count(text.substring(report.span), report.nf);
        assert!(fresh, "traversal reported a string twice");
        reports.push(report);
    });
    assert!(out.total_nf() <= idx.n(), "total NF exceeds text length");
    (out, reports)
}

/// A record for serialization: the string, its NF, and a witness span when
/// one is known (the traversal provides one; the direct extract does not).
pub struct NfRecord<'a> {
    pub string: &'a [u8],
    pub nf: usize,
    pub span: Option<Span>,
}

/// Escapes bytes outside printable ASCII (and the backslash, to keep the
/// encoding reversible) as `\xHH`.
pub fn escape_bytes(s: &[u8]) -> String {
    let mut out = String::with_capacity(s.len());
    for &b in s {
        if (0x20..=0x7e).contains(&b) && b != b'\\' {
            out.push(b as char);
        } else {
            out.push_str(&format!("\\x{:02x}", b));
        }
    }
    out
}

/// One `string<TAB>nf<TAB>start<TAB>length` line per record; spanless records
/// carry `-1` in both positions.
pub fn write_tsv<'a, W: Write>(
    w: &mut W,
    records: impl Iterator<Item = NfRecord<'a>>,
) -> io::Result<()> {
    for r in records {
        let (start, length) = match r.span {
            Some(s) => (s.start as i64, s.length as i64),
            None => (-1, -1),
        };
        writeln!(w, "{}\t{}\t{}\t{}", escape_bytes(r.string), r.nf, start, length)?;
    }
    Ok(())
}

/// JSON-lines emission mirroring the TSV fields.
pub fn write_json<'a, W: Write>(
    w: &mut W,
    records: impl Iterator<Item = NfRecord<'a>>,
) -> io::Result<()> {
    for r in records {
        let (start, length) = match r.span {
            Some(s) => (s.start as i64, s.length as i64),
            None => (-1, -1),
        };
        let line = serde_json::json!({
            "string": escape_bytes(r.string),
            "nf": r.nf,
            "start": start,
            "length": length,
        });
        writeln!(w, "{}", line)?;
    }
    Ok(())
}
