//! Sentinel-terminated input text with 1-based addressing.
//!
//! Every index in this crate is built over a [`Text`]: the raw input bytes
//! followed by a single sentinel byte that is lexicographically smaller than
//! everything else. Positions are 1-based throughout the public surface.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

/// The terminator appended to every text. Inputs may not contain it.
pub const SENTINEL: u8 = 0x00;

/// Errors raised while loading a text.
#[derive(Debug)]
pub enum TextError {
    /// The input contains the sentinel byte at the given 1-based position.
    SentinelCollision { position: usize },
    /// The input file could not be read.
    Io(io::Error),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::SentinelCollision { position } => {
                write!(f, "sentinel collision: input contains 0x00 at position {}", position)
            }
            TextError::Io(e) => write!(f, "cannot read input: {}", e),
        }
    }
}

impl std::error::Error for TextError {}

impl From<io::Error> for TextError {
    fn from(e: io::Error) -> Self {
        TextError::Io(e)
    }
}

/// A text of `n` positions, `1..=n`, where position `n` holds the sentinel
/// and the sentinel occurs nowhere else.
#[derive(Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
    sigma: usize,
}

impl Text {
    /// Appends the sentinel to `raw` and validates that `raw` is sentinel-free.
    pub fn from_bytes(raw: &[u8]) -> Result<Self, TextError> {
        if let Some(i) = raw.iter().position(|&b| b == SENTINEL) {
            return Err(TextError::SentinelCollision { position: i + 1 });
        }
        let mut bytes = Vec::with_capacity(raw.len() + 1);
        bytes.extend_from_slice(raw);
        bytes.push(SENTINEL);
        let mut seen = [false; 256];
        for &b in &bytes {
            seen[b as usize] = true;
        }
        let sigma = seen.iter().filter(|&&s| s).count();
        Ok(Text { bytes, sigma })
    }

    /// Reads a file as raw bytes; no decoding, trailing newlines are indexed as-is.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, TextError> {
        Self::from_bytes(&fs::read(path)?)
    }

    /// Total number of positions, including the sentinel.
    pub fn n(&self) -> usize {
        self.bytes.len()
    }

    /// Byte at 1-based position `pos`.
    ///
    /// Panics if `pos` is out of `1..=n`.
    pub fn byte(&self, pos: usize) -> u8 {
        assert!(pos >= 1 && pos <= self.n(), "position {} out of 1..={}", pos, self.n());
        self.bytes[pos - 1]
    }

    /// All bytes including the trailing sentinel.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The input bytes without the sentinel.
    pub fn raw(&self) -> &[u8] {
        &self.bytes[..self.bytes.len() - 1]
    }

    /// Number of distinct byte values present, sentinel included.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// The bytes covered by `span`.
    ///
    /// Panics if the span is out of bounds.
    pub fn substring(&self, span: Span) -> &[u8] {
        assert!(
            span.start >= 1 && span.start - 1 + span.length <= self.n(),
            "span {:?} out of bounds for text of length {}",
            span,
            self.n()
        );
        &self.bytes[span.start - 1..span.start - 1 + span.length]
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text(n={}, sigma={})", self.n(), self.sigma)
    }
}

/// A (start, length) reference into a text; `length` may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub length: usize,
}

impl Span {
    pub fn new(start: usize, length: usize) -> Self {
        Span { start, length }
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }
}

/// An occurrence as a pair of inclusive 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub start: usize,
    pub end: usize,
}

impl Occurrence {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start >= 1 && start <= end);
        Occurrence { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false // start <= end always holds
    }

    pub fn span(&self) -> Span {
        Span::new(self.start, self.len())
    }
}

impl From<Span> for Occurrence {
    fn from(s: Span) -> Self {
        debug_assert!(s.length >= 1);
        Occurrence { start: s.start, end: s.start + s.length - 1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_appends_sentinel() {
        let t = Text::from_bytes(b"aa").unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.bytes(), &[b'a', b'a', SENTINEL]);
        assert_eq!(t.sigma(), 2);
    }

    #[test]
    fn load_empty_input() {
        let t = Text::from_bytes(b"").unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.bytes(), &[SENTINEL]);
    }

    #[test]
    fn load_worked_example() {
        let t = Text::from_bytes(b"rstkstcastarstast").unwrap();
        assert_eq!(t.n(), 18);
        assert_eq!(t.byte(18), SENTINEL);
        assert_eq!(t.sigma(), 7); // r s t k c a + sentinel
    }

    #[test]
    fn load_rejects_sentinel() {
        let err = Text::from_bytes(b"a\x00b").unwrap_err();
        match err {
            TextError::SentinelCollision { position } => assert_eq!(position, 2),
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn sentinel_only_at_last_position() {
        let t = Text::from_bytes(b"abcabc").unwrap();
        let hits: Vec<usize> = (1..=t.n()).filter(|&p| t.byte(p) == SENTINEL).collect();
        assert_eq!(hits, vec![t.n()]);
    }

    #[test]
    fn substring_reads() {
        let t = Text::from_bytes(b"rstkstcastarstast").unwrap();
        assert_eq!(t.substring(Span::new(5, 2)), b"st");
        assert_eq!(t.substring(Span::new(1, 0)), b"");
        let aa = Text::from_bytes(b"aa").unwrap();
        assert_eq!(aa.substring(Span::new(1, 2)), b"aa");
    }

    #[test]
    #[should_panic]
    fn substring_out_of_bounds_panics() {
        let t = Text::from_bytes(b"ab").unwrap();
        t.substring(Span::new(2, 5));
    }

    #[test]
    fn substring_partition_reconstructs() {
        let t = Text::from_bytes(b"mississippi").unwrap();
        let mut rebuilt = Vec::new();
        let mut pos = 1;
        for len in [3usize, 1, 5, 2, 1] {
            rebuilt.extend_from_slice(t.substring(Span::new(pos, len)));
            pos += len;
        }
        assert_eq!(pos, t.n() + 1);
        assert_eq!(rebuilt, t.bytes());
    }
}
