//! Net frequency computation over an augmented suffix array.
//!
//! The *net frequency* (NF) of a string is the number of its occurrences
//! whose one-character left and right extensions are both unique in the
//! text: the occurrences that are not explained by a longer repeated
//! string. Unique and absent strings have NF zero, and the strings with
//! positive NF are exactly the repeated strings that are maximal.
//!
//! The crate builds a suffix array augmented with the inverse array, LCP
//! values, the Burrows-Wheeler transform and its LF mapping, plus a coloured
//! range listing structure over the BWT, and answers:
//!
//! * single-string NF queries ([`query`]) by three strategies with different
//!   cost profiles (CRL, full interval scan, hash-counting baseline);
//! * whole-text enumeration of every string with positive NF ([`all_nf`]),
//!   by direct scan or by LCP-interval traversal;
//! * corpus measures used by the cost bounds ([`stats`]);
//! * structural checks on Fibonacci words ([`fibonacci`]).
//!
//! [`oracle`] holds brute-force reference implementations used by the test
//! suites to validate everything above.

pub mod all_nf;
pub mod crl;
pub mod fibonacci;
pub mod index;
pub mod oracle;
pub mod query;
mod sais;
pub mod stats;
pub mod text;

pub use all_nf::{
    all_nf_extract_direct, all_nf_extract_traverse, all_nf_traverse, candidate, Candidate,
    NetReport, NfMultiset, NfRecord,
};
pub use crl::CrlIndex;
pub use index::{IndexIoError, SaInterval, SuffixIndex};
pub use query::{is_net_occurrence, single_nf_asa, single_nf_crl, single_nf_hsa, NfValue};
pub use stats::{compute_stats, irreducible_lcp_sum, CorpusStats, DeltaMeasure};
pub use text::{Occurrence, Span, Text, TextError, SENTINEL};
