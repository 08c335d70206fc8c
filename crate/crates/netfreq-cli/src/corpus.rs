//! Deterministic English-like corpus generation for benchmarks.
//!
//! Space-delimited tokens drawn from a Zipf-distributed vocabulary of random
//! lowercase words. The top ranks are forced to length 6..=9 so that highly
//! frequent single-token queries exist within the usual query length bounds.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::collections::HashSet;

const VOCABULARY: usize = 20_000;

/// Generates at least `target_len` bytes of space-delimited text,
/// reproducibly from `seed`.
pub fn english_like(target_len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let vocab = build_vocab(&mut rng);

    // Zipf weights 1/(rank+1), sampled through the cumulative sums.
    let mut cumulative = Vec::with_capacity(vocab.len());
    let mut total = 0.0f64;
    for rank in 0..vocab.len() {
        total += 1.0 / (rank as f64 + 1.0);
        cumulative.push(total);
    }

    let mut out = Vec::with_capacity(target_len + 16);
    while out.len() < target_len {
        let u = rng.gen::<f64>() * total;
        let rank = cumulative.partition_point(|&c| c < u).min(vocab.len() - 1);
        out.extend_from_slice(&vocab[rank]);
        out.push(b' ');
    }
    out
}

fn build_vocab(rng: &mut ChaCha12Rng) -> Vec<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut vocab = Vec::with_capacity(VOCABULARY);
    while vocab.len() < VOCABULARY {
        let rank = vocab.len();
        let len = if rank < 100 { 6 + rank % 4 } else { rng.gen_range(2..=10) };
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(b'a'..=b'z')).collect();
        if seen.insert(word.clone()) {
            vocab.push(word);
        }
    }
    vocab
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(english_like(10_000, 7), english_like(10_000, 7));
        assert_ne!(english_like(10_000, 7), english_like(10_000, 8));
    }

    #[test]
    fn reaches_target_and_stays_clean() {
        let c = english_like(50_000, 1);
        assert!(c.len() >= 50_000);
        assert!(c.iter().all(|&b| b == b' ' || b.is_ascii_lowercase()));
        assert_eq!(*c.last().unwrap(), b' ');
    }

    #[test]
    fn has_very_frequent_long_tokens() {
        // the corpus must contain tokens of length >= 5 frequent enough for
        // high-frequency query classes
        let c = english_like(200_000, 2);
        let mut counts: std::collections::HashMap<&[u8], usize> = std::collections::HashMap::new();
        for tok in c.split(|&b| b == b' ').filter(|t| !t.is_empty()) {
            *counts.entry(tok).or_insert(0) += 1;
        }
        let best = counts
            .iter()
            .filter(|(t, _)| t.len() >= 5)
            .map(|(_, &c)| c)
            .max()
            .unwrap();
        assert!(best > 500, "top long token occurs only {} times", best);
    }
}
