//! Free-semigroup word combinatorics.
//!
//! Words over the alphabet `{0, ..., m-1}` index composite maps `f_w` and
//! Bowen metrics `d_w`. The single most consequential convention in the crate
//! lives here: the *evaluation suffixes* of a word `w` of length `n` are its
//! `n` suffixes of lengths `0, 1, ..., n-1` (shortest first), so the empty
//! word (identity map) is included and the full word itself is excluded.
//! This is the unique reading under which a Birkhoff word-sum `S_w phi` has
//! exactly `n` terms and the skew-product identity
//! `S_n g(omega, x) = n c + S_{rev(omega[0..n])} phi(x)` holds term by term.

use crate::rng::CounterRng;
use crate::{Error, Result};

/// Default cap on exhaustive word enumeration (`m^n` words).
pub const DEFAULT_WORD_BUDGET: u64 = 1_000_000;

/// A finite word over the alphabet `{0, ..., m-1}`.
///
/// The first letter is `letters()[0]`; composition acts rightmost-first, so
/// `f_w = f_{w_1} o f_{w_2} o ... o f_{w_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: u8) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidParams("alphabet size must be >= 1".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(Error::InvalidParams(format!(
                "letter {bad} not in alphabet of size {alphabet}"
            )));
        }
        Ok(Word { letters, alphabet })
    }

    /// The empty word (identity map). Valid only as an evaluation suffix.
    pub fn empty(alphabet: u8) -> Self {
        Word { letters: Vec::new(), alphabet }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet
    }

    /// Concatenation `self . other` (self acts later: `f_{self.other} = f_self o f_other`).
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet: self.alphabet.max(other.alphabet) }
    }

    /// Suffix of the given length (the last `len` letters).
    pub fn suffix(&self, len: usize) -> Word {
        assert!(len <= self.len());
        Word {
            letters: self.letters[self.len() - len..].to_vec(),
            alphabet: self.alphabet,
        }
    }

    /// The word read backwards (`rev(i_1 ... i_k) = i_k ... i_1`).
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, alphabet: self.alphabet }
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// How word averages over `|w| = n` are evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum WordStrategy {
    /// Enumerate all `m^n` words; rejected when `m^n` exceeds the budget.
    Exhaustive { budget: u64 },
    /// Sample `sample_count` iid uniform words from the counter stream of `seed`.
    MonteCarlo { sample_count: u64, seed: u64 },
}

impl WordStrategy {
    pub fn exhaustive() -> Self {
        WordStrategy::Exhaustive { budget: DEFAULT_WORD_BUDGET }
    }

    pub fn montecarlo(sample_count: u64, seed: u64) -> Self {
        WordStrategy::MonteCarlo { sample_count, seed }
    }

    /// The words this strategy evaluates for length `n` over alphabet `m`,
    /// together with whether they form the complete exhaustive set.
    pub fn words(&self, m: u8, n: usize) -> Result<(Vec<Word>, bool)> {
        match *self {
            WordStrategy::Exhaustive { budget } => {
                Ok((enumerate_words_with_budget(m, n, budget)?, true))
            }
            WordStrategy::MonteCarlo { sample_count, seed } => {
                if sample_count == 0 {
                    return Err(Error::InvalidParams("sample_count must be >= 1".into()));
                }
                Ok((sample_words(m, n, sample_count, seed), false))
            }
        }
    }
}

pub fn word_count(m: u8, n: usize) -> u128 {
    (m as u128).pow(n as u32)
}

/// All `m^n` words of length `n` in lexicographic order.
pub fn enumerate_words(m: u8, n: usize) -> Result<Vec<Word>> {
    enumerate_words_with_budget(m, n, DEFAULT_WORD_BUDGET)
}

pub fn enumerate_words_with_budget(m: u8, n: usize, budget: u64) -> Result<Vec<Word>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParams("need m >= 1 and n >= 1".into()));
    }
    let count = word_count(m, n);
    if count > budget as u128 {
        return Err(Error::WordBudgetExceeded { needed: count, budget });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut letters = vec![0u8; n];
    loop {
        out.push(Word { letters: letters.clone(), alphabet: m });
        // increment base-m, most significant letter first
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            letters[pos] += 1;
            if letters[pos] < m {
                break;
            }
            letters[pos] = 0;
        }
    }
}

/// `count` iid uniform words of length `n`; identical seed gives the
/// identical sequence regardless of platform or parallel consumption.
pub fn sample_words(m: u8, n: usize, count: u64, seed: u64) -> Vec<Word> {
    let rng = CounterRng::new(seed);
    (0..count)
        .map(|i| {
            let stream = rng.substream(i);
            let letters = (0..n).map(|j| stream.below_at(j as u64, m as u64) as u8).collect();
            Word { letters, alphabet: m }
        })
        .collect()
}

/// The `n` evaluation suffixes of `w`, shortest first: lengths `0..n-1`.
///
/// The full word is excluded; the empty word stands for the identity map.
pub fn evaluation_suffixes(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((0..w.len()).map(|len| w.suffix(len)).collect())
}

/// Lexicographic index of `w` among words of its length (base-m value).
pub fn word_index(w: &Word) -> u64 {
    let m = w.alphabet_size() as u64;
    w.letters().iter().fold(0u64, |acc, &l| acc * m + l as u64)
}

/// Inverse of [`word_index`]: the `i`-th word of length `n` over `m` letters.
pub fn word_from_index(m: u8, n: usize, i: u64) -> Result<Word> {
    let count = word_count(m, n);
    if (i as u128) >= count {
        return Err(Error::WordIndexOutOfRange { index: i, count });
    }
    let mut letters = vec![0u8; n];
    let mut rem = i;
    for pos in (0..n).rev() {
        letters[pos] = (rem % m as u64) as u8;
        rem /= m as u64;
    }
    Ok(Word { letters, alphabet: m })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u8], m: u8) -> Word {
        Word::new(letters.to_vec(), m).unwrap()
    }

    #[test]
    fn enumerate_small_alphabets() {
        let ws = enumerate_words(2, 1).unwrap();
        assert_eq!(ws, vec![w(&[0], 2), w(&[1], 2)]);

        let ws = enumerate_words(2, 2).unwrap();
        assert_eq!(ws.len(), 4);
        assert_eq!(
            ws,
            vec![w(&[0, 0], 2), w(&[0, 1], 2), w(&[1, 0], 2), w(&[1, 1], 2)]
        );

        let ws = enumerate_words(3, 4).unwrap();
        assert_eq!(ws.len(), 81);
        assert_eq!(ws[0], w(&[0, 0, 0, 0], 3));
        assert_eq!(ws[80], w(&[2, 2, 2, 2], 3));
    }

    #[test]
    fn enumerate_rejects_over_budget() {
        let err = enumerate_words_with_budget(2, 30, 1_000_000).unwrap_err();
        match err {
            Error::WordBudgetExceeded { needed, budget } => {
                assert_eq!(needed, 1 << 30);
                assert_eq!(budget, 1_000_000);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn sample_single_letter_alphabet() {
        let ws = sample_words(1, 5, 3, 99);
        assert_eq!(ws.len(), 3);
        for word in ws {
            assert_eq!(word.letters(), &[0, 0, 0, 0, 0]);
        }
    }

    #[test]
    fn sample_is_deterministic() {
        assert_eq!(sample_words(2, 3, 4, 42), sample_words(2, 3, 4, 42));
        assert_ne!(sample_words(2, 3, 64, 42), sample_words(2, 3, 64, 43));
    }

    #[test]
    fn sample_letter_frequency_law_of_large_numbers() {
        let count = 100_000u64;
        let ws = sample_words(2, 3, count, 7);
        for pos in 0..3 {
            let ones = ws.iter().filter(|word| word.letters()[pos] == 1).count();
            let freq = ones as f64 / count as f64;
            assert!((freq - 0.5).abs() < 0.01, "pos {pos}: freq {freq}");
        }
    }

    #[test]
    fn suffixes_match_convention() {
        assert_eq!(evaluation_suffixes(&w(&[1], 2)).unwrap(), vec![Word::empty(2)]);
        assert_eq!(
            evaluation_suffixes(&w(&[0, 1], 2)).unwrap(),
            vec![Word::empty(2), w(&[1], 2)]
        );
        assert_eq!(
            evaluation_suffixes(&w(&[2, 0, 1], 3)).unwrap(),
            vec![Word::empty(3), w(&[1], 3), w(&[0, 1], 3)]
        );
        assert!(matches!(evaluation_suffixes(&Word::empty(2)), Err(Error::EmptyWord)));
    }

    #[test]
    fn suffix_counts_and_lengths() {
        let word = w(&[1, 0, 2, 1, 0], 3);
        let sufs = evaluation_suffixes(&word).unwrap();
        assert_eq!(sufs.len(), word.len());
        for (len, s) in sufs.iter().enumerate() {
            assert_eq!(s.len(), len);
            assert_eq!(s.letters(), &word.letters()[word.len() - len..]);
        }
    }

    #[test]
    fn index_round_trip_examples() {
        assert_eq!(word_index(&w(&[0, 0], 2)), 0);
        assert_eq!(word_index(&w(&[1, 1], 2)), 3);
        assert_eq!(word_from_index(3, 2, 5).unwrap(), w(&[1, 2], 3));
        assert!(word_from_index(2, 2, 4).is_err());
    }

    #[test]
    fn enumeration_has_no_duplicates_and_matches_indexing() {
        for m in 1..=4u8 {
            for n in 1..=8usize {
                if word_count(m, n) > 70_000 {
                    continue;
                }
                let ws = enumerate_words(m, n).unwrap();
                assert_eq!(ws.len() as u128, word_count(m, n));
                for (i, word) in ws.iter().enumerate() {
                    assert_eq!(word_index(word), i as u64);
                    assert_eq!(&word_from_index(m, n, i as u64).unwrap(), word);
                }
                let mut sorted = ws.clone();
                sorted.dedup();
                assert_eq!(sorted.len(), ws.len());
            }
        }
    }

    #[test]
    fn concatenation_splits_suffix_sets() {
        // For w = w2.w1 the suffix set splits as
        // suffixes(w) = suffixes(w1) + { v.w1 : v in suffixes(w2) }.
        let cases = [
            (w(&[0], 2), w(&[1], 2)),
            (w(&[1, 0], 2), w(&[0, 1, 1], 2)),
            (w(&[2, 1], 3), w(&[0], 3)),
            (w(&[1, 2, 0], 3), w(&[2, 2], 3)),
        ];
        for (front, back) in cases {
            let whole = front.concat(&back);
            let mut expected = evaluation_suffixes(&back).unwrap();
            for v in evaluation_suffixes(&front).unwrap() {
                expected.push(v.concat(&back));
            }
            let got = evaluation_suffixes(&whole).unwrap();
            assert_eq!(got.len(), expected.len());
            for s in expected {
                assert!(got.contains(&s), "missing suffix {s} of {whole}");
            }
        }
    }
}
