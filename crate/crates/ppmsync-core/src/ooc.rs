//! Optical orthogonal codes and the binary modulation books expanded from
//! them.
//!
//! An `(v, k, lambda)` optical orthogonal code is a family of `k`-subsets
//! of `Z_v` whose cyclic autocorrelation (off peak) and pairwise cyclic
//! cross-correlation never exceed `lambda`. Expanding every cyclic shift of
//! every codeword into a 0/1 word of length `v` yields a constant-weight
//! modulation book with minimum Hamming distance at least `2(k - lambda)`;
//! the book's words double as the payload alphabet of a self-synchronizing
//! code.

pub mod catalog;

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::Ratio;

/// Errors from code validation, book construction, and the bounds.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OocError {
    #[error("code length must be at least 2, got {0}")]
    LengthTooSmall(u64),
    #[error("codeword {word} has weight {got}, expected {expected}")]
    WrongWeight { word: usize, got: u64, expected: u64 },
    #[error("codeword {word} contains element {element} outside 0..{v}")]
    ElementOutOfRange { word: usize, element: u64, v: u64 },
    #[error("codeword {word} contains a repeated element")]
    RepeatedElement { word: usize },
    #[error("weight {k} must exceed the correlation bound {lambda}")]
    WeightNotAboveLambda { k: u64, lambda: u64 },
    #[error(
        "codeword {word} has off-peak autocorrelation {value} at shift {shift}, above {lambda}"
    )]
    AutocorrelationTooHigh { word: usize, shift: u64, value: u64, lambda: u64 },
    #[error(
        "codewords {a} and {b} have cross-correlation {value} at shift {shift}, above {lambda}"
    )]
    CrossCorrelationTooHigh { a: usize, b: usize, shift: u64, value: u64, lambda: u64 },
    #[error("a code needs at least one codeword")]
    EmptyCode,
    #[error("book words {a} and {b} are identical")]
    DuplicateWord { a: usize, b: usize },
    #[error("book word {word} has length {got}, expected {expected}")]
    MixedLength { word: usize, got: usize, expected: usize },
    #[error("book word {word} has weight {got}, expected {expected}")]
    MixedWeight { word: usize, got: u64, expected: u64 },
    #[error("book word {word} contains a symbol other than 0 or 1")]
    NotBinary { word: usize },
    #[error("minimum distance needs at least two words")]
    SingleWord,
    #[error("cannot truncate a {len}-word book to {m} words")]
    BadTruncation { len: usize, m: usize },
    #[error("subset book parameters out of range: C({q}, {k})")]
    BadChoose { q: u64, k: u64 },
}

/// A constant-weight cyclic code over `Z_v` with bounded auto- and
/// cross-correlation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpticalOrthogonalCode {
    v: u64,
    k: u64,
    lambda: u64,
    codewords: Vec<Vec<u64>>,
}

impl OpticalOrthogonalCode {
    /// Validates and stores a code: every codeword must be a `k`-subset of
    /// `Z_v` (stored sorted), `k > lambda`, off-peak autocorrelations and
    /// pairwise cross-correlations at every cyclic shift must stay within
    /// `lambda`.
    pub fn new(
        v: u64,
        k: u64,
        lambda: u64,
        codewords: Vec<Vec<u64>>,
    ) -> Result<Self, OocError> {
        if v < 2 {
            return Err(OocError::LengthTooSmall(v));
        }
        if k <= lambda {
            return Err(OocError::WeightNotAboveLambda { k, lambda });
        }
        if codewords.is_empty() {
            return Err(OocError::EmptyCode);
        }
        let mut sorted = Vec::with_capacity(codewords.len());
        for (w, word) in codewords.into_iter().enumerate() {
            let set = checked_subset(v, word, w)?;
            if set.len() as u64 != k {
                return Err(OocError::WrongWeight { word: w, got: set.len() as u64, expected: k });
            }
            sorted.push(set);
        }
        for (w, word) in sorted.iter().enumerate() {
            let bitmap = bitmap_of(v, word);
            for shift in 1..v {
                let value = correlation(&bitmap, word, shift, v);
                if value > lambda {
                    return Err(OocError::AutocorrelationTooHigh { word: w, shift, value, lambda });
                }
            }
        }
        for a in 0..sorted.len() {
            let bitmap = bitmap_of(v, &sorted[a]);
            for b in (a + 1)..sorted.len() {
                for shift in 0..v {
                    let value = correlation(&bitmap, &sorted[b], shift, v);
                    if value > lambda {
                        return Err(OocError::CrossCorrelationTooHigh {
                            a,
                            b,
                            shift,
                            value,
                            lambda,
                        });
                    }
                }
            }
        }
        Ok(OpticalOrthogonalCode { v, k, lambda, codewords: sorted })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn codewords(&self) -> &[Vec<u64>] {
        &self.codewords
    }

    /// Number of codewords (orbit representatives, not expanded words).
    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// Expands every cyclic shift of every codeword into a 0/1 word,
    /// codeword-major with shifts `0..v` inside each block. The resulting
    /// book has `v * len()` distinct words of weight `k` and minimum
    /// distance at least `2(k - lambda)`.
    pub fn expand_orbits(&self) -> Result<Codebook, OocError> {
        let v = self.v as usize;
        let mut words = Vec::with_capacity(v * self.codewords.len());
        for word in &self.codewords {
            for shift in 0..self.v {
                words.push(expand_shift(self.v, word, shift));
            }
        }
        Codebook::new(words)
    }
}

/// Largest off-peak autocorrelation and largest cross-correlation over a
/// family of subsets of `Z_v`, at any cyclic shift. Single-codeword
/// families report a cross-correlation of 0.
pub fn max_correlations(v: u64, codewords: &[Vec<u64>]) -> Result<(u64, u64), OocError> {
    if v < 2 {
        return Err(OocError::LengthTooSmall(v));
    }
    if codewords.is_empty() {
        return Err(OocError::EmptyCode);
    }
    let mut sorted = Vec::with_capacity(codewords.len());
    for (w, word) in codewords.iter().enumerate() {
        sorted.push(checked_subset(v, word.clone(), w)?);
    }
    let mut auto = 0u64;
    let mut cross = 0u64;
    for (a, word) in sorted.iter().enumerate() {
        let bitmap = bitmap_of(v, word);
        for shift in 1..v {
            auto = auto.max(correlation(&bitmap, word, shift, v));
        }
        for other in sorted.iter().skip(a + 1) {
            for shift in 0..v {
                cross = cross.max(correlation(&bitmap, other, shift, v));
            }
        }
    }
    Ok((auto, cross))
}

/// Checks whether `block` is a difference set in `Z_v`: every nonzero
/// residue must occur equally often among the ordered differences of
/// distinct elements. Returns that common multiplicity, or `None`.
pub fn is_difference_set(v: u64, block: &[u64]) -> Result<Option<u64>, OocError> {
    if v < 2 {
        return Err(OocError::LengthTooSmall(v));
    }
    let block = checked_subset(v, block.to_vec(), 0)?;
    let mut census = vec![0u64; v as usize];
    for &a in &block {
        for &b in &block {
            if a != b {
                census[((a + v - b) % v) as usize] += 1;
            }
        }
    }
    let mu = census[1];
    Ok(census[1..].iter().all(|&c| c == mu).then_some(mu))
}

/// Upper bound on the number of codewords of a `(v, k, lambda)` code:
/// the nested floor chain
/// `floor((1/k) floor(((v-1)/(k-1)) ... floor((v-lambda)/(k-lambda)) ...))`.
///
/// For `lambda = 0` the combinatorial answer is returned directly: a
/// single weight-1 codeword is the only family whose correlations can
/// vanish, so the bound is 1 when `k = 1` and 0 otherwise.
pub fn johnson_bound(v: u64, k: u64, lambda: u64) -> Result<u64, OocError> {
    if v < 2 {
        return Err(OocError::LengthTooSmall(v));
    }
    if k <= lambda || k == 0 {
        return Err(OocError::WeightNotAboveLambda { k, lambda });
    }
    if k > v {
        return Err(OocError::ElementOutOfRange { word: 0, element: k, v });
    }
    if lambda == 0 {
        return Ok(u64::from(k == 1));
    }
    let mut bound = (v - lambda) / (k - lambda);
    for j in (1..lambda).rev() {
        bound = bound * (v - j) / (k - j);
    }
    Ok(bound / k)
}

/// Exact minimum Hamming distance of the full single-orbit book expanded
/// from a difference-set codeword of size `k` in `Z_q`: `2k(q - k)/(q - 1)`
/// as a reduced fraction.
pub fn eppm_min_distance(q: u64, k: u64) -> Result<Ratio, OocError> {
    if q < 2 {
        return Err(OocError::LengthTooSmall(q));
    }
    if k == 0 || k >= q {
        return Err(OocError::ElementOutOfRange { word: 0, element: k, v: q });
    }
    Ok(Ratio::new(2 * k * (q - k), q - 1))
}

/// Minimum pairwise Hamming distance over a family of equal-length binary
/// words (no constant-weight requirement).
pub fn min_hamming_distance(words: &[Vec<u8>]) -> Result<u64, OocError> {
    if words.len() < 2 {
        return Err(OocError::SingleWord);
    }
    let len = words[0].len();
    for (w, word) in words.iter().enumerate() {
        if word.len() != len {
            return Err(OocError::MixedLength { word: w, got: word.len(), expected: len });
        }
        if word.iter().any(|&s| s > 1) {
            return Err(OocError::NotBinary { word: w });
        }
    }
    let mut best = u64::MAX;
    for a in 0..words.len() {
        for b in (a + 1)..words.len() {
            let d = hamming(&words[a], &words[b]);
            if d == 0 {
                return Err(OocError::DuplicateWord { a, b });
            }
            best = best.min(d);
        }
    }
    Ok(best)
}

/// An ordered alphabet of distinct, equal-length, constant-weight binary
/// words, with its minimum distance computed on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    length: usize,
    weight: u64,
    words: Vec<Vec<u8>>,
    min_distance: Option<u64>,
}

impl Codebook {
    /// Validates words (equal length, 0/1 entries, equal weight, pairwise
    /// distinct) and caches the minimum distance. A one-word book is legal
    /// but has no distance.
    pub fn new(words: Vec<Vec<u8>>) -> Result<Self, OocError> {
        if words.is_empty() {
            return Err(OocError::EmptyCode);
        }
        let length = words[0].len();
        if length == 0 {
            return Err(OocError::LengthTooSmall(0));
        }
        let weight = words[0].iter().map(|&s| u64::from(s)).sum();
        for (w, word) in words.iter().enumerate() {
            if word.len() != length {
                return Err(OocError::MixedLength { word: w, got: word.len(), expected: length });
            }
            if word.iter().any(|&s| s > 1) {
                return Err(OocError::NotBinary { word: w });
            }
            let got = word.iter().map(|&s| u64::from(s)).sum();
            if got != weight {
                return Err(OocError::MixedWeight { word: w, got, expected: weight });
            }
        }
        let min_distance = if words.len() >= 2 {
            Some(min_hamming_distance(&words)?)
        } else {
            None
        };
        Ok(Codebook { length, weight, words, min_distance })
    }

    /// The orthogonal alphabet: `q` words of length `q`, one pulse each.
    pub fn ppm(q: u64) -> Result<Self, OocError> {
        if q == 0 {
            return Err(OocError::EmptyCode);
        }
        let q = q as usize;
        let mut words = vec![vec![0u8; q]; q];
        for (i, word) in words.iter_mut().enumerate() {
            word[i] = 1;
        }
        Codebook::new(words)
    }

    /// All `k`-subsets of `q` slots in lexicographic order, `C(q, k)`
    /// words in total.
    pub fn mppm(q: u64, k: u64) -> Result<Self, OocError> {
        if q == 0 || k == 0 || k > q {
            return Err(OocError::BadChoose { q, k });
        }
        let count = binomial(q, k).ok_or(OocError::BadChoose { q, k })?;
        if count > 1 << 20 {
            return Err(OocError::BadChoose { q, k });
        }
        let (q, k) = (q as usize, k as usize);
        let mut words = Vec::with_capacity(count as usize);
        let mut support: Vec<usize> = (0..k).collect();
        loop {
            let mut word = vec![0u8; q];
            for &p in &support {
                word[p] = 1;
            }
            words.push(word);
            // Advance to the next k-subset in lexicographic order.
            let mut i = k;
            loop {
                if i == 0 {
                    return Codebook::new(words);
                }
                i -= 1;
                if support[i] != i + q - k {
                    break;
                }
            }
            support[i] += 1;
            for j in i + 1..k {
                support[j] = support[j - 1] + 1;
            }
        }
    }

    /// The first `m` words as a new book (distances recomputed).
    pub fn truncated(&self, m: usize) -> Result<Self, OocError> {
        if m == 0 || m > self.words.len() {
            return Err(OocError::BadTruncation { len: self.words.len(), m });
        }
        Codebook::new(self.words[..m].to_vec())
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    /// Number of words.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Word length in slots.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Pulses per word.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Minimum pairwise Hamming distance; an error for a one-word book.
    pub fn min_distance(&self) -> Result<u64, OocError> {
        self.min_distance.ok_or(OocError::SingleWord)
    }
}

fn checked_subset(v: u64, mut word: Vec<u64>, index: usize) -> Result<Vec<u64>, OocError> {
    if word.is_empty() {
        return Err(OocError::WrongWeight { word: index, got: 0, expected: 1 });
    }
    for &e in &word {
        if e >= v {
            return Err(OocError::ElementOutOfRange { word: index, element: e, v });
        }
    }
    word.sort_unstable();
    if word.windows(2).any(|w| w[0] == w[1]) {
        return Err(OocError::RepeatedElement { word: index });
    }
    Ok(word)
}

fn bitmap_of(v: u64, word: &[u64]) -> Vec<bool> {
    let mut bitmap = vec![false; v as usize];
    for &e in word {
        bitmap[e as usize] = true;
    }
    bitmap
}

/// `|A ∩ (B + shift)|` in `Z_v`, with `A` given as a bitmap.
fn correlation(bitmap: &[bool], word: &[u64], shift: u64, v: u64) -> u64 {
    word.iter()
        .filter(|&&e| bitmap[((e + shift) % v) as usize])
        .count() as u64
}

fn expand_shift(v: u64, word: &[u64], shift: u64) -> Vec<u8> {
    let mut out = vec![0u8; v as usize];
    for &e in word {
        out[((e + shift) % v) as usize] = 1;
    }
    out
}

fn hamming(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_weight3_code_mod_8() {
        let ooc = OpticalOrthogonalCode::new(8, 3, 1, vec![vec![0, 1, 3]]).unwrap();
        assert_eq!(ooc.codewords(), [vec![0, 1, 3]]);
        let book = ooc.expand_orbits().unwrap();
        assert_eq!(book.len(), 8);
        assert_eq!(book.weight(), 3);
        assert_eq!(book.min_distance().unwrap(), 4); // 2 (k - lambda)
        assert_eq!(book.word(0), [1, 1, 0, 1, 0, 0, 0, 0]);
        assert_eq!(book.word(1), [0, 1, 1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn rejects_excessive_autocorrelation() {
        let err = OpticalOrthogonalCode::new(8, 4, 1, vec![vec![0, 1, 2, 4]]).unwrap_err();
        assert!(matches!(err, OocError::AutocorrelationTooHigh { lambda: 1, .. }));
    }

    #[test]
    fn rejects_excessive_crosscorrelation() {
        // {0, 5, 7} is auto-clean on its own but meets {0, 1, 3} twice
        // under a shift of one.
        let err =
            OpticalOrthogonalCode::new(8, 3, 1, vec![vec![0, 1, 3], vec![0, 5, 7]]).unwrap_err();
        assert!(matches!(err, OocError::CrossCorrelationTooHigh { a: 0, b: 1, .. }));
    }

    #[test]
    fn rejects_malformed_codewords() {
        assert!(matches!(
            OpticalOrthogonalCode::new(8, 3, 1, vec![vec![0, 1, 9]]),
            Err(OocError::ElementOutOfRange { element: 9, .. })
        ));
        assert!(matches!(
            OpticalOrthogonalCode::new(8, 3, 1, vec![vec![0, 1, 1]]),
            Err(OocError::RepeatedElement { word: 0 })
        ));
        assert!(matches!(
            OpticalOrthogonalCode::new(8, 3, 1, vec![vec![0, 1]]),
            Err(OocError::WrongWeight { word: 0, got: 2, expected: 3 })
        ));
        assert!(matches!(
            OpticalOrthogonalCode::new(8, 3, 3, vec![vec![0, 1, 3]]),
            Err(OocError::WeightNotAboveLambda { k: 3, lambda: 3 })
        ));
    }

    #[test]
    fn weight8_code_mod_16_has_distance_8() {
        let ooc =
            OpticalOrthogonalCode::new(16, 8, 4, vec![vec![0, 1, 2, 3, 4, 7, 9, 12]]).unwrap();
        let book = ooc.expand_orbits().unwrap();
        assert_eq!(book.len(), 16);
        assert_eq!(book.min_distance().unwrap(), 8);
        let (auto, cross) = max_correlations(16, ooc.codewords()).unwrap();
        assert_eq!((auto, cross), (4, 0));
    }

    #[test]
    fn weight10_code_mod_37_has_distance_14() {
        let ooc = OpticalOrthogonalCode::new(
            37,
            10,
            3,
            vec![vec![0, 1, 7, 9, 10, 12, 16, 26, 33, 34]],
        )
        .unwrap();
        let book = ooc.expand_orbits().unwrap();
        assert_eq!(book.len(), 37);
        assert_eq!(book.min_distance().unwrap(), 14); // 2 (k - lambda)
    }

    #[test]
    fn single_pulse_book() {
        let book = Codebook::ppm(4).unwrap();
        assert_eq!(book.len(), 4);
        assert_eq!(book.weight(), 1);
        assert_eq!(book.min_distance().unwrap(), 2);
        assert_eq!(book.word(2), [0, 0, 1, 0]);
    }

    #[test]
    fn subset_book_is_lexicographic() {
        let book = Codebook::mppm(4, 2).unwrap();
        assert_eq!(book.len(), 6);
        assert_eq!(book.word(0), [1, 1, 0, 0]);
        assert_eq!(book.word(1), [1, 0, 1, 0]);
        assert_eq!(book.word(2), [1, 0, 0, 1]);
        assert_eq!(book.word(3), [0, 1, 1, 0]);
        assert_eq!(book.word(5), [0, 0, 1, 1]);
        assert_eq!(book.min_distance().unwrap(), 2);
        assert_eq!(Codebook::mppm(9, 2).unwrap().len(), 36);
        assert!(Codebook::mppm(4, 5).is_err());
    }

    #[test]
    fn book_validation_catches_defects() {
        assert!(matches!(
            Codebook::new(vec![vec![1, 0], vec![1, 0]]),
            Err(OocError::DuplicateWord { a: 0, b: 1 })
        ));
        assert!(matches!(
            Codebook::new(vec![vec![1, 0], vec![1, 0, 0]]),
            Err(OocError::MixedLength { word: 1, .. })
        ));
        assert!(matches!(
            Codebook::new(vec![vec![1, 0], vec![1, 1]]),
            Err(OocError::MixedWeight { word: 1, got: 2, expected: 1 })
        ));
        assert!(matches!(
            Codebook::new(vec![vec![2, 0]]),
            Err(OocError::NotBinary { word: 0 })
        ));
        assert!(matches!(Codebook::new(vec![]), Err(OocError::EmptyCode)));
    }

    #[test]
    fn truncation_keeps_a_prefix() {
        let book = Codebook::ppm(8).unwrap();
        let head = book.truncated(3).unwrap();
        assert_eq!(head.len(), 3);
        assert_eq!(head.word(2), book.word(2));
        assert!(book.truncated(0).is_err());
        assert!(book.truncated(9).is_err());
    }

    #[test]
    fn difference_set_census() {
        assert_eq!(is_difference_set(11, &[0, 2, 3, 4, 8]).unwrap(), Some(2));
        assert_eq!(
            is_difference_set(19, &[0, 3, 4, 5, 6, 8, 10, 15, 16]).unwrap(),
            Some(4)
        );
        assert_eq!(is_difference_set(8, &[0, 1, 3]).unwrap(), None);
        assert_eq!(is_difference_set(7, &[0, 1, 3]).unwrap(), Some(1));
    }

    #[test]
    fn large_difference_set_mod_35() {
        let block: Vec<u64> = vec![
            0, 1, 3, 4, 7, 9, 11, 12, 13, 14, 16, 17, 21, 27, 28, 29, 33,
        ];
        assert_eq!(is_difference_set(35, &block).unwrap(), Some(8));
        let ooc = OpticalOrthogonalCode::new(35, 17, 8, vec![block]).unwrap();
        assert_eq!(ooc.expand_orbits().unwrap().min_distance().unwrap(), 18);
    }

    #[test]
    fn johnson_bound_values() {
        assert_eq!(johnson_bound(8, 3, 1).unwrap(), 1);
        assert_eq!(johnson_bound(16, 4, 1).unwrap(), 1);
        assert_eq!(johnson_bound(16, 3, 1).unwrap(), 2);
        assert_eq!(johnson_bound(16, 8, 4).unwrap(), 4);
        assert_eq!(johnson_bound(37, 10, 3).unwrap(), 6);
        assert_eq!(johnson_bound(8, 1, 0).unwrap(), 1);
        assert_eq!(johnson_bound(8, 2, 0).unwrap(), 0);
        assert!(johnson_bound(8, 2, 2).is_err());
    }

    #[test]
    fn johnson_bound_grows_with_length() {
        let mut last = 0;
        for v in 8..=64u64 {
            let b = johnson_bound(v, 3, 1).unwrap();
            assert!(b >= last, "v = {v}");
            last = b;
        }
    }

    #[test]
    fn distance_formula_for_difference_set_books() {
        assert_eq!(eppm_min_distance(11, 5).unwrap(), Ratio::new(6, 1));
        assert_eq!(eppm_min_distance(19, 9).unwrap(), Ratio::new(10, 1));
        assert_eq!(eppm_min_distance(35, 17).unwrap(), Ratio::new(18, 1));
        // Single-pulse books: 2(q - 1)/(q - 1) = 2, the orthogonal distance.
        assert_eq!(eppm_min_distance(5, 1).unwrap(), Ratio::new(2, 1));
        // Not always integral: a half-weight word over 16 slots gives 128/15.
        assert_eq!(eppm_min_distance(16, 8).unwrap(), Ratio::new(128, 15));
    }

    #[test]
    fn distance_formula_matches_expanded_books() {
        for (q, block) in [
            (11u64, vec![0u64, 2, 3, 4, 8]),
            (19, vec![0, 3, 4, 5, 6, 8, 10, 15, 16]),
        ] {
            let k = block.len() as u64;
            let lambda = is_difference_set(q, &block).unwrap().unwrap();
            let ooc = OpticalOrthogonalCode::new(q, k, lambda, vec![block]).unwrap();
            let got = ooc.expand_orbits().unwrap().min_distance().unwrap();
            let predicted = eppm_min_distance(q, k).unwrap();
            assert!(predicted.is_integral());
            assert_eq!(got, predicted.num());
        }
    }

    #[test]
    fn raw_min_distance_handles_mixed_weight() {
        let words = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]];
        assert_eq!(min_hamming_distance(&words).unwrap(), 1);
        assert!(min_hamming_distance(&words[..1]).is_err());
    }
}
