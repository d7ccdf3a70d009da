//! Combining a synchronization marker with a payload alphabet into a
//! comma-free constant-weight code, and certifying the comma-free index by
//! exhaustive splice enumeration.
//!
//! Given a marker (a two-set difference system over `Z_n`) and a payload
//! book whose word length equals the marker's free capacity, every payload
//! word is embedded into an `n`-slot interval: marker positions in `D_0`
//! carry 0, positions in `D_1` carry 1, and the remaining coordinates carry
//! the payload bits in ascending coordinate order. A receiver scanning a
//! stream of such intervals can find the interval boundaries because every
//! splice of two codewords disagrees with every codeword in at least
//! `rho` marker positions, `rho` being the marker's index.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::dss::{Dss, DssError};
use crate::ooc::{Codebook, OocError};

/// Default ceiling on certification work, in distance evaluations.
pub const DEFAULT_WORK_LIMIT: u64 = 1_000_000_000;

/// Errors from combination, splicing, and certification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelfSyncError {
    #[error("payload word length {payload} does not match marker free capacity {capacity}")]
    CapacityMismatch { payload: usize, capacity: usize },
    #[error("certification needs about {estimated} distance evaluations, above the limit {limit}")]
    WorkLimitExceeded { estimated: u64, limit: u64 },
    #[error("the comma-free index has not been certified yet")]
    NotCertified,
    #[error("a book needs at least one word")]
    EmptyBook,
    #[error("word {word} has length {got}, expected {expected}")]
    MixedLength { word: usize, got: usize, expected: usize },
    #[error("words must have at least 2 slots, got {0}")]
    WordTooShort(usize),
    #[error("word {word} contains a symbol other than 0 or 1")]
    NotBinary { word: usize },
    #[error("splice offset {offset} must lie in 1..{n}")]
    BadSpliceOffset { offset: usize, n: usize },
    #[error("marker coordinate {coord} outside word length {n}")]
    MarkerCoordOutOfRange { coord: u64, n: usize },
    #[error(
        "outer free capacity {capacity} does not equal {frames} frames of {symbol_length} slots"
    )]
    FrameMismatch { capacity: u64, frames: u64, symbol_length: u64 },
    #[error(transparent)]
    Ooc(#[from] OocError),
    #[error(transparent)]
    Dss(#[from] DssError),
}

/// The `(x, y, offset, z)` tuple achieving a minimal splice distance:
/// the splice of words `x` and `y` at the given offset lies at the
/// reported distance from word `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpliceWitness {
    pub x: usize,
    pub y: usize,
    pub offset: usize,
    pub z: usize,
}

/// Result of an exhaustive comma-free certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommaFreeCertificate {
    /// Minimum Hamming distance between any splice and any codeword; 0
    /// means the book is not self-synchronizing.
    pub index: u64,
    /// A minimizing tuple for the full-coordinate index.
    pub witness: SpliceWitness,
    /// The same minimum restricted to the marker coordinates, when marker
    /// coordinates were supplied. Never exceeds `index`; for a combined
    /// code it is at least the marker's own index.
    pub restricted_index: Option<u64>,
    pub restricted_witness: Option<SpliceWitness>,
    /// Distance evaluations actually performed.
    pub distance_evaluations: u64,
}

/// Last `offset` slots of `x` followed by the first `n - offset` slots of
/// `y`: the window a receiver sees when it starts reading `offset` slots
/// before a word boundary.
pub fn splice(x: &[u8], y: &[u8], offset: usize) -> Result<Vec<u8>, SelfSyncError> {
    let n = x.len();
    if y.len() != n {
        return Err(SelfSyncError::MixedLength { word: 1, got: y.len(), expected: n });
    }
    if offset == 0 || offset >= n {
        return Err(SelfSyncError::BadSpliceOffset { offset, n });
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&x[n - offset..]);
    out.extend_from_slice(&y[..n - offset]);
    Ok(out)
}

/// Exhaustively certifies the comma-free index of a set of equal-length
/// binary words: the minimum Hamming distance between `splice(x, y, i)`
/// and `z` over all ordered pairs `(x, y)`, offsets `1 <= i <= n-1`, and
/// words `z`.
///
/// When `marker_coords` is given, the same minimum restricted to those
/// coordinates is tracked as well. `work_limit` bounds the number of
/// distance evaluations (`M^3 (n-1)` when exhaustive); exceeding it fails
/// up front with [`SelfSyncError::WorkLimitExceeded`] rather than running
/// forever. Ties in the minima resolve to the first tuple in scan order
/// (`x`, then `y`, then `i`, then `z`), so the witness is deterministic.
pub fn certify_words(
    words: &[Vec<u8>],
    marker_coords: Option<&[u64]>,
    work_limit: u64,
) -> Result<CommaFreeCertificate, SelfSyncError> {
    if words.is_empty() {
        return Err(SelfSyncError::EmptyBook);
    }
    let n = words[0].len();
    if n < 2 {
        return Err(SelfSyncError::WordTooShort(n));
    }
    for (w, word) in words.iter().enumerate() {
        if word.len() != n {
            return Err(SelfSyncError::MixedLength { word: w, got: word.len(), expected: n });
        }
        if word.iter().any(|&s| s > 1) {
            return Err(SelfSyncError::NotBinary { word: w });
        }
    }
    if let Some(coords) = marker_coords {
        if let Some(&coord) = coords.iter().find(|&&c| c >= n as u64) {
            return Err(SelfSyncError::MarkerCoordOutOfRange { coord, n });
        }
    }
    let m = words.len() as u64;
    let estimated = m
        .checked_mul(m)
        .and_then(|mm| mm.checked_mul(m))
        .and_then(|mmm| mmm.checked_mul(n as u64 - 1))
        .unwrap_or(u64::MAX);
    if estimated > work_limit {
        return Err(SelfSyncError::WorkLimitExceeded { estimated, limit: work_limit });
    }
    if n <= 64 {
        Ok(certify_packed(words, marker_coords))
    } else {
        Ok(certify_general(words, marker_coords))
    }
}

/// Convenience wrapper: the full-coordinate comma-free index of a book,
/// certified under the default work limit.
pub fn comma_free_index(words: &[Vec<u8>]) -> Result<u64, SelfSyncError> {
    Ok(certify_words(words, None, DEFAULT_WORK_LIMIT)?.index)
}

/// Bit-packed certification for word lengths up to 64 slots.
fn certify_packed(words: &[Vec<u8>], marker_coords: Option<&[u64]>) -> CommaFreeCertificate {
    let n = words[0].len();
    let packed: Vec<u64> = words.iter().map(|w| pack(w)).collect();
    let mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let marker_mask = marker_coords.map(|coords| coords.iter().fold(0u64, |acc, &c| acc | 1 << c));
    let mut best = u64::MAX;
    let mut best_witness = SpliceWitness { x: 0, y: 0, offset: 1, z: 0 };
    let mut best_restricted = u64::MAX;
    let mut best_restricted_witness = best_witness;
    let mut evaluations = 0u64;
    'outer: for (x, &px) in packed.iter().enumerate() {
        for (y, &py) in packed.iter().enumerate() {
            for offset in 1..n {
                let spliced = ((px >> (n - offset)) | (py << offset)) & mask;
                for (z, &pz) in packed.iter().enumerate() {
                    let diff = spliced ^ pz;
                    evaluations += 1;
                    let d = diff.count_ones() as u64;
                    if d < best {
                        best = d;
                        best_witness = SpliceWitness { x, y, offset, z };
                    }
                    if let Some(mm) = marker_mask {
                        let dr = (diff & mm).count_ones() as u64;
                        if dr < best_restricted {
                            best_restricted = dr;
                            best_restricted_witness = SpliceWitness { x, y, offset, z };
                        }
                    }
                    if best == 0 && (marker_mask.is_none() || best_restricted == 0) {
                        break 'outer;
                    }
                }
            }
        }
    }
    CommaFreeCertificate {
        index: best,
        witness: best_witness,
        restricted_index: marker_mask.map(|_| best_restricted),
        restricted_witness: marker_mask.map(|_| best_restricted_witness),
        distance_evaluations: evaluations,
    }
}

/// Slice-based certification for word lengths above 64 slots.
fn certify_general(words: &[Vec<u8>], marker_coords: Option<&[u64]>) -> CommaFreeCertificate {
    let n = words[0].len();
    let mut is_marker = vec![false; n];
    if let Some(coords) = marker_coords {
        for &c in coords {
            is_marker[c as usize] = true;
        }
    }
    let tracking_restricted = marker_coords.is_some();
    let mut best = u64::MAX;
    let mut best_witness = SpliceWitness { x: 0, y: 0, offset: 1, z: 0 };
    let mut best_restricted = u64::MAX;
    let mut best_restricted_witness = best_witness;
    let mut evaluations = 0u64;
    let mut spliced = vec![0u8; n];
    'outer: for (x, wx) in words.iter().enumerate() {
        for (y, wy) in words.iter().enumerate() {
            for offset in 1..n {
                spliced[..offset].copy_from_slice(&wx[n - offset..]);
                spliced[offset..].copy_from_slice(&wy[..n - offset]);
                for (z, wz) in words.iter().enumerate() {
                    evaluations += 1;
                    let mut d = 0u64;
                    let mut dr = 0u64;
                    for i in 0..n {
                        if spliced[i] != wz[i] {
                            d += 1;
                            if is_marker[i] {
                                dr += 1;
                            }
                        }
                    }
                    if d < best {
                        best = d;
                        best_witness = SpliceWitness { x, y, offset, z };
                    }
                    if tracking_restricted && dr < best_restricted {
                        best_restricted = dr;
                        best_restricted_witness = SpliceWitness { x, y, offset, z };
                    }
                    if best == 0 && (!tracking_restricted || best_restricted == 0) {
                        break 'outer;
                    }
                }
            }
        }
    }
    CommaFreeCertificate {
        index: best,
        witness: best_witness,
        restricted_index: tracking_restricted.then_some(best_restricted),
        restricted_witness: tracking_restricted.then_some(best_restricted_witness),
        distance_evaluations: evaluations,
    }
}

fn pack(word: &[u8]) -> u64 {
    word.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &s)| acc | (u64::from(s) << i))
}

/// A payload alphabet embedded in marker-tagged intervals: the combined
/// self-synchronizing code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSyncCode {
    marker: Dss,
    payload: Codebook,
    free_positions: Vec<u64>,
    words: Vec<Vec<u8>>,
    marker_index: u64,
    certificate: Option<CommaFreeCertificate>,
}

/// Embeds every payload word into an `n`-slot interval: 0s on the
/// marker's `D_0`, pulses on `D_1`, payload bits on the free coordinates
/// in ascending order. The payload word length must equal the marker's
/// free capacity `n - |D_0| - |D_1|`.
pub fn combine(marker: Dss, payload: Codebook) -> Result<SelfSyncCode, SelfSyncError> {
    let n = marker.n() as usize;
    let capacity = n - marker.redundancy() as usize;
    if payload.length() != capacity {
        return Err(SelfSyncError::CapacityMismatch { payload: payload.length(), capacity });
    }
    let mut free_positions = Vec::with_capacity(capacity);
    for p in 0..marker.n() {
        if marker.d0().binary_search(&p).is_err() && marker.d1().binary_search(&p).is_err() {
            free_positions.push(p);
        }
    }
    let mut words = Vec::with_capacity(payload.len());
    for payload_word in payload.words() {
        let mut word = vec![0u8; n];
        for &p in marker.d1() {
            word[p as usize] = 1;
        }
        for (bit, &p) in payload_word.iter().zip(&free_positions) {
            word[p as usize] = *bit;
        }
        words.push(word);
    }
    let marker_index = marker.verify().index;
    Ok(SelfSyncCode { marker, payload, free_positions, words, marker_index, certificate: None })
}

impl SelfSyncCode {
    /// Interval length in slots.
    pub fn n(&self) -> u64 {
        self.marker.n()
    }

    pub fn marker(&self) -> &Dss {
        &self.marker
    }

    pub fn payload(&self) -> &Codebook {
        &self.payload
    }

    /// Coordinates outside the marker, in ascending order.
    pub fn free_positions(&self) -> &[u64] {
        &self.free_positions
    }

    /// The full-length codewords, one per payload word, in payload order.
    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The marker's index: a guaranteed lower bound on the comma-free
    /// index even before certification.
    pub fn guaranteed_index(&self) -> u64 {
        self.marker_index
    }

    /// Marker coordinates `D_0 ∪ D_1`, ascending.
    pub fn marker_coords(&self) -> Vec<u64> {
        let mut coords: Vec<u64> =
            self.marker.d0().iter().chain(self.marker.d1()).copied().collect();
        coords.sort_unstable();
        coords
    }

    /// Runs the exhaustive certification (full and marker-restricted
    /// indices) and stores the certificate.
    pub fn certify(&mut self, work_limit: u64) -> Result<&CommaFreeCertificate, SelfSyncError> {
        let cert = certify_words(&self.words, Some(&self.marker_coords()), work_limit)?;
        self.certificate = Some(cert);
        Ok(self.certificate.as_ref().unwrap())
    }

    pub fn certificate(&self) -> Option<&CommaFreeCertificate> {
        self.certificate.as_ref()
    }

    /// Certified comma-free index, when certification has run.
    pub fn certified_index(&self) -> Option<u64> {
        self.certificate.as_ref().map(|c| c.index)
    }

    /// Certified index restricted to marker coordinates, when available.
    pub fn restricted_index(&self) -> Option<u64> {
        self.certificate.as_ref().and_then(|c| c.restricted_index)
    }

    /// Records a previously computed certificate (for example one loaded
    /// from a file) without re-running the enumeration.
    pub fn attach_certificate(&mut self, certificate: CommaFreeCertificate) {
        self.certificate = Some(certificate);
    }

    /// Number of slot errors per interval the hard-decision synchronizer
    /// is guaranteed to tolerate: `floor((index - 1) / 2)` of the
    /// certified index. Requires certification.
    pub fn hard_sync_tolerance(&self) -> Result<u64, SelfSyncError> {
        let index = self.certified_index().ok_or(SelfSyncError::NotCertified)?;
        Ok(index.saturating_sub(1) / 2)
    }
}

/// A two-tier layout: an outer marker over `Z_n'` whose free capacity
/// holds a whole number of inner symbol intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameLayout {
    symbol: SelfSyncCode,
    frame_marker: Option<Dss>,
    frames: u64,
}

/// Validates that the outer marker's free capacity is exactly `frames`
/// inner intervals. Passing no outer marker yields the degenerate
/// single-symbol layout, which requires `frames = 1`.
pub fn build_frame_layout(
    frame_marker: Option<Dss>,
    symbol: SelfSyncCode,
    frames: u64,
) -> Result<FrameLayout, SelfSyncError> {
    let symbol_length = symbol.n();
    let capacity = match &frame_marker {
        Some(outer) => outer.n() - outer.redundancy(),
        None => symbol_length,
    };
    if frames == 0 || capacity != frames * symbol_length {
        return Err(SelfSyncError::FrameMismatch { capacity, frames, symbol_length });
    }
    Ok(FrameLayout { symbol, frame_marker, frames })
}

impl FrameLayout {
    pub fn symbol(&self) -> &SelfSyncCode {
        &self.symbol
    }

    pub fn frame_marker(&self) -> Option<&Dss> {
        self.frame_marker.as_ref()
    }

    /// Symbols per frame.
    pub fn frames(&self) -> u64 {
        self.frames
    }

    /// Total frame length in slots: the outer modulus, or one symbol
    /// interval for the degenerate layout.
    pub fn frame_length(&self) -> u64 {
        self.frame_marker.as_ref().map_or(self.symbol.n(), |m| m.n())
    }
}
