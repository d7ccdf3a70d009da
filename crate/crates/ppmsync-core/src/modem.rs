//! Slot-stream encoding, the AWGN channel, marker-based synchronization,
//! correlation demodulation, distance-shell analysis, union-bound symbol
//! error rates, and a reproducible Monte Carlo harness.
//!
//! The signal model is on-off keying of time slots with unit pulse
//! amplitude. The signal-to-noise ratio `gamma` is normalized per
//! information bit: per-slot noise variance is chosen as
//! `sigma^2 = Q / (4 gamma log2 M)` so that the pairwise error probability
//! between words at Hamming distance `d` is exactly
//! `(1/2) erfc(sqrt(gamma d log2(M) / (2Q)))`, the term summed by the
//! union bound. Bound and simulation therefore share a single `gamma`
//! axis.

use alloc::vec::Vec;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::dss::Dss;
use crate::ooc::{Codebook, OocError, OpticalOrthogonalCode};
use crate::selfsync::{SelfSyncCode, SelfSyncError};

/// Name of the RNG algorithm echoed in simulation reports.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Errors from channel simulation and the analytic bounds.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModemError {
    #[error("gamma must be positive and finite, got {0}")]
    BadGamma(f64),
    #[error("an alphabet needs at least 2 symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("alphabet size {requested} exceeds the {available} available words")]
    AlphabetTooLarge { requested: usize, available: usize },
    #[error("symbol {symbol} outside the {alphabet}-symbol alphabet")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },
    #[error("stream of {len} slots is shorter than the required {need}")]
    StreamTooShort { len: usize, need: usize },
    #[error("interval has {got} slots, expected {expected}")]
    IntervalLengthMismatch { got: usize, expected: usize },
    #[error("misalignment offset {offset} must be below the word length {word_len}")]
    BadOffset { offset: usize, word_len: usize },
    #[error("at least one trial required")]
    NoTrials,
    #[error("synchronized simulation needs at least {need} words per trial, got {given}")]
    TooFewWords { given: usize, need: usize },
    #[error("distance census needs correlation index at most 1, got {0}")]
    IndexAboveOne(u64),
    #[error("words {a} and {b} lie at distance {distance}, outside both shells")]
    ShellViolation { a: usize, b: usize, distance: u64 },
    #[error(
        "word {word} sees {near} near and {far} far neighbors, expected {expected_near}/{expected_far}"
    )]
    ShellCountMismatch { word: usize, near: u64, far: u64, expected_near: u64, expected_far: u64 },
    #[error(transparent)]
    Ooc(#[from] OocError),
    #[error(transparent)]
    SelfSync(#[from] SelfSyncError),
}

/// A run of slot amplitudes: 0/1 when clean, arbitrary reals after the
/// channel. Carries the word length and the ground-truth alignment for
/// simulation scoring (the synchronizers never see `true_offset`).
#[derive(Debug, Clone, PartialEq)]
pub struct SlotStream {
    slots: Vec<f64>,
    word_len: usize,
    true_offset: usize,
}

impl SlotStream {
    pub fn slots(&self) -> &[f64] {
        &self.slots
    }

    pub fn slots_mut(&mut self) -> &mut [f64] {
        &mut self.slots
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Position of the first complete interval, for scoring only.
    pub fn true_offset(&self) -> usize {
        self.true_offset
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Models a receiver that starts listening mid-word: drops the first
    /// `(word_len - offset) % word_len` slots, so the first complete
    /// interval begins at position `offset`.
    pub fn misalign(mut self, offset: usize) -> Result<SlotStream, ModemError> {
        if offset >= self.word_len {
            return Err(ModemError::BadOffset { offset, word_len: self.word_len });
        }
        let dropped = (self.word_len - offset) % self.word_len;
        self.slots.drain(..dropped);
        self.true_offset = offset;
        Ok(self)
    }
}

/// Concatenates the chosen codewords into a clean slot stream.
pub fn encode(symbols: &[usize], code: &SelfSyncCode) -> Result<SlotStream, ModemError> {
    encode_words(symbols, code.words(), code.n() as usize)
}

/// Concatenates book words into a clean slot stream.
pub fn encode_book(symbols: &[usize], book: &Codebook) -> Result<SlotStream, ModemError> {
    encode_words(symbols, book.words(), book.length())
}

fn encode_words(
    symbols: &[usize],
    words: &[Vec<u8>],
    word_len: usize,
) -> Result<SlotStream, ModemError> {
    let mut slots = Vec::with_capacity(symbols.len() * word_len);
    for &s in symbols {
        let word = words
            .get(s)
            .ok_or(ModemError::SymbolOutOfRange { symbol: s, alphabet: words.len() })?;
        slots.extend(word.iter().map(|&b| f64::from(b)));
    }
    Ok(SlotStream { slots, word_len, true_offset: 0 })
}

/// Per-slot noise standard deviation realizing SNR `gamma` for an
/// `alphabet_size`-ary book of `word_len` slots (see the module docs for
/// the normalization).
pub fn noise_sigma(gamma: f64, word_len: usize, alphabet_size: usize) -> Result<f64, ModemError> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(ModemError::BadGamma(gamma));
    }
    if alphabet_size < 2 {
        return Err(ModemError::AlphabetTooSmall(alphabet_size));
    }
    let bits = libm::log2(alphabet_size as f64);
    Ok(libm::sqrt(word_len as f64 / (4.0 * gamma * bits)))
}

/// Adds i.i.d. zero-mean Gaussian noise to every slot.
pub fn awgn<R: Rng + ?Sized>(slots: &mut [f64], sigma: f64, rng: &mut R) {
    let normal = Normal::new(0.0, sigma).expect("sigma is positive and finite");
    for slot in slots {
        *slot += normal.sample(rng);
    }
}

/// The deterministic per-trial generator: one base seed, one counter
/// stream per trial, so trials are independent and order-insensitive.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Hard-decision synchronizer: thresholds every slot at 1/2, then returns
/// the offset in `0..n` whose complete intervals show the fewest marker
/// mismatches per interval (0 expected on `D_0` coordinates, 1 on `D_1`).
/// Mismatch rates are compared exactly by cross-multiplication; ties
/// resolve to the smallest offset. Needs at least two intervals of slots.
pub fn hard_sync(slots: &[f64], marker: &Dss) -> Result<usize, ModemError> {
    let n = marker.n() as usize;
    if slots.len() < 2 * n {
        return Err(ModemError::StreamTooShort { len: slots.len(), need: 2 * n });
    }
    let bits: Vec<u8> = slots.iter().map(|&a| u8::from(a > 0.5)).collect();
    let mut best_offset = 0usize;
    let mut best_mismatches = u64::MAX;
    let mut best_intervals = 1u64;
    for offset in 0..n {
        let intervals = ((bits.len() - offset) / n) as u64;
        let mut mismatches = 0u64;
        for t in 0..intervals as usize {
            let base = offset + t * n;
            for &c in marker.d0() {
                mismatches += u64::from(bits[base + c as usize]);
            }
            for &c in marker.d1() {
                mismatches += u64::from(1 - bits[base + c as usize]);
            }
        }
        if offset == 0 || mismatches * best_intervals < best_mismatches * intervals {
            best_offset = offset;
            best_mismatches = mismatches;
            best_intervals = intervals;
        }
    }
    Ok(best_offset)
}

/// Soft-decision synchronizer: returns the offset maximizing the mean
/// marker correlation (sum of amplitudes on `D_1` minus sum on `D_0`) per
/// complete interval. Exact ties resolve to the smallest offset.
pub fn soft_sync(slots: &[f64], marker: &Dss) -> Result<usize, ModemError> {
    let n = marker.n() as usize;
    if slots.len() < 2 * n {
        return Err(ModemError::StreamTooShort { len: slots.len(), need: 2 * n });
    }
    let mut best_offset = 0usize;
    let mut best_score = f64::NEG_INFINITY;
    let mut best_intervals = 1.0f64;
    for offset in 0..n {
        let intervals = ((slots.len() - offset) / n) as f64;
        let mut score = 0.0f64;
        for t in 0..intervals as usize {
            let base = offset + t * n;
            for &c in marker.d1() {
                score += slots[base + c as usize];
            }
            for &c in marker.d0() {
                score -= slots[base + c as usize];
            }
        }
        if offset == 0 || score * best_intervals > best_score * intervals {
            best_offset = offset;
            best_score = score;
            best_intervals = intervals;
        }
    }
    Ok(best_offset)
}

/// Pulls the payload amplitudes (free positions) out of one aligned
/// interval.
pub fn extract_payload(interval: &[f64], code: &SelfSyncCode) -> Result<Vec<f64>, ModemError> {
    let n = code.n() as usize;
    if interval.len() != n {
        return Err(ModemError::IntervalLengthMismatch { got: interval.len(), expected: n });
    }
    Ok(code.free_positions().iter().map(|&p| interval[p as usize]).collect())
}

/// Correlation demodulator: the index of the book word maximizing the
/// inner product with the received amplitudes. Ties resolve to the
/// smallest index. For constant-weight books this is the
/// minimum-distance rule under hard decisions.
pub fn demodulate(interval: &[f64], book: &Codebook) -> Result<usize, ModemError> {
    if interval.len() != book.length() {
        return Err(ModemError::IntervalLengthMismatch {
            got: interval.len(),
            expected: book.length(),
        });
    }
    let mut best = 0usize;
    let mut best_score = f64::NEG_INFINITY;
    for (i, word) in book.words().iter().enumerate() {
        let score: f64 = word
            .iter()
            .zip(interval)
            .filter(|(&b, _)| b == 1)
            .map(|(_, &a)| a)
            .sum();
        if score > best_score {
            best = i;
            best_score = score;
        }
    }
    Ok(best)
}

/// Distance-shell census of an orbit-expanded book.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborCensus {
    /// Hamming distance of the near shell: `2(k - 1)`.
    pub near_distance: u64,
    /// Words at the near distance from each word: `k^2 |C| - k`.
    pub near_count: u64,
    /// Hamming distance of the far shell: `2k`.
    pub far_distance: u64,
    /// Words at the far distance from each word: `(v - k^2) |C| + k - 1`.
    pub far_count: u64,
}

/// Verifies by brute force that the expanded book of a correlation-1 (or
/// correlation-0) code has exactly two distance shells, `2(k-1)` and
/// `2k`, with per-word counts matching the closed forms
/// `n_d = k^2 |C| - k` and `f_d = (v - k^2) |C| + k - 1`.
pub fn neighbor_census(code: &OpticalOrthogonalCode) -> Result<NeighborCensus, ModemError> {
    if code.lambda() > 1 {
        return Err(ModemError::IndexAboveOne(code.lambda()));
    }
    let v = code.v();
    let k = code.k();
    let count = code.len() as u64;
    let expected_near = k * k * count - k;
    let expected_far = (v as i64 - (k * k) as i64) * count as i64 + k as i64 - 1;
    let expected_far = u64::try_from(expected_far)
        .map_err(|_| ModemError::ShellCountMismatch {
            word: 0,
            near: 0,
            far: 0,
            expected_near,
            expected_far: 0,
        })?;
    let near_distance = 2 * (k - 1);
    let far_distance = 2 * k;
    let book = code.expand_orbits()?;
    let words = book.words();
    for a in 0..words.len() {
        let mut near = 0u64;
        let mut far = 0u64;
        for b in 0..words.len() {
            if a == b {
                continue;
            }
            let d = words[a]
                .iter()
                .zip(&words[b])
                .filter(|(x, y)| x != y)
                .count() as u64;
            if d == near_distance {
                near += 1;
            } else if d == far_distance {
                far += 1;
            } else {
                return Err(ModemError::ShellViolation { a, b, distance: d });
            }
        }
        if near != expected_near || far != expected_far {
            return Err(ModemError::ShellCountMismatch {
                word: a,
                near,
                far,
                expected_near,
                expected_far,
            });
        }
    }
    Ok(NeighborCensus {
        near_distance,
        near_count: expected_near,
        far_distance,
        far_count: expected_far,
    })
}

/// Two-shell union bound on the symbol error rate of the full expanded
/// book of a `(v, k, 1)` code with `|C| = code_size` codewords, at SNR
/// `gamma`:
/// `(n_d / 2) erfc(sqrt(gamma (k-1) log2(M) / v)) +
///  (f_d / 2) erfc(sqrt(gamma k log2(M) / v))` with `M = v * code_size`,
/// clamped to `[0, 1]`.
pub fn ser_union_bound(
    v: u64,
    k: u64,
    code_size: u64,
    gamma: f64,
) -> Result<f64, ModemError> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(ModemError::BadGamma(gamma));
    }
    let m = v * code_size;
    if v < 2 || k == 0 || code_size == 0 || m < 2 {
        return Err(ModemError::AlphabetTooSmall(m as usize));
    }
    let bits = libm::log2(m as f64);
    let near_count = (k * k * code_size - k) as f64;
    let far_count = ((v as i64 - (k * k) as i64) * code_size as i64 + k as i64 - 1) as f64;
    let near_arg = gamma * (k - 1) as f64 * bits / v as f64;
    let far_arg = gamma * k as f64 * bits / v as f64;
    let bound = near_count / 2.0 * libm::erfc(libm::sqrt(near_arg))
        + far_count / 2.0 * libm::erfc(libm::sqrt(far_arg));
    Ok(bound.clamp(0.0, 1.0))
}

/// Union bound for an arbitrary equal-length book from its exact pairwise
/// distances: `(1 / 2M) sum over ordered pairs of
/// erfc(sqrt(gamma d log2(M) / (2Q)))`, clamped to `[0, 1]`.
pub fn ser_union_bound_book(words: &[Vec<u8>], gamma: f64) -> Result<f64, ModemError> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(ModemError::BadGamma(gamma));
    }
    let m = words.len();
    if m < 2 {
        return Err(ModemError::AlphabetTooSmall(m));
    }
    let q = words[0].len();
    for (w, word) in words.iter().enumerate() {
        if word.len() != q {
            return Err(OocError::MixedLength { word: w, got: word.len(), expected: q }.into());
        }
    }
    let bits = libm::log2(m as f64);
    let mut total = 0.0f64;
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let d = words[a]
                .iter()
                .zip(&words[b])
                .filter(|(x, y)| x != y)
                .count() as f64;
            total += libm::erfc(libm::sqrt(gamma * d * bits / (2.0 * q as f64)));
        }
    }
    Ok((total / (2.0 * m as f64)).clamp(0.0, 1.0))
}

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    ((center - half).clamp(0.0, 1.0), (center + half).clamp(0.0, 1.0))
}

/// AWGN channel configuration for a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    /// Linear (not dB) signal-to-noise ratio.
    pub gamma: f64,
    /// Base seed; trial `t` uses counter stream `t` of this seed.
    pub seed: u64,
    pub trials: u64,
}

/// Synchronization stage applied before demodulation in a stream
/// simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyncMode {
    /// Perfectly aligned reception, no synchronizer.
    Aligned,
    /// Random misalignment recovered by [`hard_sync`].
    Hard,
    /// Random misalignment recovered by [`soft_sync`].
    Soft,
}

/// Outcome of a Monte Carlo run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub trials: u64,
    /// Symbols whose decoding was scored.
    pub symbols_sent: u64,
    pub symbol_errors: u64,
    /// Point estimate `symbol_errors / symbols_sent`.
    pub ser: f64,
    /// 95% Wilson interval around `ser`.
    pub ser_lo: f64,
    pub ser_hi: f64,
    /// Trials whose synchronizer missed the true offset (`None` when no
    /// synchronizer ran).
    pub sync_errors: Option<u64>,
    pub sync_error_rate: Option<f64>,
    pub seed: u64,
    /// RNG algorithm used, for reproducibility.
    pub rng: &'static str,
}

fn report(
    trials: u64,
    symbols_sent: u64,
    symbol_errors: u64,
    sync_errors: Option<u64>,
    seed: u64,
) -> SimReport {
    let ser = if symbols_sent == 0 { 0.0 } else { symbol_errors as f64 / symbols_sent as f64 };
    let (ser_lo, ser_hi) = wilson_interval(symbol_errors, symbols_sent);
    SimReport {
        trials,
        symbols_sent,
        symbol_errors,
        ser,
        ser_lo,
        ser_hi,
        sync_errors,
        sync_error_rate: sync_errors.map(|e| e as f64 / trials as f64),
        seed,
        rng: RNG_ALGORITHM,
    }
}

/// Monte Carlo symbol error rate of a bare modulation book over AWGN:
/// each trial sends one uniformly random symbol from the first
/// `alphabet_size` words, perfectly aligned.
pub fn simulate_book(
    book: &Codebook,
    alphabet_size: usize,
    spec: &ChannelSpec,
) -> Result<SimReport, ModemError> {
    if spec.trials == 0 {
        return Err(ModemError::NoTrials);
    }
    if alphabet_size < 2 {
        return Err(ModemError::AlphabetTooSmall(alphabet_size));
    }
    if alphabet_size > book.len() {
        return Err(ModemError::AlphabetTooLarge {
            requested: alphabet_size,
            available: book.len(),
        });
    }
    let alphabet = book.truncated(alphabet_size)?;
    let sigma = noise_sigma(spec.gamma, alphabet.length(), alphabet_size)?;
    let mut errors = 0u64;
    for trial in 0..spec.trials {
        let mut rng = trial_rng(spec.seed, trial);
        let symbol = rng.random_range(0..alphabet_size);
        let mut slots: Vec<f64> =
            alphabet.word(symbol).iter().map(|&b| f64::from(b)).collect();
        awgn(&mut slots, sigma, &mut rng);
        if demodulate(&slots, &alphabet)? != symbol {
            errors += 1;
        }
    }
    Ok(report(spec.trials, spec.trials, errors, None, spec.seed))
}

/// Monte Carlo run of a full self-synchronizing link: each trial sends
/// `words_per_trial` uniformly random symbols from the first
/// `alphabet_size` payload words, misaligns the stream by a random offset
/// (except in aligned mode), runs the chosen synchronizer, and decodes
/// every complete interval.
///
/// Noise is calibrated to the payload alphabet (`Q` = payload length,
/// `M` = `alphabet_size`), so the `gamma` axis matches
/// [`ser_union_bound_book`] of the bare payload. A trial that
/// missynchronizes counts all its scored symbols as errors.
pub fn simulate_selfsync(
    code: &SelfSyncCode,
    alphabet_size: usize,
    words_per_trial: usize,
    mode: SyncMode,
    spec: &ChannelSpec,
) -> Result<SimReport, ModemError> {
    if spec.trials == 0 {
        return Err(ModemError::NoTrials);
    }
    if alphabet_size < 2 {
        return Err(ModemError::AlphabetTooSmall(alphabet_size));
    }
    if alphabet_size > code.len() {
        return Err(ModemError::AlphabetTooLarge {
            requested: alphabet_size,
            available: code.len(),
        });
    }
    let min_words = if mode == SyncMode::Aligned { 1 } else { 2 };
    if words_per_trial < min_words {
        return Err(ModemError::TooFewWords { given: words_per_trial, need: min_words });
    }
    let payload_alphabet = code.payload().truncated(alphabet_size)?;
    let sigma = noise_sigma(spec.gamma, payload_alphabet.length(), alphabet_size)?;
    let n = code.n() as usize;
    let mut symbols_sent = 0u64;
    let mut symbol_errors = 0u64;
    let mut sync_errors = 0u64;
    for trial in 0..spec.trials {
        let mut rng = trial_rng(spec.seed, trial);
        let message: Vec<usize> =
            (0..words_per_trial).map(|_| rng.random_range(0..alphabet_size)).collect();
        let stream = encode(&message, code)?;
        let (stream, true_offset) = if mode == SyncMode::Aligned {
            (stream, 0usize)
        } else {
            let offset = rng.random_range(0..n);
            (stream.misalign(offset)?, offset)
        };
        let mut slots = stream.slots().to_vec();
        awgn(&mut slots, sigma, &mut rng);
        let estimated = match mode {
            SyncMode::Aligned => 0,
            SyncMode::Hard => hard_sync(&slots, code.marker())?,
            SyncMode::Soft => soft_sync(&slots, code.marker())?,
        };
        let synced = estimated == true_offset;
        if !synced {
            sync_errors += 1;
        }
        // Complete intervals start at true_offset; the first message word
        // is partially lost whenever the misalignment dropped slots.
        let first_word = usize::from(true_offset != 0);
        let intervals = (slots.len() - true_offset) / n;
        for t in 0..intervals {
            let sent = message[first_word + t];
            symbols_sent += 1;
            if !synced {
                symbol_errors += 1;
                continue;
            }
            let base = true_offset + t * n;
            let amplitudes = extract_payload(&slots[base..base + n], code)?;
            if demodulate(&amplitudes, &payload_alphabet)? != sent {
                symbol_errors += 1;
            }
        }
    }
    Ok(report(
        spec.trials,
        symbols_sent,
        symbol_errors,
        (mode != SyncMode::Aligned).then_some(sync_errors),
        spec.seed,
    ))
}
