//! Built-in catalog of benchmark modulation alphabets.
//!
//! Each entry fixes an alphabet size `M`, a slot count `Q`, a pulse count
//! `K`, and the minimum Hamming distance over the first `M` words of the
//! generated book. Orbit-based entries list their generating subsets of
//! `Z_Q`; the subset scheme enumerates all `C(Q, K)` supports; the
//! alternating scheme interleaves two orbits of different weights.

use super::{Codebook, OocError, OpticalOrthogonalCode};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Modulation scheme families used in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// One pulse per word, orthogonal alphabet.
    Ppm,
    /// All fixed-weight supports of the slot window.
    Mppm,
    /// Every cyclic shift of a single difference-set codeword.
    Eppm,
    /// Cyclic shifts of one or more correlation-bounded codewords.
    Geppm,
    /// Cyclic shifts of a codeword together with shifts of its
    /// complementary word.
    Aeppm,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Ppm => "PPM",
            Scheme::Mppm => "MPPM",
            Scheme::Eppm => "EPPM",
            Scheme::Geppm => "GEPPM",
            Scheme::Aeppm => "AEPPM",
        })
    }
}

impl FromStr for Scheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Self, UnknownScheme> {
        for scheme in [
            Scheme::Ppm,
            Scheme::Mppm,
            Scheme::Eppm,
            Scheme::Geppm,
            Scheme::Aeppm,
        ] {
            let name = match scheme {
                Scheme::Ppm => "ppm",
                Scheme::Mppm => "mppm",
                Scheme::Eppm => "eppm",
                Scheme::Geppm => "geppm",
                Scheme::Aeppm => "aeppm",
            };
            if s.eq_ignore_ascii_case(name) {
                return Ok(scheme);
            }
        }
        Err(UnknownScheme)
    }
}

/// Error from parsing a scheme name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownScheme;

impl fmt::Display for UnknownScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown scheme (expected ppm, mppm, eppm, geppm, or aeppm)")
    }
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    /// Cyclic orbits of the listed codewords, correlation bound `lambda`.
    Orbits {
        lambda: u64,
        codewords: &'static [&'static [u64]],
    },
    /// Every weight-`K` support of the `Q` slots, lexicographic.
    AllSupports,
    /// Two full orbits of different weights, first orbit first.
    TwoOrbits {
        first: &'static [u64],
        second: &'static [u64],
    },
}

/// One catalog row: a named alphabet with its book parameters.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub scheme: Scheme,
    /// Alphabet size `M`: the modulator uses the first `M` book words.
    pub symbols: u64,
    /// Word length `Q` in slots.
    pub length: u64,
    /// Pulses per word `K` (first orbit's weight for the alternating
    /// scheme).
    pub weight: u64,
    /// Minimum Hamming distance over the first `symbols` words.
    pub distance: u64,
    kind: Kind,
}

impl CatalogEntry {
    /// Correlation bound of the generating code, when the entry is built
    /// from a single correlation-bounded orbit family.
    pub fn lambda(&self) -> Option<u64> {
        match self.kind {
            Kind::Orbits { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    /// Generating subsets of `Z_Q` for orbit-based entries.
    pub fn generators(&self) -> Vec<Vec<u64>> {
        match self.kind {
            Kind::Orbits { codewords, .. } => codewords.iter().map(|c| c.to_vec()).collect(),
            Kind::AllSupports => Vec::new(),
            Kind::TwoOrbits { first, second } => {
                let mut v = Vec::with_capacity(2);
                v.push(first.to_vec());
                v.push(second.to_vec());
                v
            }
        }
    }

    /// The generating code as a validated optical orthogonal code, when
    /// the entry is an orbit family (the subset and alternating schemes
    /// have none).
    pub fn ooc(&self) -> Result<Option<OpticalOrthogonalCode>, OocError> {
        match self.kind {
            Kind::Orbits { lambda, codewords } => {
                let words = codewords.iter().map(|c| c.to_vec()).collect();
                OpticalOrthogonalCode::new(self.length, self.weight, lambda, words).map(Some)
            }
            _ => Ok(None),
        }
    }

    /// The full generated book as raw binary words (may exceed `symbols`
    /// words; the modulation alphabet is the first `symbols` of them).
    /// Works for every scheme, including the mixed-weight alternating one.
    pub fn raw_words(&self) -> Result<Vec<Vec<u8>>, OocError> {
        match self.kind {
            Kind::Orbits { lambda, codewords } => {
                let words = codewords.iter().map(|c| c.to_vec()).collect();
                let ooc = OpticalOrthogonalCode::new(self.length, self.weight, lambda, words)?;
                Ok(ooc.expand_orbits()?.words().to_vec())
            }
            Kind::AllSupports => {
                Ok(Codebook::mppm(self.length, self.weight)?.words().to_vec())
            }
            Kind::TwoOrbits { first, second } => {
                let mut words = Vec::with_capacity(2 * self.length as usize);
                for orbit in [first, second] {
                    for shift in 0..self.length {
                        words.push(super::expand_shift(self.length, orbit, shift));
                    }
                }
                Ok(words)
            }
        }
    }

    /// The full generated book as a constant-weight [`Codebook`]. Fails
    /// with a mixed-weight error for the alternating scheme, whose words
    /// do not share a weight; use [`CatalogEntry::raw_words`] there.
    pub fn modulation_book(&self) -> Result<Codebook, OocError> {
        Codebook::new(self.raw_words()?)
    }

    /// Minimum distance over the first `symbols` words, recomputed from
    /// scratch (the `distance` field holds the same value).
    pub fn computed_distance(&self) -> Result<u64, OocError> {
        let words = self.raw_words()?;
        super::min_hamming_distance(&words[..self.symbols as usize])
    }
}

static CATALOG: [CatalogEntry; 13] = [
    CatalogEntry {
        scheme: Scheme::Ppm,
        symbols: 8,
        length: 8,
        weight: 1,
        distance: 2,
        kind: Kind::Orbits { lambda: 0, codewords: &[&[0]] },
    },
    CatalogEntry {
        scheme: Scheme::Geppm,
        symbols: 8,
        length: 8,
        weight: 3,
        distance: 4,
        kind: Kind::Orbits { lambda: 1, codewords: &[&[0, 1, 3]] },
    },
    CatalogEntry {
        scheme: Scheme::Eppm,
        symbols: 8,
        length: 11,
        weight: 5,
        distance: 6,
        kind: Kind::Orbits { lambda: 2, codewords: &[&[0, 2, 3, 4, 8]] },
    },
    CatalogEntry {
        scheme: Scheme::Ppm,
        symbols: 16,
        length: 16,
        weight: 1,
        distance: 2,
        kind: Kind::Orbits { lambda: 0, codewords: &[&[0]] },
    },
    CatalogEntry {
        scheme: Scheme::Aeppm,
        symbols: 16,
        length: 11,
        weight: 5,
        distance: 5,
        kind: Kind::TwoOrbits { first: &[0, 2, 3, 4, 8], second: &[1, 5, 6, 7, 9, 10] },
    },
    CatalogEntry {
        scheme: Scheme::Geppm,
        symbols: 16,
        length: 16,
        weight: 4,
        distance: 6,
        kind: Kind::Orbits { lambda: 1, codewords: &[&[0, 1, 3, 7]] },
    },
    CatalogEntry {
        scheme: Scheme::Geppm,
        symbols: 16,
        length: 16,
        weight: 8,
        distance: 8,
        kind: Kind::Orbits { lambda: 4, codewords: &[&[0, 1, 2, 3, 4, 7, 9, 12]] },
    },
    CatalogEntry {
        scheme: Scheme::Eppm,
        symbols: 16,
        length: 19,
        weight: 9,
        distance: 10,
        kind: Kind::Orbits { lambda: 4, codewords: &[&[0, 3, 4, 5, 6, 8, 10, 15, 16]] },
    },
    CatalogEntry {
        scheme: Scheme::Ppm,
        symbols: 32,
        length: 32,
        weight: 1,
        distance: 2,
        kind: Kind::Orbits { lambda: 0, codewords: &[&[0]] },
    },
    CatalogEntry {
        scheme: Scheme::Mppm,
        symbols: 32,
        length: 7,
        weight: 3,
        distance: 2,
        kind: Kind::AllSupports,
    },
    CatalogEntry {
        scheme: Scheme::Geppm,
        symbols: 32,
        length: 16,
        weight: 3,
        distance: 4,
        kind: Kind::Orbits { lambda: 1, codewords: &[&[0, 1, 3], &[0, 4, 9]] },
    },
    CatalogEntry {
        scheme: Scheme::Geppm,
        symbols: 32,
        length: 37,
        weight: 10,
        distance: 14,
        kind: Kind::Orbits { lambda: 3, codewords: &[&[0, 1, 7, 9, 10, 12, 16, 26, 33, 34]] },
    },
    CatalogEntry {
        scheme: Scheme::Eppm,
        symbols: 32,
        length: 35,
        weight: 17,
        distance: 18,
        kind: Kind::Orbits {
            lambda: 8,
            codewords: &[&[0, 1, 3, 4, 7, 9, 11, 12, 13, 14, 16, 17, 21, 27, 28, 29, 33]],
        },
    },
];

/// All catalog rows, in table order.
pub fn entries() -> &'static [CatalogEntry] {
    &CATALOG
}

/// Catalog rows matching a scheme and alphabet size, in table order.
/// Some pairs have several rows (distinguished by weight).
pub fn find(scheme: Scheme, symbols: u64) -> Vec<&'static CatalogEntry> {
    CATALOG
        .iter()
        .filter(|e| e.scheme == scheme && e.symbols == symbols)
        .collect()
}

/// The unique catalog row with the given scheme, alphabet size, and
/// (optionally) weight. Without a weight filter, the first match wins.
pub fn find_one(scheme: Scheme, symbols: u64, weight: Option<u64>) -> Option<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.scheme == scheme && e.symbols == symbols && weight.is_none_or(|k| e.weight == k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn every_row_reproduces_its_distance() {
        for entry in entries() {
            let words = entry.raw_words().unwrap();
            assert!(
                words.len() >= entry.symbols as usize,
                "{} M={}: only {} words",
                entry.scheme,
                entry.symbols,
                words.len()
            );
            assert_eq!(
                entry.computed_distance().unwrap(),
                entry.distance,
                "{} M={} Q={} K={}",
                entry.scheme,
                entry.symbols,
                entry.length,
                entry.weight
            );
        }
    }

    #[test]
    fn orbit_rows_validate_as_codes() {
        for entry in entries() {
            if let Some(ooc) = entry.ooc().unwrap() {
                assert_eq!(ooc.v(), entry.length);
                assert_eq!(ooc.k(), entry.weight);
                assert_eq!(Some(ooc.lambda()), entry.lambda());
            }
        }
    }

    #[test]
    fn alternating_row_mixes_weights() {
        let entry = find_one(Scheme::Aeppm, 16, None).unwrap();
        assert!(matches!(
            entry.modulation_book(),
            Err(OocError::MixedWeight { .. })
        ));
        let words = entry.raw_words().unwrap();
        assert_eq!(words.len(), 22);
        let w0: u64 = words[0].iter().map(|&s| u64::from(s)).sum();
        let w11: u64 = words[11].iter().map(|&s| u64::from(s)).sum();
        assert_eq!((w0, w11), (5, 6));
    }

    #[test]
    fn subset_row_uses_all_supports() {
        let entry = find_one(Scheme::Mppm, 32, None).unwrap();
        let book = entry.modulation_book().unwrap();
        assert_eq!(book.len(), 35); // C(7, 3)
        assert_eq!(book.length(), 7);
    }

    #[test]
    fn lookup_by_scheme_and_size() {
        assert_eq!(find(Scheme::Geppm, 16).len(), 2);
        assert_eq!(find_one(Scheme::Geppm, 16, Some(8)).unwrap().distance, 8);
        assert_eq!(find_one(Scheme::Geppm, 16, Some(4)).unwrap().distance, 6);
        assert!(find_one(Scheme::Ppm, 64, None).is_none());
        assert_eq!(entries().len(), 13);
    }

    #[test]
    fn scheme_names_round_trip() {
        for scheme in [
            Scheme::Ppm,
            Scheme::Mppm,
            Scheme::Eppm,
            Scheme::Geppm,
            Scheme::Aeppm,
        ] {
            let shown = scheme.to_string();
            assert_eq!(shown.parse::<Scheme>().unwrap(), scheme);
        }
        assert_eq!("geppm".parse::<Scheme>().unwrap(), Scheme::Geppm);
        assert!("qam".parse::<Scheme>().is_err());
    }

    #[test]
    fn generators_exposed_for_orbit_rows() {
        let entry = find_one(Scheme::Geppm, 32, None).unwrap();
        assert_eq!(entry.generators(), vec![vec![0, 1, 3], vec![0, 4, 9]]);
        assert!(find_one(Scheme::Mppm, 32, None).unwrap().generators().is_empty());
    }
}
