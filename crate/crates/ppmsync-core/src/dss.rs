//! Difference systems of sets: verification, bounds, construction, search.
//!
//! A *difference system of sets* (DSS) here is a pair of disjoint subsets
//! `D_0, D_1` of `Z_n` whose **outer differences** — values `a - b (mod n)`
//! with `a` and `b` drawn from *different* sets — cover every nonzero residue
//! of `Z_n`. The *index* `rho` is the minimum coverage count over the `n - 1`
//! nonzero residues; a DSS is *perfect* when every count equals `rho` exactly
//! and *regular* when the two sets have equal size. The *redundancy*
//! `|D_0| + |D_1|` is the number of slot positions a marker built on the DSS
//! consumes, out of `n` per codeword.
//!
//! The index is always established by brute-force census ([`Dss::verify`]);
//! the closed-form predictions in [`construct`] are treated as claims to be
//! checked against it.

mod construct;
mod search;

pub use construct::{
    construct_cyclotomic_pair, construct_index1, construct_index2, predicted_index_4n1,
    predicted_index_6n1, predicted_index_cyclotomic, recursive_parameters, DssParams,
    ScaledFamily,
};
pub use search::{
    search_optimal_dss, search_optimal_dss_capped, SearchOutcome, DEFAULT_NODE_CAP, SEARCH_MAX_N,
};

use crate::ratio::Ratio;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DssError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("element {element} out of range for Z_{n}")]
    ElementOutOfRange { element: u64, n: u64 },
    #[error("element {0} repeated within a set")]
    DuplicateElement(u64),
    #[error("element {0} appears in both sets")]
    OverlappingSets(u64),
    #[error("both sets must be non-empty")]
    EmptySet,
    #[error("construction not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("predicted index {predicted} disagrees with census index {census} for n = {n}")]
    PredictionMismatch { n: u64, predicted: u64, census: u64 },
    #[error("search space too large: {nodes} nodes explored exceeds cap {cap}")]
    SearchSpaceExceeded { nodes: u64, cap: u64 },
    #[error("no difference system of index {rho} exists in Z_{n} at any redundancy")]
    Infeasible { n: u64, rho: u64 },
    #[error("modulus {n} too large for exhaustive search (max {max})")]
    SearchModulusTooLarge { n: u64, max: u64 },
    #[error(transparent)]
    NumTheory(#[from] crate::numtheory::NumTheoryError),
}

/// A two-set difference system over `Z_n`.
///
/// Construction validates that both sets are non-empty, disjoint, duplicate
/// free, and within range; elements are kept sorted. No index requirement is
/// imposed — a `Dss` value may have census index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dss {
    n: u64,
    d0: Vec<u64>,
    d1: Vec<u64>,
}

impl Dss {
    pub fn new(n: u64, mut d0: Vec<u64>, mut d1: Vec<u64>) -> Result<Self, DssError> {
        if n < 2 {
            return Err(DssError::ModulusTooSmall(n));
        }
        if d0.is_empty() || d1.is_empty() {
            return Err(DssError::EmptySet);
        }
        d0.sort_unstable();
        d1.sort_unstable();
        for set in [&d0, &d1] {
            for pair in set.windows(2) {
                if pair[0] == pair[1] {
                    return Err(DssError::DuplicateElement(pair[0]));
                }
            }
            if let Some(&last) = set.last() {
                if last >= n {
                    return Err(DssError::ElementOutOfRange { element: last, n });
                }
            }
        }
        if let Some(&x) = d0.iter().find(|x| d1.binary_search(x).is_ok()) {
            return Err(DssError::OverlappingSets(x));
        }
        Ok(Dss { n, d0, d1 })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The set whose positions carry 0s in a combined codeword, sorted.
    pub fn d0(&self) -> &[u64] {
        &self.d0
    }

    /// The set whose positions carry 1s in a combined codeword, sorted.
    pub fn d1(&self) -> &[u64] {
        &self.d1
    }

    /// `|D_0| + |D_1|`, the number of slots the marker occupies.
    pub fn redundancy(&self) -> u64 {
        (self.d0.len() + self.d1.len()) as u64
    }

    /// The same system with the roles of the two sets exchanged.
    ///
    /// Outer differences are direction-symmetric, so the census — and with
    /// it index, perfection, and regularity — is unchanged.
    pub fn swapped(&self) -> Dss {
        Dss {
            n: self.n,
            d0: self.d1.clone(),
            d1: self.d0.clone(),
        }
    }

    /// Counts, for each nonzero residue `d`, how many outer-difference pairs
    /// produce it: `census[d] = |{(a, b) : a - b ≡ d, a, b in different sets}|`.
    ///
    /// `census[0]` is always 0 (the sets are disjoint, so no outer pair
    /// differs by 0); the total over all residues is `2 * |D_0| * |D_1|`.
    pub fn outer_difference_census(&self) -> Vec<u64> {
        let n = self.n;
        let mut census = vec![0u64; n as usize];
        for &a in &self.d0 {
            for &b in &self.d1 {
                census[((a + n - b) % n) as usize] += 1;
                census[((b + n - a) % n) as usize] += 1;
            }
        }
        census
    }

    /// Measures the system: census index, perfection, regularity, redundancy
    /// rate, and how the redundancy compares with the square-root lower bound.
    pub fn verify(&self) -> DssReport {
        let census = self.outer_difference_census();
        let index = census[1..].iter().copied().min().unwrap_or(0);
        let perfect = census[1..].iter().all(|&c| c == index);
        let redundancy = self.redundancy();
        let bound_sq = 2 * index * (self.n - 1);
        let floor = levenshtein_bound(self.n, index);
        DssReport {
            index,
            perfect,
            regular: self.d0.len() == self.d1.len(),
            redundancy,
            redundancy_rate: Ratio::new(redundancy, self.n),
            levenshtein_floor: floor,
            // Exact equality r^2 = 2*rho*(n-1); attained only by perfect
            // regular systems, which the report lets callers confirm.
            meets_levenshtein: index > 0 && redundancy * redundancy == bound_sq,
            meets_levenshtein_floor: index > 0 && redundancy == floor,
        }
    }
}

/// The measured properties of a [`Dss`], as produced by [`Dss::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DssReport {
    /// Minimum outer-difference coverage over the nonzero residues.
    pub index: u64,
    /// Every nonzero residue is covered exactly `index` times.
    pub perfect: bool,
    /// The two sets have equal size.
    pub regular: bool,
    /// `|D_0| + |D_1|`.
    pub redundancy: u64,
    /// `(|D_0| + |D_1|) / n` in lowest terms.
    pub redundancy_rate: Ratio,
    /// `ceil(sqrt(2 * index * (n - 1)))`, the smallest redundancy any
    /// system of this index over `Z_n` can have.
    pub levenshtein_floor: u64,
    /// Redundancy equals `sqrt(2 * index * (n - 1))` **exactly** (no
    /// ceiling); possible only for perfect regular systems.
    pub meets_levenshtein: bool,
    /// Redundancy equals the ceiled bound `levenshtein_floor`.
    pub meets_levenshtein_floor: bool,
}

/// `ceil(sqrt(2 * rho * (n - 1)))` — the minimum redundancy of any two-set
/// difference system of index `rho` over `Z_n`, computed in exact integer
/// arithmetic.
pub fn levenshtein_bound(n: u64, rho: u64) -> u64 {
    assert!(n >= 2, "modulus must be at least 2");
    let target = 2u64.checked_mul(rho).and_then(|t| t.checked_mul(n - 1)).expect(
        "2 * rho * (n - 1) overflows u64",
    );
    let root = target.isqrt();
    if root * root == target {
        root
    } else {
        root + 1
    }
}
