//! Exhaustive search for minimum-redundancy difference systems.

use super::{Dss, DssError, DssReport};
use alloc::vec;
use alloc::vec::Vec;

/// Largest modulus accepted by [`search_optimal_dss`].
pub const SEARCH_MAX_N: u64 = 40;

/// Default cap on explored partial assignments before the search gives up.
pub const DEFAULT_NODE_CAP: u64 = 200_000_000;

/// A minimum-redundancy system found by exhaustive search, together with
/// its verification report and the work certificate.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub dss: Dss,
    pub report: DssReport,
    /// Partial assignments explored over the whole search, including the
    /// exhausted smaller redundancies.
    pub nodes: u64,
    /// Redundancy of the returned system. Every smaller redundancy was
    /// proved impossible, either by exhaustion or by the pair-counting
    /// bound `2 |D_0| |D_1| >= rho (n - 1)`.
    pub redundancy: u64,
}

/// Finds a system over `Z_n` of index at least `rho` with the smallest
/// possible redundancy `|D_0| + |D_1|`, using the default node cap.
///
/// Redundancies are tried in increasing order, so the result is optimal.
/// Within one redundancy the enumeration is canonical: translation
/// invariance pins `0` into `D_1`, and the swap symmetry of the census
/// allows assuming `|D_1| <= |D_0|`. Requires `2 <= n <=` [`SEARCH_MAX_N`]
/// and `rho >= 1`.
pub fn search_optimal_dss(n: u64, rho: u64) -> Result<SearchOutcome, DssError> {
    search_optimal_dss_capped(n, rho, DEFAULT_NODE_CAP)
}

/// Same as [`search_optimal_dss`] with an explicit cap on explored nodes.
/// Exceeding the cap aborts with [`DssError::SearchSpaceExceeded`] rather
/// than returning a possibly non-optimal system.
pub fn search_optimal_dss_capped(
    n: u64,
    rho: u64,
    node_cap: u64,
) -> Result<SearchOutcome, DssError> {
    if n < 2 {
        return Err(DssError::ModulusTooSmall(n));
    }
    if n > SEARCH_MAX_N {
        return Err(DssError::SearchModulusTooLarge { n, max: SEARCH_MAX_N });
    }
    if rho == 0 {
        return Err(DssError::NotApplicable("target index must be at least 1"));
    }
    let mut state = SearchState {
        n: n as usize,
        rho,
        nodes: 0,
        node_cap,
        census: vec![0u64; n as usize],
        d1: Vec::new(),
        d0: Vec::new(),
    };
    for redundancy in 2..=n {
        for a in 1..=redundancy / 2 {
            let b = redundancy - a;
            // Pair-counting bound: placing |D_0| |D_1| ordered pairs yields
            // 2ab differences, which must cover every nonzero residue rho
            // times over.
            if 2 * a * b < rho * (n - 1) {
                continue;
            }
            state.d1.clear();
            state.d1.push(0);
            if let Some(found) = state.enumerate_d1(1, a as usize, b as usize)? {
                let dss = Dss::new(n, found.0, found.1)?;
                let report = dss.verify();
                debug_assert!(report.index >= rho);
                return Ok(SearchOutcome { redundancy: dss.redundancy(), dss, report, nodes: state.nodes });
            }
        }
    }
    Err(DssError::Infeasible { n, rho })
}

type Found = (Vec<u64>, Vec<u64>);

struct SearchState {
    n: usize,
    rho: u64,
    nodes: u64,
    node_cap: u64,
    census: Vec<u64>,
    d1: Vec<u64>,
    d0: Vec<u64>,
}

impl SearchState {
    fn tick(&mut self) -> Result<(), DssError> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(DssError::SearchSpaceExceeded { nodes: self.nodes, cap: self.node_cap });
        }
        Ok(())
    }

    /// Extends `D_1` (which already contains 0) with ascending elements,
    /// then hands over to the `D_0` enumeration.
    fn enumerate_d1(&mut self, min: u64, a: usize, b: usize) -> Result<Option<Found>, DssError> {
        if self.d1.len() == a {
            self.census.iter_mut().for_each(|c| *c = 0);
            self.d0.clear();
            return self.enumerate_d0(1, b, self.initial_deficit());
        }
        let remaining = a - self.d1.len();
        for x in min..=(self.n as u64 - remaining as u64) {
            self.tick()?;
            self.d1.push(x);
            if let Some(found) = self.enumerate_d1(x + 1, a, b)? {
                return Ok(Some(found));
            }
            self.d1.pop();
        }
        Ok(None)
    }

    fn initial_deficit(&self) -> u64 {
        self.rho * (self.n as u64 - 1)
    }

    /// Extends `D_0` with ascending elements not in `D_1`, maintaining the
    /// outer-difference census and the remaining coverage deficit.
    fn enumerate_d0(&mut self, min: u64, b: usize, deficit: u64) -> Result<Option<Found>, DssError> {
        if self.d0.len() == b {
            return Ok(if deficit == 0 {
                Some((self.d0.clone(), self.d1.clone()))
            } else {
                None
            });
        }
        let slots_left = (b - self.d0.len()) as u64;
        // Each further D_0 element contributes 2 |D_1| differences.
        if deficit > 2 * self.d1.len() as u64 * slots_left {
            return Ok(None);
        }
        for x in min..self.n as u64 {
            if self.d1.binary_search(&x).is_ok() {
                continue;
            }
            self.tick()?;
            let mut new_deficit = deficit;
            for i in 0..self.d1.len() {
                let y = self.d1[i];
                for d in [
                    (x + self.n as u64 - y) % self.n as u64,
                    (y + self.n as u64 - x) % self.n as u64,
                ] {
                    let c = &mut self.census[d as usize];
                    if *c < self.rho {
                        new_deficit -= 1;
                    }
                    *c += 1;
                }
            }
            self.d0.push(x);
            if let Some(found) = self.enumerate_d0(x + 1, b, new_deficit)? {
                return Ok(Some(found));
            }
            self.d0.pop();
            for i in 0..self.d1.len() {
                let y = self.d1[i];
                for d in [
                    (x + self.n as u64 - y) % self.n as u64,
                    (y + self.n as u64 - x) % self.n as u64,
                ] {
                    self.census[d as usize] -= 1;
                }
            }
        }
        Ok(None)
    }
}
