//! Direct and cyclotomic constructions of difference systems, with
//! closed-form index predictions checked against the census.

use super::{Dss, DssError};
use crate::numtheory::{
    decompose_x2_3y2, decompose_x2_4y2, is_cubic_residue, is_prime, CyclotomicTable,
};
use alloc::vec;
use alloc::vec::Vec;

/// Builds an index-1 system over `Z_n` for any `n >= 2`, with redundancy
/// within a small constant of the square-root lower bound.
///
/// With `t1` the smallest integer satisfying `2*t1^2 >= n - 1` and
/// `t0 = ceil((n-1) / (2*t1))`, the sets are `D_1 = {1, ..., t0}` and
/// `D_0 = {i*t0 + 1 : 1 <= i <= t1}` reduced mod `n`. The census of the
/// result is re-verified before returning.
pub fn construct_index1(n: u64) -> Result<Dss, DssError> {
    if n < 2 {
        return Err(DssError::ModulusTooSmall(n));
    }
    let mut t1 = 1u64;
    while 2 * t1 * t1 < n - 1 {
        t1 += 1;
    }
    let t0 = (n - 1).div_ceil(2 * t1);
    let d1: Vec<u64> = (1..=t0).collect();
    let d0: Vec<u64> = (1..=t1).map(|i| (i * t0 + 1) % n).collect();
    checked(n, d0, d1, 1)
}

/// Builds an index-2 system over `Z_n` for any `n >= 2`.
///
/// With `t1 = ceil(sqrt(n - 1))` and `t0 = ceil((n-1) / t1)`, the sets are
/// `D_1 = {1, ..., t0}` and `D_0 = {t0 + 1} ∪ {n - i*t0 : 0 <= i <= t1 - 2}`
/// reduced mod `n`. The census of the result is re-verified before
/// returning.
pub fn construct_index2(n: u64) -> Result<Dss, DssError> {
    if n < 2 {
        return Err(DssError::ModulusTooSmall(n));
    }
    let mut t1 = (n - 1).isqrt();
    if t1 * t1 < n - 1 {
        t1 += 1;
    }
    let t0 = (n - 1).div_ceil(t1);
    let d1: Vec<u64> = (1..=t0).collect();
    let mut d0: Vec<u64> = Vec::with_capacity(t1 as usize);
    d0.push((t0 + 1) % n);
    for i in 0..t1.saturating_sub(1) {
        d0.push((n - i * t0) % n);
    }
    checked(n, d0, d1, 2)
}

/// Validates the constructed sets and confirms the claimed index by census.
fn checked(n: u64, d0: Vec<u64>, d1: Vec<u64>, claimed: u64) -> Result<Dss, DssError> {
    let dss = Dss::new(n, d0, d1).map_err(|e| match e {
        DssError::DuplicateElement(_) | DssError::OverlappingSets(_) => {
            DssError::NotApplicable("constructed sets collide after reduction mod n")
        }
        other => other,
    })?;
    let census = dss.verify().index;
    if census < claimed {
        return Err(DssError::PredictionMismatch { n, predicted: claimed, census });
    }
    Ok(dss)
}

/// Builds the cyclotomic pair `{C_0, C_e}` of the order-`2e` classes modulo
/// the prime `p`, a regular system with both sets of size `(p-1) / (2e)`.
///
/// Requires `p` prime with `2e | p - 1`. The index of the result is
/// whatever the census says; see [`predicted_index_cyclotomic`] for the
/// closed-form claim.
pub fn construct_cyclotomic_pair(p: u64, e: u64) -> Result<Dss, DssError> {
    let table = CyclotomicTable::new(p, 2 * e)?;
    let d0 = table.class(0)?.to_vec();
    let d1 = table.class(e)?.to_vec();
    Ok(Dss::new(p, d0, d1)?)
}

/// The index of the pair `{C_0, C_e}` of order-`2e` classes mod `p`,
/// computed from cyclotomic numbers:
/// `rho = min_i ( (i, e)_{2e} + (i + e, e)_{2e} )`.
pub fn predicted_index_cyclotomic(p: u64, e: u64) -> Result<u64, DssError> {
    let table = CyclotomicTable::new(p, 2 * e)?;
    let mut best = u64::MAX;
    for i in 0..2 * e {
        let a = table.cyclotomic_number(i, e)?;
        let b = table.cyclotomic_number((i + e) % (2 * e), e)?;
        best = best.min(a + b);
    }
    Ok(best)
}

/// Closed-form index of the quartic-class pair `{C_0, C_2}` (order-4
/// classes) modulo a prime `n ≡ 1 (mod 4)`.
///
/// Writes `n = x^2 + 4y^2` with `x ≡ 1 (mod 4)` and evaluates
///
/// * `n ≡ 1 (mod 8)`: `min((n - 3 + 2x) / 8, (n + 1 - 2x) / 8)`
/// * `n ≡ 5 (mod 8)`: `min((n - 3 - 2x) / 8, (n + 1 + 2x) / 8)`
///
/// The sign convention on `x` makes both numerators non-negative multiples
/// of 8 for every prime in the family.
pub fn predicted_index_4n1(n: u64) -> Result<u64, DssError> {
    if !is_prime(n) {
        return Err(crate::numtheory::NumTheoryError::NotPrime(n).into());
    }
    let (x, _) = decompose_x2_4y2(n)?;
    let n = n as i64;
    let (a, b) = if n % 8 == 1 {
        (n - 3 + 2 * x, n + 1 - 2 * x)
    } else {
        (n - 3 - 2 * x, n + 1 + 2 * x)
    };
    debug_assert!(a >= 0 && b >= 0 && a % 8 == 0 && b % 8 == 0);
    Ok(a.min(b) as u64 / 8)
}

/// Closed-form index of the sextic-class pair `{C_0, C_3}` (order-6
/// classes) modulo a prime `n ≡ 1 (mod 6)`, reconciled against the census.
///
/// Writes `n = x^2 + 3y^2` with `x ≡ 1 (mod 3)`. When 2 is a cube mod `n`
/// the index is `min((n - 5 + 4x) / 18, (n + 1 - 2x) / 18)`; otherwise it is
/// `min((n - 5 + 4x + 6y) / 18, (n + 1 - 2x - 12y) / 18, (n + 1 - 2x + 6y) / 18)`,
/// where the sign of `y` depends on which sextic class 2 falls into. Both
/// signs are evaluated (candidates with a negative or non-multiple-of-18
/// numerator are discarded) and the value is confirmed against the
/// brute-force census of the constructed pair.
pub fn predicted_index_6n1(n: u64) -> Result<u64, DssError> {
    if !is_prime(n) {
        return Err(crate::numtheory::NumTheoryError::NotPrime(n).into());
    }
    let (x, y) = decompose_x2_3y2(n)?;
    let two_is_cube = is_cubic_residue(2, n)?;
    let ni = n as i64;
    let mut candidates: Vec<u64> = Vec::with_capacity(2);
    for y in [y as i64, -(y as i64)] {
        let vals: Vec<i64> = if two_is_cube {
            vec![ni - 5 + 4 * x, ni + 1 - 2 * x]
        } else {
            vec![
                ni - 5 + 4 * x + 6 * y,
                ni + 1 - 2 * x - 12 * y,
                ni + 1 - 2 * x + 6 * y,
            ]
        };
        if vals.iter().all(|&v| v >= 0 && v % 18 == 0) {
            let rho = vals.iter().map(|&v| v as u64 / 18).min().unwrap();
            if !candidates.contains(&rho) {
                candidates.push(rho);
            }
        }
    }
    let census = construct_cyclotomic_pair(n, 3)?.verify().index;
    if candidates.contains(&census) {
        Ok(census)
    } else {
        let predicted = candidates.into_iter().min().unwrap_or(u64::MAX);
        Err(DssError::PredictionMismatch { n, predicted, census })
    }
}

/// Size and index parameters of a difference system, the input to
/// [`recursive_parameters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DssParams {
    pub n: u64,
    pub d0_size: u64,
    pub d1_size: u64,
    pub index: u64,
}

impl DssParams {
    /// Measures an existing system (census index).
    pub fn of(dss: &Dss) -> Self {
        DssParams {
            n: dss.n(),
            d0_size: dss.d0().len() as u64,
            d1_size: dss.d1().len() as u64,
            index: dss.verify().index,
        }
    }
}

/// Parameters of one scaled family produced by [`recursive_parameters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaledFamily {
    /// Modulus of the scaled system.
    pub n: u64,
    pub d0_size: u64,
    pub d1_size: u64,
    /// Guaranteed lower bound on the scaled system's index.
    pub index_bound: u64,
}

/// Parameter arithmetic of the doubling construction: from a system over
/// `Z_n` with `n = (q^(t+1) - 1) / (q - 1)` (`q` a prime power), two
/// families over `Z_n'` with `n' = (q^(2t+2) - 1) / (q - 1)` arise:
///
/// * sizes `q^(t+1) * |D_i|`, index at least
///   `min(rho * q^(t+1), 2(q-1) |D_0| |D_1|)`;
/// * sizes `q^(t+1) * |D_0|` and `q^(t+1) * |D_1| + n`, index at least
///   `min(rho * q^(t+1), 2(q-1) |D_0| |D_1| + 2 |D_0|)`.
///
/// Only the parameters are computed; no explicit sets are produced.
pub fn recursive_parameters(
    q: u64,
    t: u32,
    base: &DssParams,
) -> Result<[ScaledFamily; 2], DssError> {
    if !is_prime_power(q) {
        return Err(DssError::NotApplicable("q must be a prime power"));
    }
    if t == 0 {
        return Err(DssError::NotApplicable("t must be at least 1"));
    }
    let qt1 = q
        .checked_pow(t + 1)
        .ok_or(DssError::NotApplicable("q^(t+1) overflows u64"))?;
    let expected_n = (qt1 - 1) / (q - 1);
    if base.n != expected_n {
        return Err(DssError::NotApplicable(
            "base modulus does not equal (q^(t+1) - 1) / (q - 1)",
        ));
    }
    let n_scaled = qt1
        .checked_mul(qt1)
        .map(|sq| (sq - 1) / (q - 1))
        .ok_or(DssError::NotApplicable("scaled modulus overflows u64"))?;
    let cross = 2 * (q - 1) * base.d0_size * base.d1_size;
    let scaled_rho = base.index * qt1;
    Ok([
        ScaledFamily {
            n: n_scaled,
            d0_size: qt1 * base.d0_size,
            d1_size: qt1 * base.d1_size,
            index_bound: scaled_rho.min(cross),
        },
        ScaledFamily {
            n: n_scaled,
            d0_size: qt1 * base.d0_size,
            d1_size: qt1 * base.d1_size + base.n,
            index_bound: scaled_rho.min(cross + 2 * base.d0_size),
        },
    ])
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut q = q;
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            while q % d == 0 {
                q /= d;
            }
            return q == 1;
        }
        d += 1;
    }
    true // q itself prime
}
