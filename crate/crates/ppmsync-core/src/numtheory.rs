//! Primality, primitive roots, cyclotomy, and quadratic-form decompositions.
//!
//! Everything here is exact 64-bit integer arithmetic. Cyclotomic classes of
//! order `e` modulo a prime `p` (with `e | p - 1`) are the cosets
//! `C_i = { alpha^(i + t*e) : 0 <= t < (p-1)/e }` of the index-`e` power
//! subgroup, where `alpha` is the smallest primitive root of `p` — fixing the
//! smallest root makes every class listing reproducible. The cyclotomic
//! number `(i, j)_e` counts elements `x` of `C_i` with `x + 1` in `C_j`.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

/// Largest modulus accepted for order computations and class tables.
///
/// Keeps multiplicative-order searches and class materialization within
/// exact `u64`/`u128` arithmetic and sane memory bounds.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),
    #[error("class order {e} does not divide {p} - 1")]
    OrderMismatch { p: u64, e: u64 },
    #[error("class index {index} out of range: order-{e} cyclotomy has {e} classes")]
    ClassOutOfRange { index: u64, e: u64 },
    #[error("{n} has no representation x^2 + {c}y^2")]
    NoDecomposition { n: u64, c: u64 },
    #[error("{n} is not congruent to {residue} mod {modulus}")]
    WrongResidue { n: u64, residue: u64, modulus: u64 },
    #[error("{a} is not invertible mod {n}")]
    NotCoprime { a: u64, n: u64 },
}

/// Deterministic Miller–Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality exactly for every n < 3.3e24,
    // which covers the full u64 range.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `(a * b) mod m` without overflow.
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `(base ^ exp) mod m` by square-and-multiply.
pub fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = base % m;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mod_mul(result, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    result
}

/// Prime factors of `n` (without multiplicities), by trial division.
fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The smallest primitive root modulo the prime `p`.
///
/// Rejects composite `p` and moduli above [`MAX_MODULUS`].
pub fn primitive_root(p: u64) -> Result<u64, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    if p > MAX_MODULUS {
        return Err(NumTheoryError::ModulusTooLarge(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    'cand: for g in 2..p {
        for &q in &factors {
            if mod_pow(g, (p - 1) / q, p) == 1 {
                continue 'cand;
            }
        }
        return Ok(g);
    }
    unreachable!("every prime has a primitive root")
}

/// The cyclotomic classes of order `e` modulo a prime `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicTable {
    p: u64,
    e: u64,
    alpha: u64,
    /// `classes[i]` is `C_i`, sorted ascending.
    classes: Vec<Vec<u64>>,
}

impl CyclotomicTable {
    /// Builds all `e` classes modulo `p`.
    ///
    /// Requires `p` prime, `e >= 1`, and `e | p - 1`.
    pub fn new(p: u64, e: u64) -> Result<Self, NumTheoryError> {
        if !is_prime(p) {
            return Err(NumTheoryError::NotPrime(p));
        }
        if p > MAX_MODULUS {
            return Err(NumTheoryError::ModulusTooLarge(p));
        }
        if e == 0 || (p - 1) % e != 0 {
            return Err(NumTheoryError::OrderMismatch { p, e });
        }
        let alpha = primitive_root(p)?;
        let g = ((p - 1) / e) as usize;
        let mut classes = vec![Vec::with_capacity(g); e as usize];
        let mut x = 1u64;
        for k in 0..p - 1 {
            classes[(k % e) as usize].push(x);
            x = mod_mul(x, alpha, p);
        }
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(CyclotomicTable { p, e, alpha, classes })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// The smallest primitive root of `p`, used as the class generator.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// Class `C_i`, sorted ascending.
    pub fn class(&self, i: u64) -> Result<&[u64], NumTheoryError> {
        self.classes
            .get(i as usize)
            .map(|c| c.as_slice())
            .ok_or(NumTheoryError::ClassOutOfRange { index: i, e: self.e })
    }

    /// Whether `x` lies in class `C_i`.
    pub fn contains(&self, i: u64, x: u64) -> Result<bool, NumTheoryError> {
        Ok(self.class(i)?.binary_search(&x).is_ok())
    }

    /// The cyclotomic number `(i, j)_e = |(C_i + 1) ∩ C_j|`.
    pub fn cyclotomic_number(&self, i: u64, j: u64) -> Result<u64, NumTheoryError> {
        let ci = self.class(i)?;
        let cj = self.class(j)?;
        let count = ci
            .iter()
            .filter(|&&x| cj.binary_search(&((x + 1) % self.p)).is_ok())
            .count();
        Ok(count as u64)
    }
}

/// The cyclotomic number `(i, j)_e` modulo `p`, building the class table.
///
/// Prefer [`CyclotomicTable::cyclotomic_number`] when several numbers for
/// the same `(p, e)` are needed.
pub fn cyclotomic_number(p: u64, e: u64, i: u64, j: u64) -> Result<u64, NumTheoryError> {
    CyclotomicTable::new(p, e)?.cyclotomic_number(i, j)
}

/// Writes `n = x^2 + 4y^2` with `x ≡ 1 (mod 4)` and `y >= 0`.
///
/// Requires `n ≡ 1 (mod 4)`. The returned `x` may be negative; for prime `n`
/// the representation is unique up to the sign conventions applied here.
pub fn decompose_x2_4y2(n: u64) -> Result<(i64, u64), NumTheoryError> {
    if n % 4 != 1 {
        return Err(NumTheoryError::WrongResidue { n, residue: 1, modulus: 4 });
    }
    decompose(n, 4).ok_or(NumTheoryError::NoDecomposition { n, c: 4 })
}

/// Writes `n = x^2 + 3y^2` with `x ≡ 1 (mod 3)` and `y >= 0`.
///
/// Requires `n ≡ 1 (mod 6)`.
pub fn decompose_x2_3y2(n: u64) -> Result<(i64, u64), NumTheoryError> {
    if n % 6 != 1 {
        return Err(NumTheoryError::WrongResidue { n, residue: 1, modulus: 6 });
    }
    decompose(n, 3).ok_or(NumTheoryError::NoDecomposition { n, c: 3 })
}

/// Finds `n = x^2 + c*y^2` with `x ≡ 1 (mod c')` where `c' = 4 or 3`,
/// scanning `y` upward; returns the solution with smallest `y`.
fn decompose(n: u64, c: u64) -> Option<(i64, u64)> {
    let sign_modulus = if c == 4 { 4 } else { 3 };
    let mut y = 0u64;
    while c * y * y <= n {
        let rest = n - c * y * y;
        let x = rest.isqrt();
        if x * x == rest {
            let x = x as i64;
            // Exactly one of +x, -x is ≡ 1 mod c' because x is coprime to c'.
            let signed = if x.rem_euclid(sign_modulus) == 1 { x } else { -x };
            if signed.rem_euclid(sign_modulus) == 1 {
                return Some((signed, y));
            }
        }
        y += 1;
    }
    None
}

/// Whether `a` is a cube modulo the prime `n ≡ 1 (mod 3)`.
///
/// Uses the power criterion `a^((n-1)/3) ≡ 1 (mod n)`.
pub fn is_cubic_residue(a: u64, n: u64) -> Result<bool, NumTheoryError> {
    if !is_prime(n) {
        return Err(NumTheoryError::NotPrime(n));
    }
    if n % 3 != 1 {
        return Err(NumTheoryError::WrongResidue { n, residue: 1, modulus: 3 });
    }
    if a % n == 0 {
        return Err(NumTheoryError::NotCoprime { a, n });
    }
    Ok(mod_pow(a, (n - 1) / 3, n) == 1)
}
