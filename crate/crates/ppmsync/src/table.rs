//! Regeneration of the two reference tables from scratch, checked
//! bit-exactly against the golden CSVs shipped in `data/`.
//!
//! The first table lists the perfect regular difference systems produced
//! by the two cyclotomic families; the second lists the small modulation
//! books in the catalog. Every run re-derives every row by construction
//! plus exhaustive verification, so a passing regeneration is a machine
//! check of the whole construction stack.

use ppmsync_core::dss::construct_cyclotomic_pair;
use ppmsync_core::ooc::catalog;
use thiserror::Error;

use crate::format::{dss_csv_row, DSS_CSV_HEADER};

/// Golden copy of the cyclotomic difference-system table.
pub const TABLE1_GOLDEN: &str = include_str!("../data/table1.csv");

/// Golden copy of the small modulation book table.
pub const TABLE3_GOLDEN: &str = include_str!("../data/table3.csv");

/// The `(family, m)` parameters behind each row of the first table, in
/// row order: quartic rows use `n = 16 m^2 + 1`, sextic rows
/// `n = 108 m^2 + 1`.
pub const TABLE1_PARAMS: [(CyclotomicFamily, u64); 9] = [
    (CyclotomicFamily::Quartic, 1),
    (CyclotomicFamily::Quartic, 4),
    (CyclotomicFamily::Quartic, 5),
    (CyclotomicFamily::Quartic, 6),
    (CyclotomicFamily::Quartic, 9),
    (CyclotomicFamily::Quartic, 10),
    (CyclotomicFamily::Sextic, 1),
    (CyclotomicFamily::Sextic, 2),
    (CyclotomicFamily::Sextic, 6),
];

/// The two cyclotomic construction families with closed-form indexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclotomicFamily {
    /// Quarter-density sets over primes `n = 16 m^2 + 1`.
    Quartic,
    /// Sixth-density sets over primes `n = 108 m^2 + 1`.
    Sextic,
}

impl CyclotomicFamily {
    /// Modulus for scale parameter `m`.
    pub fn modulus(self, m: u64) -> u64 {
        match self {
            CyclotomicFamily::Quartic => 16 * m * m + 1,
            CyclotomicFamily::Sextic => 108 * m * m + 1,
        }
    }

    /// Half the number of cyclotomic classes the construction draws from.
    pub fn class_order(self) -> u64 {
        match self {
            CyclotomicFamily::Quartic => 2,
            CyclotomicFamily::Sextic => 3,
        }
    }
}

/// A regenerated table failing to match its golden copy, or a failed
/// re-derivation.
#[derive(Debug, Error)]
pub enum TableError {
    #[error("table {table} row {row}: regenerated `{got}`, golden `{expected}`")]
    RowMismatch { table: &'static str, row: usize, got: String, expected: String },
    #[error("table {table} row {row}: {reason}")]
    Derivation { table: &'static str, row: usize, reason: String },
}

fn check_against_golden(
    table: &'static str,
    golden: &str,
    regenerated: &str,
) -> Result<(), TableError> {
    for (row, (got, expected)) in regenerated.lines().zip(golden.lines()).enumerate() {
        if got != expected {
            return Err(TableError::RowMismatch {
                table,
                row,
                got: got.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    let got_rows = regenerated.lines().count();
    let golden_rows = golden.lines().count();
    if got_rows != golden_rows {
        return Err(TableError::RowMismatch {
            table,
            row: got_rows.min(golden_rows),
            got: format!("{got_rows} lines"),
            expected: format!("{golden_rows} lines"),
        });
    }
    Ok(())
}

/// Rebuilds every cyclotomic difference system of the first table,
/// verifies each by exhaustive census, and returns the CSV — after
/// checking it bit-exactly against [`TABLE1_GOLDEN`].
pub fn table1_csv() -> Result<String, TableError> {
    let mut out = String::from(DSS_CSV_HEADER);
    out.push('\n');
    for (row, &(family, m)) in TABLE1_PARAMS.iter().enumerate() {
        let n = family.modulus(m);
        let dss = construct_cyclotomic_pair(n, family.class_order()).map_err(|e| {
            TableError::Derivation { table: "table1", row: row + 1, reason: e.to_string() }
        })?;
        let report = dss.verify();
        out.push_str(&dss_csv_row(&dss, &report));
        out.push('\n');
    }
    check_against_golden("table1", TABLE1_GOLDEN, &out)?;
    Ok(out)
}

/// Rebuilds the modulation book table: every row's minimum distance is
/// re-derived by brute force over the expanded words, then the CSV is
/// checked bit-exactly against [`TABLE3_GOLDEN`].
pub fn table3_csv() -> Result<String, TableError> {
    let mut out = String::from("scheme,symbols,interval,pulses,distance\n");
    for (row, entry) in catalog::entries().iter().enumerate() {
        let distance = entry.computed_distance().map_err(|e| TableError::Derivation {
            table: "table3",
            row: row + 1,
            reason: e.to_string(),
        })?;
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            entry.scheme, entry.symbols, entry.length, entry.weight, distance
        ));
    }
    check_against_golden("table3", TABLE3_GOLDEN, &out)?;
    Ok(out)
}

/// Convenience wrapper mapping a user-facing table name to its
/// regenerator.
pub fn regenerate(which: &str) -> Result<String, TableRequestError> {
    match which {
        "table1" => Ok(table1_csv()?),
        "table3" => Ok(table3_csv()?),
        other => Err(TableRequestError::Unknown(other.to_string())),
    }
}

/// A bad table name or a failed regeneration.
#[derive(Debug, Error)]
pub enum TableRequestError {
    #[error("unknown table {0:?}; available: table1, table3")]
    Unknown(String),
    #[error(transparent)]
    Table(#[from] TableError),
}
