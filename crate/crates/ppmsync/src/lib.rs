//! File formats, reference-table regeneration, and the command-line
//! surface for the self-synchronizing PPM toolkit. All mathematics lives
//! in [`ppmsync_core`]; this crate adds the IO layer around it.

#![deny(unsafe_code)]

pub mod cli;
pub mod format;
pub mod table;

pub use ppmsync_core;
