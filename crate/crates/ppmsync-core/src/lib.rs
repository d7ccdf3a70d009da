//! Construction, verification, and simulation of self-synchronizing
//! pulse-position modulation codes.
//!
//! A transmitted frame carries a fixed marker pattern on a sparse set of slot
//! positions and payload pulses on the rest. When the marker positions form a
//! *difference system of sets* — a pair of disjoint residue sets whose outer
//! differences cover every nonzero residue at least `rho` times — any
//! misaligned window of the slot stream disagrees with every codeword in at
//! least `rho` marker slots, so symbol boundaries can be recovered without a
//! separate synchronization channel, even in the presence of pulse errors.
//!
//! The crate is organized along the pipeline:
//!
//! * [`numtheory`] — primality, primitive roots, cyclotomic classes and
//!   cyclotomic numbers, quadratic-form decompositions.
//! * [`dss`] — difference systems of sets: census-based verification,
//!   redundancy bounds, direct and cyclotomic constructions, parameter
//!   scaling, and exhaustive optimal search.
//! * [`ooc`] — optical orthogonal codes and constant-weight modulation
//!   codebooks, including the built-in catalog of reference schemes.
//! * [`selfsync`] — marker/payload combination and exhaustive comma-free
//!   index certification.
//! * [`modem`] — slot-level encoding, AWGN, synchronizers, correlation
//!   demodulation, union bounds, and deterministic Monte Carlo estimation.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the command
//! line interface live in the companion `ppmsync` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dss;
pub mod modem;
pub mod numtheory;
pub mod ooc;
mod ratio;
pub mod selfsync;

pub use ratio::Ratio;
