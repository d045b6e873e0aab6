//! Coverage-hole tracking for coordinate-free dynamic sensor networks.
//!
//! Snapshots of a network's communication graph become Rips complexes
//! ([`complex`]); consecutive snapshots are joined through union complexes
//! and the first homology of the resulting zigzag is decomposed into
//! birth/death intervals ([`zigzag`]). Each interval carries a representative
//! cycle at every snapshot it is alive ([`repcycle`]), which the hop-distance
//! filtration ([`hopfilt`]) turns into a coarse size estimate. [`mobility`]
//! provides the simulators and geometric ground truth used for validation and
//! [`barcode`] the summary statistics and SVG output.
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod barcode;
pub mod complex;
mod error;
mod gf2;
pub mod hopfilt;
pub mod mobility;
pub mod repcycle;
pub mod zigzag;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
