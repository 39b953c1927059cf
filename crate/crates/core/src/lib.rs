//! Integer partitions in multiplicity form, the partition operator, and the
//! partition method for power series expansion, over exact coefficient rings.
//!
//! The crate is `no_std` (it needs `alloc`). IO, caching, threads and the
//! command-line front end live in the `partmeth` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod classes;
pub mod error;
pub mod genfuncs;
pub mod operator;
pub mod partitions;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
