//! Command-line front end, output formats, symbolic emission, threaded
//! reductions and the generator benchmark for `partmeth-core`.

pub mod bench;
pub mod cache;
pub mod cli;
pub mod emit;
pub mod format;
pub mod output;
pub mod parallel;

pub use cli::run;
