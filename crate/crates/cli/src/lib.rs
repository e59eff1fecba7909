//! Library side of the `selmer-lab` binary: table builders, verification
//! suites, Monte Carlo runs and renderers.

pub mod mc;
pub mod report;
pub mod table;
pub mod tables;
pub mod verify;

pub use selmer_core::{DEFAULT_ENUMERATION_CAP, DEFAULT_PRIME_BOUND};

pub const DEFAULT_PRECISION: usize = 4;
pub const DEFAULT_MAX_DEGREE: usize = 20;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "SELMER_LAB_THREADS";

/// Exit code for a failed check.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit code for bad arguments.
pub const EXIT_USAGE: i32 = 2;
