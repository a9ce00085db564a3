//! Wall-clock abstraction for per-step solver timings.
//!
//! The core crate cannot read a clock (`no_std`), so solvers accept a
//! [`Stopwatch`] and call [`Stopwatch::lap_ms`] once per removal step.
//! The std companion crate supplies an `Instant`-backed implementation;
//! pure library callers get zeros via [`NullStopwatch`].

/// Source of per-step elapsed wall time.
pub trait Stopwatch {
    /// Milliseconds elapsed since the previous call (or since creation).
    fn lap_ms(&mut self) -> f64;
}

/// Stopwatch that always reports zero.
#[derive(Debug, Default, Clone, Copy)]
pub struct NullStopwatch;

impl Stopwatch for NullStopwatch {
    fn lap_ms(&mut self) -> f64 {
        0.0
    }
}
