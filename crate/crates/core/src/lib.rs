//! Construction and verification of truncated universal entire maps with
//! certified slow growth.
//!
//! The crate has two layers. The construction layer (`exactalg`, `schedule`,
//! `growth`, `binomsolve`, `constructor`) works in exact arithmetic over the
//! Gaussian rationals and emits transcripts whose per-step certificates are
//! rational inequalities. The verification layer (`nevanlinna`) is numerical:
//! characteristic functions, zero counting and direction covers, with measured
//! tolerances reported alongside every value.

pub mod exactalg;
pub mod schedule;
pub mod growth;
pub mod binomsolve;
pub mod constructor;
pub mod transcript;
pub mod verify;
pub mod nevanlinna;
pub mod report;

pub use exactalg::{GaussRat, Rat};
