//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything downstream (structure-constant algebras, cellularity checks, idempotent
//! solving, Tor computations) reduces to row-reduction, kernels, and solving linear
//! systems with *exact* scalars — no floating point anywhere. This crate provides:
//!
//! * [`Field`] — the scalar interface, with two implementations:
//!   [`PrimeField`] (F_p for primes p < 2^31, Barrett-reduced u32 arithmetic) and
//!   [`Rationals`] (arbitrary-precision ℚ via `num-rational`).
//! * [`Matrix`] — dense row-major matrices with reduced row echelon form,
//!   kernel bases, and linear solving. Elimination is blocked so that the bulk of
//!   the work goes through [`Field::multi_axpy`], which prime fields override with
//!   a delayed-reduction accumulator.
//! * [`Echelon`] — an incremental, fully reduced echelon span tracker used for
//!   membership tests and greedy spanning-set selection.
//! * [`selftest`] — a seeded randomized consistency suite (rank-nullity, solve
//!   substitution, kernel membership, transpose rank symmetry, …) runnable over
//!   any field.
//!
//! Row sweeps run data-parallel when the `parallel` feature (default) is enabled;
//! with `--no-default-features` the identical code compiles against sequential
//! stand-ins and produces bit-identical results.

pub mod echelon;
pub mod field;
pub mod matrix;
pub mod selftest;

pub use echelon::Echelon;
pub use field::{Field, PrimeField, Rationals};
pub use matrix::{Matrix, RrefResult};
