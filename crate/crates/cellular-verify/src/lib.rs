//! Verification layer for structure-constant diagram algebras.
//!
//! Everything in this crate treats a [`StructureAlgebra`] as untrusted input:
//! the checks below read its multiplication table and either certify or refute
//! structural properties of it. Nothing here assumes the table was built
//! correctly — a corrupted table produces a failing report with a certificate,
//! not a panic.
//!
//! The crate provides:
//!
//! * [`verify_naive_cellular`] — the three axioms of a cell datum presented by
//!   levels, states, and groups: labels biject onto the basis (W1), the star
//!   map sends `(λ, p, σ, q)` to `(λ, q, σ⁻¹, p)` and reverses products (W2),
//!   and left multiplication modulo lower levels acts on `(p, σ)` only, with
//!   coefficients independent of `q` and depending on `σ` only through a
//!   relative twist (W3).
//! * [`verify_diagram_like`] — the five locality conditions on the table of a
//!   diagram-like basis: level drop, the `(λ, κ)` pair depending only on the
//!   inner pair of states, and the target permutation / target state / level
//!   preservation each depending only on the documented slice of the label.
//! * [`extract_r`] / [`link_module_matrix`] — the left-action coefficients
//!   `r_a(p', σ', p)` at a fixed level and the matrix of the induced action on
//!   the link module spanned by states.
//! * [`s_function`] — the structure scalar `s(σ₁, q₁, p₂, τ)` that drives
//!   level-preserving products, with its transpose identity tested.
//! * [`bilinear_form`], [`gram_table`] — the trace-like pairing
//!   `⟨C_q, C_p⟩_τ` on link modules and its full exact table with CSV export.
//! * [`check_hypothesis_dagger`] — existence, for every state at a level, of a
//!   partner state whose pairing is an invertible scalar times a group
//!   element; reported with explicit witnesses.
//!
//! All reports are first-class values: they carry what was checked, how many
//! checks ran, and capped lists of human-readable violation certificates.

mod axioms;
mod form;
mod rcoeff;
mod report;

pub use axioms::{verify_diagram_like, verify_naive_cellular};
pub use form::{
    bilinear_form, check_hypothesis_dagger, gram_table, DaggerReport, DaggerWitness, GramTable,
};
pub use rcoeff::{extract_r, link_module_matrix, s_function, RCoefficients};
pub use report::VerifyReport;
