//! Idempotent generators for the one-sided ideals of a structure-constant
//! diagram algebra, and ideal covers built from them.
//!
//! The crate has four layers, each verified rather than trusted:
//!
//! * [`order`] — the containment order on planar link states (`q' ≤ q` when
//!   every connection of `q` is present in `q'`), with its meet. The order is
//!   what turns the per-state blocks `J_q` into a lattice of left ideals
//!   `J_{≤q}`.
//! * [`factorize`] — the stretch-and-detour factorization: any planar diagram
//!   whose right state lies strictly below `q` splits as a loop-free product
//!   of a diagram ending in a state below `q` and one ending **exactly** in
//!   `q`. This is the combinatorial engine behind "the block `J_q` generates
//!   `J_{≤q}` as a left ideal".
//! * [`idempotent`] — three ways to produce idempotent generators: solving
//!   the bilinear-pairing linear system at a minimal level
//!   ([`solve_idempotent`]), the one-term shortcut when a partner state pairs
//!   to an invertible scalar times a group element ([`ez_idempotent`]), and
//!   the lift of a quotient idempotent to the full algebra
//!   ([`lift_idempotent`]). Every returned element is checked by direct
//!   multiplication; generation claims are checked by exact rank.
//! * [`cover`] — for a Temperley–Lieb algebra, the ideals `K_1, …, K_{n-1}`
//!   spanned by diagrams whose right state joins `i` to `i+1`, together with
//!   the width/height bookkeeping of how far their intersections stay
//!   idempotent-generated.
//!
//! All arithmetic is exact; nothing in this crate samples or approximates.

pub mod cover;
pub mod factorize;
pub mod idempotent;
pub mod order;

pub use cover::{innermost, subset_state, tl_cover, Cover, SubsetStatus};
pub use factorize::tl_factorize;
pub use idempotent::{ez_idempotent, level_preserving_states, lift_idempotent, solve_idempotent};
pub use order::{tl_meet, tl_order, LinkOrder, OrderRel};

use algebra_core::AlgebraError;
use diagrams::DiagramError;

/// Errors reported by the operations in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// An input violated a documented precondition (wrong family, wrong
    /// quotient, state not strictly below `q`, …).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A shortcut witness `(q, p, i)` does not actually witness an invertible
    /// pairing.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    /// A constructed element failed its direct verification (idempotence,
    /// right-unit property, or ideal generation).
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
