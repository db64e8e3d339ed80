//! Structure-constant models of diagram algebras.
//!
//! A [`StructureAlgebra`] holds a basis of labelled diagrams, graded by the
//! number of through-strands ("level"), together with the complete product
//! table: the product of two basis elements is `δ^loops` times a single basis
//! element (or zero, in a quotient). Four families are supported:
//!
//! * [`Family::Brauer`] — all pairings, symmetric groups wiring the levels;
//! * [`Family::TemperleyLieb`] — planar pairings, trivial wiring groups;
//! * [`Family::Jones`] — annular pairings, cyclic wiring groups;
//! * [`Family::GroupCyclic`] — the group algebra of a cyclic group, realized
//!   as pure wiring diagrams.
//!
//! On top of the table the crate provides elements ([`AlgebraElement`]) with
//! multiplication, the star anti-involution, the augmentation onto the trivial
//! module, level ideals and their quotients, the per-state left ideals `J_q`
//! and `J_{≤q}`, and a JSON dump/load that revalidates against a rebuild.

mod algebra;
mod element;
mod family;

pub use algebra::{BasisLabel, LevelData, StructureAlgebra};
pub use element::AlgebraElement;
pub use family::Family;

use thiserror::Error;

/// Errors from algebra construction and manipulation.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("level set {0:?} is not a proper downward-closed subset of the levels")]
    BadLevelSet(Vec<usize>),
    #[error("no level {0} in this algebra")]
    NoSuchLevel(usize),
    #[error("no such basis index {0}")]
    NoSuchBasis(usize),
    #[error("serialized algebra is invalid: {0}")]
    Load(String),
}
