//! Combinatorics of partition diagrams on `n` strands.
//!
//! The objects here are the raw material for the structure-constant algebras built on
//! top of them:
//!
//! * [`LinkState`] — a partial matching on `{1,…,n}` whose unmatched vertices are
//!   *defects*; the classes of all / planar / annular states are enumerable and
//!   testable, and annular states support rotation.
//! * [`Permutation`] — finite permutations, with enumeration of the full symmetric
//!   group and of the cyclic-shift subgroup.
//! * [`BrauerDiagram`] — a perfect matching on `n` left and `n` right vertices; every
//!   diagram factors uniquely as (left state, defect permutation, right state) via
//!   [`BrauerDiagram::decompose`], and [`assemble`](BrauerDiagram::assemble) is the
//!   inverse.
//! * [`pair_graph`] — the overlay of two link states, with its cycle count and the
//!   set of components joining defects of both states.
//! * [`concat`] — diagram concatenation: closed loops are counted and the resulting
//!   diagram returned, exactly the data a structure-constant product needs.
//! * [`greedy_partner`] — for a planar state with defects, a canonical partner state
//!   whose overlay has no cycles and maximal defect matching.
//!
//! Vertices are 0-based internally; the text format (`n=4; [1 3][2 6']`) is 1-based
//! with right-hand vertices primed.

pub mod concat;
pub mod diagram;
pub mod greedy;
pub mod pairgraph;
pub mod perm;
pub mod state;

mod textutil;

pub use concat::{concat, ConcatResult};
pub use diagram::BrauerDiagram;
pub use greedy::greedy_partner;
pub use pairgraph::{pair_graph, PairGraph};
pub use perm::Permutation;
pub use state::{LinkState, LinkStateOrder, StateClass};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("operation requires {0}")]
    Unsupported(String),
}
