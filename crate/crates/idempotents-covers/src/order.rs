//! The containment order on planar link states and its meet.
//!
//! For planar states on the same number of vertices, `a ≤ b` holds exactly
//! when every connection of `b` is also a connection of `a`: going *down*
//! means joining more vertices. The bottom of the resulting poset is an
//! external element (`tl_meet` returns `None` for it), and two states have a
//! common lower bound precisely when their connections are pairwise equal or
//! disjoint — in that case the union of their connections is again planar and
//! is the greatest lower bound.
//!
//! Plugged into [`StructureAlgebra::ideal_j_leq`], the order carves out the
//! left ideals `J_{≤q}` spanned by all basis elements whose right state lies
//! at or below `q`.
//!
//! [`StructureAlgebra::ideal_j_leq`]: algebra_core::StructureAlgebra::ideal_j_leq

use algebra_core::Family;
use diagrams::{LinkState, LinkStateOrder};

/// Outcome of comparing two states in a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRel {
    Lt,
    Eq,
    Gt,
    Incomparable,
}

/// Whether every connection of `b` is also a connection of `a`.
fn contains_connections(a: &LinkState, b: &LinkState) -> bool {
    (0..b.n()).all(|v| b.is_defect(v) || a.partner(v) == b.partner(v))
}

fn check_inputs(a: &LinkState, b: &LinkState) {
    assert_eq!(a.n(), b.n(), "states live on different vertex counts");
    assert!(
        a.is_planar() && b.is_planar(),
        "the containment order is defined on planar states"
    );
}

/// Compare two planar states in the containment order: `a ≤ b` when every
/// connection of `b` is present in `a`.
///
/// Panics if the states have different sizes or are not planar.
pub fn tl_order(a: &LinkState, b: &LinkState) -> OrderRel {
    check_inputs(a, b);
    match (contains_connections(a, b), contains_connections(b, a)) {
        (true, true) => OrderRel::Eq,
        (true, false) => OrderRel::Lt,
        (false, true) => OrderRel::Gt,
        (false, false) => OrderRel::Incomparable,
    }
}

/// Greatest lower bound of two planar states in the containment order, or
/// `None` when their only common lower bound is the external bottom element.
///
/// A common lower bound must contain the connections of both states, so it
/// exists exactly when no vertex is covered by the two states with different
/// partners. In that case the union of the two connection sets is itself a
/// planar state (a crossing or a trapped defect in the union would force one
/// in an input state), and that union is the meet.
///
/// Panics if the states have different sizes or are not planar.
pub fn tl_meet(a: &LinkState, b: &LinkState) -> Option<LinkState> {
    check_inputs(a, b);
    let n = a.n();
    let mut partner = Vec::with_capacity(n);
    for v in 0..n {
        match (a.is_defect(v), b.is_defect(v)) {
            (false, false) if a.partner(v) != b.partner(v) => return None,
            (false, _) => partner.push(a.partner(v)),
            (true, false) => partner.push(b.partner(v)),
            (true, true) => partner.push(v),
        }
    }
    let union = LinkState::from_partner(partner)
        .expect("union of two compatible involutions is an involution");
    assert!(
        union.is_planar(),
        "union of compatible planar states must be planar: {union}"
    );
    Some(union)
}

/// A link-state partial order tagged with the diagram family it belongs to.
///
/// Carries the comparator and the meet, and implements
/// [`LinkStateOrder`] so it can be handed to
/// [`algebra_core::StructureAlgebra::ideal_j_leq`].
#[derive(Debug, Clone, Copy)]
pub struct LinkOrder {
    family: Family,
}

impl LinkOrder {
    /// The containment order used by the Temperley–Lieb family.
    pub fn temperley_lieb() -> Self {
        LinkOrder {
            family: Family::TemperleyLieb,
        }
    }

    /// The family whose ideal structure this order describes.
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn compare(&self, a: &LinkState, b: &LinkState) -> OrderRel {
        tl_order(a, b)
    }

    /// Meet of two states; `None` is the external bottom element.
    pub fn meet(&self, a: &LinkState, b: &LinkState) -> Option<LinkState> {
        tl_meet(a, b)
    }
}

impl LinkStateOrder for LinkOrder {
    fn leq(&self, a: &LinkState, b: &LinkState) -> bool {
        matches!(tl_order(a, b), OrderRel::Lt | OrderRel::Eq)
    }
}
