//! Loop-free factorization through a prescribed right state.
//!
//! Given a planar diagram `d` whose right state `q'` lies **strictly below**
//! a planar state `q` in the containment order, [`tl_factorize`] writes
//! `d = left · right` with zero closed loops, where `right` has right state
//! exactly `q`. Since every basis diagram of the left ideal `J_{≤q}` outside
//! the block `J_q` is such a `d`, this proves constructively that the block
//! generates the ideal: `A · J_q = J_{≤q}`.
//!
//! The construction stretches `d` at its right edge and reroutes one strand:
//!
//! * The connections of `q'` that already belong to `q` stay in the right
//!   half; the connections **new** to `q'` (which necessarily pair up defect
//!   vertices of `q`) are pulled into a middle column, landing on its bottom
//!   `t` slots in the order of the `q`-defects they came from. The top
//!   `m = n - t` slots are fresh vertices.
//! * The fresh vertices are closed off in adjacent pairs on the left half
//!   (`{1,2}, {3,4}, …`) and in shifted adjacent pairs on the right half
//!   (`{2,3}, {4,5}, …`), which makes the topmost strand of the right half
//!   take a detour through all of them: a zig-zag that starts at middle slot
//!   `1` and exits at the first `q`-defect. No closed loop is created.
//!
//! The resulting right factor has left state with arcs `{2,3}, …, {m, m+1}`
//! and right state exactly `q`; the left factor keeps the left state of `d`.
//! Both factors are planar, and the function checks `concat(left, right)`
//! reproduces `d` with zero loops before returning.

use diagrams::{concat, BrauerDiagram, LinkState, Permutation};

use crate::order::{tl_order, OrderRel};
use crate::{Error, Result};

/// Factor a planar diagram `d` with right state strictly below `q` as
/// `d = left · right` (zero loops) where `right` has right state exactly `q`.
///
/// Errors when `d` is not planar, `q` is not planar, sizes differ, `q` has no
/// defects, or the right state of `d` is not strictly below `q`.
pub fn tl_factorize(d: &BrauerDiagram, q: &LinkState) -> Result<(BrauerDiagram, BrauerDiagram)> {
    let n = d.n();
    if q.n() != n {
        return Err(Error::Precondition(format!(
            "diagram has {n} strands but the target state has {}",
            q.n()
        )));
    }
    if !d.is_planar() {
        return Err(Error::Precondition(format!("diagram is not planar: {d}")));
    }
    if !q.is_planar() {
        return Err(Error::Precondition(format!(
            "target state is not planar: {q}"
        )));
    }
    let t = q.defect_count();
    if t == 0 {
        return Err(Error::Precondition(
            "target state has no defects; factorization needs at least one through-strand slot"
                .into(),
        ));
    }
    let (p, _sigma, q_prime) = d.decompose();
    if tl_order(&q_prime, q) != OrderRel::Lt {
        return Err(Error::Precondition(format!(
            "right state {q_prime} is not strictly below the target {q}"
        )));
    }

    // Middle column: slots 0..m are fresh vertices, slots m..n receive the
    // connections new to q', indexed by the ascending q-defects they use.
    let m = n - t;
    debug_assert!(m % 2 == 0, "vertex count and defect count must agree mod 2");
    let mut slot = vec![usize::MAX; n];
    for (j, d_j) in q.defects().into_iter().enumerate() {
        slot[d_j] = m + j;
    }

    // Left factor: left state of d, right state = adjacent pairs on the fresh
    // vertices plus the relocated new-to-q' connections.
    let mut ql_partner: Vec<usize> = (0..n).collect();
    for k in 0..m / 2 {
        ql_partner[2 * k] = 2 * k + 1;
        ql_partner[2 * k + 1] = 2 * k;
    }
    for (a, b) in q_prime.connections() {
        if q.is_defect(a) {
            debug_assert!(
                q.is_defect(b),
                "a connection new to the lower state must pair two defects of the target"
            );
            ql_partner[slot[a]] = slot[b];
            ql_partner[slot[b]] = slot[a];
        }
    }
    let q_left = LinkState::from_partner(ql_partner)
        .expect("relocated connections form an involution");
    let t_prime = q_prime.defect_count();
    let left = BrauerDiagram::assemble(&p, &Permutation::identity(t_prime), &q_left)?;

    // Right factor: shifted adjacent pairs on the left (the detour), right
    // state exactly q, order-preserving through-strands.
    let mut pr_partner: Vec<usize> = (0..n).collect();
    for k in 0..m / 2 {
        pr_partner[2 * k + 1] = 2 * k + 2;
        pr_partner[2 * k + 2] = 2 * k + 1;
    }
    let p_right =
        LinkState::from_partner(pr_partner).expect("shifted adjacent pairs form an involution");
    let right = BrauerDiagram::assemble(&p_right, &Permutation::identity(t), q)?;

    debug_assert!(left.is_planar(), "left factor must be planar: {left}");
    debug_assert!(right.is_planar(), "right factor must be planar: {right}");

    // The construction is only trusted after direct recomposition.
    let glued = concat(&left, &right);
    assert_eq!(
        glued.loops, 0,
        "factorization created {} closed loops for d={d}, q={q}",
        glued.loops
    );
    assert_eq!(
        &glued.diagram, d,
        "factorization recomposed to {} instead of {d}",
        glued.diagram
    );
    Ok((left, right))
}
