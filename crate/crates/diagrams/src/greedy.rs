//! Greedy construction of a partner state for a planar state with defects.
//!
//! Given a planar link state q with t ≥ 1 defects, build a planar state p such that
//! the overlay of q and p has no closed loops and exactly t components joining
//! defects of q to defects of p. Such a partner certifies that level-preserving
//! products through q exist with no δ factors attached.
//!
//! The construction keeps a set of *live* vertices (initially the defects of q) and
//! repeatedly serves the smallest live vertex i: among q's not-yet-used arcs, it may
//! connect i to an arc endpoint j with no live vertex strictly between i and j; the
//! nearest such endpoint wins (ties to the smaller index), p gains the arc {i, j},
//! and the other end of the consumed q-arc becomes live in i's place. When no
//! endpoint is reachable, i becomes a defect of p. Each consumed q-arc extends the
//! walk i—j—(other end), so the overlay components thread through q's arcs without
//! ever closing a cycle.

use crate::pairgraph::pair_graph;
use crate::state::LinkState;
use crate::DiagramError;
use std::collections::BTreeSet;

/// Build the canonical loop-free partner of a planar state with t ≥ 1 defects.
pub fn greedy_partner(q: &LinkState) -> Result<LinkState, DiagramError> {
    if !q.is_planar() {
        return Err(DiagramError::Unsupported("a planar state".into()));
    }
    let t = q.defect_count();
    if t == 0 {
        return Err(DiagramError::Unsupported("at least one defect".into()));
    }
    let n = q.n();

    let mut live: BTreeSet<usize> = q.defects().into_iter().collect();
    // Arcs of q still available for threading, addressable by either endpoint.
    let mut arc_alive: Vec<bool> = vec![false; n];
    for (a, b) in q.connections() {
        arc_alive[a] = true;
        arc_alive[b] = true;
    }

    let mut p_conns: Vec<(usize, usize)> = Vec::new();
    let mut p_defects: Vec<usize> = Vec::new();

    while let Some(&i) = live.iter().next() {
        // Endpoints of available arcs visible from i: no live vertex strictly between.
        let visible = |j: usize| -> bool {
            let (lo, hi) = (i.min(j), i.max(j));
            live.range(lo + 1..hi).next().is_none()
        };
        let mut best: Option<usize> = None;
        for j in 0..n {
            if j != i && arc_alive[j] && visible(j) {
                let better = match best {
                    None => true,
                    Some(b) => {
                        let (dj, db) = (j.abs_diff(i), b.abs_diff(i));
                        dj < db || (dj == db && j < b)
                    }
                };
                if better {
                    best = Some(j);
                }
            }
        }
        live.remove(&i);
        match best {
            None => p_defects.push(i),
            Some(j) => {
                let k = q.partner(j);
                p_conns.push((i.min(j), i.max(j)));
                arc_alive[j] = false;
                arc_alive[k] = false;
                live.insert(k);
            }
        }
    }

    let p = LinkState::from_connections(n, &p_conns)?;

    // The construction promises these; fail loudly rather than return a bad partner.
    if !p.is_planar() {
        return Err(DiagramError::InvalidPairing(format!(
            "greedy partner of {q} is not planar: {p}"
        )));
    }
    let g = pair_graph(q, &p);
    if g.loop_count != 0 || g.pair_set_size() != t {
        return Err(DiagramError::InvalidPairing(format!(
            "greedy partner of {q} has loops={} pair set {} (want 0, {t})",
            g.loop_count,
            g.pair_set_size()
        )));
    }
    Ok(p)
}
