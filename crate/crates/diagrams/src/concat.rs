//! Diagram concatenation: glue the right column of one diagram to the left column of
//! another, trace the resulting strands, and count the closed loops that form in the
//! middle. This is the geometric product underlying every structure-constant table.

use crate::diagram::BrauerDiagram;
use crate::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatResult {
    /// Closed loops formed in the middle layer (each contributes one factor of δ).
    pub loops: usize,
    /// The composite diagram.
    pub diagram: BrauerDiagram,
}

/// Concatenate `d1 · d2` (d1's right column glued to d2's left column).
pub fn concat(d1: &BrauerDiagram, d2: &BrauerDiagram) -> ConcatResult {
    try_concat(d1, d2).expect("diagrams of equal size")
}

/// Concatenation on three layers of n vertices: left boundary `0..n` (d1's left
/// column), middle `n..2n` (the glued columns), right boundary `2n..3n` (d2's right
/// column). In layered ids, d1's arcs connect `0..2n` exactly as stored, and d2's
/// arcs are its stored arcs shifted up by n. Every middle vertex carries one d1-arc
/// and one d2-arc, so strands alternate arc sets as they pass through the middle.
pub fn try_concat(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<ConcatResult, DiagramError> {
    let n = d1.n();
    if d2.n() != n {
        return Err(DiagramError::SizeMismatch(format!("{} vs {}", n, d2.n())));
    }

    // Step from layered vertex `v` along the given arc set.
    let step = |v: usize, via_d1: bool| -> usize {
        if via_d1 {
            debug_assert!(v < 2 * n);
            d1.partner(v)
        } else {
            debug_assert!((n..3 * n).contains(&v));
            d2.partner(v - n) + n
        }
    };

    let mut new_partner = vec![usize::MAX; 2 * n];
    let mut visited_mid = vec![false; n];
    // Output vertex id of a layered boundary vertex.
    let out_id = |v: usize| if v < n { v } else { v - n };

    for start in (0..n).chain(2 * n..3 * n) {
        if new_partner[out_id(start)] != usize::MAX {
            continue;
        }
        let mut cur = start;
        let mut via_d1 = start < n; // left boundary enters d1's arcs, right d2's
        loop {
            let next = step(cur, via_d1);
            if (n..2 * n).contains(&next) {
                visited_mid[next - n] = true;
                cur = next;
                via_d1 = !via_d1;
            } else {
                let (a, b) = (out_id(start), out_id(next));
                new_partner[a] = b;
                new_partner[b] = a;
                break;
            }
        }
    }

    // Anything in the middle not on a boundary strand lies on an alternating cycle.
    // Leaving an unvisited vertex via its d1-arc, the cycle must re-enter it via its
    // d2-arc, so the walk closes exactly when we return with via_d1 == true again.
    let mut loops = 0;
    for m in 0..n {
        if visited_mid[m] {
            continue;
        }
        visited_mid[m] = true;
        let mut cur = n + m;
        let mut via_d1 = true;
        loop {
            let next = step(cur, via_d1);
            debug_assert!((n..2 * n).contains(&next), "cycle left the middle layer");
            visited_mid[next - n] = true;
            via_d1 = !via_d1;
            cur = next;
            if cur == n + m && via_d1 {
                break;
            }
        }
        loops += 1;
    }

    let diagram = BrauerDiagram::from_partner(n, new_partner)?;
    Ok(ConcatResult { loops, diagram })
}
