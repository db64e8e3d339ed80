//! Idempotent generators for the right-state blocks of a cell ideal, and
//! their lift from a minimal-level quotient to the full algebra.
//!
//! Throughout, fix a level `t` and a state index `q` at that level. The
//! *block* `J_q` is the span of the basis elements `C_{p,q}^σ` with right
//! state `q`. In an algebra whose **minimal** level is `t` (take
//! [`StructureAlgebra::minimal_level_quotient`]), the block is a left ideal,
//! and `e ∈ J_q` generates it exactly when `y·e = y` for every basis element
//! `y` of the block — that right-unit property is what every function here
//! certifies by direct multiplication before returning.
//!
//! Three constructions are provided:
//!
//! * [`solve_idempotent`] — sets up the exact linear system expressing
//!   "`y·e = y` for all `y` in the block" in terms of the bilinear pairing
//!   table and solves it. Over a field, an inconsistent system is a proof
//!   that no generating idempotent exists, reported as `Ok(None)`.
//! * [`ez_idempotent`] — the one-term shortcut: when some state `p` pairs
//!   with `q` to `δ^i` times a single group element `σ₀` (an invertible
//!   pairing witness), the element `δ^{-i}·C_{p,q}^{σ₀^{-1}}` is already a
//!   generating idempotent.
//! * [`lift_idempotent`] — promotes a generating idempotent of the block in
//!   the quotient to an honest idempotent of the full algebra generating the
//!   left ideal `J_{≤q}`, by dropping the coefficients whose left columns die
//!   under right multiplication into the level.
//!
//! [`StructureAlgebra::minimal_level_quotient`]: algebra_core::StructureAlgebra::minimal_level_quotient

use std::collections::HashMap;

use algebra_core::{AlgebraElement, LevelData, StructureAlgebra};
use cellular_verify::gram_table;
use diagrams::{pair_graph, LinkStateOrder, Permutation};
use exact_linalg::{Field, Matrix};
use par_shim::prelude::*;

use crate::{Error, Result};

/// Index of the identity inside a listed group.
fn identity_index(perms: &[Permutation]) -> usize {
    perms
        .iter()
        .position(|s| s.is_identity())
        .expect("a listed wiring group always contains the identity")
}

/// Lookup table from permutation images to their index in the listed group.
fn perm_positions(perms: &[Permutation]) -> HashMap<Vec<usize>, usize> {
    perms
        .iter()
        .enumerate()
        .map(|(k, s)| (s.images().to_vec(), k))
        .collect()
}

/// `t` must be the minimal level of `alg` (so the block `J_q` is a left
/// ideal); `q` must index a state at that level. Returns the level data.
fn require_minimal_level<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
) -> Result<&LevelData> {
    match alg.level_values().first() {
        Some(&min) if min == t => {}
        Some(&min) => {
            return Err(Error::Precondition(format!(
                "level {t} is not minimal in the working algebra (minimal level is {min}); \
                 pass the quotient with all lower levels removed"
            )))
        }
        None => return Err(Error::Precondition("algebra has no levels".into())),
    }
    let ld = alg.level_data(t)?;
    if q >= ld.states.len() {
        return Err(Error::Precondition(format!(
            "state index {q} out of range: level {t} has {} states",
            ld.states.len()
        )));
    }
    Ok(ld)
}

/// Certify that `e` is a generating idempotent of the block `J_q` at the
/// minimal level `t`: `e` is supported in the block, `e·e = e`, and
/// `y·e = y` for every basis element `y` of the block.
///
/// Because the block is a left ideal at a minimal level, the right-unit
/// property on a basis of the block is equivalent to `A·e = J_q`.
fn verify_block_generator<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
    e: &AlgebraElement<F>,
) -> Result<()> {
    for (i, _) in e.terms() {
        let label = alg.basis_label(i);
        if label.level != t || label.q != q {
            return Err(Error::Verification(format!(
                "candidate has support outside the block: {} lies at level {} with right state {}",
                alg.label_string(i),
                label.level,
                label.q
            )));
        }
    }
    let square = alg.multiply(e, e);
    if &square != e {
        return Err(Error::Verification(format!(
            "candidate is not idempotent: e = {}, e·e = {}",
            alg.render_elem(e),
            alg.render_elem(&square)
        )));
    }
    for y in alg.ideal_j(t, q)? {
        let basis = alg.basis_elem(y);
        if alg.multiply(&basis, e) != basis {
            return Err(Error::Verification(format!(
                "candidate is not a right unit on the block: {}·e ≠ {}",
                alg.label_string(y),
                alg.label_string(y)
            )));
        }
    }
    Ok(())
}

/// Find a generating idempotent of the block `J_q` at the minimal level `t`
/// of `alg`, or prove there is none.
///
/// Writing `e = Σ_{p',σ'} α_{p',σ'} C_{p',q}^{σ'}`, the right-unit property
/// `C_{p,q}^σ · e = C_{p,q}^σ` holds for all `(p, σ)` exactly when, for every
/// group element `τ`,
///
/// ```text
///   Σ_{p',σ'} α_{p',σ'} · ⟨C_q, C_{p'}⟩_{τ·σ'⁻¹}  =  [τ = 1],
/// ```
///
/// a linear system over the coefficient field with one equation per `τ` and
/// one unknown per `(p', σ')`. Any solution is a generating idempotent; an
/// inconsistent system proves no generating idempotent exists in the block,
/// reported as `Ok(None)`.
///
/// The returned element is re-verified by direct multiplication.
pub fn solve_idempotent<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
) -> Result<Option<AlgebraElement<F>>> {
    let ld = require_minimal_level(alg, t, q)?;
    let m = ld.states.len();
    let g = ld.perms.len();
    let field = alg.field().clone();
    let gram = gram_table(alg, t)?;
    let id = identity_index(&ld.perms);
    let positions = perm_positions(&ld.perms);

    let system = Matrix::from_fn(field.clone(), g, m * g, |tau, col| {
        let (p, sigma) = (col / g, col % g);
        let twist = ld.perms[tau].compose(&ld.perms[sigma].inverse());
        gram.value(q, p, positions[twist.images()])
    });
    let mut rhs = vec![field.zero(); g];
    rhs[id] = field.one();

    let alpha = match system.solve(&rhs) {
        Some(alpha) => alpha,
        None => return Ok(None),
    };

    let terms: Vec<(usize, F::Elem)> = alpha
        .into_iter()
        .enumerate()
        .filter(|(_, a)| !field.is_zero(a))
        .map(|(col, a)| {
            let (p, sigma) = (col / g, col % g);
            (ld.offset + (p * g + sigma) * m + q, a)
        })
        .collect();
    let e = alg.from_terms(&terms);
    verify_block_generator(alg, t, q, &e)?;
    Ok(Some(e))
}

/// Build a generating idempotent of the block `J_q` from an invertible
/// pairing witness, skipping the linear system.
///
/// The witness asserts `⟨C_q, C_p⟩ = δ^{power_i}·σ₀` for a single group
/// element `σ₀`: the overlay of states `q` and `p` must have `t` shared
/// defect paths (so products through the pair keep the level), exactly
/// `power_i` closed loops, and `δ^{power_i}` must be invertible. Then
///
/// ```text
///   e  =  δ^{-power_i} · C_{p,q}^{σ₀^{-1}}
/// ```
///
/// is a generating idempotent of the block. The witness is validated, `σ₀`
/// is read off the product table, and the result is re-verified by direct
/// multiplication.
pub fn ez_idempotent<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
    p: usize,
    power_i: usize,
) -> Result<AlgebraElement<F>> {
    let ld = require_minimal_level(alg, t, q)?;
    let m = ld.states.len();
    let g = ld.perms.len();
    if p >= m {
        return Err(Error::Precondition(format!(
            "state index {p} out of range: level {t} has {m} states"
        )));
    }
    let field = alg.field().clone();

    let overlay = pair_graph(&ld.states[q], &ld.states[p]);
    if overlay.pair_set_size() != t {
        return Err(Error::InvalidWitness(format!(
            "overlay of {} and {} has {} shared defect paths, need {t}: \
             products through this pair drop the level",
            ld.states[q],
            ld.states[p],
            overlay.pair_set_size()
        )));
    }
    if overlay.loop_count != power_i {
        return Err(Error::InvalidWitness(format!(
            "overlay of {} and {} closes {} loops, witness claims {power_i}",
            ld.states[q], ld.states[p], overlay.loop_count
        )));
    }
    let scale = match field.inv(&alg.delta_pow(power_i)) {
        Some(s) => s,
        None => {
            return Err(Error::InvalidWitness(format!(
                "pairing scalar δ^{power_i} = {} is not invertible",
                field.render(&alg.delta_pow(power_i))
            )))
        }
    };

    // Read the twist σ₀ off one product C_{p₁,q}^1 · C_{p,q₂}^1 (the frame
    // states p₁ = q₂ = 0 are irrelevant to the twist).
    let id = identity_index(&ld.perms);
    let i = ld.offset + (id) * m + q; // p₁ = 0
    let j = ld.offset + (p * g + id) * m; // q₂ = 0
    let (loops, target) = alg.prod_entry(i, j).ok_or_else(|| {
        Error::InvalidWitness("pairing product vanishes in the working quotient".into())
    })?;
    debug_assert_eq!(loops as usize, power_i, "table loops disagree with the overlay");
    let sigma0 = alg.basis_label(target).sigma;
    let inv_idx = perm_positions(&ld.perms)[ld.perms[sigma0].inverse().images()];

    let e = alg.from_terms(&[(ld.offset + (p * g + inv_idx) * m + q, scale)]);
    verify_block_generator(alg, t, q, &e)?;
    Ok(e)
}

/// State indices `p'` at level `t` whose overlay with `q` has `t` shared
/// defect paths — equivalently, right multiplication by any `C_{p',q}^{σ}`
/// keeps level-`t` elements at level `t` instead of pushing them below.
///
/// These are the columns the idempotent lift keeps; all other columns of the
/// block act as zero on the level once lower levels are quotiented away.
pub fn level_preserving_states<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
) -> Result<Vec<usize>> {
    let ld = alg.level_data(t)?;
    if q >= ld.states.len() {
        return Err(Error::Precondition(format!(
            "state index {q} out of range: level {t} has {} states",
            ld.states.len()
        )));
    }
    Ok((0..ld.states.len())
        .filter(|&p| pair_graph(&ld.states[q], &ld.states[p]).pair_set_size() == t)
        .collect())
}

/// Lift a generating idempotent of the block `J_q` in the minimal-level
/// quotient to an idempotent of the full algebra generating the left ideal
/// `J_{≤q}` of all basis elements whose right state is at or below `q`.
///
/// `eps` must be a generating idempotent of the level-`t` block of
/// `quotient`, where `quotient` is `full` with all levels below `t` removed
/// (same states, same groups at level `t`). The lift re-reads `eps` in the
/// full algebra and drops every coefficient `C_{p',q}^{σ'}` whose state `p'`
/// is not level-preserving for `q`: those columns act as zero in the
/// quotient, so removing them never disturbs the right-unit property, and
/// what remains squares to itself on the nose rather than only modulo lower
/// levels.
///
/// Everything is certified before returning: `eps` is re-verified in the
/// quotient (an injected non-idempotent is reported as a verification
/// failure), the lift is squared in the full algebra, and generation of
/// `J_{≤q}` is established by exact rank — the products `C_i · e` over all
/// basis elements `C_i` must stay inside `J_{≤q}` and span it.
pub fn lift_idempotent<F: Field>(
    full: &StructureAlgebra<F>,
    quotient: &StructureAlgebra<F>,
    t: usize,
    q: usize,
    eps: &AlgebraElement<F>,
    order: &dyn LinkStateOrder,
) -> Result<AlgebraElement<F>> {
    let quot_ld = require_minimal_level(quotient, t, q)?;
    let full_ld = full.level_data(t)?;
    if full.family() != quotient.family()
        || full.strand_count() != quotient.strand_count()
        || full.delta() != quotient.delta()
        || full_ld.states != quot_ld.states
        || full_ld.perms != quot_ld.perms
    {
        return Err(Error::Precondition(
            "quotient does not present the same level-t block as the full algebra".into(),
        ));
    }

    // The input idempotent is never trusted.
    verify_block_generator(quotient, t, q, eps)?;

    // Re-read eps in the full algebra, keeping only level-preserving columns.
    let m = full_ld.states.len();
    let g = full_ld.perms.len();
    let keep: Vec<bool> = {
        let surviving = level_preserving_states(full, t, q)?;
        let mut keep = vec![false; m];
        for p in surviving {
            keep[p] = true;
        }
        keep
    };
    let terms: Vec<(usize, F::Elem)> = eps
        .terms()
        .filter_map(|(i, c)| {
            let label = quotient.basis_label(i);
            keep[label.p]
                .then(|| (full_ld.offset + (label.p * g + label.sigma) * m + label.q, c.clone()))
        })
        .collect();
    let e = full.from_terms(&terms);

    let square = full.multiply(&e, &e);
    if square != e {
        return Err(Error::Verification(format!(
            "lift is not idempotent in the full algebra: e = {}, e·e = {}",
            full.render_elem(&e),
            full.render_elem(&square)
        )));
    }

    // Generation: the left ideal A·e must be exactly J_{≤q}.
    let ideal = full.ideal_j_leq(t, q, order)?;
    if ideal.len() == full.dim() && e == full.unit_elem() {
        // A·1 = A needs no rank computation.
        return Ok(e);
    }
    let field = full.field().clone();
    let mut col_of = vec![usize::MAX; full.dim()];
    for (col, &i) in ideal.iter().enumerate() {
        col_of[i] = col;
    }
    let rows: std::result::Result<Vec<Vec<F::Elem>>, String> = (0..full.dim())
        .into_par_iter()
        .map(|i| {
            let prod = full.multiply(&full.basis_elem(i), &e);
            let mut row = vec![field.zero(); ideal.len()];
            for (k, c) in prod.terms() {
                if col_of[k] == usize::MAX {
                    return Err(format!(
                        "{}·e has support outside J_{{≤q}} at {}",
                        full.label_string(i),
                        full.label_string(k)
                    ));
                }
                row[col_of[k]] = c.clone();
            }
            Ok(row)
        })
        .collect();
    let rows = rows.map_err(Error::Verification)?;
    let rank = Matrix::from_rows(field, rows).rank();
    if rank != ideal.len() {
        return Err(Error::Verification(format!(
            "left ideal generated by the lift has rank {rank}, but J_{{≤q}} has dimension {}: \
             the supplied order is not left-generating at this state",
            ideal.len()
        )));
    }
    Ok(e)
}
