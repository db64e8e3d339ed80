//! The adjacent-arc ideal cover of a Temperley–Lieb algebra.
//!
//! For `TL_n`, let `K_i` (`1 ≤ i ≤ n-1`) be the left ideal spanned by the
//! basis diagrams whose right state joins `i` to `i+1`. Together the `K_i`
//! cover the two-sided ideal of diagrams with fewer than `n` through-strands,
//! and their intersections are completely understood:
//!
//! * `⋂_{i∈S} K_i` is nonzero exactly when `S` is **innermost** — contains no
//!   two consecutive positions (two overlapping arc constraints `{i,i+1}`,
//!   `{i+1,i+2}` cannot hold in one state).
//! * For innermost `S`, the intersection equals the left ideal `J_{≤q(S)}`
//!   where `q(S)` is the state with arcs `{i,i+1}` for `i ∈ S` and defects
//!   elsewhere.
//!
//! [`tl_cover`] builds the `K_i`, checks those two facts exhaustively, and
//! then measures how far the cover stays idempotent-generated: for every
//! innermost `S` it runs the full pipeline — solve for a generating
//! idempotent of the block of `q(S)` in the minimal-level quotient, lift it,
//! certify `A·e = ⋂_{i∈S} K_i` — and records one status per subset. The
//! **height** of the cover is the largest `h` such that every intersection of
//! at most `h` of the `K_i` is zero or principal with an idempotent
//! generator; the **width** is `n-1`.

use std::collections::HashMap;
use std::fmt;

use algebra_core::{Family, StructureAlgebra};
use diagrams::LinkState;
use exact_linalg::Field;
use par_shim::prelude::*;

use crate::idempotent::{lift_idempotent, solve_idempotent};
use crate::order::LinkOrder;
use crate::{Error, Result};

/// Whether a set of arc positions (1-based, ascending) is innermost: no two
/// consecutive positions, so the arc constraints `{i, i+1}` are disjoint.
pub fn innermost(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[1] > w[0] + 1)
}

/// The planar state on `n` vertices with arcs `{i, i+1}` (1-based) for each
/// `i` in the innermost set `s`, and defects everywhere else.
///
/// Panics if `s` is not innermost or reaches outside `1..n`.
pub fn subset_state(n: usize, s: &[usize]) -> LinkState {
    assert!(innermost(s), "arc positions {s:?} are not innermost");
    assert!(
        s.iter().all(|&i| (1..n).contains(&i)),
        "arc positions {s:?} out of range for n = {n}"
    );
    let conns: Vec<(usize, usize)> = s.iter().map(|&i| (i - 1, i)).collect();
    LinkState::from_connections(n, &conns).expect("disjoint adjacent arcs form a state")
}

/// Verdict for one intersection `⋂_{i∈S} K_i` of cover ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetStatus {
    /// The intersection is the zero ideal (`S` is not innermost).
    Zero,
    /// The intersection is `A·e` for a certified idempotent `e`.
    Idempotent,
    /// No generating idempotent exists, or certification failed; the string
    /// says why.
    Fail(String),
}

/// The adjacent-arc ideals `K_1, …, K_{n-1}` of a Temperley–Lieb algebra,
/// with a verdict for every intersection and the height/width bookkeeping.
#[derive(Debug, Clone)]
pub struct Cover {
    owner: String,
    width: usize,
    height: usize,
    /// `k_ideals[i-1]` = sorted basis indices spanning `K_i`.
    k_ideals: Vec<Vec<usize>>,
    /// Status per subset of `{1, …, width}`, indexed by bitmask
    /// (bit `i-1` set ⟺ `i ∈ S`).
    statuses: Vec<SubsetStatus>,
}

impl Cover {
    /// Human-readable description of the algebra the cover belongs to.
    pub fn owner(&self) -> &str {
        &self.owner
    }

    /// Number of cover ideals, `n - 1`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Largest `h` such that every intersection of at most `h` cover ideals
    /// is zero or generated by a certified idempotent.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Sorted basis indices spanning `K_i` (`i` is 1-based).
    pub fn k_ideal(&self, i: usize) -> &[usize] {
        assert!((1..=self.width).contains(&i), "K_{i} out of range");
        &self.k_ideals[i - 1]
    }

    /// Verdict for `⋂_{i∈S} K_i`; `s` lists the members of `S` (1-based).
    pub fn status(&self, s: &[usize]) -> &SubsetStatus {
        let mask: usize = s.iter().map(|&i| 1 << (i - 1)).sum();
        &self.statuses[mask]
    }

    /// All subsets with their verdicts, sorted by size then lexicographically.
    pub fn subsets(&self) -> Vec<(Vec<usize>, &SubsetStatus)> {
        let mut all: Vec<Vec<usize>> = (0..1usize << self.width)
            .map(|mask| (1..=self.width).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect();
        all.sort_by_key(|s| (s.len(), s.clone()));
        all.into_iter()
            .map(|s| {
                let mask: usize = s.iter().map(|&i| 1 << (i - 1)).sum();
                (s, &self.statuses[mask])
            })
            .collect()
    }

    /// The structured text report: owner, width, height, ideal sizes, and one
    /// status line per subset.
    pub fn report(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "adjacent-arc ideal cover of {}", self.owner)?;
        writeln!(f, "width  = {}", self.width)?;
        writeln!(f, "height = {}", self.height)?;
        for (i, k) in self.k_ideals.iter().enumerate() {
            writeln!(f, "K_{}: {} basis elements", i + 1, k.len())?;
        }
        for (s, status) in self.subsets() {
            let set = format!(
                "{{{}}}",
                s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            );
            let verdict = match status {
                SubsetStatus::Zero => "zero".to_string(),
                SubsetStatus::Idempotent => "idempotent".to_string(),
                SubsetStatus::Fail(why) => format!("fail: {why}"),
            };
            writeln!(f, "S = {set:<16} -> {verdict}")?;
        }
        Ok(())
    }
}

/// Build and certify the adjacent-arc ideal cover of a Temperley–Lieb
/// algebra.
///
/// Requires the full algebra (no levels removed). Checks, exhaustively over
/// all subsets `S` of `{1, …, n-1}`:
///
/// * the union of the `K_i` spans exactly the levels below the top;
/// * `⋂_{i∈S} K_i ≠ 0` ⟺ `S` innermost;
/// * for innermost `S`, the intersection equals `J_{≤q(S)}`.
///
/// Those three are construction invariants and panic on failure. The
/// per-subset idempotent pipeline (solve in the minimal-level quotient, lift,
/// certify generation) records an honest [`SubsetStatus`] instead: a missing
/// generator over the given ring is a `Fail` entry and lowers the height, not
/// an error.
pub fn tl_cover<F: Field>(alg: &StructureAlgebra<F>) -> Result<Cover> {
    if alg.family() != Family::TemperleyLieb {
        return Err(Error::Precondition(format!(
            "adjacent-arc covers are defined for the Temperley–Lieb family, got {}",
            alg.family().name()
        )));
    }
    if !alg.removed_levels().is_empty() {
        return Err(Error::Precondition(
            "cover needs the full algebra, not a quotient".into(),
        ));
    }
    let n = alg.strand_count();
    if n == 0 {
        return Err(Error::Precondition("cover needs at least one strand".into()));
    }
    let w = n - 1;
    let dim = alg.dim();
    let order = LinkOrder::temperley_lieb();

    // K_i = basis elements whose right state joins i-1 and i (0-based).
    let right_states: Vec<&LinkState> = (0..dim)
        .map(|idx| {
            let label = alg.basis_label(idx);
            let ld = alg.level_data(label.level).expect("label level exists");
            &ld.states[label.q]
        })
        .collect();
    let k_masks: Vec<Vec<bool>> = (0..w)
        .map(|arc| {
            right_states
                .iter()
                .map(|state| !state.is_defect(arc) && state.partner(arc) == arc + 1)
                .collect()
        })
        .collect();
    let k_ideals: Vec<Vec<usize>> = k_masks
        .iter()
        .map(|mask| (0..dim).filter(|&i| mask[i]).collect())
        .collect();

    // Union check: together the K_i span exactly the levels below the top.
    let levels = alg.level_values();
    let below_top = alg.ideal_levels(&levels[..levels.len() - 1])?;
    let mut union: Vec<usize> = (0..dim)
        .filter(|&i| k_masks.iter().any(|mask| mask[i]))
        .collect();
    union.sort_unstable();
    assert_eq!(
        union, below_top,
        "the K_i must span exactly the ideal of diagrams below the top level"
    );

    // Intersections: nonzero ⟺ innermost, and then equal to J_{≤q(S)}.
    let mut inner_masks: Vec<usize> = Vec::new();
    for mask in 0..1usize << w {
        let members: Vec<usize> = (1..=w).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let inter: Vec<usize> = (0..dim)
            .filter(|&i| members.iter().all(|&j| k_masks[j - 1][i]))
            .collect();
        if innermost(&members) {
            inner_masks.push(mask);
            let q_state = subset_state(n, &members);
            let t = q_state.defect_count();
            let ld = alg.level_data(t)?;
            let q_idx = ld
                .states
                .iter()
                .position(|s| s == &q_state)
                .expect("adjacent-arc state is planar, hence listed at its level");
            let j_leq = alg.ideal_j_leq(t, q_idx, &order)?;
            assert_eq!(
                inter, j_leq,
                "⋂ K_i for S = {members:?} must equal the ideal at-or-below {q_state}"
            );
        } else {
            assert!(
                inter.is_empty(),
                "⋂ K_i for the non-innermost S = {members:?} must be zero"
            );
        }
    }

    // One quotient per level that occurs; solves at distinct subsets are
    // independent, so they run in parallel. (Distinct innermost subsets give
    // distinct states q(S) — there is nothing to deduplicate.)
    let mut quotients: HashMap<usize, StructureAlgebra<F>> = HashMap::new();
    for &mask in &inner_masks {
        let t = n - 2 * (mask.count_ones() as usize);
        if let std::collections::hash_map::Entry::Vacant(entry) = quotients.entry(t) {
            entry.insert(alg.minimal_level_quotient(t)?);
        }
    }
    let outcomes: Vec<(usize, Result<SubsetStatus>)> = inner_masks
        .clone()
        .into_par_iter()
        .map(|mask| {
            let members: Vec<usize> = (1..=w).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let q_state = subset_state(n, &members);
            let t = q_state.defect_count();
            let quotient = &quotients[&t];
            let q_idx = quotient
                .level_data(t)
                .expect("cached quotient has its minimal level")
                .states
                .iter()
                .position(|s| s == &q_state)
                .expect("adjacent-arc state is listed at its level");
            let status = match solve_idempotent(quotient, t, q_idx) {
                Ok(Some(eps)) => {
                    match lift_idempotent(alg, quotient, t, q_idx, &eps, &order) {
                        Ok(_) => Ok(SubsetStatus::Idempotent),
                        Err(Error::Verification(why)) => Ok(SubsetStatus::Fail(why)),
                        Err(other) => Err(other),
                    }
                }
                Ok(None) => Ok(SubsetStatus::Fail(format!(
                    "no generating idempotent for the block of {q_state} at level {t}: \
                     the pairing system is inconsistent over this ring"
                ))),
                Err(err) => Err(err),
            };
            (mask, status)
        })
        .collect();

    let mut statuses = vec![SubsetStatus::Zero; 1 << w];
    for (mask, status) in outcomes {
        statuses[mask] = status?;
    }

    // Height: every subset of size ≤ h must be zero or idempotent. A failing
    // subset of size s caps the height at s - 1.
    let mut height = w;
    for (mask, status) in statuses.iter().enumerate() {
        if matches!(status, SubsetStatus::Fail(_)) {
            height = height.min(mask.count_ones() as usize - 1);
        }
    }

    let owner = format!(
        "{} n={} over {} (δ = {}); dim {}",
        alg.family().name(),
        n,
        alg.field().descriptor(),
        alg.field().render(alg.delta()),
        dim
    );
    Ok(Cover {
        owner,
        width: w,
        height,
        k_ideals,
        statuses,
    })
}
