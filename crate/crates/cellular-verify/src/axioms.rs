use std::collections::BTreeMap;

use algebra_core::{LevelData, StructureAlgebra};
use diagrams::{pair_graph, Permutation};
use exact_linalg::Field;
use par_shim::prelude::*;

use crate::report::{PartialOutcome, VerifyReport};

/// Check the three axioms of a cell datum presented by levels, states, and
/// wiring groups, directly against the product table.
///
/// * **W1** — the labels `(λ, p, σ, q)` enumerate the basis without collision:
///   block sizes add up to the dimension, every label round-trips through its
///   index, and the underlying diagrams are pairwise distinct.
/// * **W2** — star sends `(λ, p, σ, q)` to `(λ, q, σ⁻¹, p)`, is an involution,
///   and reverses every product as an algebra identity.
/// * **W3** — for every basis element `a`, level `λ`, and state `p`, the
///   level-`λ` part of `a · C_{p,σ,q}` is a combination of `C_{p',σ',q}` whose
///   coefficients, read as functions of `(p', σ'σ⁻¹)`, do not depend on the
///   choice of `(σ, q)`.
///
/// Violations are reported as certificate strings naming the offending tuple;
/// the report never panics on a corrupted table.
pub fn verify_naive_cellular<F: Field>(alg: &StructureAlgebra<F>) -> VerifyReport {
    let mut report = VerifyReport::new("naive-cellular axioms");
    report.absorb(w1_labels(alg));

    let dim = alg.dim();
    let star_parts: Vec<PartialOutcome> = (0..dim)
        .into_par_iter()
        .map(|i| w2_row(alg, i))
        .collect();
    for part in star_parts {
        report.absorb(part);
    }

    let action_parts: Vec<PartialOutcome> = (0..dim)
        .into_par_iter()
        .map(|a| w3_row(alg, a))
        .collect();
    for part in action_parts {
        report.absorb(part);
    }
    report
}

fn w1_labels<F: Field>(alg: &StructureAlgebra<F>) -> PartialOutcome {
    let mut out = PartialOutcome::default();

    let block_total: usize = alg.levels().iter().map(LevelData::block_size).sum();
    out.tick();
    if block_total != alg.dim() {
        out.record(format!(
            "W1: level blocks cover {} labels but the dimension is {}",
            block_total,
            alg.dim()
        ));
    }

    let mut seen = std::collections::HashSet::new();
    for i in 0..alg.dim() {
        let label = alg.basis_label(i);
        out.tick();
        let ld = match alg.level_data(label.level) {
            Ok(ld) => ld,
            Err(_) => {
                out.record(format!("W1: basis {i} reports missing level {}", label.level));
                continue;
            }
        };
        let round_trip =
            alg.index_of(label.level, &ld.states[label.p], &ld.perms[label.sigma], &ld.states[label.q]);
        if round_trip != Some(i) {
            out.record(format!(
                "W1: label (t={}, p={}, σ={}, q={}) of basis {i} resolves to {:?}",
                label.level, label.p, label.sigma, label.q, round_trip
            ));
        }
        if !seen.insert(alg.diagram(i).to_string()) {
            out.record(format!("W1: duplicate diagram at basis {i}: {}", alg.label_string(i)));
        }
    }
    out
}

fn w2_row<F: Field>(alg: &StructureAlgebra<F>, i: usize) -> PartialOutcome {
    let mut out = PartialOutcome::default();
    let field = alg.field();

    // Label part: star(λ, p, σ, q) = (λ, q, σ⁻¹, p) and star² = id.
    let li = alg.basis_label(i);
    let si = alg.star_of_basis(i);
    let ls = alg.basis_label(si);
    out.tick();
    let ld = alg.level_data(li.level).expect("level of a live basis element");
    let sigma_inv = ld.perms[li.sigma].inverse();
    let expected_sigma = ld.perms.iter().position(|g| *g == sigma_inv);
    if ls.level != li.level
        || ls.p != li.q
        || ls.q != li.p
        || expected_sigma != Some(ls.sigma)
        || alg.star_of_basis(si) != i
    {
        out.record(format!(
            "W2: star of basis {i} (t={}, p={}, σ={}, q={}) is basis {si} (t={}, p={}, σ={}, q={})",
            li.level, li.p, li.sigma, li.q, ls.level, ls.p, ls.sigma, ls.q
        ));
    }

    // Product part: (C_i · C_j)* = C_j* · C_i* as elements of the algebra.
    for j in 0..alg.dim() {
        out.tick();
        let forward = alg.prod_entry(i, j);
        let reversed = alg.prod_entry(alg.star_of_basis(j), alg.star_of_basis(i));
        let forward_val = forward.map(|(l, k)| (alg.delta_pow(l as usize), k));
        let reversed_val = reversed.map(|(l, k)| (alg.delta_pow(l as usize), k));
        let ok = match (&forward_val, &reversed_val) {
            (None, None) => true,
            (Some((c, _)), None) | (None, Some((c, _))) => field.is_zero(c),
            (Some((c1, k1)), Some((c2, k2))) => {
                if field.is_zero(c1) && field.is_zero(c2) {
                    true
                } else {
                    c1 == c2 && alg.star_of_basis(*k1) == *k2
                }
            }
        };
        if !ok {
            out.record(format!(
                "W2: product of basis ({i}, {j}) is not star-reversed: {:?} vs {:?}",
                forward, reversed
            ));
        }
    }
    out
}

/// The level-`λ` slice of `a · C_{p,σ,q}`, normalised to a map
/// `(p', σ'σ⁻¹) → coefficient` with zero coefficients dropped.
///
/// `Err` marks shapes that no choice of coefficients can produce: a product
/// that lands *above* `λ`, or at `λ` with a different right state.
#[allow(clippy::too_many_arguments)]
fn w3_slice<F: Field>(
    alg: &StructureAlgebra<F>,
    a: usize,
    ld: &LevelData,
    p: usize,
    sigma: usize,
    q: usize,
    sigma_inv: &Permutation,
) -> Result<BTreeMap<(usize, Vec<usize>), F::Elem>, String> {
    let gsize = ld.perms.len();
    let msize = ld.states.len();
    let j = ld.offset + (p * gsize + sigma) * msize + q;
    let mut map = BTreeMap::new();
    let Some((loops, k)) = alg.prod_entry(a, j) else {
        return Ok(map);
    };
    let coeff = alg.delta_pow(loops as usize);
    if alg.field().is_zero(&coeff) {
        return Ok(map);
    }
    let mu = alg.level_of_basis(k);
    if mu < ld.t {
        return Ok(map);
    }
    if mu > ld.t {
        return Err(format!(
            "W3: basis {a} times (t={}, p={p}, σ={sigma}, q={q}) lands at higher level {mu}",
            ld.t
        ));
    }
    let lk = alg.basis_label(k);
    if lk.q != q {
        return Err(format!(
            "W3: basis {a} times (t={}, p={p}, σ={sigma}, q={q}) moves the right state to q={}",
            ld.t, lk.q
        ));
    }
    let twist = ld.perms[lk.sigma].compose(sigma_inv);
    map.insert((lk.p, twist.images().to_vec()), coeff);
    Ok(map)
}

fn w3_row<F: Field>(alg: &StructureAlgebra<F>, a: usize) -> PartialOutcome {
    let mut out = PartialOutcome::default();
    for ld in alg.levels() {
        let gsize = ld.perms.len();
        let msize = ld.states.len();
        let inverses: Vec<Permutation> = ld.perms.iter().map(Permutation::inverse).collect();
        for p in 0..msize {
            let mut reference: Option<(usize, usize, BTreeMap<(usize, Vec<usize>), F::Elem>)> = None;
            for sigma in 0..gsize {
                for q in 0..msize {
                    out.tick();
                    match w3_slice(alg, a, ld, p, sigma, q, &inverses[sigma]) {
                        Err(cert) => out.record(cert),
                        Ok(map) => match &reference {
                            None => reference = Some((sigma, q, map)),
                            Some((s0, q0, ref_map)) => {
                                if &map != ref_map {
                                    out.record(format!(
                                        "W3: coefficients of basis {a} at (t={}, p={p}) differ \
                                         between slices (σ={s0}, q={q0}) and (σ={sigma}, q={q})",
                                        ld.t
                                    ));
                                }
                            }
                        },
                    }
                }
            }
        }
    }
    out
}

/// Check the five locality conditions of a diagram-like basis on the product
/// table, plus two diagram-family cross-checks.
///
/// Write `C_{p₁,q₁}^{σ₁} · C_{p₂,q₂}^{σ₂} = κ · C_{p,q}^{σ}` at level `λ` (each
/// table entry has exactly one term). The conditions:
///
/// 1. `λ ≤ min(λ₁, λ₂)`;
/// 2. `(λ, κ)` depends only on `(q₁, p₂)`;
/// 3. `(λ, σ)` depends only on `(σ₁, q₁, p₂, σ₂)`;
/// 4. `(λ, p)` depends only on `(p₁, σ₁, q₁, p₂)`;
/// 5. when `λ = λ₂`: `q = q₂`, and `σσ₂⁻¹` depends only on `(σ₁, q₁, p₂)`.
///
/// Cross-checks against the combinatorics of the states: `λ = λ₂` exactly when
/// the pair graph of `(q₁, p₂)` has `λ₂` pair components, and the loop count
/// in `κ = δ^{loops}` matches the pair graph's closed loops.
pub fn verify_diagram_like<F: Field>(alg: &StructureAlgebra<F>) -> VerifyReport {
    let mut report = VerifyReport::new("diagram-like conditions");
    let dim = alg.dim();

    let rows: Vec<RowScan> = (0..dim).into_par_iter().map(|i| scan_row(alg, i)).collect();

    // Grouped-constancy maps are merged in row order, so certificates are
    // deterministic.
    let mut c2: BTreeMap<K2, Option<(usize, u8)>> = BTreeMap::new();
    let mut c3: BTreeMap<K4, Option<(usize, usize)>> = BTreeMap::new();
    let mut c4: BTreeMap<K4, Option<(usize, usize)>> = BTreeMap::new();
    let mut c5: BTreeMap<K3, Vec<usize>> = BTreeMap::new();
    for row in rows {
        report.absorb(row.out);
        merge_group(&mut c2, row.c2, "condition 2 (λ, κ)", &mut report);
        merge_group(&mut c3, row.c3, "condition 3 (target σ)", &mut report);
        merge_group(&mut c4, row.c4, "condition 4 (target p)", &mut report);
        merge_group(&mut c5, row.c5, "condition 5 (twist σσ₂⁻¹)", &mut report);
    }
    report
}

/// Group keys: index tuples prefixed with the level values they live at.
type K2 = (usize, usize, usize, usize); // (λ₁, q₁, λ₂, p₂)
type K3 = (usize, usize, usize, usize, usize); // (λ₁, σ₁, q₁, λ₂, p₂)
type K4 = (usize, usize, usize, usize, usize, usize); // + σ₂ or p₁ in front
type GroupMap<K, V> = BTreeMap<K, V>;

struct RowScan {
    out: PartialOutcome,
    c2: GroupMap<K2, Option<(usize, u8)>>,
    c3: GroupMap<K4, Option<(usize, usize)>>,
    c4: GroupMap<K4, Option<(usize, usize)>>,
    c5: GroupMap<K3, Vec<usize>>,
}

fn merge_group<K: Ord + std::fmt::Debug, V: PartialEq + std::fmt::Debug>(
    global: &mut BTreeMap<K, V>,
    row: BTreeMap<K, V>,
    what: &str,
    report: &mut VerifyReport,
) {
    for (key, value) in row {
        match global.get(&key) {
            None => {
                global.insert(key, value);
            }
            Some(existing) => {
                report.checked += 1;
                if *existing != value {
                    report.record(format!(
                        "{what} is not constant on its slice {key:?}: {existing:?} vs {value:?}"
                    ));
                }
            }
        }
    }
}

fn scan_row<F: Field>(alg: &StructureAlgebra<F>, i: usize) -> RowScan {
    let mut scan = RowScan {
        out: PartialOutcome::default(),
        c2: BTreeMap::new(),
        c3: BTreeMap::new(),
        c4: BTreeMap::new(),
        c5: BTreeMap::new(),
    };
    let li = alg.basis_label(i);
    let ld1 = alg.level_data(li.level).expect("level of a live basis element");

    // Pair-graph data for the (q₁, p₂) cross-checks, computed once per p₂.
    let mut graph_cache: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();

    for j in 0..alg.dim() {
        let lj = alg.basis_label(j);
        let ld2 = alg.level_data(lj.level).expect("level of a live basis element");
        scan.out.tick();

        let entry = alg.prod_entry(i, j);
        let target = entry.map(|(loops, k)| (loops, alg.basis_label(k)));

        let (graph_pairs, graph_loops) = *graph_cache
            .entry((lj.level, lj.p))
            .or_insert_with(|| {
                let g = pair_graph(&ld1.states[li.q], &ld2.states[lj.p]);
                (g.pair_set_size(), g.loop_count)
            });

        match &target {
            None => {
                // Annihilated in a quotient: only the grouped constancy of
                // "killed" is checkable.
            }
            Some((loops, lk)) => {
                // Condition 1: the level never rises.
                if lk.level > li.level.min(lj.level) {
                    scan.out.record(format!(
                        "condition 1: ({})·({}) lands at level {} above min({}, {})",
                        alg.label_string(i),
                        alg.label_string(j),
                        lk.level,
                        li.level,
                        lj.level
                    ));
                }
                // Condition 5 per-pair part and the level-drop criterion.
                if lk.level == lj.level && lk.q != lj.q {
                    scan.out.record(format!(
                        "condition 5: ({})·({}) keeps level {} but moves the right state",
                        alg.label_string(i),
                        alg.label_string(j),
                        lj.level
                    ));
                }
                let preserves = lk.level == lj.level;
                if preserves != (graph_pairs == lj.level) {
                    scan.out.record(format!(
                        "level-drop criterion: ({})·({}) {} level {} but the pair graph of \
                         (q₁, p₂) has {} pair components",
                        alg.label_string(i),
                        alg.label_string(j),
                        if preserves { "keeps" } else { "drops" },
                        lj.level,
                        graph_pairs
                    ));
                }
                if *loops as usize != graph_loops {
                    scan.out.record(format!(
                        "loop count: ({})·({}) records {} loops but the pair graph of (q₁, p₂) \
                         closes {}",
                        alg.label_string(i),
                        alg.label_string(j),
                        loops,
                        graph_loops
                    ));
                }
            }
        }

        // Grouped values; `None` encodes an annihilated product.
        let c2_val = target.as_ref().map(|(loops, lk)| (lk.level, *loops));
        let c3_val = target.as_ref().map(|(_, lk)| (lk.level, lk.sigma));
        let c4_val = target.as_ref().map(|(_, lk)| (lk.level, lk.p));
        scan.c2.insert((li.level, li.q, lj.level, lj.p), c2_val);
        scan.c3
            .insert((li.level, li.sigma, li.q, lj.level, lj.p, lj.sigma), c3_val);
        scan.c4
            .insert((li.p, li.level, li.sigma, li.q, lj.level, lj.p), c4_val);
        if let Some((_, lk)) = &target {
            if lk.level == lj.level && lk.q == lj.q {
                let twist =
                    ld2.perms[lk.sigma].compose(&ld2.perms[lj.sigma].inverse());
                scan.c5.insert(
                    (li.level, li.sigma, li.q, lj.level, lj.p),
                    twist.images().to_vec(),
                );
            }
        }
    }
    scan
}
