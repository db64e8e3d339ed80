//! Hand-checked cases for the containment order, the loop-free
//! factorization, the idempotent constructions, and the adjacent-arc cover.

use algebra_core::{Family, StructureAlgebra};
use diagrams::{greedy_partner, BrauerDiagram, LinkState, Permutation, StateClass};
use exact_linalg::{Field, PrimeField, Rationals};
use idempotents_covers::{
    ez_idempotent, innermost, lift_idempotent, solve_idempotent, subset_state, tl_cover,
    tl_factorize, tl_meet, tl_order, Error, LinkOrder, OrderRel, SubsetStatus,
};

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn rat(n: i64) -> <Rationals as Field>::Elem {
    Rationals.parse(&n.to_string()).unwrap()
}

/// Every planar state on `n` vertices, across all levels.
fn all_planar(n: usize) -> Vec<LinkState> {
    let mut out = Vec::new();
    let mut t = n % 2;
    while t <= n {
        out.extend(LinkState::enumerate(n, t, StateClass::Planar));
        t += 2;
    }
    out
}

fn state(n: usize, conns: &[(usize, usize)]) -> LinkState {
    LinkState::from_connections(n, conns).unwrap()
}

// ---------------------------------------------------------------------------
// Containment order and meet
// ---------------------------------------------------------------------------

#[test]
fn order_is_reflexive_and_detects_containment() {
    for n in 1..=5 {
        for s in all_planar(n) {
            assert_eq!(tl_order(&s, &s), OrderRel::Eq);
        }
    }
    // Adding connections goes down: both arcs ≤ one arc ≤ no arcs.
    let two_arcs = state(4, &[(0, 1), (2, 3)]);
    let one_arc = state(4, &[(0, 1)]);
    let no_arcs = LinkState::all_defects(4);
    assert_eq!(tl_order(&two_arcs, &one_arc), OrderRel::Lt);
    assert_eq!(tl_order(&one_arc, &two_arcs), OrderRel::Gt);
    assert_eq!(tl_order(&two_arcs, &no_arcs), OrderRel::Lt);
    assert_eq!(tl_order(&one_arc, &no_arcs), OrderRel::Lt);
    // Different arcs on the same vertices are incomparable.
    let nested = state(4, &[(0, 3), (1, 2)]);
    assert_eq!(tl_order(&two_arcs, &nested), OrderRel::Incomparable);
}

#[test]
fn order_is_transitive_antisymmetric_and_defect_monotone() {
    for n in 1..=6 {
        let states = all_planar(n);
        let leq = |a: &LinkState, b: &LinkState| {
            matches!(tl_order(a, b), OrderRel::Lt | OrderRel::Eq)
        };
        for a in &states {
            for b in &states {
                // Antisymmetry.
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b);
                }
                // Strict comparability forces a strict defect drop.
                if tl_order(a, b) == OrderRel::Lt {
                    assert!(
                        a.defect_count() < b.defect_count(),
                        "{a} < {b} but defect counts are {} and {}",
                        a.defect_count(),
                        b.defect_count()
                    );
                }
                for c in &states {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "transitivity fails: {a} ≤ {b} ≤ {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn meet_agrees_with_brute_force_greatest_lower_bound() {
    for n in 1..=6 {
        let states = all_planar(n);
        let leq = |a: &LinkState, b: &LinkState| {
            matches!(tl_order(a, b), OrderRel::Lt | OrderRel::Eq)
        };
        for a in &states {
            for b in &states {
                let lower: Vec<&LinkState> = states
                    .iter()
                    .filter(|c| leq(c, a) && leq(c, b))
                    .collect();
                let maxima: Vec<&&LinkState> = lower
                    .iter()
                    .filter(|c| lower.iter().all(|d| leq(d, c)))
                    .collect();
                match tl_meet(a, b) {
                    None => assert!(
                        lower.is_empty(),
                        "meet of {a} and {b} is bottom but {} lower bounds exist",
                        lower.len()
                    ),
                    Some(m) => {
                        // A greatest lower bound exists and is unique whenever
                        // any lower bound exists, and the meet is it.
                        assert_eq!(maxima.len(), 1, "no unique GLB for {a}, {b}");
                        assert_eq!(&m, *maxima[0], "meet of {a} and {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn products_respect_the_ideal_at_or_below_each_right_state() {
    // Multiplying any basis element on the left never leaves the left ideal
    // J_{≤q}. Product targets are independent of δ, so checking with δ = 1
    // (every coefficient invertible) certifies the containment for every δ.
    let order = LinkOrder::temperley_lieb();
    for n in 2..=6 {
        let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, 1);
        let dim = alg.dim();
        // One membership table per (level, right state).
        let mut member: Vec<Vec<bool>> = Vec::new();
        let mut block_of = vec![usize::MAX; dim];
        for ld in alg.levels() {
            for q in 0..ld.states.len() {
                let mut mask = vec![false; dim];
                for i in alg.ideal_j_leq(ld.t, q, &order).unwrap() {
                    mask[i] = true;
                }
                for p in 0..ld.states.len() {
                    for s in 0..ld.perms.len() {
                        block_of[ld.offset + (p * ld.perms.len() + s) * ld.states.len() + q] =
                            member.len();
                    }
                }
                member.push(mask);
            }
        }
        for j in 0..dim {
            let mask = &member[block_of[j]];
            for i in 0..dim {
                let (_, target) = alg.prod_entry(i, j).unwrap();
                assert!(
                    mask[target],
                    "C_{i}·C_{j} lands at {target}, outside J_≤q of {j} (n = {n})"
                );
            }
        }
    }
}

#[test]
fn ideal_intersections_match_meets() {
    // J_{≤a} ∩ J_{≤b} = J_{≤ a∧b}, with the empty ideal for the bottom meet.
    let order = LinkOrder::temperley_lieb();
    for n in 2..=5 {
        let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, 0);
        let mut blocks: Vec<(usize, usize, LinkState)> = Vec::new();
        for ld in alg.levels() {
            for q in 0..ld.states.len() {
                blocks.push((ld.t, q, ld.states[q].clone()));
            }
        }
        for (ta, qa, sa) in &blocks {
            let ia = alg.ideal_j_leq(*ta, *qa, &order).unwrap();
            for (tb, qb, sb) in &blocks {
                let ib = alg.ideal_j_leq(*tb, *qb, &order).unwrap();
                let inter: Vec<usize> =
                    ia.iter().copied().filter(|i| ib.contains(i)).collect();
                match tl_meet(sa, sb) {
                    None => assert!(
                        inter.is_empty(),
                        "bottom meet but nonempty intersection for {sa}, {sb}"
                    ),
                    Some(m) => {
                        let tm = m.defect_count();
                        let ld = alg.level_data(tm).unwrap();
                        let qm = ld.states.iter().position(|s| s == &m).unwrap();
                        assert_eq!(
                            inter,
                            alg.ideal_j_leq(tm, qm, &order).unwrap(),
                            "intersection mismatch for {sa}, {sb}"
                        );
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Loop-free factorization
// ---------------------------------------------------------------------------

#[test]
fn factorization_worked_example_on_eleven_strands() {
    // d joins its left state p to a right state q' two connections below q;
    // the factorization must pull those connections into the middle column
    // and detour the top through-strand across the six fresh vertices.
    let q = state(11, &[(1, 2), (4, 5), (7, 8)]);
    let q_prime = state(11, &[(1, 2), (4, 5), (7, 8), (6, 9), (3, 10)]);
    let p = state(11, &[(0, 1), (2, 3), (5, 8), (6, 7), (9, 10)]);
    let d = BrauerDiagram::assemble(&p, &Permutation::identity(1), &q_prime).unwrap();

    let (left, right) = tl_factorize(&d, &q).unwrap();

    let expected_ql = state(11, &[(0, 1), (2, 3), (4, 5), (8, 9), (7, 10)]);
    let expected_left =
        BrauerDiagram::assemble(&p, &Permutation::identity(1), &expected_ql).unwrap();
    let expected_pr = state(11, &[(1, 2), (3, 4), (5, 6)]);
    let expected_right =
        BrauerDiagram::assemble(&expected_pr, &Permutation::identity(5), &q).unwrap();
    assert_eq!(left, expected_left);
    assert_eq!(right, expected_right);

    let glued = diagrams::concat(&left, &right);
    assert_eq!(glued.loops, 0);
    assert_eq!(glued.diagram, d);
}

#[test]
fn factorization_recomposes_for_every_planar_diagram_below_target() {
    for n in 2..=6 {
        let states = all_planar(n);
        let mut checked = 0usize;
        for q in &states {
            if q.defect_count() == 0 {
                continue;
            }
            for q_prime in &states {
                if tl_order(q_prime, q) != OrderRel::Lt {
                    continue;
                }
                let t_prime = q_prime.defect_count();
                for p in LinkState::enumerate(n, t_prime, StateClass::Planar) {
                    let d = BrauerDiagram::assemble(
                        &p,
                        &Permutation::identity(t_prime),
                        q_prime,
                    )
                    .unwrap();
                    // tl_factorize itself asserts the zero-loop recomposition.
                    let (left, right) = tl_factorize(&d, q).unwrap();
                    let (_, _, right_state) = right.decompose();
                    assert_eq!(&right_state, q, "right factor must end exactly in q");
                    assert!(left.is_planar() && right.is_planar());
                    checked += 1;
                }
            }
        }
        assert!(checked > 0, "n = {n} exercised no factorizations");
    }
}

#[test]
fn factorization_rejects_bad_inputs() {
    let q = state(4, &[(0, 1)]);
    let d_at_q = BrauerDiagram::assemble(&q, &Permutation::identity(2), &q).unwrap();
    // Right state equal to q: not strictly below.
    assert!(matches!(
        tl_factorize(&d_at_q, &q),
        Err(Error::Precondition(_))
    ));
    // Target with no defects.
    let closed = state(4, &[(0, 1), (2, 3)]);
    let d_below = BrauerDiagram::assemble(&closed, &Permutation::identity(0), &closed).unwrap();
    assert!(matches!(
        tl_factorize(&d_below, &closed),
        Err(Error::Precondition(_))
    ));
    // Non-planar diagram.
    let crossing = BrauerDiagram::assemble(
        &LinkState::all_defects(4),
        &Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
        &LinkState::all_defects(4),
    )
    .unwrap();
    assert!(matches!(
        tl_factorize(&crossing, &state(4, &[(0, 1)])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn block_products_reach_every_basis_element_of_the_lower_ideal() {
    // Algebra-level restatement: for every basis element d of J_{≤q} outside
    // the block of q, the two factors multiply back to d with coefficient 1.
    for n in [4usize, 5] {
        let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, 0);
        let order = LinkOrder::temperley_lieb();
        for ld_idx in 0..alg.levels().len() {
            let (t, m) = {
                let ld = &alg.levels()[ld_idx];
                (ld.t, ld.states.len())
            };
            if t == 0 {
                continue;
            }
            for q in 0..m {
                let q_state = alg.levels()[ld_idx].states[q].clone();
                for i in alg.ideal_j_leq(t, q, &order).unwrap() {
                    let d = alg.diagram(i).clone();
                    let (_, _, right_state) = d.decompose();
                    if right_state == q_state {
                        continue;
                    }
                    let (left, right) = tl_factorize(&d, &q_state).unwrap();
                    let il = alg.index_of_diagram(&left).unwrap();
                    let ir = alg.index_of_diagram(&right).unwrap();
                    let product =
                        alg.multiply(&alg.basis_elem(il), &alg.basis_elem(ir));
                    assert_eq!(product, alg.basis_elem(i));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Idempotent generators: linear system and shortcut
// ---------------------------------------------------------------------------

#[test]
fn solver_handles_the_closed_two_strand_block() {
    // TL_2 at level 0 (the single closed arc): over δ = 0 the pairing is the
    // zero form and no generating idempotent exists; over invertible δ the
    // generator is δ⁻¹ times the basis loop.
    let alg0 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 2, 0);
    assert!(solve_idempotent(&alg0, 0, 0).unwrap().is_none());

    let alg2 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 2, 2);
    let e = solve_idempotent(&alg2, 0, 0).unwrap().expect("δ invertible");
    // Basis index 0 is (level 0, p = 0, σ = 1, q = 0); 2⁻¹ = 3 in F_5.
    assert_eq!(e, alg2.from_terms(&[(0, 3)]));

    // Same story one size up: the level-0 pairing of TL_4 vanishes at δ = 0.
    let alg40 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 0);
    for q in 0..alg40.level_data(0).unwrap().states.len() {
        assert!(solve_idempotent(&alg40, 0, q).unwrap().is_none());
    }
}

#[test]
fn solver_succeeds_at_every_positive_level() {
    for n in 3..=5 {
        for delta in [0u32, 2] {
            let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, delta);
            for t in alg.level_values() {
                if t == 0 {
                    continue;
                }
                let quotient = alg.minimal_level_quotient(t).unwrap();
                for q in 0..quotient.level_data(t).unwrap().states.len() {
                    let e = solve_idempotent(&quotient, t, q).unwrap();
                    assert!(
                        e.is_some(),
                        "no generator for TL_{n}, δ = {delta}, level {t}, state {q}"
                    );
                }
            }
        }
    }
    // Exact arithmetic over ℚ as well.
    let alg = StructureAlgebra::build(Rationals, Family::TemperleyLieb, 3, rat(0));
    for t in [1usize, 3] {
        let quotient = alg.minimal_level_quotient(t).unwrap();
        for q in 0..quotient.level_data(t).unwrap().states.len() {
            assert!(solve_idempotent(&quotient, t, q).unwrap().is_some());
        }
    }
}

#[test]
fn solver_requires_the_minimal_level() {
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    // Level 2 exists but is not minimal in the full algebra.
    assert!(matches!(
        solve_idempotent(&alg, 2, 0),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn shortcut_builds_single_term_generators_from_witnesses() {
    // Rotation witness for the annular family: p = q rotated one step has t
    // shared defect paths and no closed loops, so power 0 works at any δ.
    for n in [4usize, 5] {
        let alg = StructureAlgebra::build(f5(), Family::Jones, n, 0);
        for t in alg.level_values() {
            if t == 0 {
                continue;
            }
            let quotient = alg.minimal_level_quotient(t).unwrap();
            let states = quotient.level_data(t).unwrap().states.clone();
            for (q_idx, q_state) in states.iter().enumerate() {
                let p_state = q_state.rotate_unchecked(1);
                let p_idx = states.iter().position(|s| s == &p_state).unwrap();
                let e = ez_idempotent(&quotient, t, q_idx, p_idx, 0).unwrap();
                assert_eq!(e.support_size(), 1, "shortcut generator has one term");
            }
        }
    }
    // Zig-zag partner witness for the planar family, same power 0.
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 6, 0);
    for t in alg.level_values() {
        if t == 0 {
            continue;
        }
        let quotient = alg.minimal_level_quotient(t).unwrap();
        let states = quotient.level_data(t).unwrap().states.clone();
        for (q_idx, q_state) in states.iter().enumerate() {
            let p_state = greedy_partner(q_state).unwrap();
            let p_idx = states.iter().position(|s| s == &p_state).unwrap();
            let e = ez_idempotent(&quotient, t, q_idx, p_idx, 0).unwrap();
            assert_eq!(e.support_size(), 1);
        }
    }
    // A positive power: pairing a closed block with itself closes one loop,
    // so the witness needs power 1 and an invertible δ.
    let alg2 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 2, 2);
    let e = ez_idempotent(&alg2, 0, 0, 0, 1).unwrap();
    assert_eq!(e, alg2.from_terms(&[(0, 3)]));
}

#[test]
fn shortcut_rejects_invalid_witnesses() {
    // Disjoint arcs share no defect path: the pairing drops the level.
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    let quotient = alg.minimal_level_quotient(2).unwrap();
    let states = quotient.level_data(2).unwrap().states.clone();
    let q = states.iter().position(|s| s == &state(4, &[(0, 1)])).unwrap();
    let p = states.iter().position(|s| s == &state(4, &[(2, 3)])).unwrap();
    assert!(matches!(
        ez_idempotent(&quotient, 2, q, p, 0),
        Err(Error::InvalidWitness(_))
    ));

    // Right pair, wrong loop count.
    let alg2 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 2, 2);
    assert!(matches!(
        ez_idempotent(&alg2, 0, 0, 0, 0),
        Err(Error::InvalidWitness(_))
    ));

    // Right loop count, but δ^1 = 0 is not invertible.
    let alg0 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 2, 0);
    assert!(matches!(
        ez_idempotent(&alg0, 0, 0, 0, 1),
        Err(Error::InvalidWitness(_))
    ));
}

#[test]
fn shortcut_and_solver_generate_the_same_ideal() {
    // Two idempotents generate the same left ideal exactly when each absorbs
    // the other: e₁·e₂ = e₁ and e₂·e₁ = e₂.
    for n in 3..=5 {
        for delta in [0u32, 2] {
            let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, delta);
            for t in alg.level_values() {
                if t == 0 {
                    continue;
                }
                let quotient = alg.minimal_level_quotient(t).unwrap();
                let states = quotient.level_data(t).unwrap().states.clone();
                for (q_idx, q_state) in states.iter().enumerate() {
                    let e1 = solve_idempotent(&quotient, t, q_idx).unwrap().unwrap();
                    let p_state: LinkState = greedy_partner(q_state).unwrap();
                    let p_idx = states.iter().position(|s| s == &p_state).unwrap();
                    let e2 = ez_idempotent(&quotient, t, q_idx, p_idx, 0).unwrap();
                    assert_eq!(quotient.multiply(&e1, &e2), e1);
                    assert_eq!(quotient.multiply(&e2, &e1), e2);
                }
            }
        }
    }
    // Annular family, rotation witnesses.
    let alg = StructureAlgebra::build(f5(), Family::Jones, 4, 3);
    for t in alg.level_values() {
        if t == 0 {
            continue;
        }
        let quotient = alg.minimal_level_quotient(t).unwrap();
        let states = quotient.level_data(t).unwrap().states.clone();
        for (q_idx, q_state) in states.iter().enumerate() {
            let e1 = solve_idempotent(&quotient, t, q_idx).unwrap().unwrap();
            let p_state = q_state.rotate_unchecked(1);
            let p_idx = states.iter().position(|s| s == &p_state).unwrap();
            let e2 = ez_idempotent(&quotient, t, q_idx, p_idx, 0).unwrap();
            assert_eq!(quotient.multiply(&e1, &e2), e1);
            assert_eq!(quotient.multiply(&e2, &e1), e2);
        }
    }
}

// ---------------------------------------------------------------------------
// Lifting to the full algebra
// ---------------------------------------------------------------------------

#[test]
fn lift_of_the_top_block_is_the_unit() {
    let order = LinkOrder::temperley_lieb();
    for n in [3usize, 4] {
        let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, 0);
        let quotient = alg.minimal_level_quotient(n).unwrap();
        let eps = solve_idempotent(&quotient, n, 0).unwrap().unwrap();
        let e = lift_idempotent(&alg, &quotient, n, 0, &eps, &order).unwrap();
        assert_eq!(e, alg.unit_elem());
    }
}

#[test]
fn lift_certifies_every_positive_level_block() {
    let order = LinkOrder::temperley_lieb();
    for (n, delta) in [(4usize, 0u32), (5, 0), (6, 0), (4, 2)] {
        let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, n, delta);
        let mut lifted = 0usize;
        for t in alg.level_values() {
            if t == 0 {
                continue;
            }
            let quotient = alg.minimal_level_quotient(t).unwrap();
            for q in 0..quotient.level_data(t).unwrap().states.len() {
                let eps = solve_idempotent(&quotient, t, q).unwrap().unwrap();
                let e = lift_idempotent(&alg, &quotient, t, q, &eps, &order).unwrap();
                // The lift's own certification covers e·e = e and
                // A·e = J_{≤q}; re-check idempotence and block support here.
                assert_eq!(alg.multiply(&e, &e), e);
                for (i, _) in e.terms() {
                    let label = alg.basis_label(i);
                    assert_eq!((label.level, label.q), (t, q));
                }
                lifted += 1;
            }
        }
        assert!(lifted > 0);
    }
    // δ invertible: the closed bottom level lifts too (J_{≤q} = J_q there).
    let alg = StructureAlgebra::build(Rationals, Family::TemperleyLieb, 4, rat(3));
    for t in alg.level_values() {
        let quotient = alg.minimal_level_quotient(t).unwrap();
        for q in 0..quotient.level_data(t).unwrap().states.len() {
            let eps = solve_idempotent(&quotient, t, q).unwrap().unwrap();
            lift_idempotent(&alg, &quotient, t, q, &eps, &order).unwrap();
        }
    }
}

#[test]
fn lift_rejects_injected_non_idempotents() {
    let order = LinkOrder::temperley_lieb();
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    let quotient = alg.minimal_level_quotient(2).unwrap();
    let eps = solve_idempotent(&quotient, 2, 0).unwrap().unwrap();

    // Scaling destroys idempotence but keeps the support inside the block.
    let doubled = quotient.scale(&eps, &2);
    assert!(matches!(
        lift_idempotent(&alg, &quotient, 2, 0, &doubled, &order),
        Err(Error::Verification(_))
    ));

    // Support outside the block of q = 0.
    let ld = quotient.level_data(2).unwrap();
    let foreign = ld.offset + 1; // (p = 0, σ = 1ᵗ, q = 1)
    let polluted = quotient.add(&eps, &quotient.basis_elem(foreign));
    assert!(matches!(
        lift_idempotent(&alg, &quotient, 2, 0, &polluted, &order),
        Err(Error::Verification(_))
    ));
}

// ---------------------------------------------------------------------------
// Adjacent-arc ideal cover
// ---------------------------------------------------------------------------

#[test]
fn innermost_sets_and_their_states() {
    assert!(innermost(&[]));
    assert!(innermost(&[1, 3]));
    assert!(!innermost(&[1, 2]));
    let q = subset_state(4, &[1, 3]);
    assert_eq!(q, state(4, &[(0, 1), (2, 3)]));
    assert_eq!(subset_state(4, &[]), LinkState::all_defects(4));
}

#[test]
fn cover_of_four_strands_lists_the_innermost_intersections() {
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    let cover = tl_cover(&alg).unwrap();
    assert_eq!(cover.width(), 3);
    // δ invertible: every nonzero intersection is idempotent-generated.
    assert_eq!(cover.height(), 3);
    let nonzero: Vec<Vec<usize>> = cover
        .subsets()
        .into_iter()
        .filter(|(_, st)| **st != SubsetStatus::Zero)
        .map(|(s, _)| s)
        .collect();
    assert_eq!(
        nonzero,
        vec![vec![], vec![1], vec![2], vec![3], vec![1, 3]],
        "exactly the innermost subsets have nonzero intersections"
    );
    for s in &nonzero {
        assert_eq!(*cover.status(s), SubsetStatus::Idempotent);
    }

    // δ = 0 kills the closed intersection K_1 ∩ K_3 (level 0): height drops
    // to 1 while the width stays 3.
    let alg0 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 0);
    let cover0 = tl_cover(&alg0).unwrap();
    assert_eq!(cover0.height(), 1);
    assert!(matches!(cover0.status(&[1, 3]), SubsetStatus::Fail(_)));
    assert_eq!(*cover0.status(&[2]), SubsetStatus::Idempotent);
}

#[test]
fn cover_heights_for_five_and_six_strands() {
    // Odd strand count: no closed level exists, so every intersection stays
    // idempotent-generated even at δ = 0 and the height equals the width.
    let alg5 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 5, 0);
    let cover5 = tl_cover(&alg5).unwrap();
    assert_eq!((cover5.width(), cover5.height()), (4, 4));

    // Even strand count at δ = 0: the triple intersection K_1 ∩ K_3 ∩ K_5
    // reaches the closed level, whose pairing vanishes; the height stops at 2.
    let alg6 = StructureAlgebra::build(f5(), Family::TemperleyLieb, 6, 0);
    let cover6 = tl_cover(&alg6).unwrap();
    assert_eq!((cover6.width(), cover6.height()), (5, 2));
    let failing: Vec<Vec<usize>> = cover6
        .subsets()
        .into_iter()
        .filter(|(_, st)| matches!(st, SubsetStatus::Fail(_)))
        .map(|(s, _)| s)
        .collect();
    assert_eq!(failing, vec![vec![1, 3, 5]]);
}

#[test]
fn cover_report_lists_every_subset() {
    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    let cover = tl_cover(&alg).unwrap();
    let report = cover.report();
    assert!(report.contains("width  = 3"));
    assert!(report.contains("height = 3"));
    assert_eq!(report.matches("S = {").count(), 8, "one line per subset");
    assert!(report.contains("K_1:"));
    assert!(report.contains("-> idempotent"));
    assert!(report.contains("-> zero"));
}

#[test]
fn cover_rejects_wrong_inputs() {
    let brauer = StructureAlgebra::build(f5(), Family::Brauer, 3, 2);
    assert!(matches!(tl_cover(&brauer), Err(Error::Precondition(_))));

    let alg = StructureAlgebra::build(f5(), Family::TemperleyLieb, 4, 2);
    let quotient = alg.minimal_level_quotient(2).unwrap();
    assert!(matches!(tl_cover(&quotient), Err(Error::Precondition(_))));
}
