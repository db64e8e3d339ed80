//! Hand-verified worked examples pinning the combinatorial conventions, plus
//! exhaustive dual-route cross-checks on small sizes.

use diagrams::state::StateClass;
use diagrams::{concat, greedy_partner, pair_graph, BrauerDiagram, LinkState, Permutation};

/// An 11-vertex overlay worked out by hand: one cycle, one component joining
/// defects of both states, one component carrying only q-defects.
#[test]
fn eleven_vertex_pair_graph_worked_example() {
    let q = LinkState::from_connections(11, &[(0, 2), (1, 4), (6, 7), (5, 9)]).unwrap();
    assert_eq!(q.defects(), vec![3, 8, 10]);
    let p = LinkState::from_connections(11, &[(1, 5), (3, 4), (6, 7), (0, 8), (2, 10)]).unwrap();
    assert_eq!(p.defects(), vec![9]);

    let g = pair_graph(&q, &p);
    assert_eq!(
        g.components,
        vec![vec![0, 2, 8, 10], vec![1, 3, 4, 5, 9], vec![6, 7]]
    );
    assert_eq!(g.loop_count, 1); // {6,7} carries arcs of both states, no defects
    assert_eq!(g.pair_set_size(), 1); // {1,3,4,5,9}: q-defect 3, p-defect 9
}

/// A 16-vertex greedy trace worked out by hand, step by step.
#[test]
fn sixteen_vertex_greedy_trace() {
    let q = LinkState::from_connections(
        16,
        &[(1, 8), (2, 3), (4, 7), (5, 6), (10, 15), (11, 12), (13, 14)],
    )
    .unwrap();
    assert_eq!(q.defects(), vec![0, 9]);
    assert!(q.is_planar());

    let p = greedy_partner(&q).unwrap();
    let expected = LinkState::from_connections(
        16,
        &[(0, 1), (7, 8), (3, 4), (2, 5), (9, 10), (14, 15), (12, 13)],
    )
    .unwrap();
    assert_eq!(p, expected);
    assert_eq!(p.defects(), vec![6, 11]);

    let g = pair_graph(&q, &p);
    assert_eq!(g.loop_count, 0);
    assert_eq!(g.pair_set_size(), 2);
}

/// Exhaustive dual-route product check on all of Br_4: the traced concatenation must
/// agree with the pair-graph prediction (loop count = δ exponent, |S| = output level)
/// and with the star anti-involution applied to the reversed product.
#[test]
fn brauer4_products_two_routes() {
    let ds = BrauerDiagram::enumerate_all(4);
    assert_eq!(ds.len(), 105);
    for a in &ds {
        let (_, _, q1) = a.decompose();
        for b in &ds {
            let (p2, _, _) = b.decompose();
            let r = concat(a, b);

            // Route B1: pair graph of the glued states predicts loops and level.
            let g = pair_graph(&q1, &p2);
            assert_eq!(r.loops, g.loop_count);
            assert_eq!(r.diagram.through_count(), g.pair_set_size());

            // Route B2: star duality.
            let dual = concat(&b.star(), &a.star());
            assert_eq!(dual.loops, r.loops);
            assert_eq!(dual.diagram, r.diagram.star());

            // Decompose/assemble round trip on the product.
            let (p, s, q) = r.diagram.decompose();
            assert_eq!(BrauerDiagram::assemble(&p, &s, &q).unwrap(), r.diagram);
        }
    }
}

/// The defect-flow permutation of an overlay matches what concatenation produces,
/// for identity-wired diagrams: checked against every auxiliary (p1, q2) choice.
#[test]
fn overlay_permutation_matches_concatenation() {
    let n = 4;
    for t in [2usize] {
        let states = LinkState::enumerate(n, t, StateClass::All);
        for q1 in &states {
            for p2 in &states {
                let g = pair_graph(q1, p2);
                if g.pair_set_size() != t {
                    continue;
                }
                for p1 in states.iter().take(3) {
                    for q2 in states.iter().take(3) {
                        let d1 =
                            BrauerDiagram::assemble(p1, &Permutation::identity(t), q1).unwrap();
                        let d2 =
                            BrauerDiagram::assemble(p2, &Permutation::identity(t), q2).unwrap();
                        let r = concat(&d1, &d2);
                        let (rp, rs, rq) = r.diagram.decompose();
                        assert_eq!(&rp, p1);
                        assert_eq!(&rq, q2);
                        // The wiring permutation depends only on (q1, p2): σ(a) = i
                        // exactly when p2's a-th defect shares a component with q1's
                        // i-th defect.
                        let qd = q1.defects();
                        let pd = p2.defects();
                        for (a, &pv) in pd.iter().enumerate() {
                            let comp = g
                                .components
                                .iter()
                                .find(|c| c.contains(&pv))
                                .expect("defect in some component");
                            let i = qd
                                .iter()
                                .position(|qv| comp.contains(qv))
                                .expect("paired component has a q1 defect");
                            assert_eq!(rs.apply(a), i, "q1={q1} p2={p2}");
                        }
                    }
                }
            }
        }
    }
}

/// Permutation-diagram subalgebra: wiring diagrams multiply like permutations under
/// composition (left factor applied second), with no loops.
#[test]
fn permutation_diagram_embedding_n4() {
    let all = LinkState::all_defects(4);
    let d_of = |s: &Permutation| BrauerDiagram::assemble(&all, s, &all).unwrap();
    for s1 in Permutation::symmetric_group(4) {
        for s2 in Permutation::symmetric_group(4) {
            let r = concat(&d_of(&s1), &d_of(&s2));
            assert_eq!(r.loops, 0);
            assert_eq!(r.diagram, d_of(&s1.compose(&s2)));
        }
    }
}

/// Planar diagrams are closed under concatenation; annular diagrams likewise.
#[test]
fn planar_and_annular_closure_under_concat() {
    let ds = BrauerDiagram::enumerate_all(3);
    let planar: Vec<_> = ds.iter().filter(|d| d.is_planar()).collect();
    for a in &planar {
        for b in &planar {
            assert!(concat(a, b).diagram.is_planar());
        }
    }
    let annular: Vec<_> = ds.iter().filter(|d| d.is_annular()).collect();
    for a in &annular {
        for b in &annular {
            assert!(concat(a, b).diagram.is_annular());
        }
    }
}
