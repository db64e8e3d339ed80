//! Property tests for diagram combinatorics, sampling from exhaustive enumerations.

use diagrams::state::StateClass;
use diagrams::{concat, greedy_partner, pair_graph, BrauerDiagram, LinkState};
use proptest::prelude::*;

fn arb_diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
    let all = BrauerDiagram::enumerate_all(n);
    prop::sample::select(all)
}

fn arb_state(n: usize, t: usize) -> impl Strategy<Value = LinkState> {
    let all = LinkState::enumerate(n, t, StateClass::All);
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn star_is_an_involution(d in arb_diagram(4)) {
        prop_assert_eq!(d.star().star(), d);
    }

    #[test]
    fn star_reverses_products(a in arb_diagram(3), b in arb_diagram(3)) {
        let r = concat(&a, &b);
        let dual = concat(&b.star(), &a.star());
        prop_assert_eq!(dual.loops, r.loops);
        prop_assert_eq!(dual.diagram, r.diagram.star());
    }

    #[test]
    fn concat_is_associative(
        a in arb_diagram(3),
        b in arb_diagram(3),
        c in arb_diagram(3),
    ) {
        let ab = concat(&a, &b);
        let ab_c = concat(&ab.diagram, &c);
        let bc = concat(&b, &c);
        let a_bc = concat(&a, &bc.diagram);
        prop_assert_eq!(ab_c.diagram, a_bc.diagram);
        prop_assert_eq!(ab.loops + ab_c.loops, bc.loops + a_bc.loops);
    }

    #[test]
    fn pair_graph_is_symmetric(q in arb_state(5, 1), p in arb_state(5, 3)) {
        let g1 = pair_graph(&q, &p);
        let g2 = pair_graph(&p, &q);
        prop_assert_eq!(g1.components, g2.components);
        prop_assert_eq!(g1.loop_count, g2.loop_count);
    }

    #[test]
    fn pair_set_size_bounded_by_both_defect_counts(
        q in arb_state(6, 2),
        p in arb_state(6, 4),
    ) {
        let g = pair_graph(&q, &p);
        prop_assert!(g.pair_set_size() <= q.defect_count().min(p.defect_count()));
    }

    #[test]
    fn product_level_never_exceeds_either_factor(a in arb_diagram(4), b in arb_diagram(4)) {
        let r = concat(&a, &b);
        let t = r.diagram.through_count();
        prop_assert!(t <= a.through_count());
        prop_assert!(t <= b.through_count());
    }

    #[test]
    fn rotation_preserves_annularity_and_defect_count(
        q in prop::sample::select(LinkState::enumerate(6, 2, StateClass::Annular)),
        k in 0usize..6,
    ) {
        let mut r = q.clone();
        for _ in 0..k {
            r = r.rotate().unwrap();
        }
        prop_assert!(r.is_annular());
        prop_assert_eq!(r.defect_count(), q.defect_count());
    }

    #[test]
    fn greedy_partner_full_rank_no_loops(
        q in prop::sample::select(
            (1usize..=4)
                .flat_map(|t| LinkState::enumerate(9, t, StateClass::Planar))
                .filter(|s| s.defect_count() >= 1)
                .collect::<Vec<_>>(),
        ),
    ) {
        let p = greedy_partner(&q).unwrap();
        let g = pair_graph(&q, &p);
        prop_assert!(p.is_planar());
        prop_assert_eq!(g.loop_count, 0);
        prop_assert_eq!(g.pair_set_size(), q.defect_count());
    }
}
