//! Property tests for algebra arithmetic: ring axioms, star, augmentation,
//! and quotient compatibility on randomly sampled sparse elements.

use algebra_core::{AlgebraElement, Family, StructureAlgebra};
use exact_linalg::{Field, PrimeField};
use proptest::prelude::*;

type Alg = StructureAlgebra<PrimeField>;

fn f7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

fn arb_terms(dim: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..dim, -6i64..=6), 0..5)
}

fn elem(a: &Alg, terms: &[(usize, i64)]) -> AlgebraElement<PrimeField> {
    let pairs: Vec<(usize, u32)> =
        terms.iter().map(|&(i, c)| (i, a.field().from_integer(c))).collect();
    a.from_terms(&pairs)
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        ta in arb_terms(14),
        tb in arb_terms(14),
        tc in arb_terms(14),
    ) {
        let a = StructureAlgebra::build(f7(), Family::TemperleyLieb, 4, 3);
        let (x, y, z) = (elem(&a, &ta), elem(&a, &tb), elem(&a, &tc));
        prop_assert_eq!(
            a.multiply(&a.multiply(&x, &y), &z),
            a.multiply(&x, &a.multiply(&y, &z))
        );
    }

    #[test]
    fn multiplication_distributes(
        ta in arb_terms(15),
        tb in arb_terms(15),
        tc in arb_terms(15),
    ) {
        let a = StructureAlgebra::build(f7(), Family::Brauer, 3, 2);
        let (x, y, z) = (elem(&a, &ta), elem(&a, &tb), elem(&a, &tc));
        prop_assert_eq!(
            a.multiply(&x, &a.add(&y, &z)),
            a.add(&a.multiply(&x, &y), &a.multiply(&x, &z))
        );
        prop_assert_eq!(
            a.multiply(&a.add(&x, &y), &z),
            a.add(&a.multiply(&x, &z), &a.multiply(&y, &z))
        );
    }

    #[test]
    fn star_reverses_element_products(ta in arb_terms(12), tb in arb_terms(12)) {
        let a = StructureAlgebra::build(f7(), Family::Jones, 3, 2);
        let (x, y) = (elem(&a, &ta), elem(&a, &tb));
        prop_assert_eq!(
            a.star_elem(&a.multiply(&x, &y)),
            a.multiply(&a.star_elem(&y), &a.star_elem(&x))
        );
        prop_assert_eq!(a.star_elem(&a.star_elem(&x)), x);
    }

    #[test]
    fn augmentation_is_multiplicative_on_elements(ta in arb_terms(15), tb in arb_terms(15)) {
        let a = StructureAlgebra::build(f7(), Family::Brauer, 3, 4);
        let (x, y) = (elem(&a, &ta), elem(&a, &tb));
        let lhs = a.apply_aug(&a.multiply(&x, &y));
        let rhs = a.field().mul(&a.apply_aug(&x), &a.apply_aug(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_map_is_multiplicative(ta in arb_terms(14), tb in arb_terms(14)) {
        let a = StructureAlgebra::build(f7(), Family::TemperleyLieb, 4, 3);
        let q = a.quotient_below(&[0]).unwrap();
        let drop = a.dim() - q.dim();
        // π drops coefficients at the removed levels and shifts the rest down.
        let project = |e: &AlgebraElement<PrimeField>| {
            let pairs: Vec<(usize, u32)> = e
                .terms()
                .filter(|&(i, _)| i >= drop)
                .map(|(i, c)| (i - drop, *c))
                .collect();
            q.from_terms(&pairs)
        };
        let (x, y) = (elem(&a, &ta), elem(&a, &tb));
        prop_assert_eq!(project(&a.multiply(&x, &y)), q.multiply(&project(&x), &project(&y)));
    }
}
