//! Hand-checked Tor computations: oracle values, small algebras whose
//! homology is known in closed form, generator-choice independence, and the
//! honest-degradation behavior at the resource ceilings.

use algebra_core::{Family, StructureAlgebra};
use exact_linalg::{Field, PrimeField, Rationals};
use tor_engine::{
    compare_reports, cyclic_group_oracle, free_resolution, tor_dims, tor_dims_with,
    GeneratorChoice, ResourceCaps, TorOptions,
};

fn fp(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn tl(p: u32, n: usize, delta: u32) -> StructureAlgebra<PrimeField> {
    StructureAlgebra::build(fp(p), Family::TemperleyLieb, n, delta)
}

// --- the cyclic-group oracle on its own -----------------------------------

#[test]
fn oracle_modular_case_is_periodic() {
    // char | n: the trivial module never splits off, one dimension per degree.
    assert_eq!(cyclic_group_oracle(fp(2), 2, 3).dims, vec![1, 1, 1, 1]);
    assert_eq!(cyclic_group_oracle(fp(3), 6, 4).dims, vec![1, 1, 1, 1, 1]);
    assert_eq!(cyclic_group_oracle(fp(5), 5, 2).dims, vec![1, 1, 1]);
}

#[test]
fn oracle_semisimple_case_is_concentrated() {
    // char ∤ n: Maschke, so Tor vanishes above degree 0.
    assert_eq!(cyclic_group_oracle(Rationals, 3, 3).dims, vec![1, 0, 0, 0]);
    assert_eq!(cyclic_group_oracle(fp(5), 3, 3).dims, vec![1, 0, 0, 0]);
    assert_eq!(cyclic_group_oracle(fp(2), 7, 3).dims, vec![1, 0, 0, 0]);
}

#[test]
fn oracle_trivial_group() {
    assert_eq!(cyclic_group_oracle(fp(2), 1, 3).dims, vec![1, 0, 0, 0]);
    assert_eq!(cyclic_group_oracle(Rationals, 1, 2).dims, vec![1, 0, 0]);
}

// --- engine vs oracle on cyclic group algebras -----------------------------

#[test]
fn engine_matches_oracle_on_cyclic_groups() {
    for p in [2u32, 3, 5] {
        for n in 1..=8usize {
            let field = fp(p);
            let alg = StructureAlgebra::build(field.clone(), Family::GroupCyclic, n, 1);
            let got = tor_dims(&alg, 4);
            let want = cyclic_group_oracle(field, n, 4);
            assert!(
                got.complete(),
                "cyclic n={n} over F_{p} should be tiny enough to finish"
            );
            assert_eq!(got.dims, want.dims, "n={n}, p={p}");
        }
    }
}

#[test]
fn engine_matches_oracle_over_rationals() {
    for n in 1..=5usize {
        let alg = StructureAlgebra::build(Rationals, Family::GroupCyclic, n, Rationals.one());
        let got = tor_dims(&alg, 3);
        let want = cyclic_group_oracle(Rationals, n, 3);
        assert_eq!(got.dims, want.dims, "n={n} over Q");
    }
}

// --- smallest Temperley–Lieb instances, checked by hand --------------------

#[test]
fn tl2_loopless_is_dual_numbers() {
    // TL_2 at δ = 0 is F[u]/(u²): dual numbers, Tor is one-dimensional in
    // every degree.
    assert_eq!(tor_dims(&tl(5, 2, 0), 3).dims, vec![1, 1, 1, 1]);
    assert_eq!(tor_dims(&tl(2, 2, 0), 3).dims, vec![1, 1, 1, 1]);
    // δ = 2 over F_2 is the same algebra.
    assert_eq!(tor_dims(&tl(2, 2, 2), 3).dims, vec![1, 1, 1, 1]);
}

#[test]
fn tl2_invertible_loop_is_semisimple() {
    // u² = δu with δ ≠ 0 makes u/δ idempotent, so the algebra splits.
    assert_eq!(tor_dims(&tl(5, 2, 1), 3).dims, vec![1, 0, 0, 0]);
    assert_eq!(tor_dims(&tl(5, 2, 2), 3).dims, vec![1, 0, 0, 0]);
    let alg = StructureAlgebra::build(Rationals, Family::TemperleyLieb, 2, Rationals.one());
    assert_eq!(tor_dims(&alg, 3).dims, vec![1, 0, 0, 0]);
}

#[test]
fn single_strand_and_trivial_group_are_the_ground_field() {
    let one_strand = tl(5, 1, 0);
    assert_eq!(tor_dims(&one_strand, 3).dims, vec![1, 0, 0, 0]);
    let trivial = StructureAlgebra::build(fp(3), Family::GroupCyclic, 1, 1);
    assert_eq!(tor_dims(&trivial, 3).dims, vec![1, 0, 0, 0]);
}

// --- odd strand counts: Tor concentrated in degree zero --------------------

#[test]
fn tl3_tor_vanishes_positively() {
    for delta in [0u32, 1, 2] {
        let r = tor_dims(&tl(5, 3, delta), 3);
        assert_eq!(r.dims, vec![1, 0, 0, 0], "delta={delta} over F_5");
    }
    for delta in [0u32, 1] {
        let r = tor_dims(&tl(2, 3, delta), 3);
        assert_eq!(r.dims, vec![1, 0, 0, 0], "delta={delta} over F_2");
    }
}

#[test]
fn tl5_tor_vanishes_positively() {
    let r = tor_dims(&tl(5, 5, 0), 3);
    assert!(r.complete());
    assert_eq!(r.dims, vec![1, 0, 0, 0]);
}

// --- even strand counts ----------------------------------------------------

#[test]
fn tl6_first_tor_vanishes() {
    for p in [2u32, 5] {
        let r = tor_dims(&tl(p, 6, 0), 1);
        assert!(r.complete(), "TL_6 qmax=1 over F_{p} should finish");
        assert_eq!(r.dims, vec![1, 0], "over F_{p}");
    }
}

// --- generator-choice independence -----------------------------------------

#[test]
fn tl4_dims_independent_of_generator_choice() {
    for delta in [0u32, 1] {
        let alg = tl(5, 4, delta);
        let reports: Vec<_> = [
            GeneratorChoice::Pruned,
            GeneratorChoice::Full,
            GeneratorChoice::Reversed,
        ]
        .iter()
        .map(|&c| tor_dims_with(&alg, &TorOptions::with_choice(2, c)))
        .collect();
        for r in &reports {
            assert!(r.complete(), "delta={delta}, strategy={}", r.strategy);
            assert_eq!(r.dims, reports[0].dims, "delta={delta}");
        }
    }
}

#[test]
fn cyclic6_dims_independent_of_generator_choice() {
    let alg = StructureAlgebra::build(fp(3), Family::GroupCyclic, 6, 1);
    let reports: Vec<_> = [
        GeneratorChoice::Pruned,
        GeneratorChoice::Full,
        GeneratorChoice::Reversed,
    ]
    .iter()
    .map(|&c| tor_dims_with(&alg, &TorOptions::with_choice(3, c)))
    .collect();
    for r in &reports {
        assert!(r.complete());
        assert_eq!(r.dims, vec![1, 1, 1, 1], "strategy={}", r.strategy);
    }
}

// --- annular algebras against the group oracle -----------------------------

#[test]
fn jones5_matches_cyclic_oracle() {
    // The top-level quotient of J_n is the cyclic group algebra, and at δ = 0
    // over F_p with p | n the whole Tor series matches the group's.
    let alg = StructureAlgebra::build(fp(5), Family::Jones, 5, 0);
    let got = tor_dims(&alg, 3);
    let want = cyclic_group_oracle(fp(5), 5, 3);
    assert!(got.complete(), "J_5 over F_5 should finish: {got}");
    assert_eq!(got.dims, want.dims);
    assert_eq!(got.dims, vec![1, 1, 1, 1]);
}

#[test]
fn jones3_modular_and_semisimple() {
    let modular = StructureAlgebra::build(fp(3), Family::Jones, 3, 0);
    assert_eq!(
        tor_dims(&modular, 3).dims,
        cyclic_group_oracle(fp(3), 3, 3).dims
    );
    let coprime = StructureAlgebra::build(fp(2), Family::Jones, 3, 0);
    assert_eq!(tor_dims(&coprime, 3).dims, vec![1, 0, 0, 0]);
}

// --- structural certificates ------------------------------------------------

#[test]
fn resolution_differentials_compose_to_zero() {
    let cases: Vec<(StructureAlgebra<PrimeField>, GeneratorChoice)> = vec![
        (tl(5, 4, 0), GeneratorChoice::Pruned),
        (tl(5, 4, 2), GeneratorChoice::Pruned),
        (
            StructureAlgebra::build(fp(2), Family::GroupCyclic, 4, 1),
            GeneratorChoice::Full,
        ),
    ];
    for (alg, choice) in cases {
        let res = free_resolution(&alg, &TorOptions::with_choice(3, choice));
        // aug ∘ d_1 = 0: first-stage generators live in the augmentation ideal.
        let first = &res.stages[0].generators;
        for row in first {
            for entry in row {
                assert!(
                    alg.field().is_zero(&alg.apply_aug(entry)),
                    "first differential must land in the augmentation ideal"
                );
            }
        }
        // d_k ∘ d_{k+1} = 0 for the materialized stages.
        for w in res.stages.windows(2) {
            let (prev, next) = (&w[0].generators, &w[1].generators);
            for row in next {
                let mut acc = vec![alg.zero_elem(); prev[0].len()];
                for (entry, prev_row) in row.iter().zip(prev) {
                    for (slot, p) in acc.iter_mut().zip(prev_row) {
                        *slot = alg.add(slot, &alg.multiply(entry, p));
                    }
                }
                assert!(
                    acc.iter().all(|e| e.is_zero()),
                    "differentials must compose to zero"
                );
            }
        }
    }
}

// --- reporting --------------------------------------------------------------

#[test]
fn report_rendering_is_stable_and_informative() {
    let alg = tl(5, 2, 0);
    let r = tor_dims(&alg, 2);
    let once = r.to_string();
    let twice = r.to_string();
    assert_eq!(once, twice);
    assert!(once.contains("tl n=2 over F5"));
    assert!(once.contains("dims     = [1, 1, 1]"));
    assert!(once.contains("status   = complete"));
    assert!(once.contains("strategy = pruned"));
}

#[test]
fn tiny_caps_yield_flagged_prefix() {
    let alg = tl(5, 3, 1);
    let full = tor_dims(&alg, 3);
    assert!(full.complete());

    let mut opts = TorOptions::new(3);
    opts.caps = Some(ResourceCaps {
        max_module_cells: 5, // dim(TL_3) = 5, so one generator already busts it
        max_matrix_cells: 1 << 27,
        max_prune_ops: 20_000_000_000,
    });
    let capped = tor_dims_with(&alg, &opts);
    assert!(capped.flag.is_some(), "cap must be reported");
    assert!(!capped.complete());
    let through = capped.complete_through();
    assert!(through < 3);
    assert_eq!(
        capped.dims[..],
        full.dims[..=through],
        "partial answer must be a prefix of the full one"
    );
    assert!(!compare_reports(&capped, &full, 3));
    assert!(compare_reports(&capped, &full, through));
}

#[test]
fn compare_reports_behaves() {
    let a = tor_dims(&tl(5, 3, 0), 3);
    assert!(compare_reports(&a, &a, 3));
    let tiny = StructureAlgebra::build(fp(5), Family::GroupCyclic, 1, 1);
    let b = tor_dims(&tiny, 3);
    assert!(compare_reports(&a, &b, 3)); // both (1,0,0,0)
    let c = tor_dims(&tl(5, 2, 0), 3); // (1,1,1,1)
    assert!(!compare_reports(&a, &c, 1));
    assert!(compare_reports(&a, &c, 0));
}

#[test]
fn degree_zero_is_always_a_line() {
    for family in [Family::TemperleyLieb, Family::Brauer, Family::Jones] {
        for n in [2usize, 3] {
            for delta in [0u32, 1] {
                for p in [2u32, 5] {
                    let alg = StructureAlgebra::build(fp(p), family, n, delta);
                    let r = tor_dims(&alg, 1);
                    assert_eq!(r.dims[0], 1, "{family:?} n={n} delta={delta} p={p}");
                }
            }
        }
    }
}
