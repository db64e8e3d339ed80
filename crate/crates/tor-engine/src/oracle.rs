//! Independent check values: the group algebra of a cyclic group has a
//! 2-periodic free resolution of the trivial module,
//!
//! ```text
//!   ⋯ → A --·N--> A --·(g−1)--> A --ε--> 𝕥 → 0,      N = 1 + g + ⋯ + g^{n−1},
//! ```
//!
//! alternating right multiplication by `g − 1` and by the norm element. This
//! module builds both multiplication matrices on the group basis, *verifies*
//! the complex is exact (composites vanish and the two ranks are
//! complementary), and reads the Tor dimensions off the augmented values
//! `ε(g − 1) = 0` and `ε(N) = n·1`. Nothing here touches the resolution
//! engine, so agreement between the two is a genuine cross-check.

use exact_linalg::{Field, Matrix};

use crate::report::TorReport;

/// `dim Tor_q(𝕥, 𝕥)` over the group algebra of the cyclic group of order
/// `n ≥ 1`, for `q ≤ qmax`, via the 2-periodic resolution.
pub fn cyclic_group_oracle<F: Field>(field: F, n: usize, qmax: usize) -> TorReport {
    assert!(n >= 1, "cyclic group order must be positive");

    // Right multiplication by g − 1 and by the norm on the basis 1, g, …,
    // g^{n−1}: column j holds the coordinates of g^j · (element).
    let t = Matrix::from_fn(field.clone(), n, n, |i, j| {
        let mut e = field.zero();
        if i == (j + 1) % n {
            e = field.add(&e, &field.one());
        }
        if i == j {
            e = field.sub(&e, &field.one());
        }
        e
    });
    let norm = Matrix::from_fn(field.clone(), n, n, |_, _| field.one());

    // The complex really is a complex, and really is exact.
    let is_zero_matrix = |m: &Matrix<F>| {
        (0..m.rows()).all(|r| (0..m.cols()).all(|c| field.is_zero(m.get(r, c))))
    };
    assert!(
        is_zero_matrix(&t.mul(&norm)) && is_zero_matrix(&norm.mul(&t)),
        "periodic differentials must compose to zero"
    );
    let rank_t = t.rank();
    let rank_norm = norm.rank();
    assert_eq!(
        rank_t + rank_norm,
        n,
        "periodic resolution must be exact at interior stages"
    );
    assert_eq!(
        rank_t,
        n - 1,
        "image of g − 1 must fill the augmentation ideal"
    );

    // Augmented differentials are 1×1: the augmentation of the multiplier.
    // Column sums of a multiplication matrix all equal that augmentation.
    let column_sum = |m: &Matrix<F>| {
        let mut acc = field.zero();
        for r in 0..m.rows() {
            acc = field.add(&acc, m.get(r, 0));
        }
        acc
    };
    let aug_t = column_sum(&t);
    let aug_norm = column_sum(&norm);
    assert!(
        field.is_zero(&aug_t),
        "g − 1 must lie in the augmentation ideal"
    );

    // r_q = rank of the augmented differential in degree q (1×1 here).
    let rank_aug = |q: usize| -> usize {
        if q == 0 {
            0
        } else if q % 2 == 1 {
            usize::from(!field.is_zero(&aug_t)) // always 0, kept for shape
        } else {
            usize::from(!field.is_zero(&aug_norm))
        }
    };
    let dims: Vec<usize> = (0..=qmax)
        .map(|q| {
            1usize
                .checked_sub(rank_aug(q) + rank_aug(q + 1))
                .expect("augmented periodic differentials must compose to zero")
        })
        .collect();

    TorReport {
        ring: field.descriptor(),
        algebra: format!("group algebra of the cyclic group of order {n}"),
        qmax,
        dims,
        generator_counts: vec![1; qmax + 2],
        strategy: "periodic".to_string(),
        flag: None,
        notes: Vec::new(),
    }
}
