//! Seeded randomized consistency suite for the linear algebra kernel.
//!
//! Each case draws a random small matrix and cross-checks independent facts that a
//! correct implementation must satisfy simultaneously: structural validity of the
//! reduced echelon form, rank–nullity, kernel membership and independence, idempotence
//! of reduction, rank symmetry under transpose, solve-substitution, and agreement
//! between batch elimination and the incremental echelon tracker. All randomness is
//! seeded, so a reported failure is reproducible from its case number.

use crate::echelon::Echelon;
use crate::field::Field;
use crate::matrix::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub ring: String,
    pub cases: usize,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Structural check that `r` with pivot list `pivots` is a valid *fully reduced*
/// row echelon form: pivots strictly increase, pivot entries are 1 and alone in
/// their column, and all rows past the rank are zero.
pub fn is_reduced_echelon<F: Field>(m: &Matrix<F>, pivots: &[usize]) -> bool {
    let field = m.field().clone();
    for w in pivots.windows(2) {
        if w[0] >= w[1] {
            return false;
        }
    }
    for (k, &pc) in pivots.iter().enumerate() {
        // Leading entries before the pivot column must be zero.
        for j in 0..pc {
            if !field.is_zero(m.get(k, j)) {
                return false;
            }
        }
        if !field.is_one(m.get(k, pc)) {
            return false;
        }
        for i in 0..m.rows() {
            if i != k && !field.is_zero(m.get(i, pc)) {
                return false;
            }
        }
    }
    for i in pivots.len()..m.rows() {
        for j in 0..m.cols() {
            if !field.is_zero(m.get(i, j)) {
                return false;
            }
        }
    }
    true
}

/// Run `cases` randomized consistency cases over `field` with a fixed `seed`.
pub fn run_selftest<F: Field>(field: &F, cases: usize, seed: u64) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0u64;

    for case in 0..cases {
        let rows = rng.gen_range(1..=8usize);
        let cols = rng.gen_range(1..=8usize);
        let a = Matrix::from_fn(field.clone(), rows, cols, |_, _| {
            field.from_integer(rng.gen_range(-4..=4i64))
        });
        let mut fail = |msg: String| failures.push(format!("case {case} ({rows}x{cols}): {msg}"));

        let r = a.rref();

        // 1. Structural validity of the reduced form.
        checks += 1;
        if !is_reduced_echelon(&r.matrix, &r.pivots) {
            fail("rref output is not a valid reduced echelon form".into());
            continue;
        }

        // 2. Rank–nullity.
        let kernel = r.kernel_basis();
        checks += 1;
        if r.rank() + kernel.len() != cols {
            fail(format!("rank {} + nullity {} != cols {}", r.rank(), kernel.len(), cols));
        }

        // 3. Kernel vectors are killed by A and are linearly independent.
        let mut ech = Echelon::new(field.clone(), cols);
        for v in &kernel {
            checks += 1;
            if !a.apply(v).iter().all(|x| field.is_zero(x)) {
                fail("kernel basis vector not annihilated by the matrix".into());
            }
            checks += 1;
            if !ech.insert(v.clone()) {
                fail("kernel basis vectors are linearly dependent".into());
            }
        }

        // 4. Reduction is idempotent.
        let r2 = r.matrix.rref();
        checks += 1;
        if !(r2.matrix == r.matrix && r2.pivots == r.pivots) {
            fail("rref is not idempotent".into());
        }

        // 5. Row rank equals column rank.
        checks += 1;
        if a.transpose().rank() != r.rank() {
            fail("rank(A) != rank(A^T)".into());
        }

        // 6. Solve-substitution: b := A·x0 must be solvable and the solution must
        //    reproduce b exactly.
        let x0: Vec<F::Elem> =
            (0..cols).map(|_| field.from_integer(rng.gen_range(-4..=4i64))).collect();
        let b = a.apply(&x0);
        checks += 1;
        match a.solve(&b) {
            None => fail("solve reported inconsistent for a consistent system".into()),
            Some(x) => {
                if a.apply(&x) != b {
                    fail("solve returned a non-solution".into());
                }
            }
        }

        // 7. Incremental echelon agrees with batch elimination on rank.
        let mut ech2 = Echelon::new(field.clone(), cols);
        for i in 0..rows {
            ech2.insert(a.row(i).to_vec());
        }
        checks += 1;
        if ech2.rank() != r.rank() {
            fail(format!("echelon rank {} != rref rank {}", ech2.rank(), r.rank()));
        }
    }

    SelftestReport { ring: field.descriptor(), cases, checks, failures }
}
