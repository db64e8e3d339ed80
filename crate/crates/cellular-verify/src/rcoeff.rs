use std::collections::BTreeMap;

use algebra_core::{AlgebraElement, AlgebraError, StructureAlgebra};
use diagrams::Permutation;
use exact_linalg::{Field, Matrix};

/// The left-action coefficients `r_a(p', σ', p)` of one algebra element at one
/// level: the level-`λ` part of `a · C_{p,1,q₀}` reads off
/// `Σ_{p',σ'} r_a(p',σ',p) · C_{p',σ',q₀}`, and the axioms make the table
/// independent of the auxiliary `q₀` and of the wiring on the right factor.
///
/// Zero coefficients are not stored.
#[derive(Clone, Debug)]
pub struct RCoefficients<F: Field> {
    level: usize,
    /// `(p', images of σ', p) → coefficient`
    entries: BTreeMap<(usize, Vec<usize>, usize), F::Elem>,
}

impl<F: Field> RCoefficients<F> {
    pub fn level(&self) -> usize {
        self.level
    }

    /// `r_a(p', σ', p)`, zero when absent.
    pub fn get(&self, field: &F, p_prime: usize, sigma: &Permutation, p: usize) -> F::Elem {
        self.entries
            .get(&(p_prime, sigma.images().to_vec(), p))
            .cloned()
            .unwrap_or_else(|| field.zero())
    }

    /// All stored (nonzero) coefficients, in lexicographic key order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, Vec<usize>, usize), &F::Elem)> {
        self.entries.iter()
    }
}

/// Index of the identity wiring in a level's group list.
pub(crate) fn identity_index(perms: &[Permutation]) -> usize {
    perms
        .iter()
        .position(Permutation::is_identity)
        .expect("wiring groups always contain the identity")
}

/// Extract `r_a(·,·,·)` at level `t` for the basis element `a`, by multiplying
/// against `C_{p,1,q₀}` for every `p` and keeping the level-`t` terms.
pub fn extract_r<F: Field>(
    alg: &StructureAlgebra<F>,
    a: usize,
    t: usize,
) -> Result<RCoefficients<F>, AlgebraError> {
    let ld = alg.level_data(t)?;
    let gsize = ld.perms.len();
    let msize = ld.states.len();
    let id = identity_index(&ld.perms);
    let mut entries = BTreeMap::new();
    for p in 0..msize {
        let j = ld.offset + (p * gsize + id) * msize;
        if let Some((loops, k)) = alg.prod_entry(a, j) {
            if alg.level_of_basis(k) != t {
                continue;
            }
            let coeff = alg.delta_pow(loops as usize);
            if alg.field().is_zero(&coeff) {
                continue;
            }
            let lk = alg.basis_label(k);
            entries.insert((lk.p, ld.perms[lk.sigma].images().to_vec(), p), coeff);
        }
    }
    Ok(RCoefficients { level: t, entries })
}

/// The matrix of `a` acting on the link module at level `t`: the free module
/// on the level's states, with `a · C_p = Σ_{σ',p'} r_a(p',σ',p) · C_{p'}`.
/// Entry `(p', p)` is `Σ_{σ'} r_a(p', σ', p)`, extended linearly over the
/// terms of `a`.
pub fn link_module_matrix<F: Field>(
    alg: &StructureAlgebra<F>,
    a: &AlgebraElement<F>,
    t: usize,
) -> Result<Matrix<F>, AlgebraError> {
    let ld = alg.level_data(t)?;
    let field = alg.field().clone();
    let gsize = ld.perms.len();
    let msize = ld.states.len();
    let id = identity_index(&ld.perms);
    let mut mat = Matrix::zeros(field.clone(), msize, msize);
    for (i, c) in a.terms() {
        for p in 0..msize {
            let j = ld.offset + (p * gsize + id) * msize;
            if let Some((loops, k)) = alg.prod_entry(i, j) {
                if alg.level_of_basis(k) != t {
                    continue;
                }
                let lk = alg.basis_label(k);
                let term = field.mul(c, &alg.delta_pow(loops as usize));
                let acc = field.add(mat.get(lk.p, p), &term);
                mat.set(lk.p, p, acc);
            }
        }
    }
    Ok(mat)
}

/// The structure scalar `s(σ₁, q₁, p₂, τ)`: the coefficient of
/// `C_{p₁,q₂}^{τ}` in `C_{p₁,q₁}^{σ₁} · C_{p₂,q₂}^{1}`, with the auxiliary
/// states `p₁, q₂` fixed to the first state of the level (independence of that
/// choice is a tested property).
pub fn s_function<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    sigma1: usize,
    q1: usize,
    p2: usize,
    tau: &Permutation,
) -> Result<F::Elem, AlgebraError> {
    let ld = alg.level_data(t)?;
    let field = alg.field();
    let gsize = ld.perms.len();
    let msize = ld.states.len();
    let id = identity_index(&ld.perms);
    let p1 = 0;
    let q2 = 0;
    let i = ld.offset + (p1 * gsize + sigma1) * msize + q1;
    let j = ld.offset + (p2 * gsize + id) * msize + q2;
    let Some((loops, k)) = alg.prod_entry(i, j) else {
        return Ok(field.zero());
    };
    if alg.level_of_basis(k) != t {
        return Ok(field.zero());
    }
    let lk = alg.basis_label(k);
    if lk.p != p1 || lk.q != q2 || ld.perms[lk.sigma] != *tau {
        return Ok(field.zero());
    }
    Ok(alg.delta_pow(loops as usize))
}
