use algebra_core::{AlgebraError, StructureAlgebra};
use diagrams::pair_graph;
use exact_linalg::Field;

use crate::rcoeff::identity_index;

/// The pairing `⟨C_q, C_p⟩_τ` on the level-`t` link module: the coefficient
/// of `C_{p₁,q₂}^{τ}` in `C_{p₁,q}^{1} · C_{p,q₂}^{1}`, computed from one
/// product with the auxiliary states `p₁, q₂` fixed to the first state of the
/// level. Independence from that choice is a tested property, not an
/// assumption.
pub fn bilinear_form<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
    q: usize,
    p: usize,
    tau: usize,
) -> Result<F::Elem, AlgebraError> {
    let table = gram_table(alg, t)?;
    Ok(table.value(q, p, tau))
}

/// The full exact table of `⟨C_q, C_p⟩_τ` at one level.
///
/// Each `(q, p)` pair contributes at most one group element with nonzero
/// pairing (the product table has single-term entries), so the table stores
/// `(scalar, σ)` per pair and resolves `τ`-values on demand.
#[derive(Clone, Debug)]
pub struct GramTable<F: Field> {
    field: F,
    level: usize,
    state_count: usize,
    group_names: Vec<String>,
    /// `entries[q·|M| + p] = Some((c, σ index))` means the pairing is
    /// `c·χ_σ(τ)` with `c ≠ 0`; `None` means it is identically zero.
    entries: Vec<Option<(F::Elem, usize)>>,
}

impl<F: Field> GramTable<F> {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn group_size(&self) -> usize {
        self.group_names.len()
    }

    /// The compact form of row `q`, column `p`: `Some((c, σ))` for the pairing
    /// `c·χ_σ(τ)`, `None` when identically zero.
    pub fn entry(&self, q: usize, p: usize) -> Option<&(F::Elem, usize)> {
        self.entries[q * self.state_count + p].as_ref()
    }

    /// `⟨C_q, C_p⟩_τ` for the group element with index `tau`.
    pub fn value(&self, q: usize, p: usize, tau: usize) -> F::Elem {
        assert!(tau < self.group_names.len(), "group index out of range");
        match self.entry(q, p) {
            Some((c, sigma)) if *sigma == tau => c.clone(),
            _ => self.field.zero(),
        }
    }

    /// CSV export: one row per `q`, one column per `(p, τ)` pair, exact scalar
    /// rendering. Every cell is asserted comma-free.
    pub fn to_csv(&self) -> String {
        let m = self.state_count;
        let g = self.group_names.len();
        let mut out = String::from("q");
        for p in 0..m {
            for tau in &self.group_names {
                out.push_str(&format!(",p{p} τ={tau}"));
            }
        }
        out.push('\n');
        for q in 0..m {
            out.push_str(&format!("q{q}"));
            for p in 0..m {
                for tau in 0..g {
                    let cell = self.field.render(&self.value(q, p, tau));
                    assert!(!cell.contains(','), "scalar rendering must be comma-free: {cell}");
                    out.push(',');
                    out.push_str(&cell);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Compute the full Gram table at level `t`, one product per `(q, p)` pair.
pub fn gram_table<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
) -> Result<GramTable<F>, AlgebraError> {
    let ld = alg.level_data(t)?;
    let field = alg.field().clone();
    let gsize = ld.perms.len();
    let msize = ld.states.len();
    if msize == 0 {
        return Err(AlgebraError::NoSuchLevel(t));
    }
    let id = identity_index(&ld.perms);
    let p1 = 0;
    let q2 = 0;
    let mut entries = Vec::with_capacity(msize * msize);
    for q in 0..msize {
        for p in 0..msize {
            let i = ld.offset + (p1 * gsize + id) * msize + q;
            let j = ld.offset + (p * gsize + id) * msize + q2;
            let compact = match alg.prod_entry(i, j) {
                None => None,
                Some((loops, k)) => {
                    if alg.level_of_basis(k) != t {
                        None
                    } else {
                        let lk = alg.basis_label(k);
                        debug_assert_eq!((lk.p, lk.q), (p1, q2), "level-preserving product frame");
                        let c = alg.delta_pow(loops as usize);
                        if field.is_zero(&c) {
                            None
                        } else {
                            Some((c, lk.sigma))
                        }
                    }
                }
            };
            entries.push(compact);
        }
    }
    Ok(GramTable {
        field,
        level: t,
        state_count: msize,
        group_names: ld.perms.iter().map(|g| g.to_string()).collect(),
        entries,
    })
}

/// One witness for the pairing hypothesis at a level: a partner state `p` for
/// which the pair graph of `(q, p)` has exactly `t` pair components and
/// `δ^{loops}` is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerWitness {
    pub q: usize,
    pub p: usize,
    pub loops: usize,
}

/// Result of the witness search at one level: `holds` iff every state has a
/// witness. `witnesses[q]` is the first partner found for state `q`.
#[derive(Clone, Debug)]
pub struct DaggerReport {
    pub level: usize,
    pub holds: bool,
    pub witnesses: Vec<Option<DaggerWitness>>,
}

/// Check the pairing hypothesis at level `t`: every state `q` must admit a
/// partner `p` whose pairing with it is an invertible scalar times a single
/// group element — combinatorially, `pair_set_size(q, p) = t` and `δ^{loops}`
/// invertible in the coefficient field.
///
/// The search scans all `p` for each `q` and records the first witness.
pub fn check_hypothesis_dagger<F: Field>(
    alg: &StructureAlgebra<F>,
    t: usize,
) -> Result<DaggerReport, AlgebraError> {
    let ld = alg.level_data(t)?;
    let field = alg.field();
    let mut witnesses = Vec::with_capacity(ld.states.len());
    let mut holds = true;
    for (qi, q) in ld.states.iter().enumerate() {
        let mut found = None;
        for (pi, p) in ld.states.iter().enumerate() {
            let g = pair_graph(q, p);
            if g.pair_set_size() != t {
                continue;
            }
            let scalar = alg.delta_pow(g.loop_count);
            if field.inv(&scalar).is_some() {
                found = Some(DaggerWitness { q: qi, p: pi, loops: g.loop_count });
                break;
            }
        }
        holds &= found.is_some();
        witnesses.push(found);
    }
    Ok(DaggerReport { level: t, holds, witnesses })
}
