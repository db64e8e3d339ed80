//! The free-resolution stage loop.
//!
//! A left free resolution of the trivial module is built stage by stage.
//! `F_k = A^{g_k}` with coordinates `(j, a)` — generator index `j`, basis
//! element `a` — and the differential sends the `j`-th generator to a row
//! `D_k[j]` of `g_{k−1}` algebra elements. The induced linear map is
//! `v ↦ Σ_j v_j · D_k[j]` with the algebra coefficient acting on the left, so
//! its matrix column at `(j, a)` holds the coordinates of `a · D_k[j]`. Each
//! stage's generators are a spanning set of the previous kernel, which makes
//! the resolution exact by construction; the engine asserts the resulting
//! rank identities at every stage rather than trusting them.
//!
//! Applying the augmentation entrywise collapses `F_k` to `field^{g_k}`.
//! The augmented differential of the *next* stage is read directly off the
//! reduced row echelon form of the current stage matrix — kernel vectors are
//! `v_f[pos] = 1` at the free column `f`, `−R[row(pos)][f]` at pivot columns —
//! so the final kernel, which can be large, is never materialized.

use algebra_core::{AlgebraElement, StructureAlgebra};
use exact_linalg::{Field, Matrix, RrefResult};

use crate::report::{GeneratorChoice, TorReport};

/// Deterministic resource ceilings. Exceeding one never aborts: the run stops
/// at the last fully computed degree and the report is flagged with the
/// reason, so a too-large instance degrades into an honest partial answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResourceCaps {
    /// Coordinate size `dim(A)·g_k` of any free stage actually built.
    pub max_module_cells: usize,
    /// Working cells `(dim·g_{k−1}) · (dim·g_k)` of one stage's elimination.
    pub max_matrix_cells: u128,
    /// Estimated field operations of one greedy prune. Past this, the stage
    /// falls back to the full kernel basis and the two caps above decide.
    pub max_prune_ops: u128,
}

impl ResourceCaps {
    /// Default ceilings for a coefficient field: rationals carry arbitrary-
    /// precision entries, so their budgets are much smaller than a prime
    /// field's.
    pub fn for_ring<F: Field>(field: &F) -> Self {
        if field.characteristic() == 0 {
            ResourceCaps {
                max_module_cells: 100_000,
                max_matrix_cells: 1 << 22,
                max_prune_ops: 1_000_000_000,
            }
        } else {
            ResourceCaps {
                max_module_cells: 2_000_000,
                max_matrix_cells: 1 << 27,
                max_prune_ops: 100_000_000_000,
            }
        }
    }
}

/// Options for a Tor run.
#[derive(Clone, Debug)]
pub struct TorOptions {
    /// Largest degree to compute (inclusive).
    pub qmax: usize,
    /// How kernel spanning sets become stage generators.
    pub choice: GeneratorChoice,
    /// Resource ceilings; `None` picks [`ResourceCaps::for_ring`] defaults.
    pub caps: Option<ResourceCaps>,
}

impl TorOptions {
    pub fn new(qmax: usize) -> Self {
        TorOptions {
            qmax,
            choice: GeneratorChoice::Pruned,
            caps: None,
        }
    }

    pub fn with_choice(qmax: usize, choice: GeneratorChoice) -> Self {
        TorOptions {
            qmax,
            choice,
            caps: None,
        }
    }
}

impl Default for TorOptions {
    fn default() -> Self {
        TorOptions::new(3)
    }
}

/// One stage of a free resolution: `generators[j][c]` is the image of the
/// `j`-th generator in component `c` of the previous free module.
#[derive(Clone, Debug)]
pub struct FreeResolutionStage<F: Field> {
    pub generators: Vec<Vec<AlgebraElement<F>>>,
}

impl<F: Field> FreeResolutionStage<F> {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

/// A computed resolution: the materialized stages `D_1, D_2, …` (one per
/// degree the engine had to build a stage matrix for) and the report.
#[derive(Debug)]
pub struct Resolution<F: Field> {
    pub stages: Vec<FreeResolutionStage<F>>,
    pub report: TorReport,
}

/// `dim Tor_q(𝕥, 𝕥)` for `q ≤ qmax` with default options (greedy pruning,
/// ring-dependent resource caps).
pub fn tor_dims<F: Field>(alg: &StructureAlgebra<F>, qmax: usize) -> TorReport {
    tor_dims_with(alg, &TorOptions::new(qmax))
}

/// `dim Tor_q(𝕥, 𝕥)` for `q ≤ qmax` with explicit options.
pub fn tor_dims_with<F: Field>(alg: &StructureAlgebra<F>, opts: &TorOptions) -> TorReport {
    free_resolution(alg, opts).report
}

/// Build the resolution and report. The stages returned are the ones whose
/// differential matrices were actually formed (`D_1 … D_k` with `k ≤ qmax`);
/// the last kernel is only ever read through the augmentation.
pub fn free_resolution<F: Field>(alg: &StructureAlgebra<F>, opts: &TorOptions) -> Resolution<F> {
    let field = alg.field().clone();
    let dim = alg.dim();
    let caps = opts
        .caps
        .clone()
        .unwrap_or_else(|| ResourceCaps::for_ring(&field));
    assert!(
        field.is_one(&alg.apply_aug(&alg.unit_elem())),
        "the augmentation must send the unit to 1"
    );

    // The augmentation as a linear functional on A, and its support.
    let aug_vec: Vec<F::Elem> = (0..dim).map(|i| alg.apply_aug(&alg.basis_elem(i))).collect();
    let aug_support: Vec<(usize, F::Elem)> = aug_vec
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, w)| !field.is_zero(w))
        .collect();

    let mut gen_counts = vec![1usize];
    // aug_mats[i] is the augmented differential in degree i+1
    // (rows: g_i, columns: g_{i+1}).
    let mut aug_mats: Vec<Matrix<F>> = Vec::new();
    let mut stages: Vec<FreeResolutionStage<F>> = Vec::new();
    let mut flag: Option<String> = None;
    let mut notes: Vec<String> = Vec::new();

    // Stage 0: F_0 = A augmenting onto the trivial module; its matrix is the
    // single row of augmentation values.
    let mut rref = {
        let mut m = Matrix::from_fn(field.clone(), 1, dim, |_, a| aug_vec[a].clone());
        let pivots = m.rref_in_place();
        RrefResult { matrix: m, pivots }
    };

    for k in 0..=opts.qmax {
        let g_k = gen_counts[k];
        debug_assert_eq!(rref.matrix.cols(), dim * g_k);
        let kernel_dim = rref.matrix.cols() - rref.rank();
        let need_next_stage = k < opts.qmax;

        // Choose the next stage's generators among the kernel basis vectors.
        // The last kernel is never materialized, so pruning it would buy
        // nothing; any spanning set gives the same homology.
        let mut order: Vec<usize> = rref.free_cols();
        if need_next_stage {
            match opts.choice {
                GeneratorChoice::Full => {}
                GeneratorChoice::Reversed => order.reverse(),
                GeneratorChoice::Pruned => {
                    match prune_generators(alg, &rref, &order, &caps) {
                        Ok(kept) => order = kept,
                        Err(note) => notes.push(format!("stage {}: {note}", k + 1)),
                    }
                }
            }
        }

        aug_mats.push(aug_matrix_from_kernel(
            &field,
            &rref,
            &order,
            g_k,
            dim,
            &aug_support,
        ));
        gen_counts.push(order.len());

        if !need_next_stage {
            break;
        }

        let gens = materialize_generators(alg, &rref, &order, g_k);
        #[cfg(debug_assertions)]
        if let Some(prev) = stages.last() {
            assert_composite_zero(alg, &gens, &prev.generators);
        }

        // Resource ceilings for the elimination this stage requires.
        let g_next = order.len();
        let module_cells = dim * g_next;
        let matrix_cells = (dim as u128 * g_k as u128) * (dim as u128 * g_next as u128);
        if module_cells > caps.max_module_cells {
            flag = Some(format!(
                "stage {} needs {} coordinates (dim {} × {} generators), over the {} cap",
                k + 1,
                module_cells,
                dim,
                g_next,
                caps.max_module_cells
            ));
            break;
        }
        if matrix_cells > caps.max_matrix_cells {
            flag = Some(format!(
                "stage {} elimination needs {} working cells, over the {} cap",
                k + 1,
                matrix_cells,
                caps.max_matrix_cells
            ));
            break;
        }

        let mut m = build_stage_matrix(alg, &gens, g_k);
        let pivots = m.rref_in_place();
        rref = RrefResult { matrix: m, pivots };
        // Exactness certificate: the image of the stage just built must fill
        // the kernel its generators were drawn from.
        assert_eq!(
            rref.rank(),
            kernel_dim,
            "stage image must equal the previous kernel"
        );
        stages.push(FreeResolutionStage { generators: gens });
    }

    // The augmented complex in degree 1 kills everything: its generators are
    // kernel vectors of the augmentation itself.
    assert!(
        (0..aug_mats[0].rows())
            .all(|r| (0..aug_mats[0].cols()).all(|c| field.is_zero(aug_mats[0].get(r, c)))),
        "the augmentation composed with the first differential must vanish"
    );

    // Tor_q = g_q − rank(aug d_q) − rank(aug d_{q+1}), with aug d_0 = 0.
    let ranks: Vec<usize> = aug_mats.iter().map(|m| m.rank()).collect();
    let through = aug_mats.len() - 1;
    let mut dims = Vec::with_capacity(through + 1);
    for q in 0..=through {
        let r_q = if q == 0 { 0 } else { ranks[q - 1] };
        let r_q1 = ranks[q];
        let d = gen_counts[q]
            .checked_sub(r_q + r_q1)
            .expect("augmented differentials must compose to zero");
        dims.push(d);
    }
    assert_eq!(dims[0], 1, "Tor_0 of an augmented algebra must be a line");

    let report = TorReport {
        ring: field.descriptor(),
        algebra: algebra_descriptor(alg),
        qmax: opts.qmax,
        dims,
        generator_counts: gen_counts,
        strategy: opts.choice.name().to_string(),
        flag,
        notes,
    };
    Resolution { stages, report }
}

fn algebra_descriptor<F: Field>(alg: &StructureAlgebra<F>) -> String {
    let field = alg.field();
    let mut s = format!(
        "{} n={} over {} (δ = {}); dim {}",
        alg.family().name(),
        alg.strand_count(),
        field.descriptor(),
        field.render(alg.delta()),
        alg.dim()
    );
    if !alg.removed_levels().is_empty() {
        s.push_str(&format!("; levels removed: {:?}", alg.removed_levels()));
    }
    s
}

/// The augmented differential of the next stage, read off the reduced form
/// without materializing kernel vectors: rows are the current stage's
/// generators, columns the chosen kernel vectors.
fn aug_matrix_from_kernel<F: Field>(
    field: &F,
    rref: &RrefResult<F>,
    order: &[usize],
    g_k: usize,
    dim: usize,
    aug_support: &[(usize, F::Elem)],
) -> Matrix<F> {
    let mut pivot_row = vec![usize::MAX; rref.matrix.cols()];
    for (r, &pc) in rref.pivots.iter().enumerate() {
        pivot_row[pc] = r;
    }
    Matrix::from_fn(field.clone(), g_k, order.len(), |c, jj| {
        let f = order[jj];
        let mut acc = field.zero();
        for (i, w) in aug_support {
            let pos = c * dim + i;
            let v = if pos == f {
                field.one()
            } else if pivot_row[pos] != usize::MAX {
                field.neg(rref.matrix.get(pivot_row[pos], f))
            } else {
                field.zero()
            };
            if !field.is_zero(&v) {
                acc = field.add(&acc, &field.mul(&v, w));
            }
        }
        acc
    })
}

/// Materialize chosen kernel vectors as rows of algebra elements.
fn materialize_generators<F: Field>(
    alg: &StructureAlgebra<F>,
    rref: &RrefResult<F>,
    order: &[usize],
    g_k: usize,
) -> Vec<Vec<AlgebraElement<F>>> {
    let field = alg.field();
    let dim = alg.dim();
    order
        .iter()
        .map(|&f| {
            let mut comps: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); g_k];
            comps[f / dim].push((f % dim, field.one()));
            for (r, &pc) in rref.pivots.iter().enumerate() {
                let e = rref.matrix.get(r, f);
                if !field.is_zero(e) {
                    comps[pc / dim].push((pc % dim, field.neg(e)));
                }
            }
            comps
                .into_iter()
                .map(|terms| alg.from_terms(&terms))
                .collect()
        })
        .collect()
}

/// The matrix of `v ↦ Σ_j v_j · D[j]` on coordinates: rows are codomain
/// coordinates `(c, target)`, columns domain coordinates `(j, a)`.
fn build_stage_matrix<F: Field>(
    alg: &StructureAlgebra<F>,
    gens: &[Vec<AlgebraElement<F>>],
    g_k: usize,
) -> Matrix<F> {
    let field = alg.field().clone();
    let dim = alg.dim();
    let rows = dim * g_k;
    let cols = dim * gens.len();
    let mut m = Matrix::zeros(field.clone(), rows, cols);
    for (j, gen) in gens.iter().enumerate() {
        for (c, entry) in gen.iter().enumerate() {
            for (t_idx, coeff) in entry.terms() {
                for a in 0..dim {
                    if let Some((loops, target)) = alg.prod_entry(a, t_idx) {
                        let w = field.mul(coeff, &alg.delta_pow(loops as usize));
                        if field.is_zero(&w) {
                            continue;
                        }
                        let row = c * dim + target;
                        let col = j * dim + a;
                        let cur = field.add(m.get(row, col), &w);
                        m.set(row, col, cur);
                    }
                }
            }
        }
    }
    m
}

/// Greedy spanning-set minimization: walk the kernel basis in elimination
/// order, drop a vector when it already lies in the module span of the kept
/// ones, and close that span under the left action of every basis element.
/// The kept set still generates the whole kernel as a module — every dropped
/// vector lies in the span of vectors kept before it — so exactness is
/// preserved. Returns the kept free columns, or the reason pruning was
/// skipped.
fn prune_generators<F: Field>(
    alg: &StructureAlgebra<F>,
    rref: &RrefResult<F>,
    order: &[usize],
    caps: &ResourceCaps,
) -> Result<Vec<usize>, String> {
    let field = alg.field().clone();
    let dim = alg.dim();
    let width = rref.matrix.cols();
    let kappa = order.len() as u128;
    let estimate = kappa * kappa * (kappa + dim as u128) / 2;
    if estimate > caps.max_prune_ops {
        return Err(format!(
            "greedy pruning skipped: estimated {estimate} field operations exceed the {} cap; \
             using the full kernel basis",
            caps.max_prune_ops
        ));
    }

    // Candidates whose free coordinate sits at a high level go first: their
    // cyclic modules are the largest (top-level basis elements are closest to
    // units), so the greedy walk saturates the kernel with far fewer picks
    // than elimination order would. The tie-break keeps the walk
    // deterministic.
    let mut ranked: Vec<usize> = order.to_vec();
    ranked.sort_by_key(|&f| (std::cmp::Reverse(alg.basis_label(f % dim).level), f));

    let target_rank = order.len();
    let mut echelon = Echelon::new(field.clone(), width);
    let mut kept = Vec::new();
    for &f in &ranked {
        if echelon.rank() == target_rank {
            break; // the module span already fills the kernel
        }
        let v = kernel_vector_dense(&field, rref, f);
        let mut probe = v.clone();
        if echelon.reduce(&mut probe).is_none() {
            continue; // already in the span of vectors kept so far
        }
        kept.push(f);
        // Close the span under the algebra action.
        for a in 0..dim {
            echelon.insert(left_translate(alg, &v, a));
            if echelon.rank() == target_rank {
                break;
            }
        }
    }
    Ok(kept)
}

/// Dense coordinates of the kernel vector at free column `f`.
fn kernel_vector_dense<F: Field>(field: &F, rref: &RrefResult<F>, f: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); rref.matrix.cols()];
    v[f] = field.one();
    for (r, &pc) in rref.pivots.iter().enumerate() {
        let e = rref.matrix.get(r, f);
        if !field.is_zero(e) {
            v[pc] = field.neg(e);
        }
    }
    v
}

/// Coordinates of `a · v` where `v` is a coordinate vector of `A^{g}` and `a`
/// a basis element acting componentwise on the left.
fn left_translate<F: Field>(alg: &StructureAlgebra<F>, v: &[F::Elem], a: usize) -> Vec<F::Elem> {
    let field = alg.field();
    let dim = alg.dim();
    let mut out = vec![field.zero(); v.len()];
    for (pos, x) in v.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        let (c, b) = (pos / dim, pos % dim);
        if let Some((loops, target)) = alg.prod_entry(a, b) {
            let w = field.mul(x, &alg.delta_pow(loops as usize));
            if !field.is_zero(&w) {
                let slot = c * dim + target;
                out[slot] = field.add(&out[slot], &w);
            }
        }
    }
    out
}

/// Incremental forward row echelon accumulator used by the greedy prune.
/// Rows are normalized to a leading 1; entries before a row's pivot are zero,
/// entries after it are not back-substituted (membership testing only needs
/// forward reduction).
struct Echelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivot_of_col: Vec<usize>, // usize::MAX = no pivot in that column
}

impl<F: Field> Echelon<F> {
    fn new(field: F, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivot_of_col: vec![usize::MAX; width],
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Forward-reduce `v` in place; returns the column of its leading nonzero
    /// after reduction, or `None` when `v` lies in the row space.
    fn reduce(&self, v: &mut [F::Elem]) -> Option<usize> {
        let mut lead = None;
        for col in 0..self.width {
            if self.field.is_zero(&v[col]) {
                continue;
            }
            let r = self.pivot_of_col[col];
            if r == usize::MAX {
                if lead.is_none() {
                    lead = Some(col);
                }
                continue;
            }
            let c = self.field.neg(&v[col]);
            self.field.axpy(&mut v[col..], &c, &self.rows[r][col..]);
        }
        lead
    }

    /// Insert `v` if independent of the rows held; returns whether it was.
    fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        match self.reduce(&mut v) {
            None => false,
            Some(lead) => {
                let inv = self
                    .field
                    .inv(&v[lead])
                    .expect("leading entry of a nonzero remainder is invertible");
                self.field.scale_in_place(&mut v[lead..], &inv);
                self.pivot_of_col[lead] = self.rows.len();
                self.rows.push(v);
                true
            }
        }
    }
}

/// Consecutive differentials compose to zero: `Σ_c next[j][c] · prev[c][e]`
/// vanishes for every generator `j` and target component `e`.
#[cfg(debug_assertions)]
fn assert_composite_zero<F: Field>(
    alg: &StructureAlgebra<F>,
    next: &[Vec<AlgebraElement<F>>],
    prev: &[Vec<AlgebraElement<F>>],
) {
    let g_prev_out = prev.first().map_or(0, |row| row.len());
    for row in next {
        let mut acc = vec![alg.zero_elem(); g_prev_out];
        for (entry, prev_row) in row.iter().zip(prev) {
            for (slot, p) in acc.iter_mut().zip(prev_row) {
                *slot = alg.add(slot, &alg.multiply(entry, p));
            }
        }
        assert!(
            acc.iter().all(|e| e.is_zero()),
            "consecutive differentials must compose to zero"
        );
    }
}
