//! Structure-constant algebras over diagram bases.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};

use diagrams::{BrauerDiagram, LinkState, LinkStateOrder, Permutation};
use exact_linalg::Field;
use par_shim::prelude::*;
use serde_json::{json, Value};

use crate::{AlgebraElement, AlgebraError, Family};

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

/// Sentinel in the product table for "annihilated in this quotient".
const KILLED: u32 = u32::MAX;

/// One level of the basis: all diagrams with `t` through-strands.
#[derive(Debug, Clone)]
pub struct LevelData {
    /// Number of through-strands.
    pub t: usize,
    /// Admissible link states at this level, in enumeration order.
    pub states: Vec<LinkState>,
    /// The wiring group, identity first.
    pub perms: Vec<Permutation>,
    /// Basis index of the first element at this level.
    pub offset: usize,
}

impl LevelData {
    /// Number of basis elements at this level.
    pub fn block_size(&self) -> usize {
        self.states.len() * self.states.len() * self.perms.len()
    }
}

/// The coordinates of a basis element: level `t` and indices of `(p, σ, q)`
/// within that level's state and group lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisLabel {
    pub level: usize,
    pub p: usize,
    pub sigma: usize,
    pub q: usize,
}

/// A finite-dimensional algebra presented by a diagram basis and the full
/// product table `C_i · C_j = δ^{loops(i,j)} · C_{target(i,j)}`.
///
/// Basis order: levels ascending by through-strand count `t`; within a level,
/// index `offset + (p·|G| + σ)·|M| + q` for `p, σ, q` in enumeration order.
#[derive(Debug)]
pub struct StructureAlgebra<F: Field> {
    id: u64,
    field: F,
    family: Family,
    n: usize,
    delta: F::Elem,
    removed_levels: Vec<usize>,
    levels: Vec<LevelData>,
    dim: usize,
    diagrams: Vec<BrauerDiagram>,
    prod_loops: Vec<u8>,
    prod_target: Vec<u32>,
    delta_pows: Vec<F::Elem>,
    star_idx: Vec<u32>,
    unit_idx: usize,
}

impl<F: Field> StructureAlgebra<F> {
    /// Build the full algebra of the given family on `n` strands.
    pub fn build(field: F, family: Family, n: usize, delta: F::Elem) -> Self {
        Self::build_capped(field, family, n, delta, usize::MAX)
            .expect("uncapped build cannot hit the dimension cap")
    }

    /// Build, failing cleanly if the dimension would exceed `max_dim`.
    pub fn build_capped(
        field: F,
        family: Family,
        n: usize,
        delta: F::Elem,
        max_dim: usize,
    ) -> Result<Self, AlgebraError> {
        let mut levels = Vec::new();
        let mut offset = 0usize;
        for t in family.levels(n) {
            let states = LinkState::enumerate(n, t, family.state_class());
            let perms = family.group(t);
            let ld = LevelData { t, states, perms, offset };
            offset += ld.block_size();
            levels.push(ld);
        }
        let dim = offset;
        if dim > max_dim {
            return Err(AlgebraError::DimensionCap { dim, cap: max_dim });
        }

        let diagrams: Vec<BrauerDiagram> = levels
            .iter()
            .flat_map(|ld| {
                let mut block = Vec::with_capacity(ld.block_size());
                for p in &ld.states {
                    for sigma in &ld.perms {
                        for q in &ld.states {
                            block.push(
                                BrauerDiagram::assemble(p, sigma, q)
                                    .expect("level data is internally consistent"),
                            );
                        }
                    }
                }
                block
            })
            .collect();

        let lookup = Lookup::new(&levels);
        let rows: Vec<Vec<(u8, u32)>> = (0..dim)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::with_capacity(dim);
                for j in 0..dim {
                    let r = diagrams::concat(&diagrams[i], &diagrams[j]);
                    let loops = u8::try_from(r.loops).expect("loop count fits in u8");
                    let target = lookup.index_of_diagram(&levels, &r.diagram).unwrap_or_else(|| {
                        panic!(
                            "{} products must stay inside the family: {} · {}",
                            Family::name(family),
                            diagrams[i],
                            diagrams[j]
                        )
                    });
                    row.push((loops, target as u32));
                }
                row
            })
            .collect();
        let mut prod_loops = Vec::with_capacity(dim * dim);
        let mut prod_target = Vec::with_capacity(dim * dim);
        for row in rows {
            for (l, t) in row {
                prod_loops.push(l);
                prod_target.push(t);
            }
        }

        let star_idx: Vec<u32> = (0..dim)
            .map(|i| {
                let s = diagrams[i].star();
                let j = lookup
                    .index_of_diagram(&levels, &s)
                    .expect("star of a basis diagram is a basis diagram");
                assert_eq!(diagrams[j], s);
                j as u32
            })
            .collect();

        let top = levels.last().expect("at least one level");
        let all = LinkState::all_defects(n);
        let unit_idx = lookup
            .index_of(&levels, top.t, &all, &Permutation::identity(n), &all)
            .expect("identity diagram is in the basis");

        let max_loops = prod_loops.iter().copied().max().unwrap_or(0) as usize;
        let mut delta_pows = vec![field.one()];
        for _ in 0..max_loops {
            let last = delta_pows.last().expect("nonempty").clone();
            delta_pows.push(field.mul(&last, &delta));
        }

        let alg = StructureAlgebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            field,
            family,
            n,
            delta,
            removed_levels: Vec::new(),
            levels,
            dim,
            diagrams,
            prod_loops,
            prod_target,
            delta_pows,
            star_idx,
            unit_idx,
        };
        debug_assert!(alg.unit_is_neutral());
        Ok(alg)
    }

    fn unit_is_neutral(&self) -> bool {
        (0..self.dim).all(|i| {
            self.prod_entry(self.unit_idx, i) == Some((0, i))
                && self.prod_entry(i, self.unit_idx) == Some((0, i))
        })
    }

    /// The quotient by the twosided ideal spanned by the levels in `removed`,
    /// which must be a proper downward-closed set of levels (a strict prefix
    /// of the ascending level list).
    pub fn quotient_below(&self, removed: &[usize]) -> Result<Self, AlgebraError> {
        let values = self.level_values();
        let mut removed: Vec<usize> = removed.to_vec();
        removed.sort_unstable();
        removed.dedup();
        if removed.len() >= values.len() || removed[..] != values[..removed.len()] {
            return Err(AlgebraError::BadLevelSet(removed));
        }

        let keep_from = self
            .levels
            .iter()
            .position(|ld| !removed.contains(&ld.t))
            .expect("quotient is proper");
        let drop_count: usize = self.levels[..keep_from].iter().map(LevelData::block_size).sum();

        let mut levels = Vec::with_capacity(self.levels.len() - keep_from);
        let mut offset = 0;
        for ld in &self.levels[keep_from..] {
            let mut ld = ld.clone();
            ld.offset = offset;
            offset += ld.block_size();
            levels.push(ld);
        }
        let dim = offset;
        let remap = |old: u32| -> u32 {
            if old == KILLED || (old as usize) < drop_count {
                KILLED
            } else {
                old - drop_count as u32
            }
        };

        let mut prod_loops = Vec::with_capacity(dim * dim);
        let mut prod_target = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let old = (i + drop_count) * self.dim + (j + drop_count);
                let t = remap(self.prod_target[old]);
                prod_target.push(t);
                prod_loops.push(if t == KILLED { 0 } else { self.prod_loops[old] });
            }
        }

        let star_idx: Vec<u32> = (0..dim)
            .map(|i| {
                let s = remap(self.star_idx[i + drop_count]);
                assert_ne!(s, KILLED, "star preserves levels");
                s
            })
            .collect();

        let max_loops = prod_loops.iter().copied().max().unwrap_or(0) as usize;
        let delta_pows = self.delta_pows[..=max_loops].to_vec();

        let mut removed_levels = self.removed_levels.clone();
        removed_levels.extend(self.levels[..keep_from].iter().map(|ld| ld.t));
        removed_levels.sort_unstable();
        removed_levels.dedup();

        Ok(StructureAlgebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            field: self.field.clone(),
            family: self.family,
            n: self.n,
            delta: self.delta.clone(),
            removed_levels,
            levels,
            dim,
            diagrams: self.diagrams[drop_count..].to_vec(),
            prod_loops,
            prod_target,
            delta_pows,
            star_idx,
            unit_idx: self.unit_idx - drop_count,
        })
    }

    /// Quotient by everything strictly below `lambda`: the smallest quotient
    /// in which `lambda` is the minimal level.
    pub fn minimal_level_quotient(&self, lambda: usize) -> Result<Self, AlgebraError> {
        if !self.level_values().contains(&lambda) {
            return Err(AlgebraError::NoSuchLevel(lambda));
        }
        let below: Vec<usize> =
            self.level_values().into_iter().filter(|&t| t < lambda).collect();
        self.quotient_below(&below)
    }

    // ------------------------------------------------------------------
    // Introspection.
    // ------------------------------------------------------------------

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn strand_count(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> &F::Elem {
        &self.delta
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Levels removed from the full algebra to obtain this one (empty for a
    /// full algebra).
    pub fn removed_levels(&self) -> &[usize] {
        &self.removed_levels
    }

    /// The surviving levels, ascending.
    pub fn levels(&self) -> &[LevelData] {
        &self.levels
    }

    /// The surviving level values, ascending.
    pub fn level_values(&self) -> Vec<usize> {
        self.levels.iter().map(|ld| ld.t).collect()
    }

    pub fn level_data(&self, t: usize) -> Result<&LevelData, AlgebraError> {
        self.levels.iter().find(|ld| ld.t == t).ok_or(AlgebraError::NoSuchLevel(t))
    }

    /// δ^k, from the precomputed cache when available.
    pub fn delta_pow(&self, k: usize) -> F::Elem {
        match self.delta_pows.get(k) {
            Some(v) => v.clone(),
            None => self.field.pow(&self.delta, k as u64),
        }
    }

    /// The basis diagram at index `i`.
    pub fn diagram(&self, i: usize) -> &BrauerDiagram {
        &self.diagrams[i]
    }

    /// The coordinates of basis element `i`.
    pub fn basis_label(&self, i: usize) -> BasisLabel {
        let ld = self.level_data_of_basis(i);
        let r = i - ld.offset;
        let m = ld.states.len();
        let g = ld.perms.len();
        BasisLabel { level: ld.t, p: r / (m * g), sigma: (r / m) % g, q: r % m }
    }

    /// The level value of basis element `i`.
    pub fn level_of_basis(&self, i: usize) -> usize {
        self.level_data_of_basis(i).t
    }

    fn level_data_of_basis(&self, i: usize) -> &LevelData {
        assert!(i < self.dim, "basis index {i} out of range");
        self.levels
            .iter()
            .rev()
            .find(|ld| ld.offset <= i)
            .expect("offsets start at zero")
    }

    /// The basis index of `(p, σ, q)` at level `t`, if present.
    pub fn index_of(
        &self,
        t: usize,
        p: &LinkState,
        sigma: &Permutation,
        q: &LinkState,
    ) -> Option<usize> {
        let ld = self.levels.iter().find(|ld| ld.t == t)?;
        let pi = ld.states.iter().position(|s| s == p)?;
        let si = ld.perms.iter().position(|s| s == sigma)?;
        let qi = ld.states.iter().position(|s| s == q)?;
        Some(ld.offset + (pi * ld.perms.len() + si) * ld.states.len() + qi)
    }

    /// The basis index whose diagram is `d`, if present.
    pub fn index_of_diagram(&self, d: &BrauerDiagram) -> Option<usize> {
        if d.n() != self.n {
            return None;
        }
        let (p, sigma, q) = d.decompose();
        self.index_of(d.through_count(), &p, &sigma, &q)
    }

    /// Human-readable name of basis element `i`: the wiring power `g^k` for a
    /// cyclic group algebra, otherwise the diagram text.
    pub fn label_string(&self, i: usize) -> String {
        match self.family {
            Family::GroupCyclic => format!("g^{}", self.basis_label(i).sigma),
            _ => self.diagrams[i].to_string(),
        }
    }

    /// `C_i · C_j` as `(loop count, target index)`, or `None` if the product
    /// is annihilated in this quotient.
    pub fn prod_entry(&self, i: usize, j: usize) -> Option<(u8, usize)> {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        let t = self.prod_target[i * self.dim + j];
        (t != KILLED).then_some((self.prod_loops[i * self.dim + j], t as usize))
    }

    /// The star anti-involution on basis indices.
    pub fn star_of_basis(&self, i: usize) -> usize {
        self.star_idx[i] as usize
    }

    /// Overwrite one product-table entry in place (`None` target = annihilated).
    /// This exists so verifier tests can corrupt a table and watch the axiom
    /// checks fail; production code never calls it.
    pub fn inject_table_fault(&mut self, i: usize, j: usize, loops: u8, target: Option<usize>) {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        let slot = i * self.dim + j;
        match target {
            Some(k) => {
                assert!(k < self.dim, "target index out of range");
                self.prod_target[slot] = k as u32;
                self.prod_loops[slot] = loops;
            }
            None => {
                self.prod_target[slot] = KILLED;
                self.prod_loops[slot] = 0;
            }
        }
    }

    /// Basis index of the unit (the identity diagram).
    pub fn unit_index(&self) -> usize {
        self.unit_idx
    }

    // ------------------------------------------------------------------
    // Ideals (as sorted lists of basis indices).
    // ------------------------------------------------------------------

    /// The twosided ideal `I_X` spanned by the levels in `xs`, which must be
    /// a downward-closed subset of the surviving levels.
    pub fn ideal_levels(&self, xs: &[usize]) -> Result<Vec<usize>, AlgebraError> {
        let values = self.level_values();
        let mut xs: Vec<usize> = xs.to_vec();
        xs.sort_unstable();
        xs.dedup();
        if xs.len() > values.len() || xs[..] != values[..xs.len()] {
            return Err(AlgebraError::BadLevelSet(xs));
        }
        let mut out = Vec::new();
        for ld in &self.levels {
            if xs.contains(&ld.t) {
                out.extend(ld.offset..ld.offset + ld.block_size());
            }
        }
        Ok(out)
    }

    /// The left module `J_q`: all basis elements `C_{p,q}^σ` at level `t` with
    /// the given right state index.
    pub fn ideal_j(&self, t: usize, q: usize) -> Result<Vec<usize>, AlgebraError> {
        let ld = self.level_data(t)?;
        let m = ld.states.len();
        if q >= m {
            return Err(AlgebraError::NoSuchBasis(q));
        }
        let mut out = Vec::new();
        for p in 0..m {
            for s in 0..ld.perms.len() {
                out.push(ld.offset + (p * ld.perms.len() + s) * m + q);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The left ideal `J_{≤q}`: all basis elements `C_{p,q'}^σ` at levels
    /// `μ ≤ t` whose right state satisfies `q' ≤ q` in the given order.
    pub fn ideal_j_leq(
        &self,
        t: usize,
        q: usize,
        order: &dyn LinkStateOrder,
    ) -> Result<Vec<usize>, AlgebraError> {
        let ld = self.level_data(t)?;
        let q_state = ld.states.get(q).ok_or(AlgebraError::NoSuchBasis(q))?.clone();
        let mut out = Vec::new();
        for ld in self.levels.iter().filter(|ld| ld.t <= t) {
            let m = ld.states.len();
            for (qi, q_prime) in ld.states.iter().enumerate() {
                if !order.leq(q_prime, &q_state) {
                    continue;
                }
                for p in 0..m {
                    for s in 0..ld.perms.len() {
                        out.push(ld.offset + (p * ld.perms.len() + s) * m + qi);
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    // ------------------------------------------------------------------
    // Elements.
    // ------------------------------------------------------------------

    fn check_owner(&self, e: &AlgebraElement<F>) {
        assert_eq!(
            e.algebra_id, self.id,
            "element belongs to a different algebra instance"
        );
    }

    pub fn zero_elem(&self) -> AlgebraElement<F> {
        AlgebraElement { algebra_id: self.id, terms: BTreeMap::new() }
    }

    pub fn unit_elem(&self) -> AlgebraElement<F> {
        self.basis_elem(self.unit_idx)
    }

    pub fn basis_elem(&self, i: usize) -> AlgebraElement<F> {
        assert!(i < self.dim, "basis index {i} out of range");
        let mut terms = BTreeMap::new();
        terms.insert(i as u32, self.field.one());
        AlgebraElement { algebra_id: self.id, terms }
    }

    /// Build an element from (index, coefficient) pairs; repeated indices
    /// accumulate, zero coefficients are dropped.
    pub fn from_terms(&self, pairs: &[(usize, F::Elem)]) -> AlgebraElement<F> {
        let mut e = self.zero_elem();
        for (i, c) in pairs {
            assert!(*i < self.dim, "basis index {i} out of range");
            self.accumulate(&mut e, *i, c.clone());
        }
        e
    }

    fn accumulate(&self, e: &mut AlgebraElement<F>, i: usize, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        let slot = e.terms.entry(i as u32);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.field.add(o.get(), &c);
                if self.field.is_zero(&sum) {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(a);
        self.check_owner(b);
        let mut out = a.clone();
        for (&i, c) in &b.terms {
            self.accumulate(&mut out, i as usize, c.clone());
        }
        out
    }

    pub fn sub(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.add(a, &self.scale(b, &self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, a: &AlgebraElement<F>, c: &F::Elem) -> AlgebraElement<F> {
        self.check_owner(a);
        let mut out = self.zero_elem();
        for (&i, v) in &a.terms {
            self.accumulate(&mut out, i as usize, self.field.mul(c, v));
        }
        out
    }

    pub fn multiply(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(a);
        self.check_owner(b);
        let mut out = self.zero_elem();
        for (&i, ca) in &a.terms {
            for (&j, cb) in &b.terms {
                if let Some((loops, k)) = self.prod_entry(i as usize, j as usize) {
                    let c = self.field.mul(&self.field.mul(ca, cb), &self.delta_pow(loops as usize));
                    self.accumulate(&mut out, k, c);
                }
            }
        }
        out
    }

    /// The star anti-involution, extended linearly.
    pub fn star_elem(&self, a: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(a);
        let mut out = self.zero_elem();
        for (&i, c) in &a.terms {
            self.accumulate(&mut out, self.star_idx[i as usize] as usize, c.clone());
        }
        out
    }

    /// The augmentation onto the trivial module: top-level basis elements map
    /// to 1, all others to 0.
    pub fn apply_aug(&self, a: &AlgebraElement<F>) -> F::Elem {
        self.check_owner(a);
        let top = self.levels.last().expect("at least one level").offset;
        let mut acc = self.field.zero();
        for (&i, c) in a.terms.range(top as u32..) {
            debug_assert!((i as usize) < self.dim);
            acc = self.field.add(&acc, c);
        }
        acc
    }

    /// Dense coefficient vector of an element.
    pub fn element_to_dense(&self, a: &AlgebraElement<F>) -> Vec<F::Elem> {
        self.check_owner(a);
        let mut v = vec![self.field.zero(); self.dim];
        for (&i, c) in &a.terms {
            v[i as usize] = c.clone();
        }
        v
    }

    pub fn render_elem(&self, a: &AlgebraElement<F>) -> String {
        self.check_owner(a);
        if a.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&i, c) in &a.terms {
            let label = self.label_string(i as usize);
            if self.field.is_one(c) {
                parts.push(format!("⟨{label}⟩"));
            } else {
                parts.push(format!("({})·⟨{label}⟩", self.field.render(c)));
            }
        }
        parts.join(" + ")
    }

    // ------------------------------------------------------------------
    // Serialization.
    // ------------------------------------------------------------------

    /// Serialize family, parameters, and the full product table.
    pub fn dump_json(&self) -> Value {
        let targets: Vec<i64> = self
            .prod_target
            .iter()
            .map(|&t| if t == KILLED { -1 } else { t as i64 })
            .collect();
        json!({
            "family": self.family.name(),
            "n": self.n,
            "ring": self.field.descriptor(),
            "delta": self.field.encode(&self.delta),
            "removed_levels": self.removed_levels,
            "dim": self.dim,
            "labels": (0..self.dim).map(|i| self.label_string(i)).collect::<Vec<_>>(),
            "prod_loops": self.prod_loops,
            "prod_target": targets,
        })
    }

    /// Rebuild an algebra from [`Self::dump_json`] output, revalidating the
    /// stored table against a fresh build.
    pub fn load_json(field: F, v: &Value) -> Result<Self, AlgebraError> {
        let err = |m: &str| AlgebraError::Load(m.to_string());
        let family = v["family"]
            .as_str()
            .and_then(Family::parse)
            .ok_or_else(|| err("missing or unknown family"))?;
        let n = v["n"].as_u64().ok_or_else(|| err("missing n"))? as usize;
        let ring = v["ring"].as_str().ok_or_else(|| err("missing ring"))?;
        if ring != field.descriptor() {
            return Err(AlgebraError::Load(format!(
                "ring mismatch: stored {ring}, requested {}",
                field.descriptor()
            )));
        }
        let delta_s = v["delta"].as_str().ok_or_else(|| err("missing delta"))?;
        let delta = field.parse(delta_s).map_err(AlgebraError::Load)?;
        let removed: Vec<usize> = v["removed_levels"]
            .as_array()
            .ok_or_else(|| err("missing removed_levels"))?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| err("bad level")))
            .collect::<Result<_, _>>()?;

        let full = Self::build(field, family, n, delta);
        let alg =
            if removed.is_empty() { full } else { full.quotient_below(&removed)? };

        let dim = v["dim"].as_u64().ok_or_else(|| err("missing dim"))? as usize;
        if dim != alg.dim {
            return Err(AlgebraError::Load(format!(
                "dimension mismatch: stored {dim}, rebuilt {}",
                alg.dim
            )));
        }
        let loops = v["prod_loops"].as_array().ok_or_else(|| err("missing prod_loops"))?;
        let targets = v["prod_target"].as_array().ok_or_else(|| err("missing prod_target"))?;
        if loops.len() != alg.prod_loops.len() || targets.len() != alg.prod_target.len() {
            return Err(err("table size mismatch"));
        }
        for (k, (l, t)) in loops.iter().zip(targets).enumerate() {
            let l = l.as_u64().ok_or_else(|| err("bad loop entry"))?;
            let t = t.as_i64().ok_or_else(|| err("bad target entry"))?;
            let want_t = if alg.prod_target[k] == KILLED { -1 } else { alg.prod_target[k] as i64 };
            if l != alg.prod_loops[k] as u64 || t != want_t {
                return Err(AlgebraError::Load(format!("table entry {k} does not match rebuild")));
            }
        }
        if let Some(labels) = v["labels"].as_array() {
            for (i, l) in labels.iter().enumerate() {
                if l.as_str() != Some(alg.label_string(i).as_str()) {
                    return Err(AlgebraError::Load(format!("label {i} does not match rebuild")));
                }
            }
        }
        Ok(alg)
    }
}

/// Fast basis lookup: per-level hash maps from state partners and permutation
/// images to their indices.
struct Lookup {
    level_of_t: HashMap<usize, usize>,
    state_maps: Vec<HashMap<Vec<usize>, usize>>,
    perm_maps: Vec<HashMap<Vec<usize>, usize>>,
}

impl Lookup {
    fn new(levels: &[LevelData]) -> Self {
        let mut level_of_t = HashMap::new();
        let mut state_maps = Vec::new();
        let mut perm_maps = Vec::new();
        for (li, ld) in levels.iter().enumerate() {
            level_of_t.insert(ld.t, li);
            state_maps.push(
                ld.states.iter().enumerate().map(|(i, s)| (s.partners().to_vec(), i)).collect(),
            );
            perm_maps.push(
                ld.perms.iter().enumerate().map(|(i, s)| (s.images().to_vec(), i)).collect(),
            );
        }
        Lookup { level_of_t, state_maps, perm_maps }
    }

    fn index_of(
        &self,
        levels: &[LevelData],
        t: usize,
        p: &LinkState,
        sigma: &Permutation,
        q: &LinkState,
    ) -> Option<usize> {
        let &li = self.level_of_t.get(&t)?;
        let ld = &levels[li];
        let pi = *self.state_maps[li].get(p.partners())?;
        let si = *self.perm_maps[li].get(sigma.images())?;
        let qi = *self.state_maps[li].get(q.partners())?;
        Some(ld.offset + (pi * ld.perms.len() + si) * ld.states.len() + qi)
    }

    fn index_of_diagram(&self, levels: &[LevelData], d: &BrauerDiagram) -> Option<usize> {
        let (p, sigma, q) = d.decompose();
        self.index_of(levels, d.through_count(), &p, &sigma, &q)
    }
}
