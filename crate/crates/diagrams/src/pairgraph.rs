//! The pair graph of two link states: overlay both matchings on one vertex set.
//!
//! Components classify as cycles (every vertex matched in both states — these are the
//! closed loops a concatenation would produce), or paths ending in defects. The
//! components containing a defect of *each* state are the ones that survive as
//! through-strands in a product; their count bounds the level of the product.

use crate::state::LinkState;

#[derive(Debug, Clone)]
pub struct PairGraph {
    /// Connected components, each sorted ascending; components ordered by minimum vertex.
    pub components: Vec<Vec<usize>>,
    /// Number of cycle components (no defect of either state).
    pub loop_count: usize,
    /// Indices (into `components`) of components containing a defect of the first
    /// state *and* a defect of the second.
    pub pair_components: Vec<usize>,
}

impl PairGraph {
    /// |S| — the number of components joining defects of both states.
    pub fn pair_set_size(&self) -> usize {
        self.pair_components.len()
    }
}

/// Small union-find over 0..n.
struct Uf {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Uf {
    fn new(n: usize) -> Self {
        Uf { parent: (0..n).collect(), size: vec![1; n] }
    }
    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }
    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Overlay `q` and `p` (same size) and classify the components.
pub fn pair_graph(q: &LinkState, p: &LinkState) -> PairGraph {
    assert_eq!(q.n(), p.n(), "states of different sizes");
    let n = q.n();
    let mut uf = Uf::new(n);
    for (a, b) in q.connections() {
        uf.union(a, b);
    }
    for (a, b) in p.connections() {
        uf.union(a, b);
    }
    let mut comp_of_root: std::collections::HashMap<usize, usize> = Default::default();
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = uf.find(v);
        let idx = *comp_of_root.entry(r).or_insert_with(|| {
            components.push(Vec::new());
            components.len() - 1
        });
        components[idx].push(v);
    }
    // Vertices were scanned in ascending order, so each component is sorted and
    // components are ordered by their minimum vertex already.
    let mut loop_count = 0;
    let mut pair_components = Vec::new();
    for (idx, comp) in components.iter().enumerate() {
        let has_q = comp.iter().any(|&v| q.is_defect(v));
        let has_p = comp.iter().any(|&v| p.is_defect(v));
        if !has_q && !has_p {
            loop_count += 1;
        }
        if has_q && has_p {
            pair_components.push(idx);
        }
    }
    PairGraph { components, loop_count, pair_components }
}
