//! Brauer diagrams: perfect matchings on n left and n right vertices.
//!
//! Storage: vertices `0..n` are the left (unprimed) column, `n..2n` the right
//! (primed) column; `partner` is a fixed-point-free involution on `0..2n`.
//!
//! Every diagram factors uniquely as a triple (left state p, defect permutation σ,
//! right state q): p and q are the restrictions to each column (a vertex matched
//! across columns becomes a defect of its state), and the i-th defect of q (in vertex
//! order) is wired to the σ(i)-th defect of p. [`BrauerDiagram::assemble`] and
//! [`BrauerDiagram::decompose`] realize the bijection.

use crate::perm::Permutation;
use crate::state::LinkState;
use crate::textutil;
use crate::DiagramError;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl BrauerDiagram {
    /// Build from a partner involution on 0..2n; must be fixed-point-free.
    pub fn from_partner(n: usize, partner: Vec<usize>) -> Result<Self, DiagramError> {
        if partner.len() != 2 * n {
            return Err(DiagramError::SizeMismatch(format!(
                "expected {} vertices, got {}",
                2 * n,
                partner.len()
            )));
        }
        for (v, &w) in partner.iter().enumerate() {
            if w >= 2 * n || w == v {
                return Err(DiagramError::InvalidPairing(format!(
                    "vertex {v} unmatched or out of range"
                )));
            }
            if partner[w] != v {
                return Err(DiagramError::InvalidPairing(format!(
                    "pairing not an involution at {v}"
                )));
            }
        }
        Ok(BrauerDiagram { n, partner })
    }

    /// The identity diagram: i ↔ i'.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|v| (v + n) % (2 * n)).collect();
        BrauerDiagram { n, partner }
    }

    /// Wire left state `p` and right state `q` (equal defect counts) with σ:
    /// the i-th defect of q joins the σ(i)-th defect of p.
    pub fn assemble(
        p: &LinkState,
        sigma: &Permutation,
        q: &LinkState,
    ) -> Result<Self, DiagramError> {
        let n = p.n();
        if q.n() != n {
            return Err(DiagramError::SizeMismatch("states of different sizes".into()));
        }
        let pd = p.defects();
        let qd = q.defects();
        if pd.len() != qd.len() || sigma.degree() != pd.len() {
            return Err(DiagramError::SizeMismatch(format!(
                "defect counts {} vs {} vs permutation degree {}",
                pd.len(),
                qd.len(),
                sigma.degree()
            )));
        }
        let mut partner = vec![0usize; 2 * n];
        for (a, b) in p.connections() {
            partner[a] = b;
            partner[b] = a;
        }
        for (a, b) in q.connections() {
            partner[n + a] = n + b;
            partner[n + b] = n + a;
        }
        for (i, &qv) in qd.iter().enumerate() {
            let pv = pd[sigma.apply(i)];
            partner[pv] = n + qv;
            partner[n + qv] = pv;
        }
        Ok(BrauerDiagram { n, partner })
    }

    /// Inverse of `assemble`.
    pub fn decompose(&self) -> (LinkState, Permutation, LinkState) {
        let n = self.n;
        let mut p_partner: Vec<usize> = (0..n).collect();
        let mut q_partner: Vec<usize> = (0..n).collect();
        for v in 0..n {
            let w = self.partner[v];
            if w < n {
                p_partner[v] = w;
            }
        }
        for v in n..2 * n {
            let w = self.partner[v];
            if w >= n {
                q_partner[v - n] = w - n;
            }
        }
        let p = LinkState::from_partner(p_partner).expect("restriction is an involution");
        let q = LinkState::from_partner(q_partner).expect("restriction is an involution");
        let pd = p.defects();
        let qd = q.defects();
        let rank_p = |v: usize| pd.iter().position(|&x| x == v).expect("defect of p");
        let images: Vec<usize> = qd
            .iter()
            .map(|&qv| rank_p(self.partner[n + qv]))
            .collect();
        let sigma = Permutation::from_images(images).expect("through wiring is a bijection");
        (p, sigma, q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// Number of through-strands.
    pub fn through_count(&self) -> usize {
        (0..self.n).filter(|&v| self.partner[v] >= self.n).count()
    }

    /// Reflection swapping the two columns (the * anti-involution on diagrams).
    pub fn star(&self) -> BrauerDiagram {
        let n = self.n;
        let flip = |v: usize| (v + n) % (2 * n);
        let mut partner = vec![0usize; 2 * n];
        for v in 0..2 * n {
            partner[flip(v)] = flip(self.partner[v]);
        }
        BrauerDiagram { n, partner }
    }

    /// Planarity via the standard rectangle picture: order vertices around the
    /// boundary (left column top-to-bottom, then right column bottom-to-top) and
    /// require the matching to be non-crossing. This is deliberately independent of
    /// the decomposition characterization (planar states + identity permutation),
    /// which tests cross-check against it.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let pos = |v: usize| if v < n { v } else { 2 * n - 1 - (v - n) };
        let edges: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&v| self.partner[v] > v)
            .map(|v| {
                let (a, b) = (pos(v), pos(self.partner[v]));
                (a.min(b), a.max(b))
            })
            .collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                // Crossing iff exactly one endpoint of the second is inside (a, b).
                if (a < c && c < b) != (a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// Annularity characterization: both states annular and the defect permutation
    /// a cyclic shift. (Tests verify this against the rotation-closure oracle.)
    pub fn is_annular(&self) -> bool {
        let (p, sigma, q) = self.decompose();
        p.is_annular() && q.is_annular() && sigma.cyclic_shift_amount().is_some()
    }

    /// All diagrams on n strands: one per (p, σ, q) triple over every defect count.
    pub fn enumerate_all(n: usize) -> Vec<BrauerDiagram> {
        use crate::state::StateClass;
        let mut out = Vec::new();
        for t in (n % 2..=n).step_by(2) {
            let states = LinkState::enumerate(n, t, StateClass::All);
            let perms = Permutation::symmetric_group(t);
            for p in &states {
                for sigma in &perms {
                    for q in &states {
                        out.push(BrauerDiagram::assemble(p, sigma, q).unwrap());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BrauerDiagram {
    /// `n=4; [1 3][2 6'][4 8'][5' 7']` — blocks sorted by least stored vertex, right
    /// column printed in offset form with a prime.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        let mut first = true;
        for v in 0..2 * self.n {
            let w = self.partner[v];
            if w > v {
                let sep = if first { " " } else { "" };
                write!(
                    f,
                    "{sep}[{} {}]",
                    textutil::render_diagram_vertex(v, self.n),
                    textutil::render_diagram_vertex(w, self.n)
                )?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for BrauerDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, blocks) = textutil::parse_blocks(s)?;
        let mut partner: Vec<Option<usize>> = vec![None; 2 * n];
        for block in blocks {
            if block.len() != 2 {
                return Err(DiagramError::Parse(
                    "diagram blocks pair exactly 2 vertices".into(),
                ));
            }
            let a = textutil::resolve_diagram_token(block[0], n)?;
            let b = textutil::resolve_diagram_token(block[1], n)?;
            if a == b {
                return Err(DiagramError::Parse("block pairs a vertex with itself".into()));
            }
            for v in [a, b] {
                if partner[v].is_some() {
                    return Err(DiagramError::Parse(format!(
                        "vertex {} appears twice",
                        textutil::render_diagram_vertex(v, n)
                    )));
                }
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
        if let Some(v) = partner.iter().position(Option::is_none) {
            return Err(DiagramError::Parse(format!(
                "vertex {} unmatched; diagrams are perfect matchings",
                textutil::render_diagram_vertex(v, n)
            )));
        }
        BrauerDiagram::from_partner(n, partner.into_iter().map(|p| p.unwrap()).collect())
    }
}
