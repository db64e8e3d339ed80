//! Link states: partial matchings on `{1,…,n}` with defects.

use crate::textutil;
use crate::DiagramError;
use std::fmt;
use std::str::FromStr;

/// Which class of link states to enumerate or test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateClass {
    /// All partial matchings.
    All,
    /// Non-crossing in the linear order, with no defect trapped under an arc.
    Planar,
    /// Non-crossing in the cyclic order, with all defects on one side of every arc.
    Annular,
}

/// A partial matching on vertices `0..n`. `partner[v] = w` pairs v and w;
/// `partner[v] = v` marks v as a defect (an unmatched, through-going vertex).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkState {
    n: usize,
    partner: Vec<usize>,
}

impl fmt::Debug for LinkState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl LinkState {
    /// Build from a partner involution; validates shape.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self, DiagramError> {
        let n = partner.len();
        for (v, &w) in partner.iter().enumerate() {
            if w >= n {
                return Err(DiagramError::InvalidPairing(format!("vertex {w} out of range")));
            }
            if partner[w] != v {
                return Err(DiagramError::InvalidPairing(format!(
                    "pairing not an involution at {v}"
                )));
            }
        }
        Ok(LinkState { n, partner })
    }

    /// The all-defects state (t = n).
    pub fn all_defects(n: usize) -> Self {
        LinkState { n, partner: (0..n).collect() }
    }

    /// Build from explicit connections (0-based); unmentioned vertices become defects.
    pub fn from_connections(n: usize, conns: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let mut partner: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for &(a, b) in conns {
            if a >= n || b >= n || a == b {
                return Err(DiagramError::InvalidPairing(format!("bad connection ({a},{b})")));
            }
            if used[a] || used[b] {
                return Err(DiagramError::InvalidPairing(format!(
                    "vertex reused in connection ({a},{b})"
                )));
            }
            used[a] = true;
            used[b] = true;
            partner[a] = b;
            partner[b] = a;
        }
        Ok(LinkState { n, partner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// The whole partner table, indexed by vertex.
    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn is_defect(&self, v: usize) -> bool {
        self.partner[v] == v
    }

    /// Number of defects (through-strands), written t.
    pub fn defect_count(&self) -> usize {
        (0..self.n).filter(|&v| self.is_defect(v)).count()
    }

    /// Defect vertices in increasing order.
    pub fn defects(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_defect(v)).collect()
    }

    /// Connections as (min, max) pairs, sorted by first vertex.
    pub fn connections(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter(|&v| self.partner[v] > v)
            .map(|v| (v, self.partner[v]))
            .collect()
    }

    /// Planarity in the linear order: for every arc {i,j}, the open interval (i,j)
    /// is a union of whole arcs and contains no defect.
    pub fn is_planar(&self) -> bool {
        for (i, j) in self.connections() {
            for v in i + 1..j {
                let w = self.partner[v];
                if w == v || w <= i || w >= j {
                    return false;
                }
            }
        }
        true
    }

    /// Annularity in the cyclic order: for every arc {i,j}, no arc joins the two open
    /// cyclic sides of {i,j}, and all defects lie in one side.
    pub fn is_annular(&self) -> bool {
        let n = self.n;
        let conns = self.connections();
        let defects = self.defects();
        for &(i, j) in &conns {
            // side A: cyclic interval (i, j); side B: cyclic interval (j, i).
            let side_a = |v: usize| -> bool {
                // v strictly between i and j going cyclically upward from i
                (v + n - i) % n > 0 && (v + n - i) % n < (j + n - i) % n
            };
            let on_endpoint = |v: usize| v == i || v == j;
            for &(a, b) in &conns {
                if on_endpoint(a) || on_endpoint(b) {
                    continue;
                }
                if side_a(a) != side_a(b) {
                    return false;
                }
            }
            if !defects.is_empty() {
                let first = side_a(defects[0]);
                if !defects.iter().all(|&d| side_a(d) == first) {
                    return false;
                }
            }
        }
        true
    }

    pub fn satisfies(&self, class: StateClass) -> bool {
        match class {
            StateClass::All => true,
            StateClass::Planar => self.is_planar(),
            StateClass::Annular => self.is_annular(),
        }
    }

    /// Rotate one step: vertex v ↦ v+1 (mod n). Only offered for annular states,
    /// whose class is preserved; rejects others.
    pub fn rotate(&self) -> Result<LinkState, DiagramError> {
        if !self.is_annular() {
            return Err(DiagramError::Unsupported("rotation of a non-annular state".into()));
        }
        Ok(self.rotate_unchecked(1))
    }

    /// Rotate by k steps without any class check (used by enumeration oracles).
    pub fn rotate_unchecked(&self, k: usize) -> LinkState {
        let n = self.n;
        if n == 0 {
            return self.clone();
        }
        let mut partner = vec![0; n];
        for v in 0..n {
            partner[(v + k) % n] = (self.partner[v] + k) % n;
        }
        LinkState { n, partner }
    }

    /// All link states on n vertices with exactly t defects, in the given class,
    /// ordered lexicographically by partner list.
    pub fn enumerate(n: usize, t: usize, class: StateClass) -> Vec<LinkState> {
        if t > n || (n - t) % 2 != 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut partner: Vec<Option<usize>> = vec![None; n];
        fn rec(
            partner: &mut Vec<Option<usize>>,
            defects_left: usize,
            out: &mut Vec<LinkState>,
            class: StateClass,
        ) {
            let n = partner.len();
            let Some(v) = partner.iter().position(Option::is_none) else {
                if defects_left == 0 {
                    let ls =
                        LinkState { n, partner: partner.iter().map(|p| p.unwrap()).collect() };
                    if ls.satisfies(class) {
                        out.push(ls);
                    }
                }
                return;
            };
            // Lexicographically smallest choice first: defect (partner v) then partners ascending.
            if defects_left > 0 {
                partner[v] = Some(v);
                rec(partner, defects_left - 1, out, class);
                partner[v] = None;
            }
            for w in v + 1..n {
                if partner[w].is_none() {
                    partner[v] = Some(w);
                    partner[w] = Some(v);
                    rec(partner, defects_left, out, class);
                    partner[v] = None;
                    partner[w] = None;
                }
            }
        }
        rec(&mut partner, t, &mut out, class);
        out
    }
}

/// A partial order on link states of one size. The single consumer-facing method
/// is `leq`; implementations live with the algebras that use them.
pub trait LinkStateOrder {
    /// Whether `a ≤ b` in the order.
    fn leq(&self, a: &LinkState, b: &LinkState) -> bool;
}

impl fmt::Display for LinkState {
    /// `n=5; [1 3][2][4 5]` — connections and singleton defects, sorted by least vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        let mut first = true;
        for v in 0..self.n {
            let w = self.partner[v];
            let sep = if first { " " } else { "" };
            if w == v {
                write!(f, "{sep}[{}]", v + 1)?;
                first = false;
            } else if w > v {
                write!(f, "{sep}[{} {}]", v + 1, w + 1)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for LinkState {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, blocks) = textutil::parse_blocks(s)?;
        let mut partner: Vec<Option<usize>> = vec![None; n];
        for block in blocks {
            let vs: Vec<usize> = block
                .into_iter()
                .map(|t| textutil::resolve_state_token(t, n))
                .collect::<Result<_, _>>()?;
            let (a, b) = match vs.len() {
                1 => (vs[0], vs[0]),
                2 => (vs[0], vs[1]),
                k => {
                    return Err(DiagramError::Parse(format!(
                        "state blocks have 1 or 2 vertices, got {k}"
                    )))
                }
            };
            for v in [a, b] {
                if partner[v].is_some() && partner[v] != Some(if v == a { b } else { a }) {
                    return Err(DiagramError::Parse(format!("vertex {} appears twice", v + 1)));
                }
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
        let missing: Vec<usize> = partner.iter().enumerate().filter(|(_, p)| p.is_none()).map(|(v, _)| v + 1).collect();
        if !missing.is_empty() {
            return Err(DiagramError::Parse(format!(
                "vertices {missing:?} not mentioned; list defects as singletons"
            )));
        }
        LinkState::from_partner(partner.into_iter().map(|p| p.unwrap()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    fn double_factorial_odd(m: usize) -> usize {
        // (2m-1)!! pairings of 2m points
        (0..m).map(|i| 2 * i + 1).product::<usize>().max(1)
    }

    #[test]
    fn enumeration_counts_all_states() {
        // |M(n,t)| = C(n, 2k) (2k-1)!! with k = (n-t)/2.
        for n in 0..=6 {
            for t in 0..=n {
                if (n - t) % 2 != 0 {
                    assert!(LinkState::enumerate(n, t, StateClass::All).is_empty());
                    continue;
                }
                let k = (n - t) / 2;
                let expect = binom(n, 2 * k) * double_factorial_odd(k);
                assert_eq!(
                    LinkState::enumerate(n, t, StateClass::All).len(),
                    expect,
                    "n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn enumeration_counts_planar_states() {
        // Ballot numbers: |M_planar(n,t)| = C(n,k) - C(n,k-1), k = (n-t)/2.
        for n in 0..=8 {
            for t in (n % 2..=n).step_by(2) {
                let k = (n - t) / 2;
                let expect = binom(n, k) - if k == 0 { 0 } else { binom(n, k - 1) };
                assert_eq!(
                    LinkState::enumerate(n, t, StateClass::Planar).len(),
                    expect,
                    "n={n} t={t}"
                );
            }
        }
        // Sum over t of the count squared is Catalan(n) for the planar family.
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 0..=8 {
            let total: usize = (n % 2..=n)
                .step_by(2)
                .map(|t| LinkState::enumerate(n, t, StateClass::Planar).len().pow(2))
                .sum();
            assert_eq!(total, catalan[n], "n={n}");
        }
    }

    #[test]
    fn annular_sits_between_planar_and_all() {
        for n in 0..=6 {
            for t in (n % 2..=n).step_by(2) {
                let planar = LinkState::enumerate(n, t, StateClass::Planar);
                let annular = LinkState::enumerate(n, t, StateClass::Annular);
                let all = LinkState::enumerate(n, t, StateClass::All);
                assert!(planar.len() <= annular.len() && annular.len() <= all.len());
                for s in &planar {
                    assert!(s.is_annular(), "planar state {s} must be annular");
                }
            }
        }
    }

    #[test]
    fn annular_counts_match_rotation_closure_of_planar() {
        // The annular class is exactly the set of rotations of planar states.
        for n in 1..=7 {
            for t in (n % 2..=n).step_by(2) {
                let planar = LinkState::enumerate(n, t, StateClass::Planar);
                let mut closure: Vec<LinkState> = planar
                    .iter()
                    .flat_map(|s| (0..n).map(move |k| s.rotate_unchecked(k)))
                    .collect();
                closure.sort();
                closure.dedup();
                let annular = LinkState::enumerate(n, t, StateClass::Annular);
                assert_eq!(closure, annular, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn specific_annular_counts() {
        assert_eq!(LinkState::enumerate(5, 1, StateClass::Annular).len(), 10);
        assert_eq!(LinkState::enumerate(5, 3, StateClass::Annular).len(), 5);
        assert_eq!(LinkState::enumerate(6, 4, StateClass::Annular).len(), 6);
    }

    #[test]
    fn planarity_examples() {
        // [1 4][2 3] is planar; [1 3][2 4] crosses; [1 3] with defect 2 traps it.
        let nested: LinkState = "n=4; [1 4][2 3]".parse().unwrap();
        assert!(nested.is_planar());
        let crossing: LinkState = "n=4; [1 3][2 4]".parse().unwrap();
        assert!(!crossing.is_planar());
        let trapped: LinkState = "n=3; [1 3][2]".parse().unwrap();
        assert!(!trapped.is_planar());
        // Trapped defect is fine cyclically only if all defects share a side; here the
        // lone defect sits inside the arc, which cyclically IS one side: annular.
        assert!(trapped.is_annular());
    }

    #[test]
    fn rotation_contract() {
        let s: LinkState = "n=4; [1 2][3][4]".parse().unwrap();
        assert!(s.is_annular());
        let r = s.rotate().unwrap();
        assert_eq!(r.to_string(), "n=4; [1][2 3][4]");
        let crossing: LinkState = "n=4; [1 3][2 4]".parse().unwrap();
        assert!(!crossing.is_annular());
        assert!(crossing.rotate().is_err());
        // Full orbit returns to the start.
        let mut cur = s.clone();
        for _ in 0..4 {
            cur = cur.rotate().unwrap();
        }
        assert_eq!(cur, s);
    }

    #[test]
    fn text_round_trip() {
        for n in 0..=5 {
            for t in (n % 2..=n).step_by(2) {
                for s in LinkState::enumerate(n, t, StateClass::All) {
                    let text = s.to_string();
                    let back: LinkState = text.parse().unwrap();
                    assert_eq!(back, s, "round trip failed for {text}");
                }
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("n=3; [1 2]".parse::<LinkState>().is_err()); // vertex 3 unmentioned
        assert!("n=3; [1 2][2 3]".parse::<LinkState>().is_err()); // vertex reused
        assert!("n=2; [1 2'][1']".parse::<LinkState>().is_err()); // primes in a state
        assert!("[1 2]".parse::<LinkState>().is_err()); // missing n=
        assert!("n=2; [1 2 3]".parse::<LinkState>().is_err()); // oversized block
    }

    #[test]
    fn enumeration_is_lexicographic_and_deduplicated() {
        let states = LinkState::enumerate(4, 2, StateClass::All);
        let mut sorted = states.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(states, sorted);
    }
}
