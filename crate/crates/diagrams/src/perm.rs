//! Finite permutations with symmetric-group and cyclic-subgroup enumeration.

use crate::DiagramError;
use itertools::Itertools;
use std::fmt;

/// A permutation of `{0,…,t−1}` stored as its image list: `σ(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// One-line image notation, 1-based: `[2 1 3]` sends 1↦2, 2↦1, 3↦3.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Permutation {
    pub fn identity(t: usize) -> Self {
        Permutation { images: (0..t).collect() }
    }

    /// Build from an image list, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, DiagramError> {
        let t = images.len();
        let mut seen = vec![false; t];
        for &v in &images {
            if v >= t || seen[v] {
                return Err(DiagramError::InvalidPairing(format!(
                    "image list {images:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The cyclic shift `i ↦ i+k mod t`.
    pub fn shift(t: usize, k: usize) -> Self {
        Permutation { images: (0..t).map(|i| (i + k) % t).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self ∘ other)(i) = self(other(i))` — `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// If this is the cyclic shift by k, returns k.
    pub fn cyclic_shift_amount(&self) -> Option<usize> {
        let t = self.degree();
        if t == 0 {
            return Some(0);
        }
        let k = self.images[0];
        if (0..t).all(|i| self.images[i] == (i + k) % t) {
            Some(k)
        } else {
            None
        }
    }

    /// All of Σ_t in lexicographic image order (identity first).
    pub fn symmetric_group(t: usize) -> Vec<Permutation> {
        if t == 0 {
            return vec![Permutation::identity(0)];
        }
        (0..t)
            .permutations(t)
            .map(|images| Permutation { images })
            .collect()
    }

    /// The cyclic-shift subgroup C_t = {shift k : 0 ≤ k < t}, identity first.
    /// For t = 0 this is the trivial group on the empty set.
    pub fn cyclic_group(t: usize) -> Vec<Permutation> {
        if t == 0 {
            return vec![Permutation::identity(0)];
        }
        (0..t).map(|k| Permutation::shift(t, k)).collect()
    }
}
