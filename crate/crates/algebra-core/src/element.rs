//! Sparse algebra elements: finitely many basis coefficients.

use std::collections::BTreeMap;

use exact_linalg::Field;

/// An element of a [`crate::StructureAlgebra`], stored as its nonzero basis
/// coefficients. Elements remember which algebra instance they belong to;
/// mixing elements of different instances is a programming error and panics.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<F: Field> {
    pub(crate) algebra_id: u64,
    pub(crate) terms: BTreeMap<u32, F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    /// The nonzero coefficients, by ascending basis index.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &F::Elem)> {
        self.terms.iter().map(|(&i, c)| (i as usize, c))
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of basis element `i` (zero if absent).
    pub fn coeff(&self, field: &F, i: usize) -> F::Elem {
        self.terms.get(&(i as u32)).cloned().unwrap_or_else(|| field.zero())
    }
}
