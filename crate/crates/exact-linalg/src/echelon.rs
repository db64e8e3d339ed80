//! Incremental echelon span tracker.
//!
//! Holds a growing set of vectors in *fully reduced* echelon form (every stored row is
//! zero at every other row's pivot column). Full reduction buys two things:
//! membership reduction can gather all elimination coefficients in one pass and hand
//! them to [`Field::multi_axpy`] as a single fused batch, and insertion only has to
//! clear one column of the existing rows. Used for span membership testing and for
//! greedy selection of module generating sets.

use crate::field::Field;
use par_shim::prelude::*;

pub struct Echelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    /// Pivot column of each stored row (parallel to `rows`).
    pivots: Vec<usize>,
    /// Maps a column to the index of the row pivoted there, if any.
    row_of_col: Vec<Option<u32>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), pivots: Vec::new(), row_of_col: vec![None; width] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Fully reduce `v` against the span. Because stored rows are mutually reduced,
    /// the coefficient at each pivot column is independent of the other eliminations,
    /// so one gather + one fused multi-axpy suffices.
    pub fn reduce_in_place(&self, v: &mut [F::Elem]) {
        assert_eq!(v.len(), self.width);
        let terms: Vec<(F::Elem, &[F::Elem])> = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, &pc)| {
                let c = &v[pc];
                if self.field.is_zero(c) {
                    None
                } else {
                    Some((self.field.neg(c), self.rows[k].as_slice()))
                }
            })
            .collect();
        if !terms.is_empty() {
            self.field.multi_axpy(v, &terms);
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Insert `v` if it enlarges the span; returns whether it did.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let mut w = v;
        self.reduce_in_place(&mut w);
        let Some(lead) = w.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        // Normalize so the pivot entry is 1.
        let inv = self.field.inv(&w[lead]).expect("nonzero leading entry");
        if !self.field.is_one(&inv) {
            self.field.scale_in_place(&mut w, &inv);
        }
        // Keep full reduction: clear the new pivot column from all existing rows.
        let field = self.field.clone();
        self.rows.par_iter_mut().for_each(|row| {
            let c = row[lead].clone();
            if !field.is_zero(&c) {
                field.axpy(row, &field.neg(&c), &w);
            }
        });
        self.row_of_col[lead] = Some(self.rows.len() as u32);
        self.rows.push(w);
        self.pivots.push(lead);
        true
    }

    /// The row pivoted at `col`, if any.
    pub fn row_at_col(&self, col: usize) -> Option<&[F::Elem]> {
        self.row_of_col[col].map(|k| self.rows[k as usize].as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::matrix::Matrix;

    #[test]
    fn echelon_rank_matches_matrix_rank() {
        let f = PrimeField::new(5).unwrap();
        let rows: Vec<Vec<u32>> = vec![
            vec![1, 2, 3, 4],
            vec![2, 4, 1, 3],
            vec![3, 1, 4, 2], // = row0 + row1 over F_5
            vec![0, 0, 0, 0],
            vec![4, 1, 2, 3],
        ];
        let m = Matrix::from_rows(f.clone(), rows.clone());
        let mut ech = Echelon::new(f, 4);
        for r in rows {
            ech.insert(r);
        }
        assert_eq!(ech.rank(), m.rank());
    }

    #[test]
    fn membership_and_full_reduction() {
        let f = PrimeField::new(7).unwrap();
        let mut ech = Echelon::new(f.clone(), 3);
        assert!(ech.insert(vec![1, 1, 0]));
        assert!(ech.insert(vec![0, 1, 1]));
        // (1, 2, 1) = (1,1,0) + (0,1,1) is in the span; (0, 0, 1) is not.
        assert!(ech.contains(&[1, 2, 1]));
        assert!(!ech.contains(&[0, 0, 1]));
        assert!(!ech.insert(vec![1, 2, 1]));
        assert_eq!(ech.rank(), 2);
        // Stored rows are mutually reduced: each is zero at the other's pivot column.
        for (k, row) in ech.rows().iter().enumerate() {
            for (k2, &pc) in [0usize, 1].iter().enumerate() {
                if k != k2 {
                    assert_eq!(row[pc], 0, "row {k} not cleared at pivot col {pc}");
                }
            }
        }
    }

    #[test]
    fn insertion_order_does_not_change_rank() {
        let f = PrimeField::new(3).unwrap();
        let vs: Vec<Vec<u32>> = vec![vec![1, 2, 0, 1], vec![2, 1, 1, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 2]];
        let mut a = Echelon::new(f.clone(), 4);
        let mut b = Echelon::new(f.clone(), 4);
        for v in &vs {
            a.insert(v.clone());
        }
        for v in vs.iter().rev() {
            b.insert(v.clone());
        }
        assert_eq!(a.rank(), b.rank());
    }
}
