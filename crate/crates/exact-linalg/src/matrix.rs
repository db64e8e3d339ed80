//! Dense exact matrices with blocked Gauss–Jordan elimination.
//!
//! `rref_in_place` keeps the matrix in *fully reduced* row echelon form (pivot columns
//! cleared above and below). Elimination is blocked: pivots are gathered in batches of
//! up to [`BLOCK`] mutually reduced rows, and the expensive full-matrix sweep then
//! retires a whole batch per pass through [`Field::multi_axpy`]. Because batch rows are
//! mutually reduced, the coefficient a sweep needs for each batch row is just the
//! target row's entry at that row's pivot column, so all coefficients can be gathered
//! up front and the batch applied in one fused pass. Sweeps run row-parallel under the
//! `parallel` feature.

use crate::field::Field;
use par_shim::prelude::*;
use std::fmt;

/// Pivot batch size for blocked elimination; also the fusion width offered to
/// `multi_axpy`. Correctness does not depend on the value.
pub const BLOCK: usize = 16;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// A matrix in reduced row echelon form together with its pivot columns.
/// Row `k` of `matrix` has its leading 1 in column `pivots[k]`; rows past
/// `pivots.len()` are zero.
pub struct RrefResult<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| self.field.render(e)).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Build from explicit rows; all rows must share one length.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix { field, rows: nrows, cols: ncols, data }
    }

    /// Build from integer entries (row-major), mapped through the field.
    pub fn from_integers(field: F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let data = entries.iter().map(|&k| field.from_integer(k)).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (a, b) = (i.min(j), i.max(j));
        let (head, tail) = self.data.split_at_mut(b * self.cols);
        head[a * self.cols..(a + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix product; row-parallel, with each output row computed as one fused
    /// multi-axpy over the rows of `other`.
    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let field = self.field.clone();
        let mut out = Matrix::zeros(field.clone(), self.rows, other.cols);
        if self.rows == 0 || other.cols == 0 {
            return out;
        }
        let lhs = &self.data;
        let k_len = self.cols;
        out.data
            .par_chunks_mut(other.cols)
            .enumerate()
            .for_each(|(i, orow)| {
                let terms: Vec<(F::Elem, &[F::Elem])> = (0..k_len)
                    .filter_map(|k| {
                        let c = &lhs[i * k_len + k];
                        if field.is_zero(c) {
                            None
                        } else {
                            Some((c.clone(), other.row(k)))
                        }
                    })
                    .collect();
                field.multi_axpy(orow, &terms);
            });
        out
    }

    /// Apply to a vector (length = cols), returning a vector of length rows.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !self.field.is_zero(a) && !self.field.is_zero(&v[j]) {
                        acc = self.field.add(&acc, &self.field.mul(a, &v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rref(&self) -> RrefResult<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        RrefResult { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Reduce to *fully reduced* row echelon form in place; returns pivot columns in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let field = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots: Vec<usize> = Vec::new();
        let mut placed = 0usize; // pivot rows occupy indices 0..placed
        let mut block_start = 0usize; // active (unswept) batch is block_start..placed

        for col in 0..cols {
            if placed == rows {
                break;
            }
            // Current values of the batch rows at this column, for virtual reduction.
            let batch_cols: Vec<usize> = pivots[block_start..placed].to_vec();
            let batch_at_col: Vec<F::Elem> = (block_start..placed)
                .map(|k| self.get(k, col).clone())
                .collect();

            // Scan candidate rows below `placed`. Their stored entries are stale with
            // respect to the active batch, so evaluate the would-be value after
            // reduction without materializing it: O(batch) per row.
            let mut found = None;
            for i in placed..rows {
                let mut v = self.get(i, col).clone();
                for (k, pc) in batch_cols.iter().enumerate() {
                    let c = self.get(i, *pc);
                    if !field.is_zero(c) && !field.is_zero(&batch_at_col[k]) {
                        v = field.sub(&v, &field.mul(c, &batch_at_col[k]));
                    }
                }
                if !field.is_zero(&v) {
                    found = Some(i);
                    break;
                }
            }
            let Some(i) = found else { continue };

            // Materialize row i's reduction against the batch in one fused pass.
            // Batch rows are mutually reduced, so the coefficient for each batch row is
            // simply the target's entry at that row's pivot column — gather then apply.
            if block_start < placed {
                let (head, tail) = self.data.split_at_mut(placed * cols);
                let target = &mut tail[(i - placed) * cols..(i - placed + 1) * cols];
                let mut gathered: Vec<(F::Elem, &[F::Elem])> = Vec::new();
                for k in block_start..placed {
                    let coeff = target[pivots[k]].clone();
                    if !field.is_zero(&coeff) {
                        gathered.push((field.neg(&coeff), &head[k * cols..(k + 1) * cols]));
                    }
                }
                field.multi_axpy(target, &gathered);
            }

            self.swap_rows(i, placed);

            // Normalize the new pivot row.
            let lead = self.get(placed, col).clone();
            debug_assert!(!field.is_zero(&lead));
            let inv = field.inv(&lead).expect("pivot entry is nonzero");
            if !field.is_one(&inv) {
                field.scale_in_place(self.row_mut(placed), &inv);
            }

            // Keep the batch mutually reduced: clear this column in earlier batch rows.
            for k in block_start..placed {
                let c = self.get(k, col).clone();
                if !field.is_zero(&c) {
                    let (head, tail) = self.data.split_at_mut(placed * cols);
                    let target = &mut head[k * cols..(k + 1) * cols];
                    field.axpy(target, &field.neg(&c), &tail[..cols]);
                }
            }

            pivots.push(col);
            placed += 1;

            if placed - block_start == BLOCK || placed == rows {
                self.sweep(block_start, placed, &pivots);
                block_start = placed;
            }
        }
        if placed > block_start {
            self.sweep(block_start, placed, &pivots);
        }
        pivots
    }

    /// Apply batch rows `bs..be` (mutually reduced, pivot cols `pivots[bs..be]`) to every
    /// other row of the matrix, clearing those pivot columns matrix-wide. Row-parallel.
    fn sweep(&mut self, bs: usize, be: usize, pivots: &[usize]) {
        if self.cols == 0 {
            return;
        }
        let field = self.field.clone();
        let cols = self.cols;
        let batch: Vec<Vec<F::Elem>> = (bs..be).map(|k| self.row(k).to_vec()).collect();
        let pcs: Vec<usize> = pivots[bs..be].to_vec();
        self.data
            .par_chunks_mut(cols)
            .enumerate()
            .for_each(|(j, row)| {
                if j >= bs && j < be {
                    return;
                }
                let terms: Vec<(F::Elem, &[F::Elem])> = pcs
                    .iter()
                    .enumerate()
                    .filter_map(|(k, pc)| {
                        let c = &row[*pc];
                        if field.is_zero(c) {
                            None
                        } else {
                            Some((field.neg(c), batch[k].as_slice()))
                        }
                    })
                    .collect();
                if !terms.is_empty() {
                    field.multi_axpy(row, &terms);
                }
            });
    }

    /// Basis of the right kernel `{v : Av = 0}`, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        self.rref().kernel_basis()
    }

    /// Solve `Ax = b`, returning the particular solution with all free variables
    /// zero, or `None` if inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let field = self.field.clone();
        let mut aug = Matrix::zeros(field.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // a pivot in the augmented column means inconsistency
        }
        let mut x = vec![field.zero(); self.cols];
        for (k, pc) in pivots.iter().enumerate() {
            x[*pc] = aug.get(k, self.cols).clone();
        }
        Some(x)
    }
}

impl<F: Field> RrefResult<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.matrix.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.matrix.cols()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis read off the reduced form: for each free column f the vector
    /// with 1 at f and −R[k][f] at each pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let field = self.matrix.field().clone();
        let cols = self.matrix.cols();
        self.free_cols()
            .into_iter()
            .map(|f| {
                let mut v = vec![field.zero(); cols];
                v[f] = field.one();
                for (k, &pc) in self.pivots.iter().enumerate() {
                    let e = self.matrix.get(k, f);
                    if !field.is_zero(e) {
                        v[pc] = field.neg(e);
                    }
                }
                v
            })
            .collect()
    }
}
