//! Dense matrices over GF(q) with exact Gaussian elimination.
//!
//! Vectors are plain `&[u8]` slices of field-element encodings; matrices own
//! their field so that every operation can look up arithmetic tables. The
//! reduced row echelon form uses first-nonzero pivot selection, which makes
//! it a canonical form: two matrices span the same row space iff their
//! nonzero rref rows are identical.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row slices, validating shape and entry range.
    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u8>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let q = field.q() as usize;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ColumnMismatch(cols, row.len()));
            }
            for &e in row {
                if e as usize >= q {
                    return Err(Error::EntryOutOfRange {
                        entry: e,
                        q: q as u16,
                    });
                }
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!((v as u16) < self.field.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    /// H * v^T for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![0u8; self.rows];
        for (r, out_r) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = 0u8;
            for (a, b) in row.iter().zip(v) {
                acc = f.add(acc, f.mul(*a, *b));
            }
            *out_r = acc;
        }
        Ok(out)
    }

    /// Reduced row echelon form and rank, with first-nonzero pivot
    /// selection in each column.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut a = self.clone();
        let f = a.field.clone();
        let mut pivot_row = 0;
        for col in 0..a.cols {
            let Some(src) = (pivot_row..a.rows).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            a.swap_rows(pivot_row, src);
            let lead = a.get(pivot_row, col);
            if lead != 1 {
                let inv = f.inv(lead).expect("pivot is nonzero");
                a.scale_row(pivot_row, inv);
            }
            for r in 0..a.rows {
                if r != pivot_row {
                    let factor = a.get(r, col);
                    if factor != 0 {
                        a.subtract_scaled_row(r, pivot_row, factor);
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == a.rows {
                break;
            }
        }
        (a, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Nonzero rows of the rref: a canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let (r, rank) = self.rref();
        Matrix {
            field: r.field.clone(),
            rows: rank,
            cols: r.cols,
            data: r.data[..rank * r.cols].to_vec(),
        }
    }

    /// Basis of the right null space {v : M v^T = 0}, one row per free
    /// column of the rref, in ascending column order.
    pub fn null_space(&self) -> Matrix {
        let (r, rank) = self.rref();
        let f = &self.field;
        let mut pivot_of_row = Vec::with_capacity(rank);
        let mut is_pivot = vec![false; self.cols];
        for row in 0..rank {
            let col = (0..self.cols).find(|&c| r.get(row, c) != 0).unwrap();
            pivot_of_row.push(col);
            is_pivot[col] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(self.field.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (row, &pc) in pivot_of_row.iter().enumerate() {
                let v = r.get(row, fc);
                if v != 0 {
                    out.set(i, pc, f.neg(v));
                }
            }
        }
        debug_assert!(out
            .iter_rows()
            .all(|v| self.mul_vec(v).unwrap().iter().all(|&s| s == 0)));
        out
    }

    /// Whether self and other span the same row space.
    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch(self.cols, other.cols));
        }
        assert_eq!(
            self.field, other.field,
            "row spaces live over the same field"
        );
        let a = self.row_basis();
        let b = other.row_basis();
        Ok(a.rows == b.rows && a.data == b.data)
    }

    /// Horizontal concatenation [A | B | ...].
    pub fn hconcat(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks[0].rows;
        let field = blocks[0].field.clone();
        assert!(blocks.iter().all(|b| b.rows == rows && b.field == field));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            let mut at = 0;
            for b in blocks {
                out.data[r * cols + at..r * cols + at + b.cols].copy_from_slice(b.row(r));
                at += b.cols;
            }
        }
        out
    }

    /// Vertical concatenation, stacking blocks top to bottom.
    pub fn vconcat(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks[0].cols;
        let field = blocks[0].field.clone();
        assert!(blocks.iter().all(|b| b.cols == cols && b.field == field));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Plain text form: a "p m rows cols" header line, then one line of
    /// space-separated element encodings per row.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {} {} {}\n",
            self.field.p(),
            self.field.m(),
            self.rows,
            self.cols
        );
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Matrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(Error::BadShape)?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::BadShape))
            .collect::<Result<_>>()?;
        let [p, m, rows, cols] = nums[..] else {
            return Err(Error::BadShape);
        };
        let field = Field::new(p as u16, m as u32)?;
        let mut parsed = Vec::with_capacity(rows);
        for _ in 0..rows {
            let line = lines.next().ok_or(Error::BadShape)?;
            let row: Vec<u8> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::BadShape))
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::ColumnMismatch(cols, row.len()));
            }
            parsed.push(row);
        }
        Matrix::from_rows(field, &parsed)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: u8) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, f.mul(v, by));
        }
    }

    /// row r -= factor * row src
    fn subtract_scaled_row(&mut self, r: usize, src: usize, factor: u8) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.sub(self.get(r, c), f.mul(factor, self.get(src, c)));
            self.set(r, c, v);
        }
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Number of nonzero entries of a vector.
pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&e| e != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Arc<Field> {
        Field::new(2, 1).unwrap()
    }

    fn gf3() -> Arc<Field> {
        Field::new(3, 1).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::identity(gf2(), 4);
        let (r, rank) = id.rref();
        assert_eq!(rank, 4);
        assert_eq!(r, id);
    }

    #[test]
    fn rref_collapses_repeated_rows() {
        let m = Matrix::from_rows(gf2(), &[vec![1, 1], vec![1, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[1, 1]);
        assert_eq!(r.row(1), &[0, 0]);
    }

    #[test]
    fn rref_normalizes_pivots_over_gf3() {
        let m = Matrix::from_rows(gf3(), &[vec![2, 1, 0], vec![0, 2, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.get(0, 0), 1);
        assert_eq!(r.get(1, 1), 1);
        // every rref row still lies in the original row space
        assert!(m.row_space_equal(&r).unwrap());
    }

    #[test]
    fn null_space_of_zero_matrix_is_everything() {
        let m = Matrix::zeros(gf2(), 1, 3);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 3);
        assert_eq!(ns, Matrix::identity(gf2(), 3));
    }

    #[test]
    fn null_space_of_identity_is_empty() {
        let ns = Matrix::identity(gf3(), 3).null_space();
        assert_eq!(ns.rows(), 0);
    }

    /// The [7,4] Hamming parity matrix: null space has dimension 4 and its
    /// span has minimum weight 3. The span is enumerated right here, so the
    /// check does not lean on any other module.
    #[test]
    fn hamming_7_4_null_space() {
        let h = Matrix::from_rows(
            gf2(),
            &[
                vec![1, 0, 0, 1, 0, 1, 1],
                vec![0, 1, 0, 1, 1, 1, 0],
                vec![0, 0, 1, 0, 1, 1, 1],
            ],
        )
        .unwrap();
        let g = h.null_space();
        assert_eq!(g.rows(), 4);
        let f = gf2();
        let mut min_wt = usize::MAX;
        let mut count = 0;
        for mask in 1u32..16 {
            let mut word = vec![0u8; 7];
            for (i, row) in g.iter_rows().enumerate() {
                if mask >> i & 1 == 1 {
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w = f.add(*w, r);
                    }
                }
            }
            assert!(h.mul_vec(&word).unwrap().iter().all(|&s| s == 0));
            min_wt = min_wt.min(weight(&word));
            count += 1;
        }
        assert_eq!((count, min_wt), (15, 3));
    }

    #[test]
    fn row_space_equal_detects_equality_and_mismatch() {
        let a = Matrix::from_rows(gf2(), &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let b = Matrix::from_rows(gf2(), &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let c = Matrix::from_rows(gf2(), &[vec![1, 0, 1], vec![1, 1, 1]]).unwrap();
        assert!(a.row_space_equal(&b).unwrap());
        assert!(!a.row_space_equal(&c).unwrap());
        let short = Matrix::from_rows(gf2(), &[vec![1, 0]]).unwrap();
        assert_eq!(
            a.row_space_equal(&short).unwrap_err(),
            Error::ColumnMismatch(3, 2)
        );
    }

    #[test]
    fn mul_vec_checks_length() {
        let m = Matrix::identity(gf2(), 3);
        assert_eq!(m.mul_vec(&[1, 0, 1]).unwrap(), vec![1, 0, 1]);
        assert_eq!(
            m.mul_vec(&[1, 0]).unwrap_err(),
            Error::LengthMismatch {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn concat_blocks() {
        let a = Matrix::identity(gf2(), 2);
        let z = Matrix::zeros(gf2(), 2, 2);
        let h = Matrix::hconcat(&[&a, &z]);
        assert_eq!((h.rows(), h.cols()), (2, 4));
        assert_eq!(h.row(0), &[1, 0, 0, 0]);
        let v = Matrix::vconcat(&[&a, &z]);
        assert_eq!((v.rows(), v.cols()), (4, 2));
        assert_eq!(v.row(2), &[0, 0]);
    }

    #[test]
    fn text_round_trip() {
        let m = Matrix::from_rows(gf3(), &[vec![0, 1, 2], vec![2, 2, 0]]).unwrap();
        let text = m.to_text();
        assert!(text.starts_with("3 1 2 3\n"));
        let back = Matrix::from_text(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn from_text_rejects_garbage() {
        assert!(Matrix::from_text("").is_err());
        assert!(Matrix::from_text("2 1 1 3\n1 0\n").is_err());
        assert!(Matrix::from_text("2 1 1 2\n1 5\n").is_err());
    }

    proptest::proptest! {
        /// rank + nullity = number of columns, on random small matrices.
        #[test]
        fn rank_nullity(
            rows in 1usize..5,
            cols in 1usize..7,
            seed in proptest::collection::vec(0u8..3, 30),
            q in proptest::sample::select(vec![2u16, 3, 4]),
        ) {
            let f = Field::of_order(q).unwrap();
            let entries: Vec<Vec<u8>> = (0..rows)
                .map(|r| (0..cols).map(|c| seed[r * cols + c] % q as u8).collect())
                .collect();
            let m = Matrix::from_rows(f, &entries).unwrap();
            let (rr, rank) = m.rref();
            proptest::prop_assert_eq!(rank + m.null_space().rows(), cols);
            proptest::prop_assert!(m.row_space_equal(&rr).unwrap());
        }
    }
}
