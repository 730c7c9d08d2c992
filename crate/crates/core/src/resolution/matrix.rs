use std::collections::HashMap;

use super::poly::SparsePoly;
use crate::error::{Error, Result};
use crate::limits::MAX_DET_DIM;

/// Dense matrix of sparse polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    entries: Vec<SparsePoly>,
}

impl SymbolicMatrix {
    pub fn zeros(rows: usize, cols: usize, arity: usize) -> Self {
        SymbolicMatrix {
            rows,
            cols,
            arity,
            entries: vec![SparsePoly::zero(arity); rows * cols],
        }
    }

    pub fn from_rows(arity: usize, rows: Vec<Vec<SparsePoly>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::usage("ragged matrix rows"));
        }
        if rows.iter().flatten().any(|p| p.arity() != arity) {
            return Err(Error::usage("matrix entries must share the arity"));
        }
        Ok(SymbolicMatrix {
            rows: n,
            cols: m,
            arity,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, r: usize, c: usize) -> &SparsePoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: SparsePoly) {
        debug_assert_eq!(p.arity(), self.arity);
        self.entries[r * self.cols + c] = p;
    }

    /// Copy with row `skip` removed.
    pub fn without_row(&self, skip: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&r| r != skip)
            .flat_map(|r| {
                self.entries[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .cloned()
            })
            .collect();
        SymbolicMatrix {
            rows: self.rows - 1,
            cols: self.cols,
            arity: self.arity,
            entries,
        }
    }
}

/// Exact determinant by Laplace expansion along the sparsest remaining row or
/// column, memoized on the (rows, columns) index sets of each minor.
pub fn determinant(m: &SymbolicMatrix) -> Result<SparsePoly> {
    if m.rows != m.cols {
        return Err(Error::usage(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if m.rows > MAX_DET_DIM {
        return Err(Error::resource(
            format!("determinant of a {}x{} matrix", m.rows, m.cols),
            MAX_DET_DIM as u64,
        ));
    }
    let full = if m.rows == 0 { 0 } else { (1u32 << m.rows) - 1 };
    let mut memo = HashMap::new();
    Ok(det_rec(m, full, full, &mut memo))
}

fn det_rec(
    m: &SymbolicMatrix,
    rows: u32,
    cols: u32,
    memo: &mut HashMap<(u32, u32), SparsePoly>,
) -> SparsePoly {
    if rows == 0 {
        return SparsePoly::one(m.arity);
    }
    if let Some(p) = memo.get(&(rows, cols)) {
        return p.clone();
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|r| rows & (1 << r) != 0).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|c| cols & (1 << c) != 0).collect();

    let row_nnz = |r: usize| {
        live_cols
            .iter()
            .filter(|&&c| !m.get(r, c).is_zero())
            .count()
    };
    let col_nnz = |c: usize| {
        live_rows
            .iter()
            .filter(|&&r| !m.get(r, c).is_zero())
            .count()
    };
    let best_row = live_rows
        .iter()
        .enumerate()
        .map(|(p, &r)| (row_nnz(r), p))
        .min();
    let best_col = live_cols
        .iter()
        .enumerate()
        .map(|(p, &c)| (col_nnz(c), p))
        .min();
    let (best_row, best_col) = (best_row.expect("nonempty"), best_col.expect("nonempty"));

    let mut acc = SparsePoly::zero(m.arity);
    if best_row.0 <= best_col.0 {
        let (rp, r) = (best_row.1, live_rows[best_row.1]);
        for (cp, &c) in live_cols.iter().enumerate() {
            let e = m.get(r, c);
            if e.is_zero() {
                continue;
            }
            let sub = det_rec(m, rows & !(1 << r), cols & !(1 << c), memo);
            let term = e.mul(&sub);
            acc.add_assign(&if (rp + cp) % 2 == 0 { term } else { term.neg() });
        }
    } else {
        let (cp, c) = (best_col.1, live_cols[best_col.1]);
        for (rp, &r) in live_rows.iter().enumerate() {
            let e = m.get(r, c);
            if e.is_zero() {
                continue;
            }
            let sub = det_rec(m, rows & !(1 << r), cols & !(1 << c), memo);
            let term = e.mul(&sub);
            acc.add_assign(&if (rp + cp) % 2 == 0 { term } else { term.neg() });
        }
    }
    memo.insert((rows, cols), acc.clone());
    acc
}
