//! Exact sparse linear algebra over the rationals.
//!
//! Rows are sparse maps from column index to a nonzero rational.  Elimination is
//! incremental: each new row is reduced against the pivots found so far, so the
//! pivot set is always in echelon form and can be back-reduced on demand.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::polyring::Q;

/// Sparse row vector.
pub type SparseVec = BTreeMap<usize, Q>;

/// `acc += c * v`, keeping the vector free of zeros.
pub fn axpy(acc: &mut SparseVec, c: &Q, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// An echelon basis of a row space, built one row at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    /// Reduces `row` against the current pivots (every pivot column is cleared).
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = row.range(cursor..).find(|(c, _)| self.pivots.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            match next {
                None => return row,
                Some((c, x)) => {
                    let p = &self.pivots[&c];
                    axpy(&mut row, &-x, p);
                    cursor = c + 1;
                }
            }
        }
    }

    /// Inserts a row; returns whether it was independent of the previous rows.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lc)) = row.iter().next() else {
            return false;
        };
        let inv = Q::one() / lc;
        let mut normalized = SparseVec::new();
        axpy(&mut normalized, &inv, &row);
        // keep existing pivot rows clear of the new pivot column
        for p in self.pivots.values_mut() {
            if let Some(x) = p.get(&lead).cloned() {
                axpy(p, &-x, &normalized);
            }
        }
        self.pivots.insert(lead, normalized);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Whether `row` lies in the span.
    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Rows of the reduced row echelon form, ordered by pivot column.
    pub fn rows(&self) -> Vec<SparseVec> {
        self.pivots.values().cloned().collect()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Basis of the null space `{x : row . x = 0 for all rows}` in `ncols` columns.
    ///
    /// One vector per free column `f`, with `x_f = 1`; these vectors are in
    /// reduced echelon form with respect to reversed column order.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for f in 0..ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(f, Q::one());
            for (p, row) in &self.pivots {
                if let Some(x) = row.get(&f) {
                    v.insert(*p, -x);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a list of rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
