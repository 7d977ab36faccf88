//! Sparse exact null-space solver for large, very sparse homogeneous systems
//! (the equivariance systems behind Hom-spaces).
//!
//! Rows are inserted one at a time and the pivot rows are kept in fully
//! reduced echelon form, so the null space can be read off at the end.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::rational::Q;

/// A sparse vector: strictly increasing column indices with nonzero values.
pub type SparseVec = Vec<(usize, Q)>;

pub fn sparse_from_dense(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `a + f * b`, dropping cancelled entries.
fn axpy(a: &SparseVec, f: &Q, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let v = va + f * vb;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (_, Some((cb, vb))) => {
                out.push((*cb, f * vb));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SparseEliminator {
    ncols: usize,
    /// pivot column -> reduced row (pivot entry normalized to 1)
    rows: HashMap<usize, SparseVec>,
    /// column -> pivot columns whose rows have a nonzero entry there
    occurs: HashMap<usize, Vec<usize>>,
}

impl SparseEliminator {
    pub fn new(ncols: usize) -> Self {
        SparseEliminator { ncols, rows: HashMap::new(), occurs: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let hit = row.iter().find(|(c, _)| self.rows.contains_key(c)).cloned();
            match hit {
                None => return row,
                Some((c, v)) => row = axpy(&row, &-v, &self.rows[&c]),
            }
        }
    }

    /// Adds an equation; returns whether it increased the rank.
    pub fn push(&mut self, row: SparseVec) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        // pivot on the entry of smallest magnitude
        let (pc, pv) = row
            .iter()
            .min_by(|a, b| a.1.abs().cmp(&b.1.abs()).then(a.0.cmp(&b.0)))
            .cloned()
            .unwrap();
        let inv = pv.recip();
        let row: SparseVec = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();

        // eliminate the new pivot column from existing rows
        if let Some(users) = self.occurs.remove(&pc) {
            for p in users {
                let Some(old) = self.rows.get(&p) else { continue };
                let Some(f) = old.iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone()) else {
                    continue;
                };
                let new = axpy(old, &-f, &row);
                for (c, _) in &new {
                    if *c != p {
                        self.occurs.entry(*c).or_default().push(p);
                    }
                }
                self.rows.insert(p, new);
            }
        }
        for (c, _) in &row {
            if *c != pc {
                self.occurs.entry(*c).or_default().push(pc);
            }
        }
        self.rows.insert(pc, row);
        true
    }

    /// Free (non-pivot) columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Null-space basis: one vector per free column, equal to 1 there and 0
    /// at every other free column.
    pub fn nullspace(&self) -> NullBasis {
        let free = self.free_columns();
        let index: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut vecs: Vec<Vec<(usize, Q)>> = free.iter().map(|&f| vec![(f, Q::one())]).collect();
        let mut pivots: Vec<&usize> = self.rows.keys().collect();
        pivots.sort();
        for &p in pivots {
            for (c, v) in &self.rows[&p] {
                if *c != p {
                    if let Some(&k) = index.get(c) {
                        vecs[k].push((p, -v.clone()));
                    }
                }
            }
        }
        for v in &mut vecs {
            v.sort_by_key(|(c, _)| *c);
        }
        NullBasis { dim: self.ncols, free, vectors: vecs }
    }
}

/// Null-space basis in "free column" normal form: the coordinates of any
/// vector of the space are its entries at the free columns.
#[derive(Debug, Clone)]
pub struct NullBasis {
    pub dim: usize,
    pub free: Vec<usize>,
    pub vectors: Vec<SparseVec>,
}

impl NullBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dense(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        for (c, x) in &self.vectors[k] {
            v[*c] = x.clone();
        }
        v
    }

    /// Coordinates of a vector assumed to lie in the span.
    pub fn coordinates(&self, v: &[Q]) -> Vec<Q> {
        self.free.iter().map(|&c| v[c].clone()).collect()
    }

    /// Whether `v` lies in the span (checked by reconstruction).
    pub fn contains(&self, v: &[Q]) -> bool {
        let coords = self.coordinates(v);
        let mut rebuilt = vec![Q::zero(); self.dim];
        for (k, a) in coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, x) in &self.vectors[k] {
                rebuilt[*c] += a * x;
            }
        }
        rebuilt.as_slice() == v
    }
}

/// Solutions `Ψ` (`rows × cols`, flattened row-major) of `L Ψ = Ψ R` for
/// every pair `(L, R)`, with `L` of size `rows` and `R` of size `cols`.
pub fn solve_intertwiners(pairs: &[(&Matrix, &Matrix)], rows: usize, cols: usize) -> NullBasis {
    let mut el = SparseEliminator::new(rows * cols);
    for (l, r) in pairs {
        debug_assert_eq!((l.rows(), r.rows()), (rows, cols));
        let l_rows: Vec<SparseVec> = (0..rows).map(|i| sparse_from_dense(l.row(i))).collect();
        let r_cols: Vec<SparseVec> = (0..cols).map(|j| sparse_from_dense(&r.col(j))).collect();
        for i in 0..rows {
            for j in 0..cols {
                let mut eq: Vec<(usize, Q)> = Vec::with_capacity(l_rows[i].len() + r_cols[j].len());
                for (k, x) in &l_rows[i] {
                    eq.push((k * cols + j, x.clone()));
                }
                for (k, x) in &r_cols[j] {
                    eq.push((i * cols + k, -x.clone()));
                }
                eq.sort_by_key(|(c, _)| *c);
                let mut merged: SparseVec = Vec::with_capacity(eq.len());
                for (c, x) in eq {
                    match merged.last_mut() {
                        Some((lc, lx)) if *lc == c => *lx += x,
                        _ => merged.push((c, x)),
                    }
                }
                merged.retain(|(_, x)| !x.is_zero());
                if !merged.is_empty() {
                    el.push(merged);
                }
            }
        }
    }
    el.nullspace()
}

/// Reshapes a flattened row-major vector into a matrix.
pub fn unflatten(v: &[Q], rows: usize, cols: usize) -> Matrix {
    Matrix::from_data(rows, cols, v.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_dense_nullspace(entries in prop::collection::vec(-2i64..3, 12), ncols in 2usize..5) {
            let nrows = entries.len() / ncols;
            let rows: Vec<Vec<i64>> = entries.chunks(ncols).take(nrows).map(<[i64]>::to_vec).collect();
            let dense = Matrix::from_i64(&rows);
            let mut el = SparseEliminator::new(ncols);
            for r in &rows {
                el.push(sparse_from_dense(&r.iter().map(|&x| q(x)).collect::<Vec<_>>()));
            }
            prop_assert_eq!(el.rank(), dense.rank());
            let ns = el.nullspace();
            prop_assert_eq!(ns.len(), ncols - dense.rank());
            for k in 0..ns.len() {
                let v = ns.dense(k);
                prop_assert!(dense.mul_vec(&v).iter().all(Zero::is_zero));
                prop_assert!(ns.contains(&v));
            }
        }

        #[test]
        fn intertwiners_commute(entries in prop::collection::vec(-2i64..3, 4)) {
            let a = Matrix::from_i64(&[entries[..2].to_vec(), entries[2..].to_vec()]);
            let ns = solve_intertwiners(&[(&a, &a)], 2, 2);
            // identity always commutes; every solution really commutes
            prop_assert!(ns.contains(&[q(1), q(0), q(0), q(1)]));
            for k in 0..ns.len() {
                let p = unflatten(&ns.dense(k), 2, 2);
                prop_assert_eq!(&a * &p, &p * &a);
            }
        }
    }
}
