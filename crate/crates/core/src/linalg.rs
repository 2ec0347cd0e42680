//! Sparse exact Gaussian elimination over `Q(ζ_E)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalars::Scalar;

/// Sorted `(column, value)` pairs with no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Builds a sparse vector from a dense slice.
pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = alloc::vec![Scalar::zero(); n];
    for (i, s) in v {
        out[*i] = s.clone();
    }
    out
}

/// Incrementally maintained row echelon form with monic leading entries.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Reduces `v` against the stored rows; the residual has no pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).map(|(&c, _)| c).find(|c| self.pivot_row.contains_key(c));
            let Some(c) = next else { break };
            let factor = work.remove(&c).expect("present");
            let row = &self.rows[self.pivot_row[&c]];
            for (col, val) in row.iter().skip(1) {
                let e = work.entry(*col).or_insert_with(Scalar::zero);
                *e -= &(&factor * val);
                if e.is_zero() {
                    work.remove(col);
                }
            }
            cursor = c + 1;
        }
        work.into_iter().collect()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.inv().expect("nonzero");
        let row: SparseVec = r.into_iter().map(|(c, s)| (c, &s * &lead)).collect();
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Fully reduced rows, sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut order: Vec<(usize, usize)> = self.pivot_row.iter().map(|(&c, &r)| (c, r)).collect();
        order.sort();
        let mut done: Vec<SparseVec> = Vec::with_capacity(order.len());
        let mut done_pivot: BTreeMap<usize, usize> = BTreeMap::new();
        // Back substitution from the last pivot.
        for &(c, r) in order.iter().rev() {
            let mut work: BTreeMap<usize, Scalar> = self.rows[r].iter().cloned().collect();
            let cols: Vec<usize> = work.keys().copied().filter(|k| *k > c && done_pivot.contains_key(k)).collect();
            for k in cols {
                let Some(f) = work.remove(&k) else { continue };
                for (col, val) in done[done_pivot[&k]].iter().skip(1) {
                    let e = work.entry(*col).or_insert_with(Scalar::zero);
                    *e -= &(&f * val);
                    if e.is_zero() {
                        work.remove(col);
                    }
                }
            }
            done_pivot.insert(c, done.len());
            done.push(work.into_iter().collect());
        }
        done.reverse();
        done
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }
}

/// Rank of a matrix given by sparse rows.
pub fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let rref = e.rref();
    let pivots: BTreeMap<usize, &SparseVec> = rref.iter().map(|r| (r[0].0, r)).collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains_key(&free) {
            continue;
        }
        let mut v: BTreeMap<usize, Scalar> = BTreeMap::new();
        v.insert(free, Scalar::one());
        for (&p, row) in &pivots {
            if let Ok(i) = row.binary_search_by(|(c, _)| c.cmp(&free)) {
                v.insert(p, -&row[i].1);
            }
        }
        out.push(v.into_iter().collect());
    }
    out
}

/// One solution of `M x = b`, free variables set to zero.
pub fn solve(rows: &[SparseVec], b: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    let mut e = Echelon::new();
    for (r, bi) in rows.iter().zip(b) {
        let mut aug = r.clone();
        if !bi.is_zero() {
            aug.push((ncols, bi.clone()));
        }
        e.insert(&aug);
    }
    if e.pivot_row.contains_key(&ncols) {
        return None;
    }
    let mut x = alloc::vec![Scalar::zero(); ncols];
    for row in e.rref() {
        let p = row[0].0;
        if let Some((c, v)) = row.last() {
            if *c == ncols {
                x[p] = v.clone();
            }
        }
    }
    Some(x)
}

/// Applies sparse rows to a dense vector.
pub fn apply(rows: &[SparseVec], x: &[Scalar]) -> Vec<Scalar> {
    rows.iter().map(|r| r.iter().map(|(c, v)| v * &x[*c]).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = alloc::vec![alloc::vec![(0, s(1)), (1, s(2)), (2, s(3))], alloc::vec![(0, s(2)), (1, s(4)), (2, s(6))]];
        assert_eq!(rank(&rows), 1);
        let k = nullspace(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let x = dense_from_sparse(v, 3);
            assert!(apply(&rows, &x).iter().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let rows = alloc::vec![alloc::vec![(0, s(1)), (1, s(1))], alloc::vec![(1, s(1))]];
        let x = solve(&rows, &[s(3), s(1)], 2).unwrap();
        assert_eq!(x, alloc::vec![s(2), s(1)]);
        let rows = alloc::vec![alloc::vec![(0, s(1))], alloc::vec![(0, s(2))]];
        assert!(solve(&rows, &[s(1), s(1)], 1).is_none());
    }
}
