//! Exact dense and sparse linear algebra over any [`Scalar`] field: rank,
//! reduced echelon form, null spaces, solving. Pivoting prefers sparse rows to
//! limit fill-in; everything is fraction-exact.

use crate::field::Scalar;
use std::collections::BTreeMap;

/// Dense column-major-free matrix (row-major storage).
#[derive(Clone, PartialEq)]
pub struct Mat<S> {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![S::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        Mat { nrows, ncols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &S) {
        let cur = self.get(i, j).add(v);
        self.set(i, j, cur);
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows);
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one().neg())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.nrows, self.ncols);
        let mut t = S::zero();
        for i in 0..self.nrows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn is_scalar_multiple_of_identity(&self) -> Option<S> {
        assert_eq!(self.nrows, self.ncols);
        if self.nrows == 0 {
            return Some(S::zero());
        }
        let d = self.get(0, 0).clone();
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let expect = if i == j { d.clone() } else { S::zero() };
                if *self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(d)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.ncols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal stack of blocks.
    pub fn hstack(blocks: &[&Mat<S>]) -> Self {
        let nrows = blocks[0].nrows;
        let ncols = blocks.iter().map(|b| b.ncols).sum();
        let mut out = Self::zeros(nrows, ncols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.nrows, nrows);
            for i in 0..nrows {
                for j in 0..b.ncols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.ncols;
        }
        out
    }

    /// Vertical stack of blocks.
    pub fn vstack(blocks: &[&Mat<S>]) -> Self {
        let ncols = blocks[0].ncols;
        let nrows = blocks.iter().map(|b| b.nrows).sum();
        let mut out = Self::zeros(nrows, ncols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.ncols, ncols);
            for i in 0..b.nrows {
                for j in 0..ncols {
                    out.set(off + i, j, b.get(i, j).clone());
                }
            }
            off += b.nrows;
        }
        out
    }
}

impl<S: Scalar> std::fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of row reduction: reduced rows (as sparse maps col -> value with a
/// leading 1 at `pivots[k]`), in pivot order.
pub struct Echelon<S> {
    pub pivots: Vec<usize>,
    pub rows: Vec<BTreeMap<usize, S>>,
    pub ncols: usize,
}

impl<S: Scalar> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right null space as dense vectors.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let pivot_set: std::collections::HashSet<usize> = self.pivots.iter().cloned().collect();
        let free: Vec<usize> = (0..self.ncols).filter(|j| !pivot_set.contains(j)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fj in &free {
            let mut v = vec![S::zero(); self.ncols];
            v[fj] = S::one();
            for (k, &pj) in self.pivots.iter().enumerate() {
                if let Some(c) = self.rows[k].get(&fj) {
                    v[pj] = c.neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduce a vector modulo the row space; returns the remainder.
    pub fn reduce_vector(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (k, &pj) in self.pivots.iter().enumerate() {
            if v[pj].is_zero() {
                continue;
            }
            let coef = v[pj].clone();
            for (j, c) in &self.rows[k] {
                v[*j] = v[*j].sub(&coef.mul(c));
            }
        }
        v
    }

    pub fn row_space_contains(&self, v: &[S]) -> bool {
        self.reduce_vector(v).iter().all(|x| x.is_zero())
    }
}

/// Sparse row echelon over a field, with min-fill-ish pivoting.
/// Rows are given as sparse maps; zero rows are allowed.
pub fn echelon_sparse<S: Scalar>(
    mut rows: Vec<BTreeMap<usize, S>>,
    ncols: usize,
) -> Echelon<S> {
    let mut done_rows: Vec<BTreeMap<usize, S>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    rows.retain(|r| !r.is_empty());
    while !rows.is_empty() {
        // pick the row with the fewest nonzeros
        let (best, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .map(|(i, r)| (i, r.len()))
            .unwrap();
        let mut pivot_row = rows.swap_remove(best);
        // pivot column: the one with the fewest occurrences among remaining rows
        let (&pcol, _) = pivot_row
            .iter()
            .min_by_key(|(col, _)| rows.iter().filter(|r| r.contains_key(*col)).count())
            .unwrap();
        let pval = pivot_row.get(&pcol).unwrap().clone();
        let pinv = pval.inv().expect("pivot nonzero");
        for v in pivot_row.values_mut() {
            *v = v.mul(&pinv);
        }
        // eliminate from remaining rows
        for r in rows.iter_mut() {
            if let Some(c) = r.get(&pcol).cloned() {
                for (j, pv) in &pivot_row {
                    let cur = r.get(j).cloned().unwrap_or_else(S::zero);
                    let nv = cur.sub(&c.mul(pv));
                    if nv.is_zero() {
                        r.remove(j);
                    } else {
                        r.insert(*j, nv);
                    }
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        // back-substitute into already-finished rows
        for r in done_rows.iter_mut() {
            if let Some(c) = r.get(&pcol).cloned() {
                for (j, pv) in &pivot_row {
                    let cur = r.get(j).cloned().unwrap_or_else(S::zero);
                    let nv = cur.sub(&c.mul(pv));
                    if nv.is_zero() {
                        r.remove(j);
                    } else {
                        r.insert(*j, nv);
                    }
                }
            }
        }
        done_rows.push(pivot_row);
        pivots.push(pcol);
    }
    // sort by pivot column for determinism
    let mut order: Vec<usize> = (0..pivots.len()).collect();
    order.sort_by_key(|&k| pivots[k]);
    let rows = order.iter().map(|&k| done_rows[k].clone()).collect();
    let pivots = order.iter().map(|&k| pivots[k]).collect();
    Echelon { pivots, rows, ncols }
}

pub fn mat_to_sparse_rows<S: Scalar>(m: &Mat<S>) -> Vec<BTreeMap<usize, S>> {
    (0..m.nrows)
        .map(|i| {
            let mut row = BTreeMap::new();
            for j in 0..m.ncols {
                let v = m.get(i, j);
                if !v.is_zero() {
                    row.insert(j, v.clone());
                }
            }
            row
        })
        .collect()
}

pub fn rank<S: Scalar>(m: &Mat<S>) -> usize {
    echelon_sparse(mat_to_sparse_rows(m), m.ncols).rank()
}

/// Basis of `{ v : m v = 0 }` as columns of a matrix.
pub fn nullspace<S: Scalar>(m: &Mat<S>) -> Vec<Vec<S>> {
    echelon_sparse(mat_to_sparse_rows(m), m.ncols).nullspace()
}

/// Column span echelon: returns an echelon of the TRANSPOSE row space, i.e. a
/// canonical spanning set of the column space of `m`.
pub fn column_space<S: Scalar>(m: &Mat<S>) -> Echelon<S> {
    echelon_sparse(mat_to_sparse_rows(&m.transpose()), m.nrows)
}

/// Solve `a x = b` for one vector; `None` if inconsistent.
pub fn solve<S: Scalar>(a: &Mat<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.nrows, b.len());
    // echelonize [a | b] columns-wise via the transpose trick: we do standard
    // augmented elimination densely here; sizes at call sites are small.
    let n = a.nrows;
    let m = a.ncols;
    let mut rows: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut r: Vec<S> = (0..m).map(|j| a.get(i, j).clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut used = vec![false; n];
    for col in 0..m {
        let Some(pr) = (0..n).find(|&i| !used[i] && !rows[i][col].is_zero()) else {
            continue;
        };
        used[pr] = true;
        let inv = rows[pr][col].inv().unwrap();
        for v in rows[pr].iter_mut() {
            *v = v.mul(&inv);
        }
        for i in 0..n {
            if i != pr && !rows[i][col].is_zero() {
                let c = rows[i][col].clone();
                for j in 0..=m {
                    let v = rows[i][j].sub(&c.mul(&rows[pr][j]));
                    rows[i][j] = v;
                }
            }
        }
        pivots.push((pr, col));
    }
    // inconsistency: a row with zero coefficients but nonzero rhs
    for i in 0..n {
        if rows[i][..m].iter().all(|v| v.is_zero()) && !rows[i][m].is_zero() {
            return None;
        }
    }
    let mut x = vec![S::zero(); m];
    for (pr, col) in pivots {
        x[col] = rows[pr][m].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ratio, Rational};

    fn m(rows: Vec<Vec<i64>>) -> Mat<Rational> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.apply(v).iter().all(|x| Scalar::is_zero(x)));
        }
    }

    #[test]
    fn solve_small() {
        let a = m(vec![vec![2, 0], vec![1, 1]]);
        let b = vec![rat(3), rat(4)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![ratio(3, 2), ratio(5, 2)]);
        let inconsistent = m(vec![vec![1, 1], vec![2, 2]]);
        assert!(solve(&inconsistent, &[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn echelon_reduce_vector() {
        let a = m(vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let ech = echelon_sparse(mat_to_sparse_rows(&a), 3);
        assert!(ech.row_space_contains(&[rat(1), rat(2), rat(1)]));
        assert!(!ech.row_space_contains(&[rat(1), rat(0), rat(1)]));
    }
}
