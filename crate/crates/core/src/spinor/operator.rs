//! Sparse square matrices over exact rings, stored by columns.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Matrix;
use crate::rings::{Rational, Ring};

/// A square matrix; each column lists its nonzero `(row, value)` entries in
/// increasing row order.
#[derive(Clone, PartialEq)]
pub struct Operator<R = Rational> {
    dim: usize,
    cols: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> Operator<R> {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize, one: &R) -> Self {
        Self::diagonal((0..dim).map(|_| one.one_like()).collect())
    }

    pub fn diagonal(d: Vec<R>) -> Self {
        let dim = d.len();
        Operator {
            dim,
            cols: d
                .into_iter()
                .enumerate()
                .map(|(i, v)| if v.is_nil() { Vec::new() } else { vec![(i, v)] })
                .collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut cols: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); dim];
        for (i, j, v) in entries {
            assert!(i < dim && j < dim, "entry outside the matrix");
            let slot = cols[j].entry(i).or_insert_with(|| v.zero_like());
            *slot = slot.plus(&v);
        }
        Operator {
            dim,
            cols: cols
                .into_iter()
                .map(|c| c.into_iter().filter(|(_, v)| !v.is_nil()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, R)] {
        &self.cols[j]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&R> {
        self.cols[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .ok()
            .map(|p| &self.cols[j][p].1)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                let mut acc: BTreeMap<usize, R> = BTreeMap::new();
                for (k, b) in bcol {
                    for (i, a) in &self.cols[*k] {
                        let t = a.times(b);
                        match acc.get_mut(i) {
                            Some(v) => *v = v.plus(&t),
                            None => {
                                acc.insert(*i, t);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_nil()).collect()
            })
            .collect();
        Operator { dim: self.dim, cols }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries()
            .chain(other.entries())
            .map(|(i, j, v)| (i, j, v.clone()))
            .collect::<Vec<_>>();
        Self::from_entries(self.dim, entries)
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = self.map(|v| v.times(c));
        for col in &mut out.cols {
            col.retain(|(_, v)| !v.is_nil());
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Operator<S> {
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, v)| (*i, f(v))).collect())
                .collect(),
        }
    }

    /// Trace, with `zero` returned for the empty sum.
    pub fn trace(&self, zero: &R) -> R {
        (0..self.dim)
            .filter_map(|j| self.get(j, j))
            .fold(zero.zero_like(), |acc, v| acc.plus(v))
    }

    /// `Σ_{i ∈ rows} a_ii`.
    pub fn partial_trace(&self, rows: impl IntoIterator<Item = usize>, zero: &R) -> R {
        rows.into_iter()
            .filter_map(|j| self.get(j, j))
            .fold(zero.zero_like(), |acc, v| acc.plus(v))
    }

    pub fn pow(&self, e: u32, one: &R) -> Self {
        (0..e).fold(Self::identity(self.dim, one), |acc, _| acc.mul(self))
    }

    /// Kronecker product `self ⊗ other`, with row index `i·dim(other) + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        let mut cols = vec![Vec::new(); self.dim * d];
        for (ja, acol) in self.cols.iter().enumerate() {
            for (jb, bcol) in other.cols.iter().enumerate() {
                let col = &mut cols[ja * d + jb];
                for (ia, a) in acol {
                    for (ib, b) in bcol {
                        col.push((ia * d + ib, a.times(b)));
                    }
                }
            }
        }
        Operator { dim: self.dim * d, cols }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn anticommutes_with(&self, other: &Self) -> bool {
        self.mul(other).plus(&other.mul(self)).is_zero()
    }

    /// Dense copy, with zeros produced from `zero`.
    pub fn to_dense(&self, zero: &R) -> Matrix<R> {
        let mut m = Matrix::filled(self.dim, self.dim, zero.zero_like());
        for (i, j, v) in self.entries() {
            m.set(i, j, v.clone());
        }
        m
    }
}

impl<R: Ring> fmt::Debug for Operator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({}x{}; ", self.dim, self.dim)?;
        f.debug_list().entries(self.entries()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::int;

    fn op(rows: &[&[i64]]) -> Operator {
        let n = rows.len();
        Operator::from_entries(
            n,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, int(v)))),
        )
    }

    #[test]
    fn arithmetic() {
        let a = op(&[&[0, 1], &[1, 0]]);
        let b = op(&[&[1, 0], &[0, -1]]);
        assert!(a.anticommutes_with(&b));
        assert_eq!(a.mul(&a), Operator::identity(2, &int(1)));
        assert_eq!(a.mul(&b), op(&[&[0, -1], &[1, 0]]));
        assert_eq!(a.plus(&b).trace(&int(0)), int(0));
        assert_eq!(b.partial_trace([0], &int(0)), int(1));
        assert_eq!(a.minus(&a), Operator::zero(2));
        assert_eq!(b.scale(&int(0)).nnz(), 0);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(2, 0), Some(&int(1)));
        assert_eq!(k.get(3, 1), Some(&int(-1)));
        assert_eq!(k.to_dense(&int(0)).determinant(), int(1));
    }
}
