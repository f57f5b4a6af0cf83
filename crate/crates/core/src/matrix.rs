//! Sparse matrices over [`Scalar`], stored row-major with each row sorted by
//! column.
//!
//! Basis indices are 0-based internally; [`SparseMat::unit`] and the
//! tensor-index helpers take 1-based labels to match `E_{ij}` notation.

use crate::scalar::{Scalar, ScalarError};
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

/// First entry where two matrices differ, with the value of the difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "entry ({}, {}) = {}", self.row, self.col, self.value)
    }
}

impl SparseMat {
    pub fn zeros(n_rows: usize, n_cols: usize) -> SparseMat {
        SparseMat { n_rows, n_cols, rows: vec![Vec::new(); n_rows] }
    }

    pub fn identity(n: usize) -> SparseMat {
        SparseMat::diagonal((0..n).map(|_| Scalar::one()).collect())
    }

    pub fn diagonal(d: Vec<Scalar>) -> SparseMat {
        let n = d.len();
        let rows = d
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        SparseMat { n_rows: n, n_cols: n, rows }
    }

    /// Matrix unit `E_{ij}` of size `n`, 1-based.
    pub fn unit(n: usize, i: usize, j: usize) -> SparseMat {
        let mut m = SparseMat::zeros(n, n);
        m.rows[i - 1].push((j - 1, Scalar::one()));
        m
    }

    /// Builds from triplets; repeated coordinates are summed.
    pub fn from_triplets<I>(n_rows: usize, n_cols: usize, it: I) -> SparseMat
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n_rows];
        for (r, c, x) in it {
            assert!(r < n_rows && c < n_cols, "index ({}, {}) out of bounds", r, c);
            let slot = acc[r].entry(c).or_insert_with(Scalar::zero);
            *slot += &x;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMat { n_rows, n_cols, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn diagonal_entries(&self) -> Vec<Scalar> {
        (0..self.n_rows.min(self.n_cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn add(&self, o: &SparseMat) -> SparseMat {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &SparseMat) -> SparseMat {
        self.combine(o, true)
    }

    fn combine(&self, o: &SparseMat, negate: bool) -> SparseMat {
        assert_eq!((self.n_rows, self.n_cols), (o.n_rows, o.n_cols), "shape mismatch");
        let rows = self
            .rows
            .par_iter()
            .zip(o.rows.par_iter())
            .map(|(a, b)| merge_rows(a, b, negate))
            .collect();
        SparseMat { n_rows: self.n_rows, n_cols: self.n_cols, rows }
    }

    pub fn scale(&self, k: &Scalar) -> SparseMat {
        if k.is_zero() {
            return SparseMat::zeros(self.n_rows, self.n_cols);
        }
        let rows = self
            .rows
            .par_iter()
            .map(|row| row.iter().map(|(c, x)| (*c, x * k)).collect())
            .collect();
        SparseMat { n_rows: self.n_rows, n_cols: self.n_cols, rows }
    }

    pub fn neg(&self) -> SparseMat {
        self.map(|x| -x)
    }

    pub fn mul(&self, o: &SparseMat) -> SparseMat {
        assert_eq!(self.n_cols, o.n_rows, "shape mismatch in product");
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &o.rows[*k] {
                        let slot = acc.entry(*c).or_insert_with(Scalar::zero);
                        *slot += &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMat { n_rows: self.n_rows, n_cols: o.n_cols, rows }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.n_cols, v.len());
        self.rows
            .par_iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (c, x) in row {
                    if !v[*c].is_zero() {
                        acc += &(x * &v[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> SparseMat {
        assert_eq!(self.n_rows, self.n_cols);
        let mut out = SparseMat::identity(self.n_rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Kronecker product; the left factor indexes the outer block.
    pub fn kron(&self, o: &SparseMat) -> SparseMat {
        let (n_rows, n_cols) = (self.n_rows * o.n_rows, self.n_cols * o.n_cols);
        let mut rows = vec![Vec::new(); n_rows];
        for (r1, row1) in self.rows.iter().enumerate() {
            for r2 in 0..o.n_rows {
                let out = &mut rows[r1 * o.n_rows + r2];
                for (c1, a) in row1 {
                    for (c2, b) in &o.rows[r2] {
                        out.push((c1 * o.n_cols + c2, a * b));
                    }
                }
            }
        }
        SparseMat { n_rows, n_cols, rows }
    }

    pub fn transpose(&self) -> SparseMat {
        SparseMat::from_triplets(
            self.n_cols,
            self.n_rows,
            self.entries().map(|(r, c, x)| (c, r, x.clone())),
        )
    }

    pub fn map<F>(&self, f: F) -> SparseMat
    where
        F: Fn(&Scalar) -> Scalar + Sync,
    {
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                row.iter()
                    .filter_map(|(c, x)| {
                        let y = f(x);
                        (!y.is_zero()).then_some((*c, y))
                    })
                    .collect()
            })
            .collect();
        SparseMat { n_rows: self.n_rows, n_cols: self.n_cols, rows }
    }

    pub fn try_map<F>(&self, f: F) -> Result<SparseMat, ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, ScalarError> + Sync,
    {
        let rows: Result<Vec<Vec<(usize, Scalar)>>, ScalarError> = self
            .rows
            .par_iter()
            .map(|row| {
                let mut out = Vec::with_capacity(row.len());
                for (c, x) in row {
                    let y = f(x)?;
                    if !y.is_zero() {
                        out.push((*c, y));
                    }
                }
                Ok(out)
            })
            .collect();
        Ok(SparseMat { n_rows: self.n_rows, n_cols: self.n_cols, rows: rows? })
    }

    pub fn substitute(&self, bindings: &[(usize, Scalar)]) -> Result<SparseMat, ScalarError> {
        self.try_map(|x| x.substitute(bindings))
    }

    /// Inverse of a diagonal matrix, `None` if not diagonal or singular.
    pub fn diagonal_inverse(&self) -> Option<SparseMat> {
        if !self.is_diagonal() || self.n_rows != self.n_cols {
            return None;
        }
        let d = self.diagonal_entries();
        if d.iter().any(Scalar::is_zero) {
            return None;
        }
        Some(SparseMat::diagonal(d.iter().map(Scalar::inv).collect()))
    }

    /// First entry (row-major) of `self - o` that is nonzero.
    pub fn first_difference(&self, o: &SparseMat) -> Option<Witness> {
        assert_eq!((self.n_rows, self.n_cols), (o.n_rows, o.n_cols), "shape mismatch");
        for r in 0..self.n_rows {
            let d = merge_rows(&self.rows[r], &o.rows[r], true);
            if let Some((c, x)) = d.into_iter().next() {
                return Some(Witness { row: r, col: c, value: x });
            }
        }
        None
    }

    /// First nonzero entry, row-major.
    pub fn first_nonzero(&self) -> Option<Witness> {
        self.entries()
            .next()
            .map(|(r, c, x)| Witness { row: r, col: c, value: x.clone() })
    }

    /// `[self, o] = self·o − o·self`.
    pub fn commutator(&self, o: &SparseMat) -> SparseMat {
        self.mul(o).sub(&o.mul(self))
    }
}

fn merge_rows(a: &[(usize, Scalar)], b: &[(usize, Scalar)], negate: bool) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, a[i].1.clone()));
                i += 1;
            }
            (Some(_), None) => {
                out.push((a[i].0, a[i].1.clone()));
                i += 1;
            }
            _ => {
                let v = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, v));
                j += 1;
            }
        }
    }
    out
}

/// Flattened 0-based index of `v_i ⊗ v_j` (1-based labels) in `V ⊗ V`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// `E_{ij} ⊗ E_{kl}` on `V ⊗ V`, 1-based.
pub fn unit2(n: usize, i: usize, j: usize, k: usize, l: usize) -> (usize, usize) {
    (pair_index(n, i, k), pair_index(n, j, l))
}

/// The flip `τ(v_i ⊗ v_j) = v_j ⊗ v_i`.
pub fn flip(n: usize) -> SparseMat {
    SparseMat::from_triplets(
        n * n,
        n * n,
        (1..=n).flat_map(|i| (1..=n).map(move |j| (pair_index(n, j, i), pair_index(n, i, j), Scalar::one()))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    #[test]
    fn units_multiply() {
        let a = SparseMat::unit(3, 1, 2);
        let b = SparseMat::unit(3, 2, 3);
        assert_eq!(a.mul(&b), SparseMat::unit(3, 1, 3));
        assert!(b.mul(&a).is_zero());
    }

    #[test]
    fn kron_of_units_is_tensor_unit() {
        let n = 3;
        let k = SparseMat::unit(n, 1, 2).kron(&SparseMat::unit(n, 3, 1));
        let (r, c) = unit2(n, 1, 2, 3, 1);
        assert_eq!(k.nnz(), 1);
        assert!(k.get(r, c).is_one());
    }

    #[test]
    fn flip_swaps_factors() {
        let t = flip(3);
        let mut v = vec![Scalar::zero(); 9];
        v[pair_index(3, 1, 2)] = s(1);
        let w = t.apply(&v);
        assert!(w[pair_index(3, 2, 1)].is_one());
        assert!(t.mul(&t) == SparseMat::identity(9));
    }

    #[test]
    fn witness_points_at_difference() {
        let a = SparseMat::from_triplets(2, 2, vec![(0, 0, s(1)), (1, 1, s(2))]);
        let b = SparseMat::from_triplets(2, 2, vec![(0, 0, s(1)), (1, 1, s(5))]);
        let w = a.first_difference(&b).unwrap();
        assert_eq!((w.row, w.col, w.value), (1, 1, s(-3)));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn triplets_accumulate_and_cancel() {
        let m = SparseMat::from_triplets(1, 1, vec![(0, 0, s(2)), (0, 0, s(-2))]);
        assert!(m.is_zero());
    }
}
