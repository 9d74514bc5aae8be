//! Exact sparse Gaussian elimination over a field.

use std::collections::BTreeMap;

use crate::coeffs::Field;

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incremental row echelon form. Each stored row is monic and keyed by its
/// leading column.
pub struct Echelon<'a, F: Field> {
    field: &'a F,
    pivots: BTreeMap<usize, SparseRow<F::Elem>>,
}

impl<'a, F: Field> Echelon<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn axpy(&self, row: &SparseRow<F::Elem>, c: &F::Elem, pivot: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        // row - c * pivot
        let f = self.field;
        let mut out = Vec::with_capacity(row.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < row.len() || j < pivot.len() {
            let ci = row.get(i).map_or(usize::MAX, |t| t.0);
            let cj = pivot.get(j).map_or(usize::MAX, |t| t.0);
            if ci < cj {
                out.push(row[i].clone());
                i += 1;
            } else if cj < ci {
                out.push((cj, f.neg(&f.mul(c, &pivot[j].1))));
                j += 1;
            } else {
                let v = f.sub(&row[i].1, &f.mul(c, &pivot[j].1));
                if !f.is_zero(&v) {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Reduces the leading entries of `row` until its leading column is not
    /// a pivot; returns the result.
    pub fn top_reduce(&self, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = self.axpy(&row, &v, p),
                None => break,
            }
        }
        row
    }

    /// Fully reduced form of `row`.
    pub fn reduce(&self, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let mut k = 0;
        while k < row.len() {
            let (c, v) = row[k].clone();
            match self.pivots.get(&c) {
                Some(p) => row = self.axpy(&row, &v, p),
                None => k += 1,
            }
        }
        row
    }

    /// Adds `row`; `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> bool {
        let mut r = self.top_reduce(row);
        match r.first().cloned() {
            None => false,
            Some((c, v)) => {
                let inv = self.field.inv(&v).expect("nonzero");
                for t in r.iter_mut() {
                    t.1 = self.field.mul(&t.1, &inv);
                }
                self.pivots.insert(c, r);
                true
            }
        }
    }
}

/// Rank of a set of sparse rows. Each row is scattered into a dense buffer
/// and eliminated column by column, so pivots are applied in place.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> usize {
    let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let ncols = rows.iter().filter_map(|r| r.last()).map(|t| t.0 + 1).max().unwrap_or(0);
    let mut pivots: Vec<Option<SparseRow<F::Elem>>> = vec![None; ncols];
    let mut dense = vec![field.zero(); ncols];
    let mut rank = 0;
    for row in rows {
        let start = row[0].0;
        for (c, v) in row {
            dense[c] = v;
        }
        let mut c = start;
        while c < ncols {
            if field.is_zero(&dense[c]) {
                c += 1;
                continue;
            }
            match &pivots[c] {
                Some(p) => {
                    let v = dense[c].clone();
                    for (k, x) in p {
                        dense[*k] = field.sub(&dense[*k], &field.mul(&v, x));
                    }
                }
                None => {
                    let inv = field.inv(&dense[c]).expect("nonzero");
                    let mut p = Vec::new();
                    for (k, slot) in dense.iter_mut().enumerate().skip(c) {
                        if !field.is_zero(slot) {
                            p.push((k, field.mul(slot, &inv)));
                            *slot = field.zero();
                        }
                    }
                    pivots[c] = Some(p);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Basis of `{ y : Σ_i y_i rows[i] = 0 }`, as dense vectors of length `rows.len()`.
pub fn left_kernel<F: Field>(field: &F, rows: &[SparseRow<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let m = rows.len();
    // append an identity block after the largest column used
    let offset = rows.iter().filter_map(|r| r.last().map(|t| t.0 + 1)).max().unwrap_or(0);
    let mut e = Echelon::new(field);
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut aug = r.clone();
        aug.push((offset + i, field.one()));
        let red = e.top_reduce(aug);
        if red.first().is_some_and(|t| t.0 >= offset) {
            let mut v = vec![field.zero(); m];
            for (c, x) in &red {
                v[c - offset] = x.clone();
            }
            out.push(v);
        } else {
            e.insert(red);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    #[test]
    fn rank_and_kernel() {
        let f = PrimeField::new(7).unwrap();
        let rows = vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)], vec![(1, 1), (2, 1)]];
        assert_eq!(rank(&f, rows.clone()), 2);
        let k = left_kernel(&f, &rows);
        assert_eq!(k, vec![vec![5, 1, 0]]);
    }
}
