//! Pruning a (possibly non-minimal) resolution down to a minimal one.
//!
//! A unit entry `u` at `(r, c)` of `φ_ℓ` splits off `S·e_c ≅ S·φ(e_c)`. After
//! clearing row `r` by column operations the change of basis leaves every
//! other column of `φ_{ℓ-1}` and every other row of `φ_{ℓ+1}` untouched, so
//! the pivot only deletes row `c` of `φ_{ℓ+1}` and column `r` of `φ_{ℓ-1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::matrix::GradedMatrix;
use crate::coeffs::Field;
use crate::error::Result;
use crate::poly::{PolyRing, Polynomial};

struct Map<F: Field> {
    cols: Vec<BTreeMap<usize, Polynomial<F>>>,
    rows: Vec<BTreeSet<usize>>,
    units: BTreeSet<(usize, usize)>,
}

impl<F: Field> Map<F> {
    fn set(&mut self, r: usize, c: usize, p: Option<Polynomial<F>>) {
        match p.filter(|p| !p.is_zero()) {
            Some(p) => {
                if p.is_constant() {
                    self.units.insert((r, c));
                } else {
                    self.units.remove(&(r, c));
                }
                self.rows[r].insert(c);
                self.cols[c].insert(r, p);
            }
            None => {
                self.units.remove(&(r, c));
                self.rows[r].remove(&c);
                self.cols[c].remove(&r);
            }
        }
    }

    fn drop_col(&mut self, c: usize) {
        for r in std::mem::take(&mut self.cols[c]).into_keys() {
            self.rows[r].remove(&c);
            self.units.remove(&(r, c));
        }
    }

    fn drop_row(&mut self, r: usize) {
        for c in std::mem::take(&mut self.rows[r]) {
            self.cols[c].remove(&r);
            self.units.remove(&(r, c));
        }
    }
}

/// Minimizes the chain `maps[0] = φ_1, maps[1] = φ_2, …` (with `degrees[ℓ]`
/// the twists of `F_ℓ`). Returns the pruned matrices.
pub(crate) fn minimize<F: Field>(
    ring: &Arc<PolyRing<F>>,
    degrees: Vec<Vec<i64>>,
    maps: Vec<Vec<BTreeMap<usize, Polynomial<F>>>>,
) -> Result<Vec<GradedMatrix<F>>> {
    let mut alive: Vec<Vec<bool>> = degrees.iter().map(|d| vec![true; d.len()]).collect();
    let mut maps: Vec<Map<F>> = maps
        .into_iter()
        .enumerate()
        .map(|(l, cols)| {
            let mut rows = vec![BTreeSet::new(); degrees[l].len()];
            let mut units = BTreeSet::new();
            for (c, col) in cols.iter().enumerate() {
                for (r, p) in col {
                    rows[*r].insert(c);
                    if p.is_constant() {
                        units.insert((*r, c));
                    }
                }
            }
            Map { cols, rows, units }
        })
        .collect();

    for l in 0..maps.len() {
        while let Some((r, c)) = maps[l].units.pop_first() {
            let m = &mut maps[l];
            let u = m.cols[c][&r].clone();
            let uinv = ring.field().inv(&u.terms()[0].1).expect("unit entry");
            let pivot: Vec<(usize, Polynomial<F>)> =
                m.cols[c].iter().filter(|(i, _)| **i != r).map(|(i, p)| (*i, p.clone())).collect();
            for k in m.rows[r].iter().copied().filter(|&k| k != c).collect::<Vec<_>>() {
                let alpha = m.cols[k][&r].scale(&uinv);
                for (i, p) in &pivot {
                    let prod = alpha.mul(p)?;
                    let new = match m.cols[k].get(i) {
                        Some(q) => q.sub(&prod)?,
                        None => prod.neg(),
                    };
                    m.set(*i, k, Some(new));
                }
                m.set(r, k, None);
            }
            m.drop_col(c);
            m.drop_row(r);
            alive[l + 1][c] = false;
            alive[l][r] = false;
            if l > 0 {
                maps[l - 1].drop_col(r);
            }
            if l + 1 < maps.len() {
                maps[l + 1].drop_row(c);
            }
        }
    }

    // renumber survivors, sorted by degree within each module
    let order: Vec<Vec<usize>> = degrees
        .iter()
        .zip(&alive)
        .map(|(deg, al)| {
            let mut idx: Vec<usize> = (0..deg.len()).filter(|&i| al[i]).collect();
            idx.sort_by_key(|&i| deg[i]);
            idx
        })
        .collect();
    let mut out = Vec::new();
    for (l, m) in maps.into_iter().enumerate() {
        let mut newpos = vec![usize::MAX; degrees[l].len()];
        for (k, &i) in order[l].iter().enumerate() {
            newpos[i] = k;
        }
        let mut cols = m.cols;
        let columns: Vec<Vec<(usize, Polynomial<F>)>> = order[l + 1]
            .iter()
            .map(|&c| {
                let mut col: Vec<(usize, Polynomial<F>)> =
                    std::mem::take(&mut cols[c]).into_iter().map(|(r, p)| (newpos[r], p)).collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        if columns.is_empty() {
            break;
        }
        out.push(GradedMatrix::from_parts(
            ring,
            order[l].iter().map(|&i| degrees[l][i]).collect(),
            order[l + 1].iter().map(|&i| degrees[l + 1][i]).collect(),
            columns,
        ));
    }
    Ok(out)
}
