//! Minimal graded free resolutions of cyclic modules `S/I`.
//!
//! A Schreyer frame gives a (usually non-minimal) resolution whose
//! differentials come straight out of the reduced grevlex basis; unit
//! entries are then pruned. Betti numbers can also be read off the frame
//! without pruning, which gives an independent check.

mod betti;
mod frame;
mod matrix;
mod minimize;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub use betti::BettiTable;
pub use frame::MAX_FRAME_VARS;
pub use matrix::GradedMatrix;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::gb::engine::{self, Accumulator, LeadIndex, Vector};
use crate::gb::{Ideal, ModuleOrder};
use crate::linalg::{self, SparseRow};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use frame::Frame;

/// `F_0 ← F_1 ← … ← F_p` with `F_0 = S`; `maps[i]` is `F_{i+1} → F_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    ring: Arc<PolyRing<F>>,
    maps: Vec<GradedMatrix<F>>,
    minimal: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, maps: Vec<GradedMatrix<F>>) -> Result<Self> {
        for w in maps.windows(2) {
            if w[0].ncols() != w[1].nrows() || w[0].col_degrees() != w[1].row_degrees() {
                return Err(Error::Precondition("consecutive maps do not chain".into()));
            }
        }
        if maps.first().is_some_and(|m| m.row_degrees() != [0]) {
            return Err(Error::Precondition("F_0 must be S".into()));
        }
        let minimal = maps.iter().all(|m| !m.has_unit_entry());
        Ok(FreeResolution { ring: ring.clone(), maps, minimal })
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    /// Length of the resolution.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Twists of `F_i`.
    pub fn twists(&self, i: usize) -> Vec<i64> {
        match i {
            0 => vec![0],
            _ => self.maps.get(i - 1).map(|m| m.col_degrees().to_vec()).unwrap_or_default(),
        }
    }

    pub fn betti_table(&self) -> Result<BettiTable> {
        if !self.minimal {
            return Err(Error::NotMinimal);
        }
        let twists: Vec<Vec<i64>> = (0..=self.len()).map(|i| self.twists(i)).collect();
        Ok(BettiTable::from_twists(self.ring.nvars(), &twists))
    }

    /// `φ_i · φ_{i+1} = 0` for all `i`.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks `dim ker(φ_i)_δ = rank(φ_{i+1})_δ` for `1 ≤ i ≤ len` and all
    /// `δ ≤ max_degree`.
    pub fn is_exact_up_to(&self, max_degree: i64) -> Result<bool> {
        for d in 0..=max_degree {
            let ranks: Vec<usize> = self.maps.iter().map(|m| m.rank_in_degree(d)).collect();
            for (i, m) in self.maps.iter().enumerate() {
                let ker = graded_dimension(&self.ring, m.col_degrees(), d) - ranks[i];
                if ker != ranks.get(i + 1).copied().unwrap_or(0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Σ_i (-1)^i [F_i]` agrees with the Hilbert series of `S/I`.
    pub fn euler_check(&self, h: &crate::gb::HilbertSeries) -> Result<bool> {
        let mut twists = Vec::new();
        for i in 0..=self.len() {
            twists.push(self.twists(i));
        }
        Ok(BettiTable::from_twists(self.ring.nvars(), &twists).euler_check(h))
    }
}

/// `dim_k (⊕ S(-t))_d`.
pub fn graded_dimension<F: Field>(ring: &Arc<PolyRing<F>>, twists: &[i64], d: i64) -> usize {
    let n = ring.nvars() as i64;
    twists
        .iter()
        .map(|t| crate::gb::binomial(d - t + n - 1, n - 1) as usize)
        .sum()
}

impl<F: Field> GradedMatrix<F> {
    /// Rank of the degree-`d` component `(F_src)_d → (F_tgt)_d`.
    pub fn rank_in_degree(&self, d: i64) -> usize {
        let ring = self.ring().clone();
        let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut rows: Vec<SparseRow<F::Elem>> = Vec::new();
        for (j, col) in self.columns().iter().enumerate() {
            let k = d - self.col_degrees()[j];
            if k < 0 || col.is_empty() {
                continue;
            }
            for m in ring.monomials_of_degree(k as u32) {
                let mut row: Vec<(usize, F::Elem)> = Vec::new();
                for (i, p) in col {
                    for (t, c) in p.terms() {
                        let key = (*i, t.mul(&m));
                        let next = index.len();
                        let pos = *index.entry(key).or_insert(next);
                        row.push((pos, c.clone()));
                    }
                }
                rows.push(row);
            }
        }
        // columns in descending module order keep the fill-in low
        let mut keys: Vec<(usize, Monomial, usize)> = index.into_iter().map(|((i, m), p)| (i, m, p)).collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp_grevlex(&a.1)));
        let mut remap = vec![0; keys.len()];
        for (new, (_, _, old)) in keys.iter().enumerate() {
            remap[*old] = new;
        }
        for row in rows.iter_mut() {
            for t in row.iter_mut() {
                t.0 = remap[t.0];
            }
            row.sort_by_key(|t| t.0);
        }
        rows.sort_by_key(|r| (r.first().map(|t| t.0), r.len()));
        linalg::rank(ring.field(), rows)
    }
}

fn check_ideal<F: Field>(ideal: &Ideal<F>) -> Result<()> {
    if !ideal.ring().is_standard_graded() {
        return Err(Error::Precondition("resolutions need a standard graded ring".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

fn build_frame<F: Field>(ideal: &Ideal<F>) -> Result<Frame<F::Elem>> {
    check_ideal(ideal)?;
    let ring = ideal.ring();
    let gb = match ring.order() {
        MonomialOrder::Grevlex => ideal.groebner().elements().to_vec(),
        _ => ideal.groebner_in(MonomialOrder::Grevlex)?.elements().to_vec(),
    };
    let gb: Vec<Vec<(Monomial, F::Elem)>> = gb.into_iter().map(|g| g.into_terms()).collect();
    Frame::build(ring.field(), ring.nvars(), &gb)
}

/// Minimal graded free resolution of `S/I`.
pub fn minimal_resolution<F: Field>(ideal: &Ideal<F>) -> Result<FreeResolution<F>> {
    let frame = build_frame(ideal)?;
    let ring = ideal.ring();
    let degrees: Vec<Vec<i64>> = frame.levels.iter().map(|l| l.degree.clone()).collect();
    let maps = frame.levels[1..]
        .iter()
        .map(|level| {
            level
                .diff
                .iter()
                .map(|terms| {
                    let mut by_row: BTreeMap<usize, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
                    for (m, p, c) in terms {
                        by_row.entry(*p as usize).or_default().push((*m, c.clone()));
                    }
                    by_row
                        .into_iter()
                        .map(|(r, t)| (r, Polynomial::from_terms(ring.clone(), t)))
                        .filter(|(_, p)| !p.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect();
    drop(frame);
    let maps = minimize::minimize(ring, degrees, maps)?;
    FreeResolution::new(ring, maps)
}

/// Betti numbers of `S/I` read from the Schreyer frame without building the
/// minimal resolution: `β_{ℓ,d} = n_{ℓ,d} - rank_d(φ_ℓ ⊗ k) - rank_d(φ_{ℓ+1} ⊗ k)`,
/// where the ranks are of the scalar blocks in degree `d`.
pub fn betti_from_frame<F: Field>(ideal: &Ideal<F>) -> Result<BettiTable> {
    let frame = build_frame(ideal)?;
    let field = ideal.ring().field();
    let nlev = frame.levels.len();
    // rank of the scalar part of φ_ℓ, per degree
    let mut ranks: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); nlev + 1];
    for l in 1..nlev {
        let level = &frame.levels[l];
        let mut blocks: BTreeMap<i64, Vec<SparseRow<F::Elem>>> = BTreeMap::new();
        for (s, terms) in level.diff.iter().enumerate() {
            let mut row: Vec<(usize, F::Elem)> =
                terms.iter().filter(|t| t.0.is_one()).map(|(_, p, c)| (*p as usize, c.clone())).collect();
            if row.is_empty() {
                continue;
            }
            row.sort_by_key(|t| t.0);
            blocks.entry(level.degree[s]).or_default().push(row);
        }
        for (d, rows) in blocks {
            ranks[l].insert(d, linalg::rank(field, rows));
        }
    }
    let mut triples = Vec::new();
    for l in 0..nlev {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &d in &frame.levels[l].degree {
            *counts.entry(d).or_insert(0) += 1;
        }
        for (d, n) in counts {
            let r = ranks[l].get(&d).copied().unwrap_or(0) + ranks[l + 1].get(&d).copied().unwrap_or(0);
            triples.push((l, d - l as i64, n - r));
        }
    }
    Ok(BettiTable::from_entries(ideal.ring().nvars(), triples))
}

/// Minimal homogeneous generators of `ker M`, as the columns of a matrix
/// whose rows are the columns of `M`.
pub fn syzygies<F: Field>(m: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    let ring = m.ring();
    if !ring.is_standard_graded() && ring.weights().iter().any(|&w| w == 0) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    let field = ring.field();
    let nr = m.nrows() as u32;
    let mut shifts: Vec<i64> = m.row_degrees().to_vec();
    shifts.extend_from_slice(m.col_degrees());
    let order = ModuleOrder {
        base: ring.order().clone(),
        weights: ring.weights().to_vec(),
        shifts: Some(shifts),
        elim_block: Some(nr),
    };
    let input: Vec<Vector<F::Elem>> = m
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut acc = Accumulator::new(field, &order);
            for (i, p) in col {
                for (t, c) in p.terms() {
                    acc.add_term(*t, *i as u32, c.clone());
                }
            }
            acc.add_term(Monomial::one(), nr + j as u32, field.one());
            acc.drain()
        })
        .collect();
    let gb = engine::groebner(field, &order, input, &engine::Options::default());
    let mut kernel: Vec<Vector<F::Elem>> = gb.into_iter().filter(|v| v[0].1 >= nr).collect();
    let deg = |v: &Vector<F::Elem>| order.degree(&v[0].0, v[0].1);
    kernel.sort_by_key(|v| deg(v));

    // minimal generators, degree by degree
    let inner = ModuleOrder { elim_block: None, ..order.clone() };
    let mut chosen: Vec<Vector<F::Elem>> = Vec::new();
    let mut k = 0;
    while k < kernel.len() {
        let d = deg(&kernel[k]);
        let mut basis = engine::groebner(
            field,
            &inner,
            chosen.clone(),
            &engine::Options { degree_bound: Some(d), leads_only: false },
        );
        let mut idx = LeadIndex::new();
        for v in &basis {
            idx.push(v[0].0, v[0].1);
        }
        while k < kernel.len() && deg(&kernel[k]) == d {
            let mut r = engine::reduce(field, &inner, &basis, &idx, &kernel[k]);
            if !r.is_empty() {
                chosen.push(kernel[k].clone());
                engine::monic(field, &mut r);
                idx.push(r[0].0, r[0].1);
                basis.push(r);
            }
            k += 1;
        }
    }
    let cols: Vec<Vec<(usize, Polynomial<F>)>> = chosen
        .iter()
        .map(|v| {
            let mut by: BTreeMap<usize, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
            for (t, c, a) in v {
                by.entry((*c - nr) as usize).or_default().push((*t, a.clone()));
            }
            by.into_iter().map(|(i, t)| (i, Polynomial::from_terms(ring.clone(), t))).collect()
        })
        .collect();
    let col_degrees = chosen.iter().map(|v| deg(v)).collect();
    GradedMatrix::new(ring, m.col_degrees().to_vec(), col_degrees, cols)
}

#[cfg(test)]
mod tests;
