//! Deficiency modules `K^i(A) = Ext^{n-i}_S(A, S(-n))` of `A = S/I`
//! (`n` = number of variables) and the sheaf cohomology of `I_X` they
//! determine by local duality.

mod invariants;
mod module;
mod table;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub use invariants::{
    classify_degree_r_plus_1, e_invariant, hyperplane_section, index_of_normality, sectional_genus,
    sectional_regularity, tau, InvariantReport, SurfaceCase,
};
pub use module::Cokernel;
pub use table::CohomologyTable;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::gb::{saturate, HilbertSeries, Ideal};
use crate::poly::{Monomial, PolyRing};
use crate::resolve::{graded_dimension, minimal_resolution, syzygies, BettiTable, FreeResolution, GradedMatrix};

/// Ext modules of `A = S/I` against `S`, from the dual of the minimal
/// resolution.
///
/// With `F_k^* = ⊕ S(t)` over the twists `t` of `F_k`,
/// `dim Ext^k_m = dim(F_k^*/im φ_k^T)_m - dim(im φ_{k+1}^T)_m`,
/// and both terms come from monomial quotients of module Gröbner bases.
pub struct DeficiencyModules<F: Field> {
    ring: Arc<PolyRing<F>>,
    resolution: FreeResolution<F>,
    dual_twists: Vec<Vec<i64>>,
    // cokernel of φ_k^T inside F_k^*, k ≥ 1, built on first use
    cokernels: Vec<OnceLock<Cokernel>>,
    hilbert: HilbertSeries,
}

impl<F: Field> DeficiencyModules<F> {
    pub fn new(ideal: &Ideal<F>) -> Result<Self> {
        Self::from_resolution(minimal_resolution(ideal)?)
    }

    pub fn from_resolution(resolution: FreeResolution<F>) -> Result<Self> {
        if !resolution.is_minimal() {
            return Err(Error::NotMinimal);
        }
        let ring = resolution.ring().clone();
        let dual_twists = (0..=resolution.len())
            .map(|k| resolution.twists(k).iter().map(|t| -t).collect())
            .collect();
        let cokernels = resolution.maps().iter().map(|_| OnceLock::new()).collect();
        let mut numerator = Vec::new();
        for k in 0..=resolution.len() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for t in resolution.twists(k).iter().copied() {
                let t = t as usize;
                if numerator.len() <= t {
                    numerator.resize(t + 1, 0);
                }
                numerator[t] += sign;
            }
        }
        let hilbert = HilbertSeries::from_numerator(ring.nvars(), numerator);
        Ok(DeficiencyModules { ring, resolution, dual_twists, cokernels, hilbert })
    }

    pub fn resolution(&self) -> &FreeResolution<F> {
        &self.resolution
    }

    pub fn betti_table(&self) -> BettiTable {
        self.resolution.betti_table().expect("minimal")
    }

    fn free_dim(&self, k: usize, m: i64) -> i64 {
        graded_dimension(&self.ring, &self.dual_twists[k], m) as i64
    }

    /// `dim (im φ_k^T)_m ⊂ (F_k^*)_m`.
    fn image_dim(&self, k: usize, m: i64) -> i64 {
        if k == 0 || k > self.resolution.len() {
            return 0;
        }
        let coker = self.cokernels[k - 1].get_or_init(|| Cokernel::of(&self.resolution.maps()[k - 1].transpose()));
        self.free_dim(k, m) - coker.dim(m)
    }

    /// Hilbert series of `S/I`, read off the resolution.
    pub fn hilbert_series(&self) -> &HilbertSeries {
        &self.hilbert
    }

    /// `h^3(I_X(-m)) = dim K^3_m` for a surface, from
    /// `P_X(j) - H_X(j) = h^1(I_X(j)) - h^2(I_X(j)) + h^3(I_X(j))`.
    /// Avoids the cokernel of `φ_{n-3}^T`, which tends to be the costly one.
    pub fn k3_by_euler(&self, m: i64) -> Result<i64> {
        if self.hilbert.krull_dim() != 3 {
            return Err(Error::Precondition("K^3 by Euler characteristic needs a surface".into()));
        }
        let j = -m;
        let gap = self.hilbert.hilbert_polynomial(j) - self.hilbert.hilbert_function(j);
        Ok(gap - self.deficiency_dim(1, m)? + self.deficiency_dim(2, m)?)
    }

    /// `dim_k Ext^k_S(S/I, S)_m`.
    pub fn ext_dim(&self, k: usize, m: i64) -> i64 {
        if k > self.resolution.len() {
            return 0;
        }
        self.free_dim(k, m) - self.image_dim(k, m) - self.image_dim(k + 1, m)
    }

    /// `dim_k K^i(A)_m`, `0 ≤ i ≤ n`.
    pub fn deficiency_dim(&self, i: usize, m: i64) -> Result<i64> {
        let n = self.ring.nvars();
        if i > n {
            return Err(Error::Precondition(format!("K^{i} needs 0 ≤ i ≤ {n}")));
        }
        Ok(self.ext_dim(n - i, m - n as i64))
    }

    /// Smallest `i` with `K^i(A)_m ≠ 0` for some `m` in `lo..=hi`; this is
    /// `depth A` once the window is wide enough.
    pub fn first_nonzero(&self, lo: i64, hi: i64) -> Result<Option<usize>> {
        let surface = self.hilbert.krull_dim() == 3;
        for i in 0..=self.hilbert.krull_dim() {
            for m in lo..=hi {
                let v = if surface && i == 3 { self.k3_by_euler(m)? } else { self.deficiency_dim(i, m)? };
                if v != 0 {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    /// `dim K^i(A)_m` for `m` in `lo..=hi`.
    pub fn deficiency_window(&self, i: usize, lo: i64, hi: i64) -> Result<Vec<i64>> {
        (lo..=hi).map(|m| self.deficiency_dim(i, m)).collect()
    }

    /// Number of minimal generators of `K^i(A)` in each degree.
    pub fn minimal_generators(&self, i: usize) -> Result<BTreeMap<i64, usize>> {
        let n = self.ring.nvars();
        if i > n {
            return Err(Error::Precondition(format!("K^{i} needs 0 ≤ i ≤ {n}")));
        }
        let k = n - i;
        let p = self.resolution.len();
        if k > p {
            return Ok(BTreeMap::new());
        }
        let maps = self.resolution.maps();
        let twists = &self.dual_twists[k];
        // Z = ker φ_{k+1}^T ⊂ F_k^*, B = im φ_k^T
        let z = match maps.get(k) {
            Some(next) => syzygies(&next.transpose())?,
            None => identity(&self.ring, twists)?,
        };
        let mut gens: Vec<Vec<(usize, crate::poly::Polynomial<F>)>> = Vec::new();
        let mut degs = Vec::new();
        if k >= 1 {
            let b = maps[k - 1].transpose();
            gens.extend(b.columns().iter().cloned());
            degs.extend_from_slice(b.col_degrees());
        }
        for (j, col) in z.columns().iter().enumerate() {
            for v in 0..n {
                let x = self.ring.var(v);
                let moved = col
                    .iter()
                    .map(|(r, q)| Ok((*r, q.mul(&x)?)))
                    .collect::<Result<Vec<_>>>()?;
                gens.push(moved);
                degs.push(z.col_degrees()[j] + 1);
            }
        }
        let sub = GradedMatrix::new(&self.ring, twists.clone(), degs, gens)?;
        let below = Cokernel::of(&sub);
        let whole = Cokernel::of(&z);
        let mut out = BTreeMap::new();
        let mut seen: Vec<i64> = z.col_degrees().to_vec();
        seen.dedup();
        for d in seen {
            // dim Z_d - dim (B + mZ)_d
            let c = below.dim(d) - whole.dim(d);
            if c > 0 {
                out.insert(d + n as i64, c as usize);
            }
        }
        Ok(out)
    }
}

fn identity<F: Field>(ring: &Arc<PolyRing<F>>, twists: &[i64]) -> Result<GradedMatrix<F>> {
    let cols = (0..twists.len())
        .map(|j| vec![(j, ring.monomial(Monomial::one(), ring.field().one()))])
        .collect();
    GradedMatrix::new(ring, twists.to_vec(), twists.to_vec(), cols)
}

/// `true` when `(I : m) = I`.
pub fn is_saturated<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let (sat, k) = saturate(ideal, &Ideal::irrelevant(ideal.ring()))?;
    Ok(k == 0 || crate::gb::ideal_equal(&sat, ideal)?)
}

/// `h^i(P^r, I_X(j)) = dim K^i(A)_{-j}` for `i = 1, 2, 3` and `j` in
/// `lo..=hi`; `I` must be saturated.
pub fn sheaf_cohomology_table<F: Field>(
    ideal: &Ideal<F>,
    lo: i64,
    hi: i64,
) -> Result<(CohomologyTable, DeficiencyModules<F>)> {
    if !is_saturated(ideal)? {
        return Err(Error::NotSaturated);
    }
    let def = DeficiencyModules::new(ideal)?;
    let table = CohomologyTable::from_modules(&def, lo, hi)?;
    Ok((table, def))
}

/// Default window `[-(d+2), d-r+4]`.
pub fn default_window(d: i64, r: i64) -> (i64, i64) {
    (-(d + 2), d - r + 4)
}

#[cfg(test)]
mod tests;
