use serde::Serialize;

use super::DeficiencyModules;
use crate::coeffs::{derive_rng, Field};
use crate::error::{Error, Result};
use crate::formulas::CASE_TABLE;
use crate::gb::{saturate_last_variable, HilbertSeries, Ideal};
use crate::poly::{PolyRing, Polynomial};
use crate::resolve::minimal_resolution;

impl<F: Field> DeficiencyModules<F> {
    /// `(dim, degree)` of `Proj(S/I)`, from the Betti numbers.
    pub fn dim_degree(&self) -> Result<(i64, i64)> {
        let b = self.betti_table();
        HilbertSeries::from_numerator(b.nvars(), b.hilbert_numerator())
            .dim_degree()
            .ok_or(Error::UnitIdeal)
    }
}

/// `e(X) = h^2(I_X(j))` for `j ≪ 0`, read at `j = -(d+2)` and `j = -(d+3)`.
pub fn e_invariant<F: Field>(def: &DeficiencyModules<F>) -> Result<i64> {
    let (_, d) = def.dim_degree()?;
    let a = def.deficiency_dim(2, d + 2)?;
    let b = def.deficiency_dim(2, d + 3)?;
    if a != b {
        return Err(Error::NotStabilized(format!(
            "h^2(I_X(j)) = {a} at j = {} but {b} at j = {}",
            -(d + 2),
            -(d + 3)
        )));
    }
    Ok(a)
}

/// Largest `j ∈ [1, reg(X)]` with `h^1(I_X(j)) ≠ 0`; `None` for `-∞`.
pub fn index_of_normality<F: Field>(def: &DeficiencyModules<F>) -> Result<Option<i64>> {
    let reg = def.betti_table().reg_subscheme();
    for j in (1..=reg).rev() {
        if def.deficiency_dim(1, -j)? != 0 {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// `(depth S/I_X, depth S/I_Y)`.
pub fn tau<F: Field>(ix: &Ideal<F>, iy: &Ideal<F>) -> Result<(usize, usize)> {
    let dx = minimal_resolution(ix)?.betti_table()?.depth();
    let dy = minimal_resolution(iy)?.betti_table()?.depth();
    Ok((dx, dy))
}

/// Saturated ideal of `X ∩ {h = 0}` in the variables other than the last
/// one occurring in `h`.
pub fn hyperplane_section<F: Field>(ideal: &Ideal<F>, h: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if !h.ring().compatible(ring) {
        return Err(Error::RingMismatch);
    }
    if !h.is_linear_form() {
        return Err(Error::Precondition("hyperplane must be a nonzero linear form".into()));
    }
    let field = ring.field();
    let n = ring.nvars();
    let coeff = |i: usize| h.coefficient(&crate::poly::Monomial::var(i));
    let p = (0..n).rev().find(|&i| !field.is_zero(&coeff(i))).expect("nonzero linear form");
    let names: Vec<String> = (0..n).filter(|&i| i != p).map(|i| ring.names()[i].clone()).collect();
    let sub = PolyRing::new(field.clone(), names, ring.order().clone())?;
    let scale = field.neg(&field.inv(&coeff(p)).expect("nonzero"));
    let mut images = Vec::with_capacity(n);
    let mut k = 0;
    let mut elim = sub.zero();
    for i in 0..n {
        if i != p {
            elim = elim.add(&sub.var(k).scale(&field.mul(&coeff(i), &scale)))?;
        }
        k += (i != p) as usize;
    }
    k = 0;
    for i in 0..n {
        if i == p {
            images.push(elim.clone());
        } else {
            images.push(sub.var(k));
            k += 1;
        }
    }
    let gens = ideal.gens().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?;
    saturate_last_variable(&Ideal::new(&sub, gens)?)
}

fn random_hyperplane<F: Field>(ring: &std::sync::Arc<PolyRing<F>>, seed: u64, stream: u64) -> Polynomial<F> {
    let mut rng = derive_rng(seed, stream);
    let coeffs: Vec<F::Elem> = (0..ring.nvars()).map(|_| ring.field().random_nonzero(&mut rng)).collect();
    ring.linear_form(&coeffs)
}

/// Minimum of `reg` over `samples` random hyperplane sections, with the
/// per-sample values.
pub fn sectional_regularity<F: Field>(ideal: &Ideal<F>, samples: usize, seed: u64) -> Result<(i64, Vec<i64>)> {
    if samples == 0 {
        return Err(Error::Precondition("at least one sample".into()));
    }
    let mut regs = Vec::with_capacity(samples);
    for s in 0..samples {
        let h = random_hyperplane(ideal.ring(), seed, s as u64);
        let c = hyperplane_section(ideal, &h)?;
        regs.push(minimal_resolution(&c)?.betti_table()?.reg_subscheme());
    }
    Ok((*regs.iter().min().expect("nonempty"), regs))
}

/// Arithmetic genus `1 - P_C(0)` of a random hyperplane section curve.
pub fn sectional_genus<F: Field>(ideal: &Ideal<F>, seed: u64) -> Result<i64> {
    if ideal.dim_degree()?.0 != 2 {
        return Err(Error::Precondition("sectional genus needs a surface".into()));
    }
    let h = random_hyperplane(ideal.ring(), seed, 1 << 32);
    let c = hyperplane_section(ideal, &h)?;
    Ok(1 - c.hilbert_series()?.hilbert_polynomial(0))
}

/// Numerical invariants of a projective surface `X ⊂ P^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub d: i64,
    pub r: i64,
    pub dim: i64,
    pub reg: i64,
    pub sreg: i64,
    pub sreg_samples: Vec<i64>,
    pub depth: usize,
    pub depth_y: Option<usize>,
    pub tau: Option<(usize, usize)>,
    pub e: i64,
    /// `None` stands for `-∞`.
    pub normality: Option<i64>,
    pub sigma: i64,
    /// `h^1(I_X(1))`, `h^1(I_X(2))`.
    pub h1: (i64, i64),
}

impl InvariantReport {
    /// `iy`, when given, is the ideal of `X ∪ F` used for the second depth.
    pub fn compute<F: Field>(ix: &Ideal<F>, iy: Option<&Ideal<F>>, samples: usize, seed: u64) -> Result<Self> {
        let def = DeficiencyModules::new(ix)?;
        let b = def.betti_table();
        let (dim, d) = def.dim_degree()?;
        let (sreg, sreg_samples) = sectional_regularity(ix, samples, seed)?;
        let depth_y = match iy {
            Some(iy) => Some(minimal_resolution(iy)?.betti_table()?.depth()),
            None => None,
        };
        Ok(InvariantReport {
            d,
            r: ix.ring().nvars() as i64 - 1,
            dim,
            reg: b.reg_subscheme(),
            sreg,
            sreg_samples,
            depth: b.depth(),
            depth_y,
            tau: depth_y.map(|y| (b.depth(), y)),
            e: e_invariant(&def)?,
            normality: index_of_normality(&def)?,
            sigma: sectional_genus(ix, seed)?,
            h1: (def.deficiency_dim(1, -1)?, def.deficiency_dim(1, -2)?),
        })
    }
}

/// One of the nine cases of surfaces of degree `r + 1` in `P^r`, `r ≥ 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceCase(pub u8);

/// Matches `(sreg, depth, σ, e, h^1(I_X(1)), h^1(I_X(2)))` against the case
/// table.
pub fn classify_degree_r_plus_1(report: &InvariantReport) -> Result<SurfaceCase> {
    if report.r < 5 || report.d != report.r + 1 || report.dim != 2 {
        return Err(Error::Precondition(format!(
            "classification needs a surface of degree r+1 with r ≥ 5 (got d = {}, r = {})",
            report.d, report.r
        )));
    }
    let (h11, h12) = report.h1;
    CASE_TABLE
        .iter()
        .find(|c| {
            c.sreg == report.sreg
                && c.depth == report.depth
                && c.sigma == report.sigma
                && c.e == report.e
                && c.h1_1 == h11
                && c.h1_2.admits(h12)
        })
        .map(|c| SurfaceCase(c.case))
        .ok_or_else(|| {
            Error::Unclassified(format!(
                "(sreg, depth, sigma, e, h1(1), h1(2)) = ({}, {}, {}, {}, {h11}, {h12})",
                report.sreg, report.depth, report.sigma, report.e
            ))
        })
}
