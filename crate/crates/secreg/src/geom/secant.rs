use std::fmt;

use serde::{Serialize, Serializer};

use super::univariate::binary_gcd_degree;
use super::{SurfaceKind, SurfaceSpec};
use crate::coeffs::{derive_rng, Field};
use crate::error::{Error, Result};
use crate::gb::Ideal;
use crate::linalg::{left_kernel, Echelon, SparseRow};
use crate::poly::{MonomialOrder, PolyRing};

/// Attempts per sample before giving up.
pub const RETRY_BUDGET: usize = 16;

/// The line through two independent points of `P^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line<E> {
    pub p: Vec<E>,
    pub q: Vec<E>,
}

impl<E: Clone> Line<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, p: Vec<E>, q: Vec<E>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::Precondition("points live in different spaces".into()));
        }
        if plucker(field, &p, &q).iter().all(|c| field.is_zero(c)) {
            return Err(Error::Precondition("points are linearly dependent".into()));
        }
        Ok(Line { p, q })
    }
}

/// `p_{ij} = p_i q_j - p_j q_i` for `i < j`, in lexicographic order.
pub fn plucker<F: Field>(field: &F, p: &[F::Elem], q: &[F::Elem]) -> Vec<F::Elem> {
    let n = p.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(field.sub(&field.mul(&p[i], &q[j]), &field.mul(&p[j], &q[i])));
        }
    }
    out
}

/// Length of `X ∩ L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SecantLength {
    Finite(u32),
    /// The line lies on `X`.
    Infinite,
}

impl fmt::Display for SecantLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecantLength::Finite(n) => write!(f, "{n}"),
            SecantLength::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for SecantLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SecantLength::Finite(n) => s.serialize_u32(*n),
            SecantLength::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Restricts every generator to the line and takes the degree of the GCD of
/// the resulting binary forms; ideals of `k[s,t]` saturate to principal ones.
pub fn secant_length<F: Field>(ideal: &Ideal<F>, line: &Line<F::Elem>) -> Result<SecantLength> {
    let ring = ideal.ring();
    let field = ring.field();
    if line.p.len() != ring.nvars() {
        return Err(Error::Precondition("line and ideal live in different spaces".into()));
    }
    let st = PolyRing::new(field.clone(), vec!["s".into(), "t".into()], MonomialOrder::Grevlex)?;
    let images: Vec<_> =
        (0..ring.nvars()).map(|i| st.linear_form(&[line.p[i].clone(), line.q[i].clone()])).collect();
    let mut forms = Vec::new();
    for g in ideal.gens() {
        let h = g.substitute(&images)?;
        if h.is_zero() {
            continue;
        }
        let deg = h.degree().expect("nonzero") as usize;
        let mut dehom = vec![field.zero(); deg + 1];
        for (m, c) in h.terms() {
            dehom[m.exponent(0) as usize] = c.clone();
        }
        forms.push((deg, dehom));
    }
    if forms.is_empty() {
        return Ok(SecantLength::Infinite);
    }
    Ok(SecantLength::Finite(binary_gcd_degree(field, &forms) as u32))
}

/// Same length, from the Hilbert polynomial of `S/(I + I_L)`.
pub fn secant_length_by_hilbert<F: Field>(ideal: &Ideal<F>, line: &Line<F::Elem>) -> Result<SecantLength> {
    let ring = ideal.ring();
    let field = ring.field();
    let rows: Vec<SparseRow<F::Elem>> = (0..ring.nvars())
        .map(|i| {
            [(0, &line.p[i]), (1, &line.q[i])]
                .into_iter()
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect();
    let forms: Vec<_> = left_kernel(field, &rows).iter().map(|c| ring.linear_form(c)).collect();
    let mut gens = ideal.gens().to_vec();
    gens.extend(forms);
    let h = Ideal::new(ring, gens)?.hilbert_series()?;
    match h.krull_dim() {
        0 => Ok(SecantLength::Finite(0)),
        1 => Ok(SecantLength::Finite(h.dim_degree().expect("positive dimension").1 as u32)),
        _ => Ok(SecantLength::Infinite),
    }
}

/// One sampled line with its length and Plücker vector.
#[derive(Clone, Debug)]
pub struct SecantSample<E> {
    pub line: Line<E>,
    pub length: SecantLength,
    pub plucker: Vec<E>,
}

fn random_line<F: Field>(field: &F, spec: &SurfaceSpec, rng: &mut crate::coeffs::Rng) -> Result<Line<F::Elem>> {
    let n = spec.r as usize + 1;
    match &spec.kind {
        SurfaceKind::TypeI { .. } => {
            // P^1 × {q} on the Segre threefold
            let q: Vec<F::Elem> = (0..3).map(|_| field.random(rng)).collect();
            let mut a = vec![field.zero(); 6];
            let mut b = vec![field.zero(); 6];
            for k in 0..3 {
                a[2 * k] = q[k].clone();
                b[2 * k + 1] = q[k].clone();
            }
            Line::new(field, a, b)
        }
        SurfaceKind::TypeII { a, .. } => {
            let point = |rng: &mut crate::coeffs::Rng| -> Vec<F::Elem> {
                (0..n).map(|i| if i <= *a as usize { field.zero() } else { field.random(rng) }).collect()
            };
            let p = point(rng);
            let q = point(rng);
            Line::new(field, p, q)
        }
        SurfaceKind::Scroll { .. } => Err(Error::Precondition("no secant family for scrolls".into())),
    }
}

/// `n` random special extremal secant lines: lines in the extremal plane
/// for type II, line sections `P^1 × {q}` of the Segre threefold for type I.
/// Sample `k` uses the generator stream `k` of `seed`.
pub fn sample_secant_lines<F: Field>(
    spec: &SurfaceSpec,
    ideal: &Ideal<F>,
    n: usize,
    seed: u64,
) -> Result<Vec<SecantSample<F::Elem>>> {
    if n == 0 {
        return Err(Error::Precondition("at least one line".into()));
    }
    let field = ideal.ring().field();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut rng = derive_rng(seed, k as u64);
        let mut found = None;
        for _ in 0..RETRY_BUDGET {
            let line = match random_line(field, spec, &mut rng) {
                Ok(l) => l,
                Err(Error::Precondition(m)) if m.contains("dependent") => continue,
                Err(e) => return Err(e),
            };
            let length = secant_length(ideal, &line)?;
            if length != SecantLength::Infinite {
                found = Some((line, length));
                break;
            }
        }
        let (line, length) = found.ok_or_else(|| Error::RetryBudget {
            what: format!("secant line {k}"),
            budget: RETRY_BUDGET,
            seed,
        })?;
        let plucker = plucker(field, &line.p, &line.q);
        out.push(SecantSample { line, length, plucker });
    }
    Ok(out)
}

/// Dimension of the span of a set of Plücker points, and the space of
/// quadrics on that span through the first `n - n/4` points, checked on the
/// remaining `n/4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerSpan {
    pub span_dim: i64,
    pub quadric_dim: usize,
    pub fit: usize,
    pub holdout: usize,
    pub quadric_check: bool,
}

pub fn plucker_span<F: Field>(field: &F, points: &[Vec<F::Elem>]) -> Result<PluckerSpan> {
    if points.len() < 2 {
        return Err(Error::Precondition("need at least two samples".into()));
    }
    let sparse = |v: &[F::Elem]| -> SparseRow<F::Elem> {
        v.iter().enumerate().filter(|(_, c)| !field.is_zero(c)).map(|(i, c)| (i, c.clone())).collect()
    };
    let mut ech = Echelon::new(field);
    for p in points {
        ech.insert(sparse(p));
    }
    let pivots: Vec<usize> = ech.pivot_columns().collect();
    let m = pivots.len();
    let coords: Vec<Vec<F::Elem>> = points.iter().map(|p| pivots.iter().map(|&j| p[j].clone()).collect()).collect();
    let holdout = points.len() / 4;
    let fit = points.len() - holdout;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
    let eval = |pt: &[F::Elem], (a, b): (usize, usize)| field.mul(&pt[a], &pt[b]);
    let rows: Vec<SparseRow<F::Elem>> = pairs
        .iter()
        .map(|&ab| {
            coords[..fit]
                .iter()
                .enumerate()
                .map(|(k, pt)| (k, eval(pt, ab)))
                .filter(|(_, c)| !field.is_zero(c))
                .collect()
        })
        .collect();
    let quadrics = left_kernel(field, &rows);
    let quadric_check = quadrics.iter().all(|q| {
        coords[fit..].iter().all(|pt| {
            let v = pairs.iter().zip(q).fold(field.zero(), |acc, (&ab, c)| field.add(&acc, &field.mul(c, &eval(pt, ab))));
            field.is_zero(&v)
        })
    });
    Ok(PluckerSpan { span_dim: m as i64 - 1, quadric_dim: quadrics.len(), fit, holdout, quadric_check })
}

