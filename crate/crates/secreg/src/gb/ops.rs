use std::sync::Arc;

use super::{GroebnerBasis, Ideal};
use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationMode {
    /// Input must be homogeneous for the ring's grading.
    Homogeneous,
    Affine,
}

/// `I ∩ k[remaining variables]`, returned in a grevlex ring on the kept
/// variables (with their weights).
pub fn eliminate<F: Field>(ideal: &Ideal<F>, vars: &[usize], mode: EliminationMode) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::Precondition("elimination variable out of range".into()));
    }
    if mode == EliminationMode::Homogeneous && !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("elimination in homogeneous mode".into()));
    }
    let mut elim: Vec<usize> = vars.to_vec();
    elim.sort_unstable();
    elim.dedup();
    let kept: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
    // old index -> new index, eliminated block first
    let mut perm = vec![0; n];
    for (new, &old) in elim.iter().chain(kept.iter()).enumerate() {
        perm[old] = new;
    }
    let names: Vec<String> = elim.iter().chain(kept.iter()).map(|&i| ring.names()[i].clone()).collect();
    let weights: Vec<u32> = elim.iter().chain(kept.iter()).map(|&i| ring.weights()[i]).collect();
    let k = elim.len();
    let big = PolyRing::with_weights(ring.field().clone(), names, MonomialOrder::Block(k), weights.clone())?;
    let gens: Vec<_> = ideal.gens().iter().map(|g| g.permute_into(&big, &perm)).collect();
    let gb = GroebnerBasis::compute(&big, &gens);
    let small = PolyRing::with_weights(
        ring.field().clone(),
        kept.iter().map(|&i| ring.names()[i].clone()).collect(),
        MonomialOrder::Grevlex,
        weights[k..].to_vec(),
    )?;
    let down: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    let out = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0)))
        .map(|g| g.permute_into(&small, &down))
        .collect();
    Ideal::new(&small, out)
}

/// Smallest positive weights (searched up to 16 per variable) making every
/// image homogeneous of one common degree; returns the weights and degree.
pub fn map_weights<F: Field>(images: &[Polynomial<F>]) -> Result<(Vec<u32>, i64)> {
    const MAX_WEIGHT: u32 = 16;
    let ring = images.first().ok_or(Error::ZeroImage)?.ring();
    let n = ring.nvars();
    let used: Vec<Vec<Monomial>> = images.iter().map(|g| g.terms().iter().map(|t| t.0).collect()).collect();
    let mut w = vec![1u32; n];
    // enumerate weight vectors by increasing total
    for total in n as u32..=(MAX_WEIGHT * n as u32) {
        let mut found = None;
        fill(&mut w, 0, total, MAX_WEIGHT, &mut |w| {
            if found.is_some() {
                return;
            }
            let d = used[0][0].weighted_degree(w);
            if used.iter().all(|ms| ms.iter().all(|m| m.weighted_degree(w) == d)) {
                found = Some((w.to_vec(), d));
            }
        });
        if let Some(r) = found {
            return Ok(r);
        }
    }
    Err(Error::NonEquigenerated)
}

fn fill(w: &mut [u32], i: usize, left: u32, cap: u32, f: &mut impl FnMut(&[u32])) {
    let n = w.len();
    if i + 1 == n {
        if (1..=cap).contains(&left) {
            w[i] = left;
            f(w);
        }
        return;
    }
    let rest = (n - i - 1) as u32;
    for v in 1..=cap.min(left.saturating_sub(rest)) {
        w[i] = v;
        fill(w, i + 1, left - v, cap, f);
    }
}

/// Homogeneous ideal of the closure of the image of `target` variables
/// `x_i ↦ images[i]` (graph ideal, then elimination of the parameters).
///
/// The result is checked to be saturated.
pub fn kernel_of_map<F: Field>(target: &Arc<PolyRing<F>>, images: &[Polynomial<F>]) -> Result<Ideal<F>> {
    if images.len() != target.nvars() {
        return Err(Error::MissingImage(
            target.names().get(images.len()).cloned().unwrap_or_default(),
        ));
    }
    if images.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroImage);
    }
    let params = images[0].ring();
    if images.iter().any(|g| !g.ring().compatible(params)) {
        return Err(Error::RingMismatch);
    }
    if !target.is_standard_graded() {
        return Err(Error::Precondition("target ring must be standard graded".into()));
    }
    let (pw, d) = map_weights(images)?;
    let p = params.nvars();
    let n = target.nvars();
    if p + n > crate::poly::MAX_VARS {
        return Err(Error::TooManyVariables(p + n, crate::poly::MAX_VARS));
    }
    let mut names: Vec<String> = params.names().to_vec();
    for x in target.names() {
        if names.contains(x) {
            return Err(Error::Precondition(format!("variable `{x}` used on both sides of the map")));
        }
        names.push(x.clone());
    }
    let mut weights = pw;
    weights.extend(std::iter::repeat(d as u32).take(n));
    let big = PolyRing::with_weights(params.field().clone(), names, MonomialOrder::Block(p), weights)?;
    let lift: Vec<usize> = (0..p).collect();
    let gens: Vec<Polynomial<F>> = images
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let x = big.var(p + i);
            x.sub(&g.permute_into(&big, &lift)).expect("same ring")
        })
        .collect();
    let gb = GroebnerBasis::compute(&big, &gens);
    let down: Vec<usize> = (0..p + n).map(|i| i.saturating_sub(p)).collect();
    let kernel: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..p).all(|i| m.exponent(i) == 0)))
        .map(|g| g.permute_into(target, &down))
        .collect();
    let ideal = Ideal::new(target, kernel)?;
    let (sat, k) = saturate(&ideal, &Ideal::irrelevant(target))?;
    if k != 0 {
        return Err(Error::NotSaturated);
    }
    Ok(sat)
}

fn aux_ring<F: Field>(ring: &Arc<PolyRing<F>>) -> Result<Arc<PolyRing<F>>> {
    let mut name = "t".to_string();
    while ring.var_index(&name).is_some() {
        name.push('t');
    }
    let mut names = vec![name];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![0];
    weights.extend(ring.weights());
    PolyRing::with_weights(ring.field().clone(), names, MonomialOrder::Block(1), weights)
}

/// `I ∩ J` via `t·I + (1-t)·J`, with `t` of weight zero eliminated.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    if !ring.compatible(j.ring()) {
        return Err(Error::RingMismatch);
    }
    if i.gens().is_empty() || j.gens().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let big = aux_ring(ring)?;
    let n = ring.nvars();
    let up: Vec<usize> = (1..=n).collect();
    let t = big.var(0);
    let one_minus_t = big.one().sub(&t)?;
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(t.mul(&g.permute_into(&big, &up))?);
    }
    for g in j.gens() {
        gens.push(one_minus_t.mul(&g.permute_into(&big, &up))?);
    }
    let gb = GroebnerBasis::compute(&big, &gens);
    let down: Vec<usize> = (0..=n).map(|k| k.saturating_sub(1)).collect();
    let out = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|g| g.permute_into(ring, &down))
        .collect();
    Ideal::new(ring, out)
}

/// `(I : g)` for a single polynomial.
pub fn quotient_by<F: Field>(i: &Ideal<F>, g: &Polynomial<F>) -> Result<Ideal<F>> {
    if g.is_zero() {
        return Ok(Ideal::new(i.ring(), vec![i.ring().one()])?);
    }
    let meet = intersect(i, &Ideal::new(i.ring(), vec![g.clone()])?)?;
    let gens = meet.gens().iter().map(|f| f.div_exact(g)).collect::<Result<Vec<_>>>()?;
    Ideal::new(i.ring(), gens)
}

/// `(I : J) = ∩_g (I : g)` over the generators of `J`.
pub fn quotient<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    if j.gens().is_empty() {
        return Ideal::new(i.ring(), vec![i.ring().one()]);
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in j.gens() {
        let q = quotient_by(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.expect("nonempty").minimalized_gens())
}

fn is_irrelevant<F: Field>(j: &Ideal<F>) -> bool {
    let n = j.ring().nvars();
    let gb = j.groebner();
    (0..n).all(|v| gb.leading_monomials().iter().any(|m| *m == Monomial::var(v)))
}

/// `(I : J^∞)` and the first exponent `k` with `(I : J^k) = (I : J^{k+1})`.
pub fn saturate<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<(Ideal<F>, u32)> {
    if is_irrelevant(j) && i.ring().is_standard_graded() && i.is_homogeneous() {
        // x_last is a nonzerodivisor iff it divides no grevlex leading term;
        // then I is already saturated.
        let gb = i.groebner_in(MonomialOrder::Grevlex)?;
        let last = i.ring().nvars() - 1;
        if gb.leading_monomials().iter().all(|m| m.exponent(last) == 0) && !gb.is_unit() {
            return Ok((i.clone(), 0));
        }
    }
    let mut cur = i.clone();
    let mut k = 0;
    loop {
        let next = quotient(&cur, j)?;
        if ideal_equal(&next, &cur)? {
            return Ok((cur, k));
        }
        cur = next;
        k += 1;
    }
}

/// `(I : x_last^∞)` from a grevlex basis by stripping powers of the last
/// variable; equals the saturation by the irrelevant ideal when the last
/// variable is general.
pub fn saturate_last_variable<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    let gb = i.groebner_in(MonomialOrder::Grevlex)?;
    let last = i.ring().nvars() - 1;
    let gens = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
            let mut div = Monomial::one();
            div.set_exponent(last, k).expect("exponent in range");
            let terms = g.terms().iter().map(|(m, c)| (m.div(&div), c.clone())).collect();
            Polynomial::from_terms(i.ring().clone(), terms)
        })
        .collect();
    Ideal::new(i.ring(), gens)
}

/// Equality of ideals through their reduced Gröbner bases.
pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool> {
    if !i.ring().compatible(j.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(i.groebner().elements() == j.groebner().elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn ring(names: &[&str]) -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(fp(), names.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn colon_and_intersection() {
        let r = ring(&["x", "y"]);
        let id = |g: &[&str]| Ideal::from_strings(&r, g).unwrap();
        assert!(ideal_equal(&intersect(&id(&["x"]), &id(&["y"])).unwrap(), &id(&["x*y"])).unwrap());
        assert!(ideal_equal(&quotient(&id(&["x*y"]), &id(&["x"])).unwrap(), &id(&["y"])).unwrap());
        let (sat, k) = saturate(&id(&["x^2", "x*y"]), &Ideal::irrelevant(&r)).unwrap();
        assert!(ideal_equal(&sat, &id(&["x"])).unwrap());
        assert_eq!(k, 1);
        assert!(ideal_equal(&id(&["x"]), &id(&["x", "x^2"])).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["s", "t", "x0", "x1", "x2"]);
        let i = Ideal::from_strings(&r, &["x0-s^2", "x1-s*t", "x2-t^2"]).unwrap();
        assert!(eliminate(&i, &[0, 1], EliminationMode::Homogeneous).is_err());
        let k = eliminate(&i, &[0, 1], EliminationMode::Affine).unwrap();
        assert_eq!(k.gens().len(), 1);
        assert_eq!(k.gens()[0].to_string(), "x1^2-x0*x2");
        let tx = Ideal::from_strings(&r, &["t*x0-1"]).unwrap();
        assert!(eliminate(&tx, &[1], EliminationMode::Homogeneous).is_err());
    }

    #[test]
    fn implicitization() {
        let st = ring(&["s", "t"]);
        let x = PolyRing::standard(fp(), "x", 4).unwrap();
        let imgs: Vec<_> = ["s^3", "s^2t", "st^2", "t^3"].iter().map(|m| st.parse(m).unwrap()).collect();
        let k = kernel_of_map(&x, &imgs).unwrap();
        assert_eq!(k.gens().len(), 3);
        assert!(k.gens().iter().all(|g| g.degree() == Some(2)));
        let stuv = ring(&["s", "t", "u", "v"]);
        let imgs: Vec<_> = ["s*u", "s*v", "t*u", "t*v"].iter().map(|m| stuv.parse(m).unwrap()).collect();
        let k = kernel_of_map(&x, &imgs).unwrap();
        assert!(ideal_equal(&k, &Ideal::from_strings(&x, &["x0*x3-x1*x2"]).unwrap()).unwrap());
        let bad = vec![st.parse("s^2").unwrap(), st.parse("s+t^2").unwrap(), st.parse("t").unwrap(), st.parse("s").unwrap()];
        assert!(matches!(kernel_of_map(&x, &bad), Err(Error::NonEquigenerated)));
    }
}
