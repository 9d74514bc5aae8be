//! Gröbner bases and ideal operations.

pub(crate) mod engine;
mod hilbert;
mod io;
mod ops;
mod order;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use hilbert::{binomial, binomial_poly, monomial_numerator, HilbertSeries};
pub use io::{read_ideal, read_ideal_file, write_ideal, IdealFile};
pub use ops::{
    eliminate, ideal_equal, intersect, kernel_of_map, map_weights, quotient, quotient_by, saturate,
    saturate_last_variable, EliminationMode,
};
pub use order::ModuleOrder;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use engine::Vector;

pub(crate) fn to_vector<F: Field>(p: &Polynomial<F>) -> Vector<F::Elem> {
    p.terms().iter().map(|(m, c)| (*m, 0, c.clone())).collect()
}

pub(crate) fn from_vector<F: Field>(ring: &Arc<PolyRing<F>>, v: Vector<F::Elem>) -> Polynomial<F> {
    Polynomial::from_terms(ring.clone(), v.into_iter().map(|(m, _, c)| (m, c)).collect())
}

pub(crate) fn ring_order<F: Field>(ring: &PolyRing<F>) -> ModuleOrder {
    ModuleOrder::ideal(ring.order().clone(), ring.weights().to_vec())
}

/// Reduced Gröbner basis under the ring's monomial order.
#[derive(Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(ring: &Arc<PolyRing<F>>, gens: &[Polynomial<F>]) -> Self {
        let order = ring_order(ring);
        let input = gens.iter().map(to_vector).collect();
        let gb = engine::groebner(ring.field(), &order, input, &engine::Options::default());
        let elements = gb.into_iter().map(|v| from_vector(ring, v)).collect();
        GroebnerBasis { ring: ring.clone(), elements }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.lead_monomial().expect("nonzero")).collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !f.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let order = ring_order(&self.ring);
        let basis: Vec<_> = self.elements.iter().map(to_vector).collect();
        let mut idx = engine::LeadIndex::new();
        for b in &basis {
            idx.push(b[0].0, 0);
        }
        let r = engine::reduce(self.ring.field(), &order, &basis, &idx, &to_vector(f));
        Ok(from_vector(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger's criterion, checked pair by pair.
    pub fn verify(&self) -> bool {
        let order = ring_order(&self.ring);
        let basis: Vec<_> = self.elements.iter().map(to_vector).collect();
        engine::is_groebner(self.ring.field(), &order, &basis)
    }

    /// Hilbert series of `S/I` from the leading monomials (standard grading).
    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::from_numerator(self.ring.nvars(), monomial_numerator(&self.leading_monomials()))
    }
}

/// Ideal with a lazily computed reduced Gröbner basis for the ring's order.
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !g.ring().compatible(ring) {
                return Err(Error::RingMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn from_strings(ring: &Arc<PolyRing<F>>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: ring.vars(), gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn groebner(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, &self.gens))
    }

    /// Reduced Gröbner basis under another order (not cached).
    pub fn groebner_in(&self, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
        if &order == self.ring.order() {
            return Ok(self.groebner().clone());
        }
        let ring = self.ring.with_order(order)?;
        let gens: Vec<_> = self.gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<_>>()?;
        Ok(GroebnerBasis::compute(&ring, &gens))
    }

    /// The same ideal with its reduced Gröbner basis as generators.
    pub fn minimalized_gens(&self) -> Self {
        Ideal::new(&self.ring, self.groebner().elements().to_vec()).expect("same ring")
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.groebner().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.groebner().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Self> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Hilbert series of `S/I`, computed in grevlex.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if !self.ring.is_standard_graded() || !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("Hilbert series needs a standard-graded homogeneous ideal".into()));
        }
        Ok(self.groebner_in(MonomialOrder::Grevlex)?.hilbert_series())
    }

    /// Projective dimension and degree of the scheme.
    pub fn dim_degree(&self) -> Result<(i64, i64)> {
        self.hilbert_series()?.dim_degree().ok_or(Error::UnitIdeal)
    }

    /// Generators of degree at most `d`.
    pub fn truncated_gens(&self, d: u32) -> Vec<Polynomial<F>> {
        self.gens.iter().filter(|g| g.degree().is_some_and(|k| k <= d)).cloned().collect()
    }
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
    fn small_bases() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::from_strings(&r, &["x-y", "y-z"]).unwrap();
        let gb = i.groebner();
        let expect: Vec<_> = ["y-z", "x-z"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert_eq!(gb.elements(), &expect[..]);
        let i = Ideal::from_strings(&r, &["x-y"]).unwrap();
        assert_eq!(i.normal_form(&r.parse("x^2").unwrap()).unwrap(), r.parse("y^2").unwrap());
    }

    #[test]
    fn determinantal_bases() {
        let r = PolyRing::standard(fp(), "x", 3).unwrap();
        let i = Ideal::from_strings(&r, &["x0*x2-x1^2"]).unwrap();
        assert_eq!(i.groebner().len(), 1);
        let r = PolyRing::standard(fp(), "x", 6).unwrap();
        let w = Ideal::from_strings(&r, &["x0*x3-x1*x2", "x0*x5-x1*x4", "x2*x5-x3*x4"]).unwrap();
        assert_eq!(w.groebner().len(), 3);
        assert!(w.groebner().verify());
        let hs = w.hilbert_series().unwrap();
        assert_eq!(hs.reduced_numerator(), &[1, 2]);
        assert_eq!(hs.krull_dim(), 4);
        assert_eq!(w.dim_degree().unwrap(), (3, 3));
        assert_eq!(w.normal_form(&r.one()).unwrap(), r.one());
    }
}
