use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::coeffs::{coeff_repr, CoeffRepr, Field};
use crate::error::{Error, Result};

/// Sparse polynomial: terms sorted strictly descending in the ring's order,
/// no zero coefficients.
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Clone for Polynomial<F> {
    fn clone(&self) -> Self {
        Polynomial { ring: self.ring.clone(), terms: self.terms.clone() }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Polynomial<F> {
    /// Terms already sorted and canonical.
    pub(crate) fn from_sorted(ring: Arc<PolyRing<F>>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    /// Arbitrary terms: sorted, like terms combined, zeros dropped.
    pub fn from_terms(ring: Arc<PolyRing<F>>, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field().clone();
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| field.is_zero(&t.1)) {
            out.pop();
        }
        Polynomial { ring, terms: out }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let w = self.ring.weights();
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.weighted_degree(w);
                self.terms.iter().all(|(m, _)| m.weighted_degree(w) == d)
            }
        }
    }

    /// Degree in the ring's grading, for a homogeneous polynomial.
    pub fn weighted_degree(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0.weighted_degree(self.ring.weights()))
    }

    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Vec<(Monomial, F::Elem)> {
        let field = self.field();
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate { field.neg(c) } else { c.clone() })));
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: self.merge(other, false) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: self.merge(other, true) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.try_mul(mb)?;
                let c = field.mul(ca, cb);
                acc.entry(m).and_modify(|e| *e = field.add(e, &c)).or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect::<Vec<_>>();
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(a, b)| (a.mul(m), field.mul(b, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut r = self.ring.one();
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient `self / g`; errors when `g` does not divide.
    pub fn div_exact(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        let field = self.field();
        let (gm, gc) = match g.terms.first() {
            None => return Err(Error::DivisionByZero),
            Some(t) => t,
        };
        let ginv = field.inv(gc).expect("nonzero");
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let qm = m
                .checked_div(gm)
                .ok_or_else(|| Error::Precondition("inexact polynomial division".into()))?;
            let qc = field.mul(&c, &ginv);
            rem = rem.sub(&g.mul_term(&qm, &qc))?;
            q.push((qm, qc));
        }
        Ok(Polynomial::from_terms(self.ring.clone(), q))
    }

    /// Re-expresses the polynomial in a ring with the same variables.
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Self> {
        if ring.names() != self.ring.names() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring.clone(), self.terms.clone()))
    }

    /// Renames variables into `ring`: old variable `i` becomes `perm[i]`.
    pub fn permute_into(&self, ring: &Arc<PolyRing<F>>, perm: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect();
        Polynomial::from_terms(ring.clone(), terms)
    }

    /// The ring homomorphism `x_i ↦ images[i]` applied to `self`.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() < self.ring.nvars() {
            let name = self.ring.names()[images.len()].clone();
            return Err(Error::MissingImage(name));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            if !p.ring.compatible(&target) {
                return Err(Error::RingMismatch);
            }
        }
        let n = self.ring.nvars();
        let mut max_exp = vec![0u32; n];
        for (m, _) in &self.terms {
            for (i, e) in max_exp.iter_mut().enumerate() {
                *e = (*e).max(m.exponent(i));
            }
        }
        let mut powers: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut pw = vec![target.one()];
            for k in 1..=max_exp[i] as usize {
                let next = pw[k - 1].mul(&images[i])?;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        let field = target.field().clone();
        for (m, c) in &self.terms {
            let mut prod = target.constant(c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    prod = prod.mul(&pw[e])?;
                }
            }
            for (tm, tc) in prod.terms {
                acc.entry(tm).and_modify(|x| *x = field.add(x, &tc)).or_insert(tc);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Value at a point of `k^{n}`.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let field = self.field();
        let mut total = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    v = field.mul(&v, x);
                }
            }
            total = field.add(&total, &v);
        }
        total
    }

    /// Homogeneous part of standard degree `d`.
    pub fn component(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(a, _)| a == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn variables_used(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0)).collect()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let repr = coeff_repr(self.field(), c);
            let neg = repr.is_negative();
            if k > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_unit = matches!(repr, CoeffRepr::Int(n) if n.abs() == 1);
            if !is_unit || m.is_one() {
                factors.push(match &repr {
                    CoeffRepr::Int(n) => n.abs().to_string(),
                    CoeffRepr::Frac(n, d) => format!("{}/{}", num_traits::Signed::abs(n), d),
                });
            }
            for (i, name) in names.iter().enumerate() {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> std::ops::$tr for &Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics on ring mismatch; use the named method for a `Result`.
            fn $m(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                Polynomial::$m(self, rhs).expect("ring mismatch")
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}
