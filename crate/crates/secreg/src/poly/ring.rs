use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::Polynomial;
use crate::coeffs::Field;
use crate::error::{Error, Result};

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// `k[x_0, …, x_n]` with a monomial order and a positive grading.
///
/// The grading (variable weights) defaults to the standard one; it only
/// matters for homogeneity checks and the sugar of Buchberger pairs.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    id: u64,
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.characteristic() == other.field.characteristic()
            && self.names == other.names
            && self.order == other.order
            && self.weights == other.weights
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        let n = names.len();
        Self::with_weights(field, names, order, vec![1; n])
    }

    pub fn with_weights(
        field: F,
        names: Vec<String>,
        order: MonomialOrder,
        weights: Vec<u32>,
    ) -> Result<Arc<Self>> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len(), MAX_VARS));
        }
        if weights.len() != names.len() {
            return Err(Error::Precondition("one weight per variable required".into()));
        }
        for (i, a) in names.iter().enumerate() {
            let valid = a.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Precondition(format!("invalid variable name `{a}`")));
            }
            if names[..i].contains(a) {
                return Err(Error::Precondition(format!("duplicate variable `{a}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(Error::Precondition("block split beyond variable count".into()));
            }
        }
        Ok(Arc::new(PolyRing {
            id: NEXT_RING_ID.fetch_add(1, AtomicOrdering::Relaxed),
            field,
            names,
            order,
            weights,
        }))
    }

    /// Variables `prefix0 … prefix{n-1}`, grevlex.
    pub fn standard(field: F, prefix: &str, n: usize) -> Result<Arc<Self>> {
        Self::new(field, (0..n).map(|i| format!("{prefix}{i}")).collect(), MonomialOrder::Grevlex)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and grading under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::with_weights(self.field.clone(), self.names.clone(), order, self.weights.clone())
    }

    pub fn compatible(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial::from_sorted(self.clone(), Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> Polynomial<F> {
        self.monomial(Monomial::one(), c)
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            Polynomial::from_sorted(self.clone(), vec![(m, c)])
        }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial<F> {
        assert!(i < self.nvars(), "variable index out of range");
        self.monomial(Monomial::var(i), self.field.one())
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear_form(self: &Arc<Self>, coeffs: &[F::Elem]) -> Polynomial<F> {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (Monomial::var(i), c.clone()))
            .collect();
        Polynomial::from_terms(self.clone(), terms)
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial<F>> {
        super::parse::parse_polynomial(self, text)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    /// All monomials of (standard) degree `d`, in descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = exps.len();
            if i + 1 == n {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps).expect("degree in range"));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.order.cmp(b, a));
        out
    }
}
