//! Hilbert functions of graded submodules of free modules.

use crate::coeffs::Field;
use crate::gb::engine::{self, Accumulator, Vector};
use crate::gb::{monomial_numerator, HilbertSeries, ModuleOrder};
use crate::poly::{Monomial, MonomialOrder};
use crate::resolve::GradedMatrix;

/// `F / im M` for `F = ⊕ S(-row_degrees[c])`, kept as one monomial quotient
/// per component of `F`.
#[derive(Clone, Debug)]
pub struct Cokernel {
    row_degrees: Vec<i64>,
    parts: Vec<HilbertSeries>,
}

pub(crate) fn column_vectors<F: Field>(m: &GradedMatrix<F>, order: &ModuleOrder) -> Vec<Vector<F::Elem>> {
    let field = m.ring().field();
    m.columns()
        .iter()
        .filter(|c| !c.is_empty())
        .map(|col| {
            let mut acc = Accumulator::new(field, order);
            for (i, p) in col {
                for (t, c) in p.terms() {
                    acc.add_term(*t, *i as u32, c.clone());
                }
            }
            acc.drain()
        })
        .collect()
}

pub(crate) fn top_order<F: Field>(m: &GradedMatrix<F>) -> ModuleOrder {
    ModuleOrder::shifted(
        MonomialOrder::Grevlex,
        m.ring().weights().to_vec(),
        m.row_degrees().to_vec(),
    )
}

impl Cokernel {
    pub fn of<F: Field>(m: &GradedMatrix<F>) -> Self {
        let order = top_order(m);
        let opts = engine::Options { leads_only: true, ..Default::default() };
        let gb = engine::groebner(m.ring().field(), &order, column_vectors(m, &order), &opts);
        let n = m.ring().nvars();
        let mut leads: Vec<Vec<Monomial>> = vec![Vec::new(); m.nrows()];
        for v in &gb {
            leads[v[0].1 as usize].push(v[0].0);
        }
        let parts = leads
            .iter()
            .map(|l| HilbertSeries::from_numerator(n, monomial_numerator(l)))
            .collect();
        Cokernel { row_degrees: m.row_degrees().to_vec(), parts }
    }

    /// `dim_k (F / im M)_d`.
    pub fn dim(&self, d: i64) -> i64 {
        self.row_degrees
            .iter()
            .zip(&self.parts)
            .map(|(t, h)| h.hilbert_function(d - t))
            .sum()
    }
}
