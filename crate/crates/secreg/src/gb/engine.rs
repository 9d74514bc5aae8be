//! Buchberger's algorithm on vectors of a free module `S^k`.
//!
//! Ideals are the rank-one case. Pairs are processed by sugar with ties
//! broken by creation index; the Gebauer–Möller update applies the chain
//! criterion everywhere and the product criterion only in rank one.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::order::{Key, ModuleOrder};
use crate::coeffs::Field;
use crate::poly::Monomial;

/// Terms `c·m·e_comp` sorted strictly descending in the module order.
pub(crate) type Vector<E> = Vec<(Monomial, u32, E)>;

/// Heap-plus-hashmap accumulator for linear combinations of terms.
pub(crate) struct Accumulator<'a, F: Field> {
    field: &'a F,
    order: &'a ModuleOrder,
    coeffs: HashMap<Key, (Monomial, u32, F::Elem)>,
    heap: BinaryHeap<Key>,
}

impl<'a, F: Field> Accumulator<'a, F> {
    pub(crate) fn new(field: &'a F, order: &'a ModuleOrder) -> Self {
        Accumulator { field, order, coeffs: HashMap::new(), heap: BinaryHeap::new() }
    }

    /// Adds `c·t·v`.
    pub(crate) fn add_scaled(&mut self, v: &[(Monomial, u32, F::Elem)], c: &F::Elem, t: &Monomial) {
        for (m, comp, a) in v {
            let mt = m.mul(t);
            let val = self.field.mul(a, c);
            let key = self.order.key(&mt, *comp);
            match self.coeffs.get_mut(&key) {
                Some(e) => e.2 = self.field.add(&e.2, &val),
                None => {
                    self.coeffs.insert(key, (mt, *comp, val));
                    self.heap.push(key);
                }
            }
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, comp: u32, c: F::Elem) {
        let key = self.order.key(&m, comp);
        match self.coeffs.get_mut(&key) {
            Some(e) => e.2 = self.field.add(&e.2, &c),
            None => {
                self.coeffs.insert(key, (m, comp, c));
                self.heap.push(key);
            }
        }
    }

    /// Largest term with nonzero coefficient, removed.
    pub(crate) fn pop(&mut self) -> Option<(Monomial, u32, F::Elem)> {
        while let Some(key) = self.heap.pop() {
            let t = self.coeffs.remove(&key).expect("heap and map agree");
            if !self.field.is_zero(&t.2) {
                return Some(t);
            }
        }
        None
    }

    pub(crate) fn drain(mut self) -> Vector<F::Elem> {
        let mut out = Vec::new();
        while let Some(t) = self.pop() {
            out.push(t);
        }
        out
    }
}

pub(crate) fn monic<F: Field>(field: &F, v: &mut Vector<F::Elem>) {
    if let Some(lc) = v.first().map(|t| t.2.clone()) {
        if !field.is_one(&lc) {
            let inv = field.inv(&lc).expect("nonzero lead");
            for t in v.iter_mut() {
                t.2 = field.mul(&t.2, &inv);
            }
        }
    }
}

/// Lead-term index for reducer lookup.
pub(crate) struct LeadIndex {
    leads: Vec<(Monomial, u32, u32)>,
}

impl LeadIndex {
    pub(crate) fn new() -> Self {
        LeadIndex { leads: Vec::new() }
    }

    pub(crate) fn push(&mut self, m: Monomial, comp: u32) {
        self.leads.push((m, comp, m.divmask()));
    }

    /// First stored lead dividing `m·e_comp`.
    #[inline]
    pub(crate) fn find(&self, m: &Monomial, comp: u32) -> Option<usize> {
        let mask = m.divmask();
        self.leads
            .iter()
            .position(|(l, c, lm)| *c == comp && lm & !mask == 0 && l.divides(m))
    }

    pub(crate) fn find_where(&self, m: &Monomial, comp: u32, ok: impl Fn(usize) -> bool) -> Option<usize> {
        let mask = m.divmask();
        self.leads
            .iter()
            .enumerate()
            .position(|(i, (l, c, lm))| *c == comp && lm & !mask == 0 && ok(i) && l.divides(m))
    }
}

/// Full reduction of `f` modulo monic `basis` with lead index `idx`.
pub(crate) fn reduce<F: Field>(
    field: &F,
    order: &ModuleOrder,
    basis: &[Vector<F::Elem>],
    idx: &LeadIndex,
    f: &[(Monomial, u32, F::Elem)],
) -> Vector<F::Elem> {
    let mut acc = Accumulator::new(field, order);
    acc.add_scaled(f, &field.one(), &Monomial::one());
    reduce_acc(field, basis, idx, acc)
}

/// Drains `acc`, reducing every term by `basis`.
pub(crate) fn reduce_acc<F: Field>(
    field: &F,
    basis: &[Vector<F::Elem>],
    idx: &LeadIndex,
    mut acc: Accumulator<'_, F>,
) -> Vector<F::Elem> {
    let mut out = Vec::new();
    while let Some((m, c, a)) = acc.pop() {
        match idx.find(&m, c) {
            Some(i) => {
                let g = &basis[i];
                let t = m.div(&g[0].0);
                acc.add_scaled(&g[1..], &field.neg(&a), &t);
            }
            None => out.push((m, c, a)),
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    alive: bool,
}

pub(crate) struct Options {
    /// Process only pairs and inputs of sugar at most this; for homogeneous
    /// input the result is a Gröbner basis up to that degree.
    pub degree_bound: Option<i64>,
    /// Only top-reduce and skip the final interreduction. The leading terms
    /// are still those of the reduced basis; tails are not.
    pub leads_only: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { degree_bound: None, leads_only: false }
    }
}

fn sugar_of<F: Field>(order: &ModuleOrder, v: &Vector<F::Elem>) -> i64 {
    v.iter().map(|(m, c, _)| order.degree(m, *c)).max().unwrap_or(0)
}

/// Reduced Gröbner basis of the submodule generated by `input`, sorted
/// ascending by leading term, every element monic.
pub(crate) fn groebner<F: Field>(
    field: &F,
    order: &ModuleOrder,
    input: Vec<Vector<F::Elem>>,
    opts: &Options,
) -> Vec<Vector<F::Elem>> {
    let rank_one = order.shifts.is_none()
        && order.elim_block.is_none()
        && input.iter().all(|v| v.iter().all(|t| t.1 == 0));
    let mut basis: Vec<Vector<F::Elem>> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut idx = LeadIndex::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // (sugar, seq, item) with item < inputs.len() for an input, else a pair
    let mut queue: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0usize;
    let inputs: Vec<Vector<F::Elem>> = input.into_iter().filter(|v| !v.is_empty()).collect();
    let n_in = inputs.len();
    for (k, v) in inputs.iter().enumerate() {
        queue.push(Reverse((sugar_of::<F>(order, v), seq, k)));
        seq += 1;
    }
    while let Some(Reverse((s, _, item))) = queue.pop() {
        if opts.degree_bound.is_some_and(|b| s > b) {
            continue;
        }
        let mut acc = Accumulator::new(field, order);
        if item < n_in {
            acc.add_scaled(&inputs[item], &field.one(), &Monomial::one());
        } else {
            let p = &pairs[item - n_in];
            if !p.alive {
                continue;
            }
            let (f, g) = (&basis[p.i], &basis[p.j]);
            let tf = p.lcm.div(&f[0].0);
            let tg = p.lcm.div(&g[0].0);
            acc.add_scaled(&f[1..], &field.one(), &tf);
            acc.add_scaled(&g[1..], &field.neg(&field.one()), &tg);
        }
        let mut h = if opts.leads_only {
            top_reduce_acc(field, &basis, &idx, acc)
        } else {
            reduce_acc(field, &basis, &idx, acc)
        };
        if h.is_empty() {
            continue;
        }
        monic(field, &mut h);
        let hi = basis.len();
        let (hm, hc) = (h[0].0, h[0].1);
        sugar.push(s.max(sugar_of::<F>(order, &h)));
        // Gebauer–Möller update
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for g in 0..hi {
            if !active[g] || basis[g][0].1 != hc {
                continue;
            }
            let gm = basis[g][0].0;
            cand.push((g, gm.lcm(&hm), rank_one && gm.is_coprime(&hm)));
        }
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..cand.len() {
            let (g, l, coprime) = cand[k];
            let dominated = !coprime
                && (cand[k + 1..].iter().any(|c| c.1.divides(&l))
                    || keep.iter().any(|c| c.1.divides(&l)));
            if !dominated {
                keep.push((g, l, coprime));
            }
        }
        for p in pairs.iter_mut().filter(|p| p.alive) {
            if basis[p.i][0].1 != hc || !hm.divides(&p.lcm) {
                continue;
            }
            let li = basis[p.i][0].0.lcm(&hm);
            let lj = basis[p.j][0].0.lcm(&hm);
            if li != p.lcm && lj != p.lcm {
                p.alive = false;
            }
        }
        for g in 0..hi {
            if active[g] && basis[g][0].1 == hc && hm.divides(&basis[g][0].0) {
                active[g] = false;
            }
        }
        basis.push(h);
        active.push(true);
        idx.push(hm, hc);
        for (g, l, coprime) in keep {
            if coprime {
                continue;
            }
            let gs = sugar[g] + order.degree(&l, hc) - order.degree(&basis[g][0].0, hc);
            let hs = sugar[hi] + order.degree(&l, hc) - order.degree(&hm, hc);
            pairs.push(Pair { i: g, j: hi, lcm: l, alive: true });
            queue.push(Reverse((gs.max(hs), seq, n_in + pairs.len() - 1)));
            seq += 1;
        }
    }
    if opts.leads_only {
        let mut kept: Vec<_> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(v, _)| v).collect();
        kept.sort_by(|a, b| order.cmp(&a[0].0, a[0].1, &b[0].0, b[0].1));
        return kept;
    }
    interreduce(field, order, basis, &active)
}

/// Reduces until the leading term is irreducible; the tail is left as is.
fn top_reduce_acc<F: Field>(
    field: &F,
    basis: &[Vector<F::Elem>],
    idx: &LeadIndex,
    mut acc: Accumulator<'_, F>,
) -> Vector<F::Elem> {
    while let Some((m, c, a)) = acc.pop() {
        match idx.find(&m, c) {
            Some(i) => {
                let g = &basis[i];
                let t = m.div(&g[0].0);
                acc.add_scaled(&g[1..], &field.neg(&a), &t);
            }
            None => {
                let mut out = vec![(m, c, a)];
                out.extend(acc.drain());
                return out;
            }
        }
    }
    Vec::new()
}

fn interreduce<F: Field>(
    field: &F,
    order: &ModuleOrder,
    basis: Vec<Vector<F::Elem>>,
    active: &[bool],
) -> Vec<Vector<F::Elem>> {
    let mut kept: Vec<Vector<F::Elem>> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, a)| **a)
        .map(|(v, _)| v)
        .collect();
    kept.sort_by(|a, b| order.cmp(&a[0].0, a[0].1, &b[0].0, b[0].1));
    let mut idx = LeadIndex::new();
    for v in &kept {
        idx.push(v[0].0, v[0].1);
    }
    let n = kept.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = &kept[i];
        let mut acc = Accumulator::new(field, order);
        acc.add_scaled(&v[1..], &field.one(), &Monomial::one());
        let mut r = vec![v[0].clone()];
        while let Some((m, c, a)) = acc.pop() {
            match idx.find_where(&m, c, |j| j != i) {
                Some(j) => {
                    let g = &kept[j];
                    let t = m.div(&g[0].0);
                    acc.add_scaled(&g[1..], &field.neg(&a), &t);
                }
                None => r.push((m, c, a)),
            }
        }
        out.push(r);
    }
    out
}

/// S-vector of `f` and `g` (same leading component), unreduced.
pub(crate) fn s_vector<F: Field>(
    field: &F,
    order: &ModuleOrder,
    f: &Vector<F::Elem>,
    g: &Vector<F::Elem>,
) -> Option<Vector<F::Elem>> {
    if f[0].1 != g[0].1 {
        return None;
    }
    let l = f[0].0.lcm(&g[0].0);
    let mut acc = Accumulator::new(field, order);
    let cf = field.inv(&f[0].2).expect("nonzero");
    let cg = field.neg(&field.inv(&g[0].2).expect("nonzero"));
    acc.add_scaled(f, &cf, &l.div(&f[0].0));
    acc.add_scaled(g, &cg, &l.div(&g[0].0));
    Some(acc.drain())
}

/// Buchberger's criterion: every S-vector reduces to zero.
pub(crate) fn is_groebner<F: Field>(field: &F, order: &ModuleOrder, basis: &[Vector<F::Elem>]) -> bool {
    let mut idx = LeadIndex::new();
    let mut monic_basis = Vec::with_capacity(basis.len());
    for v in basis {
        let mut w = v.clone();
        monic(field, &mut w);
        idx.push(w[0].0, w[0].1);
        monic_basis.push(w);
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = s_vector(field, order, &monic_basis[i], &monic_basis[j]) {
                if !reduce(field, order, &monic_basis, &idx, &s).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}
