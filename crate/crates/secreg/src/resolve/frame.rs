//! Schreyer frames (La Scala–Stillman) for resolutions of `S/I`.
//!
//! Level 1 is the reduced grevlex Gröbner basis of `I`, sorted ascending by
//! leading monomial. The elements of level `ℓ+1` with leading component `a`
//! are the minimal generators of `(n_b : b < a, same parent) : n_a`, where
//! `n_a` is the leading monomial of `a`. Elements are numbered parent-major,
//! so comparing `(n·TM(a), a)` (TM = product of leading monomials down the
//! chain) realizes the induced Schreyer order.

use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Largest number of variables the packed order key supports.
pub const MAX_FRAME_VARS: usize = 9;

#[inline]
fn pack(m: &Monomial, nvars: usize) -> u128 {
    let mut k = (m.degree() as u128) << 108;
    for (slot, i) in (0..nvars).rev().enumerate() {
        let e = m.exponent(i);
        debug_assert!(e < 4096);
        k |= ((4095 - e) as u128) << (96 - 12 * slot);
    }
    k
}

pub(crate) type Term<E> = (Monomial, u32, E);

pub(crate) struct Level<E> {
    pub parent: Vec<u32>,
    pub lead: Vec<Monomial>,
    pub tm: Vec<Monomial>,
    pub degree: Vec<i64>,
    /// Children (at the next level) occupy `children[a].0 .. children[a].1`.
    pub children: Vec<(u32, u32)>,
    /// Differential, in terms of the previous level's basis.
    pub diff: Vec<Vec<Term<E>>>,
}

impl<E> Level<E> {
    fn len(&self) -> usize {
        self.lead.len()
    }
}

pub(crate) struct Frame<E> {
    pub nvars: usize,
    pub levels: Vec<Level<E>>,
}

impl<E: Clone + Send + Sync> Frame<E> {
    /// `gb` is a reduced monic grevlex Gröbner basis, each element a list of
    /// `(monomial, coefficient)` in descending order.
    pub(crate) fn build<F: Field<Elem = E>>(field: &F, nvars: usize, gb: &[Vec<(Monomial, E)>]) -> Result<Self> {
        if nvars > MAX_FRAME_VARS {
            return Err(Error::TooManyVariables(nvars, MAX_FRAME_VARS));
        }
        if gb.iter().any(|g| g.iter().any(|(m, _)| (0..nvars).any(|i| m.exponent(i) >= 4096))) {
            return Err(Error::ExponentOverflow);
        }
        let mut order: Vec<usize> = (0..gb.len()).collect();
        order.sort_by_key(|&i| pack(&gb[i][0].0, nvars));
        let root = Level {
            parent: vec![0],
            lead: vec![Monomial::one()],
            tm: vec![Monomial::one()],
            degree: vec![0],
            children: vec![(0, gb.len() as u32)],
            diff: vec![Vec::new()],
        };
        let first = Level {
            parent: vec![0; gb.len()],
            lead: order.iter().map(|&i| gb[i][0].0).collect(),
            tm: order.iter().map(|&i| gb[i][0].0).collect(),
            degree: order.iter().map(|&i| gb[i][0].0.degree() as i64).collect(),
            children: Vec::new(),
            diff: order
                .iter()
                .map(|&i| gb[i].iter().map(|(m, c)| (*m, 0u32, c.clone())).collect())
                .collect(),
        };
        let mut frame = Frame { nvars, levels: vec![root, first] };
        loop {
            let next = frame.next_level(field)?;
            if next.len() == 0 {
                let last = frame.levels.last_mut().expect("levels");
                last.children = vec![(0, 0); last.len()];
                break;
            }
            frame.levels.push(next);
        }
        Ok(frame)
    }

    fn next_level<F: Field<Elem = E>>(&mut self, field: &F) -> Result<Level<E>> {
        let l = self.levels.len() - 1;
        let (before, cur) = self.levels.split_at_mut(l);
        let prev = &before[l - 1];
        let cur = &mut cur[0];
        let nvars = self.nvars;
        let mut parent = Vec::new();
        let mut lead = Vec::new();
        let mut tm = Vec::new();
        let mut degree = Vec::new();
        let mut children = Vec::with_capacity(cur.len());
        for a in 0..cur.len() {
            let (lo, _) = prev.children[cur.parent[a] as usize];
            let na = cur.lead[a];
            let mut gens: Vec<Monomial> = (lo as usize..a)
                .map(|b| {
                    let nb = cur.lead[b];
                    nb.div(&nb.gcd(&na))
                })
                .collect();
            gens.sort_by_key(|m| pack(m, nvars));
            let mut mins: Vec<Monomial> = Vec::new();
            for g in gens {
                if !mins.iter().any(|h| h.divides(&g)) {
                    mins.push(g);
                }
            }
            let start = lead.len() as u32;
            for m in mins {
                parent.push(a as u32);
                lead.push(m);
                tm.push(m.mul(&cur.tm[a]));
                degree.push(m.degree() as i64 + cur.degree[a]);
            }
            children.push((start, lead.len() as u32));
        }
        cur.children = children;
        let cur = &*cur;
        let diff: Vec<Vec<Term<E>>> = (0..lead.len())
            .into_par_iter()
            .map(|s| differential(field, nvars, prev, cur, lead[s], parent[s]))
            .collect::<Result<_>>()?;
        Ok(Level { parent, lead, tm, degree, children: Vec::new(), diff })
    }
}

/// `d(n·e_a)` for a new element with leading term `n·e_a`: reduces
/// `n·d(e_a)` to zero by the current level and records the quotients.
fn differential<F: Field>(
    field: &F,
    nvars: usize,
    prev: &Level<F::Elem>,
    cur: &Level<F::Elem>,
    n: Monomial,
    a: u32,
) -> Result<Vec<Term<F::Elem>>> {
    let mut coeffs: HashMap<(u128, u32), (Monomial, F::Elem)> = HashMap::new();
    let mut heap: BinaryHeap<(u128, u32)> = BinaryHeap::new();
    let add = |coeffs: &mut HashMap<(u128, u32), (Monomial, F::Elem)>,
                   heap: &mut BinaryHeap<(u128, u32)>,
                   terms: &[Term<F::Elem>],
                   t: &Monomial,
                   c: &F::Elem| {
        for (m, p, v) in terms {
            let mt = m.mul(t);
            let key = (pack(&mt.mul(&prev.tm[*p as usize]), nvars), *p);
            let val = field.mul(v, c);
            match coeffs.get_mut(&key) {
                Some(e) => e.1 = field.add(&e.1, &val),
                None => {
                    coeffs.insert(key, (mt, val));
                    heap.push(key);
                }
            }
        }
    };
    let one = field.one();
    add(&mut coeffs, &mut heap, &cur.diff[a as usize], &n, &one);
    let mut out: Vec<Term<F::Elem>> = vec![(n, a, one)];
    let mut first = true;
    while let Some(key) = heap.pop() {
        let (t, c) = coeffs.remove(&key).expect("heap and map agree");
        if field.is_zero(&c) {
            continue;
        }
        let p = key.1;
        let (lo, hi) = prev.children[p as usize];
        let limit = if first { a } else { hi };
        let mask = t.divmask();
        let tau = (lo..limit).find(|&b| {
            let nb = &cur.lead[b as usize];
            nb.divmask() & !mask == 0 && nb.divides(&t)
        });
        let tau = match tau {
            Some(b) => b,
            None => {
                return Err(Error::Precondition(
                    "Schreyer reduction stalled; input is not a reduced Gröbner basis".into(),
                ))
            }
        };
        first = false;
        let q = t.div(&cur.lead[tau as usize]);
        let neg = field.neg(&c);
        out.push((q, tau, neg.clone()));
        add(&mut coeffs, &mut heap, &cur.diff[tau as usize][1..], &q, &neg);
    }
    Ok(out)
}
