use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, MAX_VARS};

/// Sort key of a module term; plain lexicographic comparison of keys is the
/// module order.
pub(crate) type Key = [u16; KEY_LEN];

const KEY_LEN: usize = 4 + MAX_VARS + 2 + 2;
const DEG_OFFSET: i64 = 1 << 15;

/// Term order on free-module terms `m·e_c`.
///
/// Components below `elim_block` dominate every other term; after that the
/// shifted degree `wdeg(m) + shifts[c]` decides when shifts are present
/// (term-over-position); then the monomial order; lower component index wins
/// the final tie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub weights: Vec<u32>,
    pub shifts: Option<Vec<i64>>,
    pub elim_block: Option<u32>,
}

impl ModuleOrder {
    pub fn ideal(base: MonomialOrder, weights: Vec<u32>) -> Self {
        ModuleOrder { base, weights, shifts: None, elim_block: None }
    }

    pub fn shifted(base: MonomialOrder, weights: Vec<u32>, shifts: Vec<i64>) -> Self {
        ModuleOrder { base, weights, shifts: Some(shifts), elim_block: None }
    }

    #[inline]
    pub fn shift(&self, c: u32) -> i64 {
        self.shifts.as_ref().map_or(0, |s| s[c as usize])
    }

    /// Degree of `m·e_c` used for sugar.
    #[inline]
    pub fn degree(&self, m: &Monomial, c: u32) -> i64 {
        m.weighted_degree(&self.weights) + self.shift(c)
    }

    pub(crate) fn key(&self, m: &Monomial, c: u32) -> Key {
        let mut k = [0u16; KEY_LEN];
        if let Some(b) = self.elim_block {
            k[0] = (c < b) as u16;
        }
        if self.shifts.is_some() {
            k[1] = (self.degree(m, c) + DEG_OFFSET) as u16;
        }
        let n = self.weights.len();
        let rev = |e: u32| u16::MAX - e as u16;
        match self.base {
            MonomialOrder::Grevlex => {
                k[2] = m.degree() as u16;
                for (slot, i) in (0..n).rev().enumerate() {
                    k[4 + slot] = rev(m.exponent(i));
                }
            }
            MonomialOrder::Lex => {
                for i in 0..n {
                    k[4 + i] = m.exponent(i) as u16;
                }
            }
            MonomialOrder::Block(b) => {
                // [deg1, block one reversed, deg2, block two reversed]
                k[2] = (0..b).map(|i| m.exponent(i)).sum::<u32>() as u16;
                for (slot, i) in (0..b).rev().enumerate() {
                    k[4 + slot] = rev(m.exponent(i));
                }
                k[4 + b] = (b..n).map(|i| m.exponent(i)).sum::<u32>() as u16;
                for (slot, i) in (b..n).rev().enumerate() {
                    k[5 + b + slot] = rev(m.exponent(i));
                }
            }
        }
        let cr = u32::MAX - c;
        k[KEY_LEN - 2] = (cr >> 16) as u16;
        k[KEY_LEN - 1] = cr as u16;
        k
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ac: u32, b: &Monomial, bc: u32) -> Ordering {
        if let Some(blk) = self.elim_block {
            let o = (ac < blk).cmp(&(bc < blk));
            if o != Ordering::Equal {
                return o;
            }
        }
        if self.shifts.is_some() {
            let o = self.degree(a, ac).cmp(&self.degree(b, bc));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.base.cmp(a, b).then_with(|| bc.cmp(&ac))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    proptest! {
        #[test]
        fn key_matches_comparison(
            a in proptest::collection::vec(0u32..5, 6),
            b in proptest::collection::vec(0u32..5, 6),
            ca in 0u32..3, cb in 0u32..3, which in 0usize..5,
        ) {
            let base = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(2),
                MonomialOrder::Grevlex, MonomialOrder::Grevlex][which].clone();
            let mut ord = ModuleOrder::ideal(base, vec![1; 6]);
            if which == 3 { ord.shifts = Some(vec![0, 3, -1]); }
            if which == 4 { ord.elim_block = Some(1); }
            let (ma, mb) = (mono(&a), mono(&b));
            prop_assert_eq!(ord.key(&ma, ca).cmp(&ord.key(&mb, cb)), ord.cmp(&ma, ca, &mb, cb));
        }
    }

    #[test]
    fn ideal_order_agrees_with_monomial_order() {
        let ord = ModuleOrder::ideal(MonomialOrder::Block(4), vec![1; 6]);
        let a = mono(&[1, 0, 0, 0, 5, 0]);
        let b = mono(&[0, 0, 0, 0, 6, 1]);
        assert_eq!(ord.cmp(&a, 0, &b, 0), Ordering::Greater);
        assert_eq!(ord.key(&a, 0).cmp(&ord.key(&b, 0)), Ordering::Greater);
    }
}
