use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// Exponent vector with 16-bit entries and cached total degree.
///
/// Entries past the ring's variable count are always zero, so comparisons
/// and divisibility tests can run over the full fixed-size array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len(), MAX_VARS));
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        weights.iter().zip(self.exps.iter()).map(|(&w, &e)| w as i64 * e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn set_exponent(&mut self, i: usize, e: u32) -> Result<()> {
        let e16 = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        self.deg = self.deg - self.exps[i] as u32 + e;
        self.exps[i] = e16;
        Ok(())
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].checked_add(other.exps[i]).ok_or(Error::ExponentOverflow)?;
        }
        r.deg += other.deg;
        Ok(r)
    }

    /// Product; exponents in this crate stay far below the 16-bit limit, and
    /// overflow is a bug, so it panics instead of wrapping.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        r.deg += other.deg;
        r
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut r = Self::one();
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u32 * k;
            r.exps[i] = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        r.deg = self.deg * k;
        Ok(r)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] -= other.exps[i];
        }
        r.deg -= other.deg;
        r
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.div(other))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = Self::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = Self::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// One bit per variable that occurs; `divmask(a) & !divmask(b) != 0`
    /// rules out `a | b`.
    #[inline]
    pub fn divmask(&self) -> u32 {
        let mut m = 0u32;
        for i in 0..MAX_VARS {
            if self.exps[i] != 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Largest `k` with `x_i^k | self`.
    pub fn strip_var(&self, i: usize) -> (Monomial, u32) {
        let mut r = *self;
        let k = r.exps[i] as u32;
        r.exps[i] = 0;
        r.deg -= k;
        (r, k)
    }

    /// Monomial with variables renumbered by `perm` (old index -> new index).
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut r = Self::one();
        for (old, &new) in perm.iter().enumerate() {
            r.exps[new] = self.exps[old];
        }
        r.deg = self.deg;
        r
    }

    /// Grevlex comparison over a range of variables.
    #[inline]
    fn grevlex_range(&self, other: &Monomial, lo: usize, hi: usize) -> Ordering {
        let da: u32 = self.exps[lo..hi].iter().map(|&e| e as u32).sum();
        let db: u32 = other.exps[lo..hi].iter().map(|&e| e as u32).sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (lo..hi).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        if self.deg != other.deg {
            return self.deg.cmp(&other.deg);
        }
        for i in (0..MAX_VARS).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

/// Monomial orders. Variables are ranked `x0 > x1 > …` in every order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Variables `0..split` form a block compared first (grevlex), then the
    /// remaining variables (grevlex). Eliminates the leading block.
    Block(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Block(k) => a
                .grevlex_range(b, 0, *k)
                .then_with(|| a.grevlex_range(b, *k, MAX_VARS)),
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block{k}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => s
                .strip_prefix("block")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Block)
                .ok_or_else(|| Error::Precondition(format!("unknown monomial order `{s}`"))),
        }
    }
}

/// Compares two exponent slices of equal length under `order`.
pub fn compare(a: &[u32], b: &[u32], order: &MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::Precondition(format!(
            "monomials of different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(order.cmp(&Monomial::from_exponents(a)?, &Monomial::from_exponents(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // x1^2 > x0 x2 in grevlex.
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Less);
    }

    #[test]
    fn block_eliminates_leading_block() {
        // s*x0^5 vs x0^6*x1 with variables (s,t,u,v,x0,x1)
        let a = m(&[1, 0, 0, 0, 5, 0]);
        let b = m(&[0, 0, 0, 0, 6, 1]);
        assert_eq!(MonomialOrder::Block(4).cmp(&a, &b), Ordering::Greater);
        assert_eq!(compare(&[1, 2], &[1, 2], &MonomialOrder::Lex).unwrap(), Ordering::Equal);
        assert!(compare(&[1, 2], &[1], &MonomialOrder::Lex).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(Monomial::from_exponents(&[70000]).is_err());
        let a = m(&[40000]);
        assert!(a.try_mul(&a).is_err());
    }
}
