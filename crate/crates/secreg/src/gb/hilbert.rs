//! Hilbert series of monomial quotients by pivot recursion.

use crate::poly::Monomial;

/// Hilbert series `numerator(t) / (1-t)^nvars` of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
    reduced: Vec<i64>,
    dim: usize,
}

impl HilbertSeries {
    pub fn from_numerator(nvars: usize, numerator: Vec<i64>) -> Self {
        let numerator = trim(numerator);
        let mut reduced = numerator.clone();
        let mut dim = nvars;
        while dim > 0 && !reduced.is_empty() && reduced.iter().sum::<i64>() == 0 {
            // divide by (1 - t)
            let mut q = vec![0i64; reduced.len() - 1];
            let mut carry = 0;
            for (i, c) in reduced.iter().take(reduced.len() - 1).enumerate() {
                carry += c;
                q[i] = carry;
            }
            reduced = trim(q);
            dim -= 1;
        }
        HilbertSeries { nvars, numerator, reduced, dim }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Numerator over `(1-t)^nvars`.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Numerator in lowest terms, over `(1-t)^krull_dim`.
    pub fn reduced_numerator(&self) -> &[i64] {
        &self.reduced
    }

    /// Krull dimension of `S/I`.
    pub fn krull_dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Projective dimension and degree of `Proj(S/I)`; `None` for the
    /// irrelevant or unit ideal.
    pub fn dim_degree(&self) -> Option<(i64, i64)> {
        if self.dim == 0 {
            return None;
        }
        Some((self.dim as i64 - 1, self.reduced.iter().sum()))
    }

    /// `dim_k (S/I)_k`.
    pub fn hilbert_function(&self, k: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial(k - i as i64 + n - 1, n - 1))
            .sum()
    }

    /// Hilbert polynomial evaluated at `k` (valid for every integer `k`).
    pub fn hilbert_polynomial(&self, k: i64) -> i64 {
        if self.dim == 0 {
            return 0;
        }
        let m = self.dim as i64 - 1;
        self.reduced
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial_poly(k - i as i64 + m, m))
            .sum()
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `C(a, b)` with the convention `0` for `a < b` or `b < 0`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    binomial_poly(a, b)
}

/// `x (x-1) ... (x-m+1) / m!`, the binomial coefficient as a polynomial in `x`.
pub fn binomial_poly(x: i64, m: i64) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..m {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S/(gens)` over `(1-t)^n`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec())))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut out = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = out.clone();
            next.resize(out.len() + d, 0);
            for (i, c) in out.iter().enumerate() {
                next[i + d] -= c;
            }
            out = next;
        }
        return out;
    }
    // pivot x^e with x the variable occurring most often in generators that
    // are not pure powers; e stays below any pure power of x, so x^e ∉ I
    let pure = |g: &Monomial| g.divmask().count_ones() == 1;
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| !pure(g)).collect();
    let mut counts = [0usize; crate::poly::MAX_VARS];
    for g in &mixed {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..counts.len()).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty");
    let mut exps: Vec<u32> = mixed.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pivot = Monomial::one();
    pivot.set_exponent(var, e).expect("small exponent");

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let mut out = numerator_rec(minimalize(with_pivot));
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot))).collect();
    let rest = numerator_rec(minimalize(colon));
    poly_add(&mut out, &rest, e as usize);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn small_series() {
        let h = HilbertSeries::from_numerator(6, monomial_numerator(&[]));
        assert_eq!(h.numerator(), &[1]);
        assert_eq!(h.krull_dim(), 6);
        // twisted cubic leading terms under grevlex: x1^2, x1 x2, x2^2
        let lt = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        let h = HilbertSeries::from_numerator(4, monomial_numerator(&lt));
        assert_eq!(h.reduced_numerator(), &[1, 2]);
        assert_eq!(h.dim_degree(), Some((1, 3)));
        for k in 0..10 {
            assert_eq!(h.hilbert_function(k), 3 * k + 1);
            assert_eq!(h.hilbert_polynomial(k), 3 * k + 1);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial_poly(-1, 2), 1);
        assert_eq!(binomial_poly(-3, 1), -3);
    }
}
