//! Closed-form values for surfaces of maximal sectional regularity.
//!
//! Everything here is a pure function of `(d, r, j, i)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gb::binomial;
use crate::resolve::BettiTable;

/// Betti table of a type I surface of degree `d` in `P^5`.
pub fn type1_betti_formula(d: i64) -> Result<BettiTable> {
    if d < 5 {
        return Err(Error::Precondition(format!("type I surfaces need d ≥ 5, got {d}")));
    }
    let strand = [
        binomial(d - 1, 2),
        2 * (d - 1) * (d - 3),
        3 * (d * d - 5 * d + 5),
        2 * (d - 2) * (d - 4),
        binomial(d - 3, 2),
    ];
    let mut entries = vec![(0, 0, 1), (1, 1, 3), (2, 1, 2)];
    for (i, b) in strand.into_iter().enumerate() {
        entries.push((i + 1, d - 3, b as usize));
    }
    Ok(BettiTable::from_entries(6, entries))
}

/// Cohomology of a type I surface at twist `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Type1Cohomology {
    /// `h^1(P^5, I_X(j))`
    pub h1: i64,
    /// `h^0(X, O_X(j))`
    pub h0_ox: i64,
    /// `h^1(X, O_X(j))`
    pub h1_ox: i64,
    /// `h^2(X, O_X(j))`
    pub h2_ox: i64,
}

pub fn type1_coh_formula(d: i64, j: i64) -> Type1Cohomology {
    let h1 = if 1 <= j && j <= d - 4 { binomial(j + 1, 2) * (d - j - 3) } else { 0 };
    let h0_ox = if j >= 0 { (j + 1) * (d * j + 2) / 2 } else { 0 };
    let k = -j;
    let h2_ox = if k >= 2 { (k - 1) * (d * k - 2) / 2 } else { 0 };
    Type1Cohomology { h1, h0_ox, h1_ox: 0, h2_ox }
}

/// What is known about one entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Exact(i64),
    AtMost(i64),
}

impl Bound {
    pub fn admits(self, v: i64) -> bool {
        match self {
            Bound::Exact(x) => v == x,
            Bound::AtMost(x) => v <= x,
        }
    }
}

/// `C(d-r+2, 2)`, the smallest possible `e(X)` for type II.
pub fn minimal_e(d: i64, r: i64) -> i64 {
    binomial(d - r + 2, 2)
}

/// `h^2(P^r, I_X(j))` for a type II surface with invariant `e`.
///
/// Between `j = 2` and `j = d-r-1` only an upper bound is known, obtained by
/// iterating `h^2(j) ≤ max{0, h^2(j-1) - 1}` from `j = 1`; when `e` is
/// minimal the whole column is `max{0, C(d-r+2-j, 2)}` for `j ≥ 0`.
pub fn type2_expected_h2(d: i64, r: i64, e: i64, j: i64) -> Bound {
    let k = d - r;
    if j <= 0 {
        return Bound::Exact(e);
    }
    if e == minimal_e(d, r) {
        return Bound::Exact(binomial(k + 2 - j, 2).max(0));
    }
    if j >= k + 1 {
        Bound::Exact(0)
    } else if j == k {
        Bound::Exact(1)
    } else if j == 1 {
        Bound::Exact(e + r - d - 1)
    } else {
        Bound::AtMost((e + r - d - 1 - (j - 1)).max(0))
    }
}

/// `h^3(P^r, I_X(j))` for a type II surface.
pub fn type2_h3(d: i64, j: i64) -> i64 {
    if j <= -2 {
        (j + 1) * (d * j + 2) / 2
    } else {
        0
    }
}

/// `h^0(X, O_X(j))` for `j ≥ 0` of a type II surface, given `h^2(I_X(j))`.
pub fn type2_h0(d: i64, e: i64, h2: i64, j: i64) -> i64 {
    d * binomial(j + 1, 2) + j + 1 + h2 - e
}

/// Lower bound `C(r,2) - d - 1` on the number of quadrics through a type II
/// surface; it is attained iff `τ = (2,3)`.
pub fn type2_quadric_bound(d: i64, r: i64) -> i64 {
    binomial(r, 2) - d - 1
}

/// Admissible values of `τ = (depth X, depth Y)`.
pub fn type2_tau_range(d: i64, r: i64) -> Vec<(usize, usize)> {
    if d <= 2 * r - 4 {
        vec![(2, 3)]
    } else if d <= 3 * r - 7 {
        vec![(1, 1), (2, 2), (2, 3)]
    } else {
        vec![(1, 1), (2, 2)]
    }
}

/// Extremal secant lines of either type meet `X` in a scheme of length
/// `d - r + 3`.
pub fn extremal_secant_length(d: i64, r: i64) -> i64 {
    d - r + 3
}

/// One row of the classification of surfaces of degree `r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    pub case: u8,
    pub sreg: i64,
    pub depth: usize,
    pub sigma: i64,
    pub e: i64,
    pub h1_1: i64,
    pub h1_2: Bound,
}

const fn row(case: u8, sreg: i64, depth: usize, sigma: i64, e: i64, h1_1: i64, h1_2: Bound) -> CaseRow {
    CaseRow { case, sreg, depth, sigma, e, h1_1, h1_2 }
}

/// The nine cases that occur. Two further numerical patterns are impossible
/// and deliberately missing.
pub const CASE_TABLE: [CaseRow; 9] = [
    row(1, 2, 3, 2, 0, 0, Bound::Exact(0)),
    row(2, 3, 2, 1, 0, 0, Bound::Exact(0)),
    row(3, 3, 2, 1, 1, 0, Bound::Exact(0)),
    row(4, 3, 1, 1, 0, 1, Bound::Exact(0)),
    row(5, 3, 2, 0, 2, 0, Bound::Exact(0)),
    row(6, 3, 1, 0, 1, 1, Bound::AtMost(1)),
    row(7, 3, 1, 0, 0, 2, Bound::AtMost(2)),
    row(8, 4, 2, 0, 3, 0, Bound::Exact(0)),
    row(9, 4, 1, 0, 0, 2, Bound::Exact(3)),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type1_tables() {
        let t = type1_betti_formula(8).unwrap();
        assert_eq!(t.row(5, 5), vec![21, 70, 87, 48, 10]);
        assert_eq!(t.row(1, 5), vec![3, 2, 0, 0, 0]);
        assert_eq!(type1_betti_formula(9).unwrap().row(6, 5), vec![28, 96, 123, 70, 15]);
        assert_eq!(type1_betti_formula(10).unwrap().row(7, 5), vec![36, 126, 165, 96, 21]);
        assert_eq!(type1_betti_formula(5).unwrap().row(2, 5), vec![6, 16, 15, 6, 1]);
        assert!(type1_betti_formula(4).is_err());
    }

    #[test]
    fn type1_cohomology() {
        assert_eq!(type1_coh_formula(8, 2).h1, 9);
        assert_eq!(type1_coh_formula(8, 0).h0_ox, 1);
        assert_eq!(type1_coh_formula(8, -2).h2_ox, 7);
        assert_eq!(type1_coh_formula(8, 5).h1, 0);
        assert_eq!(type1_coh_formula(8, -1).h2_ox, 0);
    }

    #[test]
    fn type2_columns() {
        assert_eq!(type2_expected_h2(8, 6, 6, 1), Bound::Exact(3));
        assert_eq!(type2_expected_h2(8, 6, 6, 2), Bound::Exact(1));
        assert_eq!(type2_expected_h2(8, 6, 6, 5), Bound::Exact(0));
        assert_eq!(type2_expected_h2(8, 6, 6, -4), Bound::Exact(6));
        assert_eq!(type2_expected_h2(11, 6, 20, 3), Bound::AtMost(12));
        assert_eq!(type2_h3(8, -2), 7);
        assert_eq!(type2_h3(8, -1), 0);
        assert_eq!(type2_quadric_bound(8, 6), 6);
        assert_eq!(type2_tau_range(8, 6), vec![(2, 3)]);
        assert_eq!(type2_tau_range(12, 6), vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn minimal_e_column_agrees_with_the_general_rule() {
        for r in 5..9 {
            for d in r + 1..3 * r {
                let e = minimal_e(d, r);
                assert_eq!(type2_expected_h2(d, r, e, 1), Bound::Exact(e + r - d - 1));
                assert_eq!(type2_expected_h2(d, r, e, d - r), Bound::Exact(1));
                assert_eq!(type2_expected_h2(d, r, e, d - r + 1), Bound::Exact(0));
            }
        }
    }
}
