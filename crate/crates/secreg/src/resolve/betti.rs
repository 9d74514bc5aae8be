use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::gb::HilbertSeries;

/// Graded Betti numbers of a cyclic module `S/I`, indexed as in the usual
/// table: column `i`, row `j`, entry `β_{i,j} = dim Tor_i(k, S/I)_{i+j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    // (i, j) -> β_{i,j}
    entries: BTreeMap<(usize, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    pd: usize,
    reg_module: i64,
    reg_subscheme: i64,
    depth: usize,
    rows: Vec<BettiRow>,
}

#[derive(Serialize, Deserialize)]
struct BettiRow {
    j: i64,
    beta: Vec<usize>,
}

impl BettiTable {
    /// From internal-degree data: `graded[i]` lists the twists of `F_i`.
    pub fn from_twists(nvars: usize, graded: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, twists) in graded.iter().enumerate() {
            for &d in twists {
                *entries.entry((i, d - i as i64)).or_insert(0) += 1;
            }
        }
        BettiTable { nvars, entries }
    }

    /// From `(i, j, β_{i,j})` triples; zero entries are ignored.
    pub fn from_entries(nvars: usize, triples: impl IntoIterator<Item = (usize, i64, usize)>) -> Self {
        let mut entries = BTreeMap::new();
        for (i, j, b) in triples {
            if b > 0 {
                *entries.entry((i, j)).or_insert(0) += b;
            }
        }
        BettiTable { nvars, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `β_{i,j}`, the entry in column `i`, row `j`.
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `dim Tor_i(k, S/I)_d`.
    pub fn graded(&self, i: usize, d: i64) -> usize {
        self.get(i, d - i as i64)
    }

    /// Row `j` for `i = 1..=len`.
    pub fn row(&self, j: i64, len: usize) -> Vec<usize> {
        (1..=len).map(|i| self.get(i, j)).collect()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `reg(S/I)`.
    pub fn reg(&self) -> i64 {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// `reg(I) = reg(S/I) + 1`, the regularity of the subscheme cut out by a
    /// saturated `I`.
    pub fn reg_subscheme(&self) -> i64 {
        self.reg() + 1
    }

    /// Auslander–Buchsbaum: `depth S/I = n - pd`.
    pub fn depth(&self) -> usize {
        self.nvars.saturating_sub(self.pd())
    }

    /// Largest `p ≤ pd` with `β_{i,j} = 0` for all `1 ≤ i ≤ p`, `j ≠ 1`.
    pub fn n2p_index(&self) -> usize {
        let pd = self.pd();
        let mut p = 0;
        while p < pd && self.entries.keys().all(|&(i, j)| i != p + 1 || j == 1) {
            p += 1;
        }
        p
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, b)| b).sum()
    }

    /// `Σ_i (-1)^i Σ_d β_{i,d} t^d`, the Hilbert numerator over `(1-t)^n`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut out: Vec<i64> = Vec::new();
        for (&(i, j), &b) in &self.entries {
            let d = (i as i64 + j) as usize;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[d] += sign * b as i64;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Whether the alternating sum of twists reproduces `h`.
    pub fn euler_check(&self, h: &HilbertSeries) -> bool {
        h.nvars() == self.nvars && self.hilbert_numerator() == h.numerator()
    }

    fn last_column(&self) -> usize {
        self.pd().max(1)
    }

    /// Rows `j = 1..=reg`, columns `i = 1..=pd`.
    pub fn to_text(&self) -> String {
        let cols = self.last_column();
        let rows: Vec<i64> = (1..=self.reg().max(1)).collect();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1)
            .max(cols.to_string().len());
        let mut s = String::new();
        let _ = write!(s, "{:>6} |", "i");
        for i in 1..=cols {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = writeln!(s, "{}", "-".repeat(8 + cols * (width + 1)));
        for j in rows {
            let _ = write!(s, "{:>6} |", format!("j={j}"));
            for b in self.row(j, cols) {
                let _ = write!(s, " {b:>width$}");
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cols = self.last_column();
        let j = BettiJson {
            pd: self.pd(),
            reg_module: self.reg(),
            reg_subscheme: self.reg_subscheme(),
            depth: self.depth(),
            rows: (1..=self.reg().max(1)).map(|j| BettiRow { j, beta: self.row(j, cols) }).collect(),
        };
        serde_json::to_value(j).expect("plain data")
    }

    /// `i,j,beta` records for every nonzero entry with `i ≥ 1`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["i", "j", "beta"]).expect("in-memory");
        for (i, j, b) in self.nonzero().filter(|t| t.0 > 0) {
            w.write_record([i.to_string(), j.to_string(), b.to_string()]).expect("in-memory");
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> BettiTable {
        BettiTable::from_entries(4, [(0, 0, 1), (1, 1, 3), (2, 1, 2)])
    }

    #[test]
    fn invariants() {
        let b = cubic();
        assert_eq!(b.pd(), 2);
        assert_eq!(b.depth(), 2);
        assert_eq!(b.reg(), 1);
        assert_eq!(b.reg_subscheme(), 2);
        assert_eq!(b.n2p_index(), 2);
        assert_eq!(b.hilbert_numerator(), vec![1, 0, -3, 2]);
        assert_eq!(b.row(1, 3), vec![3, 2, 0]);
    }

    #[test]
    fn renderers() {
        let b = cubic();
        let text = b.to_text();
        assert!(text.contains("j=1 | 3 2"), "{text}");
        let json = b.to_json();
        assert_eq!(json["rows"][0]["beta"], serde_json::json!([3, 2]));
        assert_eq!(json["reg_subscheme"], 2);
        assert_eq!(b.to_csv(), "i,j,beta\n1,1,3\n2,1,2\n");
    }

    #[test]
    fn euler_mismatch() {
        let h = HilbertSeries::from_numerator(4, vec![1, 0, -3, 2]);
        assert!(cubic().euler_check(&h));
        let bad = BettiTable::from_entries(4, [(0, 0, 1), (1, 1, 3), (2, 1, 1)]);
        assert!(!bad.euler_check(&h));
    }
}
