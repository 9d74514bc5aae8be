use std::fmt::Write as _;

use serde_json::json;

use super::DeficiencyModules;
use crate::coeffs::Field;
use crate::error::Result;

/// `h^i(P^r, I_X(j))` for `i = 1, 2, 3` over a window of twists `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub lo: i64,
    pub hi: i64,
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
    pub h3: Vec<i64>,
    pub e: Option<i64>,
    /// Index of normality; `None` stands for `-∞`.
    pub normality: Option<i64>,
}

impl CohomologyTable {
    pub fn from_modules<F: Field>(def: &DeficiencyModules<F>, lo: i64, hi: i64) -> Result<Self> {
        let row = |i: usize| -> Result<Vec<i64>> { (lo..=hi).map(|j| def.deficiency_dim(i, -j)).collect() };
        let h3 = if def.hilbert_series().krull_dim() == 3 {
            (lo..=hi).map(|j| def.k3_by_euler(-j)).collect::<Result<_>>()?
        } else {
            row(3)?
        };
        Ok(CohomologyTable { lo, hi, h1: row(1)?, h2: row(2)?, h3, e: None, normality: None })
    }

    /// `h^i(I_X(j))`, zero outside `i ∈ {1,2,3}`; panics outside the window.
    pub fn get(&self, i: usize, j: i64) -> i64 {
        assert!(self.lo <= j && j <= self.hi, "twist {j} outside the window");
        let k = (j - self.lo) as usize;
        match i {
            1 => self.h1[k],
            2 => self.h2[k],
            3 => self.h3[k],
            _ => 0,
        }
    }

    pub fn twists(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn to_text(&self) -> String {
        let width = [&self.h1, &self.h2, &self.h3]
            .iter()
            .flat_map(|r| r.iter())
            .map(|v| v.to_string().len())
            .chain(self.twists().map(|j| j.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut s = String::new();
        let _ = write!(s, "{:>11} |", "j");
        for j in self.twists() {
            let _ = write!(s, " {j:>width$}");
        }
        s.push('\n');
        for (i, row) in [(1, &self.h1), (2, &self.h2), (3, &self.h3)] {
            let _ = write!(s, "{:>11} |", format!("h^{i}(I(j))"));
            for v in row {
                let _ = write!(s, " {v:>width$}");
            }
            s.push('\n');
        }
        if let Some(e) = self.e {
            let _ = writeln!(s, "e = {e}");
        }
        let _ = writeln!(s, "N = {}", self.normality.map_or("-inf".to_string(), |n| n.to_string()));
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "window": [self.lo, self.hi],
            "h1": self.h1,
            "h2": self.h2,
            "h3": self.h3,
            "e": self.e,
            "N": match self.normality { Some(n) => json!(n), None => json!("-inf") },
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["j", "h1", "h2", "h3"]).expect("in-memory");
        for (k, j) in self.twists().enumerate() {
            w.write_record([j, self.h1[k], self.h2[k], self.h3[k]].map(|v| v.to_string()))
                .expect("in-memory");
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
    }
}
