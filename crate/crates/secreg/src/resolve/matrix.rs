use std::fmt;
use std::sync::Arc;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

/// Homogeneous map `⊕ S(-col_degrees[j]) → ⊕ S(-row_degrees[i])`, stored by
/// sparse columns. Entry `(i, j)` has degree `col_degrees[j] - row_degrees[i]`.
#[derive(Clone)]
pub struct GradedMatrix<F: Field> {
    ring: Arc<PolyRing<F>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    columns: Vec<Vec<(usize, Polynomial<F>)>>,
}

impl<F: Field> fmt::Debug for GradedMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMatrix {}x{}", self.nrows(), self.ncols())?;
        for (j, col) in self.columns.iter().enumerate() {
            for (i, p) in col {
                writeln!(f, "  [{i},{j}] {p}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> GradedMatrix<F> {
    /// Builds a matrix from sparse columns, checking degrees.
    pub fn new(
        ring: &Arc<PolyRing<F>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        columns: Vec<Vec<(usize, Polynomial<F>)>>,
    ) -> Result<Self> {
        if columns.len() != col_degrees.len() {
            return Err(Error::Precondition("one column per column degree".into()));
        }
        let mut cols = Vec::with_capacity(columns.len());
        for (j, mut col) in columns.into_iter().enumerate() {
            col.retain(|(_, p)| !p.is_zero());
            col.sort_by_key(|(i, _)| *i);
            for (i, p) in &col {
                if *i >= row_degrees.len() {
                    return Err(Error::Precondition("row index out of range".into()));
                }
                if !p.ring().compatible(ring) {
                    return Err(Error::RingMismatch);
                }
                let want = col_degrees[j] - row_degrees[*i];
                if !p.is_homogeneous() || p.weighted_degree() != Some(want) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i},{j}) should have degree {want}"
                    )));
                }
            }
            if col.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Precondition("duplicate entry in column".into()));
            }
            cols.push(col);
        }
        Ok(GradedMatrix { ring: ring.clone(), row_degrees, col_degrees, columns: cols })
    }

    /// Dense constructor; degrees of the source are inferred from the
    /// entries when `col_degrees` is `None`.
    pub fn from_rows(
        ring: &Arc<PolyRing<F>>,
        row_degrees: Vec<i64>,
        col_degrees: Option<Vec<i64>>,
        rows: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut columns: Vec<Vec<(usize, Polynomial<F>)>> = vec![Vec::new(); ncols];
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Precondition("ragged matrix".into()));
            }
            for (j, p) in row.into_iter().enumerate() {
                if !p.is_zero() {
                    columns[j].push((i, p));
                }
            }
        }
        let col_degrees = match col_degrees {
            Some(d) => d,
            None => columns
                .iter()
                .map(|c| {
                    c.first()
                        .map(|(i, p)| row_degrees[*i] + p.weighted_degree().unwrap_or(0))
                        .ok_or_else(|| Error::Precondition("zero column needs an explicit degree".into()))
                })
                .collect::<Result<_>>()?,
        };
        Self::new(ring, row_degrees, col_degrees, columns)
    }

    pub(crate) fn from_parts(
        ring: &Arc<PolyRing<F>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        columns: Vec<Vec<(usize, Polynomial<F>)>>,
    ) -> Self {
        GradedMatrix { ring: ring.clone(), row_degrees, col_degrees, columns }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn column(&self, j: usize) -> &[(usize, Polynomial<F>)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, Polynomial<F>)>] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial<F> {
        self.columns[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// True when some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().flatten().any(|(_, p)| p.is_constant())
    }

    /// `self · other`.
    pub fn compose(&self, other: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
        if self.ncols() != other.nrows() {
            return Err(Error::Precondition("matrix shapes do not compose".into()));
        }
        let mut cols = Vec::with_capacity(other.ncols());
        for col in &other.columns {
            let mut acc: Vec<Option<Polynomial<F>>> = vec![None; self.nrows()];
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    let prod = a.mul(b)?;
                    acc[*i] = Some(match acc[*i].take() {
                        None => prod,
                        Some(s) => s.add(&prod)?,
                    });
                }
            }
            cols.push(
                acc.into_iter()
                    .enumerate()
                    .filter_map(|(i, p)| p.filter(|p| !p.is_zero()).map(|p| (i, p)))
                    .collect(),
            );
        }
        Ok(GradedMatrix::from_parts(&self.ring, self.row_degrees.clone(), other.col_degrees.clone(), cols))
    }

    /// Transpose as a map of duals `⊕ S(row_degrees) → ⊕ S(col_degrees)`,
    /// i.e. rows and columns swapped with degrees negated.
    pub fn transpose(&self) -> GradedMatrix<F> {
        let mut cols: Vec<Vec<(usize, Polynomial<F>)>> = vec![Vec::new(); self.nrows()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, p) in col {
                cols[*i].push((j, p.clone()));
            }
        }
        GradedMatrix::from_parts(
            &self.ring,
            self.col_degrees.iter().map(|d| -d).collect(),
            self.row_degrees.iter().map(|d| -d).collect(),
            cols,
        )
    }
}
