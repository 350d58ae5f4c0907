//! Dense exact matrices and the elimination kernel everything else sits on.
//!
//! Pivoting is deterministic (first nonzero entry in column order), so rank,
//! kernels, and particular solutions are reproducible bit for bit — several
//! golden tests depend on that.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>, // row-major
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Integer-literal constructor, mostly for tests.
    pub fn from_i64(field: FieldSpec, rows: Vec<Vec<i64>>) -> Self {
        let data = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| field.from_integer(x)).collect())
            .collect();
        Self::from_rows(field, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.from_integer(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(self.at(i, j), c)
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if f.is_zero(a) || f.is_zero(&v[j]) {
                    continue;
                }
                out[i] = f.add(&out[i], &f.mul(a, &v[j]));
            }
        }
        Ok(out)
    }

    /// Stack side by side: [self | other].
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        Ok(Self::from_fn(
            self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.at(i, j).clone()
                } else {
                    other.at(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Stack on top of each other: [self; other].
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        Ok(Self::from_fn(
            self.field,
            self.rows + other.rows,
            self.cols,
            |i, j| {
                if i < self.rows {
                    self.at(i, j).clone()
                } else {
                    other.at(i - self.rows, j).clone()
                }
            },
        ))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // First row at or below r with a nonzero entry in column c.
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.at(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.at(r, c)).expect("pivot nonzero");
            if !f.is_one(&f.mul(m.at(r, c), &inv)) {
                unreachable!();
            }
            for j in c..m.cols {
                let v = f.mul(m.at(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.at(i, c)) {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in c..m.cols {
                    if f.is_zero(m.at(r, j)) {
                        continue;
                    }
                    let v = f.sub(m.at(i, j), &f.mul(&factor, m.at(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as column vectors. Each returned vector v
    /// satisfies self * v = 0; the count is cols - rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = f.neg(r.at(*row, free));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution x of self * x = b, or None when b is outside
    /// the column space. Errors on length mismatch.
    pub fn solve_right(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_right: {} rows vs rhs length {}",
                self.rows,
                b.len()
            )));
        }
        let f = self.field;
        let rhs = ExactMatrix {
            field: f,
            rows: self.rows,
            cols: 1,
            entries: b.to_vec(),
        };
        let aug = self.hstack(&rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the rhs column: inconsistent
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves self * X = B columnwise; None when any column is inconsistent.
    pub fn solve_matrix(&self, b: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch("solve_matrix".into()));
        }
        let f = self.field;
        let aug = self.hstack(b)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = ExactMatrix::zeros(f, self.cols, b.cols);
        for (row, &col) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(col, j, r.at(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Indices of a maximal independent subset of the columns (the pivot
    /// columns of the original matrix).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = ExactMatrix::identity(self.field, self.rows);
        match self.solve_matrix(&id) {
            Ok(Some(x)) if x.rank() == self.rows => Some(x),
            _ => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ExactMatrix {}x{} over {}",
            self.rows, self.cols, self.field
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
