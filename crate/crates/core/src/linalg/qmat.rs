//! Matrices and subspaces over the exact rationals.

use crate::error::Error;
use crate::poly::Coeff;
use crate::Result;
use num_traits::{One, Zero};

/// A dense rational matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Coeff>,
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Coeff>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape("entry count mismatch"));
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Coeff::zero(); rows * cols] }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Coeff>]) -> Result<Self> {
        let mut m = QMatrix::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::shape("column length mismatch"));
            }
            for (r, v) in col.iter().enumerate() {
                *m.at_mut(r, c) = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Coeff {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Coeff {
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<Coeff> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Coeff>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Result<Vec<Coeff>> {
        if v.len() != self.cols {
            return Err(Error::shape("vector length mismatch"));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Coeff::zero();
                for c in 0..self.cols {
                    acc += self.at(r, c) * &v[c];
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                let tmp = self.at(p, c).clone();
                *self.at_mut(p, c) = self.at(row, c).clone();
                *self.at_mut(row, c) = tmp;
            }
            let inv = self.at(row, col).clone().recip();
            for c in 0..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for c in 0..self.cols {
                        let v = self.at(r, c) - &(self.at(row, c) * &f);
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Kernel basis (columns), via back substitution from the rref.
    pub fn kernel(&self) -> Vec<Vec<Coeff>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::new();
        for &f in &free {
            let mut v = vec![Coeff::zero(); self.cols];
            v[f] = Coeff::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(r, f).clone();
            }
            out.push(v);
        }
        out
    }
}

/// A subspace of ℚⁿ in canonical reduced column echelon form; equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    /// Basis columns, each of length `ambient`.
    columns: Vec<Vec<Coeff>>,
}

impl SubspaceBasis {
    /// Canonicalizes the span of `columns` (dependent inputs are fine).
    pub fn from_spanning(ambient: usize, columns: &[Vec<Coeff>]) -> Result<Self> {
        for c in columns {
            if c.len() != ambient {
                return Err(Error::shape("spanning vector length mismatch"));
            }
        }
        // row-reduce the transpose: rows are the spanning vectors
        let mut m = QMatrix::zero(columns.len(), ambient);
        for (r, col) in columns.iter().enumerate() {
            for (c, v) in col.iter().enumerate() {
                *m.at_mut(r, c) = v.clone();
            }
        }
        let pivots = m.rref();
        let basis: Vec<Vec<Coeff>> = (0..pivots.len())
            .map(|r| (0..ambient).map(|c| m.at(r, c).clone()).collect())
            .collect();
        Ok(SubspaceBasis { ambient, columns: basis })
    }

    pub fn zero_subspace(ambient: usize) -> Self {
        SubspaceBasis { ambient, columns: Vec::new() }
    }

    pub fn full_space(ambient: usize) -> Self {
        let mut columns = Vec::new();
        for i in 0..ambient {
            let mut v = vec![Coeff::zero(); ambient];
            v[i] = Coeff::one();
            columns.push(v);
        }
        SubspaceBasis { ambient, columns }
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn basis_vectors(&self) -> &[Vec<Coeff>] {
        &self.columns
    }

    fn check_ambient(&self, other: &SubspaceBasis) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::shape(format!(
                "ambient dimensions {} vs {}",
                self.ambient, other.ambient
            )))
        }
    }

    pub fn contains_vector(&self, v: &[Coeff]) -> bool {
        if v.iter().all(|c| c.is_zero()) {
            return true;
        }
        let mut all = self.columns.clone();
        all.push(v.to_vec());
        let sum = SubspaceBasis::from_spanning(self.ambient, &all).unwrap();
        sum.dimension() == self.dimension()
    }

    pub fn contains(&self, other: &SubspaceBasis) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.columns.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &SubspaceBasis) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.columns == other.columns)
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_ambient(other)?;
        let mut all = self.columns.clone();
        all.extend(other.columns.iter().cloned());
        SubspaceBasis::from_spanning(self.ambient, &all)
    }

    /// Intersection via the kernel of the stacked matrix [A | −B].
    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_ambient(other)?;
        let (da, db) = (self.dimension(), other.dimension());
        if da == 0 || db == 0 {
            return Ok(SubspaceBasis::zero_subspace(self.ambient));
        }
        let mut m = QMatrix::zero(self.ambient, da + db);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                *m.at_mut(r, c) = v.clone();
            }
        }
        for (c, col) in other.columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                *m.at_mut(r, da + c) = -v.clone();
            }
        }
        let mut vectors = Vec::new();
        for k in m.kernel() {
            // A·x part gives a vector in the intersection
            let mut v = vec![Coeff::zero(); self.ambient];
            for (c, col) in self.columns.iter().enumerate() {
                for (r, entry) in col.iter().enumerate() {
                    v[r] += entry * &k[c];
                }
            }
            vectors.push(v);
        }
        SubspaceBasis::from_spanning(self.ambient, &vectors)
    }
}
