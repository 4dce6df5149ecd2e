//! Matrices with polynomial entries: fraction-free ranks, determinants,
//! minor ideals, and kernels over the fraction field.

use super::k_subsets;
use super::qmat::QMatrix;
use crate::error::Error;
use crate::groebner::Ideal;
use crate::poly::{Coeff, Ctx, Polynomial, RationalFunction};
use crate::Result;


/// A rectangular matrix of polynomials over a shared context.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>, // row major
    ctx: Ctx,
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl PolyMatrix {
    pub fn new(ctx: &Ctx, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !e.context().same_as(ctx) {
                return Err(Error::ContextMismatch("matrix entry".into()));
            }
        }
        Ok(PolyMatrix { rows, cols, entries, ctx: ctx.clone() })
    }

    pub fn zero(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(ctx); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Polynomial::one(ctx);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Polynomial {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn from_columns(ctx: &Ctx, rows: usize, cols: &[Vec<Polynomial>]) -> Result<Self> {
        let mut m = Self::zero(ctx, rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::shape("column length mismatch"));
            }
            for (r, e) in col.iter().enumerate() {
                *m.at_mut(r, c) = e.clone();
            }
        }
        Ok(m)
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &r in row_idx {
            for &c in col_idx {
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix {
            rows: row_idx.len(),
            cols: col_idx.len(),
            entries,
            ctx: self.ctx.clone(),
        }
    }

    pub fn mul_matrix(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = PolyMatrix::zero(&self.ctx, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ctx);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                *m.at_mut(r, c) = acc;
            }
        }
        Ok(m)
    }

    /// Determinant of a square matrix: cofactor expansion for small sizes,
    /// fraction-free Bareiss elimination above that.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::shape("determinant of a non-square matrix"));
        }
        let n = self.rows;
        match n {
            0 => return Ok(Polynomial::one(&self.ctx)),
            1 => return Ok(self.at(0, 0).clone()),
            2 => {
                return Ok(self
                    .at(0, 0)
                    .mul(self.at(1, 1))
                    .sub(&self.at(0, 1).mul(self.at(1, 0))))
            }
            3 => {
                let m = |r: usize, c: usize| self.at(r, c);
                let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
                let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
                let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
                return Ok(t1.sub(&t2).add(&t3));
            }
            _ => {}
        }
        // Bareiss
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = Polynomial::one(&self.ctx);
        for k in 0..(n - 1) {
            if a[k][k].is_zero() {
                let swap = ((k + 1)..n).find(|&r| !a[r][k].is_zero());
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(Polynomial::zero(&self.ctx)),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                a[i][k] = Polynomial::zero(&self.ctx);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign { det.neg() } else { det })
    }

    /// Rank over the fraction field, by fraction-free elimination with
    /// symbolic pivots (any nonzero polynomial can serve as a pivot).
    pub fn generic_rank(&self) -> usize {
        let mut a: Vec<Vec<Polynomial>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        let mut prev = Polynomial::one(&self.ctx);
        for col in 0..self.cols {
            let pivot = (row..self.rows).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap(row, p);
            for i in (row + 1)..self.rows {
                for j in (col + 1)..self.cols {
                    let num = a[i][j].mul(&a[row][col]).sub(&a[i][col].mul(&a[row][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i][col] = Polynomial::zero(&self.ctx);
            }
            prev = a[row][col].clone();
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Ideal generated by all k×k minors of the selected columns (all
    /// columns when `columns` is `None`).
    pub fn minors_ideal(&self, k: usize, columns: Option<&[usize]>) -> Result<Ideal> {
        let all: Vec<usize> = (0..self.cols).collect();
        let cols = columns.unwrap_or(&all);
        if k > self.rows || k > cols.len() {
            return Err(Error::input(format!(
                "{k}x{k} minors of a {}x{} selection",
                self.rows,
                cols.len()
            )));
        }
        if k == 0 {
            return Ideal::new(&self.ctx, vec![Polynomial::one(&self.ctx)]);
        }
        let mut gens = Vec::new();
        for rows in k_subsets(self.rows, k) {
            for csub in k_subsets(cols.len(), k) {
                let chosen: Vec<usize> = csub.iter().map(|&i| cols[i]).collect();
                let d = self.submatrix(&rows, &chosen).determinant()?;
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    /// First column subset of size `k = generic_rank` (lexicographic on
    /// index sets) whose k×k minors are not all zero.
    pub fn admissible_columns(&self) -> Option<(usize, Vec<usize>)> {
        let k = self.generic_rank();
        if k == 0 {
            return None;
        }
        for cand in k_subsets(self.cols, k) {
            if self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &cand).generic_rank() == k {
                return Some((k, cand));
            }
        }
        None
    }

    /// Basis of the kernel over the fraction field. Entries are cleared to
    /// primitive polynomial vectors; `M · basis = 0` exactly.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Polynomial>>> {
        // Gauss over the rational-function field
        let mut a: Vec<Vec<RationalFunction>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| RationalFunction::from_polynomial(self.at(r, c).clone()))
                    .collect()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = RationalFunction::from_polynomial(Polynomial::one(&self.ctx))
                .div(&a[row][col].clone())?;
            for j in 0..self.cols {
                a[row][j] = a[row][j].mul(&inv)?;
            }
            for r in 0..self.rows {
                if r != row && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..self.cols {
                        let delta = a[row][j].mul(&factor)?;
                        a[r][j] = a[r][j].sub(&delta)?;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free_cols {
            let mut vec_rf =
                vec![RationalFunction::zero(&self.ctx); self.cols];
            vec_rf[f] = RationalFunction::from_polynomial(Polynomial::one(&self.ctx));
            for &(r, c) in &pivots {
                vec_rf[c] = a[r][f].neg();
            }
            // clear denominators
            let mut common = Polynomial::one(&self.ctx);
            for entry in &vec_rf {
                common = crate::poly::poly_lcm(&common, entry.denominator());
            }
            let mut cleared: Vec<Polynomial> = Vec::with_capacity(self.cols);
            for entry in &vec_rf {
                let scale = common
                    .div_exact(entry.denominator())
                    .expect("lcm divisible by denominator");
                cleared.push(entry.numerator().mul(&scale));
            }
            // primitive normalization across the vector
            let mut content = Polynomial::zero(&self.ctx);
            for e in &cleared {
                if !e.is_zero() {
                    content = crate::poly::poly_gcd(&content, e);
                }
            }
            if !content.is_zero() && !content.is_one() {
                cleared = cleared
                    .iter()
                    .map(|e| e.div_exact(&content).expect("content divides"))
                    .collect();
            }
            basis.push(cleared);
        }
        Ok(basis)
    }

    /// Evaluates every entry at a rational point.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<QMatrix> {
        let mut vals = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            vals.push(e.evaluate(point)?);
        }
        QMatrix::new(self.rows, self.cols, vals)
    }

    /// Substitutes base variables by polynomials of another context
    /// (typically a curve t ↦ x(t)).
    pub fn compose(&self, images: &[Polynomial]) -> Result<PolyMatrix> {
        let target = images
            .first()
            .map(|p| p.context().clone())
            .ok_or_else(|| Error::shape("empty substitution"))?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.substitute_poly(images)?);
        }
        PolyMatrix::new(&target, self.rows, self.cols, entries)
    }

    /// Applies a derivation with the given coefficient fields entrywise:
    /// `X[m]_{rc} = Σ_v coeffs[v]·∂m_{rc}/∂x_v`.
    pub fn apply_derivation(&self, coeffs: &[Polynomial]) -> Result<PolyMatrix> {
        let mut out = PolyMatrix::zero(&self.ctx, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let mut acc = Polynomial::zero(&self.ctx);
                for (v, coeff) in coeffs.iter().enumerate() {
                    acc = acc.add(&coeff.mul(&self.at(r, c).differentiate(v)?));
                }
                *out.at_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    pub fn sub_matrix(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape("matrix subtraction extent mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        PolyMatrix::new(&self.ctx, self.rows, self.cols, entries)
    }

}
