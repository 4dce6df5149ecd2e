//! Geometric resolutions as anchored complexes of polynomial matrices,
//! with their validations: zero compositions, generic exactness, the
//! regular codimension sequence, singular loci, the graded almost-Lie
//! axioms, and isotropy Lie algebras at points.

use crate::error::Error;
use crate::groebner::Ideal;
use crate::linalg::{PolyMatrix, QMatrix, StructureConstants, SubspaceBasis};
use crate::poly::{Coeff, Ctx, Polynomial};
use crate::Result;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A finite complex `E_{-n} → … → E_{-1} → TM` of trivial bundles over
/// affine space, presented by polynomial matrices. `d⁽¹⁾` is the anchor
/// (a `dim × rk E_{-1}` matrix); `d⁽ⁱ⁾: E_{-i} → E_{-i+1}` has
/// `rk E_{-i+1}` rows and `rk E_{-i}` columns. Compositions are verified
/// to vanish at construction.
#[derive(Clone, Debug)]
pub struct AnchoredComplex {
    ctx: Ctx,
    anchor: PolyMatrix,
    differentials: Vec<PolyMatrix>,
    generic_ranks: Vec<usize>,
}

/// Validation summary for a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    /// Generic rank of d⁽ⁱ⁾ for i = 1..=length.
    pub generic_ranks: Vec<usize>,
    /// Ranks of E_{-1}, …, E_{-n}.
    pub bundle_ranks: Vec<usize>,
    pub base_dimension: usize,
}

/// The codimension sequence of the images over regular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCodims {
    /// Dimension of a regular leaf.
    pub r: usize,
    /// `codims[i]` = codimension of `im d⁽ⁱ⁺¹⁾` in `E_{-i}` for i = 0..=length.
    pub codims: Vec<i64>,
}

/// Per-degree verdict of the generic exactness criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactnessVerdict {
    Exact,
    FailsRankCondition { expected: usize, got: usize },
    CodimensionTooSmall { required: i64, got: i64 },
}

impl AnchoredComplex {
    pub fn new(ctx: &Ctx, anchor: PolyMatrix, differentials: Vec<PolyMatrix>) -> Result<Self> {
        if anchor.rows() != ctx.len() {
            return Err(Error::shape(format!(
                "anchor has {} rows, base has {} coordinates",
                anchor.rows(),
                ctx.len()
            )));
        }
        if !anchor.context().same_as(ctx) {
            return Err(Error::ContextMismatch("anchor".into()));
        }
        let mut prev = &anchor;
        for (idx, d) in differentials.iter().enumerate() {
            if !d.context().same_as(ctx) {
                return Err(Error::ContextMismatch(format!("d^({})", idx + 2)));
            }
            if d.rows() != prev.cols() {
                return Err(Error::shape(format!(
                    "d^({}) has {} rows but E_{{-{}}} has rank {}",
                    idx + 2,
                    d.rows(),
                    idx + 1,
                    prev.cols()
                )));
            }
            let comp = prev.mul_matrix(d)?;
            for r in 0..comp.rows() {
                for c in 0..comp.cols() {
                    if !comp.at(r, c).is_zero() {
                        return Err(Error::inconsistency(format!(
                            "d^({})∘d^({}) has nonzero entry ({}, {}): {}",
                            idx + 1,
                            idx + 2,
                            r,
                            c,
                            comp.at(r, c)
                        )));
                    }
                }
            }
            prev = d;
        }
        let mut generic_ranks = vec![anchor.generic_rank()];
        for d in &differentials {
            generic_ranks.push(d.generic_rank());
        }
        Ok(AnchoredComplex { ctx: ctx.clone(), anchor, differentials, generic_ranks })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    /// Number of nonzero terms E_{-1}, …, E_{-n}.
    pub fn length(&self) -> usize {
        1 + self.differentials.len()
    }

    pub fn base_dimension(&self) -> usize {
        self.ctx.len()
    }

    /// Rank of E_{-i}; E_0 = TM has rank `dim`.
    pub fn bundle_rank(&self, i: usize) -> usize {
        if i == 0 {
            self.ctx.len()
        } else {
            self.differential(i).cols()
        }
    }

    /// Matrix of d⁽ⁱ⁾ for 1 ≤ i ≤ length (d⁽¹⁾ is the anchor).
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        assert!(i >= 1 && i <= self.length(), "differential index out of range");
        if i == 1 {
            &self.anchor
        } else {
            &self.differentials[i - 2]
        }
    }

    pub fn anchor(&self) -> &PolyMatrix {
        &self.anchor
    }

    pub fn generic_rank_of(&self, i: usize) -> usize {
        if i >= 1 && i <= self.length() {
            self.generic_ranks[i - 1]
        } else {
            0
        }
    }

    /// Dimension of a regular leaf: the generic rank of the anchor.
    pub fn leaf_dimension(&self) -> usize {
        self.generic_ranks[0]
    }

    pub fn validate(&self) -> ComplexReport {
        ComplexReport {
            generic_ranks: self.generic_ranks.clone(),
            bundle_ranks: (1..=self.length()).map(|i| self.bundle_rank(i)).collect(),
            base_dimension: self.ctx.len(),
        }
    }

    /// Codimension sequence of the images over regular points, with the
    /// rank-deficit consistency check.
    pub fn regular_codims(&self) -> Result<RegularCodims> {
        let r = self.leaf_dimension() as i64;
        let mut codims = Vec::with_capacity(self.length() + 1);
        for i in 0..=self.length() {
            let formula = if i == 0 {
                self.ctx.len() as i64 - r
            } else {
                let mut acc = 0i64;
                for j in 1..i {
                    let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
                    acc += sign * self.bundle_rank(j) as i64;
                }
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                acc + sign * r
            };
            // deficit form: rk E_{-i} − rank d^{(i+1)}, with rank 0 past the end
            let next_rank = if i + 1 <= self.length() {
                self.generic_rank_of(i + 1) as i64
            } else {
                0
            };
            let deficit = self.bundle_rank(i) as i64 - next_rank;
            if formula != deficit {
                return Err(Error::inconsistency(format!(
                    "codimension formula gives {formula} at level {i} but rank deficit is {deficit}; the input complex is not generically exact"
                )));
            }
            codims.push(formula);
        }
        Ok(RegularCodims { r: r as usize, codims })
    }

    /// Minor ideal whose zero locus is the level-i singular set: the k×k
    /// minors of d⁽ⁱ⁺¹⁾ at its generic rank k. Level `length` has no
    /// next differential, so its singular set is empty.
    pub fn singular_locus(&self, level: usize) -> Result<Ideal> {
        if level > self.length() {
            return Err(Error::input(format!(
                "level {level} exceeds resolution length {}",
                self.length()
            )));
        }
        if level == self.length() {
            return Ok(Ideal::unit(&self.ctx));
        }
        let d = self.differential(level + 1);
        let k = self.generic_rank_of(level + 1);
        d.minors_ideal(k, None)
    }

    /// Buchsbaum–Eisenbud style criterion: rank additivity and minor-ideal
    /// codimension at every degree.
    pub fn exactness_check(&self) -> Vec<(usize, ExactnessVerdict)> {
        let mut out = Vec::new();
        for i in 1..=self.length() {
            let rank_i = self.generic_rank_of(i);
            let rank_next = if i < self.length() { self.generic_rank_of(i + 1) } else { 0 };
            let expected = self.bundle_rank(i);
            if rank_i + rank_next != expected {
                out.push((
                    i,
                    ExactnessVerdict::FailsRankCondition { expected, got: rank_i + rank_next },
                ));
                continue;
            }
            let minors = self
                .differential(i)
                .minors_ideal(rank_i, None)
                .expect("rank-sized minors always exist");
            let dim = minors.dimension();
            let codim = self.ctx.len() as i64 - dim;
            if codim < i as i64 {
                out.push((
                    i,
                    ExactnessVerdict::CodimensionTooSmall { required: i as i64, got: codim },
                ));
            } else {
                out.push((i, ExactnessVerdict::Exact));
            }
        }
        out
    }

    pub fn is_exact(&self) -> bool {
        self.exactness_check()
            .iter()
            .all(|(_, v)| matches!(v, ExactnessVerdict::Exact))
    }
}

/// Polynomial structure functions of the 2-ary bracket on frames:
/// `tables[(i,j)][k][l][s]` with
/// `ℓ₂(e_k^{(i)}, e_l^{(j)}) = Σ_s tables[(i,j)][k][l][s] · e_s^{(i+j−1)}`.
/// Component pair (1,1) is required; higher pairs are optional.
#[derive(Clone, Debug, Default)]
pub struct AlmostLieData {
    tables: BTreeMap<(usize, usize), Vec<Vec<Vec<Polynomial>>>>,
}

impl AlmostLieData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_table(
        &mut self,
        comps: (usize, usize),
        table: Vec<Vec<Vec<Polynomial>>>,
    ) -> &mut Self {
        self.tables.insert(comps, table);
        self
    }

    pub fn table(&self, comps: (usize, usize)) -> Option<&Vec<Vec<Vec<Polynomial>>>> {
        self.tables.get(&comps)
    }

    pub fn component_pairs(&self) -> Vec<(usize, usize)> {
        self.tables.keys().cloned().collect()
    }

    pub fn check_shapes(&self, complex: &AnchoredComplex) -> Result<()> {
        for (&(i, j), table) in &self.tables {
            let di = complex.bundle_rank(i);
            let dj = complex.bundle_rank(j);
            let target = i + j - 1;
            if target > complex.length() {
                return Err(Error::shape(format!(
                    "bracket target E_{{-{target}}} beyond resolution length"
                )));
            }
            let dt = complex.bundle_rank(target);
            if table.len() != di
                || table.iter().any(|row| row.len() != dj)
                || table.iter().any(|row| row.iter().any(|e| e.len() != dt))
            {
                return Err(Error::shape(format!(
                    "structure table ({i},{j}) must be {di}x{dj}x{dt}"
                )));
            }
        }
        Ok(())
    }

    /// Matrix of `ℓ₂(e_m^{(1)}, ·)` on the frame of `E_{-level}`; column
    /// `a` holds the coordinates of `ℓ₂(e_m, e_a)`.
    pub fn action_matrix(
        &self,
        complex: &AnchoredComplex,
        m: usize,
        level: usize,
    ) -> Result<PolyMatrix> {
        let table = self
            .table((1, level))
            .ok_or_else(|| Error::input(format!("no structure table for components (1,{level})")))?;
        let n = complex.bundle_rank(level);
        let mut mat = PolyMatrix::zero(complex.context(), n, n);
        for a in 0..n {
            let coords = &table[m][a];
            for (s, c) in coords.iter().enumerate() {
                *mat.at_mut(s, a) = c.clone();
            }
        }
        Ok(mat)
    }
}

/// Lie bracket of polynomial vector fields given by coefficient vectors.
pub fn vector_field_bracket(
    ctx: &Ctx,
    x: &[Polynomial],
    y: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let n = ctx.len();
    if x.len() != n || y.len() != n {
        return Err(Error::shape("vector field coefficient count mismatch"));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = Polynomial::zero(ctx);
        for j in 0..n {
            acc = acc.add(&x[j].mul(&y[i].differentiate(j)?));
            acc = acc.sub(&y[j].mul(&x[i].differentiate(j)?));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Outcome of the graded almost-Lie validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostLieReport {
    /// `ρ(ℓ₂(x,y)) = [ρx, ρy]` on all frame pairs of E_{-1}; failure names
    /// the offending pair.
    pub anchor_morphism: std::result::Result<(), (usize, usize)>,
    /// Derivation identity per level i ≥ 2 where a (1,i) table exists;
    /// failure names the frame element and matrix entry.
    pub derivation: Vec<(usize, std::result::Result<(), (usize, usize, usize)>)>,
    /// The Leibniz rule holds by construction for structure-function input
    /// and is reported, not checked.
    pub leibniz: &'static str,
}

impl AlmostLieReport {
    pub fn passed(&self) -> bool {
        self.anchor_morphism.is_ok() && self.derivation.iter().all(|(_, v)| v.is_ok())
    }
}

/// Verifies the graded almost-Lie axioms on frame sections.
pub fn validate_almost_lie(
    complex: &AnchoredComplex,
    data: &AlmostLieData,
) -> Result<AlmostLieReport> {
    data.check_shapes(complex)?;
    let ctx = complex.context();
    let n1 = complex.bundle_rank(1);
    let table = data
        .table((1, 1))
        .ok_or_else(|| Error::input("structure table (1,1) is required"))?;

    // (c) anchor morphism
    let mut anchor_morphism = Ok(());
    'outer: for k in 0..n1 {
        for l in 0..n1 {
            let xk = complex.anchor().column(k);
            let xl = complex.anchor().column(l);
            let lhs = {
                let mut acc = vec![Polynomial::zero(ctx); ctx.len()];
                for (s, c) in table[k][l].iter().enumerate() {
                    let col = complex.anchor().column(s);
                    for (a, e) in acc.iter_mut().zip(col.iter()) {
                        *a = a.add(&c.mul(e));
                    }
                }
                acc
            };
            let rhs = vector_field_bracket(ctx, &xk, &xl)?;
            if lhs != rhs {
                anchor_morphism = Err((k, l));
                break 'outer;
            }
        }
    }

    // (b) derivation identity: D_i·A⁽ⁱ⁾_m = A⁽ⁱ⁻¹⁾_m·D_i + X_m[D_i]
    let mut derivation = Vec::new();
    for level in 2..=complex.length() {
        if data.table((1, level)).is_none() {
            continue;
        }
        let mut verdict = Ok(());
        'frame: for m in 0..n1 {
            let xm = complex.anchor().column(m);
            let d_i = complex.differential(level);
            let a_i = data.action_matrix(complex, m, level)?;
            let a_prev = data.action_matrix(complex, m, level - 1)?;
            let lhs = d_i.mul_matrix(&a_i)?;
            let derived = d_i.apply_derivation(&xm)?;
            let rhs = matrix_add(&a_prev.mul_matrix(d_i)?, &derived)?;
            let diff = lhs.sub_matrix(&rhs)?;
            for r in 0..diff.rows() {
                for c in 0..diff.cols() {
                    if !diff.at(r, c).is_zero() {
                        verdict = Err((m, r, c));
                        break 'frame;
                    }
                }
            }
        }
        derivation.push((level, verdict));
    }

    Ok(AlmostLieReport {
        anchor_morphism,
        derivation,
        leibniz: "holds by construction for structure-function input",
    })
}

fn matrix_add(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    let neg = PolyMatrix::zero(a.context(), b.rows(), b.cols()).sub_matrix(b)?;
    a.sub_matrix(&neg)
}

/// The isotropy Lie algebra at a point: `ker ρ_x / im d⁽²⁾_x` with the
/// bracket induced by the evaluated structure functions.
#[derive(Clone, Debug)]
pub struct IsotropyAlgebra {
    pub point: Vec<Coeff>,
    pub kernel: SubspaceBasis,
    pub image: SubspaceBasis,
    /// Representatives completing the image basis to a kernel basis.
    pub representatives: Vec<Vec<Coeff>>,
    /// Bracket constants on the quotient, single graded component.
    pub quotient_constants: StructureConstants,
    /// Evaluated constants on E_{-1}|x, for bracketing kernel vectors.
    pub pointwise_constants: StructureConstants,
}

impl IsotropyAlgebra {
    pub fn quotient_dimension(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of a kernel vector in the quotient basis.
    pub fn project(&self, v: &[Coeff]) -> Result<Vec<Coeff>> {
        if !self.kernel.contains_vector(v) {
            return Err(Error::input("vector is not in the kernel of the anchor"));
        }
        let mut cols: Vec<Vec<Coeff>> = self.image.basis_vectors().to_vec();
        cols.extend(self.representatives.iter().cloned());
        let coords = solve_columns(&cols, v).ok_or_else(|| {
            Error::inconsistency("kernel vector not expressible in image+representative basis")
        })?;
        Ok(coords[self.image.dimension()..].to_vec())
    }

    /// Image of a subspace of the kernel inside the quotient.
    pub fn subspace_in_quotient(&self, v: &SubspaceBasis) -> Result<SubspaceBasis> {
        let q = self.quotient_dimension();
        let mut vecs = Vec::new();
        for b in v.basis_vectors() {
            vecs.push(self.project(b)?);
        }
        SubspaceBasis::from_spanning(q, &vecs)
    }
}

/// Solves `Σ cols[j]·x_j = target` over ℚ; `None` when inconsistent.
pub fn solve_columns(cols: &[Vec<Coeff>], target: &[Coeff]) -> Option<Vec<Coeff>> {
    let rows = target.len();
    let n = cols.len();
    let mut m = QMatrix::zero(rows, n + 1);
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            *m.at_mut(r, c) = v.clone();
        }
    }
    for (r, v) in target.iter().enumerate() {
        *m.at_mut(r, n) = v.clone();
    }
    let pivots = m.rref();
    if pivots.contains(&n) {
        return None; // inconsistent system
    }
    let mut x = vec![Coeff::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m.at(r, n).clone();
    }
    Some(x)
}

/// Computes the isotropy algebra of a validated complex at a rational
/// point, using the (1,1) structure functions of `data`.
pub fn isotropy_algebra(
    complex: &AnchoredComplex,
    data: &AlmostLieData,
    point: &[Coeff],
) -> Result<IsotropyAlgebra> {
    data.check_shapes(complex)?;
    let n1 = complex.bundle_rank(1);
    let anchor_x = complex.anchor().evaluate(point)?;
    let kernel_vecs = anchor_x.kernel();
    let kernel = SubspaceBasis::from_spanning(n1, &kernel_vecs)?;

    let image = if complex.length() >= 2 {
        let d2_x = complex.differential(2).evaluate(point)?;
        SubspaceBasis::from_spanning(n1, &d2_x.columns())?
    } else {
        SubspaceBasis::zero_subspace(n1)
    };
    if !kernel.contains(&image)? {
        return Err(Error::inconsistency(
            "im d⁽²⁾ at the point is not inside ker ρ",
        ));
    }

    let table = data
        .table((1, 1))
        .ok_or_else(|| Error::input("structure table (1,1) is required"))?;
    let mut eval = vec![vec![vec![Coeff::zero(); n1]; n1]; n1];
    for k in 0..n1 {
        for l in 0..n1 {
            for s in 0..n1 {
                eval[k][l][s] = table[k][l][s].evaluate(point)?;
            }
        }
    }
    let mut pointwise = StructureConstants::new(vec![n1]);
    pointwise.set_table((1, 1), eval)?;

    // the kernel must be a subalgebra and the image an ideal in it
    for u in kernel.basis_vectors() {
        for v in kernel.basis_vectors() {
            let b = pointwise.bracket((1, 1), u, v)?;
            if !kernel.contains_vector(&b) {
                return Err(Error::inconsistency(
                    "bracket of kernel vectors leaves the kernel",
                ));
            }
        }
        for w in image.basis_vectors() {
            let b = pointwise.bracket((1, 1), u, w)?;
            if !image.contains_vector(&b) {
                return Err(Error::input(
                    "bracket does not descend to the quotient: [ker, im] escapes im",
                ));
            }
        }
    }

    // representatives: kernel basis vectors independent from the image
    let mut representatives = Vec::new();
    let mut span = image.clone();
    for v in kernel.basis_vectors() {
        if !span.contains_vector(v) {
            representatives.push(v.clone());
            let mut vecs = span.basis_vectors().to_vec();
            vecs.push(v.clone());
            span = SubspaceBasis::from_spanning(n1, &vecs)?;
        }
    }

    // induced constants on the quotient
    let q = representatives.len();
    let mut qtable = vec![vec![vec![Coeff::zero(); q]; q]; q];
    {
        let mut cols: Vec<Vec<Coeff>> = image.basis_vectors().to_vec();
        cols.extend(representatives.iter().cloned());
        for a in 0..q {
            for b in 0..q {
                let br = pointwise.bracket((1, 1), &representatives[a], &representatives[b])?;
                let coords = solve_columns(&cols, &br).ok_or_else(|| {
                    Error::inconsistency("quotient bracket not expressible in basis")
                })?;
                for s in 0..q {
                    qtable[a][b][s] = coords[image.dimension() + s].clone();
                }
            }
        }
    }
    let mut quotient_constants = StructureConstants::new(vec![q]);
    quotient_constants.set_table((1, 1), qtable)?;

    Ok(IsotropyAlgebra {
        point: point.to_vec(),
        kernel,
        image,
        representatives,
        quotient_constants,
        pointwise_constants: pointwise,
    })
}

#[cfg(test)]
mod tests;
