//! Structure constants of the degree +1 graded bracket and closure tests
//! for subspaces under it.

use super::qmat::SubspaceBasis;
use crate::error::Error;
use crate::poly::Coeff;
use crate::Result;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Structure constants of the 2-ary bracket, evaluated at a point:
/// component dimensions `dims[i]` for graded pieces indexed from 1, and
/// tables `c[(i,j)][k][l][s]` with
/// `{e_k^(i), e_l^(j)}₂ = Σ_s c[(i,j)][k][l][s] · e_s^(i+j−1)`.
///
/// Component pair (1,1) uses the antisymmetric commutator convention.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    dims: Vec<usize>,
    tables: BTreeMap<(usize, usize), Vec<Vec<Vec<Coeff>>>>,
}

impl StructureConstants {
    pub fn new(dims: Vec<usize>) -> Self {
        StructureConstants { dims, tables: BTreeMap::new() }
    }

    /// Dimension of graded component `i` (1-based).
    pub fn dim(&self, i: usize) -> Option<usize> {
        if i == 0 || i > self.dims.len() {
            None
        } else {
            Some(self.dims[i - 1])
        }
    }

    pub fn set_table(
        &mut self,
        comps: (usize, usize),
        table: Vec<Vec<Vec<Coeff>>>,
    ) -> Result<()> {
        let (i, j) = comps;
        let (di, dj) = (
            self.dim(i).ok_or_else(|| Error::shape("component out of range"))?,
            self.dim(j).ok_or_else(|| Error::shape("component out of range"))?,
        );
        let target = i + j - 1;
        let dt = self
            .dim(target)
            .ok_or_else(|| Error::shape("bracket target component out of range"))?;
        if table.len() != di
            || table.iter().any(|row| row.len() != dj)
            || table
                .iter()
                .any(|row| row.iter().any(|entry| entry.len() != dt))
        {
            return Err(Error::shape(format!(
                "structure table for ({i},{j}) must be {di}x{dj}x{dt}"
            )));
        }
        self.tables.insert(comps, table);
        Ok(())
    }

    pub fn has_table(&self, comps: (usize, usize)) -> bool {
        self.tables.contains_key(&comps)
    }

    /// Bracket of basis vectors `e_k^(i)` and `e_l^(j)`.
    pub fn bracket_basis(&self, comps: (usize, usize), k: usize, l: usize) -> Result<Vec<Coeff>> {
        let table = self
            .tables
            .get(&comps)
            .ok_or_else(|| Error::input(format!("no structure table for components {comps:?}")))?;
        Ok(table[k][l].clone())
    }

    /// Bracket of arbitrary vectors of components `i` and `j`.
    pub fn bracket(&self, comps: (usize, usize), u: &[Coeff], v: &[Coeff]) -> Result<Vec<Coeff>> {
        let (i, j) = comps;
        let (di, dj) = (self.dim(i).unwrap_or(0), self.dim(j).unwrap_or(0));
        if u.len() != di || v.len() != dj {
            return Err(Error::shape(format!(
                "bracket arguments must have dimensions {di} and {dj}"
            )));
        }
        let dt = self.dim(i + j - 1).unwrap_or(0);
        let mut out = vec![Coeff::zero(); dt];
        for (k, uk) in u.iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for (l, vl) in v.iter().enumerate() {
                if vl.is_zero() {
                    continue;
                }
                let c = self.bracket_basis(comps, k, l)?;
                for (s, cs) in c.iter().enumerate() {
                    out[s] += uk * vl * cs;
                }
            }
        }
        Ok(out)
    }
}

/// Verdict of a closure test, carrying the offending pair when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketClosure {
    Closed,
    /// Basis indices (k, l) whose bracket escapes the target subspace.
    Escapes(usize, usize),
}

impl BracketClosure {
    pub fn is_closed(&self) -> bool {
        matches!(self, BracketClosure::Closed)
    }
}

/// Tests `{V, V}₂ ⊆ V` inside the declared components: all pairwise
/// brackets of basis vectors of `v` must land back in `v`. The subspace
/// must live in the component's ambient space, and for the diagonal test
/// the target component `i+j−1` must share that ambient space.
pub fn bracket_closed(
    v: &SubspaceBasis,
    constants: &StructureConstants,
    comps: (usize, usize),
) -> Result<BracketClosure> {
    let (i, j) = comps;
    let di = constants
        .dim(i)
        .ok_or_else(|| Error::shape("component out of range"))?;
    let dj = constants
        .dim(j)
        .ok_or_else(|| Error::shape("component out of range"))?;
    let dt = constants
        .dim(i + j - 1)
        .ok_or_else(|| Error::shape("target component out of range"))?;
    if v.ambient_dimension() != di || di != dj || dt != di {
        return Err(Error::shape(format!(
            "subspace ambient {} incompatible with component dimensions ({di},{dj}→{dt})",
            v.ambient_dimension()
        )));
    }
    let basis = v.basis_vectors();
    for (k, u) in basis.iter().enumerate() {
        for (l, w) in basis.iter().enumerate() {
            let b = constants.bracket(comps, u, w)?;
            if !v.contains_vector(&b) {
                return Ok(BracketClosure::Escapes(k, l));
            }
        }
    }
    Ok(BracketClosure::Closed)
}
