//! Plücker coordinates of subspaces, polynomial families of them, limits
//! along curves, and reconstruction of the subspace from its coordinates.

use super::matrix::PolyMatrix;
use super::qmat::{QMatrix, SubspaceBasis};
use super::k_subsets;
use crate::error::Error;
use crate::poly::{Coeff, Ctx, Polynomial};
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A point of the Grassmannian of k-subspaces of ℚⁿ, as its maximal
/// minors indexed by the k-subsets of {1..n} in lexicographic order,
/// normalized to a primitive integer vector with positive first nonzero
/// coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerVector {
    pub k: usize,
    pub n: usize,
    pub coords: Vec<Coeff>,
}

impl PlueckerVector {
    pub fn new(k: usize, n: usize, coords: Vec<Coeff>) -> Result<Self> {
        if coords.len() != k_subsets(n, k).len() {
            return Err(Error::shape("Plücker coordinate count mismatch"));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::input("zero Plücker vector"));
        }
        let mut v = PlueckerVector { k, n, coords };
        v.normalize();
        Ok(v)
    }

    fn normalize(&mut self) {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coords {
            num = num_integer::gcd(num, c.numer().clone());
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut content = Coeff::new(num, den);
        if let Some(first) = self.coords.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                content = -content;
            }
        }
        let factor = content.recip();
        for c in &mut self.coords {
            *c *= &factor;
        }
    }

    /// Index sets in the order the coordinates are listed.
    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        k_subsets(self.n, self.k)
    }

    /// Checks the quadratic Plücker relations (debug aid for small cases).
    pub fn satisfies_pluecker_relations(&self) -> bool {
        // for each (k−1)-set S and (k+1)-set T: Σ_j (−1)^j p_{S∪T_j} p_{T∖T_j} = 0
        if self.k == 0 || self.k == self.n {
            return true;
        }
        let coord = |set: &[usize]| -> Coeff {
            // antisymmetric lookup of an arbitrary index tuple
            let mut sorted = set.to_vec();
            let mut sign = 1i64;
            for i in 0..sorted.len() {
                for j in (i + 1)..sorted.len() {
                    if sorted[i] > sorted[j] {
                        sorted.swap(i, j);
                        sign = -sign;
                    }
                }
            }
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Coeff::zero();
                }
            }
            let sets = k_subsets(self.n, self.k);
            let idx = sets.iter().position(|s| *s == sorted).unwrap();
            let v = self.coords[idx].clone();
            if sign < 0 {
                -v
            } else {
                v
            }
        };
        for s in k_subsets(self.n, self.k - 1) {
            for t in k_subsets(self.n, self.k + 1) {
                let mut acc = Coeff::zero();
                for (j, &tj) in t.iter().enumerate() {
                    let mut left = s.clone();
                    left.push(tj);
                    let mut right = t.clone();
                    right.remove(j);
                    let sign = if j % 2 == 0 { Coeff::one() } else { -Coeff::one() };
                    acc += sign * coord(&left) * coord(&right);
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// A family of Plücker vectors: coordinates polynomial in a parameter
/// (most often a single curve parameter `t`).
#[derive(Clone, Debug)]
pub struct PlueckerFamily {
    pub k: usize,
    pub n: usize,
    pub coords: Vec<Polynomial>,
}

impl PlueckerFamily {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Maximal minors of rational columns, in the fixed subset order.
pub fn pluecker_vector(m: &QMatrix) -> Result<PlueckerVector> {
    let (n, k) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::shape("more columns than ambient dimension"));
    }
    let mut coords = Vec::new();
    for rows in k_subsets(n, k) {
        coords.push(qdet(m, &rows));
    }
    PlueckerVector::new(k, n, coords).map_err(|_| {
        Error::input("dependent columns: all maximal minors vanish")
    })
}

fn qdet(m: &QMatrix, rows: &[usize]) -> Coeff {
    let k = rows.len();
    if k == 0 {
        return Coeff::one();
    }
    // Laplace expansion; k stays small here
    if k == 1 {
        return m.at(rows[0], 0).clone();
    }
    let mut acc = Coeff::zero();
    for (i, &r) in rows.iter().enumerate() {
        if m.at(r, 0).is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &rr)| rr)
            .collect();
        let sub = minor_matrix(m, &rest);
        let sign = if i % 2 == 0 { Coeff::one() } else { -Coeff::one() };
        acc += sign * m.at(r, 0).clone() * qdet(&sub, &(0..k - 1).collect::<Vec<_>>());
    }
    acc
}

fn minor_matrix(m: &QMatrix, rows: &[usize]) -> QMatrix {
    let mut out = QMatrix::zero(rows.len(), m.cols() - 1);
    for (ri, &r) in rows.iter().enumerate() {
        for c in 1..m.cols() {
            *out.at_mut(ri, c - 1) = m.at(r, c).clone();
        }
    }
    out
}

/// Maximal minors of polynomial columns.
pub fn pluecker_family(ctx: &Ctx, m: &PolyMatrix) -> Result<PlueckerFamily> {
    let (n, k) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::shape("more columns than ambient dimension"));
    }
    let mut coords = Vec::new();
    for rows in k_subsets(n, k) {
        let cols: Vec<usize> = (0..k).collect();
        coords.push(m.submatrix(&rows, &cols).determinant()?);
    }
    let _ = ctx;
    Ok(PlueckerFamily { k, n, coords })
}

/// Limit of a one-parameter family at t → 0: divide all coordinates by
/// t^v with v the minimum t-adic valuation, then evaluate at t = 0.
pub fn subspace_limit(family: &PlueckerFamily, tvar: usize) -> Result<PlueckerVector> {
    if family.is_zero() {
        return Err(Error::input("identically-zero Plücker family"));
    }
    let val = family
        .coords
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.terms().iter().map(|(m, _)| m[tvar]).min().unwrap())
        .min()
        .unwrap();
    let mut coords = Vec::with_capacity(family.coords.len());
    for c in &family.coords {
        if c.is_zero() {
            coords.push(Coeff::zero());
            continue;
        }
        // coefficient of t^val, also evaluating any other variables at 0
        let mut acc = Coeff::zero();
        for (m, co) in c.terms() {
            if m[tvar] == val
                && m.iter().enumerate().all(|(v, &e)| v == tvar || e == 0)
            {
                acc += co.clone();
            }
        }
        coords.push(acc);
    }
    PlueckerVector::new(family.k, family.n, coords)
        .map_err(|_| Error::input("family degenerates at t = 0"))
}

/// Reconstructs the subspace from a decomposable Plücker vector, relative
/// to the first nonzero coordinate's index set.
pub fn pluecker_to_subspace(v: &PlueckerVector) -> Result<SubspaceBasis> {
    if v.k == 0 {
        return Ok(SubspaceBasis::zero_subspace(v.n));
    }
    let sets = v.index_sets();
    let base_idx = v
        .coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::input("zero Plücker vector"))?;
    let base = &sets[base_idx];

    // antisymmetric coordinate lookup
    let coord = |tuple: &[usize]| -> Coeff {
        let mut sorted = tuple.to_vec();
        let mut sign = 1i64;
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                if sorted[i] > sorted[j] {
                    sorted.swap(i, j);
                    sign = -sign;
                }
            }
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Coeff::zero();
            }
        }
        let idx = sets.iter().position(|s| *s == sorted).unwrap();
        let c = v.coords[idx].clone();
        if sign < 0 {
            -c
        } else {
            c
        }
    };

    // v_j = Σ_i p_{b_1..b_{j-1}, i, b_{j+1}..b_k} e_i spans the subspace
    let mut vectors = Vec::new();
    for j in 0..v.k {
        let mut vecj = vec![Coeff::zero(); v.n];
        for i in 0..v.n {
            let mut tuple = base.clone();
            tuple[j] = i;
            vecj[i] = coord(&tuple);
        }
        vectors.push(vecj);
    }
    let sb = SubspaceBasis::from_spanning(v.n, &vectors)?;
    if sb.dimension() != v.k {
        return Err(Error::Inconsistency(
            "Plücker reconstruction produced the wrong dimension".into(),
        ));
    }
    Ok(sb)
}

/// Round trip check used by invariants: the Plücker vector of a subspace.
pub fn pluecker_of_subspace(s: &SubspaceBasis) -> Result<PlueckerVector> {
    let m = QMatrix::from_columns(s.ambient_dimension(), s.basis_vectors())?;
    pluecker_vector(&m)
}
