//! Exact linear algebra over the rationals and over the polynomial
//! fraction field: ranks, kernels, minor ideals, Plücker coordinates,
//! subspace limits along curves, and bracket-closure tests.

mod bracket;
mod matrix;
mod pluecker;
mod qmat;

pub use bracket::{bracket_closed, BracketClosure, StructureConstants};
pub use matrix::PolyMatrix;
pub use pluecker::{
    pluecker_family, pluecker_of_subspace, pluecker_to_subspace, pluecker_vector,
    subspace_limit, PlueckerFamily, PlueckerVector,
};
pub use qmat::{QMatrix, SubspaceBasis};

/// k-element subsets of {0..n-1} in lexicographic order; the shared index
/// convention for minors and Plücker coordinates.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance to the next k-subset in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
    }
}
