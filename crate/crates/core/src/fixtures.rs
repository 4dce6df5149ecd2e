//! Shared test inputs: the small standard foliations used across the
//! test suites.

use crate::foliation::{AlmostLieData, AnchoredComplex};
use crate::linalg::PolyMatrix;
use crate::poly::{parse_expression, Ctx, Polynomial, VariableContext};

pub fn ctx(names: &[&str]) -> Ctx {
    VariableContext::new(names).unwrap()
}

pub fn p(c: &Ctx, s: &str) -> Polynomial {
    parse_expression(s, c).unwrap()
}

pub fn pmat(c: &Ctx, rows: &[&[&str]]) -> PolyMatrix {
    let r = rows.len();
    let cols = rows[0].len();
    let entries = rows
        .iter()
        .flat_map(|row| row.iter().map(|s| p(c, s)))
        .collect();
    PolyMatrix::new(c, r, cols, entries).unwrap()
}

/// Constant structure table `c[k][l][s]` from integer entries.
pub fn const_table(c: &Ctx, table: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<Polynomial>>> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| {
                    entry
                        .iter()
                        .map(|&v| p(c, &v.to_string()))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Commutator constants on a basis indexed by matrix positions (a,b) of
/// N×N matrices in row-major order: [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb.
pub fn matrix_commutator_table(n: usize) -> Vec<Vec<Vec<i64>>> {
    let dim = n * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut table = vec![vec![vec![0i64; dim]; dim]; dim];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let (k, l) = (idx(a, b), idx(c, d));
                    if b == c {
                        table[k][l][idx(a, d)] += 1;
                    }
                    if d == a {
                        table[k][l][idx(c, b)] -= 1;
                    }
                }
            }
        }
    }
    table
}

/// The adjoint foliation of 2×2 matrices: x = [[x1,x2],[x3,x4]],
/// ρ(v) = [x, v] on the basis (E11, E12, E21, E22), and
/// d⁽²⁾(λ0, λ1) = λ0·I + λ1·x.
pub fn gl2_complex() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x1", "x2", "x3", "x4"]);
    let anchor = pmat(
        &c,
        &[
            &["0", "-x3", "x2", "0"],
            &["-x2", "x1 - x4", "0", "x2"],
            &["x3", "0", "x4 - x1", "-x3"],
            &["0", "x3", "-x2", "0"],
        ],
    );
    let d2 = pmat(&c, &[&["1", "x1"], &["0", "x2"], &["0", "x3"], &["1", "x4"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![d2]).unwrap();
    (c, complex)
}

pub fn gl2_almost_lie(c: &Ctx) -> AlmostLieData {
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), const_table(c, &matrix_commutator_table(2)));
    // the bracket of constant sections with the polynomial frame of E₋₂
    // vanishes for the adjoint complex
    let zeros = vec![vec![vec![p(c, "0"), p(c, "0")]; 2]; 4];
    data.set_table((1, 2), zeros);
    data
}

/// The Euler foliation on N coordinates: one generator Σ xᵢ∂ᵢ.
pub fn euler_complex(n: usize) -> (Ctx, AnchoredComplex) {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let c = ctx(&refs);
    let col: Vec<Vec<&str>> = names.iter().map(|nm| vec![nm.as_str()]).collect();
    let rows: Vec<&[&str]> = col.iter().map(|r| r.as_slice()).collect();
    let anchor = pmat(&c, &rows);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    (c, complex)
}

pub fn euler_almost_lie(c: &Ctx) -> AlmostLieData {
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), vec![vec![vec![p(c, "0")]]]);
    data
}

/// Vector fields vanishing at the origin of the plane: ρ(E_ij) = xᵢ∂ⱼ on
/// the basis (E11, E12, E21, E22), with the syzygy matrix as d⁽²⁾.
pub fn vanish2_complex() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x1", "x2"]);
    let anchor = pmat(
        &c,
        &[
            &["x1", "0", "x2", "0"],
            &["0", "x1", "0", "x2"],
        ],
    );
    let d2 = pmat(
        &c,
        &[
            &["x2", "0"],
            &["0", "x2"],
            &["-x1", "0"],
            &["0", "-x1"],
        ],
    );
    let complex = AnchoredComplex::new(&c, anchor, vec![d2]).unwrap();
    (c, complex)
}

pub fn vanish2_almost_lie(c: &Ctx) -> AlmostLieData {
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), const_table(c, &matrix_commutator_table(2)));
    data
}

/// The Hamiltonian foliation of the standard linear Poisson structure on
/// three coordinates: columns P♯(dx), P♯(dy), P♯(dz), with the radial
/// syzygy as d⁽²⁾.
pub fn so3_complex() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x", "y", "z"]);
    let anchor = pmat(
        &c,
        &[
            &["0", "-z", "y"],
            &["z", "0", "-x"],
            &["-y", "x", "0"],
        ],
    );
    let d2 = pmat(&c, &[&["x"], &["y"], &["z"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![d2]).unwrap();
    (c, complex)
}

pub fn so3_almost_lie(c: &Ctx) -> AlmostLieData {
    let mut data = AlmostLieData::new();
    // ℓ₂(e_x,e_y) = e_z and cyclic
    let mut table = vec![vec![vec![0i64; 3]; 3]; 3];
    for (a, b, s) in [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)] {
        table[a][b][s] = 1;
        table[b][a][s] = -1;
    }
    data.set_table((1, 1), const_table(c, &table));
    // bracket with the E₋₂ frame vanishes for this complex
    data.set_table((1, 2), vec![vec![vec![p(c, "0")]; 1]; 3]);
    data
}

/// The foliation ⟨x,y⟩·𝔛(A²) resolved by the Koszul complex of (x, y)
/// tensored with the two vector-field slots. Frame of E₋₁:
/// (x∂₁, x∂₂, y∂₁, y∂₂); frame of E₋₂: (ε₁, ε₂).
pub fn koszul2_complex() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x", "y"]);
    let anchor = pmat(
        &c,
        &[
            &["x", "0", "y", "0"],
            &["0", "x", "0", "y"],
        ],
    );
    let d2 = pmat(
        &c,
        &[
            &["-y", "0"],
            &["0", "-y"],
            &["x", "0"],
            &["0", "x"],
        ],
    );
    let complex = AnchoredComplex::new(&c, anchor, vec![d2]).unwrap();
    (c, complex)
}

pub fn koszul2_almost_lie(c: &Ctx) -> AlmostLieData {
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), const_table(c, &matrix_commutator_table(2)));
    // ℓ₂(e11,ε₂)=ε₂, ℓ₂(e12,ε₁)=−ε₂, ℓ₂(e21,ε₂)=−ε₁, ℓ₂(e22,ε₁)=ε₁
    let mut t12 = vec![vec![vec![0i64; 2]; 2]; 4];
    t12[0][1][1] = 1;
    t12[1][0][1] = -1;
    t12[2][1][0] = -1;
    t12[3][0][0] = 1;
    data.set_table((1, 2), const_table(c, &t12));
    data
}

/// Along-φ foliation {X : X[φ] = 0} on the plane, presented by its single
/// generator (−∂φ/∂y, ∂φ/∂x) up to the obvious unit.
pub fn along_phi_quadric() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x", "y"]);
    let anchor = pmat(&c, &[&["-y"], &["x"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    (c, complex)
}

pub fn along_phi_cubic() -> (Ctx, AnchoredComplex) {
    let c = ctx(&["x", "y"]);
    let anchor = pmat(&c, &[&["-y^2"], &["x^2"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    (c, complex)
}
