use super::*;
use crate::fixtures::*;
use crate::poly::coeff_from_i64;

fn q(n: i64) -> Coeff {
    coeff_from_i64(n)
}

#[test]
fn validate_koszul_tensored_complex() {
    let (_, complex) = koszul2_complex();
    let report = complex.validate();
    assert_eq!(report.generic_ranks, vec![2, 2]);
    assert_eq!(report.bundle_ranks, vec![4, 2]);
}

#[test]
fn validate_gl2_pair() {
    let (_, complex) = gl2_complex();
    assert_eq!(complex.validate().generic_ranks, vec![2, 2]);
}

#[test]
fn perturbed_complex_fails_validation() {
    let c = ctx(&["x", "y"]);
    let anchor = pmat(&c, &[&["x", "0", "y", "0"], &["0", "x", "0", "y"]]);
    // one sign flipped in the syzygy matrix
    let bad_d2 = pmat(
        &c,
        &[
            &["y", "0"],
            &["0", "y"],
            &["x", "0"],
            &["0", "-x"],
        ],
    );
    let err = AnchoredComplex::new(&c, anchor, vec![bad_d2]).unwrap_err();
    assert!(matches!(err, Error::Inconsistency(_)), "{err}");
    assert!(err.to_string().contains("(0, 0)"), "{err}");
}

#[test]
fn regular_codims_euler() {
    let (_, complex) = euler_complex(3);
    let rc = complex.regular_codims().unwrap();
    assert_eq!(rc.r, 1);
    // r₀ = N − 1; r₁ = rk E₋₁ − rank(d⁽²⁾ = 0) = 1, by the direct formula
    assert_eq!(rc.codims, vec![2, 1]);
}

#[test]
fn regular_codims_gl2() {
    let (_, complex) = gl2_complex();
    let rc = complex.regular_codims().unwrap();
    assert_eq!(rc.r, 2);
    assert_eq!(rc.codims, vec![2, 2, 2]);
}

#[test]
fn regular_codims_zero_foliation() {
    // the zero foliation, presented with a rank-0 E₋₁
    let c = ctx(&["x", "y"]);
    let anchor = PolyMatrix::zero(&c, 2, 0);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    let rc = complex.regular_codims().unwrap();
    assert_eq!(rc.r, 0);
    assert_eq!(rc.codims[0], 2);

    // a zero anchor on a rank-1 bundle is not generically exact and the
    // formula/deficit mismatch reports it
    let sloppy = AnchoredComplex::new(&c, PolyMatrix::zero(&c, 2, 1), vec![]).unwrap();
    assert!(matches!(
        sloppy.regular_codims(),
        Err(Error::Inconsistency(_))
    ));
}

#[test]
fn singular_locus_examples() {
    let (c, euler) = euler_complex(3);
    let locus = euler.singular_locus(0).unwrap();
    let expected = crate::groebner::ideal_of(&c, &["x1", "x2", "x3"]).unwrap();
    assert!(locus.equals(&expected));

    let (c4, gl2) = gl2_complex();
    let locus = gl2.singular_locus(1).unwrap();
    let expected = crate::groebner::ideal_of(&c4, &["x2", "x3", "x1 - x4"]).unwrap();
    assert!(locus.equals(&expected));

    let (cq, cubic) = along_phi_cubic();
    let locus = cubic.singular_locus(0).unwrap();
    let expected = crate::groebner::ideal_of(&cq, &["x^2", "y^2"]).unwrap();
    assert!(locus.equals(&expected));

    // level == length: empty singular set
    assert!(euler.singular_locus(1).unwrap().is_unit_ideal());
}

#[test]
fn exactness_koszul() {
    let (_, complex) = koszul2_complex();
    assert!(complex.is_exact());
}

#[test]
fn exactness_fails_rank_condition() {
    let c = ctx(&["x"]);
    let anchor = pmat(&c, &[&["x^2"]]);
    let fake_d2 = PolyMatrix::zero(&c, 1, 1);
    let complex = AnchoredComplex::new(&c, anchor, vec![fake_d2]).unwrap();
    let verdicts = complex.exactness_check();
    assert!(matches!(
        verdicts[1].1,
        ExactnessVerdict::FailsRankCondition { expected: 1, got: 0 }
    ));
}

#[test]
fn exactness_of_all_fixture_inputs() {
    assert!(gl2_complex().1.is_exact());
    assert!(euler_complex(2).1.is_exact());
    assert!(euler_complex(3).1.is_exact());
    assert!(vanish2_complex().1.is_exact());
    assert!(so3_complex().1.is_exact());
}

#[test]
fn almost_lie_gl2_passes() {
    let (c, complex) = gl2_complex();
    let data = gl2_almost_lie(&c);
    let report = validate_almost_lie(&complex, &data).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn almost_lie_koszul_passes() {
    let (c, complex) = koszul2_complex();
    let data = koszul2_almost_lie(&c);
    let report = validate_almost_lie(&complex, &data).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn almost_lie_so3_passes() {
    let (c, complex) = so3_complex();
    let data = so3_almost_lie(&c);
    let report = validate_almost_lie(&complex, &data).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn abelian_structure_with_commuting_fields_passes() {
    // two commuting generators with ℓ₂ = 0
    let c = ctx(&["x", "y"]);
    let anchor = pmat(&c, &[&["x", "0"], &["0", "y"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), const_table(&c, &vec![vec![vec![0, 0]; 2]; 2]));
    let report = validate_almost_lie(&complex, &data).unwrap();
    assert!(report.passed());
}

#[test]
fn zero_bracket_with_noncommuting_fields_fails_anchor_identity() {
    // [x∂x, ∂x] = −∂x ≠ 0 but ℓ₂ = 0
    let c = ctx(&["x"]);
    let anchor = pmat(&c, &[&["x", "1"]]);
    let complex = AnchoredComplex::new(&c, anchor, vec![]).unwrap();
    let mut data = AlmostLieData::new();
    data.set_table((1, 1), const_table(&c, &vec![vec![vec![0, 0]; 2]; 2]));
    let report = validate_almost_lie(&complex, &data).unwrap();
    assert!(report.anchor_morphism.is_err());
}

#[test]
fn isotropy_vanishing_fields_at_origin_is_gl2() {
    let (c, complex) = vanish2_complex();
    let data = vanish2_almost_lie(&c);
    let iso = isotropy_algebra(&complex, &data, &[q(0), q(0)]).unwrap();
    assert_eq!(iso.kernel.dimension(), 4);
    assert_eq!(iso.image.dimension(), 0);
    assert_eq!(iso.quotient_dimension(), 4);
    // the quotient bracket is the matrix commutator: check one value
    let e12 = vec![q(0), q(1), q(0), q(0)];
    let e21 = vec![q(0), q(0), q(1), q(0)];
    let br = iso
        .pointwise_constants
        .bracket((1, 1), &e12, &e21)
        .unwrap();
    assert_eq!(br, vec![q(1), q(0), q(0), q(-1)]);
}

#[test]
fn isotropy_euler_points() {
    let (c, complex) = euler_complex(2);
    let data = euler_almost_lie(&c);
    // regular point: trivial isotropy
    let iso = isotropy_algebra(&complex, &data, &[q(1), q(0)]).unwrap();
    assert_eq!(iso.quotient_dimension(), 0);
    // origin: one-dimensional abelian
    let iso = isotropy_algebra(&complex, &data, &[q(0), q(0)]).unwrap();
    assert_eq!(iso.quotient_dimension(), 1);
    let b = iso
        .quotient_constants
        .bracket((1, 1), &[q(1)], &[q(1)])
        .unwrap();
    assert!(b[0] == q(0));
}

#[test]
fn isotropy_quotient_satisfies_jacobi() {
    // brute-force Jacobi on basis triples of the quotient at singular points
    let cases: Vec<(Ctx, AnchoredComplex, AlmostLieData, Vec<Coeff>)> = vec![
        {
            let (c, k) = vanish2_complex();
            let d = vanish2_almost_lie(&c);
            (c, k, d, vec![q(0), q(0)])
        },
        {
            let (c, k) = gl2_complex();
            let d = gl2_almost_lie(&c);
            (c, k, d, vec![q(1), q(0), q(0), q(1)])
        },
        {
            let (c, k) = so3_complex();
            let d = so3_almost_lie(&c);
            (c, k, d, vec![q(0), q(0), q(0)])
        },
    ];
    for (_c, complex, data, point) in cases {
        let iso = isotropy_algebra(&complex, &data, &point).unwrap();
        let n = iso.quotient_dimension();
        let basis: Vec<Vec<Coeff>> = (0..n)
            .map(|i| {
                let mut v = vec![q(0); n];
                v[i] = q(1);
                v
            })
            .collect();
        let sc = &iso.quotient_constants;
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let ab_c = sc
                        .bracket((1, 1), &sc.bracket((1, 1), a, b).unwrap(), c)
                        .unwrap();
                    let bc_a = sc
                        .bracket((1, 1), &sc.bracket((1, 1), b, c).unwrap(), a)
                        .unwrap();
                    let ca_b = sc
                        .bracket((1, 1), &sc.bracket((1, 1), c, a).unwrap(), b)
                        .unwrap();
                    let sum: Vec<Coeff> = ab_c
                        .iter()
                        .zip(&bc_a)
                        .zip(&ca_b)
                        .map(|((x, y), z)| x + y + z)
                        .collect();
                    assert!(sum.iter().all(|v| v.is_zero()), "Jacobi fails");
                }
            }
        }
    }
}

#[test]
fn gl2_isotropy_at_scalar_matrix() {
    let (c, complex) = gl2_complex();
    let data = gl2_almost_lie(&c);
    // scalar matrix: kernel is everything, image is the line spanned by I
    let iso = isotropy_algebra(&complex, &data, &[q(2), q(0), q(0), q(2)]).unwrap();
    assert_eq!(iso.kernel.dimension(), 4);
    assert_eq!(iso.image.dimension(), 1);
    assert_eq!(iso.quotient_dimension(), 3);
}
