use std::time::Instant;

use superbracket::exact::{frac, int, Matrix, Poly, Rational};
use superbracket::lie::{example_algebra, simple3, ExampleKind};
use superbracket::tables::TrilinearTable;
use superbracket::ybe::*;
use superbracket::Error;

fn poly(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

fn ex1_1(n: usize, lambda: i64) -> (superbracket::lie::GradedAlgebra, superbracket::lie::BilinearForm) {
    example_algebra(ExampleKind::Ex1_1, n, 0, &int(lambda), None).unwrap()
}

/// Points off the integer grid.
fn off_grid() -> Vec<(Rational, Rational)> {
    vec![
        (frac(1, 2), frac(7, 3)),
        (frac(-5, 4), frac(2, 7)),
        (int(11), frac(-1, 3)),
        (frac(13, 5), int(-9)),
        (frac(-3, 8), frac(-17, 6)),
    ]
}

#[test]
fn dual_bases() {
    let (_, g) = ex1_1(1, 0);
    let d = dual_basis(&g).unwrap().d;
    let expected = Matrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, -1, 0]]);
    assert_eq!(d, expected);
    let (_, g) = ex1_1(1, 3);
    let d = dual_basis(&g).unwrap().d;
    assert_eq!((d.get(0, 0), d.get(0, 1), d.get(1, 0), d.get(1, 1)), (&int(3), &int(1), &int(1), &int(0)));
    assert_eq!(&d * g.gram(), Matrix::identity(4));
}

#[test]
fn pure_g_is_scalar() {
    let (a, g) = ex1_1(1, 2);
    let gp = poly(&[1, 2, -1]);
    let f = pure_g(a.basis().clone(), &g, &gp).unwrap();
    let r = build_r(&f).unwrap();
    for theta in [int(0), frac(3, 2), int(-4)] {
        assert_eq!(r.eval(&theta), Matrix::identity(16).scale(&gp.eval(&theta)));
    }
    assert!(check_ybe(&r, None).passes());
    assert!(check_commutation(&r, None).passes());
    assert!(check_classical_ybe(&r, None).passes());
    assert!(check_eq_3_8(&f).passes());
}

#[test]
fn zero_family_gives_zero_matrix() {
    let (a, g) = ex1_1(1, 0);
    let f = ThetaTripleFamily::new("zero", a.basis().clone(), g, vec![(TrilinearTable::zero(4), poly(&[1]))]).unwrap();
    assert_eq!(build_r(&f).unwrap().eval(&int(5)), Matrix::zeros(16, 16));
}

#[test]
fn left_nested_spot_entry() {
    // e, f, x1, y1; R[(e,x1),(x1,f)] = Σ_k D_ek [[e_k,x1],f]_x1 = [[f,x1],f]_x1 · θ
    let (a, g) = ex1_1(1, 0);
    let f = prop3_1(&a, &g, &poly(&[0, 1]), &poly(&[1])).unwrap();
    let r = build_r(&f).unwrap();
    let n = 4;
    let (e, ff, x1) = (0, 1, 2);
    assert_eq!(r.entry(e * n + x1, x1 * n + ff), poly(&[0, -1]));
    // metric part contributes the identity
    assert_eq!(r.entry(ff * n + ff, ff * n + ff).coeff(0), int(1));
}

#[test]
fn left_nested_family_certified() {
    for n in [1, 2] {
        let start = Instant::now();
        let (a, g) = ex1_1(n, 1);
        let f = prop3_1(&a, &g, &poly(&[1, -2, 1]), &poly(&[0, 3, 1])).unwrap();
        assert!(verify_condition_3_6(&f).iter().all(|v| v.is_empty()));
        assert!(check_eq_3_8(&f).passes());
        let r = build_r(&f).unwrap();
        assert_eq!(r.degree(), 2);
        let commute = check_commutation(&r, None);
        assert!(commute.passes(), "{:?}", commute.failure);
        let ybe = check_ybe(&r, None);
        assert!(ybe.passes(), "{:?}", ybe.failure);
        assert_eq!(ybe.points_checked, 49);
        assert!(check_classical_ybe(&r, None).passes());
        for (t, t2) in off_grid() {
            assert!(check_ybe_at(&r, &t, &t2).is_none());
        }
        assert!(start.elapsed().as_secs() < 60, "n = {n} took {:?}", start.elapsed());
    }
}

#[test]
fn verdict_invariant_under_form_rescaling() {
    let (a, g) = ex1_1(1, 0);
    let scaled = g.scale(&frac(-3, 2));
    let f1 = prop3_1(&a, &g, &poly(&[0, 1]), &poly(&[2])).unwrap();
    let f2 = prop3_1(&a, &scaled, &poly(&[0, 1]), &poly(&[2])).unwrap();
    let (r1, r2) = (build_r(&f1).unwrap(), build_r(&f2).unwrap());
    assert_ne!(r1, r2);
    assert_eq!(check_ybe(&r1, None).passes(), check_ybe(&r2, None).passes());
}

#[test]
fn two_term_family_certified() {
    let (a, g) = example_algebra(ExampleKind::Ex1_3, 1, 1, &int(0), None).unwrap();
    let f = prop3_2(&a, &g, &poly(&[0, 1]), &poly(&[2, 0, 1]), &poly(&[1, 1])).unwrap();
    assert!(check_eq_3_8(&f).passes());
    let r = build_r(&f).unwrap();
    assert!(check_commutation(&r, None).passes());
    assert!(check_ybe(&r, None).passes());
    let eq35 = check_eq_3_5(&f, None).unwrap();
    assert!(eq35.passes());
    for (t, t2) in off_grid() {
        assert!(check_ybe_at(&r, &t, &t2).is_none());
    }
}

#[test]
fn two_term_family_needs_l5_zero() {
    let (a, g) = ex1_1(1, 0);
    assert!(matches!(prop3_2(&a, &g, &poly(&[1]), &poly(&[1]), &poly(&[1])), Err(Error::Precondition(_))));
}

#[test]
fn simple_algebra_fails() {
    let (a, g) = simple3();
    assert!(matches!(prop3_1(&a, &g, &poly(&[0, 1]), &poly(&[1])), Err(Error::Precondition(_))));
    let f = lie_family("simple3", &a, &g, &[(LieProduct::LeftNested, poly(&[0, 1]))], Some(&poly(&[1]))).unwrap();
    let eq38 = check_eq_3_8(&f);
    assert!(!eq38.passes());
    let r = build_r(&f).unwrap();
    let commute = check_commutation(&r, None);
    assert!(!commute.passes());
    let failure = commute.failure.unwrap();
    assert_ne!(failure.lhs, failure.rhs);
    let ybe = check_ybe(&r, None);
    assert!(!ybe.passes());
    // the direct triple-product form agrees with the matrix form
    assert!(!check_eq_3_5(&f, None).unwrap().passes());
}

#[test]
fn constant_left_nested_commutes() {
    let (a, g) = ex1_1(2, 0);
    let f = lie_family("lemma", &a, &g, &[(LieProduct::LeftNested, poly(&[1]))], None).unwrap();
    let report = check_eq_3_8(&f);
    assert!(report.passes());
    assert_eq!(report.pairs, vec![((0, 0), true)]);
}

#[test]
fn triple_commutation_polynomial_level() {
    // pair-level failures that cancel as polynomials are not violations
    let (a, g) = simple3();
    let f = lie_family(
        "cancelling",
        &a,
        &g,
        &[(LieProduct::LeftNested, poly(&[0, 1])), (LieProduct::LeftNested, poly(&[0, -1]))],
        None,
    )
    .unwrap();
    let report = check_eq_3_8(&f);
    assert!(report.pairs.iter().any(|(_, ok)| !ok));
    assert!(report.passes());
}

#[test]
fn commuting_diagonals() {
    let j1 = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
    let j2 = Matrix::from_ints(&[&[0, 0], &[0, 1]]);
    let f = vec![vec![poly(&[1, 1]), poly(&[0, 2])], vec![poly(&[3, -1]), poly(&[0, 1])]];
    let r = remark3_2(&[j1.clone(), j2.clone()], &f).unwrap();
    // (J⊗J)[(c,d),(a,b)] = J[c,a]·J[d,b]
    let k = j1.kron(&j2);
    assert_eq!(k.get(3, 3), &int(2));
    assert!(check_commutation(&r, None).passes());
    assert!(check_ybe(&r, None).passes());
    assert!(check_classical_ybe(&r, None).passes());
    let nilpotent = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    assert!(matches!(
        remark3_2(&[j1, nilpotent], &f),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn non_commuting_r_fails_classical() {
    let r = RMatrix::new(
        2,
        vec![
            (Matrix::from_ints(&[&[0, 1], &[0, 0]]).kron(&Matrix::identity(2)), poly(&[1])),
            (Matrix::from_ints(&[&[0, 0], &[1, 0]]).kron(&Matrix::identity(2)), poly(&[0, 1])),
        ],
    )
    .unwrap();
    assert!(!check_classical_ybe(&r, None).passes());
    assert!(!check_commutation(&r, None).passes());
}

#[test]
fn reversed_family_both_sides_vanish() {
    for (n, m) in [(1, 1), (2, 1)] {
        let (a, g) = example_algebra(ExampleKind::Ex1_3, n, m, &int(0), None).unwrap();
        let f = remark3_3(&a, &g, &poly(&[1, 2]), &poly(&[0, 0, 1])).unwrap();
        let report = check_eq_3_5(&f, None).unwrap();
        assert!(report.passes() && report.both_sides_vanish);
        let r = build_r(&f).unwrap();
        assert_eq!(check_ybe(&r, None).passes(), report.passes());
    }
}

#[test]
fn triple_product_ybe_agrees_with_matrix_form() {
    let (a, g) = ex1_1(1, 2);
    let families = vec![
        prop3_1(&a, &g, &poly(&[0, 1]), &poly(&[1, 1])).unwrap(),
        pure_g(a.basis().clone(), &g, &poly(&[2, 1])).unwrap(),
    ];
    for f in families {
        let r = build_r(&f).unwrap();
        assert_eq!(check_eq_3_5(&f, None).unwrap().passes(), check_ybe(&r, None).passes(), "{}", f.name());
    }
}

#[test]
fn family_kind_names() {
    for k in FamilyKind::ALL {
        assert_eq!(k.as_str().parse::<FamilyKind>().unwrap(), k);
    }
}
