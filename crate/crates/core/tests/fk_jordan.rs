use superbracket::exact::{frac, int, Matrix, Parity};
use superbracket::fk::*;
use superbracket::lie::{example_algebra, standard_symplectic, BilinearForm, ExampleKind};
use superbracket::report::CheckLimits;
use superbracket::triple::*;
use superbracket::{Error, GradedBasis, Sign};

fn limits() -> CheckLimits {
    CheckLimits::default()
}

/// Even block `diag(1..)` or symplectic, odd block the opposite, matching δ.
fn space(even: usize, odd: usize, delta: Sign) -> (GradedBasis, BilinearForm) {
    let mut parities = vec![Parity::Even; even];
    parities.extend(vec![Parity::Odd; odd]);
    let n = even + odd;
    let mut gram = Matrix::zeros(n, n);
    let blocks = [(0, even, delta == Sign::Plus), (even, odd, delta == Sign::Minus)];
    for (start, size, symmetric) in blocks {
        if symmetric {
            for i in 0..size {
                gram.set(start + i, start + i, int(1 + i as i64));
            }
        } else if size > 0 {
            let omega = standard_symplectic(size).unwrap();
            for i in 0..size {
                for j in 0..size {
                    gram.set(start + i, start + j, omega.get(i, j).clone());
                }
            }
        }
    }
    let form = BilinearForm::with_symmetry(gram, parities.clone(), delta).unwrap();
    (GradedBasis::numbered(parities), form)
}

fn catalog_triples() -> Vec<TripleSystem> {
    let mut out = Vec::new();
    for (even, odd) in [(3, 0), (2, 2), (4, 0), (1, 2)] {
        let (b, g) = space(even, odd, Sign::Plus);
        out.push(example_2_1(b, g, Sign::Plus).unwrap());
    }
    let (b, g) = space(4, 0, Sign::Plus);
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
    out.push(example_2_2(b, g, Sign::Plus, &p, &int(1)).unwrap());
    for (kind, n, m) in [
        (ExampleKind::Ex1_1, 1, 0),
        (ExampleKind::Ex1_2, 2, 0),
        (ExampleKind::Ex1_3, 1, 1),
        (ExampleKind::Ex1_4, 1, 2),
    ] {
        let (a, g) = example_algebra(kind, n, m, &int(1), None).unwrap();
        out.push(triple_from_lie(&a, &g).unwrap());
    }
    out
}

#[test]
fn lie_triples_are_generalized_fk() {
    for t in catalog_triples() {
        let g = GeneralTripleSystem::from_triple(&t, Sign::Minus);
        assert!(check_generalized_fk(&g, &limits()).unwrap().passes(), "{}", t.name());
    }
}

#[test]
fn anti_lie_triples_need_opposite_epsilon() {
    for (even, odd) in [(2, 1), (2, 2), (0, 3)] {
        let (b, g) = space(even, odd, Sign::Minus);
        let t = example_2_1(b, g, Sign::Minus).unwrap();
        let plus = GeneralTripleSystem::from_triple(&t, Sign::Plus);
        assert!(check_generalized_fk(&plus, &limits()).unwrap().passes());
        let minus = GeneralTripleSystem::from_triple(&t, Sign::Minus);
        assert!(!check_generalized_fk(&minus, &limits()).unwrap().passes());
    }
}

fn involution_jordan_cases() -> Vec<(GeneralTripleSystem, TripleSystem)> {
    let mut out = Vec::new();
    let (b, g) = space(4, 0, Sign::Plus);
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
    out.push((
        example_2_4(b.clone(), g.clone(), Sign::Plus, &p, &int(1)).unwrap(),
        example_2_2(b, g, Sign::Plus, &p, &int(1)).unwrap(),
    ));
    let (b, g) = space(3, 0, Sign::Plus);
    let id = Matrix::identity(3);
    out.push((
        example_2_4(b.clone(), g.clone(), Sign::Plus, &id, &int(1)).unwrap(),
        example_2_2(b, g, Sign::Plus, &id, &int(1)).unwrap(),
    ));
    let (b, g) = space(2, 2, Sign::Plus);
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
    out.push((
        example_2_4(b.clone(), g.clone(), Sign::Plus, &p, &int(1)).unwrap(),
        example_2_2(b, g, Sign::Plus, &p, &int(1)).unwrap(),
    ));
    let (b, g) = space(2, 2, Sign::Minus);
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    out.push((
        example_2_4(b.clone(), g.clone(), Sign::Minus, &p, &int(1)).unwrap(),
        example_2_2(b, g, Sign::Minus, &p, &int(1)).unwrap(),
    ));
    out
}

#[test]
fn involution_jordan_is_quasi_classical() {
    for (j, _) in involution_jordan_cases() {
        let report = check_jordan(&j, &limits()).unwrap();
        assert!(report.passes(), "{:?} {:?}", j.basis().parities(), report.outer_symmetry.first());
        let forms = check_jordan_quasi_classical(&j).unwrap();
        assert!(forms.passes(), "{:?}", forms);
        let k = check_fk_condition(&j, &limits()).unwrap();
        assert!(k.k_vanishes && k.passes());
    }
}

#[test]
fn involution_jordan_reproduces_twisted_triple() {
    for (j, t) in involution_jordan_cases() {
        let lie = jordan_to_lie_triple(&j).unwrap();
        assert_eq!(lie.table(), t.table());
        assert!(check_triple_axioms(&lie, &limits()).unwrap().passes());
        assert!(check_form_conditions(&lie).unwrap().passes());
    }
}

#[test]
fn involution_jordan_half_identity() {
    // P = ½·Id: xyz = <x|y>z + <y|z>x, and the Lie triple is ex2_1
    let (b, g) = space(3, 0, Sign::Plus);
    let half = Matrix::identity(3).scale(&frac(1, 2));
    let j = example_2_4(b.clone(), g.clone(), Sign::Plus, &half, &frac(1, 4)).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                let mut expected = vec![int(0); 3];
                expected[z] += g.get(x, y);
                expected[x] += g.get(y, z);
                assert_eq!(j.product_basis(x, y, z), expected);
            }
        }
    }
    let lie = jordan_to_lie_triple(&j).unwrap();
    assert_eq!(lie.table(), example_2_1(b, g, Sign::Plus).unwrap().table());
}

#[test]
fn perturbed_p_breaks_condition_iii() {
    let (b, g) = space(3, 0, Sign::Plus);
    let id = Matrix::identity(3);
    let j = example_2_4(b.clone(), g.clone(), Sign::Plus, &id, &int(1)).unwrap();
    let mut p = id.clone();
    p.set(0, 1, int(1));
    let perturbed = GeneralTripleSystem::from_fn("perturbed", FkKind::Jordan, b, Sign::Minus, Sign::Plus, Some(g.clone()), |x, y, z| {
        let gp = g.gram() * &p;
        let mut out = vec![int(0); 3];
        for r in 0..3 {
            out[r] += g.get(x, y) * p.get(r, z) + g.get(y, z) * p.get(r, x);
        }
        out[z] += gp.get(x, y);
        out[x] += gp.get(y, z);
        out
    })
    .unwrap();
    assert!(check_jordan_quasi_classical(&j).unwrap().passes());
    assert!(!check_jordan_quasi_classical(&perturbed).unwrap().invariance.is_empty());
}

#[test]
fn nested_brackets_on_nilpotent_algebras() {
    for (kind, n, m) in [(ExampleKind::Ex1_3, 1, 1), (ExampleKind::Ex1_4, 1, 2), (ExampleKind::Ex1_3, 2, 1)] {
        let (a, g) = example_algebra(kind, n, m, &int(0), None).unwrap();
        for (c1, c2) in [(int(2), int(3)), (int(1), int(1)), (int(0), int(-1))] {
            for eps in [Sign::Plus, Sign::Minus] {
                let s = example_2_5(&a, Some(g.clone()), &c1, &c2, eps, -eps).unwrap();
                assert!(check_generalized_fk(&s, &limits()).unwrap().passes());
            }
        }
        let s = example_2_5(&a, Some(g.clone()), &int(1), &int(1), Sign::Minus, Sign::Plus).unwrap();
        assert_eq!(s.kind(), FkKind::Jordan);
        assert!(check_jordan(&s, &limits()).unwrap().passes(), "{kind}");
        assert!(check_jordan_quasi_classical(&s).unwrap().passes(), "{kind}");
        assert!(check_fk_condition(&s, &limits()).unwrap().k_vanishes);
        let lie = jordan_to_lie_triple(&s).unwrap();
        assert!(check_triple_axioms(&lie, &limits()).unwrap().passes());
        assert!(check_form_conditions(&lie).unwrap().passes());
        let unequal = example_2_5(&a, Some(g.clone()), &int(2), &int(3), Sign::Minus, Sign::Plus).unwrap();
        assert!(!check_jordan(&unequal, &limits()).unwrap().outer_symmetry.is_empty());
    }
}

#[test]
fn nested_brackets_need_l5_zero() {
    let (a, g) = example_algebra(ExampleKind::Ex1_1, 1, 0, &int(0), None).unwrap();
    let refused = example_2_5(&a, Some(g), &int(1), &int(1), Sign::Minus, Sign::Plus);
    assert!(matches!(refused, Err(Error::Precondition(_))));
}

#[test]
fn nested_brackets_lie_algebra_is_abelian() {
    let (a, g) = example_algebra(ExampleKind::Ex1_3, 1, 1, &int(0), None).unwrap();
    let s = example_2_5(&a, Some(g), &int(1), &int(1), Sign::Minus, Sign::Plus).unwrap();
    let m = jordan_lie_algebra(&s).unwrap();
    assert!(m.bracket_mismatches.is_empty());
    assert!(m.algebra.is_abelian());
    assert!(m.lie.passes());
    assert_eq!(m.m.span.dim(), 4);
    assert!(m.form_kernel.is_empty());
    assert!(m.is_certified());
}

#[test]
fn involution_jordan_lie_algebra_certified() {
    let (b, g) = space(3, 0, Sign::Plus);
    let j = example_2_4(b, g, Sign::Plus, &Matrix::identity(3), &int(1)).unwrap();
    let m = jordan_lie_algebra(&j).unwrap();
    assert!(m.bracket_mismatches.is_empty());
    assert!(m.is_certified(), "{:?}", m.refusal);
    for (j, _) in involution_jordan_cases() {
        let m = jordan_lie_algebra(&j).unwrap();
        assert!(m.bracket_mismatches.is_empty() && m.lie.passes() && m.form_well_defined);
    }
}

#[test]
fn form_product_satisfies_k_identity() {
    for eps in [Sign::Plus, Sign::Minus] {
        for delta in [Sign::Plus, Sign::Minus] {
            for (even, odd) in [(3, 0), (2, 2), (1, 2), (0, 2)] {
                // <x|y> = -ε(-1)^{xy}<y|x>: symmetry type -ε
                let (b, g) = match space_opt(even, odd, -eps) {
                    Some(s) => s,
                    None => continue,
                };
                let n = even + odd;
                let mut p = Matrix::identity(n);
                if n >= 1 {
                    p.set(0, 0, int(2));
                }
                let s = example_2_6(b.clone(), g.clone(), &Matrix::identity(n), eps, delta).unwrap();
                let report = check_fk_condition(&s, &limits()).unwrap();
                assert!(report.passes(), "ε={eps} δ={delta} {even}|{odd}");
                let s = example_2_6(b, g, &p, eps, delta);
                if let Ok(s) = s {
                    assert!(check_fk_condition(&s, &limits()).unwrap().passes(), "P ε={eps} δ={delta} {even}|{odd}");
                }
            }
        }
    }
}

fn space_opt(even: usize, odd: usize, delta: Sign) -> Option<(GradedBasis, BilinearForm)> {
    let anti = if delta == Sign::Plus { odd } else { even };
    (anti % 2 == 0).then(|| space(even, odd, delta))
}

#[test]
fn form_product_rejections() {
    let (b, g) = space(2, 0, Sign::Plus);
    let skew = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    assert!(matches!(example_2_6(b.clone(), g.clone(), &skew, Sign::Minus, Sign::Plus), Err(Error::Precondition(_))));
    // symmetric form requires ε = -1
    assert!(matches!(example_2_6(b, g, &Matrix::identity(2), Sign::Plus, Sign::Plus), Err(Error::FormViolation(_))));
}

#[test]
fn zero_product() {
    let basis = GradedBasis::numbered(vec![Parity::Even, Parity::Odd, Parity::Odd]);
    let z = GeneralTripleSystem::new("zero", FkKind::Jordan, basis, Sign::Minus, Sign::Plus, [], None).unwrap();
    assert!(check_generalized_fk(&z, &limits()).unwrap().passes());
    assert!(check_jordan(&z, &limits()).unwrap().passes());
    let k = check_fk_condition(&z, &limits()).unwrap();
    assert!(k.k_vanishes && k.passes());
    assert!(matches!(jordan_lie_algebra(&z), Err(Error::Precondition(_))));
    assert_eq!(jordan_to_lie_triple(&z).unwrap().table().is_zero(), true);
}
