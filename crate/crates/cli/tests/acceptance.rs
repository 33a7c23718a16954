//! Acceptance criteria, one PASS/FAIL line each.

use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use superbracket::canonical::{build_l0, check_eq_2_14, verify_embedding};
use superbracket::exact::{frac, int, Matrix, Parity, Poly};
use superbracket::fk::{
    check_fk_condition, check_generalized_fk, check_jordan, check_jordan_quasi_classical, example_2_4, example_2_5,
    jordan_to_lie_triple, GeneralTripleSystem,
};
use superbracket::lie::{
    certify_quasi_classical, check_lie_super, derived_test, example_algebra, is_nilpotent, killing_form,
    lower_central_series, simple3, BilinearForm, ExampleKind, GradedAlgebra,
};
use superbracket::report::CheckLimits;
use superbracket::triple::{equivalences, example_2_1, example_2_2, trace_form, triple_from_lie, TripleSystem};
use superbracket::ybe::{
    build_r, check_commutation, check_eq_3_5, check_eq_3_8, check_ybe, lie_family, prop3_1, prop3_2, pure_g,
    remark3_3, LieProduct,
};
use superbracket::{GradedBasis, Sign};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn limits() -> CheckLimits {
    CheckLimits::default()
}

fn poly(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

fn ex(kind: ExampleKind, n: usize, m: usize, lambda: i64) -> (GradedAlgebra, BilinearForm) {
    example_algebra(kind, n, m, &int(lambda), None).unwrap()
}

/// Grade-block form: `diag(1, 2, …)` where symmetric, symplectic pairs
/// where antisymmetric.
fn space(even: usize, odd: usize, delta: Sign) -> Option<(GradedBasis, BilinearForm)> {
    let n = even + odd;
    let mut parities = vec![Parity::Even; even];
    parities.extend(vec![Parity::Odd; odd]);
    let mut gram = Matrix::zeros(n, n);
    for (start, size, symmetric) in [(0, even, delta == Sign::Plus), (even, odd, delta == Sign::Minus)] {
        if symmetric {
            for i in 0..size {
                gram.set(start + i, start + i, int(1 + i as i64));
            }
        } else {
            if size % 2 == 1 {
                return None;
            }
            for i in (0..size).step_by(2) {
                gram.set(start + i, start + i + 1, int(1));
                gram.set(start + i + 1, start + i, int(-1));
            }
        }
    }
    let form = BilinearForm::with_symmetry(gram, parities.clone(), delta).unwrap();
    Some((GradedBasis::numbered(parities), form))
}

/// `Str(ad e_j ad e_k)` straight from the ad matrices.
fn killing_oracle(a: &GradedAlgebra) -> Matrix {
    let n = a.dim();
    let ads: Vec<Matrix> = (0..n).map(|j| a.ad_matrix(j).unwrap()).collect();
    let mut k = Matrix::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            k.set(j, l, (&ads[j] * &ads[l]).supertrace(a.basis().parities()).unwrap());
        }
    }
    k
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for kind in [ExampleKind::Ex1_1, ExampleKind::Ex1_2, ExampleKind::Ex1_3, ExampleKind::Ex1_4] {
        let ms: &[usize] = if kind.uses_m() { &[1, 2] } else { &[0] };
        for n in 1..=3 {
            for &m in ms {
                for lambda in [0, 1, -2] {
                    if (kind == ExampleKind::Ex1_2 && n % 2 == 1) || (kind == ExampleKind::Ex1_4 && m % 2 == 1) {
                        continue;
                    }
                    let (a, g) = ex(kind, n, m, lambda);
                    ensure!(check_lie_super(&a).passes(), "{} fails the Lie checks", a.name());
                    ensure!(certify_quasi_classical(&a, &g).is_ok(), "{} does not certify", a.name());
                    count += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(10), "took {t:?}");
    Ok(format!("{count} algebras in {t:?}"))
}

fn criterion_2() -> Outcome {
    let (a, g) = ex(ExampleKind::Ex1_1, 1, 0, 2);
    let c = certify_quasi_classical(&a, &g).map_err(|e| e.to_string())?;
    let i = |name: &str| a.basis().index_of(name).unwrap();
    let expected = [
        ("e", "e", 2),
        ("e", "f", 1),
        ("f", "e", 1),
        ("x1", "y1", -1),
        ("y1", "x1", -1),
    ];
    for j in 0..a.dim() {
        for k in 0..a.dim() {
            let want = expected
                .iter()
                .find(|(x, y, _)| i(x) == j && i(y) == k)
                .map_or(0, |e| e.2);
            ensure!(c.get(j, k) == &int(want), "g^({j},{k}) = {}, expected {want}", c.get(j, k));
        }
    }
    ensure!(c.commutation_violation(&a).is_none(), "Casimir does not commute");
    Ok("Casimir coefficients match and commute with every generator".into())
}

fn criterion_3() -> Outcome {
    for (kind, n, m) in [(ExampleKind::Ex1_3, 1, 1), (ExampleKind::Ex1_3, 2, 2), (ExampleKind::Ex1_4, 1, 2), (ExampleKind::Ex1_4, 2, 2)] {
        let (a, _) = ex(kind, n, m, 0);
        let s = lower_central_series(&a);
        ensure!(!s.term(3).is_zero() && s.term(4).is_zero(), "{}: series {:?}", a.name(), s.dims());
        ensure!(is_nilpotent(&a) == (true, 3), "{}: {:?}", a.name(), is_nilpotent(&a));
    }
    for (kind, n) in [(ExampleKind::Ex1_1, 1), (ExampleKind::Ex1_1, 2), (ExampleKind::Ex1_2, 2)] {
        let (a, _) = ex(kind, n, 0, 1);
        ensure!(derived_test(&a), "{}: [L,L] condition fails", a.name());
        ensure!(!is_nilpotent(&a).0, "{} reported nilpotent", a.name());
    }
    Ok("ex1_3/ex1_4 nilpotent of length 3; ex1_1/ex1_2 not nilpotent".into())
}

fn criterion_4() -> Outcome {
    let (a, g) = ex(ExampleKind::Ex1_1, 1, 0, 0);
    let k = killing_form(&a);
    ensure!(k.gram() == &killing_oracle(&a), "Killing form differs from the ad-matrix oracle");
    ensure!(k.rank() == 1, "rank {}", k.rank());
    ensure!(certify_quasi_classical(&a, &k).is_err(), "degenerate Killing form certified");
    ensure!(certify_quasi_classical(&a, &g).is_ok(), "catalog form refused");
    Ok("Killing rank 1 refused, catalog form certified".into())
}

fn criterion_5() -> Outcome {
    let mut systems = Vec::new();
    for delta in [Sign::Plus, Sign::Minus] {
        for (even, odd) in [(3, 0), (4, 0), (5, 0), (1, 2), (2, 2), (2, 1), (0, 3), (0, 4), (3, 2)] {
            if let Some((b, g)) = space(even, odd, delta) {
                systems.push(example_2_1(b, g, delta).unwrap());
            }
        }
    }
    let (b, g) = space(4, 0, Sign::Plus).unwrap();
    let p = Matrix::diagonal(&[int(1), int(-1), int(1), int(-1)]);
    systems.push(example_2_2(b.clone(), g.clone(), Sign::Plus, &p, &int(1)).unwrap());
    systems.push(example_2_2(b, g, Sign::Plus, &Matrix::zeros(4, 4), &int(0)).unwrap());
    for t in &systems {
        let eq = equivalences(t).map_err(|e| e.to_string())?;
        ensure!(eq.verdicts() == [true; 3], "{} {:?}: {:?}", t.name(), t.parities(), eq.verdicts());
    }
    let (b, g) = space(3, 0, Sign::Plus).unwrap();
    let other = BilinearForm::new(Matrix::from_ints(&[&[1, 1, 0], &[1, 3, 0], &[0, 0, 1]]), vec![Parity::Even; 3]).unwrap();
    let perturbed = example_2_1(b, g, Sign::Plus).unwrap().with_form(Some(other)).unwrap();
    let eq = equivalences(&perturbed).map_err(|e| e.to_string())?;
    ensure!(eq.verdicts() == [false; 3], "perturbed system: {:?}", eq.verdicts());
    Ok(format!("{} systems pass all three; perturbed fails all three", systems.len()))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for (even, odd) in [(3, 0), (4, 0), (2, 2), (1, 2), (3, 2)] {
        let (b, g) = space(even, odd, Sign::Plus).unwrap();
        let n0 = b.super_dimension();
        let t = example_2_1(b, g.clone(), Sign::Plus).unwrap();
        let tf = trace_form(&t);
        ensure!(tf.form.gram() == &g.gram().scale(&int(n0 - 1)), "ex2_1 {even}|{odd}");
        ensure!(tf.left_supertrace.is_empty(), "Str L ≠ 0 on ex2_1 {even}|{odd}");
        checked += 1;
    }
    for (even, odd, diag) in [(4, 0, vec![1, -1, 1, -1]), (2, 2, vec![1, -1, -1, -1]), (3, 0, vec![1, 1, 1])] {
        let (b, g) = space(even, odd, Sign::Plus).unwrap();
        let p = Matrix::diagonal(&diag.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let tr_p = p.supertrace(b.parities()).unwrap();
        let n0 = b.super_dimension();
        let t = example_2_2(b, g.clone(), Sign::Plus, &p, &int(1)).unwrap();
        let tf = trace_form(&t);
        let expected = &g.gram().scale(&tr_p) + &(g.gram() * &p).scale(&int(n0 - 2));
        ensure!(tf.form.gram() == &expected, "ex2_2 {even}|{odd}");
        ensure!(tf.left_supertrace.is_empty(), "Str L ≠ 0 on ex2_2 {even}|{odd}");
        checked += 1;
    }
    for (kind, n, m) in [(ExampleKind::Ex1_1, 1, 0), (ExampleKind::Ex1_1, 2, 0), (ExampleKind::Ex1_3, 1, 1)] {
        let (a, g) = ex(kind, n, m, 0);
        let t = triple_from_lie(&a, &g).unwrap();
        let tf = trace_form(&t);
        ensure!(tf.form.gram() == &killing_oracle(&a), "ex2_3 on {}", a.name());
        ensure!(tf.left_supertrace.is_empty(), "Str L ≠ 0 on ex2_3 {}", a.name());
        checked += 1;
    }
    Ok(format!("{checked} trace forms equal their closed forms"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (b, _) = space(3, 0, Sign::Plus).unwrap();
    let identity = BilinearForm::new(Matrix::identity(3), b.parities().to_vec()).unwrap();
    let (a, h) = ex(ExampleKind::Ex1_1, 1, 0, 0);
    let systems = [example_2_1(b, identity, Sign::Plus).unwrap(), triple_from_lie(&a, &h).unwrap()];
    let mut dims = Vec::new();
    for t in &systems {
        let e = build_l0(t).map_err(|e| e.to_string())?;
        let l0 = e.l0();
        ensure!(check_lie_super(l0).passes(), "{}: L0 is not Lie", t.name());
        ensure!(certify_quasi_classical(l0, e.l0_form()).is_ok(), "{}: L0 does not certify", t.name());
        let n = t.dim();
        for v in 0..n {
            for m in n..l0.dim() {
                ensure!(e.l0_form().get(v, m) == &int(0), "{}: <M|V> ≠ 0", t.name());
            }
        }
        ensure!(check_eq_2_14(&e).passes(), "{}: generator invariance fails", t.name());
        ensure!(verify_embedding(&e).passes(), "{}: embedding report fails", t.name());
        dims.push(l0.dim());
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(5), "took {t:?}");
    Ok(format!("L0 dimensions {dims:?} in {t:?}"))
}

fn delta_one_catalog() -> Vec<TripleSystem> {
    let mut out = Vec::new();
    for (even, odd) in [(3, 0), (4, 0), (1, 2), (2, 2)] {
        let (b, g) = space(even, odd, Sign::Plus).unwrap();
        out.push(example_2_1(b, g, Sign::Plus).unwrap());
    }
    let (b, g) = space(4, 0, Sign::Plus).unwrap();
    let p = Matrix::diagonal(&[int(1), int(-1), int(1), int(-1)]);
    out.push(example_2_2(b, g, Sign::Plus, &p, &int(1)).unwrap());
    let (b, g) = space(2, 2, Sign::Plus).unwrap();
    let p = Matrix::diagonal(&[int(1), int(-1), int(-1), int(-1)]);
    out.push(example_2_2(b, g, Sign::Plus, &p, &int(1)).unwrap());
    for (kind, n, m) in [(ExampleKind::Ex1_1, 1, 0), (ExampleKind::Ex1_2, 2, 0), (ExampleKind::Ex1_3, 1, 1), (ExampleKind::Ex1_4, 1, 2)] {
        let (a, g) = ex(kind, n, m, 1);
        out.push(triple_from_lie(&a, &g).unwrap());
    }
    out
}

fn criterion_8() -> Outcome {
    let catalog = delta_one_catalog();
    for t in &catalog {
        let g = GeneralTripleSystem::from_triple(t, Sign::Minus);
        ensure!(check_generalized_fk(&g, &limits()).map_err(|e| e.to_string())?.passes(), "{} fails FK with ε = -1", t.name());
    }
    let mut jordan = Vec::new();
    for (kind, n, m) in [(ExampleKind::Ex1_3, 1, 1), (ExampleKind::Ex1_3, 2, 1), (ExampleKind::Ex1_4, 1, 2)] {
        let (a, g) = ex(kind, n, m, 0);
        for c in [int(1), frac(-3, 2)] {
            jordan.push(example_2_5(&a, Some(g.clone()), &c, &c, Sign::Minus, Sign::Plus).unwrap());
        }
    }
    for j in &jordan {
        ensure!(check_jordan(j, &limits()).map_err(|e| e.to_string())?.passes(), "{} fails the Jordan checks", j.name());
    }
    let mut reproduced = 0;
    for (even, odd, delta, diag) in [
        (4, 0, Sign::Plus, vec![1, -1, 1, -1]),
        (3, 0, Sign::Plus, vec![1, 1, 1]),
        (2, 2, Sign::Plus, vec![1, -1, -1, -1]),
        (2, 2, Sign::Minus, vec![1, 1, 1, 1]),
    ] {
        let (b, g) = space(even, odd, delta).unwrap();
        let p = Matrix::diagonal(&diag.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let j = example_2_4(b.clone(), g.clone(), delta, &p, &int(1)).unwrap();
        let lie = jordan_to_lie_triple(&j).map_err(|e| e.to_string())?;
        let expected = example_2_2(b, g, delta, &p, &int(1)).unwrap();
        ensure!(lie.table() == expected.table(), "ex2_4 {even}|{odd}: Lie triple differs from ex2_2");
        ensure!(check_jordan(&j, &limits()).map_err(|e| e.to_string())?.passes(), "ex2_4 {even}|{odd} not Jordan");
        ensure!(check_jordan_quasi_classical(&j).map_err(|e| e.to_string())?.passes(), "ex2_4 {even}|{odd} form");
        jordan.push(j);
        reproduced += 1;
    }
    for j in &jordan {
        let k = check_fk_condition(j, &limits()).map_err(|e| e.to_string())?;
        ensure!(k.k_vanishes && k.passes(), "{}: K does not vanish", j.name());
    }
    Ok(format!(
        "{} triples are FK at ε = -1; {} Jordan systems have K = 0; {reproduced} ex2_4 cases reproduce ex2_2",
        catalog.len(),
        jordan.len()
    ))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    for n in [1, 2] {
        let (a, g) = ex(ExampleKind::Ex1_1, n, 0, 1);
        for (f, gg) in [(poly(&[0, 1]), poly(&[1])), (poly(&[1, -2, 1]), poly(&[0, 3, 1]))] {
            let fam = prop3_1(&a, &g, &f, &gg).map_err(|e| e.to_string())?;
            let r = build_r(&fam).map_err(|e| e.to_string())?;
            let commute = check_commutation(&r, None);
            ensure!(commute.passes(), "(a) n={n}: commutation fails at {:?}", commute.failure);
            let ybe = check_ybe(&r, None);
            ensure!(ybe.passes(), "(a) n={n}: YBE fails at {:?}", ybe.failure);
            if r.degree() == 2 {
                ensure!(ybe.points_checked == 49 && commute.points_checked == 49, "(a) grid is not 7x7");
            }
            ensure!(r.dim() * r.dim() == (2 * n + 2).pow(2), "(a) R is not {0}x{0}", (2 * n + 2).pow(2));
        }
    }
    let ta = start.elapsed();
    ensure!(ta < Duration::from_secs(60), "(a) took {ta:?}");

    let (a, g) = ex(ExampleKind::Ex1_3, 1, 1, 0);
    let fam = prop3_2(&a, &g, &poly(&[0, 1]), &poly(&[2, 0, 1]), &poly(&[1, 1])).map_err(|e| e.to_string())?;
    ensure!(check_ybe(&build_r(&fam).unwrap(), None).passes(), "(b) prop3_2 fails YBE");

    let gpoly = poly(&[2, 1]);
    let fam = pure_g(a.basis().clone(), &g, &gpoly).map_err(|e| e.to_string())?;
    let r = build_r(&fam).unwrap();
    for t in 0..4 {
        let t = int(t);
        ensure!(r.eval(&t) == Matrix::identity(r.dim() * r.dim()).scale(&gpoly.eval(&t)), "(c) R ≠ g·Id");
    }
    ensure!(check_ybe(&r, None).passes(), "(c) pure g fails YBE");

    let (s, h) = simple3();
    ensure!(prop3_1(&s, &h, &poly(&[0, 1]), &poly(&[1])).is_err(), "(d) simple3 accepted as prop3_1");
    let fam = lie_family("simple3", &s, &h, &[(LieProduct::LeftNested, poly(&[0, 1]))], Some(&poly(&[1]))).unwrap();
    ensure!(!check_eq_3_8(&fam).passes(), "(d) simple3 passes the triple-product commutation");
    ensure!(!check_commutation(&build_r(&fam).unwrap(), None).passes(), "(d) simple3 passes commutation");

    for (n, m) in [(1, 1), (2, 1)] {
        let (a, g) = ex(ExampleKind::Ex1_3, n, m, 0);
        let fam = remark3_3(&a, &g, &poly(&[1, 2]), &poly(&[0, 0, 1])).map_err(|e| e.to_string())?;
        let rep = check_eq_3_5(&fam, None).map_err(|e| e.to_string())?;
        ensure!(rep.passes() && rep.both_sides_vanish, "(e) remark3_3 on ex1_3 n={n} m={m}");
    }
    Ok(format!("(a) in {ta:?}; (b)-(e) as expected"))
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_superbracket")
}

fn sb(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = sb(args);
    ensure!(
        out.status.code() == Some(0),
        "`{}` exited {:?}: {}",
        args.join(" "),
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    Ok(out.stdout)
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| dir.path().join(name).display().to_string();
    let mut commands: Vec<Vec<String>> = Vec::new();
    let mut emitted: Vec<(String, &str)> = Vec::new();
    let examples: &[(&str, &[&str], &str)] = &[
        ("ex1_1", &["--n", "2", "--lambda", "1"], "lie"),
        ("ex1_2", &["--n", "2"], "lie"),
        ("ex1_3", &["--n", "2", "--m", "1"], "lie"),
        ("ex1_4", &["--n", "1", "--m", "2"], "lie"),
        ("simple3", &[], "lie"),
        ("ex2_1", &["--n", "2", "--m", "2"], "triple"),
        ("ex2_1", &["--n", "2", "--delta", "-1"], "triple"),
        ("ex2_2", &["--n", "2", "--m", "2"], "triple"),
        ("ex2_3", &["--base", "ex1_1:n=1"], "triple"),
        ("ex2_4", &["--n", "2", "--m", "2"], "jordan"),
        ("ex2_5", &["--base", "ex1_4:n=1,m=2"], "jordan"),
        ("ex2_6", &["--n", "2", "--m", "2"], "fk"),
    ];
    for (i, (kind, args, verify)) in examples.iter().enumerate() {
        let out = p(&format!("{kind}_{i}.json"));
        let mut c = vec!["example".to_string(), kind.to_string()];
        c.extend(args.iter().map(|s| s.to_string()));
        c.extend(["--out".to_string(), out.clone()]);
        commands.push(c);
        emitted.push((out, verify));
    }
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    commands.push(s(&["triple-from-lie", &p("ex1_1_0.json"), "--out", &p("lie_triple.json")]));
    emitted.push((p("lie_triple.json"), "triple"));
    commands.push(s(&["embed", &p("ex2_1_5.json"), "--out-dir", &p("embedded")]));
    emitted.push((p("embedded/l0.json"), "lie"));
    emitted.push((p("embedded/m.json"), "lie"));
    commands.push(s(&["fk", &p("lie_triple.json"), "--out", &p("fk.json")]));
    emitted.push((p("fk.json"), "fk"));
    commands.push(s(&["jordan-lie", &p("ex2_4_9.json"), "--out-algebra", &p("jl_alg.json"), "--out-triple", &p("jl_triple.json")]));
    emitted.push((p("jl_alg.json"), "lie"));
    emitted.push((p("jl_triple.json"), "triple"));
    commands.push(s(&["ybe", "--family", "prop3_1", "--base", "ex1_1:n=1", "--f", "0,1", "--g", "1", "--export", &p("r.json")]));
    emitted.push((p("r.json"), "rmatrix"));
    commands.push(s(&["ybe", "--family", "remark3_3", "--base", "ex1_3", "--f1", "1,2", "--f2", "0,0,1", "--check", "eq3_5", "--export", &p("r_half.json"), "--theta", "1/2"]));
    emitted.push((p("r_half.json"), "rmatrix"));
    commands.push(s(&["forms", &p("ex1_1_0.json")]));
    commands.push(s(&["casimir", &p("ex1_1_0.json")]));
    commands.push(s(&["series", &p("ex1_3_2.json")]));

    let mut reports = 0;
    for c in &commands {
        let mut args: Vec<&str> = vec!["--stable"];
        args.extend(c.iter().map(String::as_str));
        let first = run_ok(&args)?;
        let second = run_ok(&args)?;
        ensure!(first == second, "`{}` is not deterministic", c.join(" "));
        reports += 1;
    }
    for (file, kind) in &emitted {
        ensure!(Path::new(file).is_file(), "{file} was not written");
        let first = run_ok(&["--stable", "verify", file, "--kind", kind])?;
        let second = run_ok(&["--stable", "verify", file, "--kind", kind])?;
        ensure!(first == second, "verify {file} is not deterministic");
        reports += 1;
    }
    Ok(format!("{} emitted files re-verify; {reports} reports byte-identical across runs", emitted.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("example catalog soundness", criterion_1),
        ("Casimir round trip", criterion_2),
        ("nilpotency classification", criterion_3),
        ("degenerate Killing separation", criterion_4),
        ("invariance equivalences", criterion_5),
        ("trace forms", criterion_6),
        ("canonical embedding", criterion_7),
        ("FK and Jordan suite", criterion_8),
        ("Yang-Baxter certification", criterion_9),
        ("round trip and determinism", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS criterion {}: {name}: {detail}", k + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: panicked", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
