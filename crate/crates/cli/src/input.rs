use std::fs;
use std::path::Path;

use superbracket::exact::{int, parse_rational, Matrix, Parity, Poly, Rational};
use superbracket::format::{load_algebra, load_triple, LoadedTriple};
use superbracket::lie::{example_algebra, simple3, standard_symplectic, BilinearForm, ExampleKind, GradedAlgebra};
use superbracket::{Error, GradedBasis, Sign};
use thiserror::Error as ThisError;

/// Failures that stop a command before any verdict: exit code 2.
#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File { path: String, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn in_file<T>(path: &Path, r: superbracket::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

pub fn algebra_file(path: &Path) -> CliResult<(GradedAlgebra, Option<BilinearForm>)> {
    let text = read(path)?;
    in_file(path, load_algebra(&text))
}

pub fn triple_file(path: &Path) -> CliResult<LoadedTriple> {
    let text = read(path)?;
    in_file(path, load_triple(&text))
}

/// Algebra with a form: a catalog entry such as `ex1_1:n=1,lambda=2`,
/// `simple3`, or the path of an algebra file carrying a form.
pub fn base_algebra(text: &str) -> CliResult<(GradedAlgebra, BilinearForm)> {
    let path = Path::new(text);
    if text.ends_with(".json") || path.is_file() {
        let (a, g) = algebra_file(path)?;
        let g = g.ok_or_else(|| CliError::Usage(format!("{text}: algebra file has no form")))?;
        return Ok((a, g));
    }
    let (kind, params) = text.split_once(':').unwrap_or((text, ""));
    if kind == "simple3" {
        if !params.is_empty() {
            return Err(CliError::Usage("simple3 takes no parameters".into()));
        }
        return Ok(simple3());
    }
    let kind: ExampleKind = kind.parse()?;
    let (mut n, mut m, mut lambda) = (1usize, None, int(0));
    for item in params.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=value in {text:?}, got {item:?}")))?;
        match key.trim() {
            "n" => n = parse_count(value)?,
            "m" => m = Some(parse_count(value)?),
            "lambda" => lambda = parse_rational(value)?,
            other => return Err(CliError::Usage(format!("unknown parameter {other:?} in {text:?}"))),
        }
    }
    catalog_algebra(kind, n, m, &lambda)
}

/// Catalog algebra; `m` defaults to the smallest admissible value.
pub fn catalog_algebra(
    kind: ExampleKind,
    n: usize,
    m: Option<usize>,
    lambda: &Rational,
) -> CliResult<(GradedAlgebra, BilinearForm)> {
    let m = match m {
        Some(m) => m,
        None if !kind.uses_m() => 0,
        None if kind == ExampleKind::Ex1_4 => 2,
        None => 1,
    };
    Ok(example_algebra(kind, n, m, lambda, None)?)
}

fn parse_count(s: &str) -> CliResult<usize> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("expected a nonnegative integer, got {s:?}")))
}

pub fn poly(s: &str) -> CliResult<Poly> {
    Ok(Poly::parse(s)?)
}

pub fn required_poly(name: &str, value: &Option<String>) -> CliResult<Poly> {
    match value {
        Some(s) => poly(s),
        None => Err(CliError::Usage(format!("this family needs --{name}"))),
    }
}

pub fn sign(v: i64) -> CliResult<Sign> {
    Ok(Sign::from_int(v)?)
}

/// `even|odd` graded space `e1, …` with a non-degenerate form of the given
/// symmetry: `diag(1, 2, …)` on the block where it is symmetric, standard
/// symplectic where it is antisymmetric.
pub fn standard_space(even: usize, odd: usize, symmetry: Sign) -> CliResult<(GradedBasis, BilinearForm)> {
    if even + odd == 0 {
        return Err(CliError::Usage("the space needs at least one basis element".into()));
    }
    let mut parities = vec![Parity::Even; even];
    parities.extend(vec![Parity::Odd; odd]);
    let n = even + odd;
    let mut gram = Matrix::zeros(n, n);
    let blocks = [(0, even, symmetry == Sign::Plus), (even, odd, symmetry == Sign::Minus)];
    for (start, size, symmetric) in blocks {
        if size == 0 {
            continue;
        }
        if symmetric {
            for i in 0..size {
                gram.set(start + i, start + i, int(1 + i as i64));
            }
        } else {
            let omega = standard_symplectic(size)?;
            for i in 0..size {
                for j in 0..size {
                    gram.set(start + i, start + j, omega.get(i, j).clone());
                }
            }
        }
    }
    let form = BilinearForm::with_symmetry(gram, parities.clone(), symmetry)?;
    Ok((GradedBasis::numbered(parities), form))
}

/// Diagonal `P` with `P² = Id` that is self-adjoint for
/// [`standard_space`]: alternating `±1` on diagonal blocks, `Id` on
/// symplectic ones.
pub fn standard_involution(even: usize, odd: usize, symmetry: Sign) -> Matrix {
    let mut diag: Vec<Rational> = Vec::with_capacity(even + odd);
    for (size, symmetric) in [(even, symmetry == Sign::Plus), (odd, symmetry == Sign::Minus)] {
        for i in 0..size {
            diag.push(if symmetric && i % 2 == 1 { int(-1) } else { int(1) });
        }
    }
    Matrix::diagonal(&diag)
}

/// `"1,2;3,4"`: rows separated by `;`, entries by `,`.
pub fn diagonal_list(s: &str) -> CliResult<Vec<Vec<Rational>>> {
    s.split(';')
        .map(|row| row.split(',').map(|x| Ok(parse_rational(x)?)).collect())
        .collect()
}

/// `"0,1;1|1;0,1"`: rows separated by `|`, polynomials by `;`.
pub fn poly_matrix(s: &str) -> CliResult<Vec<Vec<Poly>>> {
    s.split('|').map(|row| row.split(';').map(poly).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_specs() {
        let (a, _) = base_algebra("ex1_1:n=2,lambda=-2").unwrap();
        assert_eq!(a.dim(), 6);
        let (a, _) = base_algebra("ex1_3").unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(base_algebra("simple3").unwrap().0.dim(), 3);
        assert!(base_algebra("ex1_1:k=2").is_err());
        assert!(base_algebra("ex9").is_err());
    }

    #[test]
    fn spaces_certify_their_involution() {
        for (even, odd, s) in [(3, 0, Sign::Plus), (2, 2, Sign::Plus), (2, 2, Sign::Minus), (0, 3, Sign::Minus)] {
            let (b, g) = standard_space(even, odd, s).unwrap();
            let p = standard_involution(even, odd, s);
            assert_eq!(b.len(), even + odd);
            assert_eq!(g.gram() * &p, &p.transpose() * g.gram());
            assert_eq!(&p * &p, Matrix::identity(even + odd));
        }
        assert!(standard_space(1, 0, Sign::Minus).is_err());
    }

    #[test]
    fn list_syntax() {
        assert_eq!(diagonal_list("1,2;3,-4").unwrap()[1], vec![int(3), int(-4)]);
        let f = poly_matrix("0,1;1|1;0,1").unwrap();
        assert_eq!(f[0][0], Poly::theta());
        assert_eq!(f[1][0], Poly::from_ints(&[1]));
    }
}
