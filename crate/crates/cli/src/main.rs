mod commands;
mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use superbracket::exact::parse_rational;
use superbracket::format::{EvaluatedRMatrixFile, LoadedTriple, RMatrixFile};
use superbracket::fk::GeneralTripleSystem;
use superbracket::report::CheckLimits;
use superbracket::ybe::{check_ybe, FamilyKind};

use commands::examples::{Example, ExampleArgs};
use commands::ybe::{FamilyArgs, YbeCheck};
use commands::{emit, Emitted};
use input::{algebra_file, read, sign, triple_file, write, CliError, CliResult};
use report::{Check, Report};

#[derive(Debug, Parser)]
#[command(name = "superbracket", version, about = "Exact certification of Lie superalgebras, triple systems and R-matrices")]
struct Cli {
    /// Print an aligned table instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Omit the timing field so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Lie,
    Triple,
    Fk,
    Jordan,
    Rmatrix,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full axiom and form suite on a file.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: VerifyKind,
        /// Grid degree for R-matrix files.
        #[arg(long)]
        grid_degree: Option<usize>,
    },
    /// Build a catalog example and write it to a file.
    Example {
        #[arg(value_enum)]
        kind: Example,
        #[command(flatten)]
        args: ExampleArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Basis of the invariant-form space and a sampled non-degenerate member.
    Forms { path: PathBuf },
    /// Quadratic Casimir of an algebra file carrying a form.
    Casimir { path: PathBuf },
    /// Lower central series and nilpotency.
    Series { path: PathBuf },
    /// The triple system `[[x,y],z]` of an algebra file with a form.
    TripleFromLie {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical Lie superalgebra `L₀ = V ⊕ M` of a triple system.
    Embed {
        path: PathBuf,
        /// Directory receiving `l0.json` and `m.json`.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Generalized Freudenthal–Kantor identity and K-condition.
    Fk {
        path: PathBuf,
        /// ε used to read a Lie-super triple file as an FK system.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lie superalgebra and Lie-super triple of a Jordan-super triple system.
    JordanLie {
        path: PathBuf,
        #[arg(long)]
        out_algebra: Option<PathBuf>,
        #[arg(long)]
        out_triple: Option<PathBuf>,
    },
    /// Build a θ-dependent R-matrix and check Yang–Baxter relations.
    Ybe {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(long)]
        base: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f2: Option<String>,
        /// remark3_2: diagonals of the commuting `J` matrices, `"1,2;3,4"`.
        #[arg(long, allow_hyphen_values = true)]
        diagonals: Option<String>,
        /// remark3_2: coefficient polynomials, `"0,1;1|1;0,1"`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long = "check", value_enum)]
        checks: Vec<YbeCheck>,
        #[arg(long)]
        grid_degree: Option<usize>,
        /// Write the R-matrix: polynomial entries, or evaluated with --theta.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, requires = "export")]
        theta: Option<String>,
    },
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: superbracket::Error| e.to_string())
}

fn general_or_lie(path: &Path, epsilon: Option<i64>) -> CliResult<GeneralTripleSystem> {
    match triple_file(path)? {
        LoadedTriple::General(g) => {
            if epsilon.is_some() {
                return Err(CliError::Usage(format!(
                    "{}: --epsilon applies to Lie-super triple files only",
                    path.display()
                )));
            }
            Ok(g)
        }
        LoadedTriple::Lie(t) => Ok(GeneralTripleSystem::from_triple(&t, sign(epsilon.unwrap_or(-1))?)),
    }
}

fn general_file(path: &Path) -> CliResult<GeneralTripleSystem> {
    match triple_file(path)? {
        LoadedTriple::General(g) => Ok(g),
        LoadedTriple::Lie(_) => Err(CliError::Usage(format!(
            "{}: no `kind` field; read it as an FK system with `fk --epsilon`",
            path.display()
        ))),
    }
}

fn verify_rmatrix(path: &Path, grid_degree: Option<usize>) -> CliResult<Report> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::File {
        path: path.display().to_string(),
        source: superbracket::Error::Format(e.to_string()),
    })?;
    let in_file = |source| CliError::File {
        path: path.display().to_string(),
        source,
    };
    if value.get("theta").is_some() {
        let file = EvaluatedRMatrixFile::parse(&text).map_err(in_file)?;
        let mut report = Report::new("verify", format!("rmatrix(N={})", file.dimension));
        let m = file.matrix().map_err(in_file)?;
        report.push(Check::new(
            "shape",
            m.rows() == file.dimension * file.dimension,
            json!({ "dimension": file.dimension, "theta": report::q(&file.theta) }),
        ));
        Ok(report)
    } else {
        let file = RMatrixFile::parse(&text).map_err(in_file)?;
        let r = file.build().map_err(in_file)?;
        let mut report = Report::new("verify", format!("rmatrix(N={})", file.dimension));
        report.push(Check::info("r_matrix", json!({ "dimension": r.dim(), "degree": r.degree() })));
        let v = check_ybe(&r, grid_degree);
        report.push(Check::new(
            "ybe",
            v.passes(),
            json!({ "grid": format!("0..={}", v.grid_bound), "points_checked": v.points_checked,
                    "first_failure": v.failure.as_ref().map(|f| json!({
                        "point": f.point.iter().map(report::q).collect::<Vec<_>>(),
                        "indices": f.indices,
                    })) }),
        ));
        Ok(report)
    }
}

fn export_rmatrix(report: &mut Report, r: &superbracket::ybe::RMatrix, path: &Path, theta: Option<&str>) -> CliResult<()> {
    let (text, same) = match theta {
        Some(t) => {
            let theta = parse_rational(t)?;
            let file = EvaluatedRMatrixFile::from_rmatrix(r, &theta);
            let text = file.to_json();
            let back = EvaluatedRMatrixFile::parse(&text)?;
            let same = back == file && back.matrix()? == r.eval(&theta);
            (text, same)
        }
        None => {
            let file = RMatrixFile::from_rmatrix(r);
            let text = file.to_json();
            let back = RMatrixFile::parse(&text)?.build()?;
            (text, back.poly_entries() == r.poly_entries())
        }
    };
    report.push(Check::new(
        "export.round_trip",
        same,
        json!({ "path": path.display().to_string(), "written": same }),
    ));
    if same {
        write(path, &text)?;
    }
    Ok(())
}

fn run(command: Command, limits: &CheckLimits) -> CliResult<Report> {
    Ok(match command {
        Command::Verify { path, kind, grid_degree } => match kind {
            VerifyKind::Lie => {
                let (a, g) = algebra_file(&path)?;
                commands::lie::verify(&a, g.as_ref())
            }
            VerifyKind::Triple => match triple_file(&path)? {
                LoadedTriple::Lie(t) => commands::triple::verify(&t, limits)?,
                LoadedTriple::General(_) => {
                    return Err(CliError::Usage(format!(
                        "{}: has a `kind` field; verify it with --kind fk or --kind jordan",
                        path.display()
                    )))
                }
            },
            VerifyKind::Fk => commands::fk::verify(&general_file(&path)?, false, limits)?,
            VerifyKind::Jordan => commands::fk::verify(&general_file(&path)?, true, limits)?,
            VerifyKind::Rmatrix => verify_rmatrix(&path, grid_degree)?,
        },
        Command::Example { kind, args, out } => commands::examples::run(kind, &args, &out, limits)?,
        Command::Forms { path } => commands::lie::forms(&algebra_file(&path)?.0),
        Command::Casimir { path } => {
            let (a, g) = algebra_file(&path)?;
            let g = g.ok_or_else(|| CliError::Usage(format!("{}: algebra file has no form", path.display())))?;
            commands::lie::casimir(&a, &g)
        }
        Command::Series { path } => commands::lie::series(&algebra_file(&path)?.0),
        Command::TripleFromLie { path, out } => {
            let (a, g) = algebra_file(&path)?;
            let g = g.ok_or_else(|| CliError::Usage(format!("{}: algebra file has no form", path.display())))?;
            let (t, mut report) = commands::triple::from_lie(&a, &g, limits)?;
            if let Some(out) = out {
                emit(&mut report, "output", &Emitted::Triple(t), Some(&out), limits)?;
            }
            report
        }
        Command::Embed { path, out_dir } => {
            let t = match triple_file(&path)? {
                LoadedTriple::Lie(t) => t,
                LoadedTriple::General(_) => {
                    return Err(CliError::Usage(format!("{}: embed takes a Lie-super triple file", path.display())))
                }
            };
            let (e, mut report) = commands::triple::embed(&t)?;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir).map_err(|source| CliError::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
                let l0 = Emitted::Algebra(e.l0().clone(), e.l0_form().clone());
                emit(&mut report, "l0_file", &l0, Some(&dir.join("l0.json")), limits)?;
                if e.m_dim() == 0 {
                    report.push(Check::info("m_file", json!({ "written": false, "reason": "M = 0" })));
                } else {
                    let m = Emitted::Algebra(e.m_algebra(), e.m_form());
                    emit(&mut report, "m_file", &m, Some(&dir.join("m.json")), limits)?;
                }
            }
            report
        }
        Command::Fk { path, epsilon, out } => {
            let g = general_or_lie(&path, epsilon)?;
            let mut report = commands::fk::fk(&g, limits)?;
            if let Some(out) = out {
                emit(&mut report, "output", &Emitted::General(g), Some(&out), limits)?;
            }
            report
        }
        Command::JordanLie { path, out_algebra, out_triple } => {
            let g = general_file(&path)?;
            let (j, lie, mut report) = commands::fk::jordan_lie(&g, limits)?;
            if let Some(out) = out_algebra {
                emit(&mut report, "algebra_file", &Emitted::Algebra(j.algebra, j.form), Some(&out), limits)?;
            }
            if let Some(out) = out_triple {
                emit(&mut report, "triple_file", &Emitted::Triple(lie), Some(&out), limits)?;
            }
            report
        }
        Command::Ybe {
            family,
            base,
            f,
            g,
            f1,
            f2,
            diagonals,
            coeffs,
            checks,
            grid_degree,
            export,
            theta,
        } => {
            let args = FamilyArgs {
                base,
                f,
                g,
                f1,
                f2,
                diagonals,
                coeffs,
            };
            let built = commands::ybe::build(family, &args)?;
            let mut report = commands::ybe::run(family, &built, &checks, grid_degree, limits)?;
            if let Some(path) = export {
                export_rmatrix(&mut report, &built.r, &path, theta.as_deref())?;
            }
            report
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = CheckLimits::from_env();
    let start = Instant::now();
    match run(cli.command, &limits) {
        Ok(mut report) => {
            if !cli.stable {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            if cli.human {
                print!("{}", report.to_human());
            } else {
                print!("{}", report.to_json());
            }
            if report.passes() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
