use std::path::Path;

use clap::{Args, ValueEnum};
use serde_json::json;
use superbracket::exact::{parse_rational, Rational};
use superbracket::fk::{example_2_4, example_2_5, example_2_6};
use superbracket::lie::{simple3, ExampleKind};
use superbracket::report::CheckLimits;
use superbracket::triple::{example_2_1, example_2_2, triple_from_lie};
use superbracket::Sign;

use super::{emit, Emitted};
use crate::input::{base_algebra, catalog_algebra, sign, standard_involution, standard_space, CliResult};
use crate::report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    #[value(name = "ex1_1")]
    Ex1_1,
    #[value(name = "ex1_2")]
    Ex1_2,
    #[value(name = "ex1_3")]
    Ex1_3,
    #[value(name = "ex1_4")]
    Ex1_4,
    /// The simple 3-dimensional Lie algebra with the identity form.
    Simple3,
    /// `<y|z>x - δ<x|z>y` on an `n|m` space.
    #[value(name = "ex2_1")]
    Ex2_1,
    /// ex2_1 twisted by a diagonal involution `P`.
    #[value(name = "ex2_2")]
    Ex2_2,
    /// `[[x,y],z]` on `--base`.
    #[value(name = "ex2_3")]
    Ex2_3,
    /// Jordan product built from a diagonal involution `P`.
    #[value(name = "ex2_4")]
    Ex2_4,
    /// `c₁[x,[y,z]] + c₂[[x,y],z]` on `--base`.
    #[value(name = "ex2_5")]
    Ex2_5,
    /// `<y|Pz>x` on an `n|m` space.
    #[value(name = "ex2_6")]
    Ex2_6,
}

#[derive(Debug, Clone, Args)]
pub struct ExampleArgs {
    /// Algebra parameter `n`; even dimension for the space examples.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Algebra parameter `m`; odd dimension for the space examples.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub delta: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<i64>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub c1: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub c2: String,
    /// Base algebra for ex2_3 and ex2_5.
    #[arg(long)]
    pub base: Option<String>,
}

fn space(args: &ExampleArgs, symmetry: Sign) -> CliResult<(superbracket::GradedBasis, superbracket::lie::BilinearForm)> {
    standard_space(args.n, args.m.unwrap_or(0), symmetry)
}

pub fn build(kind: Example, args: &ExampleArgs) -> CliResult<Emitted> {
    let delta = sign(args.delta)?;
    let lambda = parse_rational(&args.lambda)?;
    let catalog = |k: ExampleKind| -> CliResult<Emitted> {
        let (a, g) = catalog_algebra(k, args.n, args.m, &lambda)?;
        Ok(Emitted::Algebra(a, g))
    };
    let involution = |symmetry: Sign| standard_involution(args.n, args.m.unwrap_or(0), symmetry);
    let one = Rational::from_integer(1.into());
    Ok(match kind {
        Example::Ex1_1 => catalog(ExampleKind::Ex1_1)?,
        Example::Ex1_2 => catalog(ExampleKind::Ex1_2)?,
        Example::Ex1_3 => catalog(ExampleKind::Ex1_3)?,
        Example::Ex1_4 => catalog(ExampleKind::Ex1_4)?,
        Example::Simple3 => {
            let (a, g) = simple3();
            Emitted::Algebra(a, g)
        }
        Example::Ex2_1 => {
            let (b, g) = space(args, delta)?;
            Emitted::Triple(example_2_1(b, g, delta)?)
        }
        Example::Ex2_2 => {
            let (b, g) = space(args, delta)?;
            Emitted::Triple(example_2_2(b, g, delta, &involution(delta), &one)?)
        }
        Example::Ex2_3 => {
            let (a, g) = base_algebra(args.base.as_deref().unwrap_or("ex1_1:n=1"))?;
            Emitted::Triple(triple_from_lie(&a, &g)?)
        }
        Example::Ex2_4 => {
            let (b, g) = space(args, delta)?;
            Emitted::General(example_2_4(b, g, delta, &involution(delta), &one)?)
        }
        Example::Ex2_5 => {
            let (a, g) = base_algebra(args.base.as_deref().unwrap_or("ex1_3:n=1,m=1"))?;
            let epsilon = match args.epsilon {
                Some(e) => sign(e)?,
                None => -delta,
            };
            let (c1, c2) = (parse_rational(&args.c1)?, parse_rational(&args.c2)?);
            Emitted::General(example_2_5(&a, Some(g), &c1, &c2, epsilon, delta)?)
        }
        Example::Ex2_6 => {
            let epsilon = sign(args.epsilon.unwrap_or(-1))?;
            let (b, g) = space(args, -epsilon)?;
            Emitted::General(example_2_6(b, g, &involution(-epsilon), epsilon, delta)?)
        }
    })
}

/// Builds the example and writes it to `out` once the serialized file
/// has been read back and verified.
pub fn run(kind: Example, args: &ExampleArgs, out: &Path, limits: &CheckLimits) -> CliResult<Report> {
    let item = build(kind, args)?;
    let mut report = Report::new("example", item.name());
    report.push(Check::info("dimension", json!(item.dim())));
    emit(&mut report, "", &item, Some(out), limits)?;
    Ok(report)
}
