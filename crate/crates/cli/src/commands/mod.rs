pub mod examples;
pub mod fk;
pub mod lie;
pub mod triple;
pub mod ybe;

use std::path::Path;

use serde_json::json;
use superbracket::fk::GeneralTripleSystem;
use superbracket::format::{algebra_to_json, general_to_json, load_algebra, load_triple, triple_to_json, LoadedTriple};
use superbracket::lie::{BilinearForm, GradedAlgebra};
use superbracket::report::CheckLimits;
use superbracket::triple::TripleSystem;

use crate::input::{write, CliResult};
use crate::report::{Check, Report, Verdict};

/// A structure a command writes to disk.
#[derive(Debug, Clone)]
pub enum Emitted {
    Algebra(GradedAlgebra, BilinearForm),
    Triple(TripleSystem),
    General(GeneralTripleSystem),
}

impl Emitted {
    pub fn dim(&self) -> usize {
        match self {
            Emitted::Algebra(a, _) => a.dim(),
            Emitted::Triple(t) => t.dim(),
            Emitted::General(g) => g.dim(),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Emitted::Algebra(a, _) => a.name(),
            Emitted::Triple(t) => t.name(),
            Emitted::General(g) => g.name(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Emitted::Algebra(a, g) => algebra_to_json(a, Some(g)),
            Emitted::Triple(t) => triple_to_json(t),
            Emitted::General(g) => general_to_json(g),
        }
    }

    /// Reads `text` back, compares it with `self` and runs the full
    /// verification suite of its kind on what was read.
    fn reverify(&self, text: &str, limits: &CheckLimits) -> CliResult<(bool, Vec<Check>)> {
        Ok(match self {
            Emitted::Algebra(a, g) => {
                let (b, h) = load_algebra(text)?;
                let same = &b == a && h.as_ref() == Some(g);
                (same, lie::lie_checks(&b, h.as_ref()))
            }
            Emitted::Triple(t) => match load_triple(text)? {
                LoadedTriple::Lie(u) => {
                    let same = &u == t;
                    (same, triple::triple_checks(&u, limits)?)
                }
                LoadedTriple::General(_) => (false, Vec::new()),
            },
            Emitted::General(g) => match load_triple(text)? {
                LoadedTriple::General(h) => {
                    let same = &h == g;
                    (same, fk::general_checks(&h, limits)?)
                }
                LoadedTriple::Lie(_) => (false, Vec::new()),
            },
        })
    }
}

fn labelled(label: &str, name: &str) -> String {
    if label.is_empty() {
        name.to_string()
    } else {
        format!("{label}.{name}")
    }
}

/// Serializes `item`, re-verifies the text and records the outcome in
/// `report`; the file is written only when everything passes.
pub fn emit(
    report: &mut Report,
    label: &str,
    item: &Emitted,
    path: Option<&Path>,
    limits: &CheckLimits,
) -> CliResult<bool> {
    let text = item.to_json();
    let (same, checks) = item.reverify(&text, limits)?;
    let ok = same && checks.iter().all(|c| c.verdict != Verdict::Fail);
    report.push(Check::new(
        &labelled(label, "round_trip"),
        same,
        json!({ "path": path.map(|p| p.display().to_string()), "written": ok && path.is_some() }),
    ));
    for mut c in checks {
        c.name = labelled(label, &c.name);
        report.push(c);
    }
    if ok {
        if let Some(p) = path {
            write(p, &text)?;
        }
    }
    Ok(ok)
}
