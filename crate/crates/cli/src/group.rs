use std::path::{Path, PathBuf};

use clap::Subcommand;
use serde_json::json;

use abtqft::fgab::{pullback, smith_normal_form, GroupMorphism, IntMatrix};

use crate::input::{CliError, Inputs};
use crate::report::{coords, Report};
use crate::workspace::Workspace;

#[derive(Subcommand)]
pub enum GroupCmd {
    /// Smith normal form `U M V = D` of an integer matrix.
    Smith { matrix: PathBuf },
    /// Kernel of a morphism, with generators in source coordinates.
    Kernel { morphism: PathBuf },
    /// Fiber product of `f: X → Z` and `g: Y → Z`.
    Pullback { f: PathBuf, g: PathBuf },
    /// Whether a morphism is an isomorphism.
    Iso { morphism: PathBuf },
}

/// Columns of an inclusion, each with its first nonzero entry positive.
pub fn generators(incl: &IntMatrix) -> Vec<Vec<i64>> {
    incl.columns()
        .into_iter()
        .map(|c| match c.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => c.iter().map(|y| -y).collect(),
            _ => c,
        })
        .collect()
}

pub fn describe(structure: &str, gens: &[Vec<i64>]) -> String {
    match gens {
        [] => structure.to_string(),
        [g] => format!("{structure}, gen {}", coords(g)),
        _ => format!(
            "{structure}, gens {}",
            gens.iter().map(|g| coords(g)).collect::<Vec<_>>().join(" ")
        ),
    }
}

fn morphism_file(inputs: &mut Inputs, path: &Path) -> Result<GroupMorphism, CliError> {
    let doc = inputs.load(path)?;
    let ws = Workspace::load(&[&doc])?;
    Ok(ws.main_morphism(&doc)?)
}

pub fn run(cmd: GroupCmd, inputs: &mut Inputs) -> Result<Report, CliError> {
    let mut r = Report::default();
    match cmd {
        GroupCmd::Smith { matrix } => {
            let doc = inputs.load(&matrix)?;
            let root = doc.root();
            let (rows_node, cols) = if root.value.is_array() {
                (root.clone(), None)
            } else {
                let cols = root.opt("columns").map(|c| c.usize()).transpose()?;
                (root.get("matrix")?, cols)
            };
            let rows = rows_node.int_rows(cols)?;
            let cols = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
            let m = IntMatrix::from_rows(cols, &rows).ok_or_else(|| rows_node.err("ragged matrix"))?;
            let s = smith_normal_form(&m);
            let diag = s.diagonal();
            r.line(format!(
                "D = diag({})",
                diag.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ))
            .line(format!("U = {:?}", s.u.row_vecs()))
            .line(format!("V = {:?}", s.v.row_vecs()))
            .line(format!("rank = {}", s.rank()));
            r.set("diagonal", diag)
                .set("rank", s.rank())
                .set("u", json!(s.u.row_vecs()))
                .set("v", json!(s.v.row_vecs()));
        }
        GroupCmd::Kernel { morphism } => {
            let phi = morphism_file(inputs, &morphism)?;
            let (k, incl) = phi.kernel();
            let gens = generators(incl.matrix());
            r.line(format!("ker ≅ {}", describe(&k.structure(), &gens)));
            r.set("structure", k.structure()).set("generators", json!(gens));
        }
        GroupCmd::Pullback { f, g } => {
            let f = morphism_file(inputs, &f)?;
            let g = morphism_file(inputs, &g)?;
            let (p, pr1, pr2) = pullback(&f, &g).map_err(|e| {
                CliError::Compute(format!("{e}: f and g must share their target"))
            })?;
            let gens = generators(&pr1.matrix().vstack(pr2.matrix()));
            r.line(format!("P ≅ {}", describe(&p.structure(), &gens)));
            r.set("structure", p.structure()).set("generators", json!(gens));
        }
        GroupCmd::Iso { morphism } => {
            let phi = morphism_file(inputs, &morphism)?;
            let iso = phi.is_isomorphism();
            r.line(iso.to_string());
            r.set("isomorphism", iso)
                .set("injective", phi.is_injective())
                .set("surjective", phi.is_surjective());
        }
    }
    Ok(r)
}
