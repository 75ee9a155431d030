//! `bnr` subcommands.
//!
//! A ψ scene is `{"components": [...]}` or a single component
//! `{"m3", "eta", "w4", "nabla"}` of descriptors. An SU scene is
//! `{"components": [{"boundary", "filling"}, ...]}` or one component, with an
//! optional `alternatives` list of fillings for `--certify`. A boundary is
//! `{"mesh", "connection", "lifts"}` with `connection` either `"trivial"` or a
//! connection object; a filling is `{"mesh", "connection"}` with `connection`
//! either `"tangent"` or a connection object.

use std::path::PathBuf;
use std::sync::Arc;

use clap::Subcommand;
use serde::de::DeserializeOwned;
use serde_json::json;

use abtqft::invariants::{
    cs_su2_quadrature, psi, psi_certified, s3_volume, su_psi, su_psi_certified, validate_table, BnrScene,
    Closed4Entry, Closed4Table, InvariantError, InvariantResult, Providers, SceneComponent, SuBoundary, SuComponent,
    SuFilling, SuScene, DEFAULT_REFINEMENT, PSI_CONVENTION, SU_CONVENTION,
};
use abtqft::discrete::LatticeConnection;

use crate::geometry::{connection, mesh_ref};
use crate::input::{compute, CliError, Doc, InputError, Inputs, Node};
use crate::report::{f12, j12, Report};

#[derive(Subcommand)]
pub enum BnrCmd {
    /// The mod-24 invariant of a scene.
    Psi {
        scene: PathBuf,
        /// Recompute with every alternative bounding datum and check the differences.
        #[arg(long)]
        certify: bool,
        /// Characteristic-number table; defaults to the shipped one.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Quadrature refinement for the S³ integral.
        #[arg(long, default_value_t = DEFAULT_REFINEMENT)]
        refine: usize,
    },
    /// The mod-2 invariant of an SU scene.
    Su {
        scene: PathBuf,
        /// Evaluate every listed filling and check that differences are even.
        #[arg(long)]
        certify: bool,
    },
    /// Chern–Simons integral of the Maurer–Cartan form over S³.
    Cs {
        #[arg(long, default_value_t = DEFAULT_REFINEMENT)]
        refine: usize,
    },
    /// Characteristic-number table.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Subcommand)]
pub enum TableCmd {
    /// Check every entry; defaults to the shipped table.
    Validate { file: Option<PathBuf> },
}

/// Typed deserialization that reports the JSON path of the first error.
fn typed<T: DeserializeOwned>(node: &Node) -> Result<T, InputError> {
    serde_path_to_error::deserialize(node.value.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let mut err = node.err(e.inner().to_string());
        if inner != "." {
            err.path = format!("{}.{}", node.path, inner);
        }
        err
    })
}

fn load_table(inputs: &mut Inputs, path: Option<&PathBuf>) -> Result<Option<(Doc, Vec<Closed4Entry>)>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let doc = inputs.load(path)?;
    let entries: Vec<Closed4Entry> = typed(&doc.root())?;
    Ok(Some((doc, entries)))
}

fn result_lines(r: &mut Report, res: &InvariantResult) {
    r.lines.extend(res.to_string().lines().map(String::from));
    r.set("raw", j12(res.raw))
        .set("int", res.integer_value)
        .set("modulus", res.modulus)
        .set("residue", res.residue)
        .set("convention", res.convention.clone());
    if let Some(c) = &res.certificate {
        r.set("certificate", json!(c));
    }
}

/// Descriptor problems are input errors; anything later is a computation error.
fn classify(e: InvariantError, node: &Node) -> CliError {
    let field = match &e {
        InvariantError::NotSpin(_) => Some("w4"),
        InvariantError::UnknownDescriptor(m) => ["m3", "eta", "w4", "nabla"]
            .into_iter()
            .find(|f| m.starts_with(&format!("{f} "))),
        InvariantError::Descriptor(_) | InvariantError::Incompatible(_) => None,
        _ => return compute(e),
    };
    let mut err = node.err(e.to_string());
    if let Some(f) = field {
        err.path = format!("{}.{f}", err.path);
    }
    CliError::Input(err)
}

fn psi_cmd(inputs: &mut Inputs, scene: PathBuf, certify: bool, table: Option<PathBuf>, refine: usize) -> Result<Report, CliError> {
    if refine == 0 {
        return Err(CliError::Input(InputError {
            file: "<command line>".into(),
            path: "--refine".into(),
            message: "refinement must be at least 1".into(),
        }));
    }
    let doc = inputs.load(&scene)?;
    let table = match load_table(inputs, table.as_ref())? {
        Some((tdoc, entries)) => Closed4Table::new(entries).map_err(|e| tdoc.root().err(e.to_string()))?,
        None => Closed4Table::builtin(),
    };
    let providers = Providers::new(Arc::new(table), refine);
    let root = doc.root();
    let (scene, nodes) = match root.opt("components") {
        Some(list) => {
            let s: BnrScene = typed(&root)?;
            (s, list.items()?)
        }
        None => {
            let c: SceneComponent = typed(&root)?;
            (BnrScene::single(c), vec![root.clone()])
        }
    };
    for (c, node) in scene.components.iter().zip(&nodes) {
        providers.evaluate(c).map_err(|e| classify(e, node))?;
    }
    let res = if certify {
        psi_certified(&providers, &scene)
    } else {
        psi(&providers, &scene)
    }
    .map_err(|e| classify(e, &root))?;
    let mut r = Report::default();
    result_lines(&mut r, &res);
    r.conventions.push(PSI_CONVENTION.into());
    Ok(r)
}

fn su_boundary(inputs: &mut Inputs, doc: &Doc, node: &Node) -> Result<SuBoundary, InputError> {
    let cx = mesh_ref(inputs, doc, &node.get("mesh")?)?;
    let c = node.get("connection")?;
    let conn = match c.value.as_str() {
        Some("trivial") => LatticeConnection::trivial(&cx),
        Some(other) => return Err(c.err(format!("expected \"trivial\" or a connection object, found {other:?}"))),
        None => connection(&cx, &c)?,
    };
    let lifts = node.get("lifts")?;
    SuBoundary::new(conn, lifts.f64_vec()?).map_err(|e| lifts.err(e.to_string()))
}

fn su_filling(inputs: &mut Inputs, doc: &Doc, node: &Node) -> Result<SuFilling, InputError> {
    let cx = mesh_ref(inputs, doc, &node.get("mesh")?)?;
    let c = node.get("connection")?;
    match c.value.as_str() {
        Some("tangent") => SuFilling::tangent(&cx),
        Some(other) => return Err(c.err(format!("expected \"tangent\" or a connection object, found {other:?}"))),
        None => SuFilling::new(connection(&cx, &c)?, false),
    }
    .map_err(|e| c.err(e.to_string()))
}

fn su_component(inputs: &mut Inputs, doc: &Doc, node: &Node) -> Result<SuComponent, InputError> {
    let boundary = node.opt("boundary").map(|b| su_boundary(inputs, doc, &b)).transpose()?;
    let f = node.get("filling")?;
    let filling = su_filling(inputs, doc, &f)?;
    filling.check_boundary(boundary.as_ref()).map_err(|e| f.err(e.to_string()))?;
    Ok(SuComponent { boundary, filling })
}

fn su_cmd(inputs: &mut Inputs, scene: PathBuf, certify: bool) -> Result<Report, CliError> {
    let doc = inputs.load(&scene)?;
    let root = doc.root();
    let nodes = match root.opt("components") {
        Some(list) => list.items()?,
        None => vec![root.clone()],
    };
    let mut components = Vec::new();
    for n in &nodes {
        components.push(su_component(inputs, &doc, n)?);
    }
    let mut r = Report::default();
    r.conventions.push(SU_CONVENTION.into());
    if certify {
        if components.len() != 1 {
            return Err(root.err("--certify needs a single-component scene").into());
        }
        let mut fillings = vec![components[0].filling.clone()];
        if let Some(alts) = root.opt("alternatives") {
            for a in alts.items()? {
                let f = su_filling(inputs, &doc, &a)?;
                f.check_boundary(components[0].boundary.as_ref())
                    .map_err(|e| a.err(e.to_string()))?;
                fillings.push(f);
            }
        }
        let (res, alts) = su_psi_certified(components[0].boundary.as_ref(), &fillings).map_err(compute)?;
        result_lines(&mut r, &res);
        for a in &alts {
            r.line(format!(
                "alt filling={} tangent={} int={} diff={}",
                a.filling, a.tangent, a.integer_value, a.difference
            ));
        }
        r.set("alternatives", json!(alts));
    } else {
        let scene = SuScene { components };
        let res = su_psi(&scene).map_err(compute)?;
        result_lines(&mut r, &res);
    }
    Ok(r)
}

pub fn run(cmd: BnrCmd, inputs: &mut Inputs) -> Result<Report, CliError> {
    match cmd {
        BnrCmd::Psi {
            scene,
            certify,
            table,
            refine,
        } => psi_cmd(inputs, scene, certify, table, refine),
        BnrCmd::Su { scene, certify } => su_cmd(inputs, scene, certify),
        BnrCmd::Cs { refine } => {
            if refine == 0 {
                return Err(CliError::Input(InputError {
                    file: "<command line>".into(),
                    path: "--refine".into(),
                    message: "refinement must be at least 1".into(),
                }));
            }
            let cs = cs_su2_quadrature(refine);
            let vol = s3_volume(refine);
            let mut r = Report::default();
            r.line(format!("cs={} vol={} refine={refine}", f12(cs), f12(vol)));
            r.set("cs", j12(cs)).set("volume", j12(vol)).set("refine", refine);
            r.conventions.push("s3-right-handed".into());
            Ok(r)
        }
        BnrCmd::Table(TableCmd::Validate { file }) => {
            let report = match load_table(inputs, file.as_ref())? {
                Some((_, entries)) => validate_table(&entries),
                None => validate_table(Closed4Table::builtin().entries()),
            };
            let mut r = Report::default();
            r.lines.extend(report.to_string().lines().map(String::from));
            r.set("valid", report.is_valid()).set("report", json!(report));
            r.failed = !report.is_valid();
            Ok(r)
        }
    }
}
