use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Subcommand;

use abtqft::discrete::{tangent_connection, CellComplex, Chain, LatticeConnection};

use crate::geometry::{chain, cochain, connection, mesh_arg};
use crate::input::{compute, CliError, InputError, Inputs};
use crate::report::{f12, j12, Report};

#[derive(Subcommand)]
pub enum GeoCmd {
    /// Compare `∫_∂W ω` with `∫_W dω`.
    Stokes {
        /// Mesh file or `builtin:NAME`.
        mesh: String,
        cochain: PathBuf,
        /// Chain `W`; defaults to the mesh's fundamental chain.
        #[arg(long)]
        chain: Option<PathBuf>,
    },
    /// Compare the holonomy around `∂W` with the curvature over `W`.
    Holonomy {
        mesh: String,
        /// Connection file, or `tangent`.
        connection: String,
        #[arg(long)]
        chain: Option<PathBuf>,
    },
    /// Chern number of a connection, or `tangent` for the Levi-Civita one.
    Chern { mesh: String, connection: String },
}

fn surface(inputs: &mut Inputs, cx: &CellComplex, path: Option<&Path>) -> Result<Chain, CliError> {
    match path {
        Some(p) => {
            let doc = inputs.load(p)?;
            Ok(chain(cx, &doc.root())?)
        }
        None => cx
            .fundamental()
            .cloned()
            .ok_or_else(|| CliError::Compute("mesh has no fundamental chain".into())),
    }
}

fn load_connection(inputs: &mut Inputs, cx: &Arc<CellComplex>, arg: &str) -> Result<LatticeConnection, CliError> {
    if arg == "tangent" {
        return tangent_connection(cx).map_err(|e| {
            CliError::Input(InputError {
                file: "<command line>".into(),
                path: "connection".into(),
                message: format!("no tangent connection on this mesh: {e}"),
            })
        });
    }
    let doc = inputs.load(Path::new(arg))?;
    Ok(connection(cx, &doc.root())?)
}

pub fn run(cmd: GeoCmd, inputs: &mut Inputs) -> Result<Report, CliError> {
    let mut r = Report::default();
    match cmd {
        GeoCmd::Stokes { mesh, cochain: path, chain } => {
            let cx = mesh_arg(inputs, &mesh)?;
            let doc = inputs.load(&path)?;
            let omega = cochain(&cx, &doc.root())?;
            let w = surface(inputs, &cx, chain.as_deref())?;
            let boundary = cx.boundary_chain(&w).map_err(compute)?;
            let lhs = omega.integrate(&boundary).map_err(compute)?;
            let rhs = omega.coboundary().and_then(|d| d.integrate(&w)).map_err(compute)?;
            r.line(format!("boundary={} interior={} gap={}", f12(lhs), f12(rhs), f12((lhs - rhs).abs())));
            r.set("boundary", j12(lhs)).set("interior", j12(rhs)).set("gap", j12((lhs - rhs).abs()));
        }
        GeoCmd::Holonomy { mesh, connection, chain } => {
            let cx = mesh_arg(inputs, &mesh)?;
            let conn = load_connection(inputs, &cx, &connection)?;
            let w = surface(inputs, &cx, chain.as_deref())?;
            let boundary = cx.boundary_chain(&w).map_err(compute)?;
            let hol = conn.holonomy(&boundary).map_err(compute)?;
            let curv = conn.total_curvature(&w).map_err(compute)?;
            let defect = conn.holonomy_curvature_defect(&w).map_err(compute)?;
            r.line(format!("holonomy={} curvature={} defect={}", f12(hol), f12(curv), f12(defect)));
            r.set("holonomy", j12(hol)).set("curvature", j12(curv)).set("defect", j12(defect));
        }
        GeoCmd::Chern { mesh, connection } => {
            let cx = mesh_arg(inputs, &mesh)?;
            let conn = load_connection(inputs, &cx, &connection)?;
            let w = surface(inputs, &cx, None)?;
            if !cx.is_cycle(&w).map_err(compute)? {
                return Err(CliError::Compute("the surface has boundary; Chern numbers need a closed surface".into()));
            }
            let n = conn.chern_number(&w).map_err(compute)?;
            r.line(n.to_string());
            r.set("chern_number", n).set("euler_characteristic", cx.euler_characteristic());
        }
    }
    Ok(r)
}
