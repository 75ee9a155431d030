//! Meshes, cochains, chains and connections from JSON.
//!
//! A mesh is `{"cells": [n0, n1, n2], "boundary": [[[[face, sign], ...], ...], ...]}`
//! with optional `coords`, `edge_lengths` and `fundamental` (a list of
//! `[cell, coefficient]`). Wherever a mesh is expected, a string names either
//! a file (relative to the referring file) or a built-in mesh such as
//! `builtin:icosahedron` or `builtin:punctured-torus:4`.

use std::path::Path;
use std::sync::Arc;

use abtqft::discrete::{meshes, CellComplex, Chain, Cochain, LatticeConnection};

use crate::input::{Doc, InputError, Inputs, Node};

pub const BUILTIN_MESHES: &str = "icosahedron, punctured-icosahedron, flat-torus:K, punctured-torus:K, \
                                  genus-two, lat-long-sphere:LON,LAT, circle:N, polygon-disk:N";

pub fn builtin_mesh(spec: &str) -> Result<CellComplex, String> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| a.trim().parse().map_err(|_| format!("bad mesh parameter {a:?}")))
            .collect::<Result<_, _>>()?
    };
    let one = |default: usize, min: usize| -> Result<usize, String> {
        let n = nums.first().copied().unwrap_or(default);
        if n < min {
            return Err(format!("{name} needs a parameter of at least {min}"));
        }
        Ok(n)
    };
    Ok(match name {
        "icosahedron" => meshes::icosahedron(),
        "punctured-icosahedron" => meshes::punctured_icosahedron(),
        "flat-torus" => meshes::flat_torus(one(3, 3)?),
        "punctured-torus" => meshes::punctured_torus(one(3, 3)?),
        "genus-two" => meshes::genus_two_octagon(),
        "lat-long-sphere" => {
            let lon = one(4, 3)?;
            let lat = nums.get(1).copied().unwrap_or(2);
            if lat < 1 {
                return Err("lat-long-sphere needs at least one latitude band".into());
            }
            meshes::lat_long_sphere(lon, lat)
        }
        "circle" => meshes::circle(one(3, 1)?),
        "polygon-disk" => meshes::polygon_disk(one(3, 3)?),
        _ => return Err(format!("unknown built-in mesh {name:?}; known: {BUILTIN_MESHES}")),
    })
}

/// A mesh given on the command line: a file path or `builtin:…`.
pub fn mesh_arg(inputs: &mut Inputs, arg: &str) -> Result<Arc<CellComplex>, InputError> {
    if let Some(spec) = arg.strip_prefix("builtin:") {
        return builtin_mesh(spec).map(Arc::new).map_err(|message| InputError {
            file: arg.into(),
            path: "$".into(),
            message,
        });
    }
    let doc = inputs.load(Path::new(arg))?;
    mesh_def(&doc.root()).map(Arc::new)
}

/// A mesh inside a document: inline, a path relative to `doc`, or built in.
pub fn mesh_ref(inputs: &mut Inputs, doc: &Doc, node: &Node) -> Result<Arc<CellComplex>, InputError> {
    match node.value.as_str() {
        Some(s) if s.starts_with("builtin:") => builtin_mesh(&s["builtin:".len()..])
            .map(Arc::new)
            .map_err(|e| node.err(e)),
        Some(s) => {
            let path = doc.dir.join(s);
            if !path.exists() {
                return Err(node.err(format!("mesh file {} not found", path.display())));
            }
            let sub = inputs.load(&path)?;
            mesh_def(&sub.root()).map(Arc::new)
        }
        None => mesh_def(node).map(Arc::new),
    }
}

fn chain_terms(node: &Node) -> Result<Vec<(usize, i64)>, InputError> {
    node.items()?
        .iter()
        .map(|t| {
            let pair = t.items()?;
            if pair.len() != 2 {
                return Err(t.err("expected [cell, coefficient]"));
            }
            Ok((pair[0].usize()?, pair[1].i64()?))
        })
        .collect()
}

pub fn mesh_def(node: &Node) -> Result<CellComplex, InputError> {
    let cells = node.get("cells")?;
    let counts: Vec<usize> = cells.items()?.iter().map(Node::usize).collect::<Result<_, _>>()?;
    let b = node.get("boundary")?;
    let boundary = b
        .items()?
        .iter()
        .map(|dim| dim.items()?.iter().map(chain_terms).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut cx = CellComplex::new(counts, boundary).map_err(|e| b.err(e.to_string()))?;
    if let Some(c) = node.opt("coords") {
        let coords = c.items()?.iter().map(Node::f64_vec).collect::<Result<Vec<_>, _>>()?;
        cx = cx.with_coords(coords).map_err(|e| c.err(e.to_string()))?;
    }
    if let Some(l) = node.opt("edge_lengths") {
        cx = cx.with_edge_lengths(l.f64_vec()?).map_err(|e| l.err(e.to_string()))?;
    }
    match node.opt("fundamental") {
        Some(f) => {
            let chain = Chain::new(cx.dim(), chain_terms(&f)?);
            cx = cx.with_fundamental(chain).map_err(|e| f.err(e.to_string()))?;
        }
        None => cx = cx.with_all_top_cells(),
    }
    Ok(cx)
}

/// `{"degree": k, "terms": [[cell, coefficient], ...]}`.
pub fn chain(cx: &CellComplex, node: &Node) -> Result<Chain, InputError> {
    let degree = node.get("degree")?.usize()?;
    let terms = node.get("terms")?;
    let chain = Chain::new(degree, chain_terms(&terms)?);
    cx.check_chain(&chain).map_err(|e| terms.err(e.to_string()))?;
    Ok(chain)
}

/// `{"degree": k, "values": [...]}`.
pub fn cochain(cx: &Arc<CellComplex>, node: &Node) -> Result<Cochain, InputError> {
    let degree = node.get("degree")?.usize()?;
    let values = node.get("values")?;
    Cochain::new(cx, degree, values.f64_vec()?).map_err(|e| values.err(e.to_string()))
}

/// `{"edge_phases": [...], "face_lifts": [...]}`; phases in turns, lifts
/// integers or `null`.
pub fn connection(cx: &Arc<CellComplex>, node: &Node) -> Result<LatticeConnection, InputError> {
    let phases = node.get("edge_phases")?;
    let lifts = node.get("face_lifts")?;
    let lift_values = lifts
        .items()?
        .iter()
        .map(|l| if l.value.is_null() { Ok(None) } else { l.i64().map(Some) })
        .collect::<Result<Vec<_>, _>>()?;
    let p = phases.f64_vec()?;
    if p.len() != cx.count(1) {
        return Err(phases.err(format!("expected {} edge phases, found {}", cx.count(1), p.len())));
    }
    LatticeConnection::new(cx, p, lift_values).map_err(|e| lifts.err(e.to_string()))
}
