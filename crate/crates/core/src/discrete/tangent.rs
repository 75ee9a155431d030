//! Discrete Levi-Civita transport on a triangulated surface.
//!
//! Corner angles come from edge lengths. Around each vertex the corners are
//! laid out in a fan and rescaled so that interior vertices close up to a
//! full turn and boundary vertices to a half turn. Edge directions in these
//! fans define the transport, and each face receives the share
//! `Σ α (s_v − 1) / 2π` of the angle defect as its curvature. With this
//! normalization boundary edges are straight, the total curvature of a
//! closed surface is its Euler characteristic, and that of a surface with
//! boundary is its Euler characteristic as well.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use crate::fgab::analytic::{circular_distance, principal_turns, wrap_turns};

use super::complex::CellComplex;
use super::connection::LatticeConnection;
use super::DiscreteError;

/// One corner of a face: the vertex, the edge leaving it and the edge
/// arriving at it (both in the face's orientation), and its angle.
#[derive(Clone, Copy, Debug)]
struct Corner {
    vertex: usize,
    out_edge: usize,
    in_edge: usize,
    angle: f64,
}

/// Oriented vertex cycle of a triangle: `[(from, to, edge)]` in boundary order.
fn half_edges(cx: &CellComplex, f: usize) -> Result<[(usize, usize, usize); 3], DiscreteError> {
    let b = cx.boundary_of(2, f);
    if b.len() != 3 || b.iter().any(|&(_, s)| s.abs() != 1) {
        return Err(DiscreteError::NotTriangle(f));
    }
    let mut hs = Vec::with_capacity(3);
    for &(e, s) in b {
        let (t, h) = cx.edge_endpoints(e)?;
        hs.push(if s > 0 { (t, h, e) } else { (h, t, e) });
    }
    // Order the half-edges head to tail.
    let mut ordered = [hs[0]; 3];
    let mut used = [true, false, false];
    for i in 1..3 {
        let prev = ordered[i - 1].1;
        let j = (0..3)
            .find(|&j| !used[j] && hs[j].0 == prev)
            .ok_or(DiscreteError::NotTriangle(f))?;
        used[j] = true;
        ordered[i] = hs[j];
    }
    if ordered[2].1 != ordered[0].0 {
        return Err(DiscreteError::NotTriangle(f));
    }
    Ok(ordered)
}

fn corners(cx: &CellComplex, lengths: &[f64], f: usize) -> Result<[Corner; 3], DiscreteError> {
    let hs = half_edges(cx, f)?;
    let mut out = [Corner {
        vertex: 0,
        out_edge: 0,
        in_edge: 0,
        angle: 0.0,
    }; 3];
    for i in 0..3 {
        let incoming = hs[i];
        let outgoing = hs[(i + 1) % 3];
        let opposite = hs[(i + 2) % 3];
        let (a, b, c) = (lengths[incoming.2], lengths[outgoing.2], lengths[opposite.2]);
        let scale = a.max(b).max(c);
        if a + b - c <= 1e-12 * scale || a + c - b <= 1e-12 * scale || b + c - a <= 1e-12 * scale {
            return Err(DiscreteError::DegenerateTriangle(f));
        }
        let cos = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
        out[i] = Corner {
            vertex: incoming.1,
            out_edge: outgoing.2,
            in_edge: incoming.2,
            angle: cos.acos(),
        };
    }
    Ok(out)
}

/// Direction angles of the edges around one vertex, and its scale factor.
struct Fan {
    scale: f64,
    directions: HashMap<usize, f64>,
}

fn build_fan(v: usize, corners: &[Corner]) -> Result<Fan, DiscreteError> {
    let mut by_out: HashMap<usize, usize> = HashMap::new();
    for (i, c) in corners.iter().enumerate() {
        if by_out.insert(c.out_edge, i).is_some() {
            return Err(DiscreteError::NonManifold(v));
        }
    }
    let ins: std::collections::HashSet<usize> = corners.iter().map(|c| c.in_edge).collect();
    let starts: Vec<usize> = (0..corners.len())
        .filter(|&i| !ins.contains(&corners[i].out_edge))
        .collect();
    let (first, boundary) = match starts.as_slice() {
        [] => (0, false),
        [s] => (*s, true),
        _ => return Err(DiscreteError::NonManifold(v)),
    };
    let mut order = Vec::with_capacity(corners.len());
    let mut i = first;
    loop {
        order.push(i);
        match by_out.get(&corners[i].in_edge) {
            Some(&next) if next != first => i = next,
            _ => break,
        }
        if order.len() > corners.len() {
            return Err(DiscreteError::NonManifold(v));
        }
    }
    if order.len() != corners.len() {
        return Err(DiscreteError::NonManifold(v));
    }
    let theta: f64 = order.iter().map(|&i| corners[i].angle).sum();
    let scale = if boundary { PI / theta } else { TAU / theta };
    let mut directions = HashMap::with_capacity(corners.len() + 1);
    let mut phi = 0.0;
    directions.insert(corners[first].out_edge, 0.0);
    for &i in &order {
        phi += scale * corners[i].angle;
        directions.entry(corners[i].in_edge).or_insert(phi);
    }
    Ok(Fan { scale, directions })
}

/// Tangent-bundle connection of a triangulated oriented surface, with face
/// lifts chosen so that each face carries its share of the angle defect.
pub fn tangent_connection(cx: &Arc<CellComplex>) -> Result<LatticeConnection, DiscreteError> {
    if cx.dim() != 2 {
        return Err(DiscreteError::Degree {
            expected: 2,
            found: cx.dim(),
        });
    }
    let lengths = cx.edge_lengths()?;
    let face_corners: Vec<[Corner; 3]> = (0..cx.count(2))
        .map(|f| corners(cx, &lengths, f))
        .collect::<Result<_, _>>()?;

    let mut at_vertex: Vec<Vec<Corner>> = vec![Vec::new(); cx.count(0)];
    for c in face_corners.iter().flatten() {
        at_vertex[c.vertex].push(*c);
    }
    let fans: Vec<Option<Fan>> = at_vertex
        .iter()
        .enumerate()
        .map(|(v, cs)| if cs.is_empty() { Ok(None) } else { build_fan(v, cs).map(Some) })
        .collect::<Result<_, _>>()?;

    let mut phases = vec![0.0; cx.count(1)];
    for (e, p) in phases.iter_mut().enumerate() {
        let (t, h) = cx.edge_endpoints(e)?;
        let dir = |v: usize| fans[v].as_ref().and_then(|f| f.directions.get(&e).copied());
        if let (Some(dt), Some(dh)) = (dir(t), dir(h)) {
            *p = wrap_turns((dh + PI - dt) / TAU);
        }
    }

    let conn = LatticeConnection::with_zero_lifts(cx, phases)?;
    let mut lifts = Vec::with_capacity(cx.count(2));
    for (f, cs) in face_corners.iter().enumerate() {
        let target: f64 = cs
            .iter()
            .map(|c| {
                let s = fans[c.vertex].as_ref().expect("vertex has a fan").scale;
                c.angle * (s - 1.0)
            })
            .sum::<f64>()
            / TAU;
        let hol = conn.face_holonomy(f);
        debug_assert!(circular_distance(hol, target) < 1e-9, "face {f}: {hol} vs {target}");
        lifts.push(Some((target - principal_turns(hol)).round() as i64));
    }
    conn.with_lifts(lifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::meshes;

    #[test]
    fn icosahedron_has_degree_two() {
        let cx = Arc::new(meshes::icosahedron());
        let c = tangent_connection(&cx).unwrap();
        assert_eq!(c.chern_number(cx.fundamental().unwrap()).unwrap(), 2);
    }

    #[test]
    fn flat_torus_has_degree_zero() {
        let cx = Arc::new(meshes::flat_torus(4));
        let c = tangent_connection(&cx).unwrap();
        assert_eq!(c.chern_number(cx.fundamental().unwrap()).unwrap(), 0);
    }

    #[test]
    fn genus_two_has_degree_minus_two() {
        let cx = Arc::new(meshes::genus_two_octagon());
        assert_eq!(cx.counts(), &[34, 108, 72]);
        let c = tangent_connection(&cx).unwrap();
        assert_eq!(c.chern_number(cx.fundamental().unwrap()).unwrap(), -2);
    }

    #[test]
    fn boundary_edges_are_straight() {
        let cx = Arc::new(meshes::punctured_icosahedron());
        let c = tangent_connection(&cx).unwrap();
        let b = cx.boundary_of_fundamental().unwrap();
        for &(e, _) in &b.terms {
            assert!(circular_distance(c.phases()[e], 0.0) < 1e-12);
        }
        let total = c.total_curvature(cx.fundamental().unwrap()).unwrap();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_triangle_is_rejected() {
        let cx = CellComplex::from_triangles(3, &[[0, 1, 2]])
            .unwrap()
            .with_edge_lengths(vec![1.0, 1.0, 2.0])
            .unwrap();
        assert!(matches!(
            tangent_connection(&Arc::new(cx)),
            Err(DiscreteError::DegenerateTriangle(0))
        ));
    }
}
