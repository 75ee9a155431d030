//! Built-in surface meshes.

use std::f64::consts::{PI, TAU};

use super::complex::CellComplex;
use super::DiscreteError;

/// Flips triangles so that their normals point away from the origin. Only
/// meaningful for meshes of star-shaped surfaces around the origin.
pub fn orient_outward(coords: &[[f64; 3]], tris: &mut [[usize; 3]]) {
    for t in tris.iter_mut() {
        let [a, b, c] = t.map(|v| coords[v]);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let w = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        let n = [
            u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0],
        ];
        let m = [a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]];
        if n[0] * m[0] + n[1] * m[1] + n[2] * m[2] < 0.0 {
            t.swap(1, 2);
        }
    }
}

/// Triangulated surface embedded in R³; lengths come from the coordinates.
pub fn embedded(coords: &[[f64; 3]], tris: &[[usize; 3]]) -> Result<CellComplex, DiscreteError> {
    CellComplex::from_triangles(coords.len(), tris)?.with_coords(coords.iter().map(|c| c.to_vec()).collect())
}

/// Triangulated surface whose triangles are given with planar positions for
/// each corner. Several triangles may share a vertex at different planar
/// positions (identified polygon sides); shared edges must get the same
/// length from every triangle that contains them.
pub fn from_planar_triangles(
    n_vertices: usize,
    tris: &[[(usize, [f64; 2]); 3]],
) -> Result<CellComplex, DiscreteError> {
    let ids: Vec<[usize; 3]> = tris.iter().map(|t| t.map(|(v, _)| v)).collect();
    let cx = CellComplex::from_triangles(n_vertices, &ids)?;
    let mut lengths: Vec<Option<f64>> = vec![None; cx.count(1)];
    for (f, t) in tris.iter().enumerate() {
        // from_triangles lists face edges in corner order.
        for (i, &(e, _)) in cx.boundary_of(2, f).iter().enumerate() {
            let (p, q) = (t[i].1, t[(i + 1) % 3].1);
            let l = (p[0] - q[0]).hypot(p[1] - q[1]);
            match lengths[e] {
                Some(old) if (old - l).abs() > 1e-9 * old.max(1.0) => {
                    return Err(DiscreteError::Complex(format!(
                        "edge {e} has inconsistent lengths {old} and {l}"
                    )))
                }
                _ => lengths[e] = Some(l),
            }
        }
    }
    cx.with_edge_lengths(lengths.into_iter().map(|l| l.expect("every edge is in a face")).collect())
}

fn icosahedron_data() -> (Vec<[f64; 3]>, Vec<[usize; 3]>) {
    let g = (1.0 + 5f64.sqrt()) / 2.0;
    let mut coords = Vec::with_capacity(12);
    for &s in &[-1.0, 1.0] {
        for &t in &[-1.0, 1.0] {
            coords.push([0.0, s, t * g]);
            coords.push([s, t * g, 0.0]);
            coords.push([t * g, 0.0, s]);
        }
    }
    let d2 = |a: [f64; 3], b: [f64; 3]| (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>();
    let adjacent = |i: usize, j: usize| (d2(coords[i], coords[j]) - 4.0).abs() < 1e-9;
    let mut tris = Vec::with_capacity(20);
    for i in 0..12 {
        for j in i + 1..12 {
            for k in j + 1..12 {
                if adjacent(i, j) && adjacent(j, k) && adjacent(i, k) {
                    tris.push([i, j, k]);
                }
            }
        }
    }
    orient_outward(&coords, &mut tris);
    (coords, tris)
}

/// Regular icosahedron with edge length 2, outward oriented.
pub fn icosahedron() -> CellComplex {
    let (coords, tris) = icosahedron_data();
    embedded(&coords, &tris).expect("icosahedron").with_all_top_cells()
}

/// Icosahedron with its last face removed; its boundary is a triangle.
pub fn punctured_icosahedron() -> CellComplex {
    let (coords, mut tris) = icosahedron_data();
    tris.pop();
    embedded(&coords, &tris).expect("punctured icosahedron").with_all_top_cells()
}

fn torus_triangles(k: usize) -> Vec<[(usize, [f64; 2]); 3]> {
    let id = |i: usize, j: usize| (i % k) + k * (j % k);
    let mut tris = Vec::with_capacity(2 * k * k);
    for j in 0..k {
        for i in 0..k {
            let (x, y) = (i as f64, j as f64);
            let a = (id(i, j), [x, y]);
            let b = (id(i + 1, j), [x + 1.0, y]);
            let c = (id(i + 1, j + 1), [x + 1.0, y + 1.0]);
            let d = (id(i, j + 1), [x, y + 1.0]);
            tris.push([a, b, c]);
            tris.push([a, c, d]);
        }
    }
    tris
}

/// Flat square torus: a `k × k` grid of unit squares, each cut along a
/// diagonal, opposite sides identified. Needs `k ≥ 3`.
pub fn flat_torus(k: usize) -> CellComplex {
    assert!(k >= 3, "flat torus grid needs k >= 3");
    from_planar_triangles(k * k, &torus_triangles(k))
        .expect("torus")
        .with_all_top_cells()
}

/// Flat torus with its first triangle removed.
pub fn punctured_torus(k: usize) -> CellComplex {
    assert!(k >= 3, "flat torus grid needs k >= 3");
    let mut tris = torus_triangles(k);
    tris.remove(0);
    from_planar_triangles(k * k, &tris)
        .expect("punctured torus")
        .with_all_top_cells()
}

/// Genus-two surface from a regular octagon with side word
/// `a₁ b₁ a₁⁻¹ b₁⁻¹ a₂ b₂ a₂⁻¹ b₂⁻¹`. Each side is cut in three, an inner
/// ring of 24 vertices and a center vertex complete the triangulation:
/// 34 vertices, 108 edges, 72 triangles.
pub fn genus_two_octagon() -> CellComplex {
    let corner = |j: usize| {
        let a = TAU * j as f64 / 8.0;
        [a.cos(), a.sin()]
    };
    let boundary_point = |i: usize| {
        let (s, t) = (i / 3 % 8, (i % 3) as f64 / 3.0);
        let (p, q) = (corner(s), corner(s + 1));
        [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]
    };
    // Sides s and s + 2 are glued with reversed direction.
    let boundary_id = |i: usize| -> usize {
        let (s, step) = (i / 3 % 8, i % 3);
        if step == 0 {
            return 0;
        }
        let (first, reversed) = match s {
            0 | 1 => (s, false),
            2 | 3 => (s - 2, true),
            4 | 5 => (s - 2, false),
            _ => (s - 4, true),
        };
        let step = if reversed { 3 - step } else { step };
        1 + 2 * first + (step - 1)
    };
    let ring = |i: usize| 9 + i % 24;
    let center = 33;
    let ring_pos = |i: usize| {
        let p = boundary_point(i % 24);
        [0.5 * p[0], 0.5 * p[1]]
    };
    let mut tris = Vec::with_capacity(72);
    for i in 0..24 {
        tris.push([(center, [0.0, 0.0]), (ring(i), ring_pos(i)), (ring(i + 1), ring_pos(i + 1))]);
        tris.push([
            (ring(i), ring_pos(i)),
            (boundary_id(i), boundary_point(i)),
            (boundary_id(i + 1), boundary_point(i + 1)),
        ]);
        tris.push([
            (ring(i), ring_pos(i)),
            (boundary_id(i + 1), boundary_point(i + 1)),
            (ring(i + 1), ring_pos(i + 1)),
        ]);
    }
    from_planar_triangles(34, &tris)
        .expect("genus two surface")
        .with_all_top_cells()
}

/// Latitude-longitude triangulation of the unit sphere: two poles and
/// `n_lat` rings of `n_lon` vertices. Vertex 0 is the north pole, ring `j`
/// (1-based) holds vertices `1 + (j − 1) n_lon ..`, the south pole is last.
pub fn lat_long_sphere(n_lon: usize, n_lat: usize) -> CellComplex {
    assert!(n_lon >= 3 && n_lat >= 1);
    let mut coords = vec![[0.0, 0.0, 1.0]];
    for j in 1..=n_lat {
        let theta = PI * j as f64 / (n_lat + 1) as f64;
        for i in 0..n_lon {
            let phi = TAU * i as f64 / n_lon as f64;
            coords.push([theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]);
        }
    }
    coords.push([0.0, 0.0, -1.0]);
    let south = coords.len() - 1;
    let r = |j: usize, i: usize| 1 + (j - 1) * n_lon + i % n_lon;
    let mut tris = Vec::new();
    for i in 0..n_lon {
        tris.push([0, r(1, i), r(1, i + 1)]);
    }
    for j in 1..n_lat {
        for i in 0..n_lon {
            tris.push([r(j, i), r(j + 1, i), r(j + 1, i + 1)]);
            tris.push([r(j, i), r(j + 1, i + 1), r(j, i + 1)]);
        }
    }
    for i in 0..n_lon {
        tris.push([south, r(n_lat, i + 1), r(n_lat, i)]);
    }
    orient_outward(&coords, &mut tris);
    embedded(&coords, &tris).expect("sphere").with_all_top_cells()
}

/// A circle of `n` vertices and `n` edges, edge `i` running from `i` to `i + 1`.
pub fn circle(n: usize) -> CellComplex {
    let edges = (0..n).map(|i| vec![(i, -1), ((i + 1) % n, 1)]).collect();
    CellComplex::new(vec![n, n], vec![edges])
        .expect("circle")
        .with_all_top_cells()
}

/// Flat regular `n`-gon fanned from its center (vertex `n`), unit circumradius.
pub fn polygon_disk(n: usize) -> CellComplex {
    let mut coords: Vec<[f64; 3]> = (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64;
            [a.cos(), a.sin(), 0.0]
        })
        .collect();
    coords.push([0.0, 0.0, 0.0]);
    let tris: Vec<[usize; 3]> = (0..n).map(|i| [n, i, (i + 1) % n]).collect();
    embedded(&coords, &tris).expect("disk").with_all_top_cells()
}
