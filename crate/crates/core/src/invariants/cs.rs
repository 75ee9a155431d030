//! Quadrature of the Chern–Simons 3-form of the Maurer–Cartan form over
//! `S³ ≅ SU(2)`.
//!
//! The sphere is meshed as the boundary of the 16-cell: sixteen spherical
//! tetrahedra, one per choice of signs `(±e₁, ±e₂, ±e₃, ±e₄)`. Each is cut
//! into `n³` flat pieces by the Kuhn subdivision, every piece is mapped from
//! the unit cube by collapsed coordinates, and points are pushed radially onto
//! the sphere. A 6-point Gauss–Legendre rule in each cube direction does the
//! rest. Orientation: `(t₁, t₂, t₃)` is positive when `det[p, t₁, t₂, t₃] > 0`
//! at the point `p`, i.e. the sphere is the boundary of the unit ball.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

type Vec4 = [f64; 4];
type Mat2 = [[Complex64; 2]; 2];

// Six-point Gauss–Legendre rule on [0, 1].
const GAUSS_NODES: [f64; 6] = [
    0.033_765_242_898_423_975,
    0.169_395_306_766_867_76,
    0.380_690_406_958_401_5,
    0.619_309_593_041_598_5,
    0.830_604_693_233_132_2,
    0.966_234_757_101_576,
];
const GAUSS_WEIGHTS: [f64; 6] = [
    0.085_662_246_189_584_87,
    0.180_380_786_524_069_47,
    0.233_956_967_286_345_7,
    0.233_956_967_286_345_7,
    0.180_380_786_524_069_47,
    0.085_662_246_189_584_87,
];

fn sub(a: Vec4, b: Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn dot(a: Vec4, b: Vec4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Determinant of the 4 × 4 matrix with the given columns.
pub fn det4(c: [Vec4; 4]) -> f64 {
    let mut total = 0.0;
    for j in 0..4 {
        let minor: Vec<usize> = (0..4).filter(|&k| k != j).collect();
        let m = [
            [c[minor[0]][1], c[minor[1]][1], c[minor[2]][1]],
            [c[minor[0]][2], c[minor[1]][2], c[minor[2]][2]],
            [c[minor[0]][3], c[minor[1]][3], c[minor[2]][3]],
        ];
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * c[j][0] * det3(m);
    }
    total
}

/// The quaternion `a + bi + cj + dk` as a complex 2 × 2 matrix; unit vectors
/// give SU(2).
pub fn quaternion_matrix(q: Vec4) -> Mat2 {
    let [a, b, c, d] = q;
    [
        [Complex64::new(a, b), Complex64::new(c, d)],
        [Complex64::new(-c, d), Complex64::new(a, -b)],
    ]
}

fn mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn adjoint(x: &Mat2) -> Mat2 {
    [
        [x[0][0].conj(), x[1][0].conj()],
        [x[0][1].conj(), x[1][1].conj()],
    ]
}

/// `tr(θ ∧ θ ∧ θ)(t₁, t₂, t₃)` for the Maurer–Cartan form `θ = g⁻¹ dg` at
/// `g = p`, with tangent vectors given in R⁴.
pub fn maurer_cartan_cubed(p: Vec4, t: [Vec4; 3]) -> f64 {
    let g_inv = adjoint(&quaternion_matrix(p));
    let theta: Vec<Mat2> = t.iter().map(|&v| mul(&g_inv, &quaternion_matrix(v))).collect();
    const PERMS: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([1, 2, 0], 1.0),
        ([2, 0, 1], 1.0),
        ([0, 2, 1], -1.0),
        ([2, 1, 0], -1.0),
        ([1, 0, 2], -1.0),
    ];
    let mut total = 0.0;
    for (perm, sign) in PERMS {
        let m = mul(&mul(&theta[perm[0]], &theta[perm[1]]), &theta[perm[2]]);
        total += sign * (m[0][0] + m[1][1]).re;
    }
    total
}

/// The sixteen facets of the 16-cell, each listed with positive orientation.
fn facets() -> Vec<[Vec4; 4]> {
    let mut out = Vec::with_capacity(16);
    for mask in 0..16u32 {
        let mut vs = [[0.0; 4]; 4];
        for (i, v) in vs.iter_mut().enumerate() {
            v[i] = if mask >> i & 1 == 1 { -1.0 } else { 1.0 };
        }
        let centroid = [
            vs.iter().map(|v| v[0]).sum::<f64>(),
            vs.iter().map(|v| v[1]).sum::<f64>(),
            vs.iter().map(|v| v[2]).sum::<f64>(),
            vs.iter().map(|v| v[3]).sum::<f64>(),
        ];
        let o = det4([centroid, sub(vs[1], vs[0]), sub(vs[2], vs[0]), sub(vs[3], vs[0])]);
        if o < 0.0 {
            vs.swap(2, 3);
        }
        out.push(vs);
    }
    out
}

/// Kuhn subdivision of the simplex `{0 ≤ z ≤ y ≤ x ≤ 1}` into `n³` pieces,
/// in Kuhn coordinates. Every piece keeps
/// the orientation of the parent.
fn kuhn_pieces(n: usize) -> Vec<[[f64; 3]; 4]> {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], true),
        ([1, 2, 0], true),
        ([2, 0, 1], true),
        ([0, 2, 1], false),
        ([2, 1, 0], false),
        ([1, 0, 2], false),
    ];
    let inside = |p: [usize; 3]| p[2] <= p[1] && p[1] <= p[0] && p[0] <= n;
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (perm, even) in PERMS {
                    let mut v = [[i, j, k]; 4];
                    for s in 0..3 {
                        v[s + 1] = v[s];
                        v[s + 1][perm[s]] += 1;
                    }
                    if v.iter().all(|&p| inside(p)) {
                        let mut piece = v.map(|p| p.map(|x| x as f64 / n as f64));
                        // Kuhn simplices of odd permutations are reflected.
                        if !even {
                            piece.swap(2, 3);
                        }
                        out.push(piece);
                    }
                }
            }
        }
    }
    out
}

/// Point of the facet `(a, b, c, d)` at Kuhn coordinates `(x, y, z)`.
fn kuhn_to_facet(f: &[Vec4; 4], p: [f64; 3]) -> Vec4 {
    let w = [1.0 - p[0], p[0] - p[1], p[1] - p[2], p[2]];
    let mut out = [0.0; 4];
    for (k, wk) in w.iter().enumerate() {
        for i in 0..4 {
            out[i] += wk * f[k][i];
        }
    }
    out
}

/// Integrates `integrand(p, t₁, t₂, t₃)` over the unit 3-sphere, where the
/// `tᵢ` are the tangent images of the parameter directions.
fn integrate_sphere<F>(refinement: usize, integrand: F) -> f64
where
    F: Fn(Vec4, [Vec4; 3]) -> f64 + Sync,
{
    assert!(refinement >= 1, "refinement must be positive");
    let pieces = kuhn_pieces(refinement);
    let per_facet: Vec<f64> = facets()
        .par_iter()
        .map(|facet| {
            let mut sum = 0.0;
            for piece in &pieces {
                let q = piece.map(|p| kuhn_to_facet(facet, p));
                let (a, b, c) = (sub(q[1], q[0]), sub(q[2], q[0]), sub(q[3], q[0]));
                for (iu, &u) in GAUSS_NODES.iter().enumerate() {
                    for (iv, &v) in GAUSS_NODES.iter().enumerate() {
                        for (iw, &w) in GAUSS_NODES.iter().enumerate() {
                            let weight = GAUSS_WEIGHTS[iu] * GAUSS_WEIGHTS[iv] * GAUSS_WEIGHTS[iw];
                            let mut x = q[0];
                            let mut dx = [[0.0; 4]; 3];
                            for i in 0..4 {
                                x[i] += u * a[i] + (1.0 - u) * v * b[i] + (1.0 - u) * (1.0 - v) * w * c[i];
                                dx[0][i] = a[i] - v * b[i] - (1.0 - v) * w * c[i];
                                dx[1][i] = (1.0 - u) * (b[i] - w * c[i]);
                                dx[2][i] = (1.0 - u) * (1.0 - v) * c[i];
                            }
                            let r = dot(x, x).sqrt();
                            let p = x.map(|xi| xi / r);
                            let t = dx.map(|d| {
                                let s = dot(p, d);
                                [0, 1, 2, 3].map(|i| (d[i] - s * p[i]) / r)
                            });
                            sum += weight * integrand(p, t);
                        }
                    }
                }
            }
            sum
        })
        .collect();
    per_facet.iter().sum()
}

/// `vol(S³)` by the same quadrature; the exact value is `2π²`.
pub fn s3_volume(refinement: usize) -> f64 {
    integrate_sphere(refinement, |p, t| det4([p, t[0], t[1], t[2]]))
}

/// `−(1/24π²) ∫_{S³} tr(θ ∧ θ ∧ θ)` for the Maurer–Cartan form of SU(2).
/// The integrand is `−12` times the volume form, so this tends to `+1` with
/// the orientation described in the module docs.
pub fn cs_su2_quadrature(refinement: usize) -> f64 {
    let integral = integrate_sphere(refinement, maurer_cartan_cubed);
    -integral / (24.0 * PI * PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuhn_pieces_tile_the_simplex() {
        for n in 1..5 {
            let pieces = kuhn_pieces(n);
            assert_eq!(pieces.len(), n * n * n);
            let vol: f64 = pieces
                .iter()
                .map(|p| {
                    let e = |k: usize| [p[k][0] - p[0][0], p[k][1] - p[0][1], p[k][2] - p[0][2]];
                    det3([e(1), e(2), e(3)])
                })
                .sum();
            // det3 is six times the volume; the parent has determinant 1.
            assert!((vol - 1.0).abs() < 1e-12, "{vol}");
        }
    }

    #[test]
    fn integrand_is_constant_multiple_of_volume_form() {
        let p = {
            let x = [0.3, -0.5, 0.7, 0.2];
            let r = dot(x, x).sqrt();
            x.map(|v| v / r)
        };
        let raw = [[1.0, 0.2, -0.3, 0.5], [0.1, 0.9, 0.4, -0.2], [-0.3, 0.2, 0.8, 0.6]];
        let t = raw.map(|d| {
            let s = dot(p, d);
            [0, 1, 2, 3].map(|i| d[i] - s * p[i])
        });
        let ratio = maurer_cartan_cubed(p, t) / det4([p, t[0], t[1], t[2]]);
        assert!((ratio + 12.0).abs() < 1e-12, "{ratio}");
    }

    #[test]
    fn volume_and_value_converge() {
        let vol = s3_volume(4);
        assert!((vol - 2.0 * PI * PI).abs() < 1e-6, "{vol}");
        let errs: Vec<f64> = (1..=4).map(|n| (cs_su2_quadrature(n) - 1.0).abs()).collect();
        assert!(errs[0] < 0.1 && errs[3] < 1e-3, "{errs:?}");
        assert!(errs.windows(2).all(|w| w[1] <= w[0]), "{errs:?}");
    }
}
