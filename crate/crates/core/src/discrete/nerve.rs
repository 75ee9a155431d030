//! Čech–Deligne data of a U(1) bundle with connection on a finite cover.
//!
//! Each cover element is a set of 2-cells together with its closure. On the
//! closure of `U_α ∩ U_β` there is a transition function `g_αβ` (a phase per
//! vertex, in turns), and on each `U_α` a real 1-form `A_α` (a value per
//! edge). The conditions checked are
//!
//! - `g_βα = −g_αβ`,
//! - `g_αβ + g_βγ + g_γα = 0` on triple overlaps, in both cyclic orders,
//! - `A_β(e) − A_α(e) = log g_αβ(head) − log g_αβ(tail)` on overlap edges,
//!   with the principal logarithm of the difference,
//! - no winding of `g_αβ` around any overlap face.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::fgab::analytic::{circular_distance, principal_turns, wrap_turns};

use super::complex::CellComplex;
use super::connection::LatticeConnection;
use super::DiscreteError;

#[derive(Clone, Debug)]
struct Support {
    faces: BTreeSet<usize>,
    edges: BTreeSet<usize>,
    vertices: BTreeSet<usize>,
}

impl Support {
    fn of_faces(cx: &CellComplex, faces: &[usize]) -> Self {
        let faces: BTreeSet<usize> = faces.iter().copied().collect();
        let mut edges = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for &f in &faces {
            for &(e, _) in cx.boundary_of(2, f) {
                edges.insert(e);
                for &(v, _) in cx.boundary_of(1, e) {
                    vertices.insert(v);
                }
            }
        }
        Self {
            faces,
            edges,
            vertices,
        }
    }
}

/// One failed condition and how far off it is.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    Antisymmetry { pair: (usize, usize), vertex: usize, magnitude: f64 },
    Triple { cycle: (usize, usize, usize), vertex: usize, magnitude: f64 },
    Overlap { pair: (usize, usize), edge: usize, magnitude: f64 },
    Vortex { pair: (usize, usize), face: usize, magnitude: f64 },
    MissingTransition { pair: (usize, usize) },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct NerveReport {
    pub violations: Vec<Violation>,
}

impl NerveReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Cyclically ordered triples with a failed cocycle condition.
    pub fn flagged_triples(&self) -> BTreeSet<(usize, usize, usize)> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::Triple { cycle, .. } => Some(*cycle),
                _ => None,
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct NerveCocycle {
    complex: Arc<CellComplex>,
    supports: Vec<Support>,
    transitions: BTreeMap<(usize, usize), Vec<f64>>,
    forms: Vec<Vec<f64>>,
}

impl NerveCocycle {
    /// `charts[α]` lists the faces of `U_α`; `transitions[(α, β)]` holds
    /// `g_αβ` on every vertex of the complex (entries off the overlap are
    /// ignored); `forms[α]` holds `A_α` on every edge (entries off `U_α`
    /// are ignored).
    pub fn new(
        complex: &Arc<CellComplex>,
        charts: Vec<Vec<usize>>,
        transitions: BTreeMap<(usize, usize), Vec<f64>>,
        forms: Vec<Vec<f64>>,
    ) -> Result<Self, DiscreteError> {
        if complex.dim() != 2 {
            return Err(DiscreteError::Degree {
                expected: 2,
                found: complex.dim(),
            });
        }
        let n = charts.len();
        if forms.len() != n {
            return Err(DiscreteError::Length {
                what: "connection forms",
                expected: n,
                found: forms.len(),
            });
        }
        for faces in &charts {
            if let Some(&f) = faces.iter().find(|&&f| f >= complex.count(2)) {
                return Err(DiscreteError::Nerve(format!("chart references missing face {f}")));
            }
        }
        for a in &forms {
            if a.len() != complex.count(1) || a.iter().any(|x| !x.is_finite()) {
                return Err(DiscreteError::Nerve(
                    "each connection form needs one finite value per edge".into(),
                ));
            }
        }
        for (&(a, b), g) in &transitions {
            if a >= n || b >= n || a == b {
                return Err(DiscreteError::Nerve(format!("bad transition index ({a}, {b})")));
            }
            if g.len() != complex.count(0) || g.iter().any(|x| !x.is_finite()) {
                return Err(DiscreteError::Nerve(format!(
                    "transition ({a}, {b}) needs one finite value per vertex"
                )));
            }
        }
        let supports = charts.iter().map(|c| Support::of_faces(complex, c)).collect();
        Ok(Self {
            complex: Arc::clone(complex),
            supports,
            transitions,
            forms,
        })
    }

    pub fn complex(&self) -> &Arc<CellComplex> {
        &self.complex
    }

    pub fn n_charts(&self) -> usize {
        self.supports.len()
    }

    pub fn transition(&self, a: usize, b: usize) -> Option<&[f64]> {
        self.transitions.get(&(a, b)).map(Vec::as_slice)
    }

    /// Adds `delta` to `g_αβ` on every vertex. Used to build perturbed data.
    pub fn perturbed(&self, a: usize, b: usize, delta: f64) -> Self {
        let mut out = self.clone();
        if let Some(g) = out.transitions.get_mut(&(a, b)) {
            g.iter_mut().for_each(|x| *x += delta);
        }
        out
    }

    fn g(&self, a: usize, b: usize, v: usize) -> Option<f64> {
        if a == b {
            return Some(0.0);
        }
        self.transitions.get(&(a, b)).map(|g| g[v])
    }

    fn overlap_vertices(&self, idx: &[usize]) -> BTreeSet<usize> {
        let mut it = idx.iter();
        let first = it.next().expect("nonempty index list");
        let mut acc = self.supports[*first].vertices.clone();
        for &i in it {
            acc = acc.intersection(&self.supports[i].vertices).copied().collect();
        }
        acc
    }

    /// Principal logarithm of `g(head) − g(tail)`.
    fn dlog(&self, g: &[f64], e: usize) -> f64 {
        let (t, h) = self.complex.edge_endpoints(e).expect("validated complex");
        principal_turns(g[h] - g[t])
    }

    pub fn validate(&self, tol: f64) -> NerveReport {
        let n = self.n_charts();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let verts = self.overlap_vertices(&[a, b]);
                if verts.is_empty() {
                    continue;
                }
                let (Some(gab), Some(gba)) = (self.transition(a, b), self.transition(b, a)) else {
                    violations.push(Violation::MissingTransition { pair: (a, b) });
                    continue;
                };
                for &v in &verts {
                    let m = circular_distance(gab[v] + gba[v], 0.0);
                    if m > tol {
                        violations.push(Violation::Antisymmetry {
                            pair: (a, b),
                            vertex: v,
                            magnitude: m,
                        });
                    }
                }
                let (sa, sb) = (&self.supports[a], &self.supports[b]);
                for &e in sa.edges.intersection(&sb.edges) {
                    let m = ((self.forms[b][e] - self.forms[a][e]) - self.dlog(gab, e)).abs();
                    if m > tol {
                        violations.push(Violation::Overlap {
                            pair: (a, b),
                            edge: e,
                            magnitude: m,
                        });
                    }
                }
                for &f in sa.faces.intersection(&sb.faces) {
                    let w: f64 = self
                        .complex
                        .boundary_of(2, f)
                        .iter()
                        .map(|&(e, s)| s as f64 * self.dlog(gab, e))
                        .sum();
                    if w.abs() > tol {
                        violations.push(Violation::Vortex {
                            pair: (a, b),
                            face: f,
                            magnitude: w.abs(),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let verts = self.overlap_vertices(&[a, b, c]);
                    for cycle in [(a, b, c), (a, c, b)] {
                        let (x, y, z) = cycle;
                        for &v in &verts {
                            let (Some(p), Some(q), Some(r)) =
                                (self.g(x, y, v), self.g(y, z, v), self.g(z, x, v))
                            else {
                                continue;
                            };
                            let m = circular_distance(p + q + r, 0.0);
                            if m > tol {
                                violations.push(Violation::Triple {
                                    cycle,
                                    vertex: v,
                                    magnitude: m,
                                });
                            }
                        }
                    }
                }
            }
        }
        NerveReport { violations }
    }

    /// Glues the local data into a lattice connection. Every vertex, edge and
    /// face uses the first chart containing it; edge transport is corrected
    /// by the transition functions into the vertex charts, and each face's
    /// lift is chosen so that its curvature equals `dA` in its own chart.
    pub fn to_lattice_connection(&self) -> Result<LatticeConnection, DiscreteError> {
        let cx = &self.complex;
        let home = |pick: &dyn Fn(&Support) -> bool, what: &str, i: usize| {
            self.supports
                .iter()
                .position(pick)
                .ok_or_else(|| DiscreteError::Nerve(format!("{what} {i} is not covered")))
        };
        let vertex_home: Vec<usize> = (0..cx.count(0))
            .map(|v| home(&|s| s.vertices.contains(&v), "vertex", v))
            .collect::<Result<_, _>>()?;
        let mut phases = Vec::with_capacity(cx.count(1));
        for e in 0..cx.count(1) {
            let b = home(&|s| s.edges.contains(&e), "edge", e)?;
            let (t, h) = cx.edge_endpoints(e)?;
            let missing = |a: usize| DiscreteError::Nerve(format!("missing transition ({b}, {a})"));
            let gh = self.g(b, vertex_home[h], h).ok_or_else(|| missing(vertex_home[h]))?;
            let gt = self.g(b, vertex_home[t], t).ok_or_else(|| missing(vertex_home[t]))?;
            phases.push(self.forms[b][e] + gh - gt);
        }
        let conn = LatticeConnection::with_zero_lifts(cx, phases)?;
        let mut lifts = Vec::with_capacity(cx.count(2));
        for f in 0..cx.count(2) {
            let c = home(&|s| s.faces.contains(&f), "face", f)?;
            let da: f64 = cx
                .boundary_of(2, f)
                .iter()
                .map(|&(e, s)| s as f64 * self.forms[c][e])
                .sum();
            let hol = conn.face_holonomy(f);
            if circular_distance(wrap_turns(da), hol) > 1e-9 {
                return Err(DiscreteError::Nerve(format!(
                    "face {f}: local curvature does not match glued holonomy"
                )));
            }
            lifts.push(Some((da - principal_turns(hol)).round() as i64));
        }
        conn.with_lifts(lifts)
    }
}

/// Two-chart description of the degree-one bundle on a latitude-longitude
/// sphere: the northern chart covers the faces above the southern ring
/// band, the southern chart those below the northern band, and they overlap
/// in an equatorial band of faces. The transition function from the
/// southern to the northern chart is the longitude in turns, so the
/// clutching map winds once around the equator.
pub fn hopf_sphere_cocycle(n_lon: usize, n_lat: usize) -> Result<NerveCocycle, DiscreteError> {
    assert!(n_lat >= 3, "need at least three rings for an overlap band");
    let cx = Arc::new(super::meshes::lat_long_sphere(n_lon, n_lat));
    let coords = cx.coords().expect("sphere has coordinates").to_vec();
    let lon: Vec<f64> = coords
        .iter()
        .map(|p| {
            if p[0] == 0.0 && p[1] == 0.0 {
                0.0
            } else {
                wrap_turns(p[1].atan2(p[0]) / std::f64::consts::TAU)
            }
        })
        .collect();
    let lat: Vec<f64> = coords.iter().map(|p| p[2]).collect();
    let mid = n_lat / 2;
    // z of ring j is cos(π j / (n_lat + 1)); the band lies between rings mid and mid + 1.
    let ring_z = |j: usize| (std::f64::consts::PI * j as f64 / (n_lat + 1) as f64).cos();
    let (z_top, z_bottom) = (ring_z(mid), ring_z(mid + 1));
    let face_z = |f: usize| -> (f64, f64) {
        let vs: BTreeSet<usize> = cx
            .boundary_of(2, f)
            .iter()
            .flat_map(|&(e, _)| cx.boundary_of(1, e).iter().map(|&(v, _)| v))
            .collect();
        let zs: Vec<f64> = vs.iter().map(|&v| lat[v]).collect();
        (
            zs.iter().copied().fold(f64::INFINITY, f64::min),
            zs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        )
    };
    let eps = 1e-12;
    let north: Vec<usize> = (0..cx.count(2)).filter(|&f| face_z(f).0 >= z_bottom - eps).collect();
    let south: Vec<usize> = (0..cx.count(2)).filter(|&f| face_z(f).1 <= z_top + eps).collect();
    let g_ns: Vec<f64> = lon.iter().map(|x| -x).collect();
    let g_sn: Vec<f64> = lon.clone();
    let a_north = vec![0.0; cx.count(1)];
    let a_south: Vec<f64> = (0..cx.count(1))
        .map(|e| {
            let (t, h) = cx.edge_endpoints(e).expect("edge");
            principal_turns(lon[t] - lon[h])
        })
        .collect();
    let mut transitions = BTreeMap::new();
    transitions.insert((0, 1), g_ns);
    transitions.insert((1, 0), g_sn);
    NerveCocycle::new(&cx, vec![north, south], transitions, vec![a_north, a_south])
}
