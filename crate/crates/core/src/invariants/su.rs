//! The one-dimensional analog of `ψ`: a closed 1-manifold with a U(1)
//! connection and real lifts `a_e` of its edge phases, bounded by a surface
//! carrying a lattice connection. `raw = ∫_W F − Σ a_e` is an integer, read
//! mod 2.

use std::sync::Arc;

use serde::Serialize;

use crate::discrete::{CellComplex, Chain, DiscreteError, LatticeConnection};
use crate::fgab::analytic::{circular_distance, wrap_turns};

use super::psi::InvariantResult;
use super::InvariantError;

pub const SU_TOLERANCE: f64 = 1e-9;
pub const SU_CONVENTION: &str = "tangent-geodesic-boundary";

/// Oriented edges of a 1-cycle, head to tail: `(edge, sign)` pairs.
fn walk(cx: &CellComplex, cycle: &Chain) -> Result<Vec<(usize, i64)>, InvariantError> {
    let mut steps = Vec::with_capacity(cycle.terms.len());
    for &(e, s) in &cycle.terms {
        if s.abs() != 1 {
            return Err(InvariantError::Boundary(format!("edge {e} has multiplicity {s}")));
        }
        let (t, h) = cx.edge_endpoints(e)?;
        steps.push(if s > 0 { (t, h, e, s) } else { (h, t, e, s) });
    }
    let Some(&first) = steps.iter().min_by_key(|x| x.2) else {
        return Ok(Vec::new());
    };
    let mut order = vec![first];
    let mut used = vec![false; steps.len()];
    used[steps.iter().position(|x| *x == first).expect("present")] = true;
    while order.len() < steps.len() {
        let at = order.last().expect("non-empty").1;
        let next = (0..steps.len())
            .find(|&j| !used[j] && steps[j].0 == at)
            .ok_or_else(|| InvariantError::Boundary("boundary is not a single circle".into()))?;
        used[next] = true;
        order.push(steps[next]);
    }
    if order.last().expect("non-empty").1 != first.0 {
        return Err(InvariantError::Boundary("boundary is not a single circle".into()));
    }
    Ok(order.into_iter().map(|(_, _, e, s)| (e, s)).collect())
}

/// A closed connected 1-complex with a connection and an SU-structure, i.e.
/// a real lift `a_e` of each edge phase `u_e`.
#[derive(Clone, Debug)]
pub struct SuBoundary {
    connection: LatticeConnection,
    lifts: Vec<f64>,
}

impl SuBoundary {
    pub fn new(connection: LatticeConnection, lifts: Vec<f64>) -> Result<Self, InvariantError> {
        let cx = connection.complex();
        if cx.dim() != 1 {
            return Err(DiscreteError::Degree {
                expected: 1,
                found: cx.dim(),
            }
            .into());
        }
        let cycle = cx.fundamental().ok_or(DiscreteError::BoundaryNotSet)?;
        if !cx.is_cycle(cycle)? {
            return Err(DiscreteError::NotClosed.into());
        }
        if lifts.len() != cx.count(1) {
            return Err(DiscreteError::Length {
                what: "edge lifts",
                expected: cx.count(1),
                found: lifts.len(),
            }
            .into());
        }
        for (e, (&a, &u)) in lifts.iter().zip(connection.phases()).enumerate() {
            if !a.is_finite() || circular_distance(wrap_turns(a), u) > SU_TOLERANCE {
                return Err(InvariantError::LiftMismatch { edge: e, lift: a, phase: u });
            }
        }
        Ok(SuBoundary { connection, lifts })
    }

    /// Trivial connection with all lifts zero.
    pub fn trivial(circle: &Arc<CellComplex>) -> Result<Self, InvariantError> {
        Self::new(LatticeConnection::trivial(circle), vec![0.0; circle.count(1)])
    }

    pub fn connection(&self) -> &LatticeConnection {
        &self.connection
    }

    pub fn lifts(&self) -> &[f64] {
        &self.lifts
    }

    /// Adds the integer `k` to the lift of edge `e`.
    pub fn shifted(&self, e: usize, k: i64) -> Self {
        let mut lifts = self.lifts.clone();
        lifts[e] += k as f64;
        SuBoundary {
            connection: self.connection.clone(),
            lifts,
        }
    }

    /// `Σ a_e` over the fundamental cycle: a real lift of the holonomy.
    pub fn lifted_holonomy(&self) -> f64 {
        let cycle = self.connection.complex().fundamental().expect("checked at construction");
        cycle.terms.iter().map(|&(e, k)| k as f64 * self.lifts[e]).sum()
    }
}

/// A surface with connection bounding an [`SuBoundary`], with the boundary
/// identification found by walking both circles from their lowest edge.
#[derive(Clone, Debug)]
pub struct SuFilling {
    connection: LatticeConnection,
    tangent: bool,
}

impl SuFilling {
    /// `tangent` records that the connection is the Levi-Civita transport of
    /// the surface, which is what makes differences even.
    pub fn new(connection: LatticeConnection, tangent: bool) -> Result<Self, InvariantError> {
        let cx = connection.complex();
        if cx.dim() != 2 {
            return Err(DiscreteError::Degree {
                expected: 2,
                found: cx.dim(),
            }
            .into());
        }
        cx.fundamental().ok_or(DiscreteError::BoundaryNotSet)?;
        Ok(SuFilling { connection, tangent })
    }

    pub fn tangent(cx: &Arc<CellComplex>) -> Result<Self, InvariantError> {
        Self::new(crate::discrete::tangent_connection(cx)?, true)
    }

    pub fn connection(&self) -> &LatticeConnection {
        &self.connection
    }

    pub fn is_tangent(&self) -> bool {
        self.tangent
    }

    /// Matches `∂W` to the boundary circle and checks that the connections
    /// agree there.
    pub fn check_boundary(&self, boundary: Option<&SuBoundary>) -> Result<(), InvariantError> {
        let w = self.connection.complex();
        let dw = w.boundary_of_fundamental()?;
        let Some(b) = boundary else {
            return if dw.is_empty() {
                Ok(())
            } else {
                Err(InvariantError::Boundary("surface has a boundary but the scene has none".into()))
            };
        };
        let c = b.connection.complex();
        let ours = walk(w, &dw)?;
        let theirs = walk(c, c.fundamental().expect("checked"))?;
        if ours.len() != theirs.len() {
            return Err(InvariantError::Boundary(format!(
                "boundary has {} edges, circle has {}",
                ours.len(),
                theirs.len()
            )));
        }
        for (&(ew, sw), &(ec, sc)) in ours.iter().zip(&theirs) {
            let uw = sw as f64 * self.connection.phases()[ew];
            let uc = sc as f64 * b.connection.phases()[ec];
            if circular_distance(wrap_turns(uw), wrap_turns(uc)) > SU_TOLERANCE {
                return Err(InvariantError::Boundary(format!(
                    "surface edge {ew} carries {uw}, circle edge {ec} carries {uc}"
                )));
            }
        }
        Ok(())
    }
}

/// One component: an optional boundary circle and its filling.
#[derive(Clone, Debug)]
pub struct SuComponent {
    pub boundary: Option<SuBoundary>,
    pub filling: SuFilling,
}

impl SuComponent {
    pub fn raw(&self) -> Result<f64, InvariantError> {
        self.filling.check_boundary(self.boundary.as_ref())?;
        let w = self.filling.connection.complex();
        let total = self
            .filling
            .connection
            .total_curvature(w.fundamental().expect("checked"))?;
        Ok(total - self.boundary.as_ref().map_or(0.0, SuBoundary::lifted_holonomy))
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuScene {
    pub components: Vec<SuComponent>,
}

impl SuScene {
    pub fn single(c: SuComponent) -> Self {
        SuScene { components: vec![c] }
    }

    pub fn disjoint_union(&self, other: &SuScene) -> SuScene {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        SuScene { components }
    }
}

pub fn su_psi(scene: &SuScene) -> Result<InvariantResult, InvariantError> {
    let mut raw = 0.0;
    for c in &scene.components {
        raw += c.raw()?;
    }
    InvariantResult::from_raw(raw, 2, SU_TOLERANCE, SU_CONVENTION)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuAlternative {
    pub filling: usize,
    pub tangent: bool,
    pub integer_value: i64,
    pub difference: i64,
}

/// `su_psi` of one boundary over several fillings. The result is that of the
/// first filling; every pairwise difference must be even.
pub fn su_psi_certified(
    boundary: Option<&SuBoundary>,
    fillings: &[SuFilling],
) -> Result<(InvariantResult, Vec<SuAlternative>), InvariantError> {
    let mut values = Vec::with_capacity(fillings.len());
    for f in fillings {
        let c = SuComponent {
            boundary: boundary.cloned(),
            filling: f.clone(),
        };
        values.push(su_psi(&SuScene::single(c))?);
    }
    let first = values
        .first()
        .cloned()
        .ok_or_else(|| InvariantError::Boundary("no filling given".into()))?;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let d = values[j].integer_value - values[i].integer_value;
            if d.rem_euclid(2) != 0 {
                return Err(InvariantError::OddDifference {
                    first: i,
                    second: j,
                    difference: d,
                    out_of_hypothesis: !(fillings[i].tangent && fillings[j].tangent),
                });
            }
        }
    }
    let alternatives = values
        .iter()
        .zip(fillings)
        .enumerate()
        .map(|(i, (v, f))| SuAlternative {
            filling: i,
            tangent: f.tangent,
            integer_value: v.integer_value,
            difference: v.integer_value - first.integer_value,
        })
        .collect();
    Ok((first, alternatives))
}
