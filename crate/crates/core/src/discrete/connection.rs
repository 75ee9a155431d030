use std::sync::Arc;

use crate::fgab::analytic::{circular_distance, principal_turns, wrap_turns};

use super::complex::{CellComplex, Chain};
use super::DiscreteError;

/// Largest distance from an integer accepted by [`LatticeConnection::chern_number`].
pub const CHERN_TOLERANCE: f64 = 1e-9;

/// A U(1) lattice gauge field: a phase per edge, in turns, and an integer
/// curvature lift per 2-cell.
///
/// Traversing an edge against its orientation uses the negated phase. The
/// curvature of a face is its lift plus the principal logarithm of the
/// holonomy around its boundary.
#[derive(Clone, Debug)]
pub struct LatticeConnection {
    complex: Arc<CellComplex>,
    phases: Vec<f64>,
    lifts: Vec<Option<i64>>,
}

impl LatticeConnection {
    pub fn new(
        complex: &Arc<CellComplex>,
        phases: Vec<f64>,
        lifts: Vec<Option<i64>>,
    ) -> Result<Self, DiscreteError> {
        if phases.len() != complex.count(1) {
            return Err(DiscreteError::Length {
                what: "edge_phases",
                expected: complex.count(1),
                found: phases.len(),
            });
        }
        if lifts.len() != complex.count(2) {
            return Err(DiscreteError::Length {
                what: "face_lifts",
                expected: complex.count(2),
                found: lifts.len(),
            });
        }
        if phases.iter().any(|p| !p.is_finite()) {
            return Err(DiscreteError::NonFinite("edge phase"));
        }
        Ok(Self {
            complex: Arc::clone(complex),
            phases: phases.into_iter().map(wrap_turns).collect(),
            lifts,
        })
    }

    /// Phases with every face lift set to zero.
    pub fn with_zero_lifts(complex: &Arc<CellComplex>, phases: Vec<f64>) -> Result<Self, DiscreteError> {
        Self::new(complex, phases, vec![Some(0); complex.count(2)])
    }

    pub fn trivial(complex: &Arc<CellComplex>) -> Self {
        Self::with_zero_lifts(complex, vec![0.0; complex.count(1)]).expect("shapes match")
    }

    pub fn complex(&self) -> &Arc<CellComplex> {
        &self.complex
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn lifts(&self) -> &[Option<i64>] {
        &self.lifts
    }

    pub fn with_lifts(&self, lifts: Vec<Option<i64>>) -> Result<Self, DiscreteError> {
        Self::new(&self.complex, self.phases.clone(), lifts)
    }

    /// Unwrapped sum of signed edge phases around a face.
    pub fn face_flux(&self, f: usize) -> f64 {
        self.complex
            .boundary_of(2, f)
            .iter()
            .map(|&(e, s)| s as f64 * self.phases[e])
            .sum()
    }

    pub fn face_holonomy(&self, f: usize) -> f64 {
        wrap_turns(self.face_flux(f))
    }

    pub fn curvature(&self, f: usize) -> Result<f64, DiscreteError> {
        let n = self.lifts[f].ok_or(DiscreteError::MissingLift(f))?;
        Ok(n as f64 + principal_turns(self.face_flux(f)))
    }

    /// Holonomy around a closed 1-chain, in turns in `[0, 1)`.
    pub fn holonomy(&self, loop_: &Chain) -> Result<f64, DiscreteError> {
        if loop_.degree != 1 {
            return Err(DiscreteError::Degree {
                expected: 1,
                found: loop_.degree,
            });
        }
        if !self.complex.is_cycle(loop_)? {
            return Err(DiscreteError::NotClosed);
        }
        Ok(wrap_turns(
            loop_
                .terms
                .iter()
                .map(|&(e, k)| k as f64 * self.phases[e])
                .sum(),
        ))
    }

    pub fn total_curvature(&self, surface: &Chain) -> Result<f64, DiscreteError> {
        if surface.degree != 2 {
            return Err(DiscreteError::Degree {
                expected: 2,
                found: surface.degree,
            });
        }
        self.complex.check_chain(surface)?;
        let mut total = 0.0;
        for &(f, k) in &surface.terms {
            total += k as f64 * self.curvature(f)?;
        }
        Ok(total)
    }

    /// Total curvature over a closed surface, which must be an integer.
    pub fn chern_number(&self, cycle: &Chain) -> Result<i64, DiscreteError> {
        if !self.complex.is_cycle(cycle)? {
            return Err(DiscreteError::NotClosed);
        }
        let total = self.total_curvature(cycle)?;
        let n = total.round();
        if (total - n).abs() > CHERN_TOLERANCE {
            return Err(DiscreteError::NonIntegral { value: total });
        }
        Ok(n as i64)
    }

    /// Distance on the circle between `exp(2πi ∫_S F)` and the holonomy
    /// around `∂S`.
    pub fn holonomy_curvature_defect(&self, surface: &Chain) -> Result<f64, DiscreteError> {
        let total = self.total_curvature(surface)?;
        let boundary = self.complex.boundary_chain(surface)?;
        let hol = self.holonomy(&boundary)?;
        Ok(circular_distance(total, hol))
    }

    /// Multiplies every edge value by the coboundary phase of a vertex
    /// function: `u_e ↦ u_e + χ(head) − χ(tail)`. Lifts are kept.
    pub fn gauge_transform(&self, chi: &[f64]) -> Result<Self, DiscreteError> {
        if chi.len() != self.complex.count(0) {
            return Err(DiscreteError::Length {
                what: "gauge function",
                expected: self.complex.count(0),
                found: chi.len(),
            });
        }
        let mut phases = self.phases.clone();
        for (e, p) in phases.iter_mut().enumerate() {
            for &(v, s) in self.complex.boundary_of(1, e) {
                *p += s as f64 * chi[v];
            }
        }
        Self::new(&self.complex, phases, self.lifts.clone())
    }
}
