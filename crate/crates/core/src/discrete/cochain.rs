use std::sync::Arc;

use super::complex::{CellComplex, Chain};
use super::DiscreteError;

/// A real-valued `k`-cochain: one value per `k`-cell.
#[derive(Clone, Debug)]
pub struct Cochain {
    complex: Arc<CellComplex>,
    degree: usize,
    values: Vec<f64>,
}

impl Cochain {
    pub fn new(complex: &Arc<CellComplex>, degree: usize, values: Vec<f64>) -> Result<Self, DiscreteError> {
        if degree > complex.dim() {
            return Err(DiscreteError::DegreeOverflow(degree));
        }
        if values.len() != complex.count(degree) {
            return Err(DiscreteError::Length {
                what: "cochain values",
                expected: complex.count(degree),
                found: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(DiscreteError::NonFinite("cochain value"));
        }
        Ok(Self {
            complex: Arc::clone(complex),
            degree,
            values,
        })
    }

    pub fn zero(complex: &Arc<CellComplex>, degree: usize) -> Result<Self, DiscreteError> {
        Self::new(complex, degree, vec![0.0; complex.count(degree)])
    }

    pub fn constant(complex: &Arc<CellComplex>, degree: usize, c: f64) -> Result<Self, DiscreteError> {
        Self::new(complex, degree, vec![c; complex.count(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn complex(&self) -> &Arc<CellComplex> {
        &self.complex
    }

    /// `(dω)(c) = Σ_{(b, s) ∈ ∂c} s ω(b)`.
    pub fn coboundary(&self) -> Result<Cochain, DiscreteError> {
        let k = self.degree + 1;
        if k > self.complex.dim() {
            return Err(DiscreteError::DegreeOverflow(k));
        }
        let values = (0..self.complex.count(k))
            .map(|c| {
                self.complex
                    .boundary_of(k, c)
                    .iter()
                    .map(|&(b, s)| s as f64 * self.values[b])
                    .sum()
            })
            .collect();
        Cochain::new(&self.complex, k, values)
    }

    /// Signed sum over a chain, in the order of its terms.
    pub fn integrate(&self, chain: &Chain) -> Result<f64, DiscreteError> {
        if chain.degree != self.degree {
            return Err(DiscreteError::Degree {
                expected: self.degree,
                found: chain.degree,
            });
        }
        self.complex.check_chain(chain)?;
        Ok(chain
            .terms
            .iter()
            .map(|&(c, k)| k as f64 * self.values[c])
            .sum())
    }

    pub fn is_closed(&self, tol: f64) -> Result<bool, DiscreteError> {
        if self.degree == self.complex.dim() {
            return Ok(true);
        }
        Ok(self.coboundary()?.values.iter().all(|v| v.abs() <= tol))
    }
}

/// `(∫_{∂W} ω, ∫_W dω)` over the fundamental chain of the complex.
pub fn check_stokes(omega: &Cochain) -> Result<(f64, f64), DiscreteError> {
    let cx = omega.complex();
    let w = cx.fundamental().ok_or(DiscreteError::BoundaryNotSet)?;
    if w.degree != omega.degree() + 1 {
        return Err(DiscreteError::Degree {
            expected: w.degree - 1,
            found: omega.degree(),
        });
    }
    let boundary = cx.boundary_chain(w)?;
    let lhs = omega.integrate(&boundary)?;
    let rhs = omega.coboundary()?.integrate(w)?;
    Ok((lhs, rhs))
}
