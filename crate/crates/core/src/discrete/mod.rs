//! Oriented cell complexes, real cochains, U(1) lattice connections and
//! Čech–Deligne data on finite covers.

mod cochain;
mod complex;
mod connection;
pub mod meshes;
mod nerve;
mod tangent;

pub use cochain::{check_stokes, Cochain};
pub use complex::{CellComplex, Chain};
pub use connection::{LatticeConnection, CHERN_TOLERANCE};
pub use nerve::{hopf_sphere_cocycle, NerveCocycle, NerveReport, Violation};
pub use tangent::tangent_connection;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiscreteError {
    #[error("invalid complex: {0}")]
    Complex(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("no cells of degree {0}")]
    DegreeOverflow(usize),
    #[error("{what}: expected {expected} entries, found {found}")]
    Length {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("non-finite {0}")]
    NonFinite(&'static str),
    #[error("complex has no fundamental chain, so no boundary is designated")]
    BoundaryNotSet,
    #[error("chain is not closed")]
    NotClosed,
    #[error("face {0} has no curvature lift")]
    MissingLift(usize),
    #[error("total curvature {value} is not an integer")]
    NonIntegral { value: f64 },
    #[error("face {0} is not a triangle")]
    NotTriangle(usize),
    #[error("face {0} is a degenerate triangle")]
    DegenerateTriangle(usize),
    #[error("vertex {0} does not have a disk or half-disk neighbourhood")]
    NonManifold(usize),
    #[error("complex has neither edge lengths nor coordinates")]
    MissingGeometry,
    #[error("cover data: {0}")]
    Nerve(String),
}
