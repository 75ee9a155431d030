//! Evaluators on bordisms with geometric data, the invariant `ψ` with values
//! mod 24, its mod-2 analog in dimension one, and the supporting Chern–Simons
//! quadrature and characteristic-number table.

pub mod cs;
mod psi;
mod scene;
mod su;
mod table;
mod z;

pub use cs::{cs_su2_quadrature, s3_volume};
pub use psi::{
    hofiber_bordism_semantics, psi, psi_certified, Alternative, Certificate, HofiberSemantics, InvariantResult,
    PSI_CONVENTION,
};
pub use scene::{
    BnrScene, Descriptor, ProviderKind, Providers, SceneComponent, SpinGeometryProvider, DEFAULT_REFINEMENT,
};
pub use su::{su_psi, su_psi_certified, SuAlternative, SuBoundary, SuComponent, SuFilling, SuScene, SU_CONVENTION};
pub use table::{validate_table, Closed4Entry, Closed4Table, TableIssue, TableReport, BUILTIN_TABLE};
pub use z::{
    z_hol, z_hol_functoriality, z_hol_is_functorial, z_hol_rel, z_spin_morphism, z_spin_object, z_stokes_closed,
    z_stokes_closed_manifold, z_stokes_relative,
};

use crate::discrete::DiscreteError;

/// Distance from an integer beyond which `ψ` is rejected.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// Twelve significant digits, scientific notation.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Discrete(#[from] DiscreteError),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("unknown descriptor: {0}")]
    UnknownDescriptor(String),
    #[error("bad descriptor: {0}")]
    Descriptor(String),
    #[error("incompatible boundary data: {0}")]
    Incompatible(String),
    #[error("{0} is not spin")]
    NotSpin(String),
    #[error("value {raw} is not an integer; the provider data are inconsistent")]
    NonIntegral { raw: f64 },
    #[error("bounding data differ by {difference}, not a multiple of {modulus}")]
    NotCertified { modulus: i64, difference: i64 },
    #[error("hofiber evaluation {hofiber} differs from psi {psi}")]
    Factorization { hofiber: f64, psi: f64 },
    #[error("edge {edge}: lift {lift} does not lie over phase {phase}")]
    LiftMismatch { edge: usize, lift: f64, phase: f64 },
    #[error("boundary: {0}")]
    Boundary(String),
    #[error(
        "fillings {first} and {second} differ by {difference}, which is odd{}",
        if *out_of_hypothesis { " (not both tangent connections)" } else { "" }
    )]
    OddDifference {
        first: usize,
        second: usize,
        difference: i64,
        out_of_hypothesis: bool,
    },
    #[error("form is not closed")]
    NotClosedForm,
}
