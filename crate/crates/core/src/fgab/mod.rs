//! Finitely generated abelian groups given by integer presentations, and
//! the homomorphisms between them.

pub mod analytic;
mod group;
mod matrix;
mod morphism;
mod snf;

pub use analytic::{AnalyticGroup, AnalyticKind, AnalyticMorphism};
pub use group::{element_eq, FgAbGroup, GroupElement, NormalForm};
pub use matrix::IntMatrix;
pub use morphism::{direct_sum_morphism, pullback, stacked, GroupMorphism};
pub use snf::{
    hermite_rows, integer_kernel, reduce_mod_hermite, smith_normal_form, solve_integer, Smith,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// The matrix does not send relation `k` of the source into the target's relations.
    #[error("map is not well defined: relation {0} of the source is not sent to zero")]
    NotWellDefined(usize),
    #[error("elements or morphisms live in different groups")]
    ParentMismatch,
    #[error("morphisms do not share a target")]
    TargetMismatch,
}
