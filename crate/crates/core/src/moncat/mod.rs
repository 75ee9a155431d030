//! Symmetric monoidal groupoids built from morphisms of abelian groups,
//! functors induced by commutative squares, their homotopy fibers and the
//! comparison functor `Ξ_λ` into a kernel.

pub mod analytic;
mod category;
mod hofiber;
mod square;

pub use category::{Arrow, HomSet, MorTensorCat};
pub use hofiber::{
    xi_is_equivalence, DiagonalFill, EnumeratedEquivalence, HofibCat, HofibObject, XiFunctor,
};
pub use analytic::{ExpHofiber, ExpObject};
pub use square::{CommSquare, FunctorCheck, SquareFunctor};

use crate::fgab::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoncatError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("square does not commute: f_ob ∘ φ_H ≠ φ_G ∘ f_mor")]
    NotCommutative,
    #[error("square maps do not fit together: {0}")]
    SquareShape(String),
    #[error("not a diagonal fill: {0}")]
    Triangle(&'static str),
    #[error("element is not a morphism between the given objects")]
    NotAMorphism,
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("pair is not an object of the homotopy fiber")]
    NotAnObject,
    #[error("value does not lie in the kernel")]
    OutsideKernel,
    #[error("connected objects have different images under Ξ")]
    ConstancyViolated,
}
