use std::sync::Arc;

use crate::fgab::{element_eq, pullback, stacked, FgAbGroup, GroupElement, GroupMorphism, IntMatrix};

use super::category::HomSet;
use super::square::CommSquare;
use super::MoncatError;

/// An object `(g, h) ∈ G_mor ×_{G_ob} H_ob` of the homotopy fiber.
#[derive(Clone, Debug)]
pub struct HofibObject {
    pub g: GroupElement,
    pub h: GroupElement,
}

/// Homotopy fiber over the unit of the functor induced by a square.
///
/// Objects form the fiber product of `φ_G` and `f_ob`; a morphism
/// `(g, h) → (g', h')` is an `x ∈ H_mor` with `f_mor(x) = g' − g` and
/// `φ_H(x) = h' − h`. Everything is a groupoid, so this is also the lax
/// homotopy fiber.
#[derive(Clone, Debug)]
pub struct HofibCat {
    square: CommSquare,
    objects: Arc<FgAbGroup>,
    pr_g: GroupMorphism,
    pr_h: GroupMorphism,
    constraints: GroupMorphism,
}

impl HofibCat {
    pub fn new(square: &CommSquare) -> Self {
        let (objects, pr_g, pr_h) =
            pullback(square.phi_g(), square.f_ob()).expect("φ_G and f_ob share G_ob");
        let constraints = stacked(square.f_mor(), square.phi_h()).expect("both leave H_mor");
        Self {
            square: square.clone(),
            objects,
            pr_g,
            pr_h,
            constraints,
        }
    }

    pub fn square(&self) -> &CommSquare {
        &self.square
    }

    /// The object group, abstractly, with projections to `G_mor` and `H_ob`.
    pub fn object_group(&self) -> &Arc<FgAbGroup> {
        &self.objects
    }

    pub fn pr_g(&self) -> &GroupMorphism {
        &self.pr_g
    }

    pub fn pr_h(&self) -> &GroupMorphism {
        &self.pr_h
    }

    pub fn unit(&self) -> HofibObject {
        HofibObject {
            g: GroupElement::zero(self.square.g_mor()),
            h: GroupElement::zero(self.square.h_ob()),
        }
    }

    pub fn is_object(&self, g: &GroupElement, h: &GroupElement) -> Result<bool, MoncatError> {
        let lhs = self.square.phi_g().apply(g)?;
        let rhs = self.square.f_ob().apply(h)?;
        Ok(element_eq(&lhs, &rhs)?)
    }

    pub fn object(&self, g: GroupElement, h: GroupElement) -> Result<HofibObject, MoncatError> {
        if !self.is_object(&g, &h)? {
            return Err(MoncatError::NotAnObject);
        }
        Ok(HofibObject { g, h })
    }

    /// The object named by coordinates in the abstract object group.
    pub fn object_at(&self, p: &[i64]) -> HofibObject {
        HofibObject {
            g: GroupElement::new(self.square.g_mor(), self.pr_g.apply_coords(p)).expect("G_mor"),
            h: GroupElement::new(self.square.h_ob(), self.pr_h.apply_coords(p)).expect("H_ob"),
        }
    }

    pub fn hom(&self, a: &HofibObject, b: &HofibObject) -> Result<HomSet, MoncatError> {
        for o in [a, b] {
            if !self.is_object(&o.g, &o.h)? {
                return Err(MoncatError::NotAnObject);
            }
        }
        let dg = b.g.try_sub(&a.g)?;
        let dh = b.h.try_sub(&a.h)?;
        let mut rhs = dg.coords().to_vec();
        rhs.extend_from_slice(dh.coords());
        let rhs = GroupElement::new(self.constraints.target(), rhs)?;
        HomSet::solutions(&self.constraints, &rhs)
    }

    pub fn is_morphism(
        &self,
        a: &HofibObject,
        b: &HofibObject,
        x: &GroupElement,
    ) -> Result<bool, MoncatError> {
        let s = &self.square;
        Ok(
            element_eq(&s.f_mor().apply(x)?, &b.g.try_sub(&a.g)?)?
                && element_eq(&s.phi_h().apply(x)?, &b.h.try_sub(&a.h)?)?,
        )
    }

    pub fn tensor(&self, a: &HofibObject, b: &HofibObject) -> Result<HofibObject, MoncatError> {
        Ok(HofibObject {
            g: a.g.try_add(&b.g)?,
            h: a.h.try_add(&b.h)?,
        })
    }
}

/// A diagonal `λ : H_ob → G_mor` splitting the square into two triangles.
#[derive(Clone, Debug)]
pub struct DiagonalFill {
    lambda: GroupMorphism,
}

impl DiagonalFill {
    pub fn new(square: &CommSquare, lambda: GroupMorphism) -> Result<Self, MoncatError> {
        let upper = lambda
            .after(square.phi_h())
            .map_err(|_| MoncatError::Triangle("λ must map H_ob to G_mor"))?;
        if !upper
            .equals(square.f_mor())
            .map_err(|_| MoncatError::Triangle("λ must map H_ob to G_mor"))?
        {
            return Err(MoncatError::Triangle("f_mor ≠ λ ∘ φ_H"));
        }
        let lower = square.phi_g().after(&lambda)?;
        if !lower.equals(square.f_ob())? {
            return Err(MoncatError::Triangle("f_ob ≠ φ_G ∘ λ"));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> &GroupMorphism {
        &self.lambda
    }
}

/// `Ξ_λ : hofib(f) → ker(φ_G)⊗`, `(g, h) ↦ g − λ(h)`.
#[derive(Clone, Debug)]
pub struct XiFunctor {
    hofib: HofibCat,
    lambda: GroupMorphism,
    kernel: Arc<FgAbGroup>,
    kernel_incl: GroupMorphism,
    on_objects: GroupMorphism,
}

impl XiFunctor {
    pub fn new(hofib: &HofibCat, fill: &DiagonalFill) -> Result<Self, MoncatError> {
        // Re-check the fill against this particular square.
        let fill = DiagonalFill::new(hofib.square(), fill.lambda.clone())?;
        let lambda = fill.lambda;
        let (kernel, kernel_incl) = hofib.square().phi_g().kernel();
        let into_g = hofib.pr_g().minus(&lambda.after(hofib.pr_h())?)?;
        let mut cols = Vec::with_capacity(into_g.matrix().cols());
        for c in into_g.matrix().columns() {
            let k = kernel_incl
                .solve_coords(&c)
                .ok_or(MoncatError::OutsideKernel)?;
            cols.push(k);
        }
        let m = IntMatrix::from_columns(kernel.n_generators(), &cols).expect("kernel coordinates");
        let on_objects = GroupMorphism::new(hofib.object_group(), &kernel, m)?;
        Ok(Self {
            hofib: hofib.clone(),
            lambda,
            kernel,
            kernel_incl,
            on_objects,
        })
    }

    pub fn hofib(&self) -> &HofibCat {
        &self.hofib
    }

    /// `ker φ_G`, abstractly, with its inclusion into `G_mor`.
    pub fn kernel(&self) -> (&Arc<FgAbGroup>, &GroupMorphism) {
        (&self.kernel, &self.kernel_incl)
    }

    /// The object map as a homomorphism from the object group to `ker φ_G`.
    pub fn on_objects(&self) -> &GroupMorphism {
        &self.on_objects
    }

    /// `g − λ(h)` in `G_mor`, checked to lie in `ker φ_G`.
    pub fn map_object(&self, o: &HofibObject) -> Result<GroupElement, MoncatError> {
        if !self.hofib.is_object(&o.g, &o.h)? {
            return Err(MoncatError::NotAnObject);
        }
        let v = o.g.try_sub(&self.lambda.apply(&o.h)?)?;
        if !self.hofib.square().phi_g().apply(&v)?.is_zero() {
            return Err(MoncatError::OutsideKernel);
        }
        Ok(v)
    }

    /// The same value in the coordinates of the abstract kernel group.
    pub fn map_object_to_kernel(&self, o: &HofibObject) -> Result<GroupElement, MoncatError> {
        let v = self.map_object(o)?;
        self.kernel_incl
            .solve(&v)?
            .ok_or(MoncatError::OutsideKernel)
    }

    /// Morphisms go to identities; the two endpoints must have equal image.
    pub fn map_morphism(
        &self,
        a: &HofibObject,
        b: &HofibObject,
        x: &GroupElement,
    ) -> Result<GroupElement, MoncatError> {
        if !self.hofib.is_morphism(a, b, x)? {
            return Err(MoncatError::NotAMorphism);
        }
        let xa = self.map_object(a)?;
        let xb = self.map_object(b)?;
        if !element_eq(&xa, &xb)? {
            return Err(MoncatError::ConstancyViolated);
        }
        Ok(GroupElement::zero(&FgAbGroup::trivial()))
    }

    /// Essential surjectivity and full faithfulness decided by enumeration,
    /// when the object group and `ker φ_G` are finite within `limit`.
    pub fn enumerate_equivalence(&self, limit: u64) -> Option<EnumeratedEquivalence> {
        let objects = self.hofib.object_group().elements(limit)?;
        let targets = self.kernel.elements(limit)?;
        let images: Vec<Vec<i64>> = objects
            .iter()
            .map(|p| self.kernel.canonical(&self.on_objects.apply_coords(p)))
            .collect();
        let mut hit: Vec<Vec<i64>> = images.clone();
        hit.sort();
        hit.dedup();
        let essentially_surjective = hit.len() == targets.len();
        let mut fully_faithful = true;
        'outer: for (i, p) in objects.iter().enumerate() {
            let a = self.hofib.object_at(p);
            for (j, q) in objects.iter().enumerate() {
                let b = self.hofib.object_at(q);
                let want = u64::from(images[i] == images[j]);
                let got = self.hofib.hom(&a, &b).ok()?.cardinality();
                if got != Some(want) {
                    fully_faithful = false;
                    break 'outer;
                }
            }
        }
        Some(EnumeratedEquivalence {
            objects: objects.len(),
            essentially_surjective,
            fully_faithful,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumeratedEquivalence {
    pub objects: usize,
    pub essentially_surjective: bool,
    pub fully_faithful: bool,
}

impl EnumeratedEquivalence {
    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.fully_faithful
    }
}

/// `Ξ_λ` is an equivalence exactly when `φ_H` is an isomorphism.
pub fn xi_is_equivalence(square: &CommSquare, fill: &DiagonalFill) -> Result<bool, MoncatError> {
    DiagonalFill::new(square, fill.lambda().clone())?;
    Ok(square.phi_h().is_isomorphism())
}
