use std::sync::Arc;

use crate::fgab::{element_eq, FgAbGroup, GroupMorphism};

use super::category::{Arrow, MorTensorCat};
use super::MoncatError;

/// A morphism `φ_H → φ_G` in the arrow category of abelian groups:
///
/// ```text
///  H_mor --f_mor--> G_mor
///    |φ_H             |φ_G
///  H_ob  --f_ob---> G_ob
/// ```
#[derive(Clone, Debug)]
pub struct CommSquare {
    phi_h: GroupMorphism,
    phi_g: GroupMorphism,
    f_ob: GroupMorphism,
    f_mor: GroupMorphism,
}

impl CommSquare {
    pub fn new(
        phi_h: GroupMorphism,
        phi_g: GroupMorphism,
        f_ob: GroupMorphism,
        f_mor: GroupMorphism,
    ) -> Result<Self, MoncatError> {
        let down_right = f_ob.after(&phi_h).map_err(|_| {
            MoncatError::SquareShape("f_ob must start where φ_H ends".into())
        })?;
        let right_down = phi_g.after(&f_mor).map_err(|_| {
            MoncatError::SquareShape("φ_G must start where f_mor ends".into())
        })?;
        let commutes = down_right.equals(&right_down).map_err(|_| {
            MoncatError::SquareShape("f_mor must start at H_mor and f_ob end at G_ob".into())
        })?;
        if !commutes {
            return Err(MoncatError::NotCommutative);
        }
        Ok(Self {
            phi_h,
            phi_g,
            f_ob,
            f_mor,
        })
    }

    /// The identity square on `φ`.
    pub fn identity(phi: &GroupMorphism) -> Self {
        Self::new(
            phi.clone(),
            phi.clone(),
            GroupMorphism::identity(phi.target()),
            GroupMorphism::identity(phi.source()),
        )
        .expect("identity square commutes")
    }

    /// The square with both horizontal maps zero.
    pub fn zero(phi_h: &GroupMorphism, phi_g: &GroupMorphism) -> Self {
        Self::new(
            phi_h.clone(),
            phi_g.clone(),
            GroupMorphism::zero(phi_h.target(), phi_g.target()),
            GroupMorphism::zero(phi_h.source(), phi_g.source()),
        )
        .expect("zero square commutes")
    }

    /// The square `(φ_H, φ_G, φ_G ∘ λ, λ ∘ φ_H)` determined by a diagonal
    /// `λ : H_ob → G_mor`. It always admits `λ` as a fill.
    pub fn from_diagonal(
        phi_h: &GroupMorphism,
        phi_g: &GroupMorphism,
        lambda: &GroupMorphism,
    ) -> Result<Self, MoncatError> {
        let f_mor = lambda.after(phi_h)?;
        let f_ob = phi_g.after(lambda)?;
        Self::new(phi_h.clone(), phi_g.clone(), f_ob, f_mor)
    }

    pub fn phi_h(&self) -> &GroupMorphism {
        &self.phi_h
    }

    pub fn phi_g(&self) -> &GroupMorphism {
        &self.phi_g
    }

    pub fn f_ob(&self) -> &GroupMorphism {
        &self.f_ob
    }

    pub fn f_mor(&self) -> &GroupMorphism {
        &self.f_mor
    }

    pub fn h_mor(&self) -> &Arc<FgAbGroup> {
        self.phi_h.source()
    }

    pub fn h_ob(&self) -> &Arc<FgAbGroup> {
        self.phi_h.target()
    }

    pub fn g_mor(&self) -> &Arc<FgAbGroup> {
        self.phi_g.source()
    }

    pub fn g_ob(&self) -> &Arc<FgAbGroup> {
        self.phi_g.target()
    }

    pub fn functor(&self) -> SquareFunctor {
        SquareFunctor {
            source: MorTensorCat::new(self.phi_h.clone()),
            target: MorTensorCat::new(self.phi_g.clone()),
            square: self.clone(),
        }
    }
}

/// The symmetric monoidal functor `φ_H⊗ → φ_G⊗` induced by a square.
#[derive(Clone, Debug)]
pub struct SquareFunctor {
    source: MorTensorCat,
    target: MorTensorCat,
    square: CommSquare,
}

/// Outcome of a spot check of the functor laws.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorCheck {
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl FunctorCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl SquareFunctor {
    pub fn source(&self) -> &MorTensorCat {
        &self.source
    }

    pub fn target(&self) -> &MorTensorCat {
        &self.target
    }

    pub fn square(&self) -> &CommSquare {
        &self.square
    }

    pub fn map_arrow(&self, x: &Arrow) -> Result<Arrow, MoncatError> {
        let s = &self.square;
        self.target.arrow(
            &s.f_ob.apply(&x.source)?,
            &s.f_ob.apply(&x.target)?,
            &s.f_mor.apply(&x.value)?,
        )
    }

    /// Checks unit preservation, and for every ordered pair of sampled arrows
    /// the tensor law and (when composable) the composition law.
    pub fn check_laws(&self, arrows: &[Arrow]) -> Result<FunctorCheck, MoncatError> {
        let mut report = FunctorCheck::default();
        let unit = self.map_arrow(&self.source.identity(&self.source.unit()))?;
        if !unit.source.is_zero() || !unit.value.is_zero() {
            report.failures.push("unit not preserved".into());
        }
        for (i, x) in arrows.iter().enumerate() {
            let fx = self.map_arrow(x)?;
            for (j, y) in arrows.iter().enumerate() {
                report.pairs_checked += 1;
                let fy = self.map_arrow(y)?;
                let lhs = self.map_arrow(&self.source.tensor(x, y)?)?;
                let rhs = self.target.tensor(&fx, &fy)?;
                if !same_arrow(&lhs, &rhs)? {
                    report.failures.push(format!("tensor law fails on ({i}, {j})"));
                }
                if element_eq(&x.target, &y.source)? {
                    let lhs = self.map_arrow(&self.source.compose(x, y)?)?;
                    let rhs = self.target.compose(&fx, &fy)?;
                    if !same_arrow(&lhs, &rhs)? {
                        report
                            .failures
                            .push(format!("composition law fails on ({i}, {j})"));
                    }
                }
            }
        }
        Ok(report)
    }
}

fn same_arrow(a: &Arrow, b: &Arrow) -> Result<bool, MoncatError> {
    Ok(element_eq(&a.source, &b.source)?
        && element_eq(&a.target, &b.target)?
        && element_eq(&a.value, &b.value)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::{GroupElement, IntMatrix};

    fn proj(n: i64) -> GroupMorphism {
        GroupMorphism::new(&FgAbGroup::free(1), &FgAbGroup::cyclic(n), IntMatrix::identity(1))
            .unwrap()
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let z = FgAbGroup::free(1);
        let id = GroupMorphism::identity(&z);
        let r = CommSquare::new(
            id.clone(),
            id.clone(),
            GroupMorphism::scalar(&z, 2),
            id.clone(),
        );
        assert!(matches!(r, Err(MoncatError::NotCommutative)));
    }

    #[test]
    fn mirrored_exponential_square_is_monoidal() {
        let z = FgAbGroup::free(1);
        let p = proj(24);
        let s = CommSquare::new(GroupMorphism::identity(&z), p.clone(), p, GroupMorphism::identity(&z))
            .unwrap();
        let f = s.functor();
        let c = f.source();
        let arrows: Vec<Arrow> = [(0, 5), (5, 29), (-3, 2)]
            .iter()
            .map(|&(a, b)| {
                let a = GroupElement::new(&z, vec![a]).unwrap();
                let b = GroupElement::new(&z, vec![b]).unwrap();
                let x = b.try_sub(&a).unwrap();
                c.arrow(&a, &b, &x).unwrap()
            })
            .collect();
        let report = f.check_laws(&arrows).unwrap();
        assert!(report.ok(), "{:?}", report.failures);
        assert_eq!(report.pairs_checked, 9);
        let img = f.map_arrow(&arrows[1]).unwrap();
        assert_eq!(img.target.canonical(), vec![5]);
    }

    #[test]
    fn zero_square_is_constant_at_unit() {
        let z = FgAbGroup::free(1);
        let s = CommSquare::zero(&GroupMorphism::identity(&z), &proj(24));
        let f = s.functor();
        let a = GroupElement::new(&z, vec![3]).unwrap();
        let x = f.map_arrow(&f.source().identity(&a)).unwrap();
        assert!(x.source.is_zero() && x.value.is_zero());
    }

    #[test]
    fn identity_square_is_identity_functor() {
        let p = proj(6);
        let s = CommSquare::identity(&p);
        let f = s.functor();
        let a = GroupElement::new(p.target(), vec![4]).unwrap();
        let b = GroupElement::new(p.target(), vec![1]).unwrap();
        let x = f.source().arrow(&a, &b, &GroupElement::new(p.source(), vec![3]).unwrap()).unwrap();
        let fx = f.map_arrow(&x).unwrap();
        assert!(same_arrow(&x, &fx).unwrap());
    }
}
