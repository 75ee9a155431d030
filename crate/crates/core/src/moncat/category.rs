use std::fmt;
use std::sync::Arc;

use crate::fgab::{element_eq, FgAbGroup, GroupElement, GroupMorphism};

use super::MoncatError;

/// A solution set `{x : f(x) = y}` stored as a coset `particular + ker f`.
///
/// Infinite hom-sets are the common case over `Z`, so nothing here
/// enumerates unless asked to.
#[derive(Clone, Debug)]
pub struct HomSet {
    particular: Option<GroupElement>,
    kernel: Arc<FgAbGroup>,
    kernel_incl: GroupMorphism,
}

impl HomSet {
    pub fn solutions(f: &GroupMorphism, y: &GroupElement) -> Result<Self, MoncatError> {
        let particular = f.solve(y)?;
        let (kernel, kernel_incl) = f.kernel();
        Ok(Self {
            particular,
            kernel,
            kernel_incl,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn particular(&self) -> Option<&GroupElement> {
        self.particular.as_ref()
    }

    /// The kernel of the defining map, abstractly.
    pub fn kernel(&self) -> &Arc<FgAbGroup> {
        &self.kernel
    }

    /// Generators of the kernel as elements of the ambient group.
    pub fn kernel_generators(&self) -> Vec<GroupElement> {
        let ambient = self.kernel_incl.target();
        self.kernel_incl
            .matrix()
            .columns()
            .into_iter()
            .map(|c| GroupElement::new(ambient, c).expect("kernel generator"))
            .collect()
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool, MoncatError> {
        let Some(p) = &self.particular else {
            return Ok(false);
        };
        let d = x.try_sub(p)?;
        Ok(self.kernel_incl.solve(&d)?.is_some())
    }

    /// Number of elements, or `None` when infinite.
    pub fn cardinality(&self) -> Option<u64> {
        if self.is_empty() {
            Some(0)
        } else {
            self.kernel.order()
        }
    }

    /// All members, reduced, when the set is finite with at most `limit` elements.
    pub fn members(&self, limit: u64) -> Option<Vec<GroupElement>> {
        let Some(p) = &self.particular else {
            return Some(Vec::new());
        };
        let ks = self.kernel.elements(limit)?;
        Some(
            ks.iter()
                .map(|k| {
                    let x = self.kernel_incl.apply_coords(k);
                    let x = GroupElement::new(p.group(), x).expect("ambient coordinates");
                    p.try_add(&x).expect("same group").reduced()
                })
                .collect(),
        )
    }
}

impl fmt::Display for HomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.particular {
            None => write!(f, "empty"),
            Some(p) => {
                write!(f, "{p} + ker ≅ {}", self.kernel.structure())?;
                let gens = self.kernel_generators();
                if !gens.is_empty() {
                    write!(f, " (gens")?;
                    for g in gens {
                        write!(f, " {g}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// A morphism `x : a → b` of `φ⊗`, carrying its endpoints.
#[derive(Clone, Debug)]
pub struct Arrow {
    pub source: GroupElement,
    pub target: GroupElement,
    pub value: GroupElement,
}

/// The symmetric monoidal groupoid `φ⊗` of a morphism `φ : A_mor → A_ob`.
///
/// Objects are elements of `A_ob`, `Hom(a, b) = {x : a + φ(x) = b}`,
/// composition and tensor product are sums, the dual of `a` is `−a`.
#[derive(Clone, Debug)]
pub struct MorTensorCat {
    phi: GroupMorphism,
}

impl MorTensorCat {
    pub fn new(phi: GroupMorphism) -> Self {
        Self { phi }
    }

    /// `A⊗`, i.e. the category of `0 → A`: only identity morphisms.
    pub fn discrete(a: &Arc<FgAbGroup>) -> Self {
        Self::new(GroupMorphism::zero(&FgAbGroup::trivial(), a))
    }

    pub fn phi(&self) -> &GroupMorphism {
        &self.phi
    }

    pub fn object_group(&self) -> &Arc<FgAbGroup> {
        self.phi.target()
    }

    pub fn morphism_group(&self) -> &Arc<FgAbGroup> {
        self.phi.source()
    }

    pub fn unit(&self) -> GroupElement {
        GroupElement::zero(self.object_group())
    }

    pub fn object(&self, coords: Vec<i64>) -> Result<GroupElement, MoncatError> {
        Ok(GroupElement::new(self.object_group(), coords)?)
    }

    pub fn morphism(&self, coords: Vec<i64>) -> Result<GroupElement, MoncatError> {
        Ok(GroupElement::new(self.morphism_group(), coords)?)
    }

    pub fn hom(&self, a: &GroupElement, b: &GroupElement) -> Result<HomSet, MoncatError> {
        let diff = b.try_sub(a)?;
        HomSet::solutions(&self.phi, &diff)
    }

    pub fn is_morphism(
        &self,
        a: &GroupElement,
        b: &GroupElement,
        x: &GroupElement,
    ) -> Result<bool, MoncatError> {
        let moved = a.try_add(&self.phi.apply(x)?)?;
        Ok(element_eq(&moved, b)?)
    }

    pub fn arrow(
        &self,
        a: &GroupElement,
        b: &GroupElement,
        x: &GroupElement,
    ) -> Result<Arrow, MoncatError> {
        if !self.is_morphism(a, b, x)? {
            return Err(MoncatError::NotAMorphism);
        }
        Ok(Arrow {
            source: a.clone(),
            target: b.clone(),
            value: x.clone(),
        })
    }

    pub fn identity(&self, a: &GroupElement) -> Arrow {
        Arrow {
            source: a.clone(),
            target: a.clone(),
            value: GroupElement::zero(self.morphism_group()),
        }
    }

    /// `y ∘ x` for `x : a → b`, `y : b → c`.
    pub fn compose(&self, x: &Arrow, y: &Arrow) -> Result<Arrow, MoncatError> {
        if !element_eq(&x.target, &y.source)? {
            return Err(MoncatError::NotComposable);
        }
        let value = x.value.try_add(&y.value)?;
        if !self.is_morphism(&x.source, &y.target, &value)? {
            return Err(MoncatError::NotComposable);
        }
        Ok(Arrow {
            source: x.source.clone(),
            target: y.target.clone(),
            value,
        })
    }

    pub fn tensor(&self, x: &Arrow, y: &Arrow) -> Result<Arrow, MoncatError> {
        Ok(Arrow {
            source: x.source.try_add(&y.source)?,
            target: x.target.try_add(&y.target)?,
            value: x.value.try_add(&y.value)?,
        })
    }

    pub fn tensor_objects(
        &self,
        a: &GroupElement,
        b: &GroupElement,
    ) -> Result<GroupElement, MoncatError> {
        Ok(a.try_add(b)?)
    }

    pub fn dual(&self, a: &GroupElement) -> GroupElement {
        a.neg()
    }

    /// The inclusion `ker φ → A_mor`; `Hom(a, a)` is exactly this subgroup.
    pub fn automorphisms(&self) -> (Arc<FgAbGroup>, GroupMorphism) {
        self.phi.kernel()
    }

    /// `A_ob / im φ`: isomorphism classes of objects.
    pub fn components(&self) -> Arc<FgAbGroup> {
        self.phi.cokernel().0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::IntMatrix;

    fn el(g: &Arc<FgAbGroup>, v: &[i64]) -> GroupElement {
        GroupElement::new(g, v.to_vec()).unwrap()
    }

    #[test]
    fn discrete_category_has_only_identities() {
        let z = FgAbGroup::free(1);
        let c = MorTensorCat::discrete(&z);
        let h = c.hom(&el(&z, &[3]), &el(&z, &[3])).unwrap();
        assert_eq!(h.cardinality(), Some(1));
        assert!(c.hom(&el(&z, &[3]), &el(&z, &[4])).unwrap().is_empty());
    }

    #[test]
    fn doubling_hom_sets() {
        let z = FgAbGroup::free(1);
        let c = MorTensorCat::new(GroupMorphism::scalar(&z, 2));
        let h = c.hom(&el(&z, &[0]), &el(&z, &[4])).unwrap();
        assert_eq!(h.particular().unwrap().coords(), &[2]);
        assert_eq!(h.cardinality(), Some(1));
        assert!(c.hom(&el(&z, &[0]), &el(&z, &[3])).unwrap().is_empty());

        let x = c.arrow(&el(&z, &[0]), &el(&z, &[4]), &el(&z, &[2])).unwrap();
        let y = c.arrow(&el(&z, &[4]), &el(&z, &[10]), &el(&z, &[3])).unwrap();
        let xy = c.compose(&x, &y).unwrap();
        assert_eq!(xy.value.coords(), &[5]);
        assert!(element_eq(&xy.target, &el(&z, &[10])).unwrap());
        assert!(matches!(c.compose(&y, &x), Err(MoncatError::NotComposable)));
    }

    #[test]
    fn parity_hom_set_is_a_coset() {
        let z = FgAbGroup::free(1);
        let z2 = FgAbGroup::cyclic(2);
        let proj = GroupMorphism::new(&z, &z2, IntMatrix::identity(1)).unwrap();
        let c = MorTensorCat::new(proj);
        let h = c.hom(&el(&z2, &[0]), &el(&z2, &[1])).unwrap();
        assert_eq!(h.particular().unwrap().coords(), &[1]);
        assert_eq!(h.kernel_generators()[0].coords(), &[2]);
        for x in -6..6 {
            assert_eq!(h.contains(&el(&z, &[x])).unwrap(), x.rem_euclid(2) == 1);
        }
        assert_eq!(h.cardinality(), None);
    }

    #[test]
    fn mod_24_composition_and_duals() {
        let z = FgAbGroup::free(1);
        let z24 = FgAbGroup::cyclic(24);
        let c = MorTensorCat::new(GroupMorphism::new(&z, &z24, IntMatrix::identity(1)).unwrap());
        let x = c.arrow(&el(&z24, &[0]), &el(&z24, &[7]), &el(&z, &[7])).unwrap();
        let y = c.arrow(&el(&z24, &[7]), &el(&z24, &[3]), &el(&z, &[20])).unwrap();
        let xy = c.compose(&x, &y).unwrap();
        assert_eq!(xy.value.coords(), &[27]);
        assert_eq!(c.dual(&el(&z24, &[7])).canonical(), vec![17]);
        let unit = c.identity(&c.unit());
        let uu = c.tensor(&unit, &unit).unwrap();
        assert!(uu.source.is_zero() && uu.value.is_zero());
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let z = FgAbGroup::free(1);
        let z2 = FgAbGroup::cyclic(2);
        let c = MorTensorCat::new(GroupMorphism::scalar(&z, 2));
        assert!(c.hom(&el(&z2, &[0]), &el(&z, &[1])).is_err());
    }
}
