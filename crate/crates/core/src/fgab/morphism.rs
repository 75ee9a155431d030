use std::fmt;
use std::sync::Arc;

use super::group::{same_group, FgAbGroup, GroupElement};
use super::matrix::IntMatrix;
use super::snf::{hermite_rows, integer_kernel, reduce_mod_hermite, solve_integer};
use super::GroupError;

/// A homomorphism of presented groups, given by its matrix on generators
/// (`target.gens × source.gens`).
#[derive(Clone)]
pub struct GroupMorphism {
    source: Arc<FgAbGroup>,
    target: Arc<FgAbGroup>,
    matrix: IntMatrix,
}

impl fmt::Debug for GroupMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} : {} -> {}",
            self.matrix,
            self.source.structure(),
            self.target.structure()
        )
    }
}

impl GroupMorphism {
    /// Checks shapes and that every source relation maps into the target
    /// relation lattice.
    pub fn new(
        source: &Arc<FgAbGroup>,
        target: &Arc<FgAbGroup>,
        matrix: IntMatrix,
    ) -> Result<Self, GroupError> {
        if matrix.rows() != target.n_generators() || matrix.cols() != source.n_generators() {
            return Err(GroupError::Shape(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.n_generators(),
                source.n_generators()
            )));
        }
        let images = matrix.mul(&source.relations().transpose());
        if let Some(bad) = images.columns().iter().position(|c| !target.is_zero(c)) {
            return Err(GroupError::NotWellDefined(bad));
        }
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            matrix,
        })
    }

    pub fn identity(g: &Arc<FgAbGroup>) -> Self {
        Self::new(g, g, IntMatrix::identity(g.n_generators())).expect("identity is well defined")
    }

    pub fn zero(source: &Arc<FgAbGroup>, target: &Arc<FgAbGroup>) -> Self {
        Self::new(
            source,
            target,
            IntMatrix::zeros(target.n_generators(), source.n_generators()),
        )
        .expect("zero is well defined")
    }

    /// `x ↦ k x` on a group.
    pub fn scalar(g: &Arc<FgAbGroup>, k: i64) -> Self {
        let n = g.n_generators();
        let mut m = IntMatrix::identity(n);
        for i in 0..n {
            m[(i, i)] = k;
        }
        Self::new(g, g, m).expect("scalar maps are well defined")
    }

    pub fn source(&self) -> &Arc<FgAbGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FgAbGroup> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply_coords(&self, x: &[i64]) -> Vec<i64> {
        self.matrix.mul_vec(x)
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement, GroupError> {
        if !same_group(x.group(), &self.source) {
            return Err(GroupError::ParentMismatch);
        }
        GroupElement::new(&self.target, self.apply_coords(x.coords()))
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupMorphism) -> Result<GroupMorphism, GroupError> {
        if !same_group(first.target(), &self.source) {
            return Err(GroupError::ParentMismatch);
        }
        Self::new(&first.source, &self.target, self.matrix.mul(&first.matrix))
    }

    /// Pointwise difference `self − other` of parallel morphisms.
    pub fn minus(&self, other: &GroupMorphism) -> Result<GroupMorphism, GroupError> {
        self.check_parallel(other)?;
        Self::new(&self.source, &self.target, self.matrix.sub(&other.matrix))
    }

    fn check_parallel(&self, other: &GroupMorphism) -> Result<(), GroupError> {
        if same_group(&self.source, &other.source) && same_group(&self.target, &other.target) {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    /// Equality as homomorphisms: matrices congruent modulo target relations.
    pub fn equals(&self, other: &GroupMorphism) -> Result<bool, GroupError> {
        self.check_parallel(other)?;
        Ok(self
            .target
            .columns_in_lattice(&self.matrix.sub(&other.matrix)))
    }

    pub fn is_zero(&self) -> bool {
        self.target.columns_in_lattice(&self.matrix)
    }

    /// All `x ∈ Z^{source gens}` with `f(x) = 0` in the target, as a lattice
    /// basis (columns). Contains the source relation lattice.
    fn preimage_of_zero_lattice(&self) -> IntMatrix {
        let ns = self.source.n_generators();
        let rel_t = self.target.relations().transpose();
        let stacked = self.matrix.hstack(&rel_t.neg());
        integer_kernel(&stacked).row_block(0, ns)
    }

    /// Kernel with its inclusion. The kernel comes back in simplified form
    /// (one generator per invariant component).
    pub fn kernel(&self) -> (Arc<FgAbGroup>, GroupMorphism) {
        let gens = self.preimage_of_zero_lattice();
        subgroup_generated_by(&self.source, &gens)
    }

    /// Image as an abstract group with its inclusion into the target.
    pub fn image(&self) -> (Arc<FgAbGroup>, GroupMorphism) {
        subgroup_generated_by(&self.target, &self.matrix)
    }

    /// Cokernel `target / image`, presented on the target generators, with
    /// the quotient map.
    pub fn cokernel(&self) -> (Arc<FgAbGroup>, GroupMorphism) {
        let rels = self.target.relations().vstack(&self.matrix.transpose());
        let q = FgAbGroup::new(self.target.n_generators(), rels).expect("cokernel presentation");
        let proj = GroupMorphism::new(&self.target, &q, IntMatrix::identity(q.n_generators()))
            .expect("quotient map");
        (q, proj)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Some `x` with `f(x) = y`, or `None`.
    ///
    /// The returned representative is canonical for the coset `x + ker f`:
    /// it is reduced against the Hermite basis of the preimage-of-zero
    /// lattice, so pivot coordinates land in `[0, pivot)`.
    pub fn solve(&self, y: &GroupElement) -> Result<Option<GroupElement>, GroupError> {
        if !same_group(y.group(), &self.target) {
            return Err(GroupError::ParentMismatch);
        }
        Ok(self
            .solve_coords(y.coords())
            .map(|x| GroupElement::new(&self.source, x).expect("source coordinates")))
    }

    pub fn solve_coords(&self, y: &[i64]) -> Option<Vec<i64>> {
        let ns = self.source.n_generators();
        let rel_t = self.target.relations().transpose();
        let stacked = self.matrix.hstack(&rel_t.neg());
        let w = solve_integer(&stacked, y)?;
        let x = &w[..ns];
        let lattice = self.preimage_of_zero_lattice();
        let hnf = hermite_rows(&lattice.transpose());
        Some(reduce_mod_hermite(&hnf, x))
    }
}

/// The subgroup of `g` generated by the columns of `gens` (generator
/// coordinates), as an abstract group with its inclusion.
fn subgroup_generated_by(g: &Arc<FgAbGroup>, gens: &IntMatrix) -> (Arc<FgAbGroup>, GroupMorphism) {
    let s = gens.cols();
    let rel_g = g.relations().transpose();
    // c ∈ Z^s is a relation iff gens·c lies in the relation lattice of g.
    let rel = integer_kernel(&gens.hstack(&rel_g.neg())).row_block(0, s);
    let raw = FgAbGroup::new(s, rel.transpose()).expect("subgroup presentation");
    let (simple, iso) = raw.simplified();
    let incl = GroupMorphism::new(&simple, g, gens.mul(&iso)).expect("inclusion is well defined");
    (simple, incl)
}

/// Fiber product `{(x, y) : f(x) = g(y)}` with its two projections.
pub fn pullback(
    f: &GroupMorphism,
    g: &GroupMorphism,
) -> Result<(Arc<FgAbGroup>, GroupMorphism, GroupMorphism), GroupError> {
    if !same_group(f.target(), g.target()) {
        return Err(GroupError::TargetMismatch);
    }
    let x = f.source();
    let y = g.source();
    let sum = x.direct_sum(y);
    let diff = GroupMorphism::new(&sum, f.target(), f.matrix().hstack(&g.matrix().neg()))?;
    let (p, incl) = diff.kernel();
    let nx = x.n_generators();
    let m = incl.matrix();
    let pr1 = GroupMorphism::new(&p, x, m.row_block(0, nx))?;
    let pr2 = GroupMorphism::new(&p, y, m.row_block(nx, m.rows()))?;
    Ok((p, pr1, pr2))
}

/// Direct sum `f ⊕ g : A ⊕ C → B ⊕ D`.
pub fn direct_sum_morphism(f: &GroupMorphism, g: &GroupMorphism) -> GroupMorphism {
    let s = f.source().direct_sum(g.source());
    let t = f.target().direct_sum(g.target());
    GroupMorphism::new(&s, &t, f.matrix().block_diag(g.matrix())).expect("block morphism")
}

/// `(f, g) : A → B ⊕ C`, stacking two morphisms out of the same source.
pub fn stacked(f: &GroupMorphism, g: &GroupMorphism) -> Result<GroupMorphism, GroupError> {
    if !same_group(f.source(), g.source()) {
        return Err(GroupError::ParentMismatch);
    }
    let t = f.target().direct_sum(g.target());
    GroupMorphism::new(f.source(), &t, f.matrix().vstack(g.matrix()))
}
