use std::fmt;
use std::sync::Arc;

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::GroupError;

/// Invariant-factor decomposition of a presented group, computed once at
/// construction.
///
/// With `rel` the relation matrix (rows are relations), the Smith form
/// `u · relᵀ · v = d` gives coordinates `y = u x` in which the relation
/// lattice is `{y : dᵢ | yᵢ}` (with `dᵢ = 0` meaning `yᵢ = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    /// Invariant factors `d₁ | d₂ | …`, each ≥ 2.
    pub invariant_factors: Vec<i64>,
    pub free_rank: usize,
    /// One diagonal entry per generator coordinate (1 = trivial, 0 = free).
    diag: Vec<i64>,
    u: IntMatrix,
    u_inv: IntMatrix,
}

impl NormalForm {
    fn compute(n: usize, relations: &IntMatrix) -> Self {
        let snf = smith_normal_form(&relations.transpose());
        let mut diag = snf.diagonal();
        diag.resize(n, 0);
        Self {
            invariant_factors: diag.iter().copied().filter(|&d| d >= 2).collect(),
            free_rank: diag.iter().filter(|&&d| d == 0).count(),
            diag,
            u: snf.u,
            u_inv: snf.u_inv,
        }
    }

    /// Indices of the nontrivial coordinates (torsion first, then free), in
    /// the order matching [`FgAbGroup::canonical`].
    fn components(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.diag
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, d)| d != 1)
    }
}

/// A finitely generated abelian group `Z^n / L` given by a presentation.
#[derive(Clone)]
pub struct FgAbGroup {
    n_generators: usize,
    relations: IntMatrix,
    normal: NormalForm,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n_generators == other.n_generators && self.relations == other.relations
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FgAbGroup(gens={}, rels={}, ≅ {})",
            self.n_generators,
            self.relations,
            self.structure()
        )
    }
}

impl FgAbGroup {
    /// Group with `n_generators` generators and the given relation rows.
    pub fn new(n_generators: usize, relations: IntMatrix) -> Result<Arc<Self>, GroupError> {
        if relations.cols() != n_generators {
            return Err(GroupError::Shape(format!(
                "relation rows have length {} but there are {} generators",
                relations.cols(),
                n_generators
            )));
        }
        let normal = NormalForm::compute(n_generators, &relations);
        Ok(Arc::new(Self {
            n_generators,
            relations,
            normal,
        }))
    }

    pub fn from_relation_rows(n_generators: usize, rows: &[Vec<i64>]) -> Result<Arc<Self>, GroupError> {
        let m = IntMatrix::from_rows(n_generators, rows)
            .ok_or_else(|| GroupError::Shape("relation row of wrong length".into()))?;
        Self::new(n_generators, m)
    }

    /// `Zⁿ`
    pub fn free(n: usize) -> Arc<Self> {
        Self::new(n, IntMatrix::zeros(0, n)).expect("free group presentation")
    }

    /// `Z/n` on one generator (`Z/0 = Z`, `Z/1 = 0` with one generator).
    pub fn cyclic(n: i64) -> Arc<Self> {
        Self::from_relation_rows(1, &[vec![n]]).expect("cyclic presentation")
    }

    /// The group with no generators.
    pub fn trivial() -> Arc<Self> {
        Self::free(0)
    }

    /// `Z/n₁ ⊕ Z/n₂ ⊕ …` with the diagonal presentation (0 entries give `Z`).
    pub fn direct_sum_cyclic(orders: &[i64]) -> Arc<Self> {
        let n = orders.len();
        let rows: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| {
                let mut r = vec![0; n];
                r[i] = o;
                r
            })
            .collect();
        Self::from_relation_rows(n, &rows).expect("diagonal presentation")
    }

    /// `self ⊕ other` with block-diagonal relations.
    pub fn direct_sum(&self, other: &FgAbGroup) -> Arc<Self> {
        Self::new(
            self.n_generators + other.n_generators,
            self.relations.block_diag(&other.relations),
        )
        .expect("block presentation")
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.normal
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.normal.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.normal.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.normal.free_rank == 0 && self.normal.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.normal.free_rank == 0
    }

    /// Order of the group, `None` if infinite (or beyond `u64`).
    pub fn order(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        self.normal
            .invariant_factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
    }

    /// Human-readable structure, e.g. `Z^2 + Z/2 + Z/12`.
    pub fn structure(&self) -> String {
        let mut parts = Vec::new();
        match self.normal.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.normal.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Canonical coordinates of `x`: torsion components reduced into
    /// `[0, dᵢ)`, followed by the free components.
    pub fn canonical(&self, x: &[i64]) -> Vec<i64> {
        debug_assert_eq!(x.len(), self.n_generators);
        let y = self.normal.u.mul_vec(x);
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for (i, d) in self.normal.components() {
            if d == 0 {
                free.push(y[i]);
            } else {
                torsion.push(y[i].rem_euclid(d));
            }
        }
        torsion.extend(free);
        torsion
    }

    /// Inverse of [`canonical`](Self::canonical): a generator-coordinate
    /// representative of the given canonical coordinates.
    pub fn from_canonical(&self, c: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.n_generators];
        let torsion: Vec<usize> = self
            .normal
            .components()
            .filter(|&(_, d)| d != 0)
            .map(|(i, _)| i)
            .collect();
        let free: Vec<usize> = self
            .normal
            .components()
            .filter(|&(_, d)| d == 0)
            .map(|(i, _)| i)
            .collect();
        for (&i, &v) in torsion.iter().chain(free.iter()).zip(c) {
            y[i] = v;
        }
        self.normal.u_inv.mul_vec(&y)
    }

    /// Canonical representative in generator coordinates.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        self.from_canonical(&self.canonical(x))
    }

    /// Whether `x` lies in the relation lattice.
    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.canonical(x).iter().all(|&c| c == 0)
    }

    /// Order of the class of `x`; `None` when it has infinite order.
    pub fn element_order(&self, x: &[i64]) -> Option<u64> {
        let c = self.canonical(x);
        let nt = self.normal.invariant_factors.len();
        if c[nt..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut order = 1u64;
        for (&v, &d) in c.iter().zip(&self.normal.invariant_factors) {
            let d = d as u64;
            let v = v as u64;
            let o = d / gcd(v, d);
            order = order / gcd(order, o) * o;
        }
        Some(order)
    }

    /// All elements of a finite group, as canonical representatives in
    /// generator coordinates. `None` for infinite groups or when the order
    /// exceeds `limit`.
    pub fn elements(&self, limit: u64) -> Option<Vec<Vec<i64>>> {
        let order = self.order()?;
        if order > limit {
            return None;
        }
        let factors = &self.normal.invariant_factors;
        let mut out = Vec::with_capacity(order as usize);
        let mut c = vec![0i64; factors.len()];
        loop {
            out.push(self.from_canonical(&c));
            let mut k = 0;
            loop {
                if k == factors.len() {
                    return Some(out);
                }
                c[k] += 1;
                if c[k] < factors[k] {
                    break;
                }
                c[k] = 0;
                k += 1;
            }
        }
    }

    /// Relation lattice membership for every relation row of `m` viewed as
    /// columns: true iff every column of `m` lies in the relation lattice.
    pub(crate) fn columns_in_lattice(&self, m: &IntMatrix) -> bool {
        m.columns().iter().all(|c| self.is_zero(c))
    }

    /// A presentation on the nontrivial invariant components, with the
    /// isomorphism to `self` as a matrix (`self.gens × new.gens`). Free
    /// generators are sign-normalized so that the first nonzero entry of their
    /// image is positive.
    pub(crate) fn simplified(&self) -> (Arc<FgAbGroup>, IntMatrix) {
        let factors = &self.normal.invariant_factors;
        let k = factors.len() + self.normal.free_rank;
        let mut cols = Vec::with_capacity(k);
        for idx in 0..k {
            let mut c = vec![0i64; k];
            c[idx] = 1;
            let mut col = self.from_canonical(&c);
            if idx >= factors.len() {
                if let Some(&first) = col.iter().find(|&&v| v != 0) {
                    if first < 0 {
                        col.iter_mut().for_each(|v| *v = -*v);
                    }
                }
            }
            cols.push(col);
        }
        let mut orders: Vec<i64> = factors.clone();
        orders.resize(k, 0);
        let g = Self::direct_sum_cyclic(&orders);
        let iso = IntMatrix::from_columns(self.n_generators, &cols).expect("column lengths");
        (g, iso)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element of a presented group, stored by generator coordinates.
///
/// Equality is congruence modulo the relation lattice.
#[derive(Clone)]
pub struct GroupElement {
    group: Arc<FgAbGroup>,
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn new(group: &Arc<FgAbGroup>, coords: Vec<i64>) -> Result<Self, GroupError> {
        if coords.len() != group.n_generators() {
            return Err(GroupError::Shape(format!(
                "element has {} coordinates, group has {} generators",
                coords.len(),
                group.n_generators()
            )));
        }
        Ok(Self {
            group: Arc::clone(group),
            coords,
        })
    }

    pub fn zero(group: &Arc<FgAbGroup>) -> Self {
        Self {
            group: Arc::clone(group),
            coords: vec![0; group.n_generators()],
        }
    }

    pub fn group(&self) -> &Arc<FgAbGroup> {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn canonical(&self) -> Vec<i64> {
        self.group.canonical(&self.coords)
    }

    /// Same class, canonical representative.
    pub fn reduced(&self) -> Self {
        Self {
            group: Arc::clone(&self.group),
            coords: self.group.reduce(&self.coords),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.group.is_zero(&self.coords)
    }

    fn check_parent(&self, other: &Self) -> Result<(), GroupError> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_parent(other)?;
        Ok(Self {
            group: Arc::clone(&self.group),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, GroupError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            group: Arc::clone(&self.group),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            group: Arc::clone(&self.group),
            coords: self.coords.iter().map(|a| k * a).collect(),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.coords, self.group.structure())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.coords))
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub(crate) fn same_group(a: &Arc<FgAbGroup>, b: &Arc<FgAbGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Decides `a = b` in their common parent group.
pub fn element_eq(a: &GroupElement, b: &GroupElement) -> Result<bool, GroupError> {
    Ok(a.try_sub(b)?.is_zero())
}
