//! Brute-force models of finite abelian groups and their morphisms.
//!
//! A group is `Zⁿ / L` with `L` spanned by the rows of a nonsingular square
//! matrix `R`. Two vectors are equal in the group iff `(x − y)·adj(R)` is
//! divisible by `det R`, so `x·adj(R) mod |det R|` is a complete invariant of
//! the class of `x`. Nothing here goes through normal forms.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;

pub type Key = Vec<i64>;

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor(m, 0, j))
            })
            .sum(),
    }
}

fn minor(m: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &x)| x).collect())
        .collect()
}

/// `adj(m)` with `m · adj(m) = det(m) · I`.
fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, a) in row.iter_mut().enumerate() {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *a = sign * det(&minor(m, j, i));
        }
    }
    adj
}

/// `m · x` for a matrix given by rows.
pub fn apply(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

#[derive(Clone, Debug)]
pub struct BruteGroup {
    pub relations: Vec<Vec<i64>>,
    order: i64,
    adj: Vec<Vec<i64>>,
    pub elements: Vec<Vec<i64>>,
}

impl BruteGroup {
    /// `None` for singular relation matrices.
    pub fn new(relations: Vec<Vec<i64>>) -> Option<Self> {
        let d = det(&relations).abs();
        if d == 0 {
            return None;
        }
        let adj = adjugate(&relations);
        let mut g = BruteGroup {
            relations,
            order: d,
            adj,
            elements: Vec::new(),
        };
        g.elements = g.enumerate();
        Some(g)
    }

    pub fn n(&self) -> usize {
        self.relations.len()
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn key(&self, x: &[i64]) -> Key {
        (0..self.n())
            .map(|j| {
                let s: i64 = (0..self.n()).map(|i| x[i] * self.adj[i][j]).sum();
                s.rem_euclid(self.order)
            })
            .collect()
    }

    pub fn eq(&self, x: &[i64], y: &[i64]) -> bool {
        self.key(x) == self.key(y)
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.key(x).iter().all(|&k| k == 0)
    }

    /// Closure of `{0}` under adding generators.
    fn enumerate(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([vec![0; n]]);
        while let Some(x) = queue.pop_front() {
            if !seen.insert(self.key(&x)) {
                continue;
            }
            for i in 0..n {
                let mut y = x.clone();
                y[i] += 1;
                queue.push_back(y);
            }
            out.push(x);
        }
        out
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    /// Random group of order between 1 and `max_order` on up to `max_gens`
    /// generators.
    pub fn random<R: Rng>(rng: &mut R, max_gens: usize, max_order: i64) -> Self {
        loop {
            let n = rng.gen_range(1..=max_gens);
            let relations: Vec<Vec<i64>> = if rng.gen_bool(0.3) {
                (0..n)
                    .map(|i| (0..n).map(|j| if i == j { rng.gen_range(1..=6) } else { 0 }).collect())
                    .collect()
            } else {
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect()
            };
            let d = det(&relations).abs();
            if d >= 1 && d <= max_order {
                return BruteGroup::new(relations).expect("nonsingular");
            }
        }
    }
}

/// A homomorphism `x ↦ M x` between brute groups.
#[derive(Clone, Debug)]
pub struct BruteMorphism {
    pub matrix: Vec<Vec<i64>>,
}

impl BruteMorphism {
    pub fn is_well_defined(matrix: &[Vec<i64>], source: &BruteGroup, target: &BruteGroup) -> bool {
        source.relations.iter().all(|r| target.is_zero(&apply(matrix, r)))
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        apply(&self.matrix, x)
    }

    pub fn after(&self, first: &BruteMorphism) -> BruteMorphism {
        BruteMorphism {
            matrix: matmul(&self.matrix, &first.matrix),
        }
    }

    /// Random well-defined morphism by rejection; falls back to zero. When
    /// source and target coincide, scalar maps are offered too.
    pub fn random<R: Rng>(rng: &mut R, source: &BruteGroup, target: &BruteGroup, same: bool) -> Self {
        if same && rng.gen_bool(0.5) {
            let k = rng.gen_range(-3..=3);
            let n = source.n();
            let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { k } else { 0 }).collect()).collect();
            return BruteMorphism { matrix };
        }
        for _ in 0..400 {
            let matrix: Vec<Vec<i64>> = (0..target.n())
                .map(|_| (0..source.n()).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            if Self::is_well_defined(&matrix, source, target) {
                return BruteMorphism { matrix };
            }
        }
        BruteMorphism {
            matrix: vec![vec![0; source.n()]; target.n()],
        }
    }

    pub fn is_bijective(&self, source: &BruteGroup, target: &BruteGroup) -> bool {
        let images: BTreeSet<Key> = source.elements.iter().map(|x| target.key(&self.apply(x))).collect();
        images.len() == source.order() && source.order() == target.order()
    }
}

/// `{x ∈ A : φ(x) = y}` as a set of keys.
pub fn solutions(phi: &BruteMorphism, a: &BruteGroup, b: &BruteGroup, y: &[i64]) -> BTreeSet<Key> {
    a.elements
        .iter()
        .filter(|x| b.eq(&phi.apply(x), y))
        .map(|x| a.key(x))
        .collect()
}

/// A square `(φ_H, φ_G, φ_G λ, λ φ_H)` from a diagonal, with its groups.
pub struct BruteSquare {
    pub h_mor: BruteGroup,
    pub h_ob: BruteGroup,
    pub g_mor: BruteGroup,
    pub g_ob: BruteGroup,
    pub phi_h: BruteMorphism,
    pub phi_g: BruteMorphism,
    pub lambda: BruteMorphism,
}

/// Enumerated homotopy fiber of a square.
pub struct BruteFiber {
    /// Pairs `(g, h)` with `φ_G(g) = f_ob(h)`, as representatives.
    pub objects: Vec<(Vec<i64>, Vec<i64>)>,
    pub keys: BTreeMap<(Key, Key), usize>,
}

impl BruteSquare {
    pub fn random<R: Rng>(rng: &mut R, max_order: i64) -> Self {
        let h_ob = BruteGroup::random(rng, 2, max_order);
        let h_mor = if rng.gen_bool(0.5) {
            h_ob.clone()
        } else {
            BruteGroup::random(rng, 2, max_order)
        };
        let g_mor = BruteGroup::random(rng, 2, max_order);
        let g_ob = if rng.gen_bool(0.4) {
            g_mor.clone()
        } else {
            BruteGroup::random(rng, 2, max_order)
        };
        let same_h = h_mor.relations == h_ob.relations;
        let same_g = g_mor.relations == g_ob.relations;
        let phi_h = BruteMorphism::random(rng, &h_mor, &h_ob, same_h);
        let phi_g = BruteMorphism::random(rng, &g_mor, &g_ob, same_g);
        let lambda = BruteMorphism::random(rng, &h_ob, &g_mor, false);
        BruteSquare {
            h_mor,
            h_ob,
            g_mor,
            g_ob,
            phi_h,
            phi_g,
            lambda,
        }
    }

    pub fn f_ob(&self) -> BruteMorphism {
        self.phi_g.after(&self.lambda)
    }

    pub fn f_mor(&self) -> BruteMorphism {
        self.lambda.after(&self.phi_h)
    }

    pub fn fiber(&self) -> BruteFiber {
        let f_ob = self.f_ob();
        let mut objects = Vec::new();
        let mut keys = BTreeMap::new();
        for g in &self.g_mor.elements {
            for h in &self.h_ob.elements {
                if self.g_ob.eq(&self.phi_g.apply(g), &f_ob.apply(h)) {
                    keys.insert((self.g_mor.key(g), self.h_ob.key(h)), objects.len());
                    objects.push((g.clone(), h.clone()));
                }
            }
        }
        BruteFiber { objects, keys }
    }

    /// `{x ∈ H_mor : f_mor(x) = g' − g, φ_H(x) = h' − h}`.
    pub fn fiber_hom(&self, a: &(Vec<i64>, Vec<i64>), b: &(Vec<i64>, Vec<i64>)) -> BTreeSet<Key> {
        let f_mor = self.f_mor();
        let dg = self.g_mor.sub(&b.0, &a.0);
        let dh = self.h_ob.sub(&b.1, &a.1);
        self.h_mor
            .elements
            .iter()
            .filter(|x| self.g_mor.eq(&f_mor.apply(x), &dg) && self.h_ob.eq(&self.phi_h.apply(x), &dh))
            .map(|x| self.h_mor.key(x))
            .collect()
    }

    /// `Ξ(g, h) = g − λ(h)`, keyed in `G_mor`.
    pub fn xi(&self, o: &(Vec<i64>, Vec<i64>)) -> Key {
        self.g_mor.key(&self.g_mor.sub(&o.0, &self.lambda.apply(&o.1)))
    }

    /// Essential surjectivity onto `ker φ_G` and full faithfulness of `Ξ`.
    pub fn xi_equivalence(&self, fiber: &BruteFiber) -> (bool, bool) {
        let kernel: BTreeSet<Key> = self
            .g_mor
            .elements
            .iter()
            .filter(|g| self.g_ob.is_zero(&self.phi_g.apply(g)))
            .map(|g| self.g_mor.key(g))
            .collect();
        let images: Vec<Key> = fiber.objects.iter().map(|o| self.xi(o)).collect();
        let hit: BTreeSet<Key> = images.iter().cloned().collect();
        let es = hit == kernel;
        let mut ff = true;
        'outer: for (i, a) in fiber.objects.iter().enumerate() {
            for (j, b) in fiber.objects.iter().enumerate() {
                let want = usize::from(images[i] == images[j]);
                if self.fiber_hom(a, b).len() != want {
                    ff = false;
                    break 'outer;
                }
            }
        }
        (es, ff)
    }
}
