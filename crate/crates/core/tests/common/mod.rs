//! Brute-force finite abelian groups for property tests.
//!
//! A group is `Z^n / L` where `L` is spanned by the rows of a nonsingular
//! square matrix `R`. Membership in `L` is decided by `x · adj(R) ≡ 0 mod det R`,
//! which needs nothing from the library.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::sync::Arc;

use abtqft::fgab::{FgAbGroup, GroupMorphism, IntMatrix};
use proptest::prelude::*;

pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = sign * det(&minor);
        }
    }
    adj
}

pub fn apply(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

#[derive(Clone, Debug)]
pub struct Finite {
    pub relations: Vec<Vec<i64>>,
    /// Invariant-style orders in the adapted coordinates `y`, with `x = P y`.
    pub d: Vec<i64>,
    pub p: Vec<Vec<i64>>,
    pub p_inv: Vec<Vec<i64>>,
    order: i64,
    adj: Vec<Vec<i64>>,
}

impl Finite {
    /// `Z/d₀ ⊕ …` presented through the shear `[[1, t], [0, 1]]` when `n = 2`.
    pub fn new(d: Vec<i64>, t: i64) -> Self {
        let n = d.len();
        let (s, p, p_inv) = if n == 2 {
            (
                vec![vec![1, t], vec![0, 1]],
                vec![vec![1, 0], vec![t, 1]],
                vec![vec![1, 0], vec![-t, 1]],
            )
        } else {
            (vec![vec![1]], vec![vec![1]], vec![vec![1]])
        };
        let relations: Vec<Vec<i64>> = (0..n).map(|i| s[i].iter().map(|x| x * d[i]).collect()).collect();
        let order = det(&relations).abs();
        let adj = adjugate(&relations);
        let g = Finite {
            relations,
            d,
            p,
            p_inv,
            order,
            adj,
        };
        for r in &g.relations {
            assert!(g.is_zero(r), "relation rows must be zero");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn key(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n())
            .map(|j| (0..self.n()).map(|i| x[i] * self.adj[i][j]).sum::<i64>().rem_euclid(self.order))
            .collect()
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.key(x).iter().all(|&k| k == 0)
    }

    pub fn eq(&self, x: &[i64], y: &[i64]) -> bool {
        self.key(x) == self.key(y)
    }

    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &di in &self.d {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..di).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|y| apply(&self.p, &y)).collect()
    }

    pub fn lib(&self) -> Arc<FgAbGroup> {
        FgAbGroup::from_relation_rows(self.n(), &self.relations).unwrap()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A homomorphism `src → tgt` from multipliers `t[i][j]` in adapted coordinates.
pub fn hom_matrix(src: &Finite, tgt: &Finite, t: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n: Vec<Vec<i64>> = (0..tgt.n())
        .map(|i| {
            (0..src.n())
                .map(|j| t[i][j] * tgt.d[i] / gcd(tgt.d[i], src.d[j]))
                .collect()
        })
        .collect();
    let mut m = vec![vec![0; src.n()]; tgt.n()];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for a in 0..tgt.n() {
                for b in 0..src.n() {
                    *entry += tgt.p[i][a] * n[a][b] * src.p_inv[b][j];
                }
            }
        }
    }
    for r in &src.relations {
        assert!(tgt.is_zero(&apply(&m, r)), "constructed matrix is not a homomorphism");
    }
    m
}

pub fn lib_morphism(src: &Arc<FgAbGroup>, tgt: &Arc<FgAbGroup>, m: &[Vec<i64>]) -> GroupMorphism {
    GroupMorphism::new(src, tgt, IntMatrix::from_rows(src.n_generators(), m).unwrap()).unwrap()
}

pub fn image_size(src: &Finite, tgt: &Finite, m: &[Vec<i64>]) -> usize {
    src.elements()
        .iter()
        .map(|x| tgt.key(&apply(m, x)))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Finite groups of order at most `max`.
pub fn finite(max: i64) -> impl Strategy<Value = Finite> {
    prop_oneof![
        (1..=max).prop_map(|d| Finite::new(vec![d], 0)),
        (1..=max, 1..=max, -3..=3i64)
            .prop_filter("order bound", move |(a, b, _)| a * b <= max)
            .prop_map(|(a, b, t)| Finite::new(vec![a, b], t)),
    ]
}

/// Multipliers for a `tgt.n() × src.n()` homomorphism.
pub fn multipliers() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3..=3i64, 2), 2)
}
