//! Smith and Hermite normal forms, integer kernels and integer linear solving.

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u · m · v = d` with `u`, `v` unimodular.
///
/// The inverses are carried along so that callers can move between the
/// original coordinates and the diagonal ones without re-inverting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&x| x != 0).count()
    }
}

struct SnfState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += k row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, -k);
    }

    /// col[dst] += k col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, -k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Moves the smallest nonzero entry of the block `[t.., t..]` to `(t, t)`.
    fn pivot_block(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                    best = Some((i, j, x));
                }
            }
        }
        match best {
            Some((i, j, _)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }

    /// Moves the smallest nonzero entry of row `t` / column `t` to `(t, t)`.
    fn pivot_cross(&mut self, t: usize) {
        let mut best = (t, t, self.a[(t, t)].abs());
        for i in t + 1..self.a.rows() {
            let x = self.a[(i, t)].abs();
            if x != 0 && (best.2 == 0 || x < best.2) {
                best = (i, t, x);
            }
        }
        for j in t + 1..self.a.cols() {
            let x = self.a[(t, j)].abs();
            if x != 0 && (best.2 == 0 || x < best.2) {
                best = (t, j, x);
            }
        }
        self.swap_rows(t, best.0);
        self.swap_cols(t, best.1);
    }

    fn eliminate_cross(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)];
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            let q = self.a[(i, t)] / p;
            self.add_row(i, t, -q);
            clean &= self.a[(i, t)] == 0;
        }
        for j in t + 1..self.a.cols() {
            let q = self.a[(t, j)] / p;
            self.add_col(j, t, -q);
            clean &= self.a[(t, j)] == 0;
        }
        clean
    }

    fn find_non_multiple(&self, t: usize) -> Option<usize> {
        let p = self.a[(t, t)];
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| self.a[(i, j)] % p != 0))
    }
}

/// Smith normal form of an arbitrary integer matrix.
///
/// Returns unimodular `u`, `v` with `u · m · v = d`, `d` diagonal with
/// nonnegative entries and `d₁ | d₂ | …`; zeros trail the nonzero entries.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = SnfState {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        if !s.pivot_block(t) {
            break;
        }
        loop {
            if !s.eliminate_cross(t) {
                s.pivot_cross(t);
                continue;
            }
            match s.find_non_multiple(t) {
                Some(i) => s.add_row(t, i, 1),
                None => break,
            }
        }
        if s.a[(t, t)] < 0 {
            s.negate_row(t);
        }
    }
    Smith {
        u: s.u,
        u_inv: s.u_inv,
        d: s.a,
        v: s.v,
        v_inv: s.v_inv,
    }
}

/// Basis of the integer kernel `{x ∈ Zⁿ : m x = 0}` as columns of the returned
/// matrix (`cols(m) × k`).
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    snf.v.col_block(r, m.cols())
}

/// Some integer solution of `m x = b`, or `None` when none exists.
pub fn solve_integer(m: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(m.rows(), b.len());
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let diag = snf.diagonal();
    let mut w = vec![0i64; m.cols()];
    for (i, &ci) in c.iter().enumerate() {
        let di = diag.get(i).copied().unwrap_or(0);
        if di == 0 {
            if ci != 0 {
                return None;
            }
        } else {
            if ci % di != 0 {
                return None;
            }
            w[i] = ci / di;
        }
    }
    Some(snf.v.mul_vec(&w))
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
///
/// The returned rows are nonzero, in echelon form with strictly increasing
/// pivot columns, positive pivots, and entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| a[(i, c)] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let &min_i = nz.iter().min_by_key(|&&i| a[(i, c)].abs()).unwrap();
            a.swap_rows(r, min_i);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..rows {
                let q = a[(i, c)] / a[(r, c)];
                a.add_row_multiple(i, r, -q);
            }
        }
        if a[(r, c)] == 0 {
            continue;
        }
        if a[(r, c)] < 0 {
            a.negate_row(r);
        }
        let p = a[(r, c)];
        for i in 0..r {
            let q = a[(i, c)].div_euclid(p);
            a.add_row_multiple(i, r, -q);
        }
        r += 1;
    }
    a.row_block(0, r)
}

/// Reduces `x` modulo the lattice whose Hermite basis is `hnf` (as produced by
/// [`hermite_rows`]). Two vectors in the same coset reduce to the same output.
pub fn reduce_mod_hermite(hnf: &IntMatrix, x: &[i64]) -> Vec<i64> {
    let mut x = x.to_vec();
    for i in 0..hnf.rows() {
        let row = hnf.row(i);
        let Some(c) = row.iter().position(|&v| v != 0) else {
            continue;
        };
        let q = x[c].div_euclid(row[c]);
        for (xj, rj) in x.iter_mut().zip(row) {
            *xj -= q * rj;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "U M V != D for {m}");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for w in diag.windows(2) {
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        assert!(diag.iter().all(|&x| x >= 0));
        s
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(check(&m).diagonal(), vec![2, 4]);
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(check(&IntMatrix::identity(2)).diagonal(), vec![1, 1]);
        assert_eq!(check(&IntMatrix::zeros(1, 1)).diagonal(), vec![0]);
    }

    #[test]
    fn degenerate_shapes() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
        check(&IntMatrix::zeros(0, 0));
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is diagonal but not in Smith form: expected diag(1, 6).
        let m = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(check(&m).diagonal(), vec![1, 6]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows(2, &[vec![2, -3]]).unwrap();
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 1);
        let kv = k.column(0);
        assert_eq!(2 * kv[0] - 3 * kv[1], 0);
        assert_eq!(kv[0].abs(), 3);
        let x = solve_integer(&m, &[1]).unwrap();
        assert_eq!(2 * x[0] - 3 * x[1], 1);
        let m2 = IntMatrix::from_rows(1, &[vec![2]]).unwrap();
        assert_eq!(solve_integer(&m2, &[3]), None);
    }

    #[test]
    fn hermite_reduction_is_canonical() {
        let m = IntMatrix::from_rows(2, &[vec![4, 6], vec![2, 2]]).unwrap();
        let h = hermite_rows(&m);
        let a = reduce_mod_hermite(&h, &[7, 3]);
        let b = reduce_mod_hermite(&h, &[7 + 4 - 2, 3 + 6 - 2]);
        assert_eq!(a, b);
    }
}
