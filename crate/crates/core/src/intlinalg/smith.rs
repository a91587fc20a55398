use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `u * a * v = d` together with the inverses of both
/// transforms, which the homology and solving code need.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_row_multiple(dst, src, q);
        self.u.add_row_multiple(dst, src, q);
        self.u_inv.add_col_multiple(src, dst, &-q);
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_col_multiple(dst, src, q);
        self.v.add_col_multiple(dst, src, q);
        self.v_inv.add_row_multiple(src, dst, &-q);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of a nonzero entry of least absolute value in the trailing block.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| x.abs() < self.d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn reduce_at(&mut self, t: usize) {
        let (m, n) = (self.d.rows(), self.d.cols());
        loop {
            let p = self.d[(t, t)].clone();
            for i in t + 1..m {
                if !self.d[(i, t)].is_zero() {
                    let q = self.d[(i, t)].div_floor(&p);
                    self.add_row(i, t, &-q);
                }
            }
            for j in t + 1..n {
                if !self.d[(t, j)].is_zero() {
                    let q = self.d[(t, j)].div_floor(&p);
                    self.add_col(j, t, &-q);
                }
            }

            // Leftover remainders are strictly smaller than the pivot: move the
            // smallest into the pivot slot and clear again.
            let col_rem = (t + 1..m)
                .filter(|&i| !self.d[(i, t)].is_zero())
                .min_by_key(|&i| self.d[(i, t)].abs());
            let row_rem = (t + 1..n)
                .filter(|&j| !self.d[(t, j)].is_zero())
                .min_by_key(|&j| self.d[(t, j)].abs());
            match (col_rem, row_rem) {
                (Some(i), Some(j)) => {
                    if self.d[(i, t)].abs() <= self.d[(t, j)].abs() {
                        self.swap_rows(t, i);
                    } else {
                        self.swap_cols(t, j);
                    }
                    continue;
                }
                (Some(i), None) => {
                    self.swap_rows(t, i);
                    continue;
                }
                (None, Some(j)) => {
                    self.swap_cols(t, j);
                    continue;
                }
                (None, None) => {}
            }

            // Enforce the divisibility chain.
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !self.d[(i, j)].is_multiple_of(&p))
            });
            match bad {
                Some(i) => self.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if self.d[(t, t)].is_negative() {
            self.negate_row(t);
        }
    }
}

/// Computes the Smith normal form of `a` with unimodular transforms.
///
/// Pivots are chosen by least absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        d: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = r.min_entry(t) else { break };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        r.reduce_at(t);
        t += 1;
    }
    SmithForm { d: r.d, u: r.u, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv, rank: t }
}

/// Finds an integer `x` with `a * x = b`, or `None` when no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let snf = smith_normal_form(a);
    solve_with(&snf, b)
}

pub(crate) fn solve_with(snf: &SmithForm, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = snf.u.mul_vec(b);
    let r = snf.rank();
    if c[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); snf.v.cols()];
    for i in 0..r {
        let (q, rem) = c[i].div_rem(&snf.d[(i, i)]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(snf.v.mul_vec(&y))
}

/// A basis of the integer kernel of `a`, as the columns of the returned matrix.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    snf.v.column_range(snf.rank(), a.cols())
}
