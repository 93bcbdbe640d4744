//! Smith normal form of dense integer matrices.
//!
//! Produces unimodular `U`, `V` and diagonal `D` with `U * M * V = D`,
//! `d_1 | d_2 | ...` and all `d_i >= 0`. The inverse of `U` is tracked as
//! well since subquotient computations need the new generators in terms of
//! the old ones.

use super::{Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> Smith<T> {
    /// Diagonal entries `d_1, ..., d_min(m,n)`.
    pub fn diagonal(&self) -> Vec<T> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form of `m`.
pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> Smith<T> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut u = Matrix::identity(nr);
    let mut u_inv = Matrix::identity(nr);
    let mut v = Matrix::identity(nc);

    for t in 0..nr.min(nc) {
        loop {
            // Smallest nonzero entry of the trailing block.
            let mut best: Option<(usize, usize, T)> = None;
            for i in t..nr {
                for j in t..nc {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    let ax = x.abs();
                    if best.as_ref().map_or(true, |b| ax < b.2) {
                        let unit = ax.is_one();
                        best = Some((i, j, ax));
                        if unit {
                            break;
                        }
                    }
                }
                if best.as_ref().is_some_and(|b| b.2.is_one()) {
                    break;
                }
            }
            let Some((pi, pj, _)) = best else {
                return finish(a, u, u_inv, v);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..nr {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&p);
                let nq = q.neg();
                a.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                u_inv.add_col(t, i, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..nc {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&p).neg();
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let offender = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !p.divides(&a[(i, j)])));
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &one.neg());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    finish(a, u, u_inv, v)
}

fn finish<T: Scalar>(d: Matrix<T>, u: Matrix<T>, u_inv: Matrix<T>, v: Matrix<T>) -> Smith<T> {
    Smith { u, u_inv, d, v }
}
