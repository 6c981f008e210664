//! The pointed metric space on `{0, 1, ..., d}` whose Lipschitz-free unit
//! ball is the dual body: `ℓ - a` between distinct nonzero points and
//! `ℓ/2` from the marked point 0.

use num_traits::{Signed, Zero};

use crate::error::{bad_params, Result};
use crate::exactnum::Rational;
use crate::structmat::DenseMatrix;

pub fn metric_space(d: usize, ell: &Rational, a: &Rational) -> Result<DenseMatrix<Rational>> {
    if d < 2 {
        return Err(bad_params(format!("d ≥ 2 (got d = {d})")));
    }
    if !a.is_positive() || a >= ell {
        return Err(bad_params(format!("0 < a < ℓ (got ℓ = {ell}, a = {a})")));
    }
    let half = ell / Rational::from_integer(2.into());
    let inner = ell - a;
    let m = DenseMatrix::from_fn(d + 1, d + 1, |i, j| {
        if i == j {
            Rational::zero()
        } else if i == 0 || j == 0 {
            half.clone()
        } else {
            inner.clone()
        }
    });
    check_triangle(&m)?;
    Ok(m)
}

fn check_triangle(m: &DenseMatrix<Rational>) -> Result<()> {
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if m.get(i, j) > &(m.get(i, k) + m.get(k, j)) {
                    return Err(bad_params(format!(
                        "triangle inequality d({i},{j}) ≤ d({i},{k}) + d({k},{j})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Buneman's four-point condition: for every four distinct points the two
/// largest of the three pair-sums coincide. Requires a symmetric matrix
/// with zero diagonal.
pub fn four_point_check(metric: &DenseMatrix<Rational>) -> Result<bool> {
    let n = metric.rows();
    if !metric.is_square() {
        return Err(bad_params("square distance matrix"));
    }
    for i in 0..n {
        if !metric.get(i, i).is_zero() {
            return Err(bad_params("zero diagonal"));
        }
        for j in 0..i {
            if metric.get(i, j) != metric.get(j, i) {
                return Err(bad_params("symmetric distance matrix"));
            }
        }
    }
    let d = |i: usize, j: usize| metric.get(i, j);
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                for s in r + 1..n {
                    let mut sums = [d(p, q) + d(r, s), d(p, r) + d(q, s), d(p, s) + d(q, r)];
                    sums.sort();
                    if sums[1] != sums[2] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
