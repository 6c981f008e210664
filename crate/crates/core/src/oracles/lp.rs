use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::halfspace::{Halfspace, HalfspaceSystem};

pub const MAX_LP_DIM: usize = 4;

/// Every vertex of a bounded H-polytope, found by intersecting all
/// `d`-subsets of boundary hyperplanes and keeping the feasible points.
/// Output is sorted and deduplicated.
pub fn lp_vertices(hs: &HalfspaceSystem) -> Result<Vec<Vec<Rational>>> {
    let d = hs.dim();
    if d > MAX_LP_DIM {
        return Err(Error::DimensionTooLarge(d, MAX_LP_DIM));
    }
    if !is_bounded(hs) {
        return Err(Error::Unbounded);
    }
    Ok(basic_feasible_points(hs.halfspaces(), d))
}

/// Bounded iff the recession cone `{A x <= 0}` is `{0}`. The cone is cut
/// with `[-1, 1]^d`, which makes it a polytope; it is trivial iff all of
/// that polytope's vertices are the origin.
fn is_bounded(hs: &HalfspaceSystem) -> bool {
    let d = hs.dim();
    let mut cone: Vec<Halfspace> = hs
        .halfspaces()
        .iter()
        .map(|h| Halfspace {
            normal: h.normal.clone(),
            offset: Rational::zero(),
        })
        .collect();
    for k in 0..d {
        for s in [1i64, -1] {
            let mut normal = vec![Rational::zero(); d];
            normal[k] = Rational::from_integer(s.into());
            cone.push(Halfspace {
                normal,
                offset: Rational::one(),
            });
        }
    }
    basic_feasible_points(&cone, d)
        .iter()
        .all(|v| v.iter().all(Zero::is_zero))
}

fn basic_feasible_points(hs: &[Halfspace], d: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    if hs.len() < d {
        return out;
    }
    loop {
        let rows: Vec<&Halfspace> = idx.iter().map(|&i| &hs[i]).collect();
        if let Some(x) = solve(&rows) {
            if hs.iter().all(|h| h.satisfied_by(&x)) {
                out.push(x);
            }
        }
        // Next lexicographic combination.
        let Some(pos) = (0..d).rev().find(|&k| idx[k] < hs.len() - d + k) else {
            break;
        };
        idx[pos] += 1;
        for k in pos + 1..d {
            idx[k] = idx[k - 1] + 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Unique solution of `<n_i, x> = o_i`, or `None` when singular.
fn solve(rows: &[&Halfspace]) -> Option<Vec<Rational>> {
    let d = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|h| {
            let mut r = h.normal.clone();
            r.push(h.offset.clone());
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (dst, src) in m[r][col..=d].iter_mut().zip(&pivot_row[col..=d]) {
                    *dst -= &f * src;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented row")).collect())
}
