//! The parallelepiped spanned by the columns of the Bose matrix, translated
//! so its barycenter sits at the origin, and its polar dual.

use num_traits::{One, Zero};

use super::bose;
use crate::error::Result;
use crate::exactnum::Rational;

/// The affine hyperplane `<normal, x> = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetEquation {
    pub normal: Vec<Rational>,
    pub rhs: Rational,
}

impl FacetEquation {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (n, v)| acc + n * v)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x) == self.rhs
    }
}

/// Translation vector `-(ell + (d-1) a)/2 * (1, ..., 1)` centering the
/// parallelepiped.
pub fn par_translation(ell: &Rational, a: &Rational, d: usize) -> Result<Vec<Rational>> {
    bose(ell, a, d)?;
    let shift = -(ell + Rational::from_integer((d - 1).into()) * a) / Rational::from_integer(2.into());
    Ok(vec![shift; d])
}

/// The `2^d` vertices of the centered parallelepiped, ordered by subset size
/// and then lexicographically by the subset of Bose columns summed.
pub fn par_vertices(ell: &Rational, a: &Rational, d: usize) -> Result<Vec<Vec<Rational>>> {
    let columns = bose(ell, a, d)?.to_dense().columns();
    let shift = par_translation(ell, a, d)?;
    let mut subsets: Vec<Vec<usize>> = Vec::with_capacity(1 << d);
    for size in 0..=d {
        push_combinations(d, size, &mut Vec::new(), 0, &mut subsets);
    }
    Ok(subsets
        .into_iter()
        .map(|subset| {
            let mut v = shift.clone();
            for &k in &subset {
                for (x, c) in v.iter_mut().zip(&columns[k]) {
                    *x += c;
                }
            }
            v
        })
        .collect())
}

fn push_combinations(
    n: usize,
    size: usize,
    current: &mut Vec<usize>,
    start: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for k in start..n {
        current.push(k);
        push_combinations(n, size, current, k + 1, out);
        current.pop();
    }
}

/// The `2d` supporting hyperplanes
/// `(ell + (d-2) a) x_i - a * sum_{j != i} x_j = ±(ell - a)(ell + (d-1) a)/2`,
/// listed as all `+` equations followed by all `-` equations.
pub fn par_facet_equations(ell: &Rational, a: &Rational, d: usize) -> Result<Vec<FacetEquation>> {
    bose(ell, a, d)?;
    let n = |k: usize| Rational::from_integer(k.into());
    let diag = ell + (n(d) - n(2)) * a;
    let rhs = (ell - a) * (ell + n(d - 1) * a) / n(2);
    let mut out = Vec::with_capacity(2 * d);
    for sign in [Rational::one(), -Rational::one()] {
        for i in 0..d {
            let normal = (0..d)
                .map(|j| if i == j { diag.clone() } else { -a.clone() })
                .collect();
            out.push(FacetEquation {
                normal,
                rhs: &sign * &rhs,
            });
        }
    }
    Ok(out)
}

/// Vertices of the polar dual of the centered parallelepiped: the columns of
/// `2 M^{-1}` followed by those of `-2 M^{-1}`.
pub fn par_polar_vertices(ell: &Rational, a: &Rational, d: usize) -> Result<Vec<Vec<Rational>>> {
    let inv = bose(ell, a, d)?.inverse()?.to_dense();
    let two = Rational::from_integer(2.into());
    let plus: Vec<Vec<Rational>> = inv
        .columns()
        .into_iter()
        .map(|c| c.into_iter().map(|x| x * &two).collect())
        .collect();
    let minus: Vec<Vec<Rational>> = plus
        .iter()
        .map(|c| c.iter().map(|x| -x).collect())
        .collect();
    Ok(plus.into_iter().chain(minus).collect())
}
