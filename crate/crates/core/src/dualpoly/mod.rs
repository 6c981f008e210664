//! The polar dual `J_d(b, c)` of the isocanted cube, with `b = 1/(ℓ-a)` and
//! `c = 2/ℓ`. Its vertices are the molecules `m_{i,j}`; its facets are two
//! extraordinary simplices on `Σx = ∓c` and one ordinary roof-shaped facet
//! per proper subset `I ⊂ [d]` and sign.
//!
//! The volume is summed as pyramids over facets with apex at the origin.
//! All radicals from facet heights and origin distances cancel, leaving
//! `(2/d!) Σ_{j<d} C(d+j-1, j) b^j c^(d-j)`.

mod facets;
mod metric;

pub use facets::{
    contains, facet_hyperplanes, facet_roof_spec, facet_vertices, halfspaces,
    hyperplane_origin_distance, FacetHyperplane, FacetId, MAX_FACET_DIM,
};
pub use metric::{four_point_check, metric_space};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{bad_params, Result};
use crate::exactnum::{binomial, binomial_rat, factorial_rat, Rational, Surd};
use crate::isocanted::IsocantedParams;
use crate::roofs;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualParams {
    d: usize,
    b: Rational,
    c: Rational,
}

impl DualParams {
    pub fn new(d: usize, b: Rational, c: Rational) -> Result<DualParams> {
        if d < 2 {
            return Err(bad_params(format!("d ≥ 2 (got d = {d})")));
        }
        if !b.is_positive() || !c.is_positive() {
            return Err(bad_params(format!("b > 0 and c > 0 (got b = {b}, c = {c})")));
        }
        Ok(DualParams { d, b, c })
    }

    /// `b = 1/(ℓ - a)`, `c = 2/ℓ`.
    pub fn from_primal(p: &IsocantedParams) -> DualParams {
        DualParams {
            d: p.dim(),
            b: (p.ell() - p.a()).recip(),
            c: Rational::from_integer(2.into()) / p.ell(),
        }
    }

    /// `ℓ = 2/c`, `a = (2b - c)/(bc)`. Requires `b ≥ c/2` so that `a ≥ 0`.
    pub fn to_primal(&self) -> Result<IsocantedParams> {
        let two = Rational::from_integer(2.into());
        if &self.b * &two < self.c {
            return Err(bad_params(format!(
                "b ≥ c/2 (got b = {}, c = {})",
                self.b, self.c
            )));
        }
        let ell = &two / &self.c;
        let a = (&two * &self.b - &self.c) / (&self.b * &self.c);
        IsocantedParams::new(self.d, ell, a)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }
}

/// The vertex `m_{i,j}` of the dual body, with index 0 standing for the
/// marked point: `c e_i` if `j = 0`, `-c e_j` if `i = 0`, else `b (e_i - e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Molecule {
    pub i: usize,
    pub j: usize,
    pub point: Vec<Rational>,
}

/// `m_{i,j}` for `i != j` in `0..=d`.
pub fn molecule(p: &DualParams, i: usize, j: usize) -> Molecule {
    assert!(i != j && i <= p.d && j <= p.d, "invalid molecule index ({i}, {j})");
    let mut point = vec![Rational::zero(); p.d];
    if j == 0 {
        point[i - 1] = p.c.clone();
    } else if i == 0 {
        point[j - 1] = -p.c.clone();
    } else {
        point[i - 1] = p.b.clone();
        point[j - 1] = -p.b.clone();
    }
    Molecule { i, j, point }
}

/// All `(d+1) d` molecules, ordered by `i` then `j`.
pub fn molecules(p: &DualParams) -> Vec<Molecule> {
    let mut out = Vec::with_capacity((p.d + 1) * p.d);
    for i in 0..=p.d {
        for j in 0..=p.d {
            if i != j {
                out.push(molecule(p, i, j));
            }
        }
    }
    out
}

/// Euclidean distance between two points, as an exact surd.
pub fn molecule_distance(m1: &Molecule, m2: &Molecule) -> Result<Surd> {
    assert_eq!(m1.point.len(), m2.point.len(), "molecules from different dimensions");
    let sq = m1
        .point
        .iter()
        .zip(&m2.point)
        .fold(Rational::zero(), |acc, (x, y)| acc + (x - y) * (x - y));
    Surd::sqrt(&sq)
}

/// `f_k = (2^(k+2) - 2) C(d+1, k+2)` for `k = 0..d-1`.
pub fn f_vector(d: usize) -> Vec<BigInt> {
    (0..d)
        .map(|k| {
            let lead = (BigInt::one() << (k + 2)) - 2;
            lead * binomial((d + 1) as u64, (k + 2) as i64)
        })
        .collect()
}

/// Volume of the pyramid over an extraordinary facet: `c^d / d!`.
pub fn pyramid_volume_extraordinary(d: usize, c: &Rational) -> Rational {
    num_traits::pow(c.clone(), d) / factorial_rat(d as u64)
}

/// Volume of the pyramid over an ordinary facet with `|I| = V`:
/// `(1/d!) Σ_{n<V} C(d-V-1+n, n) b^(d-V+n) c^(V-n)`.
pub fn pyramid_volume_ordinary(d: usize, b: &Rational, c: &Rational, v: usize) -> Result<Rational> {
    if v < 1 || v + 1 > d {
        return Err(bad_params(format!("1 ≤ V ≤ d-1 (got V = {v}, d = {d})")));
    }
    let sum = (0..v).fold(Rational::zero(), |acc, n| {
        acc + binomial_rat((d - v - 1 + n) as u64, n as i64)
            * num_traits::pow(b.clone(), d - v + n)
            * num_traits::pow(c.clone(), v - n)
    });
    Ok(sum / factorial_rat(d as u64))
}

/// The same pyramid volume assembled geometrically: roof volume of the
/// facet times its distance to the origin, over `d`. Radicals cancel, so
/// the result is rational.
pub fn pyramid_volume_ordinary_via_roof(p: &DualParams, v: usize) -> Result<Surd> {
    let mask = (1u64 << v) - 1;
    let spec = facet_roof_spec(p, mask)?;
    let base = roofs::roof_volume(&spec)?;
    let dist = hyperplane_origin_distance(p, v)?;
    roofs::pyramid_volume(&base, &dist, p.d)
}

/// Closed form `(2/d!) Σ_{j<d} C(d+j-1, j) b^j c^(d-j)`, evaluated for any
/// rational `b`, `c` (the formula is a polynomial).
pub fn volume_bc(d: usize, b: &Rational, c: &Rational) -> Rational {
    let sum = (0..d).fold(Rational::zero(), |acc, j| {
        acc + binomial_rat((d + j - 1) as u64, j as i64)
            * num_traits::pow(b.clone(), j)
            * num_traits::pow(c.clone(), d - j)
    });
    Rational::from_integer(2.into()) * sum / factorial_rat(d as u64)
}

pub fn volume(p: &DualParams) -> Rational {
    volume_bc(p.d, &p.b, &p.c)
}

/// Twice the sum of pyramid volumes over one extraordinary facet and the
/// `C(d, V)` ordinary facets of each size `V`.
pub fn volume_pyramid_sum(p: &DualParams) -> Rational {
    let d = p.d;
    let mut total = pyramid_volume_extraordinary(d, &p.c);
    for v in 1..d {
        let pyr = pyramid_volume_ordinary(d, &p.b, &p.c, v).expect("1 ≤ V ≤ d-1");
        total += binomial_rat(d as u64, (d - v) as i64) * pyr;
    }
    Rational::from_integer(2.into()) * total
}

/// Dual volume in primal parameters:
/// `(2^(d+1) / (ℓ^d d!)) Σ_{j<d} C(d+j-1, j) (ℓ / (2(ℓ-a)))^j`.
pub fn volume_primal_params(p: &IsocantedParams) -> Rational {
    let d = p.dim();
    let ratio = p.ell() / (Rational::from_integer(2.into()) * (p.ell() - p.a()));
    let sum = (0..d).fold(Rational::zero(), |acc, j| {
        acc + binomial_rat((d + j - 1) as u64, j as i64) * num_traits::pow(ratio.clone(), j)
    });
    let lead = Rational::from_integer(BigInt::one() << (d + 1))
        / (num_traits::pow(p.ell().clone(), d) * factorial_rat(d as u64));
    lead * sum
}
