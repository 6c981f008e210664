//! The isocanted cube `I_d(ℓ, a)`: the cube `[-ℓ/2, ℓ/2]^d` cut by
//! `|x_j - x_k| <= ℓ - a`. It is the zonotope generated by the `d` scaled
//! axis segments plus one diagonal segment, and its volume is the Bose
//! determinant `(ℓ-a)^(d-1) (ℓ + (d-1) a)`.

use num_traits::{One, Signed, Zero};

use crate::error::{bad_params, Error, Result};
use crate::exactnum::Rational;
use crate::halfspace::HalfspaceSystem;

pub use crate::halfspace::Halfspace;

/// Largest dimension for explicit vertex enumeration.
pub const MAX_VERTEX_DIM: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsocantedParams {
    d: usize,
    ell: Rational,
    a: Rational,
}

/// Half-generators `y_i` of a zonotope `sum [-y_i, y_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    pub generators: Vec<Vec<Rational>>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Vec::len)
    }
}

impl IsocantedParams {
    /// Requires `d >= 2` and `0 <= a < ℓ`; `a = 0` is the plain cube.
    pub fn new(d: usize, ell: Rational, a: Rational) -> Result<IsocantedParams> {
        if d < 2 {
            return Err(bad_params(format!("d ≥ 2 (got d = {d})")));
        }
        if !ell.is_positive() {
            return Err(bad_params(format!("ℓ > 0 (got ℓ = {ell})")));
        }
        if a.is_negative() || a >= ell {
            return Err(bad_params(format!("0 ≤ a < ℓ (got ℓ = {ell}, a = {a})")));
        }
        Ok(IsocantedParams { d, ell, a })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn ell(&self) -> &Rational {
        &self.ell
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    fn half_ell(&self) -> Rational {
        &self.ell / Rational::from_integer(2.into())
    }

    fn require_cant(&self) -> Result<()> {
        if self.a.is_zero() {
            return Err(bad_params("0 < a < ℓ (a = 0 is the cube limit)"));
        }
        Ok(())
    }
}

/// `-ℓ/2 <= x_j <= ℓ/2` for every axis, then `x_j - x_k <= ℓ - a` for every
/// ordered pair `j != k`: `d^2 + d` halfspaces in all.
pub fn halfspaces(p: &IsocantedParams) -> HalfspaceSystem {
    let d = p.d;
    let half = p.half_ell();
    let gap = &p.ell - &p.a;
    let mut hs = HalfspaceSystem::new(d);
    for j in 0..d {
        for sign in [1i64, -1] {
            let mut n = vec![Rational::zero(); d];
            n[j] = Rational::from_integer(sign.into());
            hs.push(n, half.clone());
        }
    }
    for j in 0..d {
        for k in 0..d {
            if j != k {
                let mut n = vec![Rational::zero(); d];
                n[j] = Rational::one();
                n[k] = -Rational::one();
                hs.push(n, gap.clone());
            }
        }
    }
    hs
}

/// `y_i = (ℓ-a) e_i / 2` for each axis and `y_{d+1} = a (1, ..., 1) / 2`.
pub fn generators(p: &IsocantedParams) -> GeneratorSet {
    let two = Rational::from_integer(2.into());
    let side = (&p.ell - &p.a) / &two;
    let mut generators: Vec<Vec<Rational>> = (0..p.d)
        .map(|i| {
            let mut y = vec![Rational::zero(); p.d];
            y[i] = side.clone();
            y
        })
        .collect();
    generators.push(vec![&p.a / &two; p.d]);
    GeneratorSet { generators }
}

/// The `2^(d+1) - 2` vertices: for every nonempty `I ⊆ [d]` the point with
/// `ℓ/2` on `I` and `a - ℓ/2` off `I`, followed by the negatives of those.
pub fn vertices(p: &IsocantedParams) -> Result<Vec<Vec<Rational>>> {
    p.require_cant()?;
    if p.d > MAX_VERTEX_DIM {
        return Err(Error::DimensionTooLarge(p.d, MAX_VERTEX_DIM));
    }
    let high = p.half_ell();
    let low = &p.a - &high;
    let count = (1usize << p.d) - 1;
    let mut out = Vec::with_capacity(2 * count);
    for mask in 1..=count {
        out.push(
            (0..p.d)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        high.clone()
                    } else {
                        low.clone()
                    }
                })
                .collect::<Vec<_>>(),
        );
    }
    for k in 0..count {
        let neg = out[k].iter().map(|x| -x).collect();
        out.push(neg);
    }
    Ok(out)
}

/// Membership by direct evaluation of the defining inequalities.
pub fn contains(p: &IsocantedParams, x: &[Rational]) -> Result<bool> {
    if x.len() != p.d {
        return Err(Error::DimensionMismatch {
            expected: p.d,
            got: x.len(),
        });
    }
    let half = p.half_ell();
    let gap = &p.ell - &p.a;
    let in_box = x.iter().all(|v| v.abs() <= half);
    if !in_box {
        return Ok(false);
    }
    let lo = x.iter().min().expect("d >= 2");
    let hi = x.iter().max().expect("d >= 2");
    Ok(hi - lo <= gap)
}

/// `(ℓ - a)^(d-1) (ℓ + (d-1) a)`.
pub fn volume(p: &IsocantedParams) -> Rational {
    let d = p.d;
    num_traits::pow(&p.ell - &p.a, d - 1) * (&p.ell + Rational::from_integer((d - 1).into()) * &p.a)
}

/// The chance that `d` people arriving uniformly in a unit interval, each
/// waiting `wait`, are all present at once: the volume of `I_d(1, 1 - wait)`.
pub fn meeting_probability(d: usize, wait: &Rational) -> Result<Rational> {
    if !wait.is_positive() || *wait > Rational::one() {
        return Err(bad_params(format!("0 < wait ≤ 1 (got wait = {wait})")));
    }
    let p = IsocantedParams::new(d, Rational::one(), Rational::one() - wait)?;
    Ok(volume(&p))
}
