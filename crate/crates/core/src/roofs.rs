//! Reference volumes (simplex, cross-polytope, cube, pyramid) and roofs:
//! prismatoids whose major base is a product of two regular simplices of
//! edge `ℓ₁` and whose crest is a regular simplex of edge `ℓ₂`, with every
//! section parallel to the base again a product of simplices.
//!
//! Regular simplices `Δ_k(ℓ)` have volume `√((k+1)/2^k) ℓ^k / k!`, and a
//! point has volume 1 so that pyramids and roofs degenerate cleanly.

use num_traits::{One, Signed};

use crate::error::{bad_params, Result};
use crate::exactnum::{binomial_rat, factorial_rat, Rational, Surd};

/// `Roof(C, V, ℓ₁, ℓ₂, h)` of dimension `V + C - 1`: major base
/// `Δ_{V-1}(ℓ₁) × Δ_{C-1}(ℓ₁)`, crest `Δ_{V-1}(ℓ₂)`, height `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoofSpec {
    c: usize,
    v: usize,
    ell1: Surd,
    ell2: Surd,
    h: Surd,
}

impl RoofSpec {
    pub fn new(c: usize, v: usize, ell1: Surd, ell2: Surd, h: Surd) -> Result<RoofSpec> {
        if c < 1 || v < 1 {
            return Err(bad_params(format!("C ≥ 1 and V ≥ 1 (got C = {c}, V = {v})")));
        }
        if !ell1.is_positive() {
            return Err(bad_params(format!("ℓ₁ > 0 (got {ell1})")));
        }
        if ell2.coefficient().is_negative() {
            return Err(bad_params(format!("ℓ₂ ≥ 0 (got {ell2})")));
        }
        if !h.is_positive() {
            return Err(bad_params(format!("h > 0 (got {h})")));
        }
        Ok(RoofSpec { c, v, ell1, ell2, h })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn ell1(&self) -> &Surd {
        &self.ell1
    }

    pub fn ell2(&self) -> &Surd {
        &self.ell2
    }

    pub fn height(&self) -> &Surd {
        &self.h
    }

    /// `V + C - 1`.
    pub fn dim(&self) -> usize {
        self.v + self.c - 1
    }

    /// `√(CV / 2^(d-1))`, shared by the section and volume formulas.
    fn base_factor(&self) -> Result<Surd> {
        let cv = Rational::from_integer((self.c * self.v).into());
        let pow2 = num_traits::pow(Rational::from_integer(2.into()), self.dim() - 1);
        Surd::sqrt(&(cv / pow2))
    }
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Volume of the regular `d`-simplex with edge `ell`.
pub fn simplex_volume(d: usize, ell: &Surd) -> Result<Surd> {
    let factor = Surd::sqrt(&(int(d + 1) / num_traits::pow(int(2), d)))?;
    Ok(factor.try_mul(&ell.pow(d as u32))?.scale(&factor_recip(d)))
}

/// Volume of the `d`-cross-polytope with edge `ell`.
pub fn cross_polytope_volume(d: usize, ell: &Surd) -> Result<Surd> {
    let factor = Surd::sqrt(&num_traits::pow(int(2), d))?;
    Ok(factor.try_mul(&ell.pow(d as u32))?.scale(&factor_recip(d)))
}

pub fn cube_volume(d: usize, ell: &Rational) -> Rational {
    num_traits::pow(ell.clone(), d)
}

/// `base * height / d`.
pub fn pyramid_volume(base_volume: &Surd, height: &Surd, d: usize) -> Result<Surd> {
    assert!(d >= 1, "pyramid dimension must be positive");
    Ok(base_volume.try_mul(height)?.scale(&Rational::new(1.into(), d.into())))
}

/// Circumradius `√(d / (2(d+1))) ℓ` of the regular `d`-simplex.
pub fn circumradius(d: usize, ell: &Surd) -> Result<Surd> {
    let factor = Surd::sqrt(&(int(d) / int(2 * (d + 1))))?;
    factor.try_mul(ell)
}

/// Lateral edge length:
/// `ℓ₃² = h² + r_{C-1}(ℓ₁)² + (r_{V-1}(ℓ₁) - r_{V-1}(ℓ₂))²`.
pub fn ell3(spec: &RoofSpec) -> Result<Surd> {
    let r_c = circumradius(spec.c - 1, &spec.ell1)?;
    let r_v1 = circumradius(spec.v - 1, &spec.ell1)?;
    let r_v2 = circumradius(spec.v - 1, &spec.ell2)?;
    let offset = r_v1.try_sub(&r_v2)?;
    Surd::sqrt(&(spec.h.square() + r_c.square() + offset.square()))
}

/// `(d-1)`-volume of the section at relative height `t = s/h ∈ [0, 1]`:
/// a copy of `Δ_{V-1}(ℓ₁(1-t) + ℓ₂ t) × Δ_{C-1}(ℓ₁(1-t))`.
pub fn section_volume(spec: &RoofSpec, t: &Rational) -> Result<Surd> {
    if t.is_negative() || *t > Rational::one() {
        return Err(bad_params(format!("0 ≤ s/h ≤ 1 (got {t})")));
    }
    let (c, v) = (spec.c, spec.v);
    let one_minus = Rational::one() - t;
    let mut sum = Surd::zero();
    for n in 0..v {
        let lengths = spec
            .ell1
            .pow((c - 1 + n) as u32)
            .try_mul(&spec.ell2.pow((v - 1 - n) as u32))?;
        let weight = binomial_rat((v - 1) as u64, n as i64)
            * num_traits::pow(one_minus.clone(), c - 1 + n)
            * num_traits::pow(t.clone(), v - 1 - n);
        sum = sum.try_add(&lengths.scale(&weight))?;
    }
    let norm = (factorial_rat((c - 1) as u64) * factorial_rat((v - 1) as u64)).recip();
    Ok(spec.base_factor()?.try_mul(&sum)?.scale(&norm))
}

/// `(h/d!) √(CV/2^(d-1)) Σ_{n<V} C(C-1+n, n) ℓ₁^(C-1+n) ℓ₂^(V-1-n)`.
pub fn roof_volume(spec: &RoofSpec) -> Result<Surd> {
    let (c, v) = (spec.c, spec.v);
    let mut sum = Surd::zero();
    for n in 0..v {
        let lengths = spec
            .ell1
            .pow((c - 1 + n) as u32)
            .try_mul(&spec.ell2.pow((v - 1 - n) as u32))?;
        sum = sum.try_add(&lengths.scale(&binomial_rat((c - 1 + n) as u64, n as i64)))?;
    }
    spec.h
        .try_mul(&spec.base_factor()?)?
        .try_mul(&sum)
        .map(|s| s.scale(&factor_recip(spec.dim())))
}

/// Frustum of a square-based pyramid with base areas `a²`, `b²`.
pub fn frustum_volume_egyptian(a: &Rational, b: &Rational, h: &Rational) -> Rational {
    h * (a * a + a * b + b * b) / int(3)
}

fn factor_recip(d: usize) -> Rational {
    factorial_rat(d as u64).recip()
}

impl RoofSpec {
    /// Convenience for all-rational roofs.
    pub fn rational(c: usize, v: usize, ell1: Rational, ell2: Rational, h: Rational) -> Result<RoofSpec> {
        RoofSpec::new(
            c,
            v,
            Surd::from_rational(ell1),
            Surd::from_rational(ell2),
            Surd::from_rational(h),
        )
    }
}
