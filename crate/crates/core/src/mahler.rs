//! Volume product `vol(I_d) · vol(J_d)` and the polynomial
//!
//! ```text
//! p_d(x) = d! · P(I_d(1, 1 - x)) - 4^d,      x = (ℓ - a)/ℓ ∈ (0, 1]
//! ```
//!
//! whose positivity on `(0, 1)` is the Mahler inequality for this family.
//! The certificate is Descartes' rule of signs: after removing the root at
//! zero, one sign change means one positive root, and that root is `x = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dualpoly;
use crate::error::{bad_params, Error, Result};
use crate::exactnum::{binomial, factorial_rat, rat, Polynomial, Rational};
use crate::isocanted::{self, IsocantedParams};

/// Grid denominator for the redundant positivity sampling.
const GRID: i64 = 32;

/// How the constant term was handled before sign counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantTerm {
    Positive,
    /// `a₀ = 0`; a power of `x` was factored out first (only `d = 2`).
    ZeroFactorable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MahlerCertificate {
    pub d: usize,
    pub coefficients: Vec<Rational>,
    pub k_threshold: usize,
    /// Sign changes of the cofactor after dividing out `x^m`.
    pub sign_change_count: usize,
    pub value_at_one: Rational,
    pub constant_term: ConstantTerm,
    pub verdict: bool,
}

impl MahlerCertificate {
    /// `+`, `-` or `0` per coefficient, ascending degree.
    pub fn sign_pattern(&self) -> String {
        self.coefficients
            .iter()
            .map(|c| {
                if c.is_positive() {
                    '+'
                } else if c.is_negative() {
                    '-'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

pub fn volume_product(ell: &Rational, a: &Rational, d: usize) -> Result<Rational> {
    let p = IsocantedParams::new(d, ell.clone(), a.clone())?;
    Ok(isocanted::volume(&p) * dualpoly::volume_primal_params(&p))
}

/// `4^d / d!`, the conjectured minimum.
pub fn mahler_lower_bound(d: usize) -> Rational {
    Rational::from_integer(BigInt::from(4).pow(d as u32)) / factorial_rat(d as u64)
}

pub fn mahler_polynomial(d: usize) -> Result<Polynomial> {
    if d < 2 {
        return Err(bad_params(format!("d ≥ 2 (got d = {d})")));
    }
    let di = d as i64;
    let n = d as u64;
    let two = BigInt::from(2);
    let mut coeffs = Vec::with_capacity(d + 1);
    coeffs.push(BigInt::from(4 * di) * binomial(2 * n - 2, di - 1) - BigInt::from(4).pow(d as u32));
    for k in 1..d {
        let inner = BigInt::from(2 * di) * binomial(2 * n - 2 - k as u64, di - 1)
            - BigInt::from(di - 1) * binomial(2 * n - 1 - k as u64, di - 1);
        coeffs.push(two.pow(k as u32 + 1) * inner);
    }
    coeffs.push(-(two.pow(d as u32 + 1) * BigInt::from(di - 1)));
    Ok(Polynomial::new(
        coeffs.into_iter().map(Rational::from_integer).collect(),
    ))
}

/// `⌊(3d - 1)/(d + 1)⌋`: the last index with `a_k ≥ 0` (for `k ≥ 1`).
pub fn k_threshold(d: usize) -> Result<usize> {
    if d < 3 {
        return Err(bad_params(format!("d ≥ 3 (got d = {d})")));
    }
    Ok((3 * d - 1) / (d + 1))
}

/// Rational sufficient test for `C(2d-2, d-1) ≥ 4^(d-1) / √(π (d - 1/2))`.
pub fn central_binomial_bound(d: usize) -> bool {
    if d == 0 {
        return true;
    }
    let pi_lower = rat(314_159, 100_000);
    let c = Rational::from_integer(binomial(2 * d as u64 - 2, d as i64 - 1));
    let lhs = &c * &c * (Rational::from_integer(d.into()) - rat(1, 2)) * pi_lower;
    lhs >= Rational::from_integer(BigInt::from(16).pow(d as u32 - 1))
}

pub fn positivity_certificate(d: usize) -> Result<MahlerCertificate> {
    let p = mahler_polynomial(d)?;
    let fail = |clause: &str| Error::CertificateFailure {
        d,
        clause: clause.to_string(),
    };
    let m = p.zero_root_multiplicity();
    let cofactor = p.shift_down(m);
    let constant_term = if m == 0 {
        ConstantTerm::Positive
    } else {
        ConstantTerm::ZeroFactorable
    };
    if !cofactor.coefficient(0).is_positive() {
        return Err(fail("constant term of the cofactor is not positive"));
    }
    if !p.leading().is_some_and(Signed::is_negative) {
        return Err(fail("leading coefficient is not negative"));
    }
    let sign_change_count = cofactor.sign_changes();
    if sign_change_count != 1 {
        return Err(fail("cofactor does not have exactly one sign change"));
    }
    let value_at_one = p.eval(&Rational::one());
    if !value_at_one.is_zero() {
        return Err(fail("p_d(1) is not zero"));
    }
    for k in 1..GRID {
        if !p.eval(&rat(k, GRID)).is_positive() {
            return Err(fail(&format!("p_d({k}/{GRID}) is not positive")));
        }
    }
    Ok(MahlerCertificate {
        d,
        coefficients: p.coefficients().to_vec(),
        k_threshold: (3 * d - 1) / (d + 1),
        sign_change_count,
        value_at_one,
        constant_term,
        verdict: true,
    })
}
