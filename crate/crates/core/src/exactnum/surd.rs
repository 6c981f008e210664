use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{parse_rational, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// Largest radicand accepted after normalization.
const MAX_RADICAND: u64 = i64::MAX as u64;

/// Exact real `coefficient * sqrt(radicand)` with a squarefree radicand.
///
/// Zero is always stored as `0 * sqrt(1)`, so two surds are equal exactly
/// when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coefficient: Rational,
    radicand: u64,
}

impl Surd {
    /// `coefficient * sqrt(radicand)`, moving square factors of the radicand
    /// into the coefficient.
    pub fn new(coefficient: Rational, radicand: u64) -> Result<Surd> {
        if radicand == 0 || coefficient.is_zero() {
            return Ok(Surd::zero());
        }
        if radicand > MAX_RADICAND {
            return Err(Error::RadicandOverflow(radicand.to_string()));
        }
        let (square_root_part, free) = split_square(radicand);
        Ok(Surd {
            coefficient: coefficient * Rational::from_integer(square_root_part.into()),
            radicand: free,
        })
    }

    pub fn from_rational(q: Rational) -> Surd {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd {
            coefficient: q,
            radicand: 1,
        }
    }

    pub fn from_int(n: i64) -> Surd {
        Surd::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Surd {
        Surd {
            coefficient: Rational::zero(),
            radicand: 1,
        }
    }

    pub fn one() -> Surd {
        Surd::from_int(1)
    }

    /// `sqrt(n)` for a non-negative integer.
    pub fn sqrt_int(n: u64) -> Result<Surd> {
        Surd::new(Rational::one(), n)
    }

    /// `sqrt(p/q)`, normalized as `sqrt(p*q)/q` so the radicand stays integral.
    pub fn sqrt(q: &Rational) -> Result<Surd> {
        if q.is_negative() {
            return Err(Error::BadParams(format!("square root of negative {q}")));
        }
        if q.is_zero() {
            return Ok(Surd::zero());
        }
        let product: BigInt = q.numer() * q.denom();
        let radicand = product
            .to_u64()
            .filter(|n| *n <= MAX_RADICAND)
            .ok_or_else(|| Error::RadicandOverflow(product.to_string()))?;
        Surd::new(Rational::new(BigInt::one(), q.denom().clone()), radicand)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    /// The rational value, when the radicand is 1.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coefficient)
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    /// Sum of two like radicals. Either side may be zero.
    pub fn try_add(&self, other: &Surd) -> Result<Surd> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::IncompatibleRadicands(self.radicand, other.radicand));
        }
        let coefficient = &self.coefficient + &other.coefficient;
        if coefficient.is_zero() {
            return Ok(Surd::zero());
        }
        Ok(Surd {
            coefficient,
            radicand: self.radicand,
        })
    }

    pub fn try_sub(&self, other: &Surd) -> Result<Surd> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Surd) -> Result<Surd> {
        if self.is_zero() || other.is_zero() {
            return Ok(Surd::zero());
        }
        // Both radicands are squarefree, so the product is g^2 times a
        // squarefree number where g is their gcd.
        let g = self.radicand.gcd(&other.radicand);
        let free = (self.radicand / g) as u128 * (other.radicand / g) as u128;
        if free > MAX_RADICAND as u128 {
            return Err(Error::RadicandOverflow(free.to_string()));
        }
        Ok(Surd {
            coefficient: &self.coefficient * &other.coefficient * Rational::from_integer(g.into()),
            radicand: free as u64,
        })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Surd> {
        if self.is_zero() {
            return None;
        }
        // 1/(q sqrt n) = sqrt(n) / (q n)
        let n = Rational::from_integer(self.radicand.into());
        Some(Surd {
            coefficient: (&self.coefficient * n).recip(),
            radicand: self.radicand,
        })
    }

    pub fn try_div(&self, other: &Surd) -> Result<Surd> {
        let inv = other
            .recip()
            .ok_or_else(|| Error::BadParams("division by zero surd".into()))?;
        self.try_mul(&inv)
    }

    /// `self^2`, always rational.
    pub fn square(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(self.radicand.into())
    }

    pub fn pow(&self, e: u32) -> Surd {
        let q = num_traits::pow(self.coefficient.clone(), e as usize);
        if e.is_multiple_of(2) {
            let n = num_traits::pow(Rational::from_integer(self.radicand.into()), e as usize / 2);
            Surd::from_rational(q * n)
        } else {
            let n = num_traits::pow(
                Rational::from_integer(self.radicand.into()),
                (e as usize - 1) / 2,
            );
            Surd {
                coefficient: q * n,
                radicand: self.radicand,
            }
            .normalized_zero()
        }
    }

    pub fn scale(&self, q: &Rational) -> Surd {
        Surd {
            coefficient: &self.coefficient * q,
            radicand: self.radicand,
        }
        .normalized_zero()
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient) * (self.radicand as f64).sqrt()
    }

    /// Parses `q`, `q*sqrt(n)` or `sqrt(n)`.
    pub fn parse(s: &str) -> Result<Surd> {
        let s = s.trim();
        let (coef, rad) = match s.find("sqrt(") {
            None => (s, None),
            Some(pos) => {
                let inner = s[pos + 5..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed sqrt in {s:?}")))?;
                let coef = s[..pos].trim().trim_end_matches('*').trim();
                (coef, Some(inner))
            }
        };
        let coefficient = match coef {
            "" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c)?,
        };
        match rad {
            None => Ok(Surd::from_rational(coefficient)),
            Some(r) => {
                let radicand: u64 = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
                Surd::new(coefficient, radicand)
            }
        }
    }

    fn normalized_zero(self) -> Surd {
        if self.coefficient.is_zero() {
            Surd::zero()
        } else {
            self
        }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            coefficient: -&self.coefficient,
            radicand: self.radicand,
        }
        .normalized_zero()
    }
}

impl Mul<&Rational> for &Surd {
    type Output = Surd;
    fn mul(self, q: &Rational) -> Surd {
        self.scale(q)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coefficient)
        } else {
            write!(f, "{}*sqrt({})", self.coefficient, self.radicand)
        }
    }
}

/// Splits `n` into `(s, f)` with `n = s^2 * f` and `f` squarefree.
///
/// Trial division runs only up to the cube root; whatever is left has at
/// most two prime factors, so it is either a perfect square or squarefree.
fn split_square(mut n: u64) -> (u64, u64) {
    let mut root = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = n.sqrt();
    if r * r == n && n > 1 {
        root *= r;
    } else {
        free *= n;
    }
    (root, free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn s(q: Rational, n: u64) -> Surd {
        Surd::new(q, n).unwrap()
    }

    fn is_squarefree(n: u64) -> bool {
        (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
    }

    #[test]
    fn split_square_cases() {
        assert_eq!(split_square(1), (1, 1));
        assert_eq!(split_square(8), (2, 2));
        assert_eq!(split_square(60), (2, 15));
        assert_eq!(split_square(49), (7, 1));
        assert_eq!(split_square(2 * 1_000_003 * 1_000_003), (1_000_003, 2));
        assert_eq!(split_square(999_983 * 1_000_003), (1, 999_983 * 1_000_003));
    }

    #[test]
    fn mul_examples() {
        let r2 = s(rat(1, 1), 2);
        assert_eq!(r2.try_mul(&r2).unwrap(), Surd::from_int(2));
        assert_eq!(Surd::from_int(2).radicand(), 1);
        let x = s(rat(3, 1), 6).try_mul(&s(rat(1, 2), 10)).unwrap();
        assert_eq!(x, s(rat(3, 1), 15));
        assert_eq!(s(rat(5, 7), 11).try_mul(&Surd::zero()).unwrap(), Surd::zero());
    }

    #[test]
    fn add_examples() {
        let r2 = s(rat(1, 1), 2);
        assert_eq!(r2.try_add(&s(rat(2, 1), 2)).unwrap(), s(rat(3, 1), 2));
        let q3 = s(rat(4, 9), 3);
        assert_eq!(q3.try_add(&Surd::zero()).unwrap(), q3);
        assert_eq!(
            r2.try_add(&s(rat(1, 1), 3)),
            Err(Error::IncompatibleRadicands(2, 3))
        );
        assert_eq!(r2.try_sub(&r2).unwrap(), Surd::zero());
    }

    #[test]
    fn sqrt_of_rational_keeps_integral_radicand() {
        let x = Surd::sqrt(&rat(3, 8)).unwrap();
        // sqrt(3/8) = sqrt(24)/8 = sqrt(6)/4
        assert_eq!(x, s(rat(1, 4), 6));
        assert_eq!(x.square(), rat(3, 8));
        assert!(Surd::sqrt(&rat(-1, 2)).is_err());
        assert_eq!(Surd::sqrt(&rat(9, 4)).unwrap(), Surd::from_rational(rat(3, 2)));
    }

    #[test]
    fn overflow_is_rejected() {
        let big = Rational::from_integer(BigInt::from(u64::MAX) * 3);
        assert!(matches!(Surd::sqrt(&big), Err(Error::RadicandOverflow(_))));
        let a = Surd::sqrt_int(4_294_967_311).unwrap();
        let b = Surd::sqrt_int(4_294_967_357).unwrap();
        assert!(matches!(a.try_mul(&b), Err(Error::RadicandOverflow(_))));
    }

    #[test]
    fn recip_and_div() {
        let x = s(rat(2, 3), 5);
        assert_eq!(x.try_mul(&x.recip().unwrap()).unwrap(), Surd::one());
        assert_eq!(x.try_div(&x).unwrap(), Surd::one());
        assert!(Surd::zero().recip().is_none());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = s(rat(-3, 2), 6);
        let mut acc = Surd::one();
        for e in 0..7 {
            assert_eq!(x.pow(e), acc);
            acc = acc.try_mul(&x).unwrap();
        }
    }

    #[test]
    fn display_and_parse() {
        let x = s(rat(-3, 2), 12);
        assert_eq!(x.to_string(), "-3*sqrt(3)");
        assert_eq!(Surd::parse("-3*sqrt(3)").unwrap(), x);
        assert_eq!(Surd::parse("sqrt(8)").unwrap(), s(rat(2, 1), 2));
        assert_eq!(Surd::parse("1/2").unwrap(), Surd::from_rational(rat(1, 2)));
        assert_eq!(Surd::parse("1/2*sqrt(2)").unwrap().to_string(), "1/2*sqrt(2)");
        assert!(Surd::parse("sqrt(2").is_err());
    }

    fn arb_surd() -> impl Strategy<Value = Surd> {
        (-50i64..50, 1i64..20, 1u64..200).prop_map(|(p, q, n)| s(rat(p, q), n))
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_surd(), b in arb_surd(), c in arb_surd()) {
            let ab = a.try_mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.try_mul(&a).unwrap());
            let left = ab.try_mul(&c).unwrap();
            let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert!(is_squarefree(left.radicand()));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn new_is_squarefree_and_value_preserving(p in -40i64..40, n in 0u64..100_000) {
            let x = s(rat(p, 1), n);
            prop_assert!(is_squarefree(x.radicand()));
            prop_assert_eq!(x.square(), rat(p * p, 1) * Rational::from_integer(n.into()));
        }
    }
}
