use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Displays as `num/den`, or `num` when the denominator is 1.
pub type Rational = BigRational;

/// Shorthand for `num/den` from machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"`, or a plain decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal {s:?}")));
        }
        let mut num: BigInt = digits.parse().expect("checked digits");
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10u32), frac_part.len());
        return Ok(Rational::new(num, den));
    }
    let num: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(Rational::from_integer(num))
}

/// `x^e` for a possibly negative exponent. Panics on `0^negative`.
pub fn rat_pow(x: &Rational, e: i32) -> Rational {
    num_traits::Pow::pow(x, e)
}

/// C(n, k), zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    BigInt::from(num_integer::binomial(BigUint::from(n), BigUint::from(k as u64)))
}

pub fn binomial_rat(n: u64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn factorial_rat(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// The beta integral of `(1-t)^j t^k` over `[0, 1]`, i.e. `j! k! / (j+k+1)!`.
pub fn beta_int(j: u64, k: u64) -> Rational {
    Rational::new(factorial(j) * factorial(k), factorial(j + k + 1))
}

/// Nearest double to an exact rational.
pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigInt::one(); i + 1];
            for j in 1..i {
                row[j] = &prev[j - 1] + &prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_small_and_out_of_range() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 2 * 3 - 2 - 2), BigInt::from(6));
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let rows = pascal(40);
        assert_eq!(rows[40][20], BigInt::from(137_846_528_820u64));
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), v);
            }
        }
        assert_eq!(binomial(40, 20), BigInt::from(137_846_528_820u64));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_int(0, 0), rat(1, 1));
        assert_eq!(beta_int(1, 2), rat(1, 12));
        assert_eq!(beta_int(2, 2), rat(1, 30));
    }

    #[test]
    fn beta_matches_alternating_sum() {
        for j in 0..=12u64 {
            for k in 0..=12u64 {
                let alt = (0..=j).fold(Rational::zero(), |acc, n| {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    acc + Rational::new(binomial(j, n as i64) * sign, BigInt::from(k + n + 1))
                });
                assert_eq!(beta_int(j, k), alt, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat(4, 1).to_string(), "4");
        assert_eq!(rat(-6, 4).to_string(), "-3/2");
        assert_eq!(rat(0, 5).to_string(), "0");
        assert_eq!(*rat(0, 5).denom(), BigInt::one());
    }
}
