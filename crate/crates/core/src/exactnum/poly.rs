use std::fmt;

use num_traits::{Signed, Zero};

use super::rational::Rational;

/// Dense univariate polynomial over the rationals; `coefficients()[k]` is
/// the coefficient of `x^k`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coefficients: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Polynomial {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn from_ints(coefficients: &[i64]) -> Polynomial {
        Polynomial::new(
            coefficients
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coefficients.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of the root at zero.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coefficients.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `x^m`. Panics unless `x^m` divides the polynomial.
    pub fn shift_down(&self, m: usize) -> Polynomial {
        assert!(m <= self.zero_root_multiplicity() || self.is_zero());
        Polynomial::new(self.coefficients.iter().skip(m).cloned().collect())
    }

    /// Sign alternations in the nonzero coefficients, ascending degree.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self
            .coefficients
            .iter()
            .filter(|c| !c.is_zero())
            .map(Signed::is_positive)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated coefficients in ascending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
