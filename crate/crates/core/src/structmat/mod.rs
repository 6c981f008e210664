//! The ring of matrices `alpha*I + beta*J` (identity plus a multiple of the
//! all-ones matrix), its Helmert diagonalization, and the centered
//! parallelepiped spanned by the Bose matrix.

mod dense;
mod parallelepiped;

pub use dense::DenseMatrix;
pub(crate) use dense::bareiss_det;
pub use parallelepiped::{
    par_facet_equations, par_polar_vertices, par_translation, par_vertices, FacetEquation,
};

use num_traits::{One, Zero};

use crate::error::{bad_params, Error, Result};
use crate::exactnum::{Rational, Surd};

/// `alpha * I_d + beta * J_d`: `alpha + beta` on the diagonal, `beta` off it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructuredMatrix {
    d: usize,
    alpha: Rational,
    beta: Rational,
}

/// An eigenvalue with its algebraic multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub value: Rational,
    pub multiplicity: usize,
}

impl StructuredMatrix {
    pub fn new(d: usize, alpha: Rational, beta: Rational) -> StructuredMatrix {
        assert!(d >= 1, "dimension must be positive");
        StructuredMatrix { d, alpha, beta }
    }

    pub fn identity(d: usize) -> StructuredMatrix {
        StructuredMatrix::new(d, Rational::one(), Rational::zero())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Product via `(aI+bJ)(cI+dJ) = acI + (ad+bc+n*bd)J`.
    pub fn mul(&self, other: &StructuredMatrix) -> Result<StructuredMatrix> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        let n = Rational::from_integer(self.d.into());
        Ok(StructuredMatrix {
            d: self.d,
            alpha: &self.alpha * &other.alpha,
            beta: &self.alpha * &other.beta
                + &self.beta * &other.alpha
                + n * &self.beta * &other.beta,
        })
    }

    /// The eigenvalue `alpha` (multiplicity `d-1`) and `alpha + d*beta`
    /// (multiplicity 1). Equal values are merged.
    pub fn spectrum(&self) -> Vec<Eigenvalue> {
        let top = self.top_eigenvalue();
        if self.d == 1 {
            return vec![Eigenvalue {
                value: top,
                multiplicity: 1,
            }];
        }
        if top == self.alpha {
            return vec![Eigenvalue {
                value: top,
                multiplicity: self.d,
            }];
        }
        vec![
            Eigenvalue {
                value: self.alpha.clone(),
                multiplicity: self.d - 1,
            },
            Eigenvalue {
                value: top,
                multiplicity: 1,
            },
        ]
    }

    fn top_eigenvalue(&self) -> Rational {
        &self.alpha + Rational::from_integer(self.d.into()) * &self.beta
    }

    /// `alpha^(d-1) * (alpha + d*beta)`.
    pub fn det(&self) -> Rational {
        num_traits::pow(self.alpha.clone(), self.d - 1) * self.top_eigenvalue()
    }

    /// `(1/alpha) I + beta' J` with `beta' = -beta / (alpha (alpha + d beta))`.
    pub fn inverse(&self) -> Result<StructuredMatrix> {
        let top = self.top_eigenvalue();
        if self.alpha.is_zero() || top.is_zero() {
            return Err(Error::Singular);
        }
        Ok(StructuredMatrix {
            d: self.d,
            alpha: self.alpha.recip(),
            beta: -&self.beta / (&self.alpha * top),
        })
    }

    pub fn to_dense(&self) -> DenseMatrix<Rational> {
        DenseMatrix::from_fn(self.d, self.d, |i, j| {
            if i == j {
                &self.alpha + &self.beta
            } else {
                self.beta.clone()
            }
        })
    }

    /// `D_d(alpha, beta) = diag(alpha, ..., alpha, alpha + d*beta)`.
    pub fn diagonal_form(&self) -> DenseMatrix<Rational> {
        let top = self.top_eigenvalue();
        DenseMatrix::from_fn(self.d, self.d, |i, j| match (i == j, i + 1 == self.d) {
            (false, _) => Rational::zero(),
            (true, true) => top.clone(),
            (true, false) => self.alpha.clone(),
        })
    }
}

/// The Bose matrix `(ell - a) I_d + a J_d`, whose determinant is the volume
/// of the isocanted cube with the same parameters.
pub fn bose(ell: &Rational, a: &Rational, d: usize) -> Result<StructuredMatrix> {
    if d == 0 {
        return Err(bad_params("d >= 1"));
    }
    if *a < Rational::zero() || a >= ell {
        return Err(bad_params(format!("0 ≤ a < ℓ (got ℓ = {ell}, a = {a})")));
    }
    Ok(StructuredMatrix::new(d, ell - a, a.clone()))
}

/// Orthogonal Helmert matrix. Column `j < d` (1-based) holds `1/λ_j` in its
/// first `j` rows and `-j/λ_j` in row `j+1`, with `λ_j = sqrt(j + j^2)`;
/// the last column is constant `1/sqrt(d)`.
pub fn helmert(d: usize) -> DenseMatrix<Surd> {
    assert!(d >= 1, "dimension must be positive");
    let inv_sqrt = |n: usize| {
        Surd::sqrt(&Rational::new(1.into(), n.into())).expect("small radicand")
    };
    DenseMatrix::from_fn(d, d, |i, j| {
        if j + 1 == d {
            return inv_sqrt(d);
        }
        let col = j + 1;
        let unit = inv_sqrt(col * (col + 1));
        match i.cmp(&col) {
            std::cmp::Ordering::Less => unit,
            std::cmp::Ordering::Equal => unit.scale(&Rational::from_integer((-(col as i64)).into())),
            std::cmp::Ordering::Greater => Surd::zero(),
        }
    })
}

/// Cyclic shift permutation: first column `(0, 1, 0, ..., 0)^T`.
pub fn rotation_matrix(d: usize) -> DenseMatrix<Rational> {
    assert!(d >= 1, "dimension must be positive");
    DenseMatrix::from_fn(d, d, |i, j| {
        if i == (j + 1) % d {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}
