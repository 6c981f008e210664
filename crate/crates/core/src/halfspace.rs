use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// The closed halfspace `<normal, x> <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (n, v)| acc + n * v)
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.lhs(x) <= self.offset
    }

    pub fn tight_at(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.offset
    }
}

/// An H-representation: the intersection of its halfspaces.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HalfspaceSystem {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl HalfspaceSystem {
    pub fn new(dim: usize) -> HalfspaceSystem {
        HalfspaceSystem {
            dim,
            halfspaces: Vec::new(),
        }
    }

    /// Panics on a zero normal or a dimension mismatch; both are caller bugs.
    pub fn push(&mut self, normal: Vec<Rational>, offset: Rational) {
        assert_eq!(normal.len(), self.dim, "normal has wrong dimension");
        assert!(normal.iter().any(|x| !x.is_zero()), "zero normal");
        self.halfspaces.push(Halfspace { normal, offset });
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(self.halfspaces.iter().all(|h| h.satisfied_by(x)))
    }

    /// Number of halfspaces whose boundary passes through `x`.
    pub fn tight_count(&self, x: &[Rational]) -> usize {
        self.halfspaces.iter().filter(|h| h.tight_at(x)).count()
    }
}
