//! Exact volumes of isocanted cubes `I_d(ℓ, a)` and their polar duals
//! `J_d(b, c)`, the resulting volume product, and an exact certificate that
//! the product never drops below `4^d / d!` for this family.
//!
//! All geometry is done over big rationals; quadratic surds appear only
//! in intermediate facet heights and distances. The `oracles` module holds
//! brute-force cross-checks that share no formulas with the closed forms.

pub mod dualpoly;
pub mod error;
pub mod exactnum;
pub mod halfspace;
pub mod isocanted;
pub mod mahler;
pub mod oracles;
pub mod roofs;
pub mod structmat;

pub use dualpoly::{DualParams, FacetId, Molecule};
pub use error::{Error, Result};
pub use exactnum::{Polynomial, Rational, Surd};
pub use halfspace::{Halfspace, HalfspaceSystem};
pub use isocanted::{GeneratorSet, IsocantedParams};
pub use mahler::{ConstantTerm, MahlerCertificate};
pub use oracles::McEstimate;
pub use roofs::RoofSpec;
pub use structmat::{DenseMatrix, StructuredMatrix};
