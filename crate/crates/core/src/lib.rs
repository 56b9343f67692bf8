//! Exact computer algebra for the Hopf algebra E(n), its Drinfeld double
//! D(E(n)), the quasi-triangular structures, invariant cocycles and twists on
//! E(n), Yetter-Drinfeld module machinery, and the symplectic geometry of the
//! extension space Ext^1(chi, epsilon), together with the named verification
//! suites behind the `hopfcheck` CLI.
//!
//! All arithmetic is exact, over the rationals or an odd prime field GF(p).

pub mod error;
pub mod mask;
pub mod scalar;
pub mod matrix;
pub mod hopf;
pub mod en;
pub mod double;
pub mod rmatrix;
pub mod cocycle;
pub mod modrep;
pub mod symplectic;
pub mod surj;
pub mod jsonio;
pub mod suites;

pub use error::{Error, Result};
pub use scalar::{FieldSpec, Scalar};
pub use matrix::Matrix;
