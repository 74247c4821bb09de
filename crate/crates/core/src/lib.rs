//! High-precision evaluation of two- and three-variable Mahler measures
//! and the modular / Dirichlet L-values they are conjectured (or proved)
//! to equal.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: precision contexts, a big complex type, guarded series
//!   summation, Hurwitz zeta and closed-form incomplete gamma.
//! * [`exactnum`]: exact algebraic parameters built from a fixed radical basis.
//! * [`hypergeom`]: `pFq` evaluation, the elliptic nome and the
//!   Picard-Fuchs recurrence check.
//! * [`modular`]: eta quotients, Weber functions, `j`, the parameter maps
//!   `t3, s2, s3, s4` and the `G`/`chi` functions.
//! * [`lattice`]: Eisenstein-Kronecker style lattice sums with extrapolation.
//! * [`lfunc`]: Kronecker symbols, Dirichlet L-values, newform coefficients
//!   and L-values through the smoothed functional equation.
//! * [`mahler`]: the measure evaluators (series, G-matrix, quadrature) and
//!   the `j`-invariant maps.
//! * [`verify`]: the identity registry and evaluation engine.

pub mod error;
pub mod exactnum;
pub mod hypergeom;
pub mod lattice;
pub mod lfunc;
pub mod mahler;
pub mod modular;
pub mod numerics;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::ExactValue;
pub use numerics::{BigComplex, PrecisionContext, SeriesResult};
