//! Coloured Hopf superalgebra engine for the two-parameter quantum
//! superalgebra `U_{q,s}(gl(1/1))`.
//!
//! - [`coefficients`]: principal-branch powers, `a^ν`, seeded sampling.
//! - [`pbw`]: PBW normal form, graded tensor powers, twist and grading.
//! - [`colour`]: the colour maps `σ^ν` and colour-group laws.
//! - [`hopf`]: coloured `Δ`, `ε`, `S` and the generalised Hopf axioms.
//! - [`standard`]: the uncoloured structure, for reduction checks.
//! - [`representation`]: the 2-dimensional representation, the coloured
//!   R-matrix and the Yang-Baxter and quasitriangularity checks.
//! - [`cli`]: the `colhopf` command-line front end.

pub mod cli;
pub mod coefficients;
pub mod colour;
pub mod error;
pub mod hopf;
pub mod pbw;
pub mod report;
pub mod representation;
pub mod standard;
mod terms;

pub use coefficients::{colour_norm, cpow, sample_params, Colour, ParamPoint, ParamSampler, C64};
pub use error::{AlgebraError, Result};
pub use pbw::{AlgebraElement, Home, Monomial, TensorElement, TwistConvention};
pub use terms::Comparison;
