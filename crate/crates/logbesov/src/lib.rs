//! Numerical toolkit for periodic function spaces with logarithmic smoothness.
//!
//! The crate evaluates quasi-norms of Besov-type spaces `B^{s,b}_{p,q}` on the
//! circle through many equivalent characterizations (moduli of smoothness,
//! dyadic frequency blocks, approximation errors, semigroup defects,
//! K-functionals), decides finiteness of the associated power-log integrals
//! exactly through a symbolic oracle, and checks a registry of embedding
//! claims together with their explicit counterexample families.
//!
//! The layering is bottom-up:
//!
//! * [`signal`] — periodic signals on dyadic grids, discrete Fourier
//!   analysis, `L_p` quadrature norms, spectral multipliers.
//! * [`smoothness`] — moduli of smoothness, partial sums, de la
//!   Vallée-Poussin means, best approximation.
//! * [`norms`] — the space quasi-norms, one method per characterization.
//! * [`profiles`] — power-log profile algebra, the finiteness oracle, and
//!   coefficient-side norm formulas for general monotone data.
//! * [`lacunary`] — exact norm formulas for lacunary series.
//! * [`kfunc`] — K-functionals and bounded p-variation.
//! * [`operators`] — derivatives, Riesz/Bessel potentials, the fractional
//!   Laplacian, and the sharp inequalities they enter.
//! * [`catalog`] — the embedding-claim registry with witness generators.
//! * [`suites`] — named property-test suites binding the invariants.

pub mod catalog;
pub mod error;
pub mod family;
pub mod kfunc;
pub mod lacunary;
pub mod norms;
pub mod operators;
pub mod profiles;
pub mod signal;
pub mod smoothness;
pub mod suites;

pub use error::{Error, Result};
pub use signal::{Grid, Multiplier, Signal, Spectrum};

/// Keeps the guide's code listings compiling; `cargo test --doc` runs every
/// fenced snippet in `book/src`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/signals.md")]
    mod signals {}
    #[doc = include_str!("../../../book/src/smoothness.md")]
    mod smoothness {}
    #[doc = include_str!("../../../book/src/norms.md")]
    mod norms {}
    #[doc = include_str!("../../../book/src/profiles.md")]
    mod profiles {}
    #[doc = include_str!("../../../book/src/kfunctionals.md")]
    mod kfunctionals {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
