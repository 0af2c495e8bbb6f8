//! Q-solvable algebras in PBW normal form and the constructive quantum
//! Gelfand–Kirillov transform.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: exact arithmetic in the coefficient field k(Q).
//! - [`algebra`]: presentations, PBW-normal-form elements, rewriting, the
//!   lexicographic filtration, and localization at a pivot generator.
//! - [`adjoint`]: the adjoint action of a pivot, Ore shifts, annihilating
//!   polynomials, eigen-decomposition, and Weyl-pair certificates.
//! - [`gk`]: the stagewise transform to semicommuting Laurent generators.
//! - [`catalog`]: quantum matrices, quantum Weyl algebras, and U_q(n⁺) for sl₃.
//! - [`io`]: the JSON file formats for presentations and transform results.

pub mod adjoint;
pub mod algebra;
pub mod catalog;
mod error;
pub mod gk;
pub mod io;
pub mod scalar;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/adjoint.md")]
    mod adjoint {}
    #[doc = include_str!("../../../book/src/transform.md")]
    mod transform {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
