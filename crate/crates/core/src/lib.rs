//! Conjugacy-class colorings of knot diagrams, the Hurwitz action on
//! monodromy tuples, and the compilation of zombie circuits into knots.
//!
//! - [`group`]: finite groups, classes, automorphisms, central extensions.
//! - [`diagram`]: oriented diagrams, braid words, plat closures.
//! - [`coloring`]: exact coloring counts.
//! - [`hurwitz`]: braid actions, Schur invariants, orbits, densities.
//! - [`reduction`]: alphabets, circuits, gadgets, compilation.

pub mod coloring;
pub mod config;
pub mod diagram;
mod error;
pub mod group;
pub mod hurwitz;
pub mod reduction;

pub use error::Error;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/groups.md")]
    struct Groups;
    #[doc = include_str!("../../../book/src/diagrams.md")]
    struct Diagrams;
    #[doc = include_str!("../../../book/src/colorings.md")]
    struct Colorings;
    #[doc = include_str!("../../../book/src/hurwitz.md")]
    struct Hurwitz;
    #[doc = include_str!("../../../book/src/reduction.md")]
    struct Reduction;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
