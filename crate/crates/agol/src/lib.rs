//! Exact computation of Agol cycles of pseudo-Anosov 3-braids.
//!
//! The library classifies 3-braids through their `PSL(2, Z)` images, reduces
//! hyperbolic matrices to cyclic `L`/`R` words via continued fractions of
//! quadratic surds, runs measured train-track splitting sequences over
//! Farey intervals with exact arithmetic in `Q(√D)`, and compares Garside
//! canonical lengths with splitting-cycle lengths.
//!
//! Start with [`braid::BraidWord::parse`] and [`track::agol_cycle`]:
//!
//! ```
//! use agol::braid::{murasugi_form, BraidWord};
//! use agol::track::{agol_cycle, Surface};
//!
//! let word = BraidWord::parse("s1 s2^-1")?;
//! let form = murasugi_form(&word)?;
//! let cycle = agol_cycle(&form, Surface::Sphere4)?;
//! assert_eq!(cycle.len(), 2);
//! assert!(cycle.verified);
//! # Ok::<(), agol::Error>(())
//! ```
//!
//! The `agol` binary exposes the same operations as subcommands; the guide
//! under `book/` walks through the concepts chapter by chapter, and its code
//! snippets run as doc-tests of this crate.

pub mod braid;
pub mod error;
pub mod farey;
pub mod garside;
pub mod oracle;
pub mod render;
pub mod surd;
pub mod track;

mod book;

pub use error::{Error, Result};
