//! Interval exchange transformations with exact arithmetic over real quadratic fields.
//!
//! The crate covers natural codings and their languages, return words and
//! derived sets, branching Rauzy induction with the automorphisms it induces
//! on codings, and for transformations defined over `Q[√d]` the finite
//! induction graphs and a primitive substitution generating the language.

// Errors carry the offending exact values; they are cold and not worth boxing.
#![allow(clippy::result_large_err)]

pub mod alphabet;
pub mod coding;
pub mod error;
pub mod iet;
pub mod induction;
pub mod morphism;
pub mod qfield;
pub mod quadratic;

pub use alphabet::{Alphabet, Letter, Word};
pub use error::{Connection, Error, Result, Side};
pub use iet::{CanonicalIet, CanonicalMode, Iet, Regularity, SemiInterval};
pub use morphism::Morphism;
pub use qfield::{QuadNum, Rational};
