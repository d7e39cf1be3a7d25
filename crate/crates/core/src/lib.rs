//! Exact construction and real-root certification of Schubert-calculus polynomial systems.
//!
//! The pipeline is: build a system in chart coordinates ([`systems`]), compute a Gröbner
//! basis and eliminant ([`groebner`]), then count real roots with Sturm sequences
//! ([`realroots`]). Expected solution counts come from [`schubert`]; [`verifier`] ties
//! it together and reproduces the named published computations.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod realroots;
pub mod schubert;
pub mod systems;
pub mod verifier;

pub use error::{Error, Result};
