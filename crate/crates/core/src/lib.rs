//! Exact symbolic engine for Nash blowups of polynomially-presented
//! singular foliations.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any verdict. The layers, bottom up:
//!
//! * [`poly`] — sparse multivariate polynomials, rational functions, and
//!   the expression parser;
//! * [`groebner`] — a Buchberger engine for ideals and submodules of free
//!   modules (normal forms with witnesses, elimination, saturation, colon
//!   ideals, dimension, radical membership, syzygies);
//! * [`linalg`] — exact linear algebra over the rationals and over the
//!   polynomial fraction field, Plücker coordinates and subspace limits;
//! * [`foliation`] — anchored complexes (geometric resolutions) and their
//!   validations;
//! * [`blowup`] — monoidal transformations and Nash blowups;
//! * [`smoothness`] — Jacobian-criterion verdicts for blowup charts;
//! * [`lifting`] — lifts of vector fields and bivectors to blowup charts,
//!   linear lifts on the total spaces, and the flow-compatibility identity.

pub mod blowup;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod foliation;
pub mod groebner;
pub mod lifting;
pub mod linalg;
pub mod poly;
pub mod smoothness;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
