//! Generators, absolute and relative Z/4 gradings, and chain ranks of the
//! singular instanton Floer complexes `IC♮(k)` and `IC_*(S³, L)` for knots and
//! two-component links whose double branched covers are lens spaces or
//! Seifert-fibered manifolds.
//!
//! Everything is exact integer / rational arithmetic. The pipeline is:
//!
//! * [`covers`] – homology of the double branched cover,
//! * [`lens`] – reducible representations of lens spaces and their ASD indices,
//! * [`seifert`] – rotation-number enumeration of representations of Seifert
//!   fibered covers (irreducible, reducible, projective),
//! * [`signatures`] – knot signatures, which fix the absolute grading,
//! * [`complexes`] – assembly of graded generators and rank vectors.

pub mod arith;
pub mod complexes;
pub mod covers;
pub mod error;
pub mod lens;
pub mod seifert;
pub mod signatures;

pub use error::{Error, Result};
