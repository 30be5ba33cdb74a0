//! MV-algebras whose operations are induced by measure arithmetic on
//! intervals, strips, perforated squares and finite power sets, together
//! with an engine that checks the MV axioms exhaustively or on rational
//! grids and reports counterexamples.

pub mod algebra;
pub mod chang;
pub mod error;
pub mod hole;
pub mod interval;
pub mod powerset;
pub mod rational;

pub use algebra::{
    check_axiom, derived_odot, run_suite, Algebra, AxiomId, AxiomVerdict, CheckReport,
    Counterexample, Domain, Equality, SamplingStrategy,
};
pub use error::{Error, Result};
pub use rational::UnitRational;
