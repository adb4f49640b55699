//! Architecture selection for systems of systems.
//!
//! A candidate architecture is a fixed-length bitstring: one bit per member
//! system followed by one bit per unordered system pair (a potential
//! interface). The library searches that space with a constrained genetic
//! algorithm — conflict-rule initialization, elitist roulette selection,
//! adaptive single-point crossover over the parents' difference set, and
//! constrained accept-if-not-worse mutation — against a weighted sum of
//! normalized performance, cost, and duration objectives.
//!
//! An independent exhaustive enumerator ([`oracle`]) provides ground truth
//! on small instances and is used throughout the test suite to validate the
//! heuristic path.
//!
//! With the `parallel` feature (default), population evaluation, oracle
//! enumeration, and multi-restart runs fan out over a rayon pool; results
//! are merged in deterministic order, so output is byte-identical to the
//! sequential fallback.

pub mod constraints;
pub mod error;
pub mod ga;
pub mod genome;
pub mod objectives;
pub mod oracle;
pub mod report;
pub mod samples;
pub mod scenario;

pub use error::{Error, Result};
pub use genome::{Genome, GenomeLayout};
pub use scenario::Scenario;
