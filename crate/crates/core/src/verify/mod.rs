//! Identity registry, evaluation engine and j-invariant fixtures.

pub mod engine;
pub mod fixtures;
pub mod functional;
pub mod properties;
pub mod registry;

pub use engine::{evaluate_identity, evaluate_record, proved_all_pass, run_suite, to_json, SuiteFilter, VerificationReport, VerifyOptions};
pub use registry::{find, registry, Atom, Expr, IdentityRecord, Status, Term};
