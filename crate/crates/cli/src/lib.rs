//! Library surface of the verification CLI, split out so integration tests
//! can drive suites and evaluation without spawning the binary.

pub mod eval;
pub mod sample;
pub mod suites;

pub use eval::{eval_value, EvalArgs, EvalWhat, MeOp};
pub use suites::{
    run_suite, run_suite_with_fixture, Failure, Report, SuiteId, SuiteSpec, ALL_SUITES,
};
