//! Instance specs, the build-solve-certify pipeline, suites, and the named reproduction targets.

pub mod pipeline;
pub mod report;
pub mod reproduce;
pub mod spec;
pub mod suite;

pub use pipeline::{bezout_bound, expected_count, retry_order, solve, verify_instance, SolveOptions, DESK_LIMIT};
pub use report::{Expected, Status, Verdict, VerificationReport, SCHEMA_VERSION};
pub use reproduce::{reproduce, Bundle, Check, Outcome, Target};
pub use spec::{BasisSpec, BudgetSpec, InstanceSpec, OrderName};
pub use suite::{run_suite, Recipe, SuiteConfig, SuiteRow, SuiteSummary, SuiteTable};
