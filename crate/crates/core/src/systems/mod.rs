//! Polynomial systems: flags, charts, and the builders for every family of systems.

pub mod build;
pub mod chart;
pub mod counterexample;
pub mod flags;
pub mod pm;
pub mod system;
pub mod tp;

pub use build::{
    build_conjecture_i, build_conjecture_ii, build_conjecture_ii_doubleprime, build_conjecture_ii_prime, build_phi,
    build_schubert_system, build_tp_system, chebyshev_basis, monomial_basis, psi_poly, BuildOptions,
};
pub use chart::{chart_matrix, chart_pattern, in_injective_part, ChartSpec};
pub use flags::{exp_sn, osculating_full, osculating_matrix, tp_check, tp_random, FlagPoint, FlagSpec};
pub use system::{Family, PolySystem, Provenance};
pub use counterexample::{build_flag_counterexample, FlagCounterexamplePoints};
pub use pm::{pm_interlaces, pm_polynomial, pm_recursion};
pub use tp::{tp_pair, tp_pair_report, TpPairReport};
