//! Schubert conditions, the cohomology ring of the Grassmannian and intersection numbers.

pub mod condition;
pub mod numbers;
pub mod pieri;
pub mod ring;

pub use condition::{SchubertCondition, SchubertData};
pub use numbers::d_closed_form;
pub use pieri::{dual_pair_number, intersection_number_pieri};
pub use ring::{intersection_number, schur_h, CohomologyRing};
