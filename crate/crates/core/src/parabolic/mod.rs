//! Parabolic subgroups: Garside elements Δ_X, central elements z_P, equality via
//! minimal standardizers, and conjugacy of standard parabolics.

pub mod classify;
pub mod conj_graph;
pub mod subgroup;

pub use classify::delta_twists;
pub use conj_graph::{ConjEdge, ConjugacyGraph};
pub use subgroup::permute_set;
pub use subgroup::{Canonical, ParabolicJson, ParabolicSubgroup, MIN_STD_BUDGET};
