//! Defining graphs and exact arithmetic in finite Coxeter groups.

pub mod element;
pub mod graph;
pub mod ring;
pub mod roots;
pub mod types;

pub use element::{ArtinGroup, CoxeterElement, CoxeterGroup, Side};
pub use graph::DefiningGraph;
pub use roots::RootSystem;
pub use types::{ArtinType, Family};

/// Builds the labeled defining graph for a type.
pub fn build_defining_graph(ty: ArtinType) -> DefiningGraph {
    DefiningGraph::build(ty)
}

/// Builds the root system and reflection permutations for a defining graph.
pub fn root_reflection_table(graph: &DefiningGraph) -> RootSystem {
    RootSystem::build(graph)
}
