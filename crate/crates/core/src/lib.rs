//! Garside calculus, parabolic subgroups, simplices of irreducible parabolics, and
//! marking graphs for irreducible finite-type Artin groups.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod garside;
pub mod genset;
pub mod marking;
pub mod marking_graph;
pub mod parabolic;
pub mod simplex;

pub use coxeter::{ArtinGroup, ArtinType, CoxeterElement, Family, Side};
pub use error::{Error, Result};
pub use garside::{ArtinElement, GeneratorWord, Letter};
pub use genset::GenSet;
pub use marking::{Marking, MoveKind, TransversalData};
pub use marking_graph::ExploredGraph;
pub use parabolic::{ConjugacyGraph, ParabolicSubgroup};
pub use simplex::{AscendingProduct, CparabSimplex, LevelDecomposition, StandardizedSimplex};
