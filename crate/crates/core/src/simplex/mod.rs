//! Simplices of the complex of irreducible parabolic subgroups: adjacency, levels,
//! maximality, canonical standardizers, ribbons, and ascending products.

pub mod ascending;
pub mod levels;
pub mod maximal;
pub mod ribbon;
pub mod standardize;

pub use ascending::AscendingProduct;
pub use levels::LevelDecomposition;
pub use maximal::{standard_adjacent, MaximalWitness};
pub use ribbon::{ElementaryRibbon, RibbonDeltaForm};
pub use standardize::StandardizedSimplex;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::parabolic::{ParabolicJson, ParabolicSubgroup};

/// A set of pairwise-adjacent irreducible proper parabolic subgroups.
#[derive(Clone, Debug)]
pub struct CparabSimplex {
    pub vertices: Vec<ParabolicSubgroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexJson {
    pub vertices: Vec<ParabolicJson>,
}

impl CparabSimplex {
    pub fn new(vertices: Vec<ParabolicSubgroup>) -> Self {
        CparabSimplex { vertices }
    }

    pub fn standard(group: &CoxeterGroup, subsets: &[crate::GenSet]) -> Self {
        CparabSimplex { vertices: subsets.iter().map(|&x| ParabolicSubgroup::standard(group, x)).collect() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl CoxeterGroup {
    fn check_vertex(&self, p: &ParabolicSubgroup) -> Result<()> {
        if !p.is_irreducible_in(self) {
            return Err(Error::NotIrreducible);
        }
        if !p.is_proper_in(self) {
            return Err(Error::NotProper);
        }
        Ok(())
    }

    /// Adjacency in the complex: z_P and z_Q commute.
    pub fn adjacent(&self, p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> Result<bool> {
        self.check_vertex(p)?;
        self.check_vertex(q)?;
        Ok(self.commutes(&self.z_of(p)?, &self.z_of(q)?))
    }

    /// Checks pairwise adjacency and distinctness.
    pub fn check_simplex(&self, s: &CparabSimplex) -> Result<()> {
        for (i, p) in s.vertices.iter().enumerate() {
            self.check_vertex(p)?;
            for q in &s.vertices[i + 1..] {
                if !self.adjacent(p, q)? || self.parabolic_eq(p, q) {
                    return Err(Error::NotASimplex);
                }
            }
        }
        Ok(())
    }

    /// x·Σ·x⁻¹
    pub fn conj_simplex(&self, s: &CparabSimplex, x: &crate::ArtinElement) -> CparabSimplex {
        CparabSimplex { vertices: s.vertices.iter().map(|p| self.conj_parabolic(p, x)).collect() }
    }

    pub fn simplex_to_json(&self, s: &CparabSimplex) -> SimplexJson {
        SimplexJson { vertices: s.vertices.iter().map(|p| self.parabolic_to_json(p)).collect() }
    }

    pub fn simplex_from_json(&self, j: &SimplexJson) -> Result<CparabSimplex> {
        Ok(CparabSimplex { vertices: j.vertices.iter().map(|p| self.parabolic_from_json(p)).collect::<Result<_>>()? })
    }
}
