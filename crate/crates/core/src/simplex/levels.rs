use crate::coxeter::CoxeterGroup;
use crate::error::Result;
use crate::genset::GenSet;
use crate::simplex::CparabSimplex;

/// Partition of a simplex's vertices by depth in nesting chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    /// `levels[k]` holds the vertex indices at level `k + 1`, ascending.
    pub levels: Vec<Vec<usize>>,
    /// 1-based level of each vertex.
    pub level_of: Vec<usize>,
    /// Smallest vertex properly containing each vertex.
    pub parent: Vec<Option<usize>>,
    /// Complete nesting chains, largest element first.
    pub chains: Vec<Vec<usize>>,
}

impl LevelDecomposition {
    /// Builds the decomposition from a strict-containment oracle
    /// (`contains(i, j)`: vertex i properly contains vertex j).
    pub fn from_containment(n: usize, contains: impl Fn(usize, usize) -> bool) -> Self {
        let above: Vec<Vec<usize>> = (0..n).map(|j| (0..n).filter(|&i| i != j && contains(i, j)).collect()).collect();
        let level_of: Vec<usize> = above.iter().map(|a| a.len() + 1).collect();
        let parent: Vec<Option<usize>> =
            (0..n).map(|j| above[j].iter().copied().find(|&i| level_of[i] + 1 == level_of[j])).collect();
        let depth = level_of.iter().copied().max().unwrap_or(0);
        let levels: Vec<Vec<usize>> = (1..=depth).map(|k| (0..n).filter(|&i| level_of[i] == k).collect()).collect();
        let has_child: Vec<bool> = (0..n).map(|i| parent.contains(&Some(i))).collect();
        let chains = (0..n)
            .filter(|&i| !has_child[i])
            .map(|i| {
                let mut c = vec![i];
                let mut at = i;
                while let Some(p) = parent[at] {
                    c.push(p);
                    at = p;
                }
                c.reverse();
                c
            })
            .collect();
        LevelDecomposition { levels, level_of, parent, chains }
    }

    pub fn of_standard(subsets: &[GenSet]) -> Self {
        Self::from_containment(subsets.len(), |i, j| subsets[j].is_subset(subsets[i]) && subsets[i] != subsets[j])
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&j| self.parent[j] == Some(i)).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }
}

impl CoxeterGroup {
    pub fn decompose_levels(&self, s: &CparabSimplex) -> Result<LevelDecomposition> {
        self.check_simplex(s)?;
        let v = &s.vertices;
        Ok(LevelDecomposition::from_containment(v.len(), |i, j| {
            v[i].gens.len() > v[j].gens.len() && self.parabolic_contains(&v[i], &v[j])
        }))
    }
}
