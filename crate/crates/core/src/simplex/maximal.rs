use std::collections::BTreeSet;

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::simplex::levels::LevelDecomposition;
use crate::simplex::CparabSimplex;

/// Missing generators certifying maximality: `t` for the whole group and `t_i` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalWitness {
    pub t: usize,
    pub t_i: Vec<usize>,
}

/// Standard irreducible proper subsets pairwise forming a simplex: nested, or disjoint
/// with no edge between them.
pub fn standard_adjacent(group: &CoxeterGroup, x: GenSet, y: GenSet) -> bool {
    x.is_subset(y) || y.is_subset(x) || (x.inter(y).is_empty() && group.graph.boundary(x, y).is_empty())
}

impl CoxeterGroup {
    /// Maximality test for a family of standard subsets; `Ok(None)` when not maximal.
    pub fn is_maximal_standard_sets(&self, xs: &[GenSet]) -> Result<Option<MaximalWitness>> {
        let all = self.all();
        for (i, &x) in xs.iter().enumerate() {
            if !self.graph.is_connected(x) {
                return Err(Error::NotIrreducible);
            }
            if x == all {
                return Err(Error::NotProper);
            }
            for &y in &xs[i + 1..] {
                if x == y || !standard_adjacent(self, x, y) {
                    return Err(Error::NotASimplex);
                }
            }
        }
        let union = xs.iter().fold(GenSet::EMPTY, |u, &x| u.union(x));
        let missing = all.minus(union);
        if missing.len() != 1 {
            return Ok(None);
        }
        let mut t_i = Vec::with_capacity(xs.len());
        for &x in xs {
            let sub = xs.iter().filter(|&&y| y != x && y.is_subset(x)).fold(GenSet::EMPTY, |u, &y| u.union(y));
            let gap = x.minus(sub);
            if gap.len() != 1 {
                return Ok(None);
            }
            t_i.push(gap.min().unwrap());
        }
        Ok(Some(MaximalWitness { t: missing.min().unwrap(), t_i }))
    }

    pub fn is_maximal_standard(&self, s: &CparabSimplex) -> Result<Option<MaximalWitness>> {
        let mut xs = Vec::with_capacity(s.len());
        for p in &s.vertices {
            match self.is_standard(p) {
                Some(x) => xs.push(x),
                None => return Err(Error::NotStandard),
            }
        }
        self.is_maximal_standard_sets(&xs)
    }

    /// Every maximal simplex with standard vertices, as sorted lists of subsets.
    pub fn enumerate_maximal_standard(&self) -> Vec<Vec<GenSet>> {
        let mut out: BTreeSet<Vec<GenSet>> = BTreeSet::new();
        for t in 0..self.rank() {
            let tops = self.graph.components(self.all().without(t));
            for combo in self.fill_regions(&tops) {
                let mut v = combo;
                v.sort();
                out.insert(v);
            }
        }
        out.into_iter().collect()
    }

    /// All ways of completing each region (a connected subset that is itself a vertex)
    /// by choosing a missing generator and recursing into the components left over.
    fn fill_regions(&self, regions: &[GenSet]) -> Vec<Vec<GenSet>> {
        let mut acc: Vec<Vec<GenSet>> = vec![Vec::new()];
        for &r in regions {
            let mut options: Vec<Vec<GenSet>> = Vec::new();
            for t in r.iter() {
                let kids = self.graph.components(r.without(t));
                for mut sub in self.fill_regions(&kids) {
                    sub.push(r);
                    options.push(sub);
                }
            }
            acc = acc
                .into_iter()
                .flat_map(|a| {
                    options.iter().map(move |o| {
                        let mut v = a.clone();
                        v.extend_from_slice(o);
                        v
                    })
                })
                .collect();
        }
        acc
    }

    /// Standard-side level decomposition, with vertices ordered as given.
    pub fn standard_levels(&self, xs: &[GenSet]) -> LevelDecomposition {
        LevelDecomposition::of_standard(xs)
    }
}
