use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::marking::Marking;

impl CoxeterGroup {
    /// Standard transversal subsets for a maximal standard family, indexed like `xs`.
    ///
    /// Inside its region R (the smallest vertex containing X, or the whole graph) with
    /// missing generator v, X gets R − X, enlarged by the sub-vertex of X directly below
    /// it that touches v when there is one.
    pub fn standard_transversal_sets(&self, xs: &[GenSet]) -> Result<Vec<GenSet>> {
        let w = self.is_maximal_standard_sets(xs)?.ok_or(Error::NotMaximal)?;
        let levels = self.standard_levels(xs);
        let mut out = Vec::with_capacity(xs.len());
        for (i, &x) in xs.iter().enumerate() {
            let (region, v) = match levels.parent[i] {
                Some(p) => (xs[p], w.t_i[p]),
                None => (self.all(), w.t),
            };
            let mut y = region.minus(x);
            let touching: Vec<GenSet> = levels
                .children(i)
                .into_iter()
                .map(|c| xs[c])
                .filter(|&c| !self.graph.boundary(c, GenSet::single(v)).is_empty())
                .collect();
            debug_assert!(touching.len() <= 1);
            if let Some(&c) = touching.first() {
                y = y.union(c);
            }
            out.push(y);
        }
        Ok(out)
    }

    pub fn standard_transversals(&self, xs: &[GenSet]) -> Result<Marking> {
        let ys = self.standard_transversal_sets(xs)?;
        let pairs: Vec<(GenSet, GenSet)> = xs.iter().copied().zip(ys).collect();
        Ok(Marking::standard(self, &pairs))
    }

    /// Whether Y is a transversal for index j of a standard base: irreducible, proper,
    /// and adjacent in the complex to every base subset except X_j.
    pub fn is_standard_transversal(&self, xs: &[GenSet], j: usize, y: GenSet) -> bool {
        if !self.graph.is_connected(y) || y == self.all() {
            return false;
        }
        xs.iter().enumerate().all(|(i, &x)| crate::simplex::standard_adjacent(self, x, y) == (i != j))
    }
}
