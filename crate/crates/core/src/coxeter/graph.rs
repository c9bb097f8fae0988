use crate::coxeter::types::{ArtinType, Family};
use crate::genset::GenSet;

/// Labeled defining graph. Vertices are `s1..sn` (0-based internally);
/// `label(i, j) == 2` encodes a non-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    pub ty: ArtinType,
    labels: Vec<Vec<u32>>,
}

impl DefiningGraph {
    pub fn build(ty: ArtinType) -> DefiningGraph {
        let n = ty.rank;
        let mut labels = vec![vec![2u32; n]; n];
        let mut edge = |i: usize, j: usize, m: u32| {
            labels[i][j] = m;
            labels[j][i] = m;
        };
        match ty.family {
            Family::A => (1..n).for_each(|i| edge(i - 1, i, 3)),
            Family::B => {
                edge(0, 1, 4);
                (2..n).for_each(|i| edge(i - 1, i, 3));
            }
            Family::D => {
                (1..n - 2).for_each(|i| edge(i - 1, i, 3));
                edge(n - 3, n - 2, 3);
                edge(n - 3, n - 1, 3);
            }
            Family::E => {
                edge(0, 1, 3);
                edge(1, 2, 3);
                edge(2, 3, 3);
                edge(2, 4, 3);
                (5..n).for_each(|i| edge(i - 1, i, 3));
            }
            Family::F => {
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
            }
            Family::H => {
                edge(0, 1, 5);
                (2..n).for_each(|i| edge(i - 1, i, 3));
            }
            Family::I2 => edge(0, 1, ty.i2_label.unwrap_or(3)),
        }
        for (i, row) in labels.iter_mut().enumerate() {
            row[i] = 1;
        }
        DefiningGraph { ty, labels }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Coxeter label m_ij; `1` on the diagonal.
    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i][j]
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn neighbors(&self, i: usize) -> GenSet {
        GenSet::from_indices((0..self.rank()).filter(|&j| j != i && self.labels[i][j] > 2))
    }

    /// Connected components of the induced subgraph on `x`, ordered by least generator.
    pub fn components(&self, x: GenSet) -> Vec<GenSet> {
        let mut rest = x;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = GenSet::single(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = GenSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v).inter(x));
                }
                frontier = next.minus(comp);
                comp = comp.union(next);
            }
            rest = rest.minus(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, x: GenSet) -> bool {
        !x.is_empty() && self.components(x).len() == 1
    }

    /// Component of `x` containing generator `t` (empty if `t ∉ x`).
    pub fn component_of(&self, x: GenSet, t: usize) -> GenSet {
        self.components(x).into_iter().find(|c| c.contains(t)).unwrap_or_default()
    }

    /// Generators of `x` adjacent to some vertex of `y`.
    pub fn boundary(&self, x: GenSet, y: GenSet) -> GenSet {
        GenSet::from_indices(x.iter().filter(|&v| !self.neighbors(v).inter(y).is_empty()))
    }

    /// Labels occurring on edges, excluding 2.
    pub fn edge_labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.rank())
            .flat_map(|i| (i + 1..self.rank()).map(move |j| (i, j)))
            .map(|(i, j)| self.labels[i][j])
            .filter(|&m| m > 2)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}
