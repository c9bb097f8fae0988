use std::collections::{HashMap, VecDeque};

use crate::coxeter::CoxeterGroup;
use crate::genset::GenSet;
use crate::parabolic::classify::delta_twists;

/// An edge (Y, t, t') joining Y − {t} and Y − {t'}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConjEdge {
    pub y: GenSet,
    pub t: usize,
    pub t_prime: usize,
}

impl ConjEdge {
    pub fn ends(&self) -> (GenSet, GenSet) {
        (self.y.without(self.t), self.y.without(self.t_prime))
    }
}

/// Graph on all generator subsets whose components are the conjugacy classes of
/// standard parabolic subgroups.
#[derive(Debug, Clone)]
pub struct ConjugacyGraph {
    pub rank: usize,
    pub edges: Vec<ConjEdge>,
    adjacency: HashMap<GenSet, Vec<(GenSet, usize)>>,
    component: Vec<u32>,
}

impl ConjugacyGraph {
    pub fn component_id(&self, x: GenSet) -> u32 {
        self.component[x.0 as usize]
    }

    pub fn standard_conjugate(&self, x: GenSet, x2: GenSet) -> bool {
        self.component_id(x) == self.component_id(x2)
    }

    pub fn neighbors(&self, x: GenSet) -> &[(GenSet, usize)] {
        self.adjacency.get(&x).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Shortest edge path from `x` to `x2` using only edges whose Y lies inside `ambient`.
    pub fn path_within(&self, x: GenSet, x2: GenSet, ambient: GenSet) -> Option<Vec<ConjEdge>> {
        let mut prev: HashMap<GenSet, (GenSet, usize)> = HashMap::new();
        let mut queue = VecDeque::from([x]);
        prev.insert(x, (x, usize::MAX));
        while let Some(cur) = queue.pop_front() {
            if cur == x2 {
                let mut path = Vec::new();
                let mut at = cur;
                while at != x {
                    let (p, e) = prev[&at];
                    path.push(self.edges[e]);
                    at = p;
                }
                path.reverse();
                return Some(path);
            }
            for &(nb, e) in self.neighbors(cur) {
                if self.edges[e].y.is_subset(ambient) && !prev.contains_key(&nb) {
                    prev.insert(nb, (cur, e));
                    queue.push_back(nb);
                }
            }
        }
        None
    }

    pub fn path(&self, x: GenSet, x2: GenSet) -> Option<Vec<ConjEdge>> {
        self.path_within(x, x2, GenSet::full(self.rank))
    }
}

impl CoxeterGroup {
    pub fn build_conjugacy_graph(&self) -> ConjugacyGraph {
        let n = self.rank();
        assert!(n <= 20, "conjugacy graph enumerates all subsets");
        let mut edges = Vec::new();
        for m in 0..(1u64 << n) {
            let y = GenSet(m);
            for comp in self.graph.components(y) {
                let ty = self.classify(comp).expect("finite-type subgraph");
                if !delta_twists(ty) {
                    continue;
                }
                let perm = self.delta_permutation(comp).expect("connected");
                for t in comp.iter() {
                    if perm[t] != t {
                        edges.push(ConjEdge { y, t, t_prime: perm[t] });
                    }
                }
            }
        }
        let mut adjacency: HashMap<GenSet, Vec<(GenSet, usize)>> = HashMap::new();
        for (k, e) in edges.iter().enumerate() {
            let (a, b) = e.ends();
            adjacency.entry(a).or_default().push((b, k));
            adjacency.entry(b).or_default().push((a, k));
        }
        let mut component = vec![u32::MAX; 1usize << n];
        let mut next = 0u32;
        for start in 0..(1u64 << n) {
            if component[start as usize] != u32::MAX {
                continue;
            }
            let mut queue = VecDeque::from([GenSet(start)]);
            component[start as usize] = next;
            while let Some(cur) = queue.pop_front() {
                for &(nb, _) in adjacency.get(&cur).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if component[nb.0 as usize] == u32::MAX {
                        component[nb.0 as usize] = next;
                        queue.push_back(nb);
                    }
                }
            }
            next += 1;
        }
        ConjugacyGraph { rank: n, edges, adjacency, component }
    }
}
