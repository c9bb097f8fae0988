//! Local exploration of the marking graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::marking::{Marking, MoveKind};

/// Markings within some radius of a seed, keyed by marking key.
#[derive(Clone, Debug, Default)]
pub struct ExploredGraph {
    pub nodes: BTreeMap<String, Marking>,
    /// BFS distance from the seed.
    pub radius: BTreeMap<String, usize>,
    /// Undirected edges with the smaller key first.
    pub edges: BTreeSet<(String, String, MoveKind)>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    nodes: Vec<&'a str>,
    edges: Vec<(&'a str, &'a str, MoveKind)>,
}

impl ExploredGraph {
    pub fn degree(&self, key: &str) -> usize {
        self.edges.iter().filter(|(a, b, _)| a == key || b == key).count()
    }

    pub fn to_json(&self) -> String {
        let g = GraphJson {
            nodes: self.nodes.keys().map(String::as_str).collect(),
            edges: self.edges.iter().map(|(a, b, k)| (a.as_str(), b.as_str(), *k)).collect(),
        };
        serde_json::to_string_pretty(&g).expect("plain data")
    }

    pub fn to_dot(&self) -> String {
        let ids: BTreeMap<&str, usize> = self.nodes.keys().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
        let mut out = String::from("graph markings {\n");
        for (k, i) in &ids {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", k.replace('"', "\\\"")));
        }
        for (a, b, kind) in &self.edges {
            let color = match kind {
                MoveKind::Twist => "blue",
                MoveKind::Flip => "red",
            };
            out.push_str(&format!("  n{} -- n{} [color={color}, label={kind}];\n", ids[a.as_str()], ids[b.as_str()]));
        }
        out.push_str("}\n");
        out
    }

    pub fn export(&self, format: &str) -> Result<String> {
        match format {
            "dot" => Ok(self.to_dot()),
            "json" => Ok(self.to_json()),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Distances among the markings whose base and transverse elements are all standard.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub markings: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    /// The proof's path-length constant for this rank.
    pub bound: u64,
    /// Markings on a standard base with one transversal twisted to projection in [−2, 2].
    pub twist_variants: usize,
    /// Longest chained swap path from a twist variant to its all-standard marking.
    pub variant_path: usize,
}

/// k_2 = 1, k_N = max{2k_{N−1} + 13, N + k_{N−1} + 7}.
pub fn flip_path_bound(rank: usize) -> u64 {
    let mut k = 1u64;
    for n in 3..=rank as u64 {
        k = (2 * k + 13).max(n + k + 7);
    }
    k
}

fn product(rows: &[Vec<(GenSet, GenSet)>]) -> Vec<StandardMarking> {
    rows.iter().fold(vec![Vec::new()], |acc, row| {
        acc.iter()
            .flat_map(|a| {
                row.iter().map(move |&p| {
                    let mut v = a.clone();
                    v.push(p);
                    v
                })
            })
            .collect()
    })
}

/// An all-standard marking as sorted (base, transversal) subset pairs.
pub type StandardMarking = Vec<(GenSet, GenSet)>;

impl CoxeterGroup {
    /// Twist results (both directions at every index) and every flip, deduplicated by key
    /// and sorted by it.
    pub fn neighbors(&self, m: &Marking) -> Result<Vec<(Marking, MoveKind)>> {
        let mut seen: BTreeMap<String, (Marking, MoveKind)> = BTreeMap::new();
        for j in 0..m.len() {
            for inverse in [false, true] {
                let t = self.twist_move(m, j, inverse)?;
                seen.entry(self.marking_key(&t)?).or_insert((t, MoveKind::Twist));
            }
        }
        for j in 0..m.len() {
            for f in self.enumerate_flip_moves(m, j)? {
                seen.entry(self.marking_key(&f)?).or_insert((f, MoveKind::Flip));
            }
        }
        Ok(seen.into_values().collect())
    }

    pub fn bfs(&self, seed: &Marking, radius: usize) -> Result<ExploredGraph> {
        let mut g = ExploredGraph::default();
        let k0 = self.marking_key(seed)?;
        g.nodes.insert(k0.clone(), seed.clone());
        g.radius.insert(k0.clone(), 0);
        let mut queue = VecDeque::from([k0]);
        while let Some(key) = queue.pop_front() {
            let r = g.radius[&key];
            if r == radius {
                continue;
            }
            let m = g.nodes[&key].clone();
            for (n, kind) in self.neighbors(&m)? {
                let nk = self.marking_key(&n)?;
                if nk == key {
                    continue;
                }
                if !g.nodes.contains_key(&nk) {
                    g.nodes.insert(nk.clone(), n);
                    g.radius.insert(nk.clone(), r + 1);
                    queue.push_back(nk.clone());
                }
                let (a, b) = if key < nk { (key.clone(), nk) } else { (nk, key.clone()) };
                g.edges.insert((a, b, kind));
            }
        }
        Ok(g)
    }

    /// Whether conjugating both ends of an edge by x gives an edge of the same kind.
    pub fn verify_action_isometry(&self, a: &Marking, b: &Marking, x: &ArtinElement) -> Result<bool> {
        let kind = self.move_kind(a, b)?;
        if kind.is_none() {
            return Err(Error::PreconditionViolated("not an edge".into()));
        }
        Ok(self.move_kind(&self.conj_marking(a, x), &self.conj_marking(b, x))? == kind)
    }

    /// Every marking with all base and transverse elements standard.
    pub fn all_standard_markings(&self) -> Result<Vec<StandardMarking>> {
        let mut out = BTreeSet::new();
        for xs in self.enumerate_maximal_standard() {
            let rows: Vec<Vec<(GenSet, GenSet)>> = (0..xs.len())
                .map(|i| self.standard_transversal_options(&xs, i).into_iter().map(|y| (xs[i], y)).collect())
                .collect();
            for mut m in product(&rows) {
                m.sort();
                out.insert(m);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn standard_transversal_options(&self, xs: &[GenSet], i: usize) -> Vec<GenSet> {
        (1..(1u64 << self.rank()) - 1).map(GenSet).filter(|&y| self.is_standard_transversal(xs, i, y)).collect()
    }

    /// Flips between all-standard markings; with every element standard the flip frame
    /// is trivial, so these are exactly the swaps whose new transversals are standard.
    pub fn standard_flip_neighbors(&self, m: &StandardMarking) -> Vec<StandardMarking> {
        let mut out = BTreeSet::new();
        let xs: Vec<GenSet> = m.iter().map(|&(x, _)| x).collect();
        for j in 0..m.len() {
            let mut nx = xs.clone();
            nx[j] = m[j].1;
            if !matches!(self.is_maximal_standard_sets(&nx), Ok(Some(_))) {
                continue;
            }
            if !self.is_standard_transversal(&nx, j, m[j].0) {
                continue;
            }
            let rows: Vec<Vec<(GenSet, GenSet)>> = (0..m.len())
                .map(|i| {
                    let opts = if i == j { vec![m[j].0] } else { self.standard_transversal_options(&nx, i) };
                    opts.into_iter().map(|y| (nx[i], y)).collect()
                })
                .collect();
            for mut v in product(&rows) {
                v.sort();
                out.insert(v);
            }
        }
        out.into_iter().collect()
    }

    /// Connects the all-standard markings by flips among themselves and reports the
    /// largest pairwise distance, with twist variants up to projection ±2.
    pub fn standard_marking_connectivity(&self) -> Result<ConnectivityReport> {
        self.standard_marking_connectivity_with(2)
    }

    /// As above; `twist_window` 0 skips the twist variants.
    pub fn standard_marking_connectivity_with(&self, twist_window: i64) -> Result<ConnectivityReport> {
        let nodes = self.all_standard_markings()?;
        let index: BTreeMap<&StandardMarking, usize> = nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let adj: Vec<Vec<usize>> = nodes
            .iter()
            .map(|m| self.standard_flip_neighbors(m).iter().filter_map(|n| index.get(n).copied()).collect())
            .collect();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let mut diameter = 0usize;
        let mut connected = true;
        for s in 0..nodes.len() {
            let mut dist = vec![usize::MAX; nodes.len()];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            if dist.contains(&usize::MAX) {
                connected = false;
            } else {
                diameter = diameter.max(*dist.iter().max().unwrap());
            }
        }
        let (twist_variants, variant_path) = self.twist_variant_paths(&nodes, twist_window)?;
        Ok(ConnectivityReport {
            markings: nodes.len(),
            edges,
            connected,
            diameter: connected.then_some(diameter),
            bound: flip_path_bound(self.rank()),
            twist_variants,
            variant_path,
        })
    }

    /// Joins every marking that differs from an all-standard one at a single index, with
    /// projection n, 0 < |n| ≤ window, by swap paths through projections 0, ±1, …, n.
    /// Returns the number of such markings and the longest joining path.
    pub fn twist_variant_paths(&self, standard: &[StandardMarking], window: i64) -> Result<(usize, usize)> {
        let mut count = 0;
        let mut longest = 0;
        for sm in standard {
            let m = self.standard_marking(sm);
            for j in 0..m.len() {
                for dir in [1i64, -1] {
                    let mut cur = m.clone();
                    let mut walked = 0;
                    for step in 1..=window {
                        let n = dir * step;
                        let options = self.transversals_with_projection(&m, j, n)?;
                        let Some(first) = options.first() else { break };
                        for q in &options {
                            let target = m.with_transverse(j, q.clone());
                            let path = self.transversal_swap_path(&cur, &target)?;
                            count += 1;
                            longest = longest.max(walked + path.len() - 1);
                        }
                        let next = m.with_transverse(j, first.clone());
                        walked += self.transversal_swap_path(&cur, &next)?.len() - 1;
                        cur = next;
                    }
                }
            }
        }
        Ok((count, longest))
    }

    pub fn standard_marking(&self, m: &StandardMarking) -> Marking {
        Marking::standard(self, m)
    }

    /// The sorted subset pairs of an all-standard marking.
    pub fn as_standard_marking(&self, m: &Marking) -> Option<StandardMarking> {
        let mut v = m
            .pairs
            .iter()
            .map(|(p, q)| Some((self.is_standard(p)?, self.is_standard(q)?)))
            .collect::<Option<Vec<_>>>()?;
        v.sort();
        Some(v)
    }
}
