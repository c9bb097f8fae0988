use std::collections::HashMap;

use crate::coxeter::graph::DefiningGraph;
use crate::coxeter::ring::{CosRing, Elem};

/// Finite root system of the Coxeter quotient, with every generator's reflection
/// stored as a permutation of root indices.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub ring: CosRing,
    /// Root coordinates in the simple-root basis, `rank * degree` integers each.
    pub roots: Vec<Vec<i64>>,
    pub positive: Vec<bool>,
    /// `reflections[i][r]` is the index of `s_i(root r)`.
    pub reflections: Vec<Vec<u16>>,
    /// Index of the simple root `alpha_i`.
    pub simple: Vec<usize>,
}

impl RootSystem {
    pub fn build(graph: &DefiningGraph) -> RootSystem {
        let n = graph.rank();
        let ring = CosRing::for_labels(&graph.edge_labels());
        let d = ring.degree();
        // gram[i][j] = 2B(alpha_i, alpha_j)
        let gram: Vec<Vec<Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            ring.int(2)
                        } else {
                            let c = ring.two_cos(graph.label(i, j));
                            c.iter().map(|x| -x).collect()
                        }
                    })
                    .collect()
            })
            .collect();

        let reflect = |v: &[i64], i: usize| -> Vec<i64> {
            let mut pairing = ring.zero();
            for j in 0..n {
                let vj = &v[j * d..(j + 1) * d];
                if ring.is_zero(vj) {
                    continue;
                }
                pairing = ring.add(&pairing, &ring.mul(&gram[i][j], vj));
            }
            let mut out = v.to_vec();
            for k in 0..d {
                out[i * d + k] -= pairing[k];
            }
            out
        };

        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut v = vec![0i64; n * d];
            v[i * d] = 1;
            index.insert(v.clone(), roots.len());
            roots.push(v);
        }
        let mut refl: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut head = 0;
        while head < roots.len() {
            for (i, table) in refl.iter_mut().enumerate() {
                let img = reflect(&roots[head], i);
                let idx = match index.get(&img) {
                    Some(&k) => k,
                    None => {
                        let k = roots.len();
                        index.insert(img.clone(), k);
                        roots.push(img);
                        k
                    }
                };
                table.push(idx);
            }
            head += 1;
        }
        assert!(roots.len() < u16::MAX as usize, "root system too large");
        let positive = roots
            .iter()
            .map(|v| v.chunks(d).find(|c| !ring.is_zero(c)).map(|c| ring.to_f64(c) > 0.0).unwrap_or(false))
            .collect();
        let reflections = refl.into_iter().map(|t| t.into_iter().map(|k| k as u16).collect()).collect();
        RootSystem { ring, roots, positive, reflections, simple: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.iter().filter(|&&p| p).count()
    }
}
