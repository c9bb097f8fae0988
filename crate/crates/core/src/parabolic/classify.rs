use crate::coxeter::{ArtinType, CoxeterGroup, Family};
use crate::error::{Error, Result};
use crate::genset::GenSet;

impl CoxeterGroup {
    /// Finite type of the induced subgraph on a connected subset.
    pub fn classify(&self, x: GenSet) -> Result<ArtinType> {
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.graph.is_connected(x) {
            return Err(Error::Disconnected);
        }
        let n = x.len();
        let deg = |v: usize| self.graph.neighbors(v).inter(x).len();
        let mut heavy = Vec::new();
        for a in x.iter() {
            for b in x.iter().filter(|&b| b > a) {
                let m = self.graph.label(a, b);
                if m > 3 {
                    heavy.push((a, b, m));
                }
            }
        }
        let ty = |family, rank| ArtinType { family, rank, i2_label: None };
        if n == 1 {
            return Ok(ty(Family::A, 1));
        }
        if n == 2 {
            let v: Vec<usize> = x.iter().collect();
            return Ok(match self.graph.label(v[0], v[1]) {
                3 => ty(Family::A, 2),
                4 => ty(Family::B, 2),
                m => ArtinType { family: Family::I2, rank: 2, i2_label: Some(m) },
            });
        }
        if let Some(branch) = x.iter().find(|&v| deg(v) == 3) {
            // arm lengths from the branch vertex
            let mut arms: Vec<usize> = self
                .graph
                .neighbors(branch)
                .inter(x)
                .iter()
                .map(|start| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (branch, start);
                    loop {
                        let next = self.graph.neighbors(cur).inter(x).without(prev);
                        match next.min() {
                            Some(nx) => {
                                len += 1;
                                prev = cur;
                                cur = nx;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            return Ok(match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => ty(Family::D, n),
                (1, 2, _) => ty(Family::E, n),
                _ => return Err(Error::UnsupportedType(format!("arms {arms:?}"))),
            });
        }
        match heavy.as_slice() {
            [] => Ok(ty(Family::A, n)),
            [(a, b, 4)] if deg(*a) == 1 || deg(*b) == 1 => Ok(ty(Family::B, n)),
            [(_, _, 4)] => Ok(ty(Family::F, n)),
            [(_, _, 5)] => Ok(ty(Family::H, n)),
            _ => Err(Error::UnsupportedType(format!("{x}"))),
        }
    }
}

/// Whether Δ fails to be central for this type: A_n (n ≥ 2), D_n (n odd), E6, I2(odd).
pub fn delta_twists(ty: ArtinType) -> bool {
    match ty.family {
        Family::A => ty.rank >= 2,
        Family::D => ty.rank % 2 == 1,
        Family::E => ty.rank == 6,
        Family::I2 => ty.i2_label.is_some_and(|m| m % 2 == 1),
        _ => false,
    }
}
