//! Markings: a maximal simplex of base parabolics with one transverse parabolic per base
//! element, plus projections, elementary moves, and standardization.

pub mod moves;
pub mod standardize;
pub mod transversals;

pub use moves::{FlipCandidates, MoveKind};

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::parabolic::{ParabolicJson, ParabolicSubgroup};
use crate::simplex::{CparabSimplex, LevelDecomposition, StandardizedSimplex};

#[derive(Clone, Debug)]
pub struct Marking {
    pub pairs: Vec<(ParabolicSubgroup, ParabolicSubgroup)>,
    frame: OnceLock<StandardizedSimplex>,
}

/// Q_j = g·Δ_{X_j}^k·A_Y·Δ_{X_j}^{−k}·g⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransversalData {
    pub index: usize,
    pub k: i64,
    pub subset: GenSet,
}

/// What validation established: the base levels and one decomposition per index
/// (relative to the canonical positive standardizer of the base).
#[derive(Clone, Debug)]
pub struct MarkingCertificate {
    pub levels: LevelDecomposition,
    pub base_subsets: Vec<GenSet>,
    pub transversals: Vec<TransversalData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub base: ParabolicJson,
    pub transverse: ParabolicJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkingJson {
    pub pairs: Vec<PairJson>,
}

impl Marking {
    pub fn new(pairs: Vec<(ParabolicSubgroup, ParabolicSubgroup)>) -> Self {
        Marking { pairs, frame: OnceLock::new() }
    }

    pub fn standard(group: &CoxeterGroup, pairs: &[(GenSet, GenSet)]) -> Self {
        Marking::new(
            pairs
                .iter()
                .map(|&(x, y)| (ParabolicSubgroup::standard(group, x), ParabolicSubgroup::standard(group, y)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn base(&self) -> CparabSimplex {
        CparabSimplex::new(self.pairs.iter().map(|(p, _)| p.clone()).collect())
    }

    /// Same pairs with index `j` replaced.
    pub fn with_pair(&self, j: usize, p: ParabolicSubgroup, q: ParabolicSubgroup) -> Marking {
        let mut pairs = self.pairs.clone();
        pairs[j] = (p, q);
        Marking::new(pairs)
    }

    pub fn with_transverse(&self, j: usize, q: ParabolicSubgroup) -> Marking {
        let mut m = Marking::new(self.pairs.clone());
        m.pairs[j].1 = q;
        if let Some(f) = self.frame.get() {
            let _ = m.frame.set(f.clone());
        }
        m
    }
}

impl CoxeterGroup {
    /// The canonical positive standardization of the base, computed once per marking.
    pub fn marking_frame<'a>(&self, m: &'a Marking) -> Result<&'a StandardizedSimplex> {
        if let Some(f) = m.frame.get() {
            return Ok(f);
        }
        let st = self.canonical_positive_standardizer(&m.base())?;
        Ok(m.frame.get_or_init(|| st))
    }

    /// Symmetric scan bound for the twist exponent of Q_j relative to g.
    pub(crate) fn decomposition_bound(&self, g: &ArtinElement, q: &ParabolicSubgroup) -> i64 {
        let e = self.mul(&self.inv(g), &q.conj);
        let body: i64 = e.body().iter().map(|x| x.len as i64).sum();
        let delta = self.w0().len as i64;
        body + delta * (e.inf().abs() + 2)
    }

    /// Unique (k, Y) with Q_j = g·Δ_{X_j}^k·A_Y·Δ_{X_j}^{−k}·g⁻¹, where g standardizes
    /// the base with P_j = g·A_{X_j}·g⁻¹.
    pub fn transversal_decomposition(&self, m: &Marking, j: usize, g: &ArtinElement) -> Result<TransversalData> {
        let (p, q) = &m.pairs[j];
        let x = self.standardizes(g, p).ok_or(Error::NotAStandardizer)?;
        let bound = self.decomposition_bound(g, q);
        self.transversal_decomposition_bounded(q, x, g, j, bound)
    }

    pub fn transversal_decomposition_bounded(
        &self,
        q: &ParabolicSubgroup,
        x: GenSet,
        g: &ArtinElement,
        index: usize,
        bound: i64,
    ) -> Result<TransversalData> {
        let d = self.garside_delta(x);
        let dinv = self.inv(&d);
        let mut up = g.clone();
        let mut down = g.clone();
        for k in 0..=bound {
            if let Some(y) = self.standardizes(&up, q) {
                return Ok(TransversalData { index, k, subset: y });
            }
            if k > 0 {
                if let Some(y) = self.standardizes(&down, q) {
                    return Ok(TransversalData { index, k: -k, subset: y });
                }
            }
            up = self.mul(&up, &d);
            down = self.mul(&down, &dinv);
        }
        Err(Error::ScanExhausted { bound })
    }

    /// Checks the three marking conditions; the third is certified by decomposing each
    /// transversal against the canonical standardizer of the base.
    pub fn validate_marking(&self, m: &Marking) -> Result<MarkingCertificate> {
        let base = m.base();
        self.check_simplex(&base).map_err(|e| match e {
            Error::NotASimplex => Error::BaseNotMaximal,
            other => other,
        })?;
        let frame = self.marking_frame(m)?;
        if frame.witness.is_none() {
            return Err(Error::BaseNotMaximal);
        }
        let zp: Vec<ArtinElement> = m.pairs.iter().map(|(p, _)| self.z_of(p)).collect::<Result<_>>()?;
        for (i, (_, q)) in m.pairs.iter().enumerate() {
            if !q.is_irreducible_in(self) || !q.is_proper_in(self) {
                return Err(Error::TransversalityPatternBroken(i, i));
            }
            let zq = self.z_of(q)?;
            for (j, z) in zp.iter().enumerate() {
                if self.commutes(&zq, z) != (i != j) {
                    return Err(Error::TransversalityPatternBroken(i, j));
                }
            }
        }
        let mut transversals = Vec::with_capacity(m.len());
        for j in 0..m.len() {
            let t = self.transversal_decomposition(m, j, &frame.g).map_err(|e| match e {
                Error::ScanExhausted { .. } => Error::NotSimultaneouslyStandardizable(j),
                other => other,
            })?;
            transversals.push(t);
        }
        Ok(MarkingCertificate { levels: frame.levels.clone(), base_subsets: frame.subsets.clone(), transversals })
    }

    /// π_{P_j}(Q_j): the twist exponent of Q_j relative to the canonical standardizer ĝ.
    pub fn projection(&self, m: &Marking, j: usize) -> Result<i64> {
        let frame = self.marking_frame(m)?;
        Ok(self.transversal_decomposition(m, j, &frame.g)?.k)
    }

    /// The same projection computed from an arbitrary base standardizer g: decompose
    /// relative to g, then read the Δ_{X_j}-exponent of ĝ⁻¹·g·Δ_{X_j}^{k_g} as an
    /// ascending product.
    pub fn projection_via(&self, m: &Marking, j: usize, g: &ArtinElement) -> Result<i64> {
        let frame = self.marking_frame(m)?;
        let t = self.transversal_decomposition(m, j, g)?;
        let x = self.standardizes(g, &m.pairs[j].0).ok_or(Error::NotAStandardizer)?;
        let h = self.mul(g, &self.delta_x_pow(x, t.k));
        let p = self.extract_ascending_product(&h, frame)?;
        Ok(p.exponent_of(frame.subsets[j]))
    }

    pub fn projections(&self, m: &Marking) -> Result<Vec<i64>> {
        (0..m.len()).map(|j| self.projection(m, j)).collect()
    }

    /// x·M·x⁻¹
    pub fn conj_marking(&self, m: &Marking, x: &ArtinElement) -> Marking {
        Marking::new(m.pairs.iter().map(|(p, q)| (self.conj_parabolic(p, x), self.conj_parabolic(q, x))).collect())
    }

    /// Pairs as (base key, transverse key), sorted; equal exactly when the markings have
    /// the same pair set.
    pub fn marking_key(&self, m: &Marking) -> Result<String> {
        let mut keys: Vec<String> = m
            .pairs
            .iter()
            .map(|(p, q)| Ok(format!("({} ; {})", self.parabolic_key(p)?, self.parabolic_key(q)?)))
            .collect::<Result<_>>()?;
        keys.sort();
        Ok(keys.join(" "))
    }

    pub fn marking_eq(&self, a: &Marking, b: &Marking) -> bool {
        a.len() == b.len()
            && a.pairs
                .iter()
                .all(|(p, q)| b.pairs.iter().any(|(p2, q2)| self.parabolic_eq(p, p2) && self.parabolic_eq(q, q2)))
    }

    /// Whether every base and transverse element is standard.
    pub fn is_all_standard(&self, m: &Marking) -> bool {
        m.pairs.iter().all(|(p, q)| self.is_standard(p).is_some() && self.is_standard(q).is_some())
    }

    pub fn marking_to_json(&self, m: &Marking) -> MarkingJson {
        MarkingJson {
            pairs: m
                .pairs
                .iter()
                .map(|(p, q)| PairJson { base: self.parabolic_to_json(p), transverse: self.parabolic_to_json(q) })
                .collect(),
        }
    }

    pub fn marking_from_json(&self, j: &MarkingJson) -> Result<Marking> {
        Ok(Marking::new(
            j.pairs
                .iter()
                .map(|pj| Ok((self.parabolic_from_json(&pj.base)?, self.parabolic_from_json(&pj.transverse)?)))
                .collect::<Result<_>>()?,
        ))
    }
}
