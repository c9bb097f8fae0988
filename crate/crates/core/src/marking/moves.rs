use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::marking::Marking;
use crate::parabolic::ParabolicSubgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Twist,
    Flip,
}

impl std::fmt::Display for MoveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MoveKind::Twist => "twist",
            MoveKind::Flip => "flip",
        })
    }
}

/// Everything a flip across `index` may produce: the swapped pair is fixed, and each
/// other index has a list of admissible transversals with their projections.
#[derive(Clone, Debug)]
pub struct FlipCandidates {
    pub index: usize,
    /// The marking with pair `index` swapped and the old transversals elsewhere.
    pub skeleton: Marking,
    pub options: Vec<Vec<(ParabolicSubgroup, i64)>>,
}

impl FlipCandidates {
    pub fn count(&self) -> usize {
        self.options.iter().enumerate().filter(|&(i, _)| i != self.index).map(|(_, o)| o.len()).product()
    }
}

impl CoxeterGroup {
    /// Replaces Q_j by z_{P_j}^{±1}·Q_j·z_{P_j}^{∓1}.
    pub fn twist_move(&self, m: &Marking, j: usize, inverse: bool) -> Result<Marking> {
        let z = self.z_of(&m.pairs[j].0)?;
        let z = if inverse { self.inv(&z) } else { z };
        Ok(m.with_transverse(j, self.conj_parabolic(&m.pairs[j].1, &z)))
    }

    /// Transversals for the flipped base at each index i ≠ j whose twist exponent is
    /// within one of Q_i's, both measured against the common standardizer
    /// h = ĝ·Δ_{X_j}^{k_j} of the old and new bases. Every transversal for index i has the
    /// form h·Δ_{X_i}^n·A_Y·Δ_{X_i}^{−n}·h⁻¹, so trying every standard Y is exhaustive.
    pub fn flip_candidates(&self, m: &Marking, j: usize) -> Result<FlipCandidates> {
        self.flip_candidates_with(m, j, |_, k| vec![k - 1, k, k + 1])
    }

    /// The standardizer h = ĝ·Δ_{X_j}^{k_j} of the base together with Q_j, and the twist
    /// exponents of every transversal relative to it.
    pub fn flip_frame(&self, m: &Marking, j: usize) -> Result<(ArtinElement, Vec<i64>)> {
        let frame = self.marking_frame(m)?;
        let kj = self.transversal_decomposition(m, j, &frame.g)?.k;
        let h = self.mul(&frame.g, &self.delta_x_pow(frame.subsets[j], kj));
        let ks = (0..m.len())
            .map(|i| Ok(if i == j { 0 } else { self.transversal_decomposition(m, i, &h)?.k }))
            .collect::<Result<Vec<_>>>()?;
        Ok((h, ks))
    }

    pub(crate) fn flip_candidates_with(
        &self,
        m: &Marking,
        j: usize,
        window: impl Fn(usize, i64) -> Vec<i64>,
    ) -> Result<FlipCandidates> {
        let (h, ks) = self.flip_frame(m, j)?;
        let (p, q) = &m.pairs[j];
        let skeleton = m.with_pair(j, q.clone(), p.clone());
        self.check_pair(&skeleton, j)?;
        let xs: Vec<GenSet> = skeleton
            .pairs
            .iter()
            .map(|(p, _)| self.standardizes(&h, p).ok_or(Error::NotAStandardizer))
            .collect::<Result<_>>()?;
        let mut options = Vec::with_capacity(m.len());
        for (i, &k) in ks.iter().enumerate() {
            if i == j {
                options.push(Vec::new());
                continue;
            }
            let mut opts = Vec::new();
            for n in window(i, k) {
                for y in self.transversals_with_exponent(&xs, &h, i, n) {
                    opts.push((y, n));
                }
            }
            options.push(opts);
        }
        Ok(FlipCandidates { index: j, skeleton, options })
    }

    /// All h·Δ_{X_i}^n·A_Y·Δ_{X_i}^{−n}·h⁻¹ that are transversals for index i of the base
    /// h·A_{X_m}·h⁻¹, in order of Y.
    pub fn transversals_with_exponent(
        &self,
        xs: &[GenSet],
        h: &ArtinElement,
        i: usize,
        n: i64,
    ) -> Vec<ParabolicSubgroup> {
        let d = self.delta_x_pow(xs[i], n);
        let dinv = self.inv(&d);
        let moved: Vec<GenSet> =
            xs.iter().map(|&x| self.std_image(&dinv, x).expect("Δ_X powers permute the standard base")).collect();
        let hd = self.mul(h, &d);
        (1..(1u64 << self.rank()) - 1)
            .map(GenSet)
            .filter(|&y| self.is_standard_transversal(&moved, i, y))
            .map(|y| ParabolicSubgroup::new(hd.clone(), y))
            .collect()
    }

    /// Transversals for index j of M's base with projection n.
    pub fn transversals_with_projection(&self, m: &Marking, j: usize, n: i64) -> Result<Vec<ParabolicSubgroup>> {
        let frame = self.marking_frame(m)?;
        Ok(self.transversals_with_exponent(&frame.subsets, &frame.g, j, n))
    }

    /// Checks pair j of a marking whose other pairs are known to be fine: the
    /// transversality pattern of Q_j and its simultaneous standardizability with the base.
    pub(crate) fn check_pair(&self, m: &Marking, j: usize) -> Result<()> {
        self.check_simplex(&m.base()).map_err(|_| Error::BaseNotMaximal)?;
        let frame = self.marking_frame(m)?;
        if frame.witness.is_none() {
            return Err(Error::BaseNotMaximal);
        }
        let q = &m.pairs[j].1;
        if !q.is_irreducible_in(self) || !q.is_proper_in(self) {
            return Err(Error::TransversalityPatternBroken(j, j));
        }
        let zq = self.z_of(q)?;
        for (i, (p, _)) in m.pairs.iter().enumerate() {
            if self.commutes(&zq, &self.z_of(p)?) != (i != j) {
                return Err(Error::TransversalityPatternBroken(j, i));
            }
        }
        self.transversal_decomposition(m, j, &frame.g).map_err(|e| match e {
            Error::ScanExhausted { .. } => Error::NotSimultaneouslyStandardizable(j),
            other => other,
        })?;
        Ok(())
    }

    /// Assembles the marking picking `choice[i]` from each index's options.
    pub fn flip_marking(&self, c: &FlipCandidates, choice: &[usize]) -> Marking {
        let mut out = Marking::new(c.skeleton.pairs.clone());
        for (i, opts) in c.options.iter().enumerate() {
            if i != c.index {
                out.pairs[i].1 = opts[choice[i]].0.clone();
            }
        }
        if let Some(f) = c.skeleton.frame.get() {
            let _ = out.frame.set(f.clone());
        }
        out
    }

    /// Every marking reachable by a flip across j, in lexicographic order of choices.
    pub fn enumerate_flip_moves(&self, m: &Marking, j: usize) -> Result<Vec<Marking>> {
        let c = self.flip_candidates(m, j)?;
        let n = m.len();
        let mut out = Vec::with_capacity(c.count());
        let mut choice = vec![0usize; n];
        if c.options.iter().enumerate().any(|(i, o)| i != j && o.is_empty()) {
            return Ok(out);
        }
        loop {
            out.push(self.flip_marking(&c, &choice));
            // odometer over indices other than j, last index fastest
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if pos == j {
                    continue;
                }
                choice[pos] += 1;
                if choice[pos] < c.options[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }

    /// The move relating two markings, if any (pairs compared index by index).
    /// b's pairs reordered so that equal bases share an index with a; at most one
    /// base may be left unmatched.
    fn align_pairs(&self, a: &Marking, b: &Marking) -> Option<Marking> {
        let n = a.len();
        let mut slot: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        for (i, s) in slot.iter_mut().enumerate() {
            if let Some(k) = (0..n).find(|&k| !used[k] && self.parabolic_eq(&a.pairs[i].0, &b.pairs[k].0)) {
                used[k] = true;
                *s = Some(k);
            }
        }
        let free: Vec<usize> = (0..n).filter(|&k| !used[k]).collect();
        if free.len() > 1 {
            return None;
        }
        let mut free = free.into_iter();
        let order: Vec<usize> = slot.into_iter().map(|s| s.or_else(|| free.next()).expect("counts agree")).collect();
        Some(Marking::new(order.into_iter().map(|k| b.pairs[k].clone()).collect()))
    }

    pub fn move_kind(&self, a: &Marking, b: &Marking) -> Result<Option<MoveKind>> {
        if a.len() != b.len() {
            return Ok(None);
        }
        let n = a.len();
        let b = match self.align_pairs(a, b) {
            Some(b) => b,
            None => return Ok(None),
        };
        let b = &b;
        let same_base: Vec<bool> = (0..n).map(|i| self.parabolic_eq(&a.pairs[i].0, &b.pairs[i].0)).collect();
        if same_base.iter().all(|&s| s) {
            let diff: Vec<usize> = (0..n).filter(|&i| !self.parabolic_eq(&a.pairs[i].1, &b.pairs[i].1)).collect();
            if diff.len() == 1 {
                let j = diff[0];
                for inverse in [false, true] {
                    let t = self.twist_move(a, j, inverse)?;
                    if self.parabolic_eq(&t.pairs[j].1, &b.pairs[j].1) {
                        return Ok(Some(MoveKind::Twist));
                    }
                }
            }
            return Ok(None);
        }
        let swapped: Vec<usize> = (0..n).filter(|&i| !same_base[i]).collect();
        if swapped.len() != 1 {
            return Ok(None);
        }
        let j = swapped[0];
        if !self.parabolic_eq(&a.pairs[j].1, &b.pairs[j].0) || !self.parabolic_eq(&a.pairs[j].0, &b.pairs[j].1) {
            return Ok(None);
        }
        let (h, ka) = self.flip_frame(a, j)?;
        for i in (0..n).filter(|&i| i != j) {
            let kb = match self.transversal_decomposition(b, i, &h) {
                Ok(t) => t.k,
                Err(Error::NotAStandardizer) => return Ok(None),
                Err(e) => return Err(e),
            };
            if (ka[i] - kb).abs() > 1 {
                return Ok(None);
            }
        }
        Ok(Some(MoveKind::Flip))
    }

    /// A path M1 = N_0, …, N_r = M2 of at most four moves between markings on the same
    /// base whose projections differ by at most one at every index.
    pub fn transversal_swap_path(&self, m1: &Marking, m2: &Marking) -> Result<Vec<Marking>> {
        let n = m1.len();
        if m2.len() != n || (0..n).any(|i| !self.parabolic_eq(&m1.pairs[i].0, &m2.pairs[i].0)) {
            return Err(Error::PreconditionViolated("bases differ".into()));
        }
        let p1 = self.projections(m1)?;
        let p2 = self.projections(m2)?;
        if (0..n).any(|i| (p1[i] - p2[i]).abs() > 1) {
            return Err(Error::PreconditionViolated("projections differ by more than one".into()));
        }
        let differs: Vec<usize> = (0..n).filter(|&i| !self.parabolic_eq(&m1.pairs[i].1, &m2.pairs[i].1)).collect();
        if differs.is_empty() {
            return Ok(vec![m1.clone()]);
        }
        if n == 1 {
            // A single pair cannot be changed by flips; the base is one generator, so
            // projection steps of one are twists.
            return match self.move_kind(m1, m2)? {
                Some(_) => Ok(vec![m1.clone(), m2.clone()]),
                None => Err(Error::PreconditionViolated("single pair not related by a twist".into())),
            };
        }
        let j = differs[0];
        let k = if j == 0 { 1 } else { 0 };
        let targets: Vec<&ParabolicSubgroup> = m2.pairs.iter().map(|(_, r)| r).collect();

        // flip across j, matching R_i's exponents; flip back landing on R_i (i ≠ j);
        // then the same across k, which also replaces Q_j by R_j.
        let a = self.flip_towards(m1, j, |i| Target::SameExponentAs(targets[i]))?;
        let b = self.flip_towards(&a, j, |i| Target::Exact(targets[i]))?;
        let c = self.flip_towards(&b, k, |i| Target::SameExponentAs(targets[i]))?;
        let d = self.flip_towards(&c, k, |i| Target::Exact(targets[i]))?;

        let mut path = vec![m1.clone()];
        for step in [a, b, c, d] {
            if !self.marking_eq(path.last().unwrap(), &step) {
                path.push(step);
            }
        }
        Ok(path)
    }

    fn flip_towards<'a>(&self, m: &Marking, j: usize, want: impl Fn(usize) -> Target<'a>) -> Result<Marking> {
        let (h, _) = self.flip_frame(m, j)?;
        let mut wanted_k = vec![None; m.len()];
        for (i, (p, _)) in m.pairs.iter().enumerate() {
            if let (true, Target::SameExponentAs(r)) = (i != j, want(i)) {
                let x = self.standardizes(&h, p).ok_or(Error::NotAStandardizer)?;
                let b = self.decomposition_bound(&h, r);
                wanted_k[i] = Some(self.transversal_decomposition_bounded(r, x, &h, i, b)?.k);
            }
        }
        let c = self.flip_candidates_with(m, j, |i, k| match wanted_k[i] {
            Some(n) => vec![n],
            None => vec![k - 1, k, k + 1],
        })?;
        let mut choice = vec![0usize; m.len()];
        for (i, opts) in c.options.iter().enumerate() {
            if i == j {
                continue;
            }
            let pick = match want(i) {
                Target::SameExponentAs(_) => (!opts.is_empty()).then_some(0),
                Target::Exact(r) => opts.iter().position(|(q, _)| self.parabolic_eq(q, r)),
            };
            choice[i] = pick.ok_or_else(|| Error::PreconditionViolated(format!("no admissible transversal at {i}")))?;
        }
        Ok(self.flip_marking(&c, &choice))
    }
}

enum Target<'a> {
    /// Any transversal whose exponent matches that of the given one.
    SameExponentAs(&'a ParabolicSubgroup),
    Exact(&'a ParabolicSubgroup),
}
