use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::marking::Marking;

impl CoxeterGroup {
    /// (c, S) with M = c·S·c⁻¹ and every element of S standard: standardize the base,
    /// then untwist transversals level by level starting from the minimal base elements.
    pub fn standardize_marking(&self, m: &Marking) -> Result<(ArtinElement, Marking)> {
        let frame = self.marking_frame(m)?;
        let mut c = frame.g.clone();
        let levels = frame.levels.clone();
        for level in levels.levels.iter().rev() {
            for &j in level {
                let t = self.transversal_decomposition(m, j, &c)?;
                if t.k != 0 {
                    let x = self.standardizes(&c, &m.pairs[j].0).ok_or(Error::NotAStandardizer)?;
                    c = self.mul(&c, &self.delta_x_pow(x, t.k));
                }
            }
        }
        let s = self.conj_marking(m, &self.inv(&c));
        if !self.is_all_standard(&s) {
            return Err(Error::NotStandard);
        }
        // rewrite each element with the identity as its conjugator
        let s = Marking::new(
            s.pairs
                .iter()
                .map(|(p, q)| {
                    let x = self.is_standard(p).expect("checked");
                    let y = self.is_standard(q).expect("checked");
                    (crate::ParabolicSubgroup::standard(self, x), crate::ParabolicSubgroup::standard(self, y))
                })
                .collect(),
        );
        Ok((c, s))
    }

    /// Whether conjugation by g permutes the pairs of M.
    pub fn stabilizes_marking(&self, g: &ArtinElement, m: &Marking) -> bool {
        let img = self.conj_marking(m, g);
        img.pairs
            .iter()
            .all(|(p, q)| m.pairs.iter().any(|(p2, q2)| self.parabolic_eq(p, p2) && self.parabolic_eq(q, q2)))
    }

    /// Every Δ^e·x with x positive of atom length ≤ `bound` and |e| ≤ `bound` that
    /// stabilizes M, in normal-form order.
    pub fn marking_stabilizer_probe(&self, m: &Marking, bound: usize) -> Vec<ArtinElement> {
        let mut positives = vec![self.one()];
        let mut frontier = vec![self.one()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for x in &frontier {
                for s in 0..self.rank() {
                    let y = self.mul(x, &self.gen(s));
                    if !positives.contains(&y) && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            positives.extend(next.iter().cloned());
            frontier = next;
        }
        let b = bound as i64;
        let mut hits: Vec<ArtinElement> = Vec::new();
        for e in -b..=b {
            let d = self.delta_pow(e);
            for x in &positives {
                let g = self.mul(&d, x);
                if !hits.contains(&g) && self.stabilizes_marking(&g, m) {
                    hits.push(g);
                }
            }
        }
        hits.sort_by_key(|h| (h.inf(), h.canonical_length()));
        hits
    }
}
