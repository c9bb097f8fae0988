use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::parabolic::{permute_set, ParabolicSubgroup};
use crate::simplex::levels::LevelDecomposition;
use crate::simplex::maximal::MaximalWitness;
use crate::simplex::CparabSimplex;

/// Canonical positive standardizer ĝ with P_i = ĝ·A_{X_i}·ĝ⁻¹.
#[derive(Clone, Debug)]
pub struct StandardizedSimplex {
    pub g: ArtinElement,
    /// X_i, indexed like the simplex's vertices.
    pub subsets: Vec<GenSet>,
    pub levels: LevelDecomposition,
    /// Present when the standardized family is maximal.
    pub witness: Option<MaximalWitness>,
}

impl CoxeterGroup {
    /// Some positive element standardizing every vertex at once.
    pub fn common_standardizer(&self, s: &CparabSimplex, seeds: &[ArtinElement]) -> Result<ArtinElement> {
        let works = |c: &ArtinElement| s.vertices.iter().all(|p| self.standardizes(c, p).is_some());
        let lift = |c: &ArtinElement| self.mul(c, &self.delta_pow((-c.inf()).max(0)));
        for c in seeds.iter().chain(s.vertices.iter().map(|p| &p.conj)) {
            let c = lift(c);
            if works(&c) {
                return Ok(c);
            }
        }
        // Greedy: standardize vertices one at a time, outermost first.
        let levels = self.decompose_levels(s)?;
        let order: Vec<usize> = levels.levels.iter().flatten().copied().collect();
        let mut cur = self.one();
        for (k, &i) in order.iter().enumerate() {
            if self.standardizes(&cur, &s.vertices[i]).is_some() {
                continue;
            }
            let local = ParabolicSubgroup::new(self.mul(&self.inv(&cur), &s.vertices[i].conj), s.vertices[i].gens);
            let (m, _) = self.minimal_standardizer(&local)?;
            cur = self.mul(&cur, &m);
            if order[..=k].iter().any(|&j| self.standardizes(&cur, &s.vertices[j]).is_none()) {
                return Err(Error::SearchBudgetExceeded { budget: 0 });
            }
        }
        Ok(cur)
    }

    pub fn canonical_positive_standardizer(&self, s: &CparabSimplex) -> Result<StandardizedSimplex> {
        self.canonical_positive_standardizer_with_seeds(s, &[])
    }

    /// Level by level: merge a level's vertices into one reducible parabolic (in the frame
    /// of the standardizer built so far), take its minimal standardizer, and append it.
    pub fn canonical_positive_standardizer_with_seeds(
        &self,
        s: &CparabSimplex,
        seeds: &[ArtinElement],
    ) -> Result<StandardizedSimplex> {
        let levels = self.decompose_levels(s)?;
        let seed = self.common_standardizer(s, seeds)?;
        let ys: Vec<GenSet> = s.vertices.iter().map(|p| self.standardizes(&seed, p).unwrap()).collect();
        let mut g = self.one();
        let mut rest = seed;
        for level in &levels.levels {
            let u = level.iter().fold(GenSet::EMPTY, |acc, &i| acc.union(ys[i]));
            let merged = ParabolicSubgroup::new(rest.clone(), u);
            let (m, _) = self.minimal_standardizer(&merged)?;
            g = self.mul(&g, &m);
            rest = self.mul(&self.inv(&m), &rest);
        }
        let subsets = s
            .vertices
            .iter()
            .map(|p| self.standardizes(&g, p).ok_or(Error::NotAStandardizer))
            .collect::<Result<Vec<_>>>()?;
        let witness = self.is_maximal_standard_sets(&subsets).ok().flatten();
        Ok(StandardizedSimplex { g, subsets, levels, witness })
    }

    /// Positive r = Δ_{Y_k}^□⋯Δ_{Y_1}^□·Δ_Γ^□ (□ ∈ {0,1}) with {r·A_{X_i}·r⁻¹} = {A_{Y_i}}.
    pub fn standardization_change(&self, xs: &[GenSet], ys: &[GenSet]) -> Result<ArtinElement> {
        if xs.len() != ys.len() {
            return Err(Error::NotConjugate);
        }
        let mut target: Vec<GenSet> = ys.to_vec();
        target.sort();
        for e_top in 0..2 {
            let mut cur: Vec<GenSet> = if e_top == 1 {
                let perm = self.delta_permutation(self.all())?;
                xs.iter().map(|&x| permute_set(&perm, x)).collect()
            } else {
                xs.to_vec()
            };
            let mut factors: Vec<GenSet> = Vec::new();
            let tops = maximal_of(&target);
            if !self.match_regions(&mut cur, &target, &tops, &mut factors)? {
                continue;
            }
            // r = (last factor) ⋯ (first factor) · Δ_Γ^{e_top}
            let mut r = self.delta_pow(e_top);
            for &f in &factors {
                r = self.mul(&self.garside_delta(f), &r);
            }
            let mut image: Vec<GenSet> = Vec::new();
            for &x in xs {
                image.push(self.std_image(&r, x).ok_or(Error::NotConjugate)?);
            }
            image.sort();
            if image == target {
                return Ok(r);
            }
        }
        Err(Error::NotConjugate)
    }

    /// For each region (a vertex present in both families), pick Δ_region^{0 or 1} so the
    /// vertices directly below it agree, then recurse.
    fn match_regions(
        &self,
        cur: &mut [GenSet],
        target: &[GenSet],
        regions: &[GenSet],
        factors: &mut Vec<GenSet>,
    ) -> Result<bool> {
        let mut cur_sorted = cur.to_vec();
        cur_sorted.sort();
        for &r in regions {
            if !cur.contains(&r) {
                return Ok(false);
            }
            let want = children_of(target, r);
            let mut chosen = None;
            for e in 0..2 {
                let moved: Vec<GenSet> = if e == 1 {
                    let perm = self.delta_permutation(r)?;
                    children_of(cur, r).into_iter().map(|x| permute_set(&perm, x)).collect()
                } else {
                    children_of(cur, r)
                };
                let mut m = moved.clone();
                m.sort();
                if m == want {
                    chosen = Some(e);
                    break;
                }
            }
            let Some(e) = chosen else { return Ok(false) };
            if e == 1 {
                let perm = self.delta_permutation(r)?;
                for x in cur.iter_mut() {
                    if x.is_subset(r) && *x != r {
                        *x = permute_set(&perm, *x);
                    }
                }
                factors.push(r);
            }
            if !self.match_regions(cur, target, &want, factors)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn maximal_of(xs: &[GenSet]) -> Vec<GenSet> {
    let mut v: Vec<GenSet> = xs.iter().copied().filter(|&x| !xs.iter().any(|&y| y != x && x.is_subset(y))).collect();
    v.sort();
    v
}

/// Vertices directly below `r` (maximal among those properly inside it).
fn children_of(xs: &[GenSet], r: GenSet) -> Vec<GenSet> {
    let inside: Vec<GenSet> = xs.iter().copied().filter(|&x| x != r && x.is_subset(r)).collect();
    maximal_of(&inside)
}
