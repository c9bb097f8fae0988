use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::parabolic::classify::delta_twists;

/// Default node budget for the minimal-standardizer prefix search.
pub const MIN_STD_BUDGET: usize = 200_000;

/// The parabolic subgroup g·A_X·g⁻¹.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    pub conj: ArtinElement,
    pub gens: GenSet,
    canonical: OnceLock<Canonical>,
}

/// Minimal positive standardizer c and the subset Y with P = c·A_Y·c⁻¹.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub standardizer: ArtinElement,
    pub gens: GenSet,
}

impl ParabolicSubgroup {
    pub fn new(conj: ArtinElement, gens: GenSet) -> Self {
        ParabolicSubgroup { conj, gens, canonical: OnceLock::new() }
    }

    pub fn standard(group: &CoxeterGroup, gens: GenSet) -> Self {
        let p = Self::new(group.one(), gens);
        let _ = p.canonical.set(Canonical { standardizer: group.one(), gens });
        p
    }

    pub fn is_irreducible_in(&self, group: &CoxeterGroup) -> bool {
        group.graph.is_connected(self.gens)
    }

    pub fn is_proper_in(&self, group: &CoxeterGroup) -> bool {
        self.gens != group.all()
    }
}

/// JSON shape: `{"conj": "<element>", "gens": ["s1", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicJson {
    pub conj: String,
    pub gens: Vec<String>,
}

/// Image of a subset under a generator table.
pub fn permute_set(perm: &[usize], y: GenSet) -> GenSet {
    GenSet::from_indices(y.iter().map(|i| perm[i]))
}

impl CoxeterGroup {
    /// Δ_X: the positive lift of the longest element of W_X.
    pub fn garside_delta(&self, x: GenSet) -> ArtinElement {
        self.simple(&self.longest_element(x))
    }

    pub fn delta_x_pow(&self, x: GenSet, k: i64) -> ArtinElement {
        self.pow(&self.garside_delta(x), k)
    }

    pub fn irreducible_components(&self, x: GenSet) -> Vec<GenSet> {
        self.graph.components(x)
    }

    /// s ↦ Δ_X s Δ_X⁻¹ on a connected X, as a table over all generators
    /// (identity outside X).
    pub fn delta_permutation(&self, x: GenSet) -> Result<Vec<usize>> {
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.graph.is_connected(x) {
            return Err(Error::Disconnected);
        }
        let w = self.longest_element(x);
        Ok((0..self.rank())
            .map(|i| if x.contains(i) { self.conj_gen_by(&w, i).expect("Δ_X permutes X") } else { i })
            .collect())
    }

    /// Generator of the center of A_X: per component, Δ_C or Δ_C² by the type table.
    pub fn central_generator_z(&self, x: GenSet) -> Result<ArtinElement> {
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut z = self.one();
        for c in self.graph.components(x) {
            let ty = self.classify(c)?;
            let k = if delta_twists(ty) { 2 } else { 1 };
            z = self.mul(&z, &self.delta_x_pow(c, k));
        }
        Ok(z)
    }

    /// If h·A_X·h⁻¹ is standard, returns its generator set.
    pub fn std_image(&self, h: &ArtinElement, x: GenSet) -> Option<GenSet> {
        let hinv = self.inv(h);
        let mut y = GenSet::EMPTY;
        for i in x.iter() {
            let c = self.mul(&self.mul(h, &self.gen(i)), &hinv);
            y = y.union(self.parabolic_support(&c));
        }
        if y.len() != x.len() {
            return None;
        }
        for j in y.iter() {
            let c = self.mul(&self.mul(&hinv, &self.gen(j)), h);
            if !self.member_of_standard(&c, x) {
                return None;
            }
        }
        Some(y)
    }

    /// If `c⁻¹·P·c` is standard, its generator set.
    pub fn standardizes(&self, c: &ArtinElement, p: &ParabolicSubgroup) -> Option<GenSet> {
        self.std_image(&self.mul(&self.inv(c), &p.conj), p.gens)
    }

    pub fn is_standard(&self, p: &ParabolicSubgroup) -> Option<GenSet> {
        self.std_image(&p.conj, p.gens)
    }

    /// x·P·x⁻¹
    pub fn conj_parabolic(&self, p: &ParabolicSubgroup, x: &ArtinElement) -> ParabolicSubgroup {
        ParabolicSubgroup::new(self.mul(x, &p.conj), p.gens)
    }

    /// Equality decided directly: h⁻¹g must carry A_X onto A_{X'}.
    pub fn parabolic_eq(&self, p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> bool {
        p.gens.len() == q.gens.len() && self.std_image(&self.mul(&self.inv(&q.conj), &p.conj), p.gens) == Some(q.gens)
    }

    /// Q ⊆ P.
    pub fn parabolic_contains(&self, p: &ParabolicSubgroup, q: &ParabolicSubgroup) -> bool {
        let h = self.mul(&self.inv(&p.conj), &q.conj);
        let hinv = self.inv(&h);
        q.gens.iter().all(|i| {
            let c = self.mul(&self.mul(&h, &self.gen(i)), &hinv);
            self.member_of_standard(&c, p.gens)
        })
    }

    pub fn z_of(&self, p: &ParabolicSubgroup) -> Result<ArtinElement> {
        Ok(self.conjugate(&self.central_generator_z(p.gens)?, &p.conj))
    }

    /// Positive elements d normalizing-or-moving A_Y that are cheap to peel off the
    /// right of a standardizer: atoms of Y, component Garside elements, and
    /// elementary ribbon shapes Δ_W·Δ_{W−t}⁻¹ and Δ_{W−t}⁻¹·Δ_W.
    fn peel_candidates(&self, y: GenSet) -> Vec<ArtinElement> {
        let mut out: Vec<ArtinElement> = y.iter().map(|s| self.gen(s)).collect();
        for t in 0..self.rank() {
            let w = self.graph.component_of(y.with(t), t);
            let dw = self.garside_delta(w);
            if y.contains(t) {
                out.push(dw);
            } else {
                let dwt = self.garside_delta(w.without(t));
                out.push(self.mul(&dw, &self.inv(&dwt)));
                out.push(self.mul(&self.inv(&dwt), &dw));
            }
        }
        out
    }

    pub fn minimal_standardizer(&self, p: &ParabolicSubgroup) -> Result<(ArtinElement, GenSet)> {
        self.minimal_standardizer_with_budget(p, MIN_STD_BUDGET)
    }

    /// Seeds a positive standardizer g·Δ^k, peels verified right factors off it, then
    /// searches its prefixes by increasing atom length; the first standardizing prefix
    /// is the minimal standardizer.
    pub fn minimal_standardizer_with_budget(
        &self,
        p: &ParabolicSubgroup,
        budget: usize,
    ) -> Result<(ArtinElement, GenSet)> {
        let k = (-p.conj.inf()).max(0);
        let mut seed = self.mul(&p.conj, &self.delta_pow(k));
        let mut y = self.standardizes(&seed, p).expect("g·Δ^k standardizes g·A_X·g⁻¹");
        'peel: loop {
            for d in self.peel_candidates(y) {
                let cand = self.mul(&seed, &self.inv(&d));
                if !cand.is_positive() {
                    continue;
                }
                if let Some(y2) = self.standardizes(&cand, p) {
                    seed = cand;
                    y = y2;
                    continue 'peel;
                }
            }
            break;
        }
        let mut level: Vec<(ArtinElement, ArtinElement)> = vec![(self.one(), seed)];
        let mut seen: HashSet<ArtinElement> = HashSet::new();
        let mut visited = 0usize;
        while !level.is_empty() {
            level.sort();
            for (c, _) in &level {
                if let Some(y) = self.standardizes(c, p) {
                    return Ok((c.clone(), y));
                }
            }
            let mut next = Vec::new();
            for (c, rem) in &level {
                let first = if rem.inf() > 0 {
                    self.all()
                } else {
                    match rem.body().first() {
                        Some(x) => self.descents(x, crate::coxeter::Side::Left),
                        None => GenSet::EMPTY,
                    }
                };
                for s in first.iter() {
                    let child = self.mul(c, &self.gen(s));
                    if seen.insert(child.clone()) {
                        visited += 1;
                        if visited > budget {
                            return Err(Error::SearchBudgetExceeded { budget });
                        }
                        let rem2 = self.mul(&self.inv(&self.gen(s)), rem);
                        next.push((child, rem2));
                    }
                }
            }
            level = next;
        }
        unreachable!("the seed itself standardizes")
    }

    /// Cached (minimal standardizer, subset).
    pub fn canonical<'a>(&self, p: &'a ParabolicSubgroup) -> Result<&'a Canonical> {
        if let Some(c) = p.canonical.get() {
            return Ok(c);
        }
        let (standardizer, gens) = self.minimal_standardizer(p)?;
        Ok(p.canonical.get_or_init(|| Canonical { standardizer, gens }))
    }

    /// `<minimal standardizer serialization>|<sorted gens>`
    pub fn parabolic_key(&self, p: &ParabolicSubgroup) -> Result<String> {
        let c = self.canonical(p)?;
        Ok(format!("{}|{}", self.format_element(&c.standardizer), c.gens.key()))
    }

    /// The same subgroup written with its canonical representative.
    pub fn canonical_parabolic(&self, p: &ParabolicSubgroup) -> Result<ParabolicSubgroup> {
        let c = self.canonical(p)?.clone();
        let q = ParabolicSubgroup::new(c.standardizer.clone(), c.gens);
        let _ = q.canonical.set(c);
        Ok(q)
    }

    pub fn parabolic_to_json(&self, p: &ParabolicSubgroup) -> ParabolicJson {
        ParabolicJson { conj: self.format_element(&p.conj), gens: p.gens.names() }
    }

    pub fn parabolic_from_json(&self, j: &ParabolicJson) -> Result<ParabolicSubgroup> {
        let conj = self.parse_element(&j.conj)?;
        let gens = GenSet::parse(&j.gens.join(","), self.rank())?;
        Ok(ParabolicSubgroup::new(conj, gens))
    }
}
