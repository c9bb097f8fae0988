use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::parabolic::ParabolicSubgroup;
use crate::simplex::standardize::StandardizedSimplex;

/// ∏ Δ_{X_i}^{n_i} · Δ_Γ^{n_Γ}, with factors for nested subsets to the left of their containers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscendingProduct {
    /// Factors in product order: deepest level first, sorted by subset within a level.
    pub factors: Vec<(GenSet, i64)>,
    pub gamma: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AscendingProductJson {
    pub exponents: BTreeMap<String, i64>,
    pub gamma: i64,
}

impl AscendingProduct {
    pub fn exponent_of(&self, x: GenSet) -> i64 {
        self.factors.iter().find(|(y, _)| *y == x).map_or(0, |&(_, n)| n)
    }

    /// Builds a product over a standardized simplex's subsets with the given exponents
    /// (indexed like the simplex's vertices).
    pub fn over(std: &StandardizedSimplex, exps: &[i64], gamma: i64) -> AscendingProduct {
        let mut order: Vec<usize> = (0..std.subsets.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(std.levels.level_of[i]), std.subsets[i]));
        AscendingProduct { factors: order.into_iter().map(|i| (std.subsets[i], exps[i])).collect(), gamma }
    }

    pub fn to_json(&self) -> AscendingProductJson {
        AscendingProductJson { exponents: self.factors.iter().map(|(x, n)| (x.key(), *n)).collect(), gamma: self.gamma }
    }
}

impl CoxeterGroup {
    pub fn ascending_element(&self, p: &AscendingProduct) -> ArtinElement {
        let mut g = self.one();
        for &(x, n) in &p.factors {
            g = self.mul(&g, &self.delta_x_pow(x, n));
        }
        self.mul(&g, &self.delta_pow(p.gamma))
    }

    /// The vertices ĝ·A_{X_i}·ĝ⁻¹ of a standardized simplex.
    pub fn standardized_vertices(&self, std: &StandardizedSimplex) -> Vec<ParabolicSubgroup> {
        std.subsets.iter().map(|&x| ParabolicSubgroup::new(std.g.clone(), x)).collect()
    }

    /// Whether h⁻¹·P_i·h is standard for every vertex.
    pub fn standardizes_simplex(&self, h: &ArtinElement, std: &StandardizedSimplex) -> bool {
        let rel = self.mul(&self.inv(h), &std.g);
        std.subsets.iter().all(|&x| self.std_image(&rel, x).is_some())
    }

    /// Exponents of the ascending product p with ĝ·p = h.
    pub fn extract_ascending_product(&self, h: &ArtinElement, std: &StandardizedSimplex) -> Result<AscendingProduct> {
        let w = std.witness.as_ref().ok_or(Error::NotMaximal)?;
        if !self.standardizes_simplex(h, std) {
            return Err(Error::NotAStandardizer);
        }
        let p = self.mul(&self.inv(&std.g), h);
        let top = self.all().without(w.t);
        let gamma = self.peel_exponent(&p, &self.delta_pow(1), top)?;
        let q = self.mul(&p, &self.delta_pow(-gamma));
        let mut exps = vec![0i64; std.subsets.len()];
        let roots: Vec<usize> = std.levels.levels.first().cloned().unwrap_or_default();
        self.peel_regions(&q, &roots, std, &mut exps)?;
        Ok(AscendingProduct::over(std, &exps, gamma))
    }

    /// Unique n with q·d⁻ⁿ ∈ A_target, scanning |n| ≤ |inf q| + canonical length + 1.
    fn peel_exponent(&self, q: &ArtinElement, d: &ArtinElement, target: GenSet) -> Result<i64> {
        let bound = q.inf().abs() + q.canonical_length() as i64 + 1;
        let dinv = self.inv(d);
        let mut up = q.clone();
        let mut down = q.clone();
        for n in 0..=bound {
            if self.member_of_standard(&up, target) {
                return Ok(n);
            }
            if n > 0 && self.member_of_standard(&down, target) {
                return Ok(-n);
            }
            up = self.mul(&up, &dinv);
            down = self.mul(&down, d);
        }
        Err(Error::ExponentBoundExceeded { bound })
    }

    fn peel_regions(
        &self,
        q: &ArtinElement,
        regions: &[usize],
        std: &StandardizedSimplex,
        exps: &mut [i64],
    ) -> Result<()> {
        let (a, b) = self.left_fraction(q);
        let la = self.positive_letters(&a)?;
        let lb = self.positive_letters(&b)?;
        for &i in regions {
            let x = std.subsets[i];
            let pa: Vec<usize> = la.iter().copied().filter(|&s| x.contains(s)).collect();
            let pb: Vec<usize> = lb.iter().copied().filter(|&s| x.contains(s)).collect();
            let qx = self.mul(&self.inv(&self.positive_word(&pa)), &self.positive_word(&pb));
            let w = std.witness.as_ref().ok_or(Error::NotMaximal)?;
            let n = self.peel_exponent(&qx, &self.garside_delta(x), x.without(w.t_i[i]))?;
            exps[i] = n;
            let r = self.mul(&qx, &self.delta_x_pow(x, -n));
            let kids = std.levels.children(i);
            self.peel_regions(&r, &kids, std, exps)?;
        }
        Ok(())
    }

    /// If conjugation by g permutes the vertices, the induced permutation (`perm[i] = j`
    /// when g·P_i·g⁻¹ = P_j) and the ascending product ĝ⁻¹·g·ĝ.
    pub fn stabilizes_simplex(
        &self,
        g: &ArtinElement,
        std: &StandardizedSimplex,
    ) -> Result<(Vec<usize>, AscendingProduct)> {
        let verts = self.standardized_vertices(std);
        let mut perm = Vec::with_capacity(verts.len());
        for p in &verts {
            let img = self.conj_parabolic(p, g);
            let j = verts.iter().position(|q| self.parabolic_eq(&img, q)).ok_or(Error::NotAStabilizer)?;
            perm.push(j);
        }
        let prod = self.extract_ascending_product(&self.mul(g, &std.g), std)?;
        Ok((perm, prod))
    }
}
