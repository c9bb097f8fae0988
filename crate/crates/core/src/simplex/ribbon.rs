use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::parabolic::permute_set;

/// d_{X,t} together with its source X and target Y = d·X·d⁻¹.
#[derive(Clone, Debug)]
pub struct ElementaryRibbon {
    pub element: ArtinElement,
    pub source: GenSet,
    pub target: GenSet,
    pub t: usize,
}

/// Δ_{X_1}^a·Δ_{X_2}^b·Δ_{X_3}^c·Δ_Γ^d, with X_1, X_2, X_3 the components of X ordered by
/// least generator (missing components get exponent 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDeltaForm {
    pub components: Vec<GenSet>,
    pub exponents: [i64; 3],
    pub gamma: i64,
}

impl CoxeterGroup {
    /// d_{X,t} = Δ_{X(t)}·Δ_{X(t)−t}⁻¹ for t ∉ X, and Δ_{X(t)} for t ∈ X, where X(t) is the
    /// component of X ∪ {t} containing t.
    pub fn elementary_ribbon(&self, x: GenSet, t: usize) -> ElementaryRibbon {
        let w = self.graph.component_of(x.with(t), t);
        let element = if x.contains(t) {
            self.garside_delta(w)
        } else {
            self.mul(&self.garside_delta(w), &self.inv(&self.garside_delta(w.without(t))))
        };
        let target = self.std_image(&element, x).expect("elementary ribbons carry X to a standard subset");
        ElementaryRibbon { element, source: x, target, t }
    }

    /// Composes elementary ribbons starting from X (each applied to the previous target)
    /// and returns the product d_n⋯d_1 with the final target.
    pub fn compose_ribbons(&self, x: GenSet, ts: &[usize]) -> (ArtinElement, GenSet) {
        let mut cur = x;
        let mut g = self.one();
        for &t in ts {
            let d = self.elementary_ribbon(cur, t);
            g = self.mul(&d.element, &g);
            cur = d.target;
        }
        (g, cur)
    }

    /// Rewrites a composite of elementary ribbons out of a co-rank-one X that returns to X
    /// as a product of component Garside elements and a power of Δ_Γ; the result is checked
    /// against the composite by normal-form equality.
    pub fn ribbon_delta_form(&self, x: GenSet, ts: &[usize]) -> Result<RibbonDeltaForm> {
        if x.len() + 1 != self.rank() {
            return Err(Error::NotCorankOne);
        }
        let comps = self.graph.components(x);
        let delta = self.delta_permutation(self.all())?;
        // r = Δ_Γ^d · ∏ Δ_C^{a_C}, with C ranging over components of the original X;
        // the current subset is δ^d(X).
        let mut a = vec![0i64; comps.len()];
        let mut d = 0i64;
        let mut cur = x;
        for &t in ts {
            if cur.contains(t) {
                let c_cur = self.graph.component_of(cur, t);
                let c = if d % 2 != 0 { permute_set(&delta, c_cur) } else { c_cur };
                let k = comps.iter().position(|&cc| cc == c).expect("component of X");
                a[k] += 1;
            } else {
                a.iter_mut().for_each(|e| *e -= 1);
                d += 1;
                cur = permute_set(&delta, cur);
            }
        }
        if cur != x {
            return Err(Error::NotAnXRibbonX);
        }
        // Δ_Γ^d·Δ_C^{a} = Δ_{δ^d(C)}^{a}·Δ_Γ^d
        let mut exponents = [0i64; 3];
        for (k, &c) in comps.iter().enumerate() {
            let moved = if d % 2 != 0 { permute_set(&delta, c) } else { c };
            let j = comps.iter().position(|&cc| cc == moved).ok_or(Error::NotAnXRibbonX)?;
            exponents[j] += a[k];
        }
        let form = RibbonDeltaForm { components: comps, exponents, gamma: d };
        let (g, _) = self.compose_ribbons(x, ts);
        if self.ribbon_form_element(&form) != g {
            return Err(Error::NotAnXRibbonX);
        }
        Ok(form)
    }

    pub fn ribbon_form_element(&self, f: &RibbonDeltaForm) -> ArtinElement {
        let mut g = self.one();
        for (k, &c) in f.components.iter().enumerate() {
            g = self.mul(&g, &self.delta_x_pow(c, f.exponents[k]));
        }
        self.mul(&g, &self.delta_pow(f.gamma))
    }
}
