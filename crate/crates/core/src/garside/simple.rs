//! Lattice operations on simple elements (divisors of Δ), viewed as Coxeter elements.

use crate::coxeter::{CoxeterElement, CoxeterGroup};

impl CoxeterGroup {
    /// Left gcd: the meet of `a` and `b` in the prefix order.
    pub fn gcd_simples(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        let mut g = self.identity().clone();
        let (mut u, mut v) = (a.clone(), b.clone());
        while let Some(i) = (0..self.rank()).find(|&i| self.is_left_descent(&u, i) && self.is_left_descent(&v, i)) {
            g = self.rmul_gen(&g, i);
            u = self.lmul_gen(i, &u);
            v = self.lmul_gen(i, &v);
        }
        g
    }

    /// Right gcd: the largest common suffix.
    pub fn right_gcd_simples(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        let mut g = self.identity().clone();
        let (mut u, mut v) = (a.clone(), b.clone());
        while let Some(i) = (0..self.rank()).find(|&i| self.is_right_descent(&u, i) && self.is_right_descent(&v, i)) {
            g = self.lmul_gen(i, &g);
            u = self.rmul_gen(&u, i);
            v = self.rmul_gen(&v, i);
        }
        g
    }

    /// Right complement ∂x = x⁻¹Δ, so that x·∂x = Δ.
    pub fn complement(&self, x: &CoxeterElement) -> CoxeterElement {
        self.cox_mul(&self.cox_inv(x), self.w0())
    }

    /// Inverse of [`Self::complement`]: y ↦ Δy⁻¹.
    pub fn complement_inv(&self, y: &CoxeterElement) -> CoxeterElement {
        self.cox_mul(self.w0(), &self.cox_inv(y))
    }

    /// Left lcm (join in the prefix order), via ∂(lcm) = right-gcd(∂a, ∂b).
    pub fn lcm_simples(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        let d = self.right_gcd_simples(&self.complement(a), &self.complement(b));
        self.complement_inv(&d)
    }

    /// Weak-order prefix test on simples: `a ≼ b` iff ℓ(a⁻¹b) = ℓ(b) − ℓ(a).
    pub fn is_simple_prefix(&self, a: &CoxeterElement, b: &CoxeterElement) -> bool {
        a.length() <= b.length() && self.cox_mul(&self.cox_inv(a), b).length() == b.length() - a.length()
    }
}
