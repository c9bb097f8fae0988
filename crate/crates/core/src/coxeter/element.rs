use std::fmt;
use std::ops::Deref;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use crate::coxeter::graph::DefiningGraph;
use crate::coxeter::roots::RootSystem;
use crate::coxeter::types::ArtinType;
use crate::error::{Error, Result};
use crate::genset::GenSet;

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

/// Element of the finite Coxeter group, stored as its action on the roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    pub(crate) perm: Box<[u16]>,
    pub(crate) inv: Box<[u16]>,
    pub(crate) len: u32,
    pub(crate) ctx: u32,
}

impl CoxeterElement {
    pub fn length(&self) -> usize {
        self.len as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Image of root index `r`.
    pub fn apply(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    pub fn context(&self) -> u32 {
        self.ctx
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterElement(len={})", self.len)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Tables shared by every element of one group: the defining graph, the root system,
/// and a handful of precomputed elements.
pub struct CoxeterGroup {
    pub graph: DefiningGraph,
    pub roots: RootSystem,
    id: u32,
    gens: Vec<CoxeterElement>,
    identity: CoxeterElement,
    w0: CoxeterElement,
    positive_roots: Vec<usize>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGroup({})", self.graph.ty)
    }
}

/// Cheap, clonable handle on a group's shared tables. All arithmetic hangs off this.
#[derive(Clone, Debug)]
pub struct ArtinGroup(Arc<CoxeterGroup>);

impl Deref for ArtinGroup {
    type Target = CoxeterGroup;
    fn deref(&self) -> &CoxeterGroup {
        &self.0
    }
}

impl PartialEq for ArtinGroup {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for ArtinGroup {}

impl ArtinGroup {
    pub fn new(ty: ArtinType) -> ArtinGroup {
        let graph = DefiningGraph::build(ty);
        let roots = RootSystem::build(&graph);
        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        let nroots = roots.len();
        let positive_roots: Vec<usize> = (0..nroots).filter(|&r| roots.positive[r]).collect();
        let ident: Box<[u16]> = (0..nroots as u16).collect();
        let identity = CoxeterElement { perm: ident.clone(), inv: ident, len: 0, ctx: id };
        let gens = roots
            .reflections
            .iter()
            .map(|t| {
                let perm: Box<[u16]> = t.clone().into_boxed_slice();
                CoxeterElement { inv: perm.clone(), perm, len: 1, ctx: id }
            })
            .collect();
        let mut g = CoxeterGroup { graph, roots, id, gens, w0: identity.clone(), identity, positive_roots };
        g.w0 = g.longest_element(g.graph.all());
        ArtinGroup(Arc::new(g))
    }

    /// Parses a type string such as `"B3"` or `"I2(5)"` and builds the group.
    pub fn from_type_str(s: &str) -> Result<ArtinGroup> {
        Ok(ArtinGroup::new(s.parse()?))
    }

    pub fn id(&self) -> u32 {
        self.id
    }
}

impl CoxeterGroup {
    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn ty(&self) -> ArtinType {
        self.graph.ty
    }

    pub fn all(&self) -> GenSet {
        self.graph.all()
    }

    pub fn context_id(&self) -> u32 {
        self.id
    }

    pub fn identity(&self) -> &CoxeterElement {
        &self.identity
    }

    pub fn generator(&self, i: usize) -> &CoxeterElement {
        &self.gens[i]
    }

    pub fn w0(&self) -> &CoxeterElement {
        &self.w0
    }

    fn length_of(&self, perm: &[u16]) -> u32 {
        self.positive_roots.iter().filter(|&&r| !self.roots.positive[perm[r] as usize]).count() as u32
    }

    fn element_from_perm(&self, perm: Box<[u16]>) -> CoxeterElement {
        let mut inv = vec![0u16; perm.len()].into_boxed_slice();
        for (r, &p) in perm.iter().enumerate() {
            inv[p as usize] = r as u16;
        }
        let len = self.length_of(&perm);
        CoxeterElement { perm, inv, len, ctx: self.id }
    }

    pub fn try_cox_mul(&self, a: &CoxeterElement, b: &CoxeterElement) -> Result<CoxeterElement> {
        if a.ctx != self.id || b.ctx != self.id {
            return Err(Error::MixedContext);
        }
        Ok(self.cox_mul(a, b))
    }

    /// Product `a·b` (apply `b` first, then `a`).
    pub fn cox_mul(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        debug_assert!(a.ctx == self.id && b.ctx == self.id, "mixed context");
        if a.len == 0 {
            return b.clone();
        }
        if b.len == 0 {
            return a.clone();
        }
        let perm: Box<[u16]> = b.perm.iter().map(|&r| a.perm[r as usize]).collect();
        self.element_from_perm(perm)
    }

    pub fn cox_inv(&self, a: &CoxeterElement) -> CoxeterElement {
        CoxeterElement { perm: a.inv.clone(), inv: a.perm.clone(), len: a.len, ctx: a.ctx }
    }

    /// `s_i · w`
    pub fn lmul_gen(&self, i: usize, w: &CoxeterElement) -> CoxeterElement {
        let s = &self.roots.reflections[i];
        let perm: Box<[u16]> = w.perm.iter().map(|&r| s[r as usize]).collect();
        self.element_from_perm(perm)
    }

    /// `w · s_i`
    pub fn rmul_gen(&self, w: &CoxeterElement, i: usize) -> CoxeterElement {
        let s = &self.roots.reflections[i];
        let perm: Box<[u16]> = s.iter().map(|&r| w.perm[r as usize]).collect();
        self.element_from_perm(perm)
    }

    pub fn is_left_descent(&self, w: &CoxeterElement, i: usize) -> bool {
        !self.roots.positive[w.inv[self.roots.simple[i]] as usize]
    }

    pub fn is_right_descent(&self, w: &CoxeterElement, i: usize) -> bool {
        !self.roots.positive[w.perm[self.roots.simple[i]] as usize]
    }

    pub fn descents(&self, w: &CoxeterElement, side: Side) -> GenSet {
        GenSet::from_indices((0..self.rank()).filter(|&i| match side {
            Side::Left => self.is_left_descent(w, i),
            Side::Right => self.is_right_descent(w, i),
        }))
    }

    /// Longest element of the standard parabolic subgroup W_X.
    pub fn longest_element(&self, x: GenSet) -> CoxeterElement {
        let mut w = self.identity.clone();
        loop {
            match x.iter().find(|&i| !self.is_right_descent(&w, i)) {
                Some(i) => w = self.rmul_gen(&w, i),
                None => return w,
            }
        }
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &CoxeterElement) -> Vec<usize> {
        let mut out = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while cur.len > 0 {
            let i = (0..self.rank()).find(|&i| self.is_left_descent(&cur, i)).unwrap();
            out.push(i);
            cur = self.lmul_gen(i, &cur);
        }
        out
    }

    pub fn cox_support(&self, w: &CoxeterElement) -> GenSet {
        GenSet::from_indices(self.reduced_word(w))
    }

    pub fn from_word(&self, word: &[usize]) -> CoxeterElement {
        word.iter().fold(self.identity.clone(), |w, &i| self.rmul_gen(&w, i))
    }

    /// Conjugation by w0: `w0 · w · w0`.
    pub fn tau(&self, w: &CoxeterElement) -> CoxeterElement {
        self.cox_mul(&self.cox_mul(&self.w0, w), &self.w0)
    }

    /// `j` with `w s_i w⁻¹ = s_j`, if `w` sends α_i to ±α_j.
    pub fn conj_gen_by(&self, w: &CoxeterElement, i: usize) -> Option<usize> {
        let r = w.perm[self.roots.simple[i]] as usize;
        (0..self.rank()).find(|&j| {
            let s = self.roots.simple[j];
            r == s || r == self.roots.reflections[j][s] as usize
        })
    }

    /// Enumerates all of W (intended for small groups and tests).
    pub fn enumerate(&self) -> Vec<CoxeterElement> {
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![self.identity.clone()];
        seen.insert(self.identity.perm.clone());
        let mut head = 0;
        while head < out.len() {
            for i in 0..self.rank() {
                let w = self.rmul_gen(&out[head], i);
                if seen.insert(w.perm.clone()) {
                    out.push(w);
                }
            }
            head += 1;
        }
        out
    }
}
