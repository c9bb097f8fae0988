use crate::coxeter::{CoxeterElement, CoxeterGroup};
use crate::error::{Error, Result};
use crate::garside::word::{GeneratorWord, Letter};
use crate::genset::GenSet;

/// Group element in left-greedy normal form Δ^inf · x₁⋯x_ℓ.
///
/// Every `x_i` is a proper nontrivial simple and consecutive pairs are left-weighted,
/// so structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinElement {
    pub(crate) inf: i64,
    pub(crate) body: Vec<CoxeterElement>,
    pub(crate) ctx: u32,
}

impl std::fmt::Debug for ArtinElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lens: Vec<usize> = self.body.iter().map(|x| x.length()).collect();
        write!(f, "ArtinElement(Δ^{} {:?})", self.inf, lens)
    }
}

impl ArtinElement {
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn body(&self) -> &[CoxeterElement] {
        &self.body
    }

    /// Number of non-Δ factors.
    pub fn canonical_length(&self) -> usize {
        self.body.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.body.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.body.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    pub fn context(&self) -> u32 {
        self.ctx
    }
}

impl CoxeterGroup {
    pub fn one(&self) -> ArtinElement {
        ArtinElement { inf: 0, body: Vec::new(), ctx: self.context_id() }
    }

    pub fn delta_pow(&self, k: i64) -> ArtinElement {
        ArtinElement { inf: k, body: Vec::new(), ctx: self.context_id() }
    }

    /// The positive generator `s_{i+1}`.
    pub fn gen(&self, i: usize) -> ArtinElement {
        self.simple(self.generator(i))
    }

    /// Lifts a simple element (divisor of Δ) to the Artin group.
    pub fn simple(&self, w: &CoxeterElement) -> ArtinElement {
        let mut e = self.one();
        self.rmul_simple(&mut e, w);
        e
    }

    fn fix_pair(&self, l: &CoxeterElement, r: &CoxeterElement) -> Option<(CoxeterElement, CoxeterElement)> {
        let alpha = self.gcd_simples(&self.complement(l), r);
        if alpha.is_identity() {
            return None;
        }
        Some((self.cox_mul(l, &alpha), self.cox_mul(&self.cox_inv(&alpha), r)))
    }

    pub fn is_left_weighted(&self, l: &CoxeterElement, r: &CoxeterElement) -> bool {
        let rd = self.descents(l, crate::coxeter::Side::Right);
        self.descents(r, crate::coxeter::Side::Left).is_subset(rd)
    }

    /// Absorbs leading Δ factors into the infimum and drops identity factors.
    fn tidy(&self, a: &mut ArtinElement) {
        let full = self.w0().length();
        let lead = a.body.iter().take_while(|x| x.length() == full).count();
        if lead > 0 {
            a.inf += lead as i64;
            a.body.drain(..lead);
        }
        a.body.retain(|x| !x.is_identity());
    }

    fn is_normal(&self, a: &ArtinElement) -> bool {
        let full = self.w0().length();
        a.body.iter().all(|x| !x.is_identity() && x.length() != full)
            && a.body.windows(2).all(|p| self.is_left_weighted(&p[0], &p[1]))
    }

    /// Full bubble normalization; only reached if the single-pass update left a defect.
    fn renormalize(&self, a: &mut ArtinElement) {
        loop {
            let mut changed = false;
            for i in 0..a.body.len().saturating_sub(1) {
                if let Some((l, r)) = self.fix_pair(&a.body[i], &a.body[i + 1]) {
                    a.body[i] = l;
                    a.body[i + 1] = r;
                    changed = true;
                }
            }
            self.tidy(a);
            if !changed {
                break;
            }
        }
    }

    /// In place: `a ← a·y` for a simple `y`.
    pub fn rmul_simple(&self, a: &mut ArtinElement, y: &CoxeterElement) {
        debug_assert_eq!(a.ctx, y.context());
        if y.is_identity() {
            return;
        }
        a.body.push(y.clone());
        let mut i = a.body.len() - 1;
        while i > 0 {
            match self.fix_pair(&a.body[i - 1], &a.body[i]) {
                Some((l, r)) => {
                    a.body[i - 1] = l;
                    a.body[i] = r;
                    i -= 1;
                }
                None => break,
            }
        }
        self.tidy(a);
        if !self.is_normal(a) {
            self.renormalize(a);
        }
    }

    /// In place: `a ← a·Δ^k`.
    pub fn rmul_delta_pow(&self, a: &mut ArtinElement, k: i64) {
        a.inf += k;
        if k % 2 != 0 {
            for x in a.body.iter_mut() {
                *x = self.tau(x);
            }
        }
    }

    /// In place: `a ← a·y⁻¹` for a simple `y`, using y⁻¹ = ∂y·Δ⁻¹.
    pub fn rmul_inv_simple(&self, a: &mut ArtinElement, y: &CoxeterElement) {
        if y.is_identity() {
            return;
        }
        let c = self.complement(y);
        self.rmul_simple(a, &c);
        self.rmul_delta_pow(a, -1);
    }

    pub fn rmul_letter(&self, a: &mut ArtinElement, l: Letter) {
        let s = self.generator(l.gen).clone();
        if l.inverse {
            self.rmul_inv_simple(a, &s);
        } else {
            self.rmul_simple(a, &s);
        }
    }

    pub fn normalize(&self, w: &GeneratorWord) -> ArtinElement {
        let mut a = self.one();
        for &l in &w.0 {
            self.rmul_letter(&mut a, l);
        }
        a
    }

    /// Normal form of a positive word given as generator indices.
    pub fn positive_word(&self, gens: &[usize]) -> ArtinElement {
        self.normalize(&GeneratorWord::positive(gens))
    }

    pub fn try_mul(&self, a: &ArtinElement, b: &ArtinElement) -> Result<ArtinElement> {
        if a.ctx != self.context_id() || b.ctx != self.context_id() {
            return Err(Error::MixedContext);
        }
        Ok(self.mul(a, b))
    }

    pub fn mul(&self, a: &ArtinElement, b: &ArtinElement) -> ArtinElement {
        debug_assert!(a.ctx == self.context_id() && b.ctx == self.context_id(), "mixed context");
        let mut r = a.clone();
        self.rmul_delta_pow(&mut r, b.inf);
        for x in &b.body {
            self.rmul_simple(&mut r, x);
        }
        r
    }

    /// Product of a sequence of elements.
    pub fn product<'a, I: IntoIterator<Item = &'a ArtinElement>>(&self, it: I) -> ArtinElement {
        it.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn inv(&self, a: &ArtinElement) -> ArtinElement {
        let mut r = self.one();
        for x in a.body.iter().rev() {
            self.rmul_inv_simple(&mut r, x);
        }
        self.rmul_delta_pow(&mut r, -a.inf);
        r
    }

    pub fn pow(&self, a: &ArtinElement, k: i64) -> ArtinElement {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        (0..k.unsigned_abs()).fold(self.one(), |acc, _| self.mul(&acc, &base))
    }

    /// `h·g·h⁻¹`
    pub fn conjugate(&self, g: &ArtinElement, h: &ArtinElement) -> ArtinElement {
        self.mul(&self.mul(h, g), &self.inv(h))
    }

    pub fn try_conjugate(&self, g: &ArtinElement, h: &ArtinElement) -> Result<ArtinElement> {
        if g.ctx != self.context_id() || h.ctx != self.context_id() {
            return Err(Error::MixedContext);
        }
        Ok(self.conjugate(g, h))
    }

    pub fn commutes(&self, a: &ArtinElement, b: &ArtinElement) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// λ: common length of every positive word for `g`.
    pub fn atom_length(&self, g: &ArtinElement) -> Result<usize> {
        if !g.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(g.inf as usize * self.w0().length() + g.body.iter().map(|x| x.length()).sum::<usize>())
    }

    /// Generators occurring in any positive word for `g`.
    pub fn support(&self, g: &ArtinElement) -> Result<GenSet> {
        if !g.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(self.body_support(g, g.inf > 0))
    }

    fn body_support(&self, g: &ArtinElement, with_delta: bool) -> GenSet {
        let base = if with_delta { self.all() } else { GenSet::EMPTY };
        g.body.iter().fold(base, |s, x| s.union(self.cox_support(x)))
    }

    /// `a ≼ b`: a⁻¹b is positive.
    pub fn is_prefix(&self, a: &ArtinElement, b: &ArtinElement) -> bool {
        self.mul(&self.inv(a), b).is_positive()
    }

    /// Left-reduced fraction g = a⁻¹·b with a, b positive and no common nontrivial prefix.
    pub fn left_fraction(&self, g: &ArtinElement) -> (ArtinElement, ArtinElement) {
        if g.inf >= 0 {
            return (self.one(), g.clone());
        }
        let m = (-g.inf) as usize;
        let k = m.min(g.body.len());
        let head = ArtinElement { inf: g.inf, body: g.body[..k].to_vec(), ctx: g.ctx };
        let tail = ArtinElement { inf: 0, body: g.body[k..].to_vec(), ctx: g.ctx };
        (self.inv(&head), tail)
    }

    /// Union of supports of the two halves of the left-reduced fraction. This is the
    /// smallest X with g ∈ A_X.
    pub fn parabolic_support(&self, g: &ArtinElement) -> GenSet {
        let (a, b) = self.left_fraction(g);
        self.body_support(&a, a.inf > 0).union(self.body_support(&b, b.inf > 0))
    }

    /// g ∈ A_X, decided from the reduced fraction.
    pub fn member_of_standard(&self, g: &ArtinElement, x: GenSet) -> bool {
        self.parabolic_support(g).is_subset(x)
    }

    /// g ∈ A_X, decided by scanning k for Δ_X^k·g positive with support in X.
    pub fn member_of_standard_scan(&self, g: &ArtinElement, x: GenSet) -> bool {
        let dx = self.simple(&self.longest_element(x));
        let pos_len: usize = g.body.iter().map(|y| y.length()).sum();
        let bound = pos_len + g.inf.unsigned_abs() as usize * self.w0().length();
        let mut cur = g.clone();
        for _ in 0..=bound {
            if cur.is_positive() && self.body_support(&cur, cur.inf > 0).is_subset(x) {
                return true;
            }
            cur = self.mul(&dx, &cur);
        }
        false
    }

    /// Positive word for a positive element (canonical reduced words of its factors).
    pub fn positive_letters(&self, g: &ArtinElement) -> Result<Vec<usize>> {
        if !g.is_positive() {
            return Err(Error::NotPositive);
        }
        let dw = self.reduced_word(self.w0());
        let mut out = Vec::new();
        for _ in 0..g.inf {
            out.extend_from_slice(&dw);
        }
        for x in &g.body {
            out.extend(self.reduced_word(x));
        }
        Ok(out)
    }

    /// A signed word representing `g`.
    pub fn to_word(&self, g: &ArtinElement) -> GeneratorWord {
        let dw = self.reduced_word(self.w0());
        let mut out = Vec::new();
        for _ in 0..g.inf.unsigned_abs() {
            if g.inf > 0 {
                out.extend(dw.iter().map(|&i| Letter::pos(i)));
            } else {
                out.extend(dw.iter().rev().map(|&i| Letter::neg(i)));
            }
        }
        for x in &g.body {
            out.extend(self.reduced_word(x).into_iter().map(Letter::pos));
        }
        GeneratorWord(out)
    }

    /// `DELTA^<p> |` followed by the body factors' reduced words separated by `.`.
    pub fn format_element(&self, g: &ArtinElement) -> String {
        let mut s = format!("DELTA^{} |", g.inf);
        if !g.body.is_empty() {
            let factors: Vec<String> =
                g.body.iter().map(|x| GeneratorWord::positive(&self.reduced_word(x)).to_string()).collect();
            s.push(' ');
            s.push_str(&factors.join("."));
        }
        s
    }

    /// Parses either the normal-form serialization or a generator word.
    pub fn parse_element(&self, text: &str) -> Result<ArtinElement> {
        let trimmed = text.trim();
        let Some(rest) = trimmed.strip_prefix("DELTA^") else {
            return Ok(self.normalize(&GeneratorWord::parse(text, self.rank())?));
        };
        let base = text.len() - text.trim_start().len() + "DELTA^".len();
        let bar = rest.find('|').ok_or(Error::Parse { offset: base, message: "expected '|'".into() })?;
        let p: i64 = rest[..bar]
            .trim()
            .parse()
            .map_err(|_| Error::Parse { offset: base, message: "invalid Δ exponent".into() })?;
        let mut g = self.delta_pow(p);
        let mut offset = base + bar + 1;
        for factor in rest[bar + 1..].split('.') {
            let w = GeneratorWord::parse(factor, self.rank()).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse { offset: offset + o, message },
                e => e,
            })?;
            let here = offset;
            offset += factor.len() + 1;
            if w.is_empty() {
                if rest[bar + 1..].trim().is_empty() {
                    continue;
                }
                return Err(Error::Parse { offset: here, message: "empty factor".into() });
            }
            if w.0.iter().any(|l| l.inverse) {
                return Err(Error::Parse { offset: here, message: "factor must be positive".into() });
            }
            let x = self.from_word(&w.0.iter().map(|l| l.gen).collect::<Vec<_>>());
            if x.length() != w.len() {
                return Err(Error::Parse { offset: here, message: "factor is not a simple element".into() });
            }
            self.rmul_simple(&mut g, &x);
        }
        Ok(g)
    }
}
