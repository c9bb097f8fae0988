//! Independent oracles used by the integration tests. None of these call into the
//! normal-form engine.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use artin_markings::{ArtinGroup, GenSet, GeneratorWord, Letter};

/// Signed letters: `+(i+1)` for s_i, `-(i+1)` for its inverse.
pub type Signed = Vec<i32>;

pub fn to_signed(w: &GeneratorWord) -> Signed {
    w.0.iter().map(|l| if l.inverse { -(l.gen as i32 + 1) } else { l.gen as i32 + 1 }).collect()
}

pub fn from_signed(w: &[i32]) -> GeneratorWord {
    GeneratorWord(
        w.iter().map(|&x| if x < 0 { Letter::neg((-x - 1) as usize) } else { Letter::pos((x - 1) as usize) }).collect(),
    )
}

pub fn inverse_signed(w: &[i32]) -> Signed {
    w.iter().rev().map(|x| -x).collect()
}

/// Coxeter matrix read straight from the defining graph.
pub fn labels(g: &ArtinGroup) -> Vec<Vec<u32>> {
    let n = g.rank();
    (0..n).map(|i| (0..n).map(|j| g.graph.label(i, j)).collect()).collect()
}

/// Alternating word a b a b … of length `len` (1-based letters).
fn alternating(a: i32, b: i32, len: usize) -> Vec<i32> {
    (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

/// Right subword reversing: rewrites every `s⁻¹ t` into `v u⁻¹` with `s v = t u`
/// the braid relation, until the word has the shape P·N⁻¹.
pub fn right_reverse(m: &[Vec<u32>], w: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let mut w = w.to_vec();
    while let Some(pos) = (0..w.len().saturating_sub(1)).find(|&k| w[k] < 0 && w[k + 1] > 0) {
        let s = -w[pos];
        let t = w[pos + 1];
        let repl: Vec<i32> = if s == t {
            Vec::new()
        } else {
            let mm = m[(s - 1) as usize][(t - 1) as usize] as usize;
            let v = alternating(t, s, mm - 1);
            let u = alternating(s, t, mm - 1);
            let mut r = v;
            r.extend(u.iter().rev().map(|x| -x));
            r
        };
        w.splice(pos..pos + 2, repl);
    }
    let split = w.iter().position(|&x| x < 0).unwrap_or(w.len());
    let p = w[..split].to_vec();
    let n: Vec<i32> = w[split..].iter().rev().map(|x| -x).collect();
    (p, n)
}

/// Word problem by reversing: w = 1 iff w ⇝ P N⁻¹ and P⁻¹N ⇝ ε.
pub fn reversing_is_trivial(m: &[Vec<u32>], w: &[i32]) -> bool {
    let (p, n) = right_reverse(m, w);
    let mut q: Vec<i32> = p.iter().rev().map(|x| -x).collect();
    q.extend_from_slice(&n);
    let (a, b) = right_reverse(m, &q);
    a.is_empty() && b.is_empty()
}

pub fn reversing_equal(m: &[Vec<u32>], u: &[i32], v: &[i32]) -> bool {
    let mut w = u.to_vec();
    w.extend(inverse_signed(v));
    reversing_is_trivial(m, &w)
}

/// Braid-relation rewrites of a positive word (all single applications).
fn positive_rewrites(m: &[Vec<u32>], w: &[i32]) -> Vec<Vec<i32>> {
    let n = m.len() as i32;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let mm = m[(a - 1) as usize][(b - 1) as usize] as usize;
            if mm > w.len() {
                continue;
            }
            let lhs = alternating(a, b, mm);
            let rhs = alternating(b, a, mm);
            for k in 0..=w.len() - mm {
                if w[k..k + mm] == lhs[..] {
                    let mut x = w.to_vec();
                    x[k..k + mm].copy_from_slice(&rhs);
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Exact equivalence classes of all positive words of length `len`, found by
/// closing under braid-relation rewriting (which preserves length).
pub fn positive_classes(m: &[Vec<u32>], len: usize) -> Vec<Vec<Vec<i32>>> {
    let n = m.len() as i32;
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut classes = Vec::new();
    for w in words {
        if seen.contains(&w) {
            continue;
        }
        let mut class = vec![w.clone()];
        seen.insert(w.clone());
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for y in positive_rewrites(m, &x) {
                if seen.insert(y.clone()) {
                    class.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        classes.push(class);
    }
    classes
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Bounded bidirectional rewriting: breadth-first search over words reachable by
/// relation rewrites (positive and inverted), insertion of s s⁻¹ pairs is not used;
/// free reduction is applied after every step. Returns true if `u` and `v` meet within
/// `max_len` letters and `budget` visited words. A `false` answer is inconclusive.
pub fn rewriting_meets(m: &[Vec<u32>], u: &[i32], v: &[i32], max_len: usize, budget: usize) -> bool {
    let u = free_reduce(u);
    let v = free_reduce(v);
    if u == v {
        return true;
    }
    let n = m.len() as i32;
    let mut seen_u: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut seen_v: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut qu = VecDeque::from([u.clone()]);
    let mut qv = VecDeque::from([v.clone()]);
    seen_u.insert(u, ());
    seen_v.insert(v, ());
    let step = |w: &[i32]| -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                let mm = m[(a - 1) as usize][(b - 1) as usize] as usize;
                // s(ts..) = t(st..) in all four sign patterns, including mixed ones
                // such as  a b a = b a b  ⇒  a⁻¹ b a = b a b⁻¹.
                let lhs = alternating(a, b, mm);
                let rhs = alternating(b, a, mm);
                let mut rel: Vec<i32> = lhs.clone();
                rel.extend(rhs.iter().rev().map(|x| -x));
                let rl = rel.len();
                for cut in 0..rl {
                    for k in 1..rl {
                        // cyclic rotations of the relator, split into lhs (k letters) = rhs
                        let rot: Vec<i32> = (0..rl).map(|i| rel[(cut + i) % rl]).collect();
                        let left = &rot[..k];
                        let right: Vec<i32> = rot[k..].iter().rev().map(|x| -x).collect();
                        if left.len() > w.len() {
                            continue;
                        }
                        for p in 0..=w.len() - left.len() {
                            if &w[p..p + left.len()] == left {
                                let mut x = w[..p].to_vec();
                                x.extend_from_slice(&right);
                                x.extend_from_slice(&w[p + left.len()..]);
                                let x = free_reduce(&x);
                                if x.len() <= max_len {
                                    out.push(x);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    };
    while (!qu.is_empty() || !qv.is_empty()) && seen_u.len() + seen_v.len() < budget {
        if let Some(w) = qu.pop_front() {
            for x in step(&w) {
                if seen_v.contains_key(&x) {
                    return true;
                }
                if seen_u.insert(x.clone(), ()).is_none() {
                    qu.push_back(x);
                }
            }
        }
        if let Some(w) = qv.pop_front() {
            for x in step(&w) {
                if seen_u.contains_key(&x) {
                    return true;
                }
                if seen_v.insert(x.clone(), ()).is_none() {
                    qv.push_back(x);
                }
            }
        }
    }
    false
}

/// All signed words of exactly `len` letters.
pub fn all_signed_words(rank: usize, len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..=rank as i32).flat_map(|a| [a, -a]).collect();
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    words
}

pub fn random_signed_word<R: rand::Rng>(rng: &mut R, rank: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let a = rng.gen_range(1..=rank as i32);
            if rng.gen_bool(0.5) {
                a
            } else {
                -a
            }
        })
        .collect()
}

/// All positive elements of atom length ≤ `max_len`, deduplicated by normal form,
/// generated by right-multiplying atoms.
pub fn positives_up_to(g: &ArtinGroup, max_len: usize) -> Vec<artin_markings::ArtinElement> {
    let mut seen: HashSet<artin_markings::ArtinElement> = HashSet::new();
    let mut layer = vec![g.one()];
    seen.insert(g.one());
    let mut out = vec![g.one()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &layer {
            for s in 0..g.rank() {
                let y = g.mul(x, &g.gen(s));
                if seen.insert(y.clone()) {
                    next.push(y.clone());
                    out.push(y);
                }
            }
        }
        layer = next;
    }
    out
}

pub fn standard_irreducible_proper(g: &ArtinGroup) -> Vec<GenSet> {
    (1..(1u64 << g.rank()) - 1).map(GenSet).filter(|&x| g.graph.is_connected(x)).collect()
}

/// Maximal simplices among standard vertices, found by brute force over all families
/// with adjacency decided by commuting z's in normal form.
pub fn brute_force_maximal(g: &ArtinGroup) -> std::collections::BTreeSet<Vec<GenSet>> {
    let verts = standard_irreducible_proper(g);
    let n = verts.len();
    let zs: Vec<artin_markings::ArtinElement> = verts.iter().map(|&x| g.central_generator_z(x).unwrap()).collect();
    let adj: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| g.mul(&zs[i], &zs[j]) == g.mul(&zs[j], &zs[i])).collect()).collect();
    let simplices: Vec<u64> = (1u64..(1u64 << n))
        .filter(|&m| (0..n).all(|i| m >> i & 1 == 0 || (i + 1..n).all(|j| m >> j & 1 == 0 || adj[i][j])))
        .collect();
    let all: std::collections::BTreeSet<u64> = simplices.iter().copied().collect();
    simplices
        .iter()
        .filter(|&&m| (0..n).all(|k| m >> k & 1 == 1 || !all.contains(&(m | 1 << k))))
        .map(|&m| {
            let mut v: Vec<GenSet> = (0..n).filter(|&i| m >> i & 1 == 1).map(|i| verts[i]).collect();
            v.sort();
            v
        })
        .collect()
}
