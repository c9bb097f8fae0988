//! Exact arithmetic in Z[c] with c = 2cos(pi/M), reduced modulo the minimal polynomial of c.

/// The ring Z[2cos(pi/M)]. Elements are coefficient vectors of length `degree()`.
#[derive(Debug, Clone)]
pub struct CosRing {
    m: u32,
    /// Monic minimal polynomial of c, lowest degree first, including the leading 1.
    minpoly: Vec<i64>,
    c: f64,
}

pub type Elem = Vec<i64>;

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    if rem.len() <= dd {
        return vec![0];
    }
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Cyclotomic polynomial Phi_n.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut p = num;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

impl CosRing {
    /// Ring containing 2cos(pi/m) for every label `m` in `labels`.
    pub fn for_labels(labels: &[u32]) -> CosRing {
        let m = labels.iter().filter(|&&m| m > 3).fold(1u32, |acc, &m| lcm(acc, m));
        CosRing::new(m)
    }

    pub fn new(m: u32) -> CosRing {
        if m <= 3 {
            // c = 1 (m = 3) or the trivial ring Z; either way the ring is Z.
            return CosRing { m: 3, minpoly: vec![-1, 1], c: 1.0 };
        }
        let phi = cyclotomic(2 * m);
        let d = (phi.len() - 1) / 2;
        // x^{-d} phi(x) = a_d + sum_j a_{d+j} C_j(y) with C_j(x + 1/x) = x^j + x^{-j}.
        let mut minpoly = vec![0i64; d + 1];
        minpoly[0] = phi[d];
        let mut prev: Vec<i64> = vec![2];
        let mut cur: Vec<i64> = vec![0, 1];
        for j in 1..=d {
            add_into(&mut minpoly, &cur, phi[d + j]);
            let mut next = vec![0i64; cur.len() + 1];
            for (k, &v) in cur.iter().enumerate() {
                next[k + 1] += v;
            }
            for (k, &v) in prev.iter().enumerate() {
                next[k] -= v;
            }
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(*minpoly.last().unwrap(), 1);
        let c = 2.0 * (std::f64::consts::PI / m as f64).cos();
        CosRing { m, minpoly, c }
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn minimal_polynomial(&self) -> &[i64] {
        &self.minpoly
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.degree()]
    }

    pub fn int(&self, k: i64) -> Elem {
        let mut e = self.zero();
        e[0] = k;
        e
    }

    fn reduce(&self, mut p: Vec<i64>) -> Elem {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top != 0 {
                let base = p.len() - d;
                for j in 0..d {
                    p[base + j] -= top * self.minpoly[j];
                }
            }
        }
        p.resize(d, 0);
        p
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Elem {
        self.reduce(poly_mul(a, b))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// 2cos(pi/m) as a ring element; `m` must be 2, 3, or divide the modulus.
    pub fn two_cos(&self, m: u32) -> Elem {
        match m {
            2 => return self.zero(),
            3 => return self.int(1),
            _ => {}
        }
        assert!(self.m.is_multiple_of(m), "label {m} not supported by ring of modulus {}", self.m);
        let k = self.m / m;
        // C_k(c) via the Chebyshev-like recurrence.
        let mut prev = self.int(2);
        let mut cur = self.reduce(vec![0, 1]);
        let cvec = cur.clone();
        for _ in 1..k {
            let next = self.sub(&self.mul(&cvec, &cur), &prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn to_f64(&self, a: &[i64]) -> f64 {
        a.iter().rev().fold(0.0, |acc, &x| acc * self.c + x as f64)
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

fn add_into(acc: &mut [i64], p: &[i64], scale: i64) {
    for (k, &v) in p.iter().enumerate() {
        acc[k] += scale * v;
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}
