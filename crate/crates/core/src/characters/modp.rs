//! Arithmetic in F_P for P < 2^31: scalars, dense matrices and polynomials.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut r, mut b) = (1u64, a % self.p);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// An element of exact multiplicative order `n` (n | P-1).
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert_eq!((self.p - 1) % n, 0);
        let fac = factor(n);
        for g in 2..self.p {
            let r = self.pow(g, (self.p - 1) / n);
            if fac.iter().all(|&f| self.pow(r, n / f) != 1) {
                return r;
            }
        }
        unreachable!()
    }
}

pub fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `P ≡ 1 (mod m)` with `P > lower`.
pub fn prime_congruent_one(m: u64, lower: u64) -> Result<u64> {
    let mut t = lower / m + 1;
    loop {
        let p = m * t + 1;
        if p >= 1 << 31 {
            return Err(Error::PrimeSearchFailed);
        }
        if is_prime(p) {
            return Ok(p);
        }
        t += 1;
    }
}

/// Row-major dense matrix helpers over F_P.
pub type Mat = Vec<Vec<u64>>;

/// Basis of the right nullspace `{v : A v = 0}` of an `r x c` matrix.
pub fn nullspace(f: &Fp, a: &Mat, cols: usize) -> Vec<Vec<u64>> {
    let mut m: Mat = a.clone();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let k = m[i][c];
                for j in 0..cols {
                    let v = f.mul(k, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[i][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (low degree first, monic) via Hessenberg reduction.
pub fn char_poly(f: &Fp, a: &Mat) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut pk = vec![0u64; k + 2];
        for (i, &c) in ps[k].iter().enumerate() {
            pk[i + 1] = f.add(pk[i + 1], c);
            pk[i] = f.sub(pk[i], f.mul(h[k][k], c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let coef = f.mul(h[i][k], prod);
            if coef != 0 {
                for (t, &c) in ps[i].iter().enumerate() {
                    pk[t] = f.sub(pk[t], f.mul(coef, c));
                }
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

fn trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_rem(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    if b.len() == 1 {
        return vec![0];
    }
    let inv = f.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let k = f.mul(*r.last().unwrap(), inv);
        let shift = r.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(k, c));
        }
        r.pop();
        trim(&mut r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    r
}

fn poly_mulmod(f: &Fp, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % f.p;
        }
    }
    poly_rem(f, &c, m)
}

fn poly_gcd(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    let inv = f.inv(*a.last().unwrap());
    a.iter().map(|&c| f.mul(c, inv)).collect()
}

fn poly_powmod(f: &Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(f, &r, &b, m);
        }
        b = poly_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    r
}

fn poly_div_exact(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = f.inv(b[db]);
    let mut q = vec![0u64; a.len() - db];
    for s in (0..q.len()).rev() {
        let k = f.mul(r[s + db], inv);
        q[s] = k;
        for (i, &c) in b.iter().enumerate() {
            r[s + i] = f.sub(r[s + i], f.mul(k, c));
        }
    }
    q
}

/// Distinct roots in F_P of a polynomial (Cantor-Zassenhaus), sorted.
pub fn roots(f: &Fp, poly: &[u64], rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut p = poly.to_vec();
    trim(&mut p);
    if p.len() <= 1 {
        return vec![];
    }
    // restrict to the product of distinct linear factors
    let xp = poly_powmod(f, &[0, 1], f.p, &p);
    let mut xpx = xp.clone();
    xpx.resize(xpx.len().max(2), 0);
    xpx[1] = f.sub(xpx[1], 1);
    let g = poly_gcd(f, &p, &xpx);
    let mut out = Vec::new();
    split(f, &g, rng, &mut out);
    out.sort_unstable();
    out
}

fn split(f: &Fp, g: &[u64], rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let deg = g.len() - 1;
    if deg == 0 {
        return;
    }
    if deg == 1 {
        out.push(f.neg(f.mul(g[0], f.inv(g[1]))));
        return;
    }
    if f.p == 2 {
        for x in 0..2 {
            if g.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0 {
                out.push(x);
            }
        }
        return;
    }
    loop {
        let d = rng.gen_range(0..f.p);
        let mut h = poly_powmod(f, &[d, 1], (f.p - 1) / 2, g);
        h[0] = f.sub(h[0], 1);
        let c = poly_gcd(f, g, &h);
        let dc = c.len() - 1;
        if dc > 0 && dc < deg {
            split(f, &c, rng, out);
            split(f, &poly_div_exact(f, g, &c), rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn charpoly_and_roots() {
        let f = Fp { p: 97 };
        let a: Mat = vec![vec![2, 1, 0], vec![0, 3, 5], vec![0, 0, 7]];
        let cp = char_poly(&f, &a);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(roots(&f, &cp, &mut rng), vec![2, 3, 7]);
        let b: Mat = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(roots(&f, &char_poly(&f, &b), &mut rng), vec![1, 96]);
    }

    #[test]
    fn nullspace_rank() {
        let f = Fp { p: 7 };
        let a: Mat = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(nullspace(&f, &a, 3).len(), 2);
    }
}
