//! Z/2^k, square matrices over it, and affine pairs `(v, A)` acting by `x -> A x + v`.

use super::group::GroupOps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueCtx {
    pub k: u32,
}

impl ResidueCtx {
    pub fn new(k: u32) -> Self {
        assert!((1..=30).contains(&k));
        ResidueCtx { k }
    }
    pub fn modulus(&self) -> u32 {
        1 << self.k
    }
    #[inline]
    pub fn reduce(&self, a: i64) -> u32 {
        a.rem_euclid(self.modulus() as i64) as u32
    }
    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) & (self.modulus() - 1)
    }
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) & (self.modulus() as u64 - 1)) as u32
    }
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        (self.modulus() - a) & (self.modulus() - 1)
    }
}

/// 3x3 matrices over Z/2^k, row-major.
pub type Mat3 = [u32; 9];

impl ResidueCtx {
    pub fn mat_mul(&self, a: &Mat3, b: &Mat3) -> Mat3 {
        let mut c = [0u32; 9];
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0u64;
                for t in 0..3 {
                    s += a[3 * i + t] as u64 * b[3 * t + j] as u64;
                }
                c[3 * i + j] = (s & (self.modulus() as u64 - 1)) as u32;
            }
        }
        c
    }
    pub fn mat_vec(&self, a: &Mat3, v: &[u32; 3]) -> [u32; 3] {
        let mut w = [0u32; 3];
        for i in 0..3 {
            let s: u64 = (0..3).map(|t| a[3 * i + t] as u64 * v[t] as u64).sum();
            w[i] = (s & (self.modulus() as u64 - 1)) as u32;
        }
        w
    }
    /// Row vector times matrix (the dual action on characters).
    pub fn vec_mat(&self, v: &[u32; 3], a: &Mat3) -> [u32; 3] {
        let mut w = [0u32; 3];
        for j in 0..3 {
            let s: u64 = (0..3).map(|t| v[t] as u64 * a[3 * t + j] as u64).sum();
            w[j] = (s & (self.modulus() as u64 - 1)) as u32;
        }
        w
    }
    pub fn mat_inv(&self, a: &Mat3) -> Mat3 {
        // adjugate over the unit determinant
        let m = |i: usize, j: usize| a[3 * i + j] as i128;
        let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        let det = det.rem_euclid(self.modulus() as i128) as u32;
        assert!(det % 2 == 1, "singular matrix mod 2");
        let dinv = self.unit_inverse(det) as i64;
        let mut c = [0u32; 9];
        for i in 0..3 {
            for j in 0..3 {
                let (r0, r1) = ([1, 0, 0][j], [2, 2, 1][j]);
                let (c0, c1) = ([1, 0, 0][i], [2, 2, 1][i]);
                let minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                c[3 * i + j] = self.mul((sign * minor).rem_euclid(self.modulus() as i128) as u32, dinv as u32);
            }
        }
        c
    }
    pub fn unit_inverse(&self, a: u32) -> u32 {
        // Newton iteration for odd a
        let mut x: u64 = 1;
        for _ in 0..6 {
            x = x.wrapping_mul(2u64.wrapping_sub((a as u64).wrapping_mul(x)));
        }
        (x & (self.modulus() as u64 - 1)) as u32
    }
    pub fn identity3(&self) -> Mat3 {
        [1, 0, 0, 0, 1, 0, 0, 0, 1]
    }
    pub fn neg_mat(&self, a: &Mat3) -> Mat3 {
        let mut c = *a;
        for x in c.iter_mut() {
            *x = self.neg(*x);
        }
        c
    }
}

/// Matrix group ops for GL3(Z/2^k).
#[derive(Clone, Copy, Debug)]
pub struct Mat3Ops(pub ResidueCtx);

impl GroupOps for Mat3Ops {
    type Elem = Mat3;
    fn identity(&self) -> Mat3 {
        self.0.identity3()
    }
    fn mul(&self, a: &Mat3, b: &Mat3) -> Mat3 {
        self.0.mat_mul(a, b)
    }
    fn inv(&self, a: &Mat3) -> Mat3 {
        self.0.mat_inv(a)
    }
}

/// Affine element `x -> A x + v` of `(Z/2^k)^3 ⋊ GL3(Z/2^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub v: [u32; 3],
    pub m: Mat3,
}

#[derive(Clone, Copy, Debug)]
pub struct AffineOps(pub ResidueCtx);

impl GroupOps for AffineOps {
    type Elem = Affine;
    fn identity(&self) -> Affine {
        Affine { v: [0; 3], m: self.0.identity3() }
    }
    /// `(a*b)(x) = a(b(x))`
    fn mul(&self, a: &Affine, b: &Affine) -> Affine {
        let r = &self.0;
        let av = r.mat_vec(&a.m, &b.v);
        Affine { v: [r.add(av[0], a.v[0]), r.add(av[1], a.v[1]), r.add(av[2], a.v[2])], m: r.mat_mul(&a.m, &b.m) }
    }
    fn inv(&self, a: &Affine) -> Affine {
        let r = &self.0;
        let mi = r.mat_inv(&a.m);
        let w = r.mat_vec(&mi, &a.v);
        Affine { v: [r.neg(w[0]), r.neg(w[1]), r.neg(w[2])], m: mi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let r = ResidueCtx::new(5);
        let a: Mat3 = [1, 2, 3, 0, 1, 4, 5, 6, 0];
        let ai = r.mat_inv(&a);
        assert_eq!(r.mat_mul(&a, &ai), r.identity3());
        assert_eq!(r.unit_inverse(7) * 7 % 32, 1);
    }
}
