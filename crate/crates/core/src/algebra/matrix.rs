//! Matrices over F_{q^2}: dense n x n and the 2x2 fast path.

use std::sync::Arc;

use super::field::{prime_power, Fe, Field};
use super::group::GroupOps;
use crate::error::{Error, Result};

/// `F_q ⊂ F_{q^2}`; all arithmetic happens in the larger field.
#[derive(Debug)]
pub struct FieldCtx {
    pub q: u32,
    pub big: Field,
}

impl FieldCtx {
    pub fn new(q: u32) -> Result<Arc<FieldCtx>> {
        let (p, e) = prime_power(q as u64).ok_or_else(|| Error::ParamsInvalid(format!("q = {q} is not a prime power")))?;
        if p == 2 {
            return Err(Error::ParamsInvalid(format!("q = {q} is even")));
        }
        Ok(Arc::new(FieldCtx { q, big: Field::new(p, 2 * e)? }))
    }
    pub fn f(&self) -> &Field {
        &self.big
    }
    /// Element of multiplicative order exactly `n` (n must divide q^2 - 1).
    pub fn root_of_unity(&self, n: u32) -> Fe {
        let m = self.big.unit_order();
        assert_eq!(m % n, 0, "{n} does not divide q^2-1");
        self.big.gen_pow((m / n) as i64)
    }
    pub fn in_subfield(&self, a: Fe) -> bool {
        match self.big.log(a) {
            None => true,
            Some(k) => k % (self.q + 1) == 0,
        }
    }
}

pub type Mat2 = [Fe; 4];

pub fn m2_mul(f: &Field, a: &Mat2, b: &Mat2) -> Mat2 {
    [
        f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
        f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
        f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
        f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
    ]
}

pub fn m2_det(f: &Field, a: &Mat2) -> Fe {
    f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]))
}

pub fn m2_inv(f: &Field, a: &Mat2) -> Mat2 {
    let d = f.inv(m2_det(f, a));
    [f.mul(d, a[3]), f.mul(d, f.neg(a[1])), f.mul(d, f.neg(a[2])), f.mul(d, a[0])]
}

pub fn m2_neg(f: &Field, a: &Mat2) -> Mat2 {
    [f.neg(a[0]), f.neg(a[1]), f.neg(a[2]), f.neg(a[3])]
}

pub fn m2_identity() -> Mat2 {
    [Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE]
}

pub fn m2_diag(f: &Field, l: Fe) -> Mat2 {
    [l, Fe::ZERO, Fe::ZERO, f.inv(l)]
}

pub fn m2_trace(f: &Field, a: &Mat2) -> Fe {
    f.add(a[0], a[3])
}

#[derive(Clone, Debug)]
pub struct Mat2Ops(pub Arc<FieldCtx>);

impl GroupOps for Mat2Ops {
    type Elem = Mat2;
    fn identity(&self) -> Mat2 {
        m2_identity()
    }
    fn mul(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        m2_mul(self.0.f(), a, b)
    }
    fn inv(&self, a: &Mat2) -> Mat2 {
        m2_inv(self.0.f(), a)
    }
}

/// Dense square matrix over F_{q^2}, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMat {
    pub n: usize,
    pub a: Vec<Fe>,
}

impl FqMat {
    pub fn identity(n: usize) -> FqMat {
        let mut a = vec![Fe::ZERO; n * n];
        for i in 0..n {
            a[i * n + i] = Fe::ONE;
        }
        FqMat { n, a }
    }
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.a[i * self.n + j]
    }
    pub fn mul(&self, f: &Field, b: &FqMat) -> FqMat {
        let n = self.n;
        let mut c = vec![Fe::ZERO; n * n];
        for i in 0..n {
            for t in 0..n {
                let x = self.a[i * n + t];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    c[i * n + j] = f.add(c[i * n + j], f.mul(x, b.a[t * n + j]));
                }
            }
        }
        FqMat { n, a: c }
    }
    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<FqMat> {
        let n = self.n;
        let mut m = self.a.clone();
        let mut r = FqMat::identity(n).a;
        for col in 0..n {
            let piv = (col..n).find(|&i| !m[i * n + col].is_zero())?;
            for j in 0..n {
                m.swap(col * n + j, piv * n + j);
                r.swap(col * n + j, piv * n + j);
            }
            let inv = f.inv(m[col * n + col]);
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], inv);
                r[col * n + j] = f.mul(r[col * n + j], inv);
            }
            for i in 0..n {
                if i == col || m[i * n + col].is_zero() {
                    continue;
                }
                let c = m[i * n + col];
                for j in 0..n {
                    m[i * n + j] = f.sub(m[i * n + j], f.mul(c, m[col * n + j]));
                    r[i * n + j] = f.sub(r[i * n + j], f.mul(c, r[col * n + j]));
                }
            }
        }
        Some(FqMat { n, a: r })
    }
}

#[derive(Clone, Debug)]
pub struct FqMatOps {
    pub ctx: Arc<FieldCtx>,
    pub n: usize,
}

impl GroupOps for FqMatOps {
    type Elem = FqMat;
    fn identity(&self) -> FqMat {
        FqMat::identity(self.n)
    }
    fn mul(&self, a: &FqMat, b: &FqMat) -> FqMat {
        a.mul(self.ctx.f(), b)
    }
    fn inv(&self, a: &FqMat) -> FqMat {
        a.inverse(self.ctx.f()).expect("singular matrix in group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::GenGroup;

    #[test]
    fn quaternion_closure_l1() {
        let ctx = FieldCtx::new(9).unwrap();
        let f = ctx.f();
        let lam = ctx.root_of_unity(8);
        let a = m2_diag(f, lam);
        let w = [Fe::ZERO, Fe::ONE, f.neg(Fe::ONE), Fe::ZERO];
        let g = GenGroup::new(Mat2Ops(ctx.clone()), vec![a, w]).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.class_count(), 2usize.pow(2) + 3);
    }

    #[test]
    fn dense_inverse() {
        let ctx = FieldCtx::new(5).unwrap();
        let f = ctx.f();
        let m = FqMat { n: 2, a: vec![Fe(3), Fe(5), Fe(0), Fe(7)] };
        let mi = m.inverse(f).unwrap();
        assert_eq!(m.mul(f, &mi), FqMat::identity(2));
    }
}
