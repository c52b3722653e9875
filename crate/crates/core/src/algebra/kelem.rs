//! Block-monomial 6x6 matrices `diag(n1,n2,n3)·P_π` over F_{q^2}, taken modulo
//! the central `(-1,-1,-1)`.
//!
//! `P_π` sends block `j` to block `π(j)`, so
//! `(n;π)(n';π') = (n_i n'_{π⁻¹(i)}; ππ')`.

use std::sync::Arc;

use super::field::Fe;
use super::group::GroupOps;
use super::matrix::{m2_identity, m2_inv, m2_mul, m2_neg, FieldCtx, FqMat, Mat2};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElem {
    pub blocks: [Mat2; 3],
    /// `perm[j] = π(j)`
    pub perm: [u8; 3],
}

pub fn perm_inv(p: [u8; 3]) -> [u8; 3] {
    let mut r = [0u8; 3];
    for j in 0..3 {
        r[p[j] as usize] = j as u8;
    }
    r
}

pub fn perm_mul(p: [u8; 3], q: [u8; 3]) -> [u8; 3] {
    [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]]
}

pub const ID3: [u8; 3] = [0, 1, 2];

#[derive(Clone, Debug)]
pub struct KOps {
    pub ctx: Arc<FieldCtx>,
    /// quotient by `(-1,-1,-1)` when set
    pub mod_sign: bool,
}

impl KOps {
    pub fn new(ctx: Arc<FieldCtx>) -> Self {
        KOps { ctx, mod_sign: true }
    }

    pub fn canonical(&self, blocks: [Mat2; 3], perm: [u8; 3]) -> KElem {
        if !self.mod_sign {
            return KElem { blocks, perm };
        }
        let f = self.ctx.f();
        let neg = [m2_neg(f, &blocks[0]), m2_neg(f, &blocks[1]), m2_neg(f, &blocks[2])];
        KElem { blocks: blocks.min(neg), perm }
    }

    pub fn diag(&self, n1: Mat2, n2: Mat2, n3: Mat2) -> KElem {
        self.canonical([n1, n2, n3], ID3)
    }

    pub fn perm_elem(&self, perm: [u8; 3]) -> KElem {
        let i = m2_identity();
        self.canonical([i, i, i], perm)
    }

    /// `k (g1,g2,g3) k⁻¹` blockwise: position `i` receives `n_i g_{π⁻¹(i)} n_i⁻¹`.
    pub fn conj_blocks(&self, k: &KElem, g: &[Mat2; 3]) -> [Mat2; 3] {
        let f = self.ctx.f();
        let pi = perm_inv(k.perm);
        std::array::from_fn(|i| {
            let n = &k.blocks[i];
            m2_mul(f, &m2_mul(f, n, &g[pi[i] as usize]), &m2_inv(f, n))
        })
    }

    pub fn to_matrix(&self, k: &KElem) -> FqMat {
        let mut m = FqMat { n: 6, a: vec![Fe::ZERO; 36] };
        for j in 0..3 {
            let i = k.perm[j] as usize;
            let b = &k.blocks[i];
            for r in 0..2 {
                for c in 0..2 {
                    m.a[(2 * i + r) * 6 + 2 * j + c] = b[2 * r + c];
                }
            }
        }
        m
    }
}

impl GroupOps for KOps {
    type Elem = KElem;
    fn identity(&self) -> KElem {
        self.perm_elem(ID3)
    }
    fn mul(&self, a: &KElem, b: &KElem) -> KElem {
        let f = self.ctx.f();
        let pi = perm_inv(a.perm);
        let blocks = std::array::from_fn(|i| m2_mul(f, &a.blocks[i], &b.blocks[pi[i] as usize]));
        self.canonical(blocks, perm_mul(a.perm, b.perm))
    }
    fn inv(&self, a: &KElem) -> KElem {
        let f = self.ctx.f();
        let blocks = std::array::from_fn(|j| m2_inv(f, &a.blocks[a.perm[j] as usize]));
        self.canonical(blocks, perm_inv(a.perm))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::m2_diag;

    #[test]
    fn block_product_matches_dense() {
        let ctx = FieldCtx::new(9).unwrap();
        let f = ctx.f();
        let ops = KOps { ctx: ctx.clone(), mod_sign: false };
        let l = ctx.root_of_unity(16);
        let w = [Fe::ZERO, Fe::ONE, f.neg(Fe::ONE), Fe::ZERO];
        let a = KElem { blocks: [m2_diag(f, l), w, m2_mul(f, &w, &m2_diag(f, f.pow(l, 3)))], perm: [1, 2, 0] };
        let b = KElem { blocks: [w, m2_diag(f, f.pow(l, 5)), m2_identity()], perm: [1, 0, 2] };
        let ab = ops.mul(&a, &b);
        assert_eq!(ops.to_matrix(&ab), ops.to_matrix(&a).mul(f, &ops.to_matrix(&b)));
        assert_eq!(ops.mul(&a, &ops.inv(&a)), ops.identity());
        let g = [w, m2_diag(f, l), m2_identity()];
        let c = ops.conj_blocks(&a, &g);
        let lhs = ops.mul(&ops.mul(&a, &KElem { blocks: g, perm: ID3 }), &ops.inv(&a));
        assert_eq!(lhs, KElem { blocks: c, perm: ID3 });
    }
}
