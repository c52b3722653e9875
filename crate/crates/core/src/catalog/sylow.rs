//! The Sylow 2-subgroup `S` and its class counts.

use super::kmodel::TAU;
use super::qfactors::{Factor, QuaternionFactors};
use super::torus::{enumerate_p, TorusAmbient};
use crate::algebra::group::{GenGroup, GroupOps};
use crate::algebra::kelem::{KOps, ID3};
use crate::algebra::matrix::m2_identity;
use crate::error::Result;

/// `S = <R1, R2, R3, (a,a,a), τ>` inside `K`.
pub fn build_s(qf: &QuaternionFactors) -> Result<GenGroup<KOps>> {
    let ops = KOps::new(qf.ctx.clone());
    let id = m2_identity();
    let mut gens = Vec::new();
    for g in qf.data(Factor::R).group.gens() {
        for i in 0..3 {
            let mut blocks = [id; 3];
            blocks[i] = *g;
            gens.push(ops.canonical(blocks, ID3));
        }
    }
    gens.push(ops.canonical([qf.a; 3], ID3));
    gens.push(ops.canonical([id; 3], TAU));
    GenGroup::new(ops, gens)
}

/// `S` as `T ⋊ (D8 × <-I>)` on `T = (Z/2^{l+2})^3`.
pub fn build_s_torus(amb: &TorusAmbient) -> Result<GenGroup<crate::algebra::residue::AffineOps>> {
    enumerate_p(amb, &amb.with_minus(&amb.d8))
}

/// Number of conjugacy classes of `S` and of `[S, S]`.
pub fn class_counts<O: GroupOps>(s: &GenGroup<O>) -> (usize, usize) {
    let ds = s.subgroup(&s.derived_subgroup());
    (s.class_count(), ds.class_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::choose_q;

    #[test]
    fn matrix_and_torus_models_agree() {
        for (l, want) in [(0u32, (61, 28)), (1, (158, 152))] {
            let qf = QuaternionFactors::new(l, choose_q(l)).unwrap();
            let s = build_s(&qf).unwrap();
            assert_eq!(s.order(), 1 << (3 * l + 10));
            let t = build_s_torus(&TorusAmbient::new(l)).unwrap();
            assert_eq!(t.order(), s.order());
            assert_eq!(class_counts(&s), want);
            assert_eq!(class_counts(&t), want);
        }
    }
}
