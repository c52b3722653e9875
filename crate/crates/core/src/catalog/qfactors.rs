//! The three 2x2 factor types `Q`, `Q'`, `R` inside `SL2(q)` together with the
//! finite candidate set used for normalizers and transporters.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::field::Fe;
use crate::algebra::group::{GenGroup, GroupOps};
use crate::algebra::matrix::{m2_diag, m2_mul, FieldCtx, Mat2, Mat2Ops};
use crate::characters::dixon::{dixon_table_mod, CharTable};
use crate::characters::modp::prime_congruent_one;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Q,
    Qp,
    R,
}

impl Factor {
    pub fn index(self) -> usize {
        match self {
            Factor::Q => 0,
            Factor::Qp => 1,
            Factor::R => 2,
        }
    }
}

/// Coset of `SL2(q)` inside `SL2(q)⟨a⟩`: 0 for `SL2(q)`, 1 for `a·SL2(q)`.
pub type Coset = u8;

pub struct FactorData {
    pub group: GenGroup<Mat2Ops>,
    pub table: CharTable,
    /// `true` when `-1` acts as `-1` in the row
    pub faithful_center: Vec<bool>,
    pub minus_one: u32,
}

impl FactorData {
    fn new(group: GenGroup<Mat2Ops>, prime: u64, minus: &Mat2) -> Result<FactorData> {
        let table = dixon_table_mod(&group, prime)?;
        let minus_one = group.index_of(minus).expect("-1 lies in every factor");
        let cm = group.classes().class_of[minus_one as usize] as usize;
        let faithful_center = table.values.iter().map(|row| row[cm] != row[0]).collect();
        Ok(FactorData { group, table, faithful_center, minus_one })
    }

    /// Value of row `r` at a group element.
    pub fn value(&self, r: usize, g: &Mat2) -> u64 {
        let i = self.group.index_of(g).expect("element of the factor");
        self.table.values[r][self.group.classes().class_of[i as usize] as usize]
    }

    pub fn contains(&self, g: &Mat2) -> bool {
        self.group.contains(g)
    }

    /// Least element of the coset `n·X`.
    pub fn coset_key(&self, n: &Mat2) -> Mat2 {
        let f = self.group.ops().0.f();
        self.group.elements().iter().map(|x| m2_mul(f, n, x)).min().unwrap()
    }
}

pub struct QuaternionFactors {
    pub l: u32,
    pub ctx: Arc<FieldCtx>,
    pub prime: u64,
    pub a: Mat2,
    pub w: Mat2,
    pub h: Mat2,
    pub minus: Mat2,
    pub factors: [FactorData; 3],
    universe: Vec<Mat2>,
    transport: HashMap<(Coset, Factor, Factor), Option<Mat2>>,
    normalizer_gens: HashMap<Factor, Vec<Mat2>>,
}

impl QuaternionFactors {
    pub fn new(l: u32, q: u32) -> Result<QuaternionFactors> {
        let ctx = FieldCtx::new(q)?;
        let ops = Mat2Ops(ctx.clone());
        let f = ctx.f();
        let lam = ctx.root_of_unity(1 << (l + 3));
        let a = m2_diag(f, lam);
        let b = m2_mul(f, &a, &a);
        let one = Fe::ONE;
        let w = [Fe::ZERO, one, f.neg(one), Fe::ZERO];
        let minus = [f.neg(one), Fe::ZERO, Fe::ZERO, f.neg(one)];
        let ii = ops.pow(&b, 1 << l);
        let kk = m2_mul(f, &ii, &w);
        let half = f.neg(f.inv(f.from_int(2)));
        let s: Mat2 = std::array::from_fn(|k| f.add(f.add(ops.identity()[k], ii[k]), f.add(w[k], kk[k])));
        let h: Mat2 = std::array::from_fn(|k| f.mul(half, s[k]));

        let prime = prime_congruent_one(1 << (l + 6), 1 << 16)?;
        let q_grp = GenGroup::new(ops.clone(), vec![ii, w])?;
        let qp_grp = GenGroup::new(ops.clone(), vec![ops.conj(&a, &ii), ops.conj(&a, &w)])?;
        let r_grp = GenGroup::new(ops.clone(), vec![b, w])?;
        let tilde = GenGroup::new(ops.clone(), vec![a, w])?;

        let normalizes = |x: &Mat2, g: &GenGroup<Mat2Ops>| g.gens().iter().all(|y| g.contains(&ops.conj(x, y)));
        let mut n0_gens: Vec<Mat2> = r_grp.elements().iter().filter(|x| normalizes(x, &q_grp)).cloned().collect();
        n0_gens.push(h);
        let n0 = GenGroup::new(ops.clone(), n0_gens)?;
        let a_inv = ops.inv(&a);
        let mut universe: Vec<Mat2> = tilde.elements().to_vec();
        for x in n0.elements() {
            universe.push(*x);
            universe.push(m2_mul(f, &a, x));
            universe.push(m2_mul(f, x, &a_inv));
            universe.push(m2_mul(f, &m2_mul(f, &a, x), &a_inv));
        }
        universe.sort_unstable();
        universe.dedup();

        let factors = [
            FactorData::new(q_grp, prime, &minus)?,
            FactorData::new(qp_grp, prime, &minus)?,
            FactorData::new(r_grp, prime, &minus)?,
        ];
        let mut qf = QuaternionFactors {
            l,
            ctx,
            prime,
            a,
            w,
            h,
            minus,
            factors,
            universe,
            transport: HashMap::new(),
            normalizer_gens: HashMap::new(),
        };
        let all = [Factor::Q, Factor::Qp, Factor::R];
        for c in 0..2u8 {
            for &x in &all {
                for &y in &all {
                    let t = qf.search_transporter(c, x, y);
                    qf.transport.insert((c, x, y), t);
                }
            }
        }
        for &x in &all {
            let elems: Vec<Mat2> = qf.universe.iter().filter(|n| qf.coset_of(n) == Some(0) && qf.sends(n, x, x)).cloned().collect();
            let grp = GenGroup::new(ops.clone(), elems.clone())?;
            let idx: Vec<u32> = (0..grp.order() as u32).collect();
            let gens = crate::algebra::group::generators_of(&grp, &idx).iter().map(|&i| *grp.elem(i)).collect();
            qf.normalizer_gens.insert(x, gens);
        }
        Ok(qf)
    }

    pub fn ops(&self) -> Mat2Ops {
        Mat2Ops(self.ctx.clone())
    }

    pub fn data(&self, x: Factor) -> &FactorData {
        &self.factors[x.index()]
    }

    pub fn coset_of(&self, n: &Mat2) -> Option<Coset> {
        let in_fq = |m: &Mat2| m.iter().all(|&e| self.ctx.in_subfield(e));
        if in_fq(n) {
            return Some(0);
        }
        let ops = self.ops();
        if in_fq(&ops.mul(&ops.inv(&self.a), n)) {
            return Some(1);
        }
        None
    }

    /// `n X n⁻¹ = Y`
    pub fn sends(&self, n: &Mat2, x: Factor, y: Factor) -> bool {
        let ops = self.ops();
        let (gx, gy) = (&self.data(x).group, &self.data(y).group);
        gx.order() == gy.order() && gx.gens().iter().all(|g| gy.contains(&ops.conj(n, g)))
    }

    fn search_transporter(&self, c: Coset, x: Factor, y: Factor) -> Option<Mat2> {
        self.universe.iter().find(|n| self.coset_of(n) == Some(c) && self.sends(n, x, y)).cloned()
    }

    /// Least candidate `n` in coset `c` with `n X n⁻¹ = Y`.
    pub fn transporter(&self, c: Coset, x: Factor, y: Factor) -> Option<Mat2> {
        self.transport[&(c, x, y)]
    }

    /// Generators of `N_{SL2(q)}(X)`.
    pub fn normalizer_gens(&self, x: Factor) -> &[Mat2] {
        &self.normalizer_gens[&x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::params::choose_q;

    #[test]
    fn factor_orders_and_normalizers() {
        for l in 0..3 {
            let qf = QuaternionFactors::new(l, choose_q(l)).unwrap();
            let ops = qf.ops();
            assert_eq!(ops.pow(&qf.h, 3), ops.identity());
            assert_eq!(qf.data(Factor::Q).group.order(), 8);
            assert_eq!(qf.data(Factor::Qp).group.order(), 8);
            assert_eq!(qf.data(Factor::R).group.order(), 1 << (l + 3));
            let nq = GenGroup::new(ops.clone(), qf.normalizer_gens(Factor::Q).to_vec()).unwrap();
            assert_eq!(nq.order(), 24 * if l == 0 { 1 } else { 2 });
            let nr = GenGroup::new(ops.clone(), qf.normalizer_gens(Factor::R).to_vec()).unwrap();
            assert_eq!(nr.order(), if l == 0 { 24 } else { 1 << (l + 3) });
            assert!(qf.transporter(1, Factor::Q, Factor::Qp).is_some());
            assert_eq!(qf.transporter(0, Factor::Q, Factor::Qp).is_some(), l == 0);
        }
    }
}
