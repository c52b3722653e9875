//! The two rows outside the torus and quaternion families that are built directly:
//! `R_{1^5 2} = 2_-^{1+4} * Q_{2^{l+3}}` with `Out = O4-(2)`, and `A = F_2^4` with
//! `Out = GL4(2)`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::qfactors::{Factor, QuaternionFactors};
use crate::algebra::field::Fe;
use crate::algebra::group::{generators_of, GenGroup, GroupOps};
use crate::algebra::matrix::{Mat2, Mat2Ops};
use crate::algebra::perm::{Perm, PermOps};
use crate::characters::dixon::{dixon_table_mod, CharTable};
use crate::characters::label::CharLabel;
use crate::error::Result;
use crate::weights::oracle::{compare_with_oracle, OracleReport};
use crate::weights::outaction::{perm_group_from_elements, OutAction};

/// `(Y_1 × ... × Y_n) / {(ε_i) : ∏ ε_i = 1}` for groups `Y_i` sharing the central `-1`.
#[derive(Clone)]
pub struct SignedProductOps {
    factors: Arc<Vec<GenGroup<Mat2Ops>>>,
    minus: Vec<u32>,
}

impl SignedProductOps {
    pub fn new(factors: Vec<GenGroup<Mat2Ops>>, minus: &Mat2) -> SignedProductOps {
        let m = factors.iter().map(|g| g.index_of(minus).expect("-1 in every factor")).collect();
        SignedProductOps { factors: Arc::new(factors), minus: m }
    }

    pub fn canonical(&self, mut x: Vec<u32>) -> Vec<u32> {
        let n = x.len();
        for i in 0..n - 1 {
            let neg = self.factors[i].mul_idx(x[i], self.minus[i]);
            if neg < x[i] {
                x[i] = neg;
                x[n - 1] = self.factors[n - 1].mul_idx(x[n - 1], self.minus[n - 1]);
            }
        }
        x
    }

    pub fn embed(&self, i: usize, g: u32) -> Vec<u32> {
        let mut x = vec![0; self.factors.len()];
        x[i] = g;
        self.canonical(x)
    }
}

impl GroupOps for SignedProductOps {
    type Elem = Vec<u32>;
    fn identity(&self) -> Vec<u32> {
        vec![0; self.factors.len()]
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.canonical((0..a.len()).map(|i| self.factors[i].mul_idx(a[i], b[i])).collect())
    }
    fn inv(&self, a: &Vec<u32>) -> Vec<u32> {
        self.canonical((0..a.len()).map(|i| self.factors[i].inv_idx(a[i])).collect())
    }
}

fn d8(qf: &QuaternionFactors) -> Result<GenGroup<Mat2Ops>> {
    let f = qf.ctx.f();
    let s: Mat2 = [Fe::ONE, Fe::ZERO, Fe::ZERO, f.neg(Fe::ONE)];
    GenGroup::new(qf.ops(), vec![qf.w, s])
}

fn full_group<O: GroupOps>(g: &GenGroup<O>) -> GenGroup<O> {
    let all: Vec<u32> = (0..g.order() as u32).collect();
    let gens = generators_of(g, &all).iter().map(|&i| g.elem(i).clone()).collect();
    GenGroup::from_elements(g.ops().clone(), gens, g.elements().to_vec())
}

/// Automorphisms of a small group as element permutations, found by extending
/// generator images breadth-first.
pub fn automorphisms<O: GroupOps>(g: &GenGroup<O>) -> Vec<Vec<u32>> {
    let gens = g.gen_indices();
    let n = g.order();
    let ord: Vec<u64> = (0..n as u32).map(|x| g.ops().order_of(g.elem(x))).collect();
    let candidates: Vec<Vec<u32>> = gens.iter().map(|&x| (0..n as u32).filter(|&y| ord[y as usize] == ord[x as usize]).collect()).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<u32> = (0..gens.len()).map(|k| candidates[k][choice[k]]).collect();
        if let Some(p) = extend_hom(g, &gens, &imgs) {
            out.push(p);
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend_hom<O: GroupOps>(g: &GenGroup<O>, gens: &[u32], imgs: &[u32]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut phi = vec![u32::MAX; n];
    phi[0] = 0;
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul_idx(x, s);
            let v = g.mul_idx(phi[x as usize], imgs[k]);
            if phi[y as usize] == u32::MAX {
                phi[y as usize] = v;
                queue.push_back(y);
            } else if phi[y as usize] != v {
                return None;
            }
        }
    }
    let distinct: BTreeSet<u32> = phi.iter().copied().collect();
    (distinct.len() == n).then_some(phi)
}

pub struct R1452 {
    pub e: GenGroup<SignedProductOps>,
    pub e_table: CharTable,
    pub p_ops: SignedProductOps,
    /// automorphism of `E` representing each Out generator
    pub gen_autos: Vec<Vec<u32>>,
    pub action: OutAction,
}

impl R1452 {
    pub fn new(qf: &QuaternionFactors) -> Result<R1452> {
        let q8 = qf.data(Factor::Q).group.clone();
        let d8 = d8(qf)?;
        let r = qf.data(Factor::R).group.clone();
        let e_ops = SignedProductOps::new(vec![full_group(&q8), full_group(&d8)], &qf.minus);
        let mut e_gens: Vec<Vec<u32>> = q8.gen_indices().iter().map(|&x| e_ops.embed(0, x)).collect();
        e_gens.extend(d8.gen_indices().iter().map(|&x| e_ops.embed(1, x)));
        let e = GenGroup::new(e_ops, e_gens)?;
        let e_table = dixon_table_mod(&e, qf.prime)?;
        let center: Vec<u32> = e.center();

        // Out(E) through its action on E/Z(E)
        let zkey = |x: u32| -> u32 { center.iter().map(|&z| e.mul_idx(x, z)).min().unwrap() };
        let mut cosets: Vec<u32> = (0..e.order() as u32).map(zkey).collect();
        cosets.sort_unstable();
        cosets.dedup();
        let cpos: HashMap<u32, u32> = cosets.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let mut outs: HashMap<Perm, Vec<u32>> = HashMap::new();
        for a in automorphisms(&e) {
            let p: Perm = cosets.iter().map(|&c| cpos[&zkey(a[c as usize])]).collect();
            outs.entry(p).or_insert(a);
        }
        let id: Perm = (0..cosets.len() as u32).collect();
        let mut elems: Vec<Perm> = outs.keys().cloned().collect();
        elems.sort();
        let i0 = elems.iter().position(|p| *p == id).unwrap();
        elems.swap(0, i0);
        let out = perm_group_from_elements(cosets.len(), elems);
        let gen_autos: Vec<Vec<u32>> = out.gens().iter().map(|p| outs[p].clone()).collect();

        let e_faithful: Vec<bool> = e_table.values.iter().map(|row| row[e.classes().class_of[center_minus(&e)] as usize] != row[0]).collect();
        let r_data = qf.data(Factor::R);
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut lookup = HashMap::new();
        for (i, &fe) in e_faithful.iter().enumerate() {
            for (j, &fr) in r_data.faithful_center.iter().enumerate() {
                if fe == fr {
                    lookup.insert((i, j), labels.len() as u32);
                    labels.push(CharLabel::TensorProduct(vec![CharLabel::TableRow(i as u32), CharLabel::TableRow(j as u32)]));
                    degrees.push(e_table.degrees[i] * r_data.table.degrees[j]);
                }
            }
        }
        let keys: Vec<(usize, usize)> = {
            let mut k: Vec<_> = lookup.keys().copied().collect();
            k.sort_by_key(|key| lookup[key]);
            k
        };
        let gen_action = gen_autos
            .iter()
            .map(|a| {
                let rows = transport_rows(&e, &e_table, a);
                keys.iter().map(|&(i, j)| lookup[&(rows[i], j)]).collect()
            })
            .collect();
        let order_v2 = 5 + r.order().trailing_zeros() - 1;
        let action = OutAction::new(out, labels, degrees, order_v2, gen_action);
        let p_ops = SignedProductOps::new(vec![full_group(&q8), full_group(&d8), full_group(&r)], &qf.minus);
        Ok(R1452 { e, e_table, p_ops, gen_autos, action })
    }

    pub fn enumerate(&self) -> Result<GenGroup<SignedProductOps>> {
        let ops = &self.p_ops;
        let mut gens = Vec::new();
        for i in 0..3 {
            for &g in &ops.factors[i].gen_indices() {
                gens.push(ops.embed(i, g));
            }
        }
        GenGroup::new(ops.clone(), gens)
    }

    pub fn oracle(&self) -> Result<OracleReport> {
        let p = self.enumerate()?;
        let inv: Vec<Vec<u32>> = self
            .gen_autos
            .iter()
            .map(|a| {
                let mut r = vec![0u32; a.len()];
                for (x, &y) in a.iter().enumerate() {
                    r[y as usize] = x as u32;
                }
                r
            })
            .collect();
        let e = &self.e;
        compare_with_oracle(&self.action, &p, |j, x| {
            let ex = e.index_of(&vec![x[0], x[1]]).expect("E-part is canonical");
            let y = e.elem(inv[j][ex as usize]);
            self.p_ops.canonical(vec![y[0], y[1], x[2]])
        })
    }
}

fn center_minus<O: GroupOps>(e: &GenGroup<O>) -> usize {
    let z = e.center();
    *z.iter().find(|&&x| x != 0).expect("nontrivial center") as usize
}

/// `row ↦ row ∘ a⁻¹` on a character table, for an automorphism `a` given as an
/// element permutation.
pub fn transport_rows<O: GroupOps>(g: &GenGroup<O>, t: &CharTable, a: &[u32]) -> Vec<usize> {
    let mut ainv = vec![0u32; a.len()];
    for (x, &y) in a.iter().enumerate() {
        ainv[y as usize] = x as u32;
    }
    let cl = g.classes();
    let cols: Vec<usize> = cl.reps.iter().map(|&r| cl.class_of[ainv[r as usize] as usize] as usize).collect();
    t.values
        .iter()
        .map(|row| {
            let v: Vec<u64> = cols.iter().map(|&c| row[c]).collect();
            t.find(&v).expect("automorphism permutes Irr")
        })
        .collect()
}

/// `A = F_2^4` with `Out = GL4(2)` acting naturally; labels are the 16 linear
/// characters `v ↦ (-1)^{u·v}`.
pub fn a_out_action() -> OutAction {
    let apply = |m: &[u8; 4], v: u32| -> u32 { (0..4).map(|i| ((m[i] as u32 & v).count_ones() & 1) << i).sum() };
    // rows of the matrices as bit masks
    let cycle: [u8; 4] = [0b1000, 0b0001, 0b0010, 0b0100];
    let transvection: [u8; 4] = [0b0011, 0b0010, 0b0100, 0b1000];
    let gens_m = [cycle, transvection];
    let ops = PermOps::new(16);
    let gens: Vec<Perm> = gens_m.iter().map(|m| (0..16).map(|v| apply(m, v)).collect()).collect();
    let out = GenGroup::new(ops, gens.clone()).expect("GL4(2)");
    let gen_action = gens
        .iter()
        .map(|g| {
            let mut ginv = vec![0u32; 16];
            for v in 0..16u32 {
                ginv[g[v as usize] as usize] = v;
            }
            (0..16u32)
                .map(|u| (0..16u32).find(|&u2| (0..16u32).all(|v| (u2 & v).count_ones() % 2 == (u & ginv[v as usize]).count_ones() % 2)).unwrap())
                .collect()
        })
        .collect();
    let labels = (0..16).map(|u| CharLabel::AbelianHom(vec![u])).collect();
    OutAction::new(out, labels, vec![1; 16], 4, gen_action)
}

/// [`a_out_action`] against the Dixon table of `F_2^4`, realised as four
/// disjoint transpositions.
pub fn a_oracle() -> Result<OracleReport> {
    let act = a_out_action();
    let encode = |v: u32| -> Perm { (0..8u32).map(|x| if v >> (x / 2) & 1 == 1 { x ^ 1 } else { x }).collect() };
    let decode = |x: &Perm| -> u32 { (0..4).filter(|&i| x[2 * i] != 2 * i as u32).map(|i| 1 << i).sum() };
    let p = GenGroup::new(PermOps::new(8), (0..4).map(|i| encode(1 << i)).collect())?;
    let invs: Vec<Vec<u32>> = act
        .out
        .gens()
        .iter()
        .map(|g| {
            let mut inv = vec![0u32; 16];
            for (v, &w) in g.iter().enumerate() {
                inv[w as usize] = v as u32;
            }
            inv
        })
        .collect();
    compare_with_oracle(&act, &p, |j, x| encode(invs[j][decode(x) as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::choose_q;
    use crate::weights::weights;

    #[test]
    fn gl42_has_order_20160_and_zero_weight() {
        let a = a_out_action();
        assert_eq!(a.out.order(), 20160);
        assert!(a.validate());
        let w = weights(&a).unwrap();
        assert_eq!(w.get(&4).copied().unwrap_or(0), 0);
        assert!(a_oracle().unwrap().passed());
    }

    #[test]
    fn extraspecial_out_is_s5_and_matches_dixon() {
        let qf = QuaternionFactors::new(1, choose_q(1)).unwrap();
        let m = R1452::new(&qf).unwrap();
        assert_eq!(m.e.order(), 32);
        assert_eq!(m.action.out.order(), 120);
        assert!(m.action.validate());
        assert!(m.oracle().unwrap().passed());
        let w = weights(&m.action).unwrap();
        let l = 1;
        assert_eq!(w.get(&(l + 4)).copied().unwrap_or(0), 0);
        assert_eq!(w[&(l + 6)], -2);
        assert_eq!(w[&(l + 7)], -8);
    }
}
