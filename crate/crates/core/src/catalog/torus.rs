//! Subgroups `P = T ⋊ P̄` of `T ⋊ (GL3(2) × <-I>)` with `T = (Z/2^{l+2})^3`.
//!
//! `Irr(P)` is labeled by pairs `(u, β)`: `u` the least vector of a `P̄`-orbit on
//! `T* = T` (pairing `u·v`), `β ∈ Irr(Stab_P̄(u))`; the character is induced from
//! `θ_u` extended trivially on the complement, times `β`.

use std::collections::HashMap;

use crate::algebra::group::{generators_of, GenGroup, GroupOps};
use crate::algebra::perm::Perm;
use crate::algebra::residue::{Affine, AffineOps, Mat3, Mat3Ops, ResidueCtx};
use crate::characters::dixon::{dixon_table, CharTable};
use crate::characters::label::CharLabel;
use crate::error::Result;
use crate::weights::oracle::{compare_with_oracle, OracleReport};
use crate::weights::outaction::{perm_group_from_elements, OutAction};

const ID: Mat3 = [1, 0, 0, 0, 1, 0, 0, 0, 1];

fn pow3(r: &ResidueCtx, a: &Mat3, n: u32) -> Mat3 {
    (0..n).fold(ID, |acc, _| r.mat_mul(&acc, a))
}

/// `A^2 = B^3 = (AB)^7 = [A,B]^4 = 1`, a presentation of GL3(2).
fn relations_hold(r: &ResidueCtx, a: &Mat3, b: &Mat3) -> bool {
    if pow3(r, a, 2) != ID || pow3(r, b, 3) != ID {
        return false;
    }
    let ab = r.mat_mul(a, b);
    if pow3(r, &ab, 7) != ID {
        return false;
    }
    let comm = r.mat_mul(&r.mat_mul(&ab, a), &pow3(r, b, 2));
    pow3(r, &comm, 4) == ID
}

fn all_mod2() -> Vec<Mat3> {
    (0u32..512).map(|bits| std::array::from_fn(|i| (bits >> i) & 1)).collect()
}

/// Standard generators of GL3(2) lifted to GL3(Z/2^k) one bit at a time.
pub fn lift_gl32(k: u32) -> (Mat3, Mat3) {
    let r2 = ResidueCtx::new(1);
    let mats = all_mod2();
    let (mut a, mut b) = mats
        .iter()
        .filter(|a| **a != ID && pow3(&r2, a, 2) == ID)
        .find_map(|a| mats.iter().find(|b| relations_hold(&r2, a, b)).map(|b| (*a, *b)))
        .expect("GL3(2) generators");
    for j in 1..k {
        let r = ResidueCtx::new(j + 1);
        let step = 1u32 << j;
        let lifts = |m: &Mat3| -> Vec<Mat3> {
            mats.iter().map(|d| std::array::from_fn(|i| (m[i] + step * d[i]) % r.modulus())).collect()
        };
        let la: Vec<Mat3> = lifts(&a).into_iter().filter(|x| pow3(&r, x, 2) == ID).collect();
        let lb: Vec<Mat3> = lifts(&b).into_iter().filter(|x| pow3(&r, x, 3) == ID).collect();
        let found = la.iter().find_map(|x| lb.iter().find(|y| relations_hold(&r, x, y)).map(|y| (*x, *y)));
        (a, b) = found.expect("GL3(2) lifts to Z/2^k");
    }
    (a, b)
}

/// `G = G0 × <-I>` with its distinguished 2-local subgroups.
pub struct TorusAmbient {
    pub l: u32,
    pub r: ResidueCtx,
    pub g: GenGroup<Mat3Ops>,
    pub g0: Vec<u32>,
    pub minus_i: u32,
    /// Sylow 2-subgroup of `G0`
    pub d8: Vec<u32>,
    /// stabilizers in `G0` of the D8-fixed point and line of `T[2]`
    pub s4_point: Vec<u32>,
    pub s4_line: Vec<u32>,
    pub v_point: Vec<u32>,
    pub v_line: Vec<u32>,
}

fn reduce2(m: &Mat3) -> [u32; 9] {
    std::array::from_fn(|i| m[i] & 1)
}

fn mv2(m: &[u32; 9], v: [u32; 3]) -> [u32; 3] {
    std::array::from_fn(|i| (0..3).map(|t| m[3 * i + t] * v[t]).sum::<u32>() & 1)
}

impl TorusAmbient {
    pub fn new(l: u32) -> TorusAmbient {
        let r = ResidueCtx::new(l + 2);
        let (a, b) = lift_gl32(l + 2);
        let ops = Mat3Ops(r);
        let g0grp = GenGroup::new(ops, vec![a, b]).unwrap();
        assert_eq!(g0grp.order(), 168);
        let mi = r.neg_mat(&ID);
        let g = GenGroup::new(ops, vec![a, b, mi]).unwrap();
        let g0: Vec<u32> = {
            let mut v: Vec<u32> = g0grp.elements().iter().map(|e| g.index_of(e).unwrap()).collect();
            v.sort_unstable();
            v
        };
        let minus_i = g.index_of(&mi).unwrap();
        // a Sylow 2-subgroup: an element of order 4 with a non-commuting involution
        let four = *g0.iter().find(|&&x| ops.order_of(g.elem(x)) == 4).unwrap();
        let d8 = g0
            .iter()
            .filter(|&&y| ops.order_of(g.elem(y)) == 2)
            .map(|&y| g.subgroup_closure(&[four, y]))
            .find(|s| s.len() == 8)
            .unwrap();
        let nonzero: Vec<[u32; 3]> = (1..8u32).map(|b| [b & 1, (b >> 1) & 1, (b >> 2) & 1]).collect();
        let point = *nonzero.iter().find(|v| d8.iter().all(|&x| mv2(&reduce2(g.elem(x)), **v) == **v)).unwrap();
        // the invariant line is the kernel of the invariant dual vector
        let dual = *nonzero
            .iter()
            .find(|u| {
                d8.iter().all(|&x| {
                    let m = reduce2(g.elem(x));
                    (0..3).all(|j| (0..3).map(|t| u[t] * m[3 * t + j]).sum::<u32>() & 1 == u[j])
                })
            })
            .unwrap();
        let s4_point: Vec<u32> = g0.iter().copied().filter(|&x| mv2(&reduce2(g.elem(x)), point) == point).collect();
        let s4_line: Vec<u32> = g0
            .iter()
            .copied()
            .filter(|&x| {
                let m = reduce2(g.elem(x));
                (0..3).all(|j| (0..3).map(|t| dual[t] * m[3 * t + j]).sum::<u32>() & 1 == dual[j])
            })
            .collect();
        let core = |s4: &[u32]| -> Vec<u32> {
            d8.iter()
                .copied()
                .filter(|&x| {
                    s4.iter().all(|&s| {
                        let c = g.mul_idx(g.mul_idx(s, x), g.inv_idx(s));
                        d8.binary_search(&c).is_ok()
                    })
                })
                .collect()
        };
        let v_point = core(&s4_point);
        let v_line = core(&s4_line);
        TorusAmbient { l, r, g, g0, minus_i, d8, s4_point, s4_line, v_point, v_line }
    }

    pub fn modulus(&self) -> u32 {
        self.r.modulus()
    }

    /// `H × <-I>` for `H ≤ G0`.
    pub fn with_minus(&self, h: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = h.iter().flat_map(|&x| [x, self.g.mul_idx(x, self.minus_i)]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn encode(&self, u: [u32; 3]) -> usize {
        let m = self.modulus() as usize;
        u[0] as usize + m * (u[1] as usize + m * u[2] as usize)
    }

    pub fn decode(&self, i: usize) -> [u32; 3] {
        let m = self.modulus() as usize;
        [(i % m) as u32, ((i / m) % m) as u32, (i / (m * m)) as u32]
    }
}

/// Labeled `Irr(T ⋊ P̄)`.
pub struct TorusIrr {
    pub pbar: Vec<u32>,
    pub order_v2: u32,
    /// per label: (orbit representative code, stabilizer id, row of its table)
    pub labels: Vec<(usize, usize, usize)>,
    pub degrees: Vec<u64>,
    pub stabilizers: Vec<Vec<u32>>,
    pub tables: Vec<CharTable>,
    groups: Vec<GenGroup<Mat3Ops>>,
    /// `(code, stabilizer id, row) -> label`
    lookup: HashMap<(usize, usize), usize>,
    first_label: Vec<u32>,
}

impl TorusIrr {
    pub fn new(amb: &TorusAmbient, pbar: &[u32]) -> TorusIrr {
        let n = (amb.modulus() as usize).pow(3);
        let pmats: Vec<Mat3> = pbar.iter().map(|&p| *amb.g.elem(p)).collect();
        let order_v2 = 3 * (amb.l + 2) + pbar.len().trailing_zeros();
        let mut seen = vec![false; n];
        let mut stabilizers: Vec<Vec<u32>> = Vec::new();
        let mut stab_id: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut reps: Vec<(usize, usize, usize)> = Vec::new();
        for code in 0..n {
            if seen[code] {
                continue;
            }
            let u = amb.decode(code);
            let mut st = Vec::new();
            let mut orbit = 0;
            for (k, m) in pmats.iter().enumerate() {
                let w = amb.encode(amb.r.vec_mat(&u, m));
                if w == code {
                    st.push(pbar[k]);
                }
                if !seen[w] {
                    seen[w] = true;
                    orbit += 1;
                }
            }
            st.sort_unstable();
            let sid = *stab_id.entry(st.clone()).or_insert_with(|| {
                stabilizers.push(st);
                stabilizers.len() - 1
            });
            reps.push((code, sid, orbit));
        }
        let groups: Vec<GenGroup<Mat3Ops>> = stabilizers.iter().map(|s| amb.g.subgroup(s)).collect();
        let tables: Vec<CharTable> = groups.iter().map(|h| dixon_table(h).expect("small stabilizer")).collect();
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut lookup = HashMap::new();
        let mut first_label = vec![u32::MAX; n];
        for (code, sid, orbit) in reps {
            first_label[code] = labels.len() as u32;
            for (row, &deg) in tables[sid].degrees.iter().enumerate() {
                lookup.insert((code, row), labels.len());
                labels.push((code, sid, row));
                degrees.push(orbit as u64 * deg);
            }
        }
        TorusIrr { pbar: pbar.to_vec(), order_v2, labels, degrees, stabilizers, tables, groups, lookup, first_label }
    }

    pub fn char_labels(&self, amb: &TorusAmbient) -> Vec<CharLabel> {
        self.labels
            .iter()
            .map(|&(code, _, row)| {
                CharLabel::LittleGroups(
                    Box::new(CharLabel::AbelianHom(amb.decode(code).to_vec())),
                    Box::new(CharLabel::TableRow(row as u32)),
                )
            })
            .collect()
    }

    /// Image of every label under conjugation by `g ∈ N_G(P̄)`.
    pub fn act(&self, amb: &TorusAmbient, g: u32) -> Vec<u32> {
        let r = &amb.r;
        let gm = amb.g.elem(g);
        let ginv = r.mat_inv(gm);
        let pmats: Vec<Mat3> = self.pbar.iter().map(|&p| *amb.g.elem(p)).collect();
        let mut out = vec![0u32; self.labels.len()];
        let mut cache: HashMap<usize, (usize, u32)> = HashMap::new();
        for (i, &(code, sid, row)) in self.labels.iter().enumerate() {
            let (target, h) = *cache.entry(code).or_insert_with(|| {
                let u1 = r.vec_mat(&amb.decode(code), &ginv);
                let (best, k) = pmats
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (amb.encode(r.vec_mat(&u1, p)), k))
                    .min()
                    .unwrap();
                // h = p0⁻¹ g
                let h = amb.g.mul_idx(amb.g.inv_idx(self.pbar[k]), g);
                (best, h)
            });
            let tsid = self.labels[self.first_label[target] as usize].1;
            // β'(s) = β(h⁻¹ s h) on the target stabilizer
            let tgrp = &self.groups[tsid];
            let sgrp = &self.groups[sid];
            let hinv = amb.g.inv_idx(h);
            let vals: Vec<u64> = tgrp
                .classes()
                .reps
                .iter()
                .map(|&rep| {
                    let s = amb.g.index_of(tgrp.elem(rep)).unwrap();
                    let pre = amb.g.mul_idx(amb.g.mul_idx(hinv, s), h);
                    let local = sgrp.index_of(amb.g.elem(pre)).expect("stabilizers correspond");
                    self.tables[sid].values[row][sgrp.classes().class_of[local as usize] as usize]
                })
                .collect();
            let trow = self.tables[tsid].find(&vals).expect("transported character is irreducible");
            out[i] = self.lookup[&(target, trow)] as u32;
        }
        out
    }
}

/// `Out = N_{ambient}(P̄)/P̄` acting on the labeled `Irr(P)`.
pub fn torus_out_action(amb: &TorusAmbient, pbar: &[u32], ambient: &[u32]) -> OutAction {
    torus_out_action_with_gens(amb, pbar, ambient).0
}

/// The Out-action together with a representative in `G` of every Out generator.
pub fn torus_out_action_with_gens(amb: &TorusAmbient, pbar: &[u32], ambient: &[u32]) -> (OutAction, Vec<u32>) {
    let irr = TorusIrr::new(amb, pbar);
    let g = &amb.g;
    let normalizer: Vec<u32> = ambient
        .iter()
        .copied()
        .filter(|&x| pbar.iter().all(|&p| pbar.binary_search(&g.mul_idx(g.mul_idx(x, p), g.inv_idx(x))).is_ok()))
        .collect();
    // cosets xP̄ keyed by their least element
    let coset_key = |x: u32| -> u32 { pbar.iter().map(|&p| g.mul_idx(x, p)).min().unwrap() };
    let mut reps: Vec<u32> = Vec::new();
    let mut key_pos: HashMap<u32, usize> = HashMap::new();
    for &x in &normalizer {
        let k = coset_key(x);
        if !key_pos.contains_key(&k) {
            key_pos.insert(k, reps.len());
            reps.push(x);
        }
    }
    // identity coset first
    let id_pos = key_pos[&coset_key(0)];
    reps.swap(0, id_pos);
    let key_pos: HashMap<u32, usize> = reps.iter().enumerate().map(|(i, &x)| (coset_key(x), i)).collect();
    let nout = reps.len();
    let elems: Vec<Perm> = reps
        .iter()
        .map(|&x| (0..nout).map(|j| key_pos[&coset_key(g.mul_idx(reps[j], x))] as u32).collect())
        .collect();
    let out = perm_group_from_elements(nout, elems);
    let gen_action: Vec<Vec<u32>> = out
        .gens()
        .iter()
        .map(|p| {
            let pos = out.index_of(p).unwrap() as usize;
            irr.act(amb, reps[pos])
        })
        .collect();
    let gen_reps = out.gens().iter().map(|p| reps[out.index_of(p).unwrap() as usize]).collect();
    let labels = irr.char_labels(amb);
    (OutAction::new(out, labels, irr.degrees.clone(), irr.order_v2, gen_action), gen_reps)
}

/// `T ⋊ P̄` as a group of affine maps `x ↦ Mx + v`.
pub fn enumerate_p(amb: &TorusAmbient, pbar: &[u32]) -> Result<GenGroup<AffineOps>> {
    let ops = AffineOps(amb.r);
    let mut gens: Vec<Affine> = (0..3)
        .map(|i| {
            let mut v = [0; 3];
            v[i] = 1;
            Affine { v, m: amb.r.identity3() }
        })
        .collect();
    let sub = amb.g.subgroup(pbar);
    gens.extend(generators_of(&sub, &(0..sub.order() as u32).collect::<Vec<_>>()).iter().map(|&i| Affine { v: [0; 3], m: *sub.elem(i) }));
    GenGroup::new(ops, gens)
}

/// Defect histogram and orbit data against the Dixon table of `T ⋊ P̄`.
pub fn torus_oracle(amb: &TorusAmbient, pbar: &[u32], ambient: &[u32]) -> Result<OracleReport> {
    let (act, gens) = torus_out_action_with_gens(amb, pbar, ambient);
    let p = enumerate_p(amb, pbar)?;
    let ops = AffineOps(amb.r);
    let lin: Vec<(Affine, Affine)> = gens
        .iter()
        .map(|&g| {
            let m = *amb.g.elem(g);
            (Affine { v: [0; 3], m }, Affine { v: [0; 3], m: amb.r.mat_inv(&m) })
        })
        .collect();
    compare_with_oracle(&act, &p, |j, x| ops.mul(&ops.mul(&lin[j].1, x), &lin[j].0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifted_generators_satisfy_relations() {
        for k in 2..6 {
            let (a, b) = lift_gl32(k);
            assert!(relations_hold(&ResidueCtx::new(k), &a, &b));
        }
    }

    #[test]
    fn torus_irr_matches_dixon_at_l0() {
        let amb = TorusAmbient::new(0);
        let all: Vec<u32> = (0..amb.g.order() as u32).collect();
        let point = amb.with_minus(&amb.s4_point);
        for (pbar, ambient) in [
            (amb.with_minus(&amb.d8), &all),
            (amb.with_minus(&[0]), &all),
            (amb.with_minus(&amb.v_point), &all),
            (amb.with_minus(&amb.v_point), &point),
            (amb.with_minus(&amb.v_line), &all),
        ] {
            let rep = torus_oracle(&amb, &pbar, ambient).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
