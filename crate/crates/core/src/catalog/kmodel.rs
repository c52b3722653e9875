//! Subgroups `P = X1 X2 X3 ⟨t⟩` of `K = (SL2(q) ≀ S3)⟨(a,a,a)⟩ / ⟨(-1,-1,-1)⟩`
//! with `X_i ∈ {Q, Q', R}`, their `Out_K(P)` and the action on a labeled `Irr(P)`.

use std::collections::{BTreeMap, HashMap};

use super::qfactors::{Factor, QuaternionFactors};
use super::System;
use crate::algebra::group::{GenGroup, GroupOps};
use crate::algebra::kelem::{perm_inv, KElem, KOps, ID3};
use crate::algebra::matrix::{m2_identity, Mat2, Mat2Ops};
use crate::algebra::perm::PermOps;
use crate::characters::dixon::{dixon_table_mod, CharTable};
use crate::characters::label::CharLabel;
use crate::error::{Error, Result};
use crate::weights::oracle::{compare_with_oracle, OracleReport};
use crate::weights::outaction::OutAction;

pub const TAU: [u8; 3] = [1, 0, 2];

type CosetKey = ([u8; 3], [Mat2; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Label {
    Tensor([u16; 3]),
    Induced([u16; 3]),
    Ext([u16; 3], u8),
}

/// `X⟨m⟩` with, for every row of `X`, the least row of `X⟨m⟩` restricting to it.
struct ExtGroup {
    group: GenGroup<Mat2Ops>,
    table: CharTable,
    canonical: Vec<Option<usize>>,
}

impl ExtGroup {
    fn new(qf: &QuaternionFactors, x: Factor, m: &Mat2) -> Result<ExtGroup> {
        let data = qf.data(x);
        let mut gens = data.group.gens().to_vec();
        gens.push(*m);
        let group = GenGroup::new(qf.ops(), gens)?;
        let table = dixon_table_mod(&group, qf.prime)?;
        let xc = data.group.classes();
        let cols: Vec<usize> = xc
            .reps
            .iter()
            .map(|&r| group.classes().class_of[group.index_of(data.group.elem(r)).unwrap() as usize] as usize)
            .collect();
        let canonical = data
            .table
            .values
            .iter()
            .map(|row| table.values.iter().position(|big| cols.iter().zip(row).all(|(&c, v)| big[c] == *v)))
            .collect();
        Ok(ExtGroup { group, table, canonical })
    }

    fn value(&self, row: usize, g: &Mat2) -> u64 {
        let i = self.group.index_of(g).expect("element of the extension group");
        self.table.values[row][self.group.classes().class_of[i as usize] as usize]
    }
}

pub struct KSubgroup<'a> {
    pub qf: &'a QuaternionFactors,
    pub ops: KOps,
    pub factors: [Factor; 3],
    pub t: Option<KElem>,
    ext: Vec<Option<ExtGroup>>,
    labels: Vec<Label>,
    lookup: HashMap<Label, u32>,
    degrees: Vec<u64>,
}

impl<'a> KSubgroup<'a> {
    pub fn new(qf: &'a QuaternionFactors, factors: [Factor; 3], t: Option<KElem>) -> Result<KSubgroup<'a>> {
        let ops = KOps::new(qf.ctx.clone());
        let mut ext: Vec<Option<ExtGroup>> = vec![None, None, None];
        if let Some(t) = &t {
            let positions: &[usize] = if t.perm == ID3 { &[0, 1, 2] } else { &[2] };
            for &i in positions {
                ext[i] = Some(ExtGroup::new(qf, factors[i], &t.blocks[i])?);
            }
        }
        let mut k = KSubgroup { qf, ops, factors, t, ext, labels: vec![], lookup: HashMap::new(), degrees: vec![] };
        k.build_labels()?;
        Ok(k)
    }

    pub fn order_v2(&self) -> u32 {
        let s: u32 = self.factors.iter().map(|&x| self.qf.data(x).group.order().trailing_zeros()).sum();
        s - 1 + u32::from(self.t.is_some())
    }

    fn key0(&self, k: &KElem) -> CosetKey {
        let pi = perm_inv(k.perm);
        let blocks = std::array::from_fn(|i| self.qf.data(self.factors[pi[i] as usize]).coset_key(&k.blocks[i]));
        (k.perm, blocks)
    }

    fn key(&self, k: &KElem) -> CosetKey {
        match &self.t {
            None => self.key0(k),
            Some(t) => self.key0(k).min(self.key0(&self.ops.mul(k, t))),
        }
    }

    fn in_p0(&self, g: &KElem) -> bool {
        g.perm == ID3 && (0..3).all(|i| self.qf.data(self.factors[i]).contains(&g.blocks[i]))
    }

    /// Generators of `N_K(P0)` for the chosen system.
    fn p0_normalizer_gens(&self, system: System) -> Vec<KElem> {
        let qf = self.qf;
        let id = m2_identity();
        let mut gens = Vec::new();
        for i in 0..3 {
            for n in qf.normalizer_gens(self.factors[i]) {
                let mut b = [id; 3];
                b[i] = *n;
                gens.push(self.ops.canonical(b, ID3));
            }
        }
        let perms: Vec<[u8; 3]> = match system {
            System::F => vec![ID3, [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]],
            System::H => vec![ID3, TAU],
        };
        for p in perms {
            let pi = perm_inv(p);
            for c in 0..2u8 {
                let blocks: Option<Vec<Mat2>> =
                    (0..3).map(|i| qf.transporter(c, self.factors[pi[i] as usize], self.factors[i])).collect();
                if let Some(b) = blocks {
                    gens.push(self.ops.canonical([b[0], b[1], b[2]], p));
                }
            }
        }
        gens
    }

    /// Representatives of `N_K(P0)/P0`, identity first.
    fn omega(&self, system: System) -> Vec<KElem> {
        let gens = self.p0_normalizer_gens(system);
        let mut reps = vec![self.ops.identity()];
        let mut seen: HashMap<CosetKey, ()> = HashMap::from([(self.key0(&reps[0]), ())]);
        let mut i = 0;
        while i < reps.len() {
            for g in &gens {
                let y = self.ops.mul(&reps[i], g);
                if seen.insert(self.key0(&y), ()).is_none() {
                    reps.push(y);
                }
            }
            i += 1;
        }
        reps
    }

    /// Representatives of `Out_K(P) = N_K(P)/P`, identity first.
    pub fn out_reps(&self, system: System) -> Vec<KElem> {
        let omega = self.omega(system);
        let Some(t) = &self.t else { return omega };
        let kt = self.key0(t);
        let mut seen = HashMap::new();
        let mut reps = Vec::new();
        for k in omega {
            let c = self.ops.mul(&self.ops.mul(&k, t), &self.ops.inv(&k));
            if self.key0(&c) != kt {
                continue;
            }
            if seen.insert(self.key(&k), ()).is_none() {
                reps.push(k);
            }
        }
        reps
    }

    /// `Out_K(P)` as a permutation group on its own elements, with the
    /// `K`-representatives of its generators.
    pub fn out_group(&self, system: System) -> (GenGroup<PermOps>, Vec<KElem>) {
        let reps = self.out_reps(system);
        let n = reps.len();
        let pos: HashMap<CosetKey, u32> = reps.iter().enumerate().map(|(i, k)| (self.key(k), i as u32)).collect();
        let perm_of = |x: &KElem| -> Vec<u32> { reps.iter().map(|r| pos[&self.key(&self.ops.mul(r, x))]).collect() };
        let ops = PermOps::new(n.max(1));
        let mut gens: Vec<crate::algebra::perm::Perm> = Vec::new();
        let mut gen_elems = Vec::new();
        let mut members = vec![false; n];
        members[0] = true;
        for j in 1..n {
            if members[j] {
                continue;
            }
            gens.push(perm_of(&reps[j]).into_boxed_slice());
            gen_elems.push(reps[j].clone());
            let g = GenGroup::new(ops.clone(), gens.clone()).expect("Out is small");
            for p in g.elements() {
                members[p[0] as usize] = true;
            }
            if members.iter().all(|&b| b) {
                break;
            }
        }
        (GenGroup::new(ops, gens).expect("Out is small"), gen_elems)
    }

    fn build_labels(&mut self) -> Result<()> {
        let tabs: Vec<&CharTable> = self.factors.iter().map(|&x| &self.qf.data(x).table).collect();
        let faithful: Vec<&Vec<bool>> = self.factors.iter().map(|&x| &self.qf.data(x).faithful_center).collect();
        let mut tensors = Vec::new();
        for r0 in 0..tabs[0].len() {
            for r1 in 0..tabs[1].len() {
                for r2 in 0..tabs[2].len() {
                    if faithful[0][r0] ^ faithful[1][r1] ^ faithful[2][r2] {
                        continue;
                    }
                    tensors.push([r0 as u16, r1 as u16, r2 as u16]);
                }
            }
        }
        let deg = |th: &[u16; 3]| -> u64 { (0..3).map(|i| tabs[i].degrees[th[i] as usize]).product() };
        let mut labels = Vec::new();
        match self.t.clone() {
            None => labels.extend(tensors.iter().map(|&th| (Label::Tensor(th), deg(&th)))),
            Some(t) => {
                let maps = self.transport_maps(&t);
                for th in tensors {
                    let tt = apply_maps(&maps, &t, th);
                    if tt == th {
                        for e in 0..2 {
                            labels.push((Label::Ext(th, e), deg(&th)));
                        }
                    } else if th < tt {
                        labels.push((Label::Induced(th), 2 * deg(&th)));
                    }
                }
            }
        }
        labels.sort();
        self.lookup = labels.iter().enumerate().map(|(i, (l, _))| (*l, i as u32)).collect();
        self.degrees = labels.iter().map(|(_, d)| *d).collect();
        self.labels = labels.into_iter().map(|(l, _)| l).collect();
        if let Some(t) = &self.t {
            for th in self.labels.clone() {
                if let Label::Ext(th, _) = th {
                    let ok = if t.perm == ID3 {
                        (0..3).all(|i| self.ext[i].as_ref().unwrap().canonical[th[i] as usize].is_some())
                    } else {
                        self.ext[2].as_ref().unwrap().canonical[th[2] as usize].is_some()
                    };
                    if !ok {
                        return Err(Error::ExtensionHypothesisFails);
                    }
                }
            }
        }
        Ok(())
    }

    /// Row maps `θ_{π⁻¹(i)} ↦ (h ↦ θ_{π⁻¹(i)}(n_i⁻¹ h n_i))` for each position `i`.
    fn transport_maps(&self, k: &KElem) -> [Vec<u16>; 3] {
        let pi = perm_inv(k.perm);
        let mops = self.qf.ops();
        std::array::from_fn(|i| {
            let tgt = self.qf.data(self.factors[i]);
            let src = self.qf.data(self.factors[pi[i] as usize]);
            let ninv = mops.inv(&k.blocks[i]);
            let cols: Vec<usize> = tgt
                .group
                .classes()
                .reps
                .iter()
                .map(|&r| {
                    let pre = mops.conj(&ninv, tgt.group.elem(r));
                    let j = src.group.index_of(&pre).expect("k normalizes P0");
                    src.group.classes().class_of[j as usize] as usize
                })
                .collect();
            src.table
                .values
                .iter()
                .map(|row| {
                    let v: Vec<u64> = cols.iter().map(|&c| row[c]).collect();
                    tgt.table.find(&v).expect("transport of an irreducible") as u16
                })
                .collect()
        })
    }

    fn ext_value(&self, th: [u16; 3], g: &KElem) -> u64 {
        let fp = crate::characters::modp::Fp { p: self.qf.prime };
        if g.perm == ID3 {
            (0..3).fold(1, |acc, i| {
                let e = self.ext[i].as_ref().unwrap();
                fp.mul(acc, e.value(e.canonical[th[i] as usize].unwrap(), &g.blocks[i]))
            })
        } else {
            let mops = self.qf.ops();
            let d0 = self.qf.data(self.factors[0]);
            let v0 = d0.value(th[0] as usize, &mops.mul(&g.blocks[0], &g.blocks[1]));
            let e = self.ext[2].as_ref().unwrap();
            fp.mul(v0, e.value(e.canonical[th[2] as usize].unwrap(), &g.blocks[2]))
        }
    }

    /// An element of `P0 t` at which the canonical extension of `θ` is nonzero.
    fn witness(&self, th: [u16; 3]) -> KElem {
        let t = self.t.as_ref().unwrap();
        let mops = self.qf.ops();
        let nonzero_in = |i: usize| -> Mat2 {
            let e = self.ext[i].as_ref().unwrap();
            let row = e.canonical[th[i] as usize].unwrap();
            self.qf
                .data(self.factors[i])
                .group
                .elements()
                .iter()
                .map(|y| mops.mul(y, &t.blocks[i]))
                .find(|g| e.value(row, g) != 0)
                .expect("extension does not vanish on the coset")
        };
        if t.perm == ID3 {
            self.ops.canonical([nonzero_in(0), nonzero_in(1), nonzero_in(2)], ID3)
        } else {
            let g0 = mops.inv(&t.blocks[1]);
            self.ops.canonical([g0, t.blocks[1], nonzero_in(2)], t.perm)
        }
    }

    /// Permutation of label indices induced by `k ∈ N_K(P)`.
    pub fn act(&self, k: &KElem) -> Result<Vec<u32>> {
        let maps = self.transport_maps(k);
        let kinv = self.ops.inv(k);
        let fp = crate::characters::modp::Fp { p: self.qf.prime };
        let tmaps = self.t.as_ref().map(|t| (t, self.transport_maps(t)));
        let mut out = Vec::with_capacity(self.labels.len());
        for &lab in &self.labels {
            let image = match lab {
                Label::Tensor(th) => Label::Tensor(apply_maps(&maps, k, th)),
                Label::Induced(th) => {
                    let (t, tm) = tmaps.as_ref().unwrap();
                    let kt = apply_maps(&maps, k, th);
                    Label::Induced(kt.min(apply_maps(tm, t, kt)))
                }
                Label::Ext(th, e) => {
                    let kth = apply_maps(&maps, k, th);
                    let g = self.witness(kth);
                    let target = self.ext_value(kth, &g);
                    let pre = self.ops.mul(&self.ops.mul(&kinv, &g), k);
                    let v = self.ext_value(th, &pre);
                    let delta = if v == target {
                        0
                    } else if v == fp.neg(target) {
                        1
                    } else {
                        return Err(Error::ExtensionHypothesisFails);
                    };
                    Label::Ext(kth, e ^ delta)
                }
            };
            out.push(self.lookup[&image]);
        }
        Ok(out)
    }

    pub fn char_labels(&self) -> Vec<CharLabel> {
        let tensor = |th: &[u16; 3]| CharLabel::TensorProduct(th.iter().map(|&r| CharLabel::TableRow(r as u32)).collect());
        self.labels
            .iter()
            .map(|l| match l {
                Label::Tensor(th) => tensor(th),
                Label::Induced(th) => CharLabel::Induced(Box::new(tensor(th))),
                Label::Ext(th, e) => CharLabel::Extension(Box::new(tensor(th)), *e),
            })
            .collect()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn out_action(&self, system: System) -> Result<OutAction> {
        Ok(self.out_action_with_gens(system)?.0)
    }

    fn out_action_with_gens(&self, system: System) -> Result<(OutAction, Vec<KElem>)> {
        let (out, gen_elems) = self.out_group(system);
        let gen_action = gen_elems.iter().map(|k| self.act(k)).collect::<Result<Vec<_>>>()?;
        let act = OutAction::new(out, self.char_labels(), self.degrees.clone(), self.order_v2(), gen_action);
        Ok((act, gen_elems))
    }

    /// Defect histogram and orbit data against the Dixon table of the enumerated `P`.
    pub fn oracle(&self, system: System) -> Result<OracleReport> {
        let (act, gens) = self.out_action_with_gens(system)?;
        let p = self.enumerate()?;
        let ops = &self.ops;
        let invs: Vec<KElem> = gens.iter().map(|k| ops.inv(k)).collect();
        compare_with_oracle(&act, &p, |j, g| ops.mul(&ops.mul(&invs[j], g), &gens[j]))
    }

    /// Every label evaluates to a distinct row of the Dixon table of `P`.
    pub fn values_match_oracle(&self) -> Result<bool> {
        let p = self.enumerate()?;
        let table = dixon_table_mod(&p, self.qf.prime)?;
        let cols: Vec<Vec<u64>> = p.classes().reps.iter().map(|&r| self.evaluate(p.elem(r))).collect();
        let mut rows: Vec<usize> = Vec::new();
        for i in 0..self.labels.len() {
            let v: Vec<u64> = cols.iter().map(|c| c[i]).collect();
            match table.find(&v) {
                Some(r) => rows.push(r),
                None => return Ok(false),
            }
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(rows.len() == table.len() && rows.len() == self.labels.len())
    }

    /// `P` itself as an enumerated group.
    pub fn enumerate(&self) -> Result<GenGroup<KOps>> {
        let id = m2_identity();
        let mut gens = Vec::new();
        for i in 0..3 {
            for g in self.qf.data(self.factors[i]).group.gens() {
                let mut b = [id; 3];
                b[i] = *g;
                gens.push(self.ops.canonical(b, ID3));
            }
        }
        if let Some(t) = &self.t {
            gens.push(t.clone());
        }
        GenGroup::new(self.ops.clone(), gens)
    }

    /// Values of every label at an element of `P`, in the factor prime field.
    pub fn evaluate(&self, g: &KElem) -> Vec<u64> {
        let fp = crate::characters::modp::Fp { p: self.qf.prime };
        let tensor_at = |th: &[u16; 3], g: &KElem| -> u64 {
            (0..3).fold(1, |acc, i| fp.mul(acc, self.qf.data(self.factors[i]).value(th[i] as usize, &g.blocks[i])))
        };
        let inside = self.in_p0(g);
        let tmaps = self.t.as_ref().map(|t| (t, self.transport_maps(t)));
        self.labels
            .iter()
            .map(|l| match l {
                Label::Tensor(th) => tensor_at(th, g),
                Label::Induced(th) if inside => {
                    let (t, tm) = tmaps.as_ref().unwrap();
                    fp.add(tensor_at(th, g), tensor_at(&apply_maps(tm, t, *th), g))
                }
                Label::Induced(_) => 0,
                Label::Ext(th, _) if inside => tensor_at(th, g),
                Label::Ext(th, e) => {
                    let v = self.ext_value(*th, g);
                    if *e == 1 {
                        fp.neg(v)
                    } else {
                        v
                    }
                }
            })
            .collect()
    }

    /// Number of labels of each kind, for reporting.
    pub fn label_kinds(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        for l in &self.labels {
            let k = match l {
                Label::Tensor(_) => "tensor",
                Label::Induced(_) => "induced",
                Label::Ext(..) => "extension",
            };
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }
}

fn apply_maps(maps: &[Vec<u16>; 3], k: &KElem, th: [u16; 3]) -> [u16; 3] {
    let pi = perm_inv(k.perm);
    std::array::from_fn(|i| maps[i][th[pi[i] as usize] as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::choose_q;
    use crate::catalog::qfactors::Factor::*;

    fn twists(qf: &QuaternionFactors) -> (KElem, KElem, KElem) {
        let ops = KOps::new(qf.ctx.clone());
        let id = m2_identity();
        let tau = ops.canonical([id; 3], TAU);
        let ainv = qf.ops().inv(&qf.a);
        let taup = ops.mul(&ops.canonical([ainv, qf.a, qf.a], ID3), &tau);
        let c = ops.canonical([qf.a; 3], ID3);
        (tau, taup, c)
    }

    #[test]
    fn symbolic_irr_matches_dixon_at_l0() {
        let qf = QuaternionFactors::new(0, choose_q(0)).unwrap();
        let (tau, taup, c) = twists(&qf);
        for (f, t) in [([Q, Q, Q], None), ([Q, Q, Q], Some(tau)), ([Q, Q, Q], Some(taup)), ([R, R, R], Some(c))] {
            let k = KSubgroup::new(&qf, f, t).unwrap();
            assert!(k.values_match_oracle().unwrap());
            for sys in [System::H, System::F] {
                assert!(k.oracle(sys).unwrap().passed());
            }
        }
    }

    #[test]
    fn twisted_swap_matches_dixon_at_l1() {
        let qf = QuaternionFactors::new(1, choose_q(1)).unwrap();
        let (_, taup, _) = twists(&qf);
        let k = KSubgroup::new(&qf, [Q, Qp, R], Some(taup)).unwrap();
        assert!(k.values_match_oracle().unwrap());
        assert!(k.oracle(System::F).unwrap().passed());
    }
}
