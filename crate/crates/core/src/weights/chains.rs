//! Chains `1 = X0 < X1 < ... < Xm` of elementary abelian 2-subgroups up to conjugacy.

use std::collections::HashMap;

use crate::algebra::group::{generators_of, GenGroup, GroupOps};
use crate::algebra::subgroups::{all_elementary_abelian_2subgroups, conjugate_subgroup, SubgroupHandle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// `X1 < ... < Xm` (the trivial `X0` is implicit)
    pub members: Vec<SubgroupHandle>,
    /// `I(σ)`, the intersection of the normalizers, as sorted element indices
    pub stabilizer: Vec<u32>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn sign(&self) -> i64 {
        if self.members.len() % 2 == 0 { 1 } else { -1 }
    }
}

pub fn chains_up_to_conj<O: GroupOps>(g: &GenGroup<O>) -> Vec<Chain> {
    let all: Vec<SubgroupHandle> = all_elementary_abelian_2subgroups(g).into_iter().skip(1).collect();
    let id: HashMap<SubgroupHandle, usize> = all.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let whole: Vec<u32> = (0..g.order() as u32).collect();
    let mut out = Vec::new();
    extend(g, &all, &id, Vec::new(), whole, &mut out);
    out
}

fn is_proper_subset(a: &[u32], b: &[u32]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

fn extend<O: GroupOps>(
    g: &GenGroup<O>,
    all: &[SubgroupHandle],
    id: &HashMap<SubgroupHandle, usize>,
    members: Vec<SubgroupHandle>,
    stab: Vec<u32>,
    out: &mut Vec<Chain>,
) {
    out.push(Chain { members: members.clone(), stabilizer: stab.clone() });
    let candidates: Vec<usize> = (0..all.len())
        .filter(|&i| match members.last() {
            None => true,
            Some(top) => is_proper_subset(top, &all[i]),
        })
        .collect();
    if candidates.is_empty() {
        return;
    }
    let gens = generators_of(g, &stab);
    let mut seen = vec![false; all.len()];
    for &c in &candidates {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        let mut orbit = vec![c];
        let mut k = 0;
        while k < orbit.len() {
            for &x in &gens {
                let j = id[&conjugate_subgroup(g, x, &all[orbit[k]])];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        let rep = *orbit.iter().min().unwrap();
        let x = &all[rep];
        let new_stab: Vec<u32> = stab.iter().copied().filter(|&s| conjugate_subgroup(g, s, x) == *x).collect();
        let mut m = members.clone();
        m.push(x.clone());
        extend(g, all, id, m, new_stab, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::perm::PermOps;

    #[test]
    fn s3_chains() {
        let ops = PermOps::new(3);
        let g = GenGroup::new(ops, vec![ops.from_cycles(&[&[0, 1, 2]]), ops.from_cycles(&[&[0, 1]])]).unwrap();
        let ch = chains_up_to_conj(&g);
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[0].stabilizer.len(), 6);
        assert_eq!(ch[1].stabilizer.len(), 2);
    }

    #[test]
    fn trivial_group() {
        let g = GenGroup::new(PermOps::new(1), vec![]).unwrap();
        let ch = chains_up_to_conj(&g);
        assert_eq!(ch.len(), 1);
        assert!(ch[0].is_empty());
    }
}
