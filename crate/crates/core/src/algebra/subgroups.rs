//! Elementary abelian 2-subgroups of an enumerated group.

use std::collections::HashMap;

use super::group::{GenGroup, GroupOps};

/// Subgroup as sorted element indices of its parent.
pub type SubgroupHandle = Vec<u32>;

pub fn involutions<O: GroupOps>(g: &GenGroup<O>) -> Vec<u32> {
    (1..g.order() as u32).filter(|&i| g.mul_idx(i, i) == 0).collect()
}

/// `x H x⁻¹` as sorted indices.
pub fn conjugate_subgroup<O: GroupOps>(g: &GenGroup<O>, x: u32, h: &[u32]) -> SubgroupHandle {
    let xi = g.inv_idx(x);
    let mut out: Vec<u32> = h.iter().map(|&e| g.mul_idx(g.mul_idx(x, e), xi)).collect();
    out.sort_unstable();
    out
}

/// Every elementary abelian 2-subgroup, ordered by size then by element indices.
pub fn all_elementary_abelian_2subgroups<O: GroupOps>(g: &GenGroup<O>) -> Vec<SubgroupHandle> {
    let invs = involutions(g);
    let mut all: Vec<SubgroupHandle> = vec![vec![0]];
    let mut level: Vec<SubgroupHandle> = vec![vec![0]];
    while !level.is_empty() {
        let mut next: HashMap<SubgroupHandle, ()> = HashMap::new();
        for e in &level {
            for &t in &invs {
                if e.binary_search(&t).is_ok() {
                    continue;
                }
                if e.iter().any(|&x| g.mul_idx(x, t) != g.mul_idx(t, x)) {
                    continue;
                }
                let mut bigger: Vec<u32> = e.iter().flat_map(|&x| [x, g.mul_idx(x, t)]).collect();
                bigger.sort_unstable();
                next.insert(bigger, ());
            }
        }
        let mut lv: Vec<SubgroupHandle> = next.into_keys().collect();
        lv.sort();
        all.extend(lv.iter().cloned());
        level = lv;
    }
    all
}

/// Representatives of conjugacy classes of elementary abelian 2-subgroups, each
/// paired with its normalizer. Representatives are the lexicographically least
/// member of each class.
pub fn elementary_abelian_2subgroups<O: GroupOps>(g: &GenGroup<O>) -> Vec<(SubgroupHandle, SubgroupHandle)> {
    let all = all_elementary_abelian_2subgroups(g);
    let id: HashMap<&SubgroupHandle, usize> = all.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let gens = g.gen_indices();
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    for i in 0..all.len() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let mut orbit = vec![i];
        let mut k = 0;
        while k < orbit.len() {
            for &x in &gens {
                let c = conjugate_subgroup(g, x, &all[orbit[k]]);
                let j = id[&c];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        let rep = all[i].clone();
        let norm = g.normalizer_of(&rep);
        out.push((rep, norm));
    }
    out
}
