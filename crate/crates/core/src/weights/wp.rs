//! The alternating weight sum over chains and character orbits.

use std::collections::BTreeMap;

use dashmap::DashMap;

use super::chains::{chains_up_to_conj, Chain};
use super::outaction::OutAction;
use crate::algebra::group::generators_of;
use crate::characters::zcount::z_defect_zero;
use crate::error::Result;
use crate::par;

/// `d -> w_P(d)` for every defect carried by `Irr(P)`.
pub type WeightMap = BTreeMap<u32, i64>;

/// Memoized `z` of subgroups of one Out-group, keyed by element set.
#[derive(Default)]
pub struct ZCache {
    map: DashMap<Vec<u32>, u64>,
}

impl ZCache {
    pub fn z(&self, act: &OutAction, sub: &[u32]) -> Result<u64> {
        if let Some(v) = self.map.get(sub) {
            return Ok(*v);
        }
        let v = z_defect_zero(&act.out.subgroup(sub))?;
        self.map.insert(sub.to_vec(), v);
        Ok(v)
    }
}

/// One chain's contribution before the sign: `d -> Σ_μ z(I(σ, μ))` over `I(σ)`-orbits.
pub fn chain_term(act: &OutAction, chain: &Chain, cache: &ZCache) -> Result<BTreeMap<u32, i64>> {
    let stab = &chain.stabilizer;
    let gens = generators_of(&act.out, stab);
    let n = act.len();
    let mut seen = vec![false; n];
    let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
    for mu in 0..n {
        if seen[mu] {
            continue;
        }
        seen[mu] = true;
        let mut orbit = vec![mu as u32];
        let mut k = 0;
        while k < orbit.len() {
            for &x in &gens {
                let y = act.images[x as usize][orbit[k] as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        let st: Vec<u32> = stab.iter().copied().filter(|&s| act.images[s as usize][mu] == mu as u32).collect();
        debug_assert_eq!(st.len() * orbit.len(), stab.len());
        let z = cache.z(act, &st)? as i64;
        *acc.entry(act.defect(mu)).or_default() += z;
    }
    Ok(acc)
}

/// `w_P(d)` for all `d`, summing over chain classes.
pub fn weights(act: &OutAction) -> Result<WeightMap> {
    let chains = chains_up_to_conj(&act.out);
    let cache = ZCache::default();
    let terms: Vec<Result<BTreeMap<u32, i64>>> = par::map_collect(chains.clone(), |c| chain_term(act, c, &cache));
    let mut total: WeightMap = BTreeMap::new();
    for i in 0..act.len() {
        total.entry(act.defect(i)).or_insert(0);
    }
    for (c, t) in chains.iter().zip(terms) {
        for (d, v) in t? {
            *total.entry(d).or_default() += c.sign() * v;
        }
    }
    Ok(total)
}
