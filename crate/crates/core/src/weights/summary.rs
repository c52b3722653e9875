//! `m(D, 0, d)`, class counts of `S`, and the conjecture battery.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::store::WeightStore;
use crate::catalog::sylow::{build_s_torus, class_counts as s_class_counts};
use crate::catalog::table::Spec;
use crate::catalog::System;
use crate::error::Result;

/// `w(D, 0)`, the number of weights of the principal block.
pub const WEIGHT_COUNT: i64 = 12;

/// One catalog row at one level, keyed by the offset `c` in `d = a l + c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub spec: Spec,
    pub system: System,
    pub l: u32,
    pub by_offset: BTreeMap<i64, i64>,
}

impl WeightRow {
    pub fn compute(store: &WeightStore, spec: Spec, system: System, l: u32) -> Result<WeightRow> {
        let w = store.row(spec, system, l)?;
        let shift = (spec.type_a() * l) as i64;
        Ok(WeightRow { spec, system, l, by_offset: w.into_iter().map(|(d, v)| (d as i64 - shift, v)).collect() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSummary {
    pub system: System,
    pub l: u32,
    pub by_d: BTreeMap<u32, i64>,
    pub total: i64,
}

pub fn m_summary(store: &WeightStore, system: System, l: u32) -> Result<WeightSummary> {
    let keys: Vec<_> = Spec::rows_at(l, system).into_iter().map(|s| (s, system, l)).collect();
    let mut by_d = BTreeMap::new();
    for row in store.rows(&keys)? {
        for (d, v) in row {
            *by_d.entry(d).or_insert(0) += v;
        }
    }
    let total = by_d.values().sum();
    Ok(WeightSummary { system, l, by_d, total })
}

pub fn m_total(store: &WeightStore, system: System, l: u32, d: u32) -> Result<i64> {
    Ok(m_summary(store, system, l)?.by_d.get(&d).copied().unwrap_or(0))
}

/// Class counts of `S` and `[S, S]`.
pub fn class_counts(store: &WeightStore, l: u32) -> Result<(usize, usize)> {
    let cat = store.catalog(l)?;
    Ok(s_class_counts(&build_s_torus(cat.torus())?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub item: u32,
    pub statement: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub system: System,
    pub l: u32,
    pub k: i64,
    pub items: Vec<CheckItem>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn item(item: u32, statement: &'static str, lhs: impl ToString, rhs: impl ToString, passed: bool) -> CheckItem {
    CheckItem { item, statement, lhs: lhs.to_string(), rhs: rhs.to_string(), passed }
}

/// The six checks, with `k(D, 0) := m(D, 0)`. Item (5) is taken at the
/// height-zero defect `d = v2|S|`.
pub fn conjecture_checks(store: &WeightStore, system: System, l: u32) -> Result<ConjectureReport> {
    let m = m_summary(store, system, l)?;
    let k = m.total;
    let top = 3 * l + 10;
    let (cc_s, cc_ds) = class_counts(store, l)?;
    let s_defects: Vec<u32> = store.row(Spec::S, system, l)?.keys().copied().collect();
    let md = |d: u32| m.by_d.get(&d).copied().unwrap_or(0);
    let order_s = BigInt::from(1) << top;

    let min_r = |nonzero: &dyn Fn(u32) -> bool| (1..=top).find(|&r| nonzero(top - r));
    let r_s = min_r(&|d| s_defects.contains(&d));
    let r_m = min_r(&|d| md(d) != 0);
    let negative: Vec<u32> = m.by_d.iter().filter(|(d, v)| **d > 0 && **v < 0).map(|(d, _)| *d).collect();
    let off_top: Vec<u32> = m.by_d.iter().filter(|(d, v)| **d != top && **v != 0).map(|(d, _)| *d).collect();
    let m_top = md(top);

    let items = vec![
        item(1, "k(D,0) <= |S|", k, &order_s, BigInt::from(k) <= order_s),
        item(2, "m(D,0,d) >= 0 for d > 0", format!("{negative:?}"), "[]", negative.is_empty()),
        item(3, "m(D,0,d) != 0 for some d != v2|S|", format!("{off_top:?}"), "non-empty", !off_top.is_empty()),
        item(4, "min r: Irr^{d-r}(S) != 0 equals min r: m(D,0,d-r) != 0", format!("{r_s:?}"), format!("{r_m:?}"), r_s.is_some() && r_s == r_m),
        item(5, "k(D,0)/m(D,0,v2|S|) <= k([S,S])", format!("{k}/{m_top}"), cc_ds, m_top > 0 && k <= m_top * cc_ds as i64),
        item(6, "k(D,0)/w(D,0) <= k(S)", format!("{k}/{WEIGHT_COUNT}"), cc_s, k <= WEIGHT_COUNT * cc_s as i64),
    ];
    Ok(ConjectureReport { system, l, k, items })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_level_summaries() {
        let store = WeightStore::new();
        let h = m_summary(&store, System::H, 0).unwrap();
        let f = m_summary(&store, System::F, 0).unwrap();
        assert_eq!((h.by_d[&6], f.by_d[&6]), (22, 5));
        assert_eq!((h.total, f.total), (72, 43));
        assert_eq!(m_total(&store, System::F, 1, 4).unwrap(), 2);
        assert!(conjecture_checks(&store, System::H, 0).unwrap().passed());
        assert_eq!(class_counts(&store, 0).unwrap(), (61, 28));
    }
}
