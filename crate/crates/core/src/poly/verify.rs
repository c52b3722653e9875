//! Fitting computed rows to polynomials and diffing them against the golden tables.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::golden::{Family, GoldenEntry, GoldenTable};
use super::{int, interpolate_levels, LinearForm, RationalPoly};
use crate::catalog::table::Spec;
use crate::catalog::System;
use crate::error::Result;
use crate::weights::store::WeightStore;
use crate::weights::summary::m_summary;

/// Highest level sampled anywhere.
pub const MAX_LEVEL: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FittedRow {
    pub spec: Spec,
    pub system: System,
    pub type_a: u32,
    pub levels: Vec<u32>,
    /// offset `c` in `d = a l + c`
    pub cells: BTreeMap<i64, RationalPoly>,
}

impl FittedRow {
    pub fn family(&self, offset: i64) -> LinearForm {
        LinearForm::new(self.type_a as i64, offset)
    }
}

/// Samples at `l = 1..=a+1`, plus `l = a+2` as an overdetermined check when it is at most [`MAX_LEVEL`].
pub fn sample_levels(spec: Spec) -> Vec<u32> {
    let a = spec.type_a();
    let top = if a + 2 <= MAX_LEVEL { a + 2 } else { a + 1 };
    (1..=top).collect()
}

pub fn fit_row(store: &WeightStore, spec: Spec, system: System) -> Result<FittedRow> {
    let a = spec.type_a();
    let levels = sample_levels(spec);
    let keys: Vec<_> = levels.iter().map(|&l| (spec, system, l)).collect();
    let rows = store.rows(&keys)?;
    let shifted: Vec<BTreeMap<i64, i64>> =
        rows.iter().zip(&levels).map(|(w, &l)| w.iter().map(|(&d, &v)| (d as i64 - (a * l) as i64, v)).collect()).collect();
    let offsets: BTreeSet<i64> = shifted.iter().flat_map(|m| m.keys().copied()).collect();
    let mut cells = BTreeMap::new();
    for c in offsets {
        let samples: Vec<(u32, i64)> = levels.iter().zip(&shifted).map(|(&l, m)| (l, m.get(&c).copied().unwrap_or(0))).collect();
        cells.insert(c, interpolate_levels(&samples, a as usize)?);
    }
    Ok(FittedRow { spec, system, type_a: a, levels, cells })
}

pub fn fit_rows(store: &WeightStore, system: System) -> Result<Vec<FittedRow>> {
    let specs = Spec::rows_at(1, system);
    let keys: Vec<_> = specs.iter().flat_map(|&s| sample_levels(s).into_iter().map(move |l| (s, system, l))).collect();
    store.rows(&keys)?;
    specs.into_iter().map(|s| fit_row(store, s, system)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub table: u8,
    pub label: String,
    pub system: System,
    pub family: Family,
    pub expected: Option<RationalPoly>,
    pub got: Option<RationalPoly>,
}

impl CellDiff {
    /// Equal values, an absent cell counting as zero.
    pub fn ok(&self) -> bool {
        let z = RationalPoly::default();
        self.expected.as_ref().unwrap_or(&z) == self.got.as_ref().unwrap_or(&z)
    }

    /// Both sides agree on whether the cell exists at all.
    pub fn presence_agrees(&self) -> bool {
        self.expected.is_some() == self.got.is_some()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub cells: Vec<CellDiff>,
}

impl DiffReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(CellDiff::ok)
    }

    pub fn mismatches(&self) -> Vec<&CellDiff> {
        self.cells.iter().filter(|c| !c.ok()).collect()
    }

    pub fn extend(&mut self, o: DiffReport) {
        self.cells.extend(o.cells);
    }
}

/// Fitted rows against the generic-level table.
pub fn verify_wpdod(store: &WeightStore, system: System) -> Result<DiffReport> {
    let golden = GoldenTable::table3();
    let mut report = DiffReport::default();
    for row in fit_rows(store, system)? {
        let label = row.spec.id();
        let mut fams: BTreeSet<Family> = golden.row(label, system).iter().map(|e| e.family).collect();
        fams.extend(row.cells.keys().map(|&c| Family::Defect(row.family(c))));
        for family in fams {
            let Family::Defect(f) = family else { continue };
            let got = (f.slope == row.type_a as i64).then(|| row.cells.get(&f.intercept).cloned()).flatten();
            report.cells.push(CellDiff { table: 3, label: label.into(), system, family, expected: golden.get(label, system, family).cloned(), got });
        }
    }
    Ok(report)
}

/// Per-family sums of fitted rows, plus the total under [`Family::Total`].
pub fn fitted_m(rows: &[FittedRow]) -> BTreeMap<Family, RationalPoly> {
    let mut m: BTreeMap<Family, RationalPoly> = BTreeMap::new();
    let mut total = RationalPoly::default();
    for r in rows {
        for (&c, p) in &r.cells {
            *m.entry(Family::Defect(r.family(c))).or_default() += p;
            total += p;
        }
    }
    m.insert(Family::Total, total);
    m
}

fn value(p: Option<&RationalPoly>, x: i64) -> BigRational {
    p.map(|p| p.eval_int(x)).unwrap_or_else(BigRational::zero)
}

/// Fitted sums against the summary table, the summary table at `x = 1` against
/// the `l = 0` table, and the computed `l = 0` rows against the `l = 0` table.
pub fn verify_m(store: &WeightStore, system: System) -> Result<DiffReport> {
    let t1 = GoldenTable::table1();
    let t2 = GoldenTable::table2();
    let rows = fit_rows(store, system)?;
    let fitted = fitted_m(&rows);
    let mut report = DiffReport::default();

    let mut fams: BTreeSet<Family> = t1.row("m", system).iter().map(|e| e.family).collect();
    fams.extend(fitted.keys().copied());
    for family in fams {
        let got = fitted.get(&family).cloned();
        report.cells.push(CellDiff { table: 1, label: "m".into(), system, family, expected: t1.get("m", system, family).cloned(), got });
    }

    // summary table specialised to l = 0
    let mut at0: BTreeMap<i64, BigRational> = BTreeMap::new();
    let mut total0 = BigRational::zero();
    for e in t1.row("m", system) {
        match e.family {
            Family::Defect(f) => *at0.entry(f.at(0)).or_insert_with(BigRational::zero) += value(Some(&e.poly), 1),
            Family::Total => total0 = value(Some(&e.poly), 1),
        }
    }
    let summary0 = m_summary(store, system, 0)?;
    let mut ds: BTreeSet<i64> = at0.keys().copied().collect();
    ds.extend(t2.row("m", system).iter().filter_map(|e| match e.family {
        Family::Defect(f) => Some(f.intercept),
        Family::Total => None,
    }));
    ds.extend(summary0.by_d.keys().map(|&d| d as i64));
    let mut t2_total = BigRational::zero();
    for d in ds {
        let family = Family::Defect(LinearForm::new(0, d));
        let expected = t2.get("m", system, family).cloned();
        t2_total += value(expected.as_ref(), 1);
        let specialised = at0.get(&d).cloned().map(RationalPoly::constant);
        report.cells.push(CellDiff { table: 12, label: "m@x=1".into(), system, family, expected: expected.clone(), got: specialised });
        let computed = summary0.by_d.get(&(d as u32)).map(|&v| RationalPoly::constant(int(v)));
        report.cells.push(CellDiff { table: 2, label: "m".into(), system, family, expected, got: computed });
    }
    report.cells.push(CellDiff {
        table: 12,
        label: "m@x=1".into(),
        system,
        family: Family::Total,
        expected: Some(RationalPoly::constant(t2_total)),
        got: Some(RationalPoly::constant(total0)),
    });

    for spec in Spec::rows_at(0, system) {
        let w = store.row(spec, system, 0)?;
        let label = spec.id();
        let mut ds: BTreeSet<i64> = w.keys().map(|&d| d as i64).collect();
        ds.extend(t2.row(label, system).iter().filter_map(|e| match e.family {
            Family::Defect(f) => Some(f.intercept),
            Family::Total => None,
        }));
        for d in ds {
            let family = Family::Defect(LinearForm::new(0, d));
            let got = w.get(&(d as u32)).map(|&v| RationalPoly::constant(int(v)));
            report.cells.push(CellDiff { table: 2, label: label.into(), system, family, expected: t2.get(label, system, family).cloned(), got });
        }
    }
    Ok(report)
}

/// Computed rows at one level against the tables evaluated at `x = 2^l`: the
/// generic table for `l >= 1`, the `l = 0` table otherwise, and the summary
/// table summed over defects that coincide at this level.
pub fn verify_level(store: &WeightStore, system: System, l: u32) -> Result<DiffReport> {
    let t1 = GoldenTable::table1();
    let rows_table = if l == 0 { GoldenTable::table2() } else { GoldenTable::table3() };
    let table = if l == 0 { 2 } else { 3 };
    let specs = Spec::rows_at(l, system);
    let keys: Vec<_> = specs.iter().map(|&s| (s, system, l)).collect();
    let computed = store.rows(&keys)?;
    let mut report = DiffReport::default();
    for (spec, w) in specs.iter().zip(&computed) {
        let label = spec.id();
        let mut expected: BTreeMap<i64, BigRational> = BTreeMap::new();
        for e in rows_table.row(label, system) {
            if let Family::Defect(f) = e.family {
                *expected.entry(f.at(l)).or_insert_with(BigRational::zero) += e.poly.at_level(l);
            }
        }
        let mut ds: BTreeSet<i64> = expected.keys().copied().collect();
        ds.extend(w.keys().map(|&d| d as i64));
        for d in ds {
            report.cells.push(CellDiff {
                table,
                label: label.into(),
                system,
                family: Family::Defect(LinearForm::new(0, d)),
                expected: expected.get(&d).cloned().map(RationalPoly::constant),
                got: w.get(&(d as u32)).map(|&v| RationalPoly::constant(int(v))),
            });
        }
    }
    let mut m_exp: BTreeMap<i64, BigRational> = BTreeMap::new();
    let mut total_exp = BigRational::zero();
    for e in t1.row("m", system) {
        match e.family {
            Family::Defect(f) => *m_exp.entry(f.at(l)).or_insert_with(BigRational::zero) += e.poly.at_level(l),
            Family::Total => total_exp = e.poly.at_level(l),
        }
    }
    let mut m_got: BTreeMap<i64, i64> = BTreeMap::new();
    for w in &computed {
        for (&d, &v) in w {
            *m_got.entry(d as i64).or_insert(0) += v;
        }
    }
    let mut ds: BTreeSet<i64> = m_exp.keys().copied().collect();
    ds.extend(m_got.keys().copied());
    for d in ds {
        report.cells.push(CellDiff {
            table: 1,
            label: "m".into(),
            system,
            family: Family::Defect(LinearForm::new(0, d)),
            expected: m_exp.get(&d).cloned().map(RationalPoly::constant),
            got: m_got.get(&d).map(|&v| RationalPoly::constant(int(v))),
        });
    }
    report.cells.push(CellDiff {
        table: 1,
        label: "m".into(),
        system,
        family: Family::Total,
        expected: Some(RationalPoly::constant(total_exp)),
        got: Some(RationalPoly::constant(int(m_got.values().sum()))),
    });
    Ok(report)
}

/// Fitted rows and their per-family sums in the golden-table schema.
pub fn fitted_table(rows: &[FittedRow]) -> GoldenTable {
    let mut entries = Vec::new();
    for r in rows {
        for (&c, p) in &r.cells {
            entries.push(GoldenEntry { label: r.spec.id().into(), systems: vec![r.system], family: Family::Defect(r.family(c)), poly: p.clone() });
        }
    }
    let mut systems: Vec<System> = rows.iter().map(|r| r.system).collect();
    systems.dedup();
    for system in systems {
        let own: Vec<FittedRow> = rows.iter().filter(|r| r.system == system).cloned().collect();
        for (family, poly) in fitted_m(&own) {
            entries.push(GoldenEntry { label: "m".into(), systems: vec![system], family, poly });
        }
    }
    GoldenTable { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_one_rows_fit_their_table_cells() {
        let store = WeightStore::new();
        let golden = GoldenTable::table3();
        for spec in [Spec::QQRt, Spec::QQpRtp] {
            let row = fit_row(&store, spec, System::F).unwrap();
            for (&c, p) in &row.cells {
                assert_eq!(golden.get(spec.id(), System::F, Family::Defect(row.family(c))), Some(p), "{spec} {c}");
            }
        }
    }

    #[test]
    fn level_checks_at_small_l() {
        let store = WeightStore::new();
        for system in [System::H, System::F] {
            for l in [0, 1] {
                let r = verify_level(&store, system, l).unwrap();
                assert!(r.passed(), "{system:?} l={l}: {:?}", r.mismatches());
            }
        }
    }
}
