//! Defect counts `k(D, d)` from the series data, and their comparison with `m(D, 0, d)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{Branch, Series};
use crate::poly::{Family, LinearForm, RationalPoly};

/// `v2|S| = 3l + 10`.
pub const TOP: LinearForm = LinearForm::new(3, 10);

/// Defect `d` as a linear form mapped to the number of characters of that defect.
pub fn kd_poly(series: &Series) -> BTreeMap<LinearForm, RationalPoly> {
    let mut m: BTreeMap<LinearForm, RationalPoly> = BTreeMap::new();
    for r in &series.rows {
        for v in &r.valuations {
            *m.entry(TOP - *v).or_default() += &r.class_count;
        }
    }
    m
}

/// Numeric defect counts at level `l`.
pub fn kd_at(series: &Series, l: u32) -> BTreeMap<i64, BigRational> {
    let mut m: BTreeMap<i64, BigRational> = BTreeMap::new();
    for (f, p) in kd_poly(series) {
        *m.entry(f.at(l)).or_insert_with(BigRational::zero) += p.at_level(l);
    }
    m.retain(|_, v| !v.is_zero());
    m
}

/// Defects at level `l` where distinct families coincide; [`kd_at`] sums them.
pub fn family_collisions(series: &Series, l: u32) -> BTreeMap<i64, Vec<LinearForm>> {
    let mut m: BTreeMap<i64, Vec<LinearForm>> = BTreeMap::new();
    for f in kd_poly(series).into_keys() {
        m.entry(f.at(l)).or_default().push(f);
    }
    m.retain(|_, v| v.len() > 1);
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: Family,
    pub kd: RationalPoly,
    pub m: RationalPoly,
    pub passed: bool,
}

fn compare(kd: &BTreeMap<LinearForm, RationalPoly>, m: &BTreeMap<Family, RationalPoly>, fams: impl IntoIterator<Item = Family>) -> Vec<FamilyCheck> {
    fams.into_iter()
        .map(|family| {
            let k = match family {
                Family::Defect(f) => kd.get(&f).cloned().unwrap_or_default(),
                Family::Total => kd.values().fold(RationalPoly::default(), |a, p| &a + p),
            };
            let mm = m.get(&family).cloned().unwrap_or_default();
            FamilyCheck { passed: k == mm, family, kd: k, m: mm }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OwcReport {
    pub branch: Branch,
    pub families: Vec<FamilyCheck>,
}

impl OwcReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.passed)
    }
}

/// Spin7 defect counts against `m(H, 0, d)` on every family that either side carries.
pub fn owc_check(series: &Series, m_h: &BTreeMap<Family, RationalPoly>) -> OwcReport {
    let kd = kd_poly(series);
    let mut fams: BTreeSet<Family> = kd.keys().map(|&f| Family::Defect(f)).collect();
    fams.extend(m_h.keys().copied());
    OwcReport { branch: series.branch, families: compare(&kd, m_h, fams) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExoticReport {
    pub branch: Branch,
    /// Families carried by `m(F, 0, d)`.
    pub families: Vec<FamilyCheck>,
    /// Spets families outside `m(F, 0, d)`.
    pub residual: BTreeMap<LinearForm, RationalPoly>,
    pub total: RationalPoly,
    pub expected_total: RationalPoly,
}

impl ExoticReport {
    /// Matching families, a residual of exactly six characters of defect zero,
    /// and the total exceeding `m(F, 0)` by six.
    pub fn passed(&self) -> bool {
        let six = RationalPoly::from_ints(&[6]);
        let zero = LinearForm::new(0, 0);
        self.families.iter().all(|f| f.passed)
            && self.residual.iter().all(|(f, p)| if *f == zero { *p == six } else { p.is_zero() })
            && self.residual.get(&zero) == Some(&six)
            && self.total == self.expected_total
    }
}

/// Spets defect counts against `m(F, 0, d)` on the families of `m_f`.
pub fn exotic_check(series: &Series, m_f: &BTreeMap<Family, RationalPoly>) -> ExoticReport {
    let kd = kd_poly(series);
    let fams: Vec<Family> = m_f.keys().copied().filter(|f| *f != Family::Total).collect();
    let residual = kd.iter().filter(|(f, _)| !m_f.contains_key(&Family::Defect(**f))).map(|(f, p)| (*f, p.clone())).collect();
    let total = kd.values().fold(RationalPoly::default(), |a, p| &a + p);
    let m_total = m_f.get(&Family::Total).cloned().unwrap_or_default();
    let expected_total = &m_total + &RationalPoly::constant(BigRational::from_integer(BigInt::from(6)));
    ExoticReport { branch: series.branch, families: compare(&kd, m_f, fams), residual, total, expected_total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::System;
    use crate::lie::{assemble_series, SeriesGroup};
    use crate::poly::{rat, GoldenTable};

    fn table1(system: System) -> BTreeMap<Family, RationalPoly> {
        GoldenTable::table1().row("m", system).iter().map(|e| (e.family, e.poly.clone())).collect()
    }

    #[test]
    fn spin7_counts_equal_m_on_both_branches() {
        for b in Branch::ALL {
            let r = owc_check(&assemble_series(SeriesGroup::Spin7, b).unwrap(), &table1(System::H));
            assert!(r.passed(), "{:?}", r.families.iter().filter(|f| !f.passed).collect::<Vec<_>>());
            assert_eq!(r.families.len(), 12);
        }
    }

    #[test]
    fn spets_counts_exceed_m_by_six_height_zero_characters() {
        for b in Branch::ALL {
            let s = assemble_series(SeriesGroup::Spets, b).unwrap();
            let r = exotic_check(&s, &table1(System::F));
            assert!(r.passed(), "{r:?}");
            let want = RationalPoly::new(vec![rat(197, 7), rat(50, 3), rat(4, 1), rat(4, 21)]);
            assert_eq!(r.total, want);
            assert_eq!(s.character_count(), want);
        }
    }

    #[test]
    fn branches_agree_as_multisets() {
        for g in [SeriesGroup::Spin7, SeriesGroup::Spets] {
            let key = |b| {
                let mut v: Vec<(String, LinearForm)> = assemble_series(g, b)
                    .unwrap()
                    .rows
                    .iter()
                    .flat_map(|r| r.valuations.iter().map(|v| (r.class_count.to_string(), *v)))
                    .collect();
                v.sort();
                v
            };
            assert_eq!(key(Branch::Q1), key(Branch::Q3));
        }
    }

    #[test]
    fn numeric_counts_at_level_zero() {
        let h = kd_at(&assemble_series(SeriesGroup::Spin7, Branch::Q1).unwrap(), 0);
        assert_eq!(h.values().sum::<BigRational>(), BigRational::from_integer(72.into()));
        let f = kd_at(&assemble_series(SeriesGroup::Spets, Branch::Q3).unwrap(), 0);
        assert_eq!(f.values().sum::<BigRational>(), BigRational::from_integer(49.into()));
        let c = family_collisions(&assemble_series(SeriesGroup::Spin7, Branch::Q1).unwrap(), 1);
        assert_eq!(c[&7], vec![LinearForm::new(1, 6), LinearForm::new(2, 5)]);
        assert_eq!(c[&8], vec![LinearForm::new(1, 7), LinearForm::new(2, 6)]);
    }
}
