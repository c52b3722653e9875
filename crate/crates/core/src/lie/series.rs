//! Harish-Chandra series data files.
//!
//! Each data line is `label | class count | index | degrees | valuations`,
//! fields separated by `|`. The class count lists exact fractions in
//! ascending powers of `x`, degrees are comma separated, and the last field
//! holds `v2` of each degree times the index, checked on load.

use serde::Serialize;

use super::{degree_v2, Branch, CycloDegree};
use crate::error::{Error, Result};
use crate::poly::{LinearForm, RationalPoly};

const SPIN7_Q1: &str = include_str!("../../data/series/spin7_q1.dat");
const SPIN7_Q3: &str = include_str!("../../data/series/spin7_q3.dat");
const SPETS_Q1: &str = include_str!("../../data/series/spets_q1.dat");
const SPETS_Q3: &str = include_str!("../../data/series/spets_q3.dat");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesGroup {
    #[serde(rename = "spin7")]
    Spin7,
    #[serde(rename = "spets")]
    Spets,
}

impl SeriesGroup {
    pub fn name(self) -> &'static str {
        match self {
            SeriesGroup::Spin7 => "spin7",
            SeriesGroup::Spets => "spets",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub label: String,
    pub class_count: RationalPoly,
    pub index: CycloDegree,
    pub degrees: Vec<CycloDegree>,
    /// `v2(degree · index)` per degree.
    pub valuations: Vec<LinearForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Series {
    pub group: SeriesGroup,
    pub branch: Branch,
    pub rows: Vec<SeriesRow>,
}

impl Series {
    pub fn embedded(group: SeriesGroup, branch: Branch) -> Series {
        assemble_series(group, branch).expect("embedded series data")
    }

    pub fn parse(text: &str, group: SeriesGroup, branch: Branch) -> Result<Series> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |msg: String| Error::SchemaViolation(format!("{}/{branch} line {}", group.name(), i + 1), msg);
            let f: Vec<&str> = line.split('|').map(str::trim).collect();
            let [label, count, index, degrees, vals] = f[..] else {
                return Err(at(format!("expected 5 fields, found {}", f.len())));
            };
            let parse_deg = |s: &str| s.parse::<CycloDegree>().map_err(|e| at(e.to_string()));
            let row = SeriesRow {
                label: label.to_string(),
                class_count: RationalPoly::parse_coeffs(count.split_whitespace()).map_err(|e| at(e.to_string()))?,
                index: parse_deg(index)?,
                degrees: degrees.split(',').map(|s| parse_deg(s.trim())).collect::<Result<_>>()?,
                valuations: vals.split(',').map(|s| s.trim().parse().map_err(|e: Error| at(e.to_string()))).collect::<Result<_>>()?,
            };
            if row.degrees.len() != row.valuations.len() {
                return Err(at(format!("{} degrees but {} valuations", row.degrees.len(), row.valuations.len())));
            }
            for (k, (d, &v)) in row.degrees.iter().zip(&row.valuations).enumerate() {
                let got = degree_v2(&d.mul(&row.index), branch).map_err(|e| at(e.to_string()))?;
                if got != v {
                    return Err(at(format!("{label}, degree {} ({d}): listed valuation {v}, computed {got}", k + 1)));
                }
            }
            rows.push(row);
        }
        Ok(Series { group, branch, rows })
    }

    pub fn character_count(&self) -> RationalPoly {
        let mut t = RationalPoly::default();
        for r in &self.rows {
            for _ in &r.degrees {
                t += &r.class_count;
            }
        }
        t
    }
}

/// The embedded series for `group` on `branch`.
pub fn assemble_series(group: SeriesGroup, branch: Branch) -> Result<Series> {
    let text = match (group, branch) {
        (SeriesGroup::Spin7, Branch::Q1) => SPIN7_Q1,
        (SeriesGroup::Spin7, Branch::Q3) => SPIN7_Q3,
        (SeriesGroup::Spets, Branch::Q1) => SPETS_Q1,
        (SeriesGroup::Spets, Branch::Q3) => SPETS_Q3,
    };
    Series::parse(text, group, branch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::value_v2;
    use num_bigint::BigInt;

    #[test]
    fn embedded_shapes() {
        for b in Branch::ALL {
            let s = assemble_series(SeriesGroup::Spin7, b).unwrap();
            assert_eq!(s.rows.len(), 23);
            let x = assemble_series(SeriesGroup::Spets, b).unwrap();
            assert_eq!(x.rows.len(), 11);
            assert_eq!(x.rows[0].degrees.len(), 22);
        }
    }

    #[test]
    fn listed_valuations_match_concrete_q() {
        for q in [3i64, 5, 7, 9, 17, 23, 31, 41, 47, 97] {
            let qb = BigInt::from(q);
            let b = Branch::of_q(&qb).unwrap();
            let l = Branch::level_of(&qb).unwrap();
            for g in [SeriesGroup::Spin7, SeriesGroup::Spets] {
                for r in &assemble_series(g, b).unwrap().rows {
                    for (d, v) in r.degrees.iter().zip(&r.valuations) {
                        let val = d.mul(&r.index).eval_without_unit(&qb).unwrap();
                        assert_eq!(value_v2(&val), Some(v.at(l)), "q={q} {} {d}", r.label);
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_valuation_is_reported() {
        let bad = SPIN7_Q1.replace("| 1,2l+4,2,1,1,1", "| 1,2l+4,2,1,1,2");
        let err = Series::parse(&bad, SeriesGroup::Spin7, Branch::Q1).unwrap_err();
        assert!(matches!(err, Error::SchemaViolation(ref at, _) if at.contains("line 5")), "{err}");
    }
}
