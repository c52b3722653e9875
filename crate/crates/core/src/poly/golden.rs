//! Machine-readable copies of the three weight tables.
//!
//! Each data line is `label systems family coefficients...`: `systems` is
//! `H`, `F` or `H,F`; `family` is a linear form in `l` (or `total`); the
//! coefficients are exact fractions in ascending powers of `x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{LinearForm, RationalPoly};
use crate::catalog::System;
use crate::error::{Error, Result};

pub const TABLE1: &str = include_str!("../../data/golden/table1.dat");
pub const TABLE2: &str = include_str!("../../data/golden/table2.dat");
pub const TABLE3: &str = include_str!("../../data/golden/table3.dat");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Defect(LinearForm),
    Total,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Defect(d) => d.fmt(f),
            Family::Total => f.write_str("total"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        if s == "total" {
            Ok(Family::Total)
        } else {
            s.parse().map(Family::Defect)
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub label: String,
    pub systems: Vec<System>,
    pub family: Family,
    pub poly: RationalPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub entries: Vec<GoldenEntry>,
}

pub fn parse_systems(s: &str) -> Result<Vec<System>> {
    s.split(',')
        .map(|t| match t {
            "H" => Ok(System::H),
            "F" => Ok(System::F),
            _ => Err(Error::SchemaViolation(s.to_string(), "systems must be H, F or H,F".into())),
        })
        .collect()
}

pub fn format_systems(s: &[System]) -> String {
    s.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(",")
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<GoldenTable> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |e: Error| match e {
                Error::SchemaViolation(a, b) => Error::SchemaViolation(format!("line {}: {a}", n + 1), b),
                e => e,
            };
            let mut it = line.split_whitespace();
            let (Some(label), Some(sys), Some(fam)) = (it.next(), it.next(), it.next()) else {
                return Err(Error::SchemaViolation(format!("line {}", n + 1), "expected label, systems, family".into()));
            };
            entries.push(GoldenEntry {
                label: label.to_string(),
                systems: parse_systems(sys).map_err(at)?,
                family: fam.parse().map_err(at)?,
                poly: RationalPoly::parse_coeffs(it).map_err(at)?,
            });
        }
        Ok(GoldenTable { entries })
    }

    pub fn table1() -> GoldenTable {
        GoldenTable::parse(TABLE1).expect("golden/table1.dat")
    }

    pub fn table2() -> GoldenTable {
        GoldenTable::parse(TABLE2).expect("golden/table2.dat")
    }

    pub fn table3() -> GoldenTable {
        GoldenTable::parse(TABLE3).expect("golden/table3.dat")
    }

    /// The value of a cell, or `None` if the table has no entry there.
    pub fn get(&self, label: &str, system: System, family: Family) -> Option<&RationalPoly> {
        self.entries.iter().find(|e| e.label == label && e.family == family && e.systems.contains(&system)).map(|e| &e.poly)
    }

    /// Entries of one row for one system.
    pub fn row(&self, label: &str, system: System) -> Vec<&GoldenEntry> {
        self.entries.iter().filter(|e| e.label == label && e.systems.contains(&system)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!("{} {} {} {}\n", e.label, format_systems(&e.systems), e.family, e.poly.to_coeff_string()));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse_and_round_trip() {
        for t in [GoldenTable::table1(), GoldenTable::table2(), GoldenTable::table3()] {
            assert_eq!(GoldenTable::parse(&t.to_text()).unwrap(), t);
        }
        let t3 = GoldenTable::table3();
        assert_eq!(t3.entries.iter().map(|e| &e.label).collect::<std::collections::BTreeSet<_>>().len(), 21);
        let f = Family::Defect("3l+6".parse().unwrap());
        assert_eq!(t3.get("CS_U", System::F, f).unwrap().to_string(), "-8/3*x^3 + 2*x^2 + 8/3*x - 3");
        assert!(t3.get("CS_U", System::H, f).is_none());
    }

    #[test]
    fn bad_lines_are_located() {
        let e = GoldenTable::parse("# c\nS H,G 4 1\n").unwrap_err();
        assert!(matches!(e, Error::SchemaViolation(ref a, _) if a.starts_with("line 2")));
    }
}
