//! Out-actions read from `data/outactions.dat`.

use std::path::Path;

use sha2::{Digest, Sha256};

use super::System;
use crate::algebra::group::GenGroup;
use crate::algebra::perm::{Perm, PermOps};
use crate::characters::label::CharLabel;
use crate::error::{Error, Result};
use crate::weights::outaction::OutAction;

pub const EMBEDDED: &str = include_str!("../../data/outactions.dat");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionRecord {
    pub name: String,
    pub levels: (u32, Option<u32>),
    pub systems: Vec<System>,
    pub order_v2: u32,
    pub provenance: String,
    pub points: usize,
    pub gens: Vec<Vec<u32>>,
    pub degrees: Vec<u64>,
    pub images: Vec<Vec<u32>>,
}

impl ActionRecord {
    pub fn covers(&self, l: u32, system: System) -> bool {
        l >= self.levels.0 && self.levels.1.is_none_or(|hi| l <= hi) && self.systems.contains(&system)
    }

    pub fn out_action(&self) -> OutAction {
        let ops = PermOps::new(self.points);
        let gens: Vec<Perm> = self.gens.iter().map(|g| g.clone().into_boxed_slice()).collect();
        let out = GenGroup::new(ops, gens).expect("small permutation group");
        let labels = (0..self.degrees.len() as u32).map(CharLabel::TableRow).collect();
        OutAction::new(out, labels, self.degrees.clone(), self.order_v2, self.images.clone())
    }
}

#[derive(Clone, Debug)]
pub struct OutActionData {
    pub records: Vec<ActionRecord>,
}

fn bad(line: &str, why: &str) -> Error {
    Error::SchemaViolation(line.to_string(), why.to_string())
}

fn nums<T: std::str::FromStr>(s: &str, line: &str) -> Result<Vec<T>> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| bad(line, "expected integers"))).collect()
}

impl OutActionData {
    pub fn embedded() -> OutActionData {
        OutActionData::parse(EMBEDDED).expect("embedded data is valid")
    }

    pub fn from_file(path: &Path) -> Result<OutActionData> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::SpecUnavailable(path.display().to_string(), e.to_string()))?;
        OutActionData::parse(&text)
    }

    pub fn parse(text: &str) -> Result<OutActionData> {
        let cut = text.rfind("checksum sha256 ").ok_or_else(|| bad("", "missing checksum line"))?;
        let (body, tail) = text.split_at(cut);
        let want = tail.trim_start_matches("checksum sha256 ").trim();
        let got = hex::encode(Sha256::digest(body.as_bytes()));
        if want != got {
            return Err(bad(tail.trim(), "checksum mismatch"));
        }
        let mut records = Vec::new();
        let mut cur: Option<ActionRecord> = None;
        for line in body.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            if key == "record" {
                cur = Some(ActionRecord {
                    name: rest.to_string(),
                    levels: (0, None),
                    systems: vec![],
                    order_v2: 0,
                    provenance: String::new(),
                    points: 0,
                    gens: vec![],
                    degrees: vec![],
                    images: vec![],
                });
                continue;
            }
            let r = cur.as_mut().ok_or_else(|| bad(line, "field outside a record"))?;
            match key {
                "levels" => {
                    let (lo, hi) = rest.split_once('-').ok_or_else(|| bad(line, "expected lo-hi"))?;
                    let lo = lo.parse().map_err(|_| bad(line, "bad level"))?;
                    let hi = if hi.is_empty() { None } else { Some(hi.parse().map_err(|_| bad(line, "bad level"))?) };
                    r.levels = (lo, hi);
                }
                "systems" => {
                    r.systems = rest
                        .split_whitespace()
                        .map(|s| match s {
                            "H" => Ok(System::H),
                            "F" => Ok(System::F),
                            _ => Err(bad(line, "unknown system")),
                        })
                        .collect::<Result<_>>()?;
                }
                "order_v2" => r.order_v2 = rest.parse().map_err(|_| bad(line, "bad order"))?,
                "provenance" => r.provenance = rest.to_string(),
                "points" => r.points = rest.parse().map_err(|_| bad(line, "bad point count"))?,
                "gen" => r.gens.push(nums(rest, line)?),
                "labels" => {}
                "degrees" => {
                    for tok in rest.split_whitespace() {
                        let (d, c) = tok.split_once('*').ok_or_else(|| bad(line, "expected degree*count"))?;
                        let d: u64 = d.parse().map_err(|_| bad(line, "bad degree"))?;
                        let c: usize = c.parse().map_err(|_| bad(line, "bad count"))?;
                        r.degrees.extend(std::iter::repeat_n(d, c));
                    }
                }
                "image" => r.images.push(nums(rest, line)?),
                "end" => {
                    let r = cur.take().unwrap();
                    let n = r.degrees.len();
                    if r.gens.len() != r.images.len()
                        || r.gens.iter().any(|g| g.len() != r.points)
                        || r.images.iter().any(|i| i.len() != n || i.iter().any(|&x| x as usize >= n))
                    {
                        return Err(bad(&r.name, "inconsistent record"));
                    }
                    records.push(r);
                }
                _ => return Err(bad(line, "unknown field")),
            }
        }
        if cur.is_some() {
            return Err(bad("", "unterminated record"));
        }
        Ok(OutActionData { records })
    }

    pub fn lookup(&self, name: &str, l: u32, system: System) -> Result<&ActionRecord> {
        self.records
            .iter()
            .find(|r| r.name == name && r.covers(l, system))
            .ok_or_else(|| Error::SpecUnavailable(name.to_string(), format!("no shipped Out-action for l = {l}, {system:?}")))
    }
}

/// `P = {±e_I : |I| even}` inside the Clifford group on `n` anticommuting
/// generators with `e_i^2 = -1`; elements are `(sign, mask)`.
#[derive(Clone, Copy, Debug)]
pub struct CliffordOps;

impl CliffordOps {
    pub fn product_sign(a: u32, b: u32) -> bool {
        let mut s = 0u32;
        for j in 0..32 {
            if b >> j & 1 == 1 {
                s += (a >> (j + 1)).count_ones();
            }
        }
        s += (a & b).count_ones();
        s % 2 == 1
    }

    /// Image of `e_I` under `e_i ↦ e_{π(i)}`.
    pub fn permute(p: &[u32], x: &(bool, u32)) -> (bool, u32) {
        let mut acc = (x.0, 0u32);
        for i in 0..32 {
            if x.1 >> i & 1 == 1 {
                acc = CliffordOps.mul_raw(&acc, &(false, 1 << p[i]));
            }
        }
        acc
    }

    fn mul_raw(&self, a: &(bool, u32), b: &(bool, u32)) -> (bool, u32) {
        (a.0 ^ b.0 ^ Self::product_sign(a.1, b.1), a.1 ^ b.1)
    }
}

impl crate::algebra::group::GroupOps for CliffordOps {
    type Elem = (bool, u32);
    fn identity(&self) -> (bool, u32) {
        (false, 0)
    }
    fn mul(&self, a: &(bool, u32), b: &(bool, u32)) -> (bool, u32) {
        self.mul_raw(a, b)
    }
    fn inv(&self, a: &(bool, u32)) -> (bool, u32) {
        // e_I^2 = ±1
        let sq = self.mul_raw(a, a);
        (a.0 ^ sq.0, a.1)
    }
}

/// Checks a record against the Dixon table of the even Clifford group on `points` generators.
pub fn clifford_oracle(r: &ActionRecord) -> Result<crate::weights::oracle::OracleReport> {
    let n = r.points as u32;
    let gens: Vec<(bool, u32)> = (1..n).map(|i| (false, 1 | (1 << i))).collect();
    let p = GenGroup::new(CliffordOps, gens)?;
    let act = r.out_action();
    let perms: Vec<Vec<u32>> = act.out.gens().iter().map(|g| g.to_vec()).collect();
    let invs: Vec<Vec<u32>> = perms
        .iter()
        .map(|g| {
            let mut inv = vec![0u32; g.len()];
            for (i, &x) in g.iter().enumerate() {
                inv[x as usize] = i as u32;
            }
            inv
        })
        .collect();
    crate::weights::oracle::compare_with_oracle(&act, &p, |j, x| CliffordOps::permute(&invs[j], x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_records_parse_and_match_clifford_groups() {
        let d = OutActionData::embedded();
        assert_eq!(d.records.len(), 3);
        for r in &d.records {
            assert!(r.out_action().validate());
            assert!(clifford_oracle(r).unwrap().passed(), "{}", r.name);
        }
        assert!(d.lookup("R_{1^7}", 0, System::H).unwrap().provenance.contains("A7"));
        assert!(d.lookup("R_{1^7}", 3, System::F).unwrap().provenance.contains("S7"));
    }

    #[test]
    fn tampering_is_detected() {
        let t = EMBEDDED.replacen("order_v2 7", "order_v2 8", 1);
        assert!(matches!(OutActionData::parse(&t), Err(Error::SchemaViolation(..))));
    }
}
