//! Unipotent character degrees of Spin7(q) and of the spets X(q), their
//! 2-adic valuations, and the resulting defect counts.

pub mod kd;
pub mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LinearForm;

pub use kd::{exotic_check, family_collisions, kd_at, kd_poly, owc_check, TOP, ExoticReport, FamilyCheck, OwcReport};
pub use series::{assemble_series, Series, SeriesGroup, SeriesRow};

/// Residue of `q` modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "1")]
    Q1,
    #[serde(rename = "3")]
    Q3,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::Q1, Branch::Q3];

    pub fn of_q(q: &BigInt) -> Result<Branch> {
        match q.mod_floor(&BigInt::from(4u32)).to_u32_digits().1.first() {
            Some(1) => Ok(Branch::Q1),
            Some(3) => Ok(Branch::Q3),
            _ => Err(Error::ParamsInvalid(format!("q = {q} is not odd"))),
        }
    }

    /// `l` with `v2(q^2 - 1) = l + 3`.
    pub fn level_of(q: &BigInt) -> Result<u32> {
        let v = v2_int(&(q * q - 1u32)).ok_or_else(|| Error::ParamsInvalid(format!("q = {q}")))?;
        if v < 3 {
            return Err(Error::ParamsInvalid(format!("q = {q} is even")));
        }
        Ok(v - 3)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Q1 => "1",
            Branch::Q3 => "3",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Branch> {
        match s {
            "1" | "q1" | "Q1" => Ok(Branch::Q1),
            "3" | "q3" | "Q3" => Ok(Branch::Q3),
            _ => Err(Error::ParamsInvalid(format!("branch {s}: expected 1 or 3"))),
        }
    }
}

/// `v2(Phi_n(q))` as a linear form in `l`.
pub fn phi_v2(n: u32, branch: Branch) -> Result<LinearForm> {
    let deep = LinearForm::new(1, 2);
    let one = LinearForm::new(0, 1);
    Ok(match (n, branch) {
        (1, Branch::Q1) | (2, Branch::Q3) => deep,
        (1, Branch::Q3) | (2, Branch::Q1) | (4, _) => one,
        (3 | 6 | 7 | 14, _) => LinearForm::new(0, 0),
        _ => return Err(Error::UnsupportedIndex(n)),
    })
}

fn v2_int(n: &BigInt) -> Option<u32> {
    (!n.is_zero()).then(|| n.trailing_zeros().unwrap_or(0) as u32)
}

fn v2_rat(r: &BigRational) -> Option<i64> {
    Some(v2_int(r.numer())? as i64 - v2_int(r.denom())? as i64)
}

/// Integer value of `Phi_n(q)` for the supported `n`.
pub fn cyclotomic(n: u32, q: &BigInt) -> Result<BigInt> {
    let coeffs: &[i64] = match n {
        1 => &[-1, 1],
        2 => &[1, 1],
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        6 => &[1, -1, 1],
        7 => &[1, 1, 1, 1, 1, 1, 1],
        14 => &[1, -1, 1, -1, 1, -1, 1],
        _ => return Err(Error::UnsupportedIndex(n)),
    };
    Ok(coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * q + c))
}

/// `c · sqrt(-7)^[unit7] · q^qpow · prod Phi_n(q)^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloDegree {
    pub c: BigRational,
    pub unit7: bool,
    pub qpow: u32,
    pub phi: BTreeMap<u32, u32>,
}

impl CycloDegree {
    pub fn one() -> CycloDegree {
        CycloDegree { c: BigRational::one(), unit7: false, qpow: 0, phi: BTreeMap::new() }
    }

    pub fn mul(&self, o: &CycloDegree) -> CycloDegree {
        let mut phi = self.phi.clone();
        for (&n, &e) in &o.phi {
            *phi.entry(n).or_insert(0) += e;
        }
        let mut c = &self.c * &o.c;
        if self.unit7 && o.unit7 {
            c = -c * BigInt::from(7);
        }
        CycloDegree { c, unit7: self.unit7 ^ o.unit7, qpow: self.qpow + o.qpow, phi }
    }

    /// Value at a concrete `q`, with the factor `sqrt(-7)` dropped. That factor
    /// is a 2-adic unit, since `-7 = 1 mod 8`.
    pub fn eval_without_unit(&self, q: &BigInt) -> Result<BigRational> {
        let mut v = self.c.clone() * BigRational::from_integer(q.pow(self.qpow));
        for (&n, &e) in &self.phi {
            v *= BigRational::from_integer(cyclotomic(n, q)?.pow(e));
        }
        Ok(v)
    }
}

/// `v2` of a degree as a linear form in `l`.
pub fn degree_v2(deg: &CycloDegree, branch: Branch) -> Result<LinearForm> {
    let c = v2_rat(&deg.c).ok_or_else(|| Error::SchemaViolation(deg.to_string(), "zero degree".into()))?;
    let mut v = LinearForm::new(0, c);
    for (&n, &e) in &deg.phi {
        let p = phi_v2(n, branch)?;
        v = v + LinearForm::new(p.slope * e as i64, p.intercept * e as i64);
    }
    Ok(v)
}

/// `v2` of a concrete value.
pub fn value_v2(r: &BigRational) -> Option<i64> {
    v2_rat(r)
}

impl fmt::Display for CycloDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.c.is_one() || (!self.unit7 && self.qpow == 0 && self.phi.is_empty()) {
            parts.push(self.c.to_string());
        }
        if self.unit7 {
            parts.push("sqrt(-7)".into());
        }
        match self.qpow {
            0 => {}
            1 => parts.push("q".into()),
            k => parts.push(format!("q^{k}")),
        }
        for (&n, &e) in &self.phi {
            parts.push(if e == 1 { format!("phi{n}") } else { format!("phi{n}^{e}") });
        }
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for CycloDegree {
    type Err = Error;
    fn from_str(s: &str) -> Result<CycloDegree> {
        let bad = |t: &str| Error::SchemaViolation(s.to_string(), format!("unexpected token {t:?}"));
        let mut d = CycloDegree::one();
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(bad(""));
        }
        for t in tokens {
            if t == "sqrt(-7)" {
                d = d.mul(&CycloDegree { unit7: true, ..CycloDegree::one() });
            } else if t == "-" {
                d.c = -d.c;
            } else if let Some(rest) = t.strip_prefix("phi") {
                let (n, e) = rest.split_once('^').unwrap_or((rest, "1"));
                let n: u32 = n.parse().map_err(|_| bad(t))?;
                let e: u32 = e.parse().map_err(|_| bad(t))?;
                phi_v2(n, Branch::Q1)?;
                *d.phi.entry(n).or_insert(0) += e;
            } else if let Some(rest) = t.strip_prefix('q') {
                d.qpow += match rest.strip_prefix('^') {
                    Some(k) => k.parse().map_err(|_| bad(t))?,
                    None if rest.is_empty() => 1,
                    None => return Err(bad(t)),
                };
            } else {
                let c: BigRational = t.parse().map_err(|_| bad(t))?;
                d.c *= c;
            }
        }
        if d.c.is_zero() {
            return Err(Error::SchemaViolation(s.to_string(), "zero degree".into()));
        }
        Ok(d)
    }
}

impl Serialize for CycloDegree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycloDegree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_value() {
        let d: CycloDegree = "-1/14 sqrt(-7) q^8 phi3 phi4 phi6 phi7 phi14".parse().unwrap();
        assert!(d.unit7);
        assert_eq!(d.qpow, 8);
        assert_eq!(d.to_string().parse::<CycloDegree>().unwrap(), d);
        assert_eq!(degree_v2(&d, Branch::Q1).unwrap(), LinearForm::new(0, 0));
        let e: CycloDegree = "1/2 q phi1^2 phi3".parse().unwrap();
        assert_eq!(degree_v2(&e, Branch::Q1).unwrap(), LinearForm::new(2, 3));
        assert_eq!(degree_v2(&e, Branch::Q3).unwrap(), LinearForm::new(0, 1));
        assert_eq!(phi_v2(5, Branch::Q1), Err(Error::UnsupportedIndex(5)));
        assert!("phi5".parse::<CycloDegree>().is_err());
    }

    #[test]
    fn branch_and_level_of_q() {
        for (q, b, l) in [(3, Branch::Q3, 0), (5, Branch::Q1, 0), (7, Branch::Q3, 1), (17, Branch::Q1, 2), (31, Branch::Q3, 3)] {
            let q = BigInt::from(q);
            assert_eq!(Branch::of_q(&q).unwrap(), b);
            assert_eq!(Branch::level_of(&q).unwrap(), l);
        }
    }

    #[test]
    fn cyclotomic_valuations_match_integers() {
        for q in [3i64, 5, 7, 9, 17, 23, 31, 41, 47, 97, 127, 257] {
            let qb = BigInt::from(q);
            let b = Branch::of_q(&qb).unwrap();
            let l = Branch::level_of(&qb).unwrap();
            for n in [1, 2, 3, 4, 6, 7, 14] {
                let v = v2_int(&cyclotomic(n, &qb).unwrap()).unwrap() as i64;
                assert_eq!(phi_v2(n, b).unwrap().at(l), v, "q={q} n={n}");
            }
        }
    }
}
