//! Exact polynomials in `x = 2^l`, interpolation, and the golden tables.

pub mod golden;
pub mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use golden::{Family, GoldenEntry, GoldenTable};

/// Coefficients in ascending powers of `x`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RationalPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> RationalPoly {
        RationalPoly::new(vec![c])
    }

    pub fn from_ints(c: &[i64]) -> RationalPoly {
        RationalPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&int(x))
    }

    /// Value at `x = 2^l`.
    pub fn at_level(&self, l: u32) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::one() << l))
    }

    fn scale_shift(&self, c: &BigRational, shift: usize) -> RationalPoly {
        let mut v = vec![BigRational::zero(); shift];
        v.extend(self.coeffs.iter().map(|a| a * c));
        RationalPoly::new(v)
    }

    /// Whitespace-separated coefficient list as stored in data files.
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn parse_coeffs<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<RationalPoly> {
        let coeffs = tokens
            .into_iter()
            .map(|t| t.parse::<BigRational>().map_err(|_| Error::SchemaViolation(t.to_string(), "expected a fraction".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalPoly::new(coeffs))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, o: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigRational::zero();
        RationalPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect())
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, o: &RationalPoly) {
        *self = &*self + o;
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, o: &RationalPoly) -> RationalPoly {
        self + &(-o)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = a.is_one() && i > 0;
            if !unit {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(if unit { "x" } else { "*x" })?,
                _ => write!(f, "{}x^{i}", if unit { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        RationalPoly::parse_coeffs(v.iter().map(String::as_str)).map_err(serde::de::Error::custom)
    }
}

/// `slope·l + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub slope: i64,
    pub intercept: i64,
}

impl LinearForm {
    pub const fn new(slope: i64, intercept: i64) -> LinearForm {
        LinearForm { slope, intercept }
    }

    pub fn at(self, l: u32) -> i64 {
        self.slope * l as i64 + self.intercept
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, o: LinearForm) -> LinearForm {
        LinearForm::new(self.slope + o.slope, self.intercept + o.intercept)
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, o: LinearForm) -> LinearForm {
        LinearForm::new(self.slope - o.slope, self.intercept - o.intercept)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.intercept) {
            (0, b) => write!(f, "{b}"),
            (a, b) => {
                match a {
                    1 => f.write_str("l")?,
                    -1 => f.write_str("-l")?,
                    _ => write!(f, "{a}l")?,
                }
                match b {
                    0 => Ok(()),
                    b if b > 0 => write!(f, "+{b}"),
                    b => write!(f, "{b}"),
                }
            }
        }
    }
}

impl FromStr for LinearForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<LinearForm> {
        let bad = || Error::SchemaViolation(s.to_string(), "expected a linear form such as 3l+6".into());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = t.find('l') else {
            return t.parse().map(|b| LinearForm::new(0, b)).map_err(|_| bad());
        };
        let slope = match &t[..pos] {
            "" | "+" => 1,
            "-" => -1,
            a => a.parse().map_err(|_| bad())?,
        };
        let rest = &t[pos + 1..];
        let intercept = if rest.is_empty() { 0 } else { rest.trim_start_matches('+').parse().map_err(|_| bad())? };
        Ok(LinearForm::new(slope, intercept))
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Lagrange interpolation through `samples`, of degree at most `degree_bound`.
/// Extra samples are checked against the interpolant.
pub fn interpolate(samples: &[(BigRational, BigRational)], degree_bound: usize) -> Result<RationalPoly> {
    let mut seen = BTreeSet::new();
    for (x, _) in samples {
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateAbscissa(x.to_string()));
        }
    }
    let n = degree_bound + 1;
    if samples.len() < n {
        return Err(Error::OverdeterminedMismatch(format!("{} samples for degree bound {degree_bound}", samples.len())));
    }
    let (fit, extra) = samples.split_at(n);
    let mut p = RationalPoly::default();
    for (i, (xi, yi)) in fit.iter().enumerate() {
        let mut basis = RationalPoly::constant(yi.clone());
        for (j, (xj, _)) in fit.iter().enumerate() {
            if i == j {
                continue;
            }
            let inv = (xi - xj).recip();
            basis = &basis.scale_shift(&inv, 1) - &basis.scale_shift(&(xj * &inv), 0);
        }
        p += &basis;
    }
    for (x, y) in extra {
        if &p.eval(x) != y {
            return Err(Error::OverdeterminedMismatch(x.to_string()));
        }
    }
    Ok(p)
}

/// Interpolation through integer values at `x = 2^l`.
pub fn interpolate_levels(samples: &[(u32, i64)], degree_bound: usize) -> Result<RationalPoly> {
    let pts: Vec<(BigRational, BigRational)> =
        samples.iter().map(|&(l, v)| (BigRational::from_integer(BigInt::one() << l), int(v))).collect();
    interpolate(&pts, degree_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_cubic() {
        assert_eq!(interpolate_levels(&[(0, 7)], 0).unwrap(), RationalPoly::from_ints(&[7]));
        // x(4x^2-5x+2)
        let s = [(1, 16), (2, 184), (3, 1744), (4, 15136)];
        assert_eq!(interpolate_levels(&s, 3).unwrap(), RationalPoly::from_ints(&[0, 2, -5, 4]));
        let csu = [(1, -11), (2, -131), (3, -1219), (4, -10371)];
        let want = RationalPoly::new(vec![int(-3), rat(8, 3), int(2), rat(-8, 3)]);
        assert_eq!(interpolate_levels(&csu, 3).unwrap(), want);
    }

    #[test]
    fn errors() {
        assert!(matches!(interpolate_levels(&[(1, 1), (1, 2)], 1), Err(Error::DuplicateAbscissa(_))));
        assert!(matches!(interpolate_levels(&[(1, 1), (2, 2), (3, 5)], 1), Err(Error::OverdeterminedMismatch(_))));
    }

    #[test]
    fn formatting() {
        let p = RationalPoly::new(vec![int(-1), rat(11, 3), int(-3), rat(4, 3)]);
        assert_eq!(p.to_string(), "4/3*x^3 - 3*x^2 + 11/3*x - 1");
        assert_eq!(RationalPoly::from_ints(&[0, 1, 1]).to_string(), "x^2 + x");
        for s in ["3l+6", "l+5", "4", "2l", "-l-3"] {
            assert_eq!(s.parse::<LinearForm>().unwrap().to_string(), s);
        }
    }
}
