//! Finite fields GF(p^n) stored in logarithmic form with a Zech table.
//!
//! An element is a `Fe(u32)`: 0 is zero, otherwise `k+1` encodes `g^k` for the
//! cached primitive element `g`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    degree: u32,
    order: u32,
    /// coefficients of the monic primitive polynomial, low degree first, leading 1 omitted
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

fn pow_u32(p: u32, n: u32) -> u64 {
    (p as u64).pow(n)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` for a prime `p`.
pub fn prime_power(n: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && n % p != 0 {
        p += 1;
    }
    if n % p != 0 {
        p = n;
    }
    let (mut m, mut e) = (n, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p as u32, e))
}

impl Field {
    pub fn new(p: u32, degree: u32) -> Result<Field> {
        if !is_prime(p as u64) || degree == 0 {
            return Err(Error::ParamsInvalid(format!("GF({p}^{degree})")));
        }
        let order = pow_u32(p, degree);
        if order > 1 << 26 {
            return Err(Error::ParamsInvalid(format!("GF({p}^{degree}) too large")));
        }
        let order = order as u32;
        let n = degree as usize;
        let mut coeffs = vec![0u32; n];
        loop {
            if let Some(exp) = Self::try_primitive(p, &coeffs, order) {
                let mut log = vec![NO_LOG; order as usize];
                for (k, &v) in exp.iter().enumerate() {
                    log[v as usize] = k as u32;
                }
                let zech = exp
                    .iter()
                    .map(|&v| {
                        let w = v - v % p + (v % p + 1) % p;
                        if w == 0 { NO_LOG } else { log[w as usize] }
                    })
                    .collect();
                return Ok(Field { p, degree, order, modulus: coeffs, exp, log, zech });
            }
            // next candidate in base-p counting order
            let mut i = 0;
            loop {
                if i == n {
                    return Err(Error::ParamsInvalid(format!("no primitive polynomial for GF({p}^{degree})")));
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Powers of `x` modulo `x^n + Σ c_i x^i` as base-p integers, if `x` has order `p^n - 1`.
    fn try_primitive(p: u32, coeffs: &[u32], order: u32) -> Option<Vec<u32>> {
        let n = coeffs.len();
        if coeffs[0] == 0 {
            return None;
        }
        let mut cur = vec![0u32; n];
        cur[0] = 1;
        let mut exp = Vec::with_capacity(order as usize - 1);
        for k in 0..order - 1 {
            let v = cur.iter().rev().fold(0u32, |acc, &c| acc * p + c);
            if k > 0 && v == 1 {
                return None;
            }
            exp.push(v);
            let top = cur[n - 1];
            for i in (1..n).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..n {
                cur[i] = (cur[i] + (p - coeffs[i]) * top) % p;
            }
        }
        let v = cur.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        (v == 1).then_some(exp)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn unit_order(&self) -> u32 {
        self.order - 1
    }

    pub fn primitive(&self) -> Fe {
        if self.order == 2 { Fe::ONE } else { Fe(2) }
    }

    /// `g^k` for the primitive element `g`.
    pub fn gen_pow(&self, k: i64) -> Fe {
        let m = self.unit_order() as i64;
        Fe(k.rem_euclid(m) as u32 + 1)
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (!a.is_zero()).then(|| a.0 - 1)
    }

    pub fn from_int(&self, n: i64) -> Fe {
        let v = n.rem_euclid(self.p as i64) as u32;
        if v == 0 { Fe::ZERO } else { Fe(self.log[v as usize] + 1) }
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let m = self.unit_order();
        let s = (a.0 - 1) as u64 + (b.0 - 1) as u64;
        Fe((s % m as u64) as u32 + 1)
    }

    pub fn inv(&self, a: Fe) -> Fe {
        assert!(!a.is_zero(), "inverse of zero");
        let m = self.unit_order();
        Fe((m - (a.0 - 1)) % m + 1)
    }

    pub fn pow(&self, a: Fe, e: i64) -> Fe {
        if a.is_zero() {
            return if e == 0 { Fe::ONE } else { Fe::ZERO };
        }
        let m = self.unit_order() as i64;
        let k = ((a.0 - 1) as i64 * e.rem_euclid(m)) % m;
        Fe(k as u32 + 1)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        let m = self.unit_order();
        Fe((a.0 - 1 + m / 2) % m + 1)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let m = self.unit_order();
        let (i, j) = (a.0 - 1, b.0 - 1);
        let d = (j + m - i) % m;
        let z = self.zech[d as usize];
        if z == NO_LOG {
            Fe::ZERO
        } else {
            Fe((i + z) % m + 1)
        }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: Fe) -> u32 {
        let m = self.unit_order();
        m / num_integer::gcd(m, a.0 - 1)
    }

    /// Base-p digits of an element as an integer (additive coordinates).
    pub fn to_vector_int(&self, a: Fe) -> u32 {
        if a.is_zero() { 0 } else { self.exp[(a.0 - 1) as usize] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields_are_fields() {
        for &(p, n) in &[(5, 2), (3, 4), (17, 2), (2, 3)] {
            let f = Field::new(p, n).unwrap();
            let q = f.order();
            for a in 1..q {
                let a = Fe(a);
                assert_eq!(f.mul(a, f.inv(a)), Fe::ONE);
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            }
            let mut s = Fe::ZERO;
            for _ in 0..p {
                s = f.add(s, Fe::ONE);
            }
            assert_eq!(s, Fe::ZERO);
        }
    }

    #[test]
    fn distributive_gf81() {
        let f = Field::new(3, 4).unwrap();
        for a in (0..81).step_by(7) {
            for b in (0..81).step_by(5) {
                for c in (0..81).step_by(3) {
                    let (a, b, c) = (Fe(a), Fe(b), Fe(c));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(97), Some((97, 1)));
        assert_eq!(prime_power(12), None);
    }
}
