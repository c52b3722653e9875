//! Irreducible characters of `Q_{2^{l+3}} = <a, b | a^{2^{l+2}}, b^2 = a^{2^{l+1}}, b⁻¹ab = a⁻¹>`.

use super::dixon::dixon_table;
use super::label::CharLabel;
use super::modp::Fp;
use crate::algebra::group::GenGroup;
use crate::algebra::perm::{Perm, PermOps};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionChar {
    pub label: CharLabel,
    pub degree: u64,
    pub center_in_kernel: bool,
}

pub fn quaternion_irr(l: u32) -> Vec<QuaternionChar> {
    let mut out: Vec<QuaternionChar> = (0..4)
        .map(|i| QuaternionChar { label: CharLabel::QuaternionLinear(i), degree: 1, center_in_kernel: true })
        .collect();
    for u in 0..=l {
        for t in (1..(1u32 << (u + 1))).step_by(2) {
            out.push(QuaternionChar { label: CharLabel::QuaternionPsi { u, t }, degree: 2, center_in_kernel: u < l });
        }
    }
    out
}

/// Value of a quaternion character at `a^i b^s`, with `omega` of order `2^{l+2}` in F_P.
pub fn resolve(l: u32, label: &CharLabel, f: &Fp, omega: u64, i: u64, s: u8) -> u64 {
    let n = 1u64 << (l + 2);
    let i = i % n;
    match *label {
        CharLabel::QuaternionLinear(e) => {
            let (e1, e2) = ((e & 1) as u64, ((e >> 1) & 1) as u64);
            if (e1 * i + e2 * s as u64) % 2 == 0 { 1 } else { f.p - 1 }
        }
        CharLabel::QuaternionPsi { u, t } => {
            if s == 1 {
                return 0;
            }
            let k = ((1u64 << (l - u)) * t as u64 * i) % n;
            f.add(f.pow(omega, k), f.pow(omega, (n - k) % n))
        }
        _ => panic!("not a quaternion label: {label}"),
    }
}

/// `Q_{2^{l+3}}` in its left regular representation; `a^i b^s` is point `i + s·2^{l+2}`.
pub fn quaternion_group(l: u32) -> Result<GenGroup<PermOps>> {
    let n = 1u32 << (l + 2);
    let a: Perm = (0..2 * n).map(|x| (x % n + 1) % n + (x / n) * n).collect();
    let b: Perm = (0..2 * n)
        .map(|x| {
            let j = (n - x % n) % n;
            if x < n { j + n } else { (j + n / 2) % n }
        })
        .collect();
    GenGroup::new(PermOps::new(2 * n as usize), vec![a, b])
}

/// Whether the labeled characters are exactly the rows of the Dixon table.
pub fn matches_dixon(l: u32) -> Result<bool> {
    let g = quaternion_group(l)?;
    let t = dixon_table(&g)?;
    let f = t.field();
    let n = 1u64 << (l + 2);
    let omega = f.root_of_unity(n);
    let reps: Vec<(u64, u8)> = g.classes().reps.iter().map(|&r| {
        let x = g.elem(r)[0] as u64;
        (x % n, (x / n) as u8)
    }).collect();
    let irr = quaternion_irr(l);
    let mut rows: Vec<usize> = Vec::new();
    for c in &irr {
        let v: Vec<u64> = reps.iter().map(|&(i, s)| resolve(l, &c.label, &f, omega, i, s)).collect();
        match t.find(&v) {
            Some(r) => rows.push(r),
            None => return Ok(false),
        }
    }
    rows.sort_unstable();
    rows.dedup();
    Ok(rows.len() == irr.len() && irr.len() == t.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for l in 0..=5 {
            let irr = quaternion_irr(l);
            assert_eq!(irr.len(), (1 << (l + 1)) + 3);
            assert_eq!(irr.iter().filter(|c| c.degree == 2).count(), (1 << (l + 1)) - 1);
            assert_eq!(irr.iter().filter(|c| !c.center_in_kernel).count(), 1 << l);
            let sq: u64 = irr.iter().map(|c| c.degree * c.degree).sum();
            assert_eq!(sq, 1 << (l + 3));
        }
    }

    #[test]
    fn dixon_rows() {
        for l in 0..=2 {
            assert_eq!(quaternion_group(l).unwrap().order(), 1 << (l + 3));
            assert!(matches_dixon(l).unwrap(), "l={l}");
        }
    }
}
