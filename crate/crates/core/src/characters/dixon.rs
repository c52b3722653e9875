//! Dixon-Schneider character tables over a prime field F_P.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::{char_poly, nullspace, prime_congruent_one, roots, Fp, Mat};
use crate::algebra::group::{GenGroup, GroupOps};
use crate::error::{Error, Result};

/// Largest group order accepted by the oracle.
pub const ORACLE_MAX_ORDER: usize = 1 << 16;
pub const ORACLE_MAX_CLASSES: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub prime: u64,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    /// class index of the inverse of each class representative
    pub inverse_class: Vec<usize>,
    pub degrees: Vec<u64>,
    /// `values[χ][class]` in F_P
    pub values: Vec<Vec<u64>>,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
    pub fn field(&self) -> Fp {
        Fp { p: self.prime }
    }
    /// Row index of a class function, if it is irreducible.
    pub fn find(&self, values: &[u64]) -> Option<usize> {
        self.values.iter().position(|v| v == values)
    }
    /// `<a, b>` computed in F_P.
    pub fn inner(&self, a: &[u64], b: &[u64]) -> u64 {
        let f = self.field();
        let mut s = 0;
        for c in 0..a.len() {
            let t = f.mul(self.class_sizes[c] % f.p, f.mul(a[c], b[self.inverse_class[c]]));
            s = f.add(s, t);
        }
        f.mul(s, f.inv(self.order % f.p))
    }
}

/// Default prime: `P ≡ 1 (mod exp G)` and `P > max(|G|, 2·√|G|·exp G)`.
pub fn default_prime<O: GroupOps>(g: &GenGroup<O>) -> Result<u64> {
    let e = g.exponent();
    let n = g.order() as u64;
    let bound = n.max(2 * ((n as f64).sqrt().ceil() as u64) * e);
    prime_congruent_one(e, bound)
}

pub fn dixon_table<O: GroupOps>(g: &GenGroup<O>) -> Result<CharTable> {
    let p = default_prime(g)?;
    dixon_table_mod(g, p)
}

/// Table with values in F_P for a caller-chosen prime (`P ≡ 1 mod exp G`, `P > |G|`).
pub fn dixon_table_mod<O: GroupOps>(g: &GenGroup<O>, prime: u64) -> Result<CharTable> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::ScaleExceeded(n));
    }
    let cl = g.classes();
    let k = cl.len();
    if k > ORACLE_MAX_CLASSES {
        return Err(Error::ScaleExceeded(n));
    }
    let f = Fp { p: prime };
    let inverses = g.inverses();
    let inverse_class: Vec<usize> = cl.reps.iter().map(|&r| cl.class_of[inverses[r as usize] as usize] as usize).collect();

    // members of each class
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (i, &c) in cl.class_of.iter().enumerate() {
        members[c as usize].push(i as u32);
    }
    // a[j][l][m] = #{x ∈ C_j : x⁻¹ g_m ∈ C_l}
    let class_matrix = |j: usize| -> Mat {
        let mut m = vec![vec![0u64; k]; k];
        for &x in &members[j] {
            let xi = inverses[x as usize];
            for (mm, &rep) in cl.reps.iter().enumerate() {
                let y = g.mul_idx(xi, rep);
                let l = cl.class_of[y as usize] as usize;
                m[l][mm] += 1;
            }
        }
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x %= f.p;
            }
        }
        m
    };
    let mats: Vec<Mat> = crate::par::map_collect((0..k).collect(), |&j| class_matrix(j));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![identity];
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut attempts = 0;
    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            done.push(space.into_iter().next().unwrap());
            continue;
        }
        attempts += 1;
        if attempts > 64 * k {
            return Err(Error::ScaleExceeded(n));
        }
        // random combination of class matrices restricted to the space
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..f.p)).collect();
        let mut comb = vec![vec![0u64; k]; k];
        for (j, m) in mats.iter().enumerate() {
            if coeffs[j] == 0 {
                continue;
            }
            for r in 0..k {
                for c in 0..k {
                    if m[r][c] != 0 {
                        comb[r][c] = f.add(comb[r][c], f.mul(coeffs[j], m[r][c]));
                    }
                }
            }
        }
        let d = space.len();
        let restricted = restrict(&f, &comb, &space);
        let cp = char_poly(&f, &restricted);
        for ev in roots(&f, &cp, &mut rng) {
            let mut shifted = restricted.clone();
            for i in 0..d {
                shifted[i][i] = f.sub(shifted[i][i], ev);
            }
            // nullspace in coordinates of the space basis; restricted acts on columns
            let ker = nullspace(&f, &shifted, d);
            let sub: Vec<Vec<u64>> = ker
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; k];
                    for (t, &ct) in c.iter().enumerate() {
                        if ct == 0 {
                            continue;
                        }
                        for i in 0..k {
                            v[i] = f.add(v[i], f.mul(ct, space[t][i]));
                        }
                    }
                    v
                })
                .collect();
            if sub.len() == d {
                // no splitting with this combination; retry
                pending.push(sub);
                break;
            }
            pending.push(sub);
        }
    }
    let order = n as u64;
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for v in done {
        let id_class = cl.class_of[0] as usize;
        let inv0 = f.inv(v[id_class]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
        let mut s = 0u64;
        for c in 0..k {
            let t = f.mul(f.mul(omega[c], omega[inverse_class[c]]), f.inv(cl.sizes[c] as u64 % f.p));
            s = f.add(s, t);
        }
        let deg_sq = f.mul(order % f.p, f.inv(s));
        let deg = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|d| order % d == 0 && (d * d) % f.p == deg_sq)
            .ok_or(Error::ScaleExceeded(n))?;
        let vals: Vec<u64> = (0..k).map(|c| f.mul(f.mul(omega[c], deg % f.p), f.inv(cl.sizes[c] as u64 % f.p))).collect();
        rows.push((deg, vals));
    }
    rows.sort();
    if rows.len() != k || rows.iter().map(|(d, _)| d * d).sum::<u64>() != order {
        return Err(Error::ScaleExceeded(n));
    }
    Ok(CharTable {
        prime,
        order,
        class_sizes: cl.sizes.iter().map(|&s| s as u64).collect(),
        inverse_class,
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
    })
}

/// Matrix of `m` acting on column vectors, restricted to the invariant span of `basis`.
fn restrict(f: &Fp, m: &Mat, basis: &[Vec<u64>]) -> Mat {
    let d = basis.len();
    let k = m.len();
    // images m·b_t
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..k).map(|r| m[r].iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect())
        .collect();
    // express images in the basis by elimination on [basis^T | images^T]
    let mut aug: Mat = (0..k)
        .map(|r| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[r]).collect();
            row.extend(images.iter().map(|im| im[r]));
            row
        })
        .collect();
    let mut piv_row = 0;
    for c in 0..d {
        let pr = (piv_row..k).find(|&i| aug[i][c] != 0).expect("basis is independent");
        aug.swap(piv_row, pr);
        let inv = f.inv(aug[piv_row][c]);
        for x in aug[piv_row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..k {
            if i != piv_row && aug[i][c] != 0 {
                let t = aug[i][c];
                for j in 0..2 * d {
                    let v = f.mul(t, aug[piv_row][j]);
                    aug[i][j] = f.sub(aug[i][j], v);
                }
            }
        }
        piv_row += 1;
    }
    // coordinates: column t of result = aug[0..d][d + t]
    (0..d).map(|i| (0..d).map(|t| aug[i][d + t]).collect()).collect()
}

/// Defect `v2(|G|) - v2(χ(1))`.
pub fn defect(degree: u64, group_order_v2: u32) -> u32 {
    group_order_v2 - degree.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::perm::PermOps;

    fn sym(n: usize) -> GenGroup<PermOps> {
        let ops = PermOps::new(n);
        let c: Vec<u32> = (0..n as u32).collect();
        let g1 = ops.from_cycles(&[&c]);
        let g2 = ops.from_cycles(&[&[0, 1]]);
        GenGroup::new(ops, vec![g1, g2]).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let t = dixon_table(&sym(3)).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        let t = dixon_table(&sym(4)).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);
        let t = dixon_table(&sym(5)).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn orthogonality() {
        let t = dixon_table(&sym(5)).unwrap();
        for i in 0..t.len() {
            for j in 0..t.len() {
                assert_eq!(t.inner(&t.values[i], &t.values[j]), (i == j) as u64);
            }
        }
    }
}
