//! Method of little groups over explicitly enumerated groups with cyclic `G/G0`.

use super::dixon::{dixon_table_mod, CharTable};
use super::label::CharLabel;
use super::modp::{prime_congruent_one, Fp};
use crate::algebra::group::{GenGroup, GroupOps};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LabeledIrr {
    pub prime: u64,
    pub labels: Vec<CharLabel>,
    pub degrees: Vec<u64>,
    /// values on the classes of `G`
    pub values: Vec<Vec<u64>>,
}

/// Per-element values of a class function of `h` given on classes.
fn per_element<O: GroupOps>(h: &GenGroup<O>, class_vals: &[u64]) -> Vec<u64> {
    h.classes().class_of.iter().map(|&c| class_vals[c as usize]).collect()
}

/// `Irr(G)` from `Irr(G0)` with `G0` normal and `G/G0` cyclic.
///
/// `auts` are automorphisms of `G` fixing `G0` setwise, as permutations of element
/// indices; the result includes their action on the labels. `pick` selects which
/// extension of each invariant character is called canonical (0 for the first).
pub fn little_groups_irr<O: GroupOps>(
    g: &GenGroup<O>,
    g0: &[u32],
    auts: &[Vec<u32>],
    pick: usize,
) -> Result<(LabeledIrr, Vec<Vec<u32>>)> {
    let n = g.order();
    let e = g.exponent();
    let prime = prime_congruent_one(e, (n as u64).max(64))?;
    let f = Fp { p: prime };
    let in_g0: Vec<bool> = {
        let mut v = vec![false; n];
        for &i in g0 {
            v[i as usize] = true;
        }
        v
    };
    let m = n / g0.len();
    // a generator of G modulo G0
    let x = (0..n as u32)
        .find(|&x| {
            let mut y = x;
            let mut k = 1;
            while !in_g0[y as usize] {
                y = g.mul_idx(y, x);
                k += 1;
            }
            k == m
        })
        .ok_or(Error::ExtensionHypothesisFails)?;
    let sub0 = g.subgroup(g0);
    let t0 = dixon_table_mod(&sub0, prime)?;
    let idx0: Vec<u32> = sub0.elements().iter().map(|el| g.index_of(el).unwrap()).collect();
    let pos0: std::collections::HashMap<u32, usize> = idx0.iter().enumerate().map(|(i, &gi)| (gi, i)).collect();
    let elem_vals0: Vec<Vec<u64>> = t0.values.iter().map(|v| per_element(&sub0, v)).collect();

    // θ^x(h) = θ(x⁻¹ h x)
    let xi = g.inv_idx(x);
    let conj_row = |row: usize| -> usize {
        let vals: Vec<u64> = (0..idx0.len())
            .map(|i| elem_vals0[row][pos0[&g.mul_idx(g.mul_idx(xi, idx0[i]), x)]])
            .collect();
        let cls: Vec<u64> = sub0.classes().reps.iter().map(|&r| vals[r as usize]).collect();
        t0.find(&cls).expect("conjugate of an irreducible is irreducible")
    };
    let shift: Vec<usize> = (0..t0.len()).map(conj_row).collect();

    let cl = g.classes();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut values = Vec::new();
    let mut seen = vec![false; t0.len()];
    for th in 0..t0.len() {
        if seen[th] {
            continue;
        }
        let mut orbit = vec![th];
        seen[th] = true;
        let mut cur = shift[th];
        while cur != th {
            seen[cur] = true;
            orbit.push(cur);
            cur = shift[cur];
        }
        let k = orbit.len();
        // inertia group I = <x^k, G0>
        let mut ielems: Vec<u32> = Vec::new();
        let xk = (1..k).fold(x, |acc, _| g.mul_idx(acc, x));
        let mut coset = 0u32;
        for _ in 0..m / k {
            ielems.extend(idx0.iter().map(|&h| g.mul_idx(coset, h)));
            coset = g.mul_idx(coset, xk);
        }
        ielems.sort_unstable();
        let isub = g.subgroup(&ielems);
        let ti = dixon_table_mod(&isub, prime)?;
        let ipos: std::collections::HashMap<u32, usize> =
            isub.elements().iter().enumerate().map(|(i, el)| (g.index_of(el).unwrap(), i)).collect();
        let extensions: Vec<usize> = (0..ti.len())
            .filter(|&r| {
                let ev = per_element(&isub, &ti.values[r]);
                (0..idx0.len()).all(|i| ev[ipos[&idx0[i]]] == elem_vals0[th][i])
            })
            .collect();
        if extensions.len() != m / k {
            return Err(Error::ExtensionHypothesisFails);
        }
        let hat = per_element(&isub, &ti.values[extensions[pick % extensions.len()]]);
        // β_j(x^{k e} g0) = ζ^{j e}
        let r = (m / k) as u64;
        let zeta = if r == 1 { 1 } else { f.root_of_unity(r) };
        let mut exponent_of = vec![0u64; isub.order()];
        let mut c = 0u32;
        for ex in 0..r {
            for &h in &idx0 {
                exponent_of[ipos[&g.mul_idx(c, h)]] = ex;
            }
            c = g.mul_idx(c, xk);
        }
        for j in 0..r {
            let f_i: Vec<u64> = (0..isub.order()).map(|i| f.mul(hat[i], f.pow(zeta, j * exponent_of[i]))).collect();
            // induce to G, value on each class representative
            let inv_i = f.inv(ielems.len() as u64 % f.p);
            let vals: Vec<u64> = cl
                .reps
                .iter()
                .map(|&rep| {
                    let mut s = 0;
                    for y in 0..n as u32 {
                        let c = g.mul_idx(g.mul_idx(y, rep), g.inv_idx(y));
                        if let Some(&p) = ipos.get(&c) {
                            s = f.add(s, f_i[p]);
                        }
                    }
                    f.mul(s, inv_i)
                })
                .collect();
            labels.push(CharLabel::LittleGroups(
                Box::new(CharLabel::TableRow(th as u32)),
                Box::new(CharLabel::Opaque(j as u32)),
            ));
            degrees.push(k as u64 * t0.degrees[th]);
            values.push(vals);
        }
    }
    let out = LabeledIrr { prime, labels, degrees, values };
    let actions = auts.iter().map(|a| act_on_explicit(g, &out, a)).collect();
    Ok((out, actions))
}

/// Permutation of the labeled characters induced by an automorphism given on element indices.
pub fn act_on_explicit<O: GroupOps>(g: &GenGroup<O>, irr: &LabeledIrr, aut: &[u32]) -> Vec<u32> {
    let cl = g.classes();
    let mut inv = vec![0u32; aut.len()];
    for (i, &j) in aut.iter().enumerate() {
        inv[j as usize] = i as u32;
    }
    irr.values
        .iter()
        .map(|v| {
            // χ^α(g) = χ(α⁻¹(g))
            let moved: Vec<u64> = cl.reps.iter().map(|&r| v[cl.class_of[inv[r as usize] as usize] as usize]).collect();
            irr.values.iter().position(|w| *w == moved).expect("automorphism permutes Irr") as u32
        })
        .collect()
}

/// Compare a labeled set with a Dixon table computed with the same prime.
pub fn same_characters(irr: &LabeledIrr, t: &CharTable) -> bool {
    let mut a = irr.values.clone();
    let mut b = t.values.clone();
    a.sort();
    b.sort();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::perm::PermOps;
    use crate::characters::dixon::dixon_table_mod;

    #[test]
    fn dihedral_over_cyclic() {
        let ops = PermOps::new(4);
        let r = ops.from_cycles(&[&[0, 1, 2, 3]]);
        let s = ops.from_cycles(&[&[1, 3]]);
        let g = GenGroup::new(ops, vec![r.clone(), s]).unwrap();
        let c4 = g.subgroup_closure(&[g.index_of(&r).unwrap()]);
        let (irr, _) = little_groups_irr(&g, &c4, &[], 0).unwrap();
        let mut d = irr.degrees.clone();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 1, 2]);
        let t = dixon_table_mod(&g, irr.prime).unwrap();
        assert!(same_characters(&irr, &t));
        let (other, _) = little_groups_irr(&g, &c4, &[], 1).unwrap();
        assert!(same_characters(&other, &t));
    }
}
