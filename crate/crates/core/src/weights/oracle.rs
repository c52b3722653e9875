//! Comparison of a labeled Out-action with the brute-force character table of `P`.

use std::collections::BTreeMap;

use super::outaction::OutAction;
use crate::algebra::group::{GenGroup, GroupOps};
use crate::characters::dixon::dixon_table;
use crate::characters::zcount::{histogram_of_degrees, DefectHistogram};
use crate::error::Result;

/// For every orbit: its degree and the set of stabilizers of its members
/// (each a sorted list of Out element indices).
pub type OrbitSignature = BTreeMap<(u64, Vec<Vec<u32>>), usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub symbolic: DefectHistogram,
    pub oracle: DefectHistogram,
    pub orbits_agree: bool,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.symbolic == self.oracle && self.orbits_agree
    }
}

pub fn orbit_signature(act: &OutAction) -> OrbitSignature {
    let n = act.len();
    let nout = act.out.order();
    let stab: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..nout as u32).filter(|&g| act.images[g as usize][i] == i as u32).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut sig = OrbitSignature::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut members: Vec<usize> = act.images.iter().map(|img| img[i] as usize).collect();
        members.sort_unstable();
        members.dedup();
        let mut stabs: Vec<Vec<u32>> = members.iter().map(|&j| stab[j].clone()).collect();
        stabs.sort();
        stabs.dedup();
        for &j in &members {
            seen[j] = true;
        }
        *sig.entry((act.degrees[i], stabs)).or_insert(0) += 1;
    }
    sig
}

/// `conj(j, g)` must return `k_j⁻¹ g k_j` for a representative `k_j` of the
/// `j`-th generator of `act.out`.
pub fn compare_with_oracle<O: GroupOps>(act: &OutAction, p: &GenGroup<O>, conj: impl Fn(usize, &O::Elem) -> O::Elem) -> Result<OracleReport> {
    let table = dixon_table(p)?;
    let classes = p.classes();
    let order_v2 = p.order().trailing_zeros();
    let gen_action: Vec<Vec<u32>> = (0..act.out.gens().len())
        .map(|j| {
            let cols: Vec<usize> = classes
                .reps
                .iter()
                .map(|&r| {
                    let y = conj(j, p.elem(r));
                    classes.class_of[p.index_of(&y).expect("conjugation preserves P") as usize] as usize
                })
                .collect();
            table
                .values
                .iter()
                .map(|row| {
                    let v: Vec<u64> = cols.iter().map(|&c| row[c]).collect();
                    table.find(&v).expect("automorphism permutes Irr") as u32
                })
                .collect()
        })
        .collect();
    let labels = (0..table.len() as u32).map(crate::characters::label::CharLabel::TableRow).collect();
    let dixon_act = OutAction::new(act.out.clone(), labels, table.degrees.clone(), order_v2, gen_action);
    Ok(OracleReport {
        symbolic: histogram_of_degrees(&act.degrees, act.order_v2),
        oracle: histogram_of_degrees(&table.degrees, order_v2),
        orbits_agree: act.order_v2 == order_v2 && orbit_signature(act) == orbit_signature(&dixon_act),
    })
}
