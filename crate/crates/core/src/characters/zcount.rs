//! Defect-zero counts and defect histograms.

use std::collections::BTreeMap;

use super::dixon::{dixon_table, CharTable};
use crate::algebra::group::{GenGroup, GroupOps};
use crate::error::Result;

pub type DefectHistogram = BTreeMap<u32, u64>;

pub fn histogram_of_degrees(degrees: &[u64], order_v2: u32) -> DefectHistogram {
    let mut h = DefectHistogram::new();
    for &d in degrees {
        *h.entry(order_v2 - d.trailing_zeros()).or_default() += 1;
    }
    h
}

pub fn defect_histogram(t: &CharTable) -> DefectHistogram {
    histogram_of_degrees(&t.degrees, t.order.trailing_zeros())
}

/// Number of irreducible characters of 2-defect zero.
pub fn z_defect_zero<O: GroupOps>(g: &GenGroup<O>) -> Result<u64> {
    let n = g.order();
    if n == 1 {
        return Ok(1);
    }
    if n % 2 == 1 {
        return Ok(g.class_count() as u64);
    }
    if n.is_power_of_two() {
        return Ok(0);
    }
    // a central involution lies in every defect group
    if g.center().len() % 2 == 0 {
        return Ok(0);
    }
    let t = dixon_table(g)?;
    let v = n.trailing_zeros();
    Ok(t.degrees.iter().filter(|d| d.trailing_zeros() == v).count() as u64)
}
