//! An Out-group acting on a labeled copy of `Irr(P)`.

use crate::algebra::group::{generators_of, GenGroup, GroupOps};
use crate::algebra::perm::{Perm, PermOps};
use crate::characters::label::CharLabel;

pub struct OutAction {
    pub out: GenGroup<PermOps>,
    pub labels: Vec<CharLabel>,
    pub degrees: Vec<u64>,
    /// `v2(|P|)`
    pub order_v2: u32,
    /// permutation of label indices for every element of `out`, by element index
    pub images: Vec<Vec<u32>>,
}

impl OutAction {
    /// `gen_action[i]` is the permutation of labels induced by `out.gens()[i]`.
    pub fn new(out: GenGroup<PermOps>, labels: Vec<CharLabel>, degrees: Vec<u64>, order_v2: u32, gen_action: Vec<Vec<u32>>) -> Self {
        assert_eq!(out.gens().len(), gen_action.len());
        let images = element_images(&out, &gen_action, labels.len());
        OutAction { out, labels, degrees, order_v2, images }
    }

    /// Trivial Out-group.
    pub fn trivial(labels: Vec<CharLabel>, degrees: Vec<u64>, order_v2: u32) -> Self {
        let out = GenGroup::new(PermOps::new(1), vec![]).unwrap();
        let n = labels.len();
        OutAction { out, labels, degrees, order_v2, images: vec![(0..n as u32).collect()] }
    }

    pub fn defect(&self, i: usize) -> u32 {
        self.order_v2 - self.degrees[i].trailing_zeros()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The action is a well-defined homomorphism from `out` and preserves degrees.
    pub fn validate(&self) -> bool {
        let n = self.labels.len();
        for g in self.out.gens() {
            let gidx = self.out.index_of(g).unwrap();
            let ga = &self.images[gidx as usize];
            if (0..n).any(|i| self.degrees[ga[i] as usize] != self.degrees[i]) {
                return false;
            }
            for x in 0..self.out.order() as u32 {
                let xg = self.out.mul_idx(x, gidx);
                let xa = &self.images[x as usize];
                let composed = &self.images[xg as usize];
                if (0..n).any(|i| composed[i] != xa[ga[i] as usize]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Images for every element as a left action: the image of `x·g` is `act(x) ∘ act(g)`.
fn element_images(out: &GenGroup<PermOps>, gen_action: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let ord = out.order();
    let mut images: Vec<Option<Vec<u32>>> = vec![None; ord];
    images[0] = Some((0..n as u32).collect());
    let gidx: Vec<u32> = out.gens().iter().map(|g| out.index_of(g).unwrap()).collect();
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (k, &g) in gidx.iter().enumerate() {
            let y = out.mul_idx(x, g);
            if images[y as usize].is_none() {
                let xa = images[x as usize].as_ref().unwrap();
                images[y as usize] = Some(gen_action[k].iter().map(|&i| xa[i as usize]).collect());
                queue.push_back(y);
            }
        }
    }
    images.into_iter().map(|v| v.expect("generators generate")).collect()
}

/// Builds a permutation group from an explicit element list with the identity first,
/// choosing a small generating set greedily.
pub fn perm_group_from_elements(degree: usize, elems: Vec<Perm>) -> GenGroup<PermOps> {
    let ops = PermOps::new(degree);
    debug_assert_eq!(elems[0], ops.identity());
    let provisional = GenGroup::from_elements(ops, vec![], elems.clone());
    let all: Vec<u32> = (0..elems.len() as u32).collect();
    let gens: Vec<Perm> = generators_of(&provisional, &all).iter().map(|&i| elems[i as usize].clone()).collect();
    GenGroup::from_elements(ops, gens, elems)
}
