//! Permutations on `0..n` as image arrays; composition `(a*b)(i) = b(a(i))`
//! so that products act on the right.

use super::group::GroupOps;

pub type Perm = Box<[u32]>;

#[derive(Clone, Copy, Debug)]
pub struct PermOps {
    pub degree: usize,
}

impl PermOps {
    pub fn new(degree: usize) -> Self {
        PermOps { degree }
    }
    pub fn from_images(&self, v: Vec<u32>) -> Perm {
        assert_eq!(v.len(), self.degree);
        v.into_boxed_slice()
    }
    /// Product of disjoint cycles on `0..n`.
    pub fn from_cycles(&self, cycles: &[&[u32]]) -> Perm {
        let mut v: Vec<u32> = (0..self.degree as u32).collect();
        for c in cycles {
            for i in 0..c.len() {
                v[c[i] as usize] = c[(i + 1) % c.len()];
            }
        }
        v.into_boxed_slice()
    }
}

impl GroupOps for PermOps {
    type Elem = Perm;
    fn identity(&self) -> Perm {
        (0..self.degree as u32).collect()
    }
    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.iter().map(|&i| b[i as usize]).collect()
    }
    fn inv(&self, a: &Perm) -> Perm {
        let mut v = vec![0u32; a.len()];
        for (i, &j) in a.iter().enumerate() {
            v[j as usize] = i as u32;
        }
        v.into_boxed_slice()
    }
}
