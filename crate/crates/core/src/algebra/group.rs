//! Finite groups given by generators, enumerated by breadth-first closure.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 1 << 23;

/// Multiplication context for one kind of group element.
///
/// `Ord` on elements is the canonical encoding order.
pub trait GroupOps: Clone + Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Send + Sync + Debug;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn conj(&self, g: &Self::Elem, x: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(g, x), &self.inv(g))
    }
    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        let mut r = self.identity();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }
    fn order_of(&self, a: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut x = a.clone();
        let mut n = 1;
        while x != id {
            x = self.mul(&x, a);
            n += 1;
        }
        n
    }
}

/// Breadth-first closure of `gens`, identity first.
pub fn closure<O: GroupOps>(ops: &O, gens: &[O::Elem], cap: usize) -> Result<Vec<O::Elem>> {
    let id = ops.identity();
    let mut seen: HashMap<O::Elem, ()> = HashMap::new();
    let mut out = vec![id.clone()];
    seen.insert(id, ());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = ops.mul(&out[i], g);
            if !seen.contains_key(&y) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(y.clone(), ());
                out.push(y);
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Classes {
    /// canonical (minimal) representative of each class, as element index
    pub reps: Vec<u32>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<u32>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.reps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub struct GenGroup<O: GroupOps> {
    ops: O,
    gens: Vec<O::Elem>,
    elems: Vec<O::Elem>,
    index: HashMap<O::Elem, u32>,
    classes: OnceLock<Classes>,
    inverses: OnceLock<Vec<u32>>,
}

impl<O: GroupOps> Clone for GenGroup<O> {
    fn clone(&self) -> Self {
        GenGroup {
            ops: self.ops.clone(),
            gens: self.gens.clone(),
            elems: self.elems.clone(),
            index: self.index.clone(),
            classes: self.classes.clone(),
            inverses: self.inverses.clone(),
        }
    }
}

impl<O: GroupOps> Debug for GenGroup<O> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GenGroup(order {}, {} gens)", self.elems.len(), self.gens.len())
    }
}

impl<O: GroupOps> GenGroup<O> {
    pub fn new(ops: O, gens: Vec<O::Elem>) -> Result<Self> {
        Self::with_cap(ops, gens, DEFAULT_CAP)
    }

    pub fn with_cap(ops: O, gens: Vec<O::Elem>, cap: usize) -> Result<Self> {
        let elems = closure(&ops, &gens, cap)?;
        Ok(Self::from_elements(ops, gens, elems))
    }

    /// Wraps an already closed element list (identity first).
    pub fn from_elements(ops: O, gens: Vec<O::Elem>, elems: Vec<O::Elem>) -> Self {
        debug_assert!(elems[0] == ops.identity());
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        GenGroup { ops, gens, elems, index, classes: OnceLock::new(), inverses: OnceLock::new() }
    }

    pub fn ops(&self) -> &O {
        &self.ops
    }
    pub fn gens(&self) -> &[O::Elem] {
        &self.gens
    }
    pub fn order(&self) -> usize {
        self.elems.len()
    }
    pub fn elements(&self) -> &[O::Elem] {
        &self.elems
    }
    pub fn elem(&self, i: u32) -> &O::Elem {
        &self.elems[i as usize]
    }
    pub fn index_of(&self, e: &O::Elem) -> Option<u32> {
        self.index.get(e).copied()
    }
    pub fn contains(&self, e: &O::Elem) -> bool {
        self.index.contains_key(e)
    }
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.ops.mul(&self.elems[a as usize], &self.elems[b as usize]);
        self.index[&p]
    }
    pub fn inv_idx(&self, a: u32) -> u32 {
        self.inverses()[a as usize]
    }
    pub fn inverses(&self) -> &[u32] {
        self.inverses.get_or_init(|| {
            self.elems.iter().map(|e| self.index[&self.ops.inv(e)]).collect()
        })
    }
    pub fn gen_indices(&self) -> Vec<u32> {
        self.gens.iter().map(|g| self.index[g]).collect()
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> Classes {
        let n = self.elems.len();
        let gen_inv: Vec<O::Elem> = self.gens.iter().map(|g| self.ops.inv(g)).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            class_of[start] = c;
            let mut members = vec![start as u32];
            let mut k = 0;
            while k < members.len() {
                let x = &self.elems[members[k] as usize];
                for (g, gi) in self.gens.iter().zip(&gen_inv) {
                    let y = self.ops.mul(&self.ops.mul(g, x), gi);
                    let j = self.index[&y] as usize;
                    if class_of[j] == u32::MAX {
                        class_of[j] = c;
                        members.push(j as u32);
                    }
                }
                k += 1;
            }
            let rep = *members.iter().min_by(|a, b| self.elems[**a as usize].cmp(&self.elems[**b as usize])).unwrap();
            reps.push(rep);
            sizes.push(members.len());
        }
        Classes { reps, sizes, class_of }
    }

    pub fn class_count(&self) -> usize {
        self.classes().len()
    }

    pub fn center(&self) -> Vec<u32> {
        let cl = self.classes();
        (0..self.order() as u32).filter(|&i| cl.sizes[cl.class_of[i as usize] as usize] == 1).collect()
    }

    pub fn centralizer(&self, g: &O::Elem) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&i| {
                let x = &self.elems[i as usize];
                self.ops.mul(x, g) == self.ops.mul(g, x)
            })
            .collect()
    }

    /// Elements of this group normalizing the subgroup with the given element indices.
    pub fn normalizer_of(&self, h: &[u32]) -> Vec<u32> {
        let hset: std::collections::HashSet<u32> = h.iter().copied().collect();
        let hgens = generators_of(self, h);
        (0..self.order() as u32)
            .filter(|&g| {
                hgens.iter().all(|&x| {
                    let y = self.ops.conj(&self.elems[g as usize], &self.elems[x as usize]);
                    hset.contains(&self.index[&y])
                })
            })
            .collect()
    }

    /// Subgroup generated by the elements at the given indices, as sorted indices.
    pub fn subgroup_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut out = vec![0u32];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in gens {
                let y = self.mul_idx(x, g);
                if !inside[y as usize] {
                    inside[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: &[u32]) -> Vec<u32> {
        let gidx = self.gen_indices();
        let mut gens: Vec<u32> = seeds.to_vec();
        loop {
            let sub = self.subgroup_closure(&gens);
            let set: std::collections::HashSet<u32> = sub.iter().copied().collect();
            let mut grew = false;
            for &x in &gens.clone() {
                for &g in &gidx {
                    let y = self.index[&self.ops.conj(&self.elems[g as usize], &self.elems[x as usize])];
                    if !set.contains(&y) {
                        gens.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    pub fn derived_subgroup(&self) -> Vec<u32> {
        let g = self.gen_indices();
        let mut comms = Vec::new();
        for &a in &g {
            for &b in &g {
                let (ea, eb) = (&self.elems[a as usize], &self.elems[b as usize]);
                let c = self.ops.mul(&self.ops.mul(ea, eb), &self.ops.inv(&self.ops.mul(eb, ea)));
                comms.push(self.index[&c]);
            }
        }
        self.normal_closure(&comms)
    }

    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for x in &self.elems {
            e = num_integer::lcm(e, self.ops.order_of(x));
        }
        e
    }

    /// New group on a subset of elements (given by sorted indices forming a subgroup).
    pub fn subgroup(&self, idx: &[u32]) -> GenGroup<O> {
        let gens: Vec<O::Elem> = generators_of(self, idx).iter().map(|&i| self.elems[i as usize].clone()).collect();
        let mut elems: Vec<O::Elem> = Vec::with_capacity(idx.len());
        elems.push(self.ops.identity());
        elems.extend(idx.iter().filter(|&&i| i != 0).map(|&i| self.elems[i as usize].clone()));
        GenGroup::from_elements(self.ops.clone(), gens, elems)
    }
}

/// A small generating set for a subgroup given by element indices (greedy).
pub fn generators_of<O: GroupOps>(g: &GenGroup<O>, h: &[u32]) -> Vec<u32> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut span = vec![0u32];
    let mut gens = Vec::new();
    for &x in h {
        if span.len() == h.len() {
            break;
        }
        if inside[x as usize] {
            continue;
        }
        gens.push(x);
        let mut k = 0;
        while k < span.len() {
            let y = span[k];
            for &s in &gens {
                let z = g.mul_idx(y, s);
                if !inside[z as usize] {
                    inside[z as usize] = true;
                    span.push(z);
                }
            }
            k += 1;
        }
    }
    gens
}

/// Group of cosets of a central subgroup; elements are canonical coset minima.
#[derive(Clone)]
pub struct QuotientOps<O: GroupOps> {
    pub inner: O,
    pub kernel: std::sync::Arc<Vec<O::Elem>>,
}

impl<O: GroupOps> QuotientOps<O> {
    pub fn canonical(&self, g: &O::Elem) -> O::Elem {
        self.kernel.iter().map(|z| self.inner.mul(g, z)).min().unwrap()
    }
}

impl<O: GroupOps> GroupOps for QuotientOps<O> {
    type Elem = O::Elem;
    fn identity(&self) -> O::Elem {
        self.canonical(&self.inner.identity())
    }
    fn mul(&self, a: &O::Elem, b: &O::Elem) -> O::Elem {
        self.canonical(&self.inner.mul(a, b))
    }
    fn inv(&self, a: &O::Elem) -> O::Elem {
        self.canonical(&self.inner.inv(a))
    }
}

/// `G/Z` for `Z` central in `G`, with the section given by canonical coset minima.
pub fn quotient_by_central<O: GroupOps>(g: &GenGroup<O>, z: &[u32]) -> Result<GenGroup<QuotientOps<O>>> {
    let ops = g.ops();
    for &i in z {
        let zi = g.elem(i);
        if g.gens().iter().any(|x| ops.mul(x, zi) != ops.mul(zi, x)) {
            return Err(Error::NotCentral);
        }
    }
    let kernel: Vec<O::Elem> = z.iter().map(|&i| g.elem(i).clone()).collect();
    let qops = QuotientOps { inner: ops.clone(), kernel: std::sync::Arc::new(kernel) };
    let gens: Vec<O::Elem> = g.gens().iter().map(|x| qops.canonical(x)).collect();
    GenGroup::new(qops, gens)
}
