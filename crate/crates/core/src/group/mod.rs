//! Exact computation in small finite groups.
//!
//! A [`FiniteGroup`] is enumerated in full: every element is stored, sorted in
//! the canonical element order, and indexed by a hash map. Conjugacy classes,
//! power maps, the center and the derived subgroup are computed on first use
//! and cached; a built group is immutable and can be shared across threads.

mod element;
pub mod families;
pub mod field;

use std::sync::OnceLock;

use rustc_hash::{FxHashMap, FxHashSet};

pub use element::{Domain, GroupElement};
pub use field::SmallField;

use crate::arith::{inv_mod, lcm, p_part};
use crate::error::{Error, Result};

/// Default cap on the number of elements enumerated.
pub const DEFAULT_BOUND: usize = 2_000_000;

/// Largest index `|G:N|` for which [`FiniteGroup::quotient`] builds the coset
/// action.
pub const MAX_QUOTIENT_DEGREE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest element of the class in canonical order.
    pub representative: GroupElement,
    /// Index of the representative in [`FiniteGroup::elements`].
    pub rep_index: usize,
    pub size: u64,
    pub order: u64,
    /// `powers[k]` is the class of `g^k` for `0 ≤ k < order`.
    pub powers: Vec<usize>,
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

#[derive(Debug)]
pub struct FiniteGroup {
    domain: Domain,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: FxHashMap<GroupElement, u32>,
    class_data: OnceLock<ClassData>,
    center: OnceLock<Box<FiniteGroup>>,
    derived: OnceLock<Box<FiniteGroup>>,
}

impl FiniteGroup {
    /// Closure of `generators` with the default bound of two million elements.
    pub fn enumerate(domain: Domain, generators: Vec<GroupElement>) -> Result<Self> {
        Self::enumerate_with_bound(domain, generators, DEFAULT_BOUND)
    }

    pub fn enumerate_with_bound(
        domain: Domain,
        generators: Vec<GroupElement>,
        bound: usize,
    ) -> Result<Self> {
        for g in &generators {
            validate(&domain, g)?;
        }
        let identity = domain.identity();
        let mut seen: FxHashSet<GroupElement> = FxHashSet::default();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &generators {
                let y = domain.mul(&x, g);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    seen.insert(y.clone());
                    queue.push(y);
                }
            }
        }
        drop(seen);
        queue.sort_unstable();
        let index = queue
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        Ok(FiniteGroup {
            domain,
            generators,
            elements: queue,
            index,
            class_data: OnceLock::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> GroupElement {
        self.domain.identity()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.domain.mul(a, b)
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        self.domain.inverse(a)
    }

    pub fn pow(&self, a: &GroupElement, k: u64) -> GroupElement {
        self.domain.pow(a, k)
    }

    pub fn element_order(&self, g: &GroupElement) -> u64 {
        self.domain.element_order(g)
    }

    /// The p-part `g_p = g^{m t}` where `o(g) = p^a m`, `p ∤ m`,
    /// `t ≡ m^{-1} (mod p^a)`.
    pub fn p_part(&self, g: &GroupElement, p: u64) -> GroupElement {
        let o = self.element_order(g);
        let pa = p_part(o, p);
        if pa == 1 {
            return self.identity();
        }
        let m = o / pa;
        let t = inv_mod(m % pa, pa).expect("m is prime to p");
        self.pow(g, (m * t) % o)
    }

    /// Conjugacy classes in canonical order: by element order, then class
    /// size, then representative.
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    /// Class index of the element with the given element index.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_data().class_of[element] as usize
    }

    pub fn class_of(&self, g: &GroupElement) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of_index(i))
    }

    /// Lowest common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes().iter().fold(1, |acc, c| lcm(acc, c.order))
    }

    fn class_data(&self) -> &ClassData {
        self.class_data.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ClassData {
        let n = self.elements.len();
        let gen_inv: Vec<GroupElement> =
            self.generators.iter().map(|g| self.inverse(g)).collect();
        const UNSET: u32 = u32::MAX;
        let mut raw_class = vec![UNSET; n];
        // (min element index, size) per orbit, in discovery order
        let mut orbits: Vec<(usize, u64)> = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if raw_class[start] != UNSET {
                continue;
            }
            let id = orbits.len() as u32;
            raw_class[start] = id;
            queue.clear();
            queue.push(start);
            let mut head = 0;
            while head < queue.len() {
                let x = &self.elements[queue[head]];
                head += 1;
                for (g, gi) in self.generators.iter().zip(&gen_inv) {
                    let y = self.mul(&self.mul(gi, x), g);
                    let j = self.index[&y] as usize;
                    if raw_class[j] == UNSET {
                        raw_class[j] = id;
                        queue.push(j);
                    }
                }
            }
            // `start` is the smallest unclassified index, hence the orbit minimum
            orbits.push((start, queue.len() as u64));
        }
        let orders: Vec<u64> = orbits
            .iter()
            .map(|&(rep, _)| self.element_order(&self.elements[rep]))
            .collect();
        let mut perm: Vec<usize> = (0..orbits.len()).collect();
        perm.sort_by_key(|&c| (orders[c], orbits[c].1, orbits[c].0));
        let mut new_id = vec![0u32; orbits.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| new_id[c as usize]).collect();
        let classes = perm
            .iter()
            .map(|&old| {
                let (rep_index, size) = orbits[old];
                let rep = self.elements[rep_index].clone();
                let order = orders[old];
                let mut powers = Vec::with_capacity(order as usize);
                let mut x = self.identity();
                for _ in 0..order {
                    powers.push(class_of[self.index[&x] as usize] as usize);
                    x = self.mul(&x, &rep);
                }
                ConjugacyClass { representative: rep, rep_index, size, order, powers }
            })
            .collect();
        ClassData { classes, class_of }
    }

    /// Subgroup generated by elements of this group.
    pub fn subgroup(&self, generators: &[GroupElement]) -> Result<FiniteGroup> {
        if let Some(g) = generators.iter().find(|g| !self.contains(g)) {
            return Err(Error::InvalidGenerator(format!("{g:?} is not in the group")));
        }
        let gens: Vec<GroupElement> = generators
            .iter()
            .filter(|g| **g != self.identity())
            .cloned()
            .collect();
        FiniteGroup::enumerate_with_bound(self.domain.clone(), dedup(gens), self.elements.len())
    }

    /// Smallest normal subgroup containing `generators`.
    pub fn normal_closure(&self, generators: &[GroupElement]) -> Result<FiniteGroup> {
        let mut gens: Vec<GroupElement> = dedup(generators.to_vec());
        loop {
            let sub = self.subgroup(&gens)?;
            let mut missing = Vec::new();
            for g in &self.generators {
                for x in sub.generators() {
                    let c = self.domain.conjugate(x, g);
                    if !sub.contains(&c) && !missing.contains(&c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                return Ok(sub);
            }
            gens = sub.generators().to_vec();
            gens.extend(missing);
        }
    }

    /// The center, as the subgroup of elements in singleton classes.
    pub fn center(&self) -> &FiniteGroup {
        self.center.get_or_init(|| {
            let central: Vec<GroupElement> = self
                .classes()
                .iter()
                .filter(|c| c.size == 1)
                .map(|c| c.representative.clone())
                .collect();
            Box::new(self.subgroup(&central).expect("central elements lie in the group"))
        })
    }

    /// `[G, G]`: the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> &FiniteGroup {
        self.derived.get_or_init(|| {
            let mut comms = Vec::new();
            for (i, a) in self.generators.iter().enumerate() {
                for b in &self.generators[i + 1..] {
                    comms.push(self.domain.commutator(a, b));
                }
            }
            Box::new(self.normal_closure(&comms).expect("commutators lie in the group"))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Whether `sub` (a subgroup of this group) is normalised by every generator.
    pub fn is_normal(&self, sub: &FiniteGroup) -> bool {
        sub.generators().iter().all(|x| {
            self.generators
                .iter()
                .all(|g| sub.contains(&self.domain.conjugate(x, g)))
        })
    }

    /// Nontrivial with no proper nontrivial normal subgroup: the normal
    /// closure of every nonidentity class representative is the whole group.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.classes().iter().skip(1).all(|c| {
            self.normal_closure(std::slice::from_ref(&c.representative))
                .map(|n| n.order() == self.order())
                .unwrap_or(false)
        })
    }

    /// Whether `G/N` is simple, for `N` normal in `G`, decided without building
    /// the quotient: every `x ∉ N` must have `⟨x^G⟩N = G`.
    pub fn is_simple_modulo(&self, normal: &FiniteGroup) -> bool {
        if normal.order() == self.order() {
            return false;
        }
        self.classes().iter().all(|c| {
            if normal.contains(&c.representative) {
                return true;
            }
            let mut gens = normal.generators().to_vec();
            gens.push(c.representative.clone());
            self.normal_closure(&gens)
                .map(|n| n.order() == self.order())
                .unwrap_or(false)
        })
    }

    /// Perfect, and simple modulo the center.
    pub fn is_quasisimple(&self) -> bool {
        self.order() > 1 && self.is_perfect() && self.is_simple_modulo(self.center())
    }

    /// Least `m ≥ 1` with `g^m ∈ N`.
    pub fn coset_order(&self, normal: &FiniteGroup, g: &GroupElement) -> Result<u64> {
        if !self.contains(g) {
            return Err(Error::NotInGroup);
        }
        let mut x = g.clone();
        let mut m = 1;
        while !normal.contains(&x) {
            x = self.mul(&x, g);
            m += 1;
        }
        Ok(m)
    }

    /// `G/N` realised as a permutation group on the right cosets of `N`
    /// (points numbered by smallest coset element).
    pub fn quotient(&self, normal: &FiniteGroup) -> Result<FiniteGroup> {
        let index = (self.order() / normal.order()) as usize;
        if index > MAX_QUOTIENT_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "quotient of index {index} exceeds {MAX_QUOTIENT_DEGREE}"
            )));
        }
        const UNSET: u32 = u32::MAX;
        let mut coset = vec![UNSET; self.elements.len()];
        let mut reps = Vec::new();
        for i in 0..self.elements.len() {
            if coset[i] != UNSET {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(i);
            for n in normal.elements() {
                let j = self.index[&self.mul(n, &self.elements[i])];
                coset[j as usize] = id;
            }
        }
        let domain = Domain::permutations(reps.len());
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images: Vec<usize> = reps
                    .iter()
                    .map(|&r| coset[self.index[&self.mul(&self.elements[r], g)] as usize] as usize)
                    .collect();
                domain.permutation(&images)
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::enumerate(domain, gens)
    }

    /// Images of every element under the homomorphism determined by
    /// `generator_images` (elements of `target`), indexed like
    /// [`Self::elements`]. Fails if the assignment is not a homomorphism.
    pub fn homomorphism_images(
        &self,
        target: &Domain,
        generator_images: &[GroupElement],
    ) -> Result<Vec<GroupElement>> {
        if generator_images.len() != self.generators.len() {
            return Err(Error::InvalidArgument(
                "one image per generator is required".into(),
            ));
        }
        for g in generator_images {
            validate(target, g)?;
        }
        let n = self.elements.len();
        let mut images: Vec<Option<GroupElement>> = vec![None; n];
        let start = self.index[&self.identity()] as usize;
        images[start] = Some(target.identity());
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            let img = images[i].clone().unwrap();
            for (g, gimg) in self.generators.iter().zip(generator_images) {
                let j = self.index[&self.mul(&self.elements[i], g)] as usize;
                let y = target.mul(&img, gimg);
                match &images[j] {
                    None => {
                        images[j] = Some(y);
                        queue.push(j);
                    }
                    Some(existing) if *existing != y => {
                        return Err(Error::InvalidArgument(
                            "generator images do not define a homomorphism".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(images.into_iter().map(|x| x.unwrap()).collect())
    }
}

fn validate(domain: &Domain, g: &GroupElement) -> Result<()> {
    match domain {
        Domain::Permutation { .. } => {
            let images: Vec<usize> = g.as_slice().iter().map(|&x| x as usize).collect();
            domain.permutation(&images).map(|_| ())
        }
        Domain::Matrix { .. } => domain.matrix(g.as_slice()).map(|_| ()),
    }
}

fn dedup(mut v: Vec<GroupElement>) -> Vec<GroupElement> {
    let mut seen = FxHashSet::default();
    v.retain(|g| seen.insert(g.clone()));
    v
}
