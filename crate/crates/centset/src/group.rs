//! Dense Cayley-table representation of finite groups.
//!
//! A [`CayleyGroup`] stores the full `n x n` multiplication table as a flat
//! `Vec<u16>` with element `0` always the identity. Subsets of a group are
//! [`SubgroupSet`] bit masks over the parent's element ids. Every operation
//! here is a pure function of its inputs; constructed values are immutable
//! and safe to share across threads.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::FamilySpec;
use crate::Result;

/// Index of a group element; `0` is always the identity.
pub type ElementId = u16;

const UNSET: u16 = u16::MAX;

/// How a group was constructed (kept for reports and file round-trips).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum Provenance {
    Family(FamilySpec),
    Note(String),
}

/// Generators of a permutation group on `{0..degree-1}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermGenSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u16>>,
}

impl PermGenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::InvalidPermutation("empty generator list".into()));
        }
        for g in &self.generators {
            if g.len() != self.degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator length {} does not match degree {}",
                    g.len(),
                    self.degree
                )));
            }
            let mut seen = vec![false; self.degree];
            for &x in g {
                if (x as usize) >= self.degree || seen[x as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {:?} is not a bijection on 0..{}",
                        g, self.degree
                    )));
                }
                seen[x as usize] = true;
            }
        }
        Ok(())
    }
}

/// Action of a group `H` on a group `N`: an automorphism of `N` (as a
/// permutation of its element ids) for each listed generator of `H`.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    /// Elements of `H` that generate it.
    pub generators: Vec<ElementId>,
    /// For each generator, the image permutation on `N`'s elements.
    pub images: Vec<Vec<ElementId>>,
}

impl ActionSpec {
    /// The trivial action of `H` on `N` (every generator acts as identity).
    pub fn trivial(h: &CayleyGroup, n: &CayleyGroup) -> ActionSpec {
        let gens = h.small_generating_sequence();
        let id: Vec<ElementId> = (0..n.order() as u16).collect();
        ActionSpec {
            images: vec![id; gens.len()],
            generators: gens,
        }
    }
}

/// Membership bit mask over a parent group's elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupSet {
    parent_order: usize,
    blocks: Vec<u64>,
    size: usize,
}

impl SubgroupSet {
    pub fn empty(parent_order: usize) -> Self {
        SubgroupSet {
            parent_order,
            blocks: vec![0; parent_order.div_ceil(64)],
            size: 0,
        }
    }

    pub fn trivial(parent_order: usize) -> Self {
        let mut s = Self::empty(parent_order);
        s.insert(0);
        s
    }

    pub fn full(parent_order: usize) -> Self {
        let mut s = Self::empty(parent_order);
        for x in 0..parent_order as u16 {
            s.insert(x);
        }
        s
    }

    pub fn from_members<I: IntoIterator<Item = ElementId>>(parent_order: usize, it: I) -> Self {
        let mut s = Self::empty(parent_order);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn insert(&mut self, x: ElementId) {
        let (b, bit) = (x as usize / 64, x as usize % 64);
        if self.blocks[b] & (1 << bit) == 0 {
            self.blocks[b] |= 1 << bit;
            self.size += 1;
        }
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.blocks[x as usize / 64] & (1 << (x as usize % 64)) != 0
    }

    /// Number of members (the cached order).
    pub fn order(&self) -> usize {
        self.size
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        let parent = self.parent_order;
        self.blocks
            .iter()
            .enumerate()
            .flat_map(move |(i, &b)| {
                (0..64).filter_map(move |j| {
                    if b & (1u64 << j) != 0 {
                        Some((i * 64 + j) as u16)
                    } else {
                        None
                    }
                })
            })
            .filter(move |&x| (x as usize) < parent)
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &SubgroupSet) -> SubgroupSet {
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        let size = blocks.iter().map(|b| b.count_ones() as usize).sum();
        SubgroupSet {
            parent_order: self.parent_order,
            blocks,
            size,
        }
    }

    pub fn union(&self, other: &SubgroupSet) -> SubgroupSet {
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        let size = blocks.iter().map(|b| b.count_ones() as usize).sum();
        SubgroupSet {
            parent_order: self.parent_order,
            blocks,
            size,
        }
    }

    /// Canonical key for deterministic ordering and dedup.
    pub fn mask_key(&self) -> &[u64] {
        &self.blocks
    }
}

/// A finite group as a dense multiplication table.
#[derive(Debug, Clone)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    labels: Vec<String>,
    provenance: Option<Provenance>,
}

impl CayleyGroup {
    /// Builds a group from raw parts, computing inverses and checking the
    /// table invariants (Latin square, identity at 0, associativity —
    /// exhaustive for order <= 256, deterministically sampled above).
    pub fn from_table(
        order: usize,
        table: Vec<u16>,
        labels: Option<Vec<String>>,
        provenance: Option<Provenance>,
    ) -> Result<CayleyGroup> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidGroupFile(format!(
                "table length {} does not match order {}",
                table.len(),
                order
            )));
        }
        if order > UNSET as usize {
            return Err(Error::OrderCapExceeded {
                required: order,
                cap: UNSET as usize,
            });
        }
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        let mut g = CayleyGroup {
            order,
            table,
            inverses: Vec::new(),
            labels,
            provenance,
        };
        g.check_table()?;
        g.inverses = g.compute_inverses()?;
        Ok(g)
    }

    /// Builds a group table from an explicit element list and a
    /// multiplication closure. `elems[0]` must be the identity.
    pub fn from_elements<T, M, L>(
        elems: Vec<T>,
        mut mul: M,
        mut label: L,
        provenance: Option<Provenance>,
        cap: usize,
    ) -> Result<CayleyGroup>
    where
        T: std::hash::Hash + Eq + Clone,
        M: FnMut(&T, &T) -> T,
        L: FnMut(&T) -> String,
    {
        let n = elems.len();
        if n > cap || n > UNSET as usize {
            return Err(Error::OrderCapExceeded {
                required: n,
                cap: cap.min(UNSET as usize),
            });
        }
        let index: HashMap<T, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u16))
            .collect();
        if index.len() != n {
            return Err(Error::BadParams("duplicate elements in listing".into()));
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = mul(&elems[a], &elems[b]);
                let id = *index
                    .get(&p)
                    .ok_or_else(|| Error::BadParams("multiplication escapes element set".into()))?;
                table[a * n + b] = id;
            }
        }
        let labels = elems.iter().map(|e| label(e)).collect();
        let mut g = CayleyGroup {
            order: n,
            table,
            inverses: Vec::new(),
            labels: Some(labels).unwrap(),
            provenance,
        };
        g.check_table()?;
        g.inverses = g.compute_inverses()?;
        Ok(g)
    }

    /// Closure of permutation generators under composition, elements indexed
    /// in BFS discovery order with the identity at 0.
    pub fn build_from_permutations(spec: &PermGenSpec, cap: usize) -> Result<CayleyGroup> {
        spec.validate()?;
        if cap < 1 {
            return Err(Error::BadParams("order cap must be at least 1".into()));
        }
        let degree = spec.degree;
        let identity: Vec<u16> = (0..degree as u16).collect();
        let mut elems: Vec<Vec<u16>> = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, u16> = HashMap::new();
        index.insert(identity, 0);
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);
        while let Some(i) = queue.pop_front() {
            for gen in &spec.generators {
                // right multiplication: (p * gen)(x) = p[gen[x]]
                let p = &elems[i];
                let q: Vec<u16> = (0..degree).map(|x| p[gen[x] as usize]).collect();
                if !index.contains_key(&q) {
                    if elems.len() >= cap || elems.len() >= UNSET as usize {
                        return Err(Error::OrderCapExceeded {
                            required: elems.len() + 1,
                            cap,
                        });
                    }
                    index.insert(q.clone(), elems.len() as u16);
                    elems.push(q);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<u16> = (0..degree).map(|x| elems[a][elems[b][x] as usize]).collect();
                table[a * n + b] = index[&p];
            }
        }
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        let mut g = CayleyGroup {
            order: n,
            table,
            inverses: Vec::new(),
            labels,
            provenance: Some(Provenance::Note(format!("perm closure, degree {degree}"))),
        };
        g.inverses = g.compute_inverses()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverses[a as usize]
    }

    /// `g * x * g^-1`
    #[inline]
    pub fn conj(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a^-1 b^-1 a b`
    #[inline]
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: ElementId, k: u64) -> ElementId {
        let mut acc = 0u16;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn set_provenance(&mut self, p: Provenance) {
        self.provenance = Some(p);
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Smallest `k >= 1` with `x^k = identity`.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least subgroup containing `seeds`, by worklist closure under product.
    pub fn generated_subgroup<I: IntoIterator<Item = ElementId>>(&self, seeds: I) -> SubgroupSet {
        let seeds: Vec<ElementId> = seeds.into_iter().collect();
        let mut set = SubgroupSet::trivial(self.order);
        let mut work: Vec<ElementId> = vec![0];
        while let Some(x) = work.pop() {
            for &s in &seeds {
                let y = self.mul(x, s);
                if !set.contains(y) {
                    set.insert(y);
                    work.push(y);
                }
            }
        }
        set
    }

    /// Conjugation orbits, sorted by (size, least element).
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementId>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order as u16 {
            if seen[x as usize] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.order as u16 {
                let y = self.conj(g, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    /// Multiset of element orders, as (order, count) pairs.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut map = std::collections::BTreeMap::new();
        for x in 0..self.order as u16 {
            *map.entry(self.element_order(x)).or_insert(0usize) += 1;
        }
        map.into_iter().collect()
    }

    /// Checks that `s` contains the identity and is closed under product
    /// and inverse.
    pub fn is_subgroup(&self, s: &SubgroupSet) -> bool {
        if s.parent_order != self.order || !s.contains(0) {
            return false;
        }
        let members: Vec<ElementId> = s.iter().collect();
        members.iter().all(|&a| s.contains(self.inv(a)))
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, s: &SubgroupSet) -> bool {
        (0..self.order as u16).all(|g| s.iter().all(|x| s.contains(self.conj(g, x))))
    }

    /// Quotient by a normal subgroup. Cosets become elements ordered by
    /// their least member (so the identity coset is element 0); the returned
    /// map sends each parent element to its coset.
    pub fn quotient_group(&self, n: &SubgroupSet) -> Result<(CayleyGroup, Vec<ElementId>)> {
        if !self.is_subgroup(n) || !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let members: Vec<ElementId> = n.iter().collect();
        let mut coset_of = vec![UNSET; self.order];
        let mut reps: Vec<ElementId> = Vec::new();
        for g in 0..self.order as u16 {
            if coset_of[g as usize] != UNSET {
                continue;
            }
            let id = reps.len() as u16;
            reps.push(g);
            for &x in &members {
                coset_of[self.mul(g, x) as usize] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for i in 0..q {
            for j in 0..q {
                table[i * q + j] = coset_of[self.mul(reps[i], reps[j]) as usize];
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r as usize])).collect();
        let mut grp = CayleyGroup {
            order: q,
            table,
            inverses: Vec::new(),
            labels,
            provenance: Some(Provenance::Note(format!(
                "quotient by normal subgroup of order {}",
                n.order()
            ))),
        };
        grp.inverses = grp.compute_inverses()?;
        Ok((grp, coset_of))
    }

    /// Componentwise product on pairs `(a, b)` indexed as `a * |B| + b`.
    pub fn direct_product(a: &CayleyGroup, b: &CayleyGroup, cap: usize) -> Result<CayleyGroup> {
        let n = a.order * b.order;
        if n > cap || n > UNSET as usize {
            return Err(Error::OrderCapExceeded {
                required: n,
                cap: cap.min(UNSET as usize),
            });
        }
        let nb = b.order;
        let mut table = vec![0u16; n * n];
        for a1 in 0..a.order {
            for b1 in 0..b.order {
                let i = a1 * nb + b1;
                for a2 in 0..a.order {
                    let pa = a.table[a1 * a.order + a2] as usize;
                    for b2 in 0..b.order {
                        let pb = b.table[b1 * nb + b2] as usize;
                        table[i * n + a2 * nb + b2] = (pa * nb + pb) as u16;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for a1 in 0..a.order {
            for b1 in 0..b.order {
                labels.push(format!("({},{})", a.labels[a1], b.labels[b1]));
            }
        }
        let mut g = CayleyGroup {
            order: n,
            table,
            inverses: Vec::new(),
            labels,
            provenance: Some(Provenance::Note("direct product".into())),
        };
        g.inverses = g.compute_inverses()?;
        Ok(g)
    }

    /// Semidirect product `N x| H` for an action of `H` on `N`:
    /// `(n1, h1)(n2, h2) = (n1 * theta(h1)(n2), h1 h2)`, pairs indexed as
    /// `n * |H| + h`. The action is validated: every generator image must be
    /// an automorphism of `N`, and the images must extend consistently to a
    /// homomorphism `H -> Aut(N)`.
    pub fn semidirect_product(
        n: &CayleyGroup,
        h: &CayleyGroup,
        action: &ActionSpec,
        cap: usize,
    ) -> Result<CayleyGroup> {
        let theta = extend_action(n, h, action)?;
        let total = n.order * h.order;
        if total > cap || total > UNSET as usize {
            return Err(Error::OrderCapExceeded {
                required: total,
                cap: cap.min(UNSET as usize),
            });
        }
        let nh = h.order;
        let mut table = vec![0u16; total * total];
        for n1 in 0..n.order {
            for h1 in 0..h.order {
                let i = n1 * nh + h1;
                let th = &theta[h1];
                for n2 in 0..n.order {
                    let twisted = th[n2] as usize;
                    let pn = n.table[n1 * n.order + twisted] as usize;
                    for h2 in 0..h.order {
                        let ph = h.table[h1 * nh + h2] as usize;
                        table[i * total + n2 * nh + h2] = (pn * nh + ph) as u16;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(total);
        for n1 in 0..n.order {
            for h1 in 0..h.order {
                labels.push(format!("({},{})", n.labels[n1], h.labels[h1]));
            }
        }
        let mut g = CayleyGroup {
            order: total,
            table,
            inverses: Vec::new(),
            labels,
            provenance: Some(Provenance::Note("semidirect product".into())),
        };
        g.inverses = g.compute_inverses()?;
        Ok(g)
    }

    /// Re-indexes a verified subgroup as a standalone group; also returns the
    /// embedding (new id -> parent id).
    pub fn subgroup_as_group(&self, s: &SubgroupSet) -> (CayleyGroup, Vec<ElementId>) {
        assert!(self.is_subgroup(s), "subgroup_as_group needs a verified subgroup");
        let embed: Vec<ElementId> = s.iter().collect();
        let mut back = vec![UNSET; self.order];
        for (i, &x) in embed.iter().enumerate() {
            back[x as usize] = i as u16;
        }
        let m = embed.len();
        let mut table = vec![0u16; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = back[self.mul(embed[i], embed[j]) as usize];
            }
        }
        let labels = embed.iter().map(|&x| self.labels[x as usize].clone()).collect();
        let mut g = CayleyGroup {
            order: m,
            table,
            inverses: Vec::new(),
            labels,
            provenance: Some(Provenance::Note(format!(
                "subgroup of order {} in a group of order {}",
                m, self.order
            ))),
        };
        g.inverses = g.compute_inverses().expect("subgroup table is a group");
        (g, embed)
    }

    /// Short generating sequence: greedily extend by the least element not
    /// yet generated.
    pub fn small_generating_sequence(&self) -> Vec<ElementId> {
        let mut gens: Vec<ElementId> = Vec::new();
        let mut span = SubgroupSet::trivial(self.order);
        for x in 1..self.order as u16 {
            if !span.contains(x) {
                gens.push(x);
                span = self.generated_subgroup(gens.iter().copied());
                if span.order() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Multiplication-preserving bijection onto `b`, or `None`. Prunes on
    /// order, element-order histogram, class-size multiset, |Z| and |G'|;
    /// then backtracks on images of a generating sequence. A returned map is
    /// always re-verified on all pairs, so budget exhaustion can never yield
    /// a false positive.
    pub fn isomorphism_search(
        &self,
        b: &CayleyGroup,
        budget: u64,
    ) -> Result<Option<Vec<ElementId>>> {
        if self.order != b.order {
            return Ok(None);
        }
        if self.order_histogram() != b.order_histogram() {
            return Ok(None);
        }
        let class_sizes = |g: &CayleyGroup| {
            let mut v: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
            v.sort_unstable();
            v
        };
        if class_sizes(self) != class_sizes(b) {
            return Ok(None);
        }
        if crate::analysis::center(self).order() != crate::analysis::center(b).order()
            || crate::analysis::commutator_subgroup(self).order()
                != crate::analysis::commutator_subgroup(b).order()
        {
            return Ok(None);
        }
        let mut found = None;
        for_each_isomorphism(self, b, budget, &mut |phi| {
            found = Some(phi.to_vec());
            true
        })?;
        if let Some(phi) = &found {
            // full certificate verification
            for x in 0..self.order as u16 {
                for y in 0..self.order as u16 {
                    debug_assert_eq!(
                        phi[self.mul(x, y) as usize],
                        b.mul(phi[x as usize], phi[y as usize])
                    );
                    if phi[self.mul(x, y) as usize] != b.mul(phi[x as usize], phi[y as usize]) {
                        return Err(Error::BadParams(
                            "internal: isomorphism certificate failed verification".into(),
                        ));
                    }
                }
            }
        }
        Ok(found)
    }

    fn check_table(&self) -> Result<()> {
        let n = self.order;
        // identity row and column
        for x in 0..n {
            if self.table[x] != x as u16 || self.table[x * n] != x as u16 {
                return Err(Error::InvalidGroupFile(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        // Latin square
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for a in 0..n {
            seen_row.iter_mut().for_each(|v| *v = false);
            seen_col.iter_mut().for_each(|v| *v = false);
            for b in 0..n {
                let r = self.table[a * n + b] as usize;
                let c = self.table[b * n + a] as usize;
                if r >= n || c >= n || seen_row[r] || seen_col[c] {
                    return Err(Error::InvalidGroupFile(
                        "multiplication table is not a Latin square".into(),
                    ));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // associativity: exhaustive for small orders, deterministic sample above
        if n <= 256 {
            for a in 0..n as u16 {
                for b in 0..n as u16 {
                    let ab = self.mul(a, b);
                    for c in 0..n as u16 {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidGroupFile(
                                "multiplication table is not associative".into(),
                            ));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..100_000 {
                let a = (next() % n as u64) as u16;
                let b = (next() % n as u64) as u16;
                let c = (next() % n as u64) as u16;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::InvalidGroupFile(
                        "multiplication table is not associative".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn compute_inverses(&self) -> Result<Vec<u16>> {
        let n = self.order;
        let mut inv = vec![UNSET; n];
        for a in 0..n {
            for b in 0..n {
                if self.table[a * n + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
            if inv[a] == UNSET {
                return Err(Error::InvalidGroupFile(format!("element {a} has no inverse")));
            }
        }
        Ok(inv)
    }
}

/// Extends generator images to the full map `H -> Aut(N)`, validating that
/// each image is an automorphism and that the extension is consistent.
fn extend_action(n: &CayleyGroup, h: &CayleyGroup, action: &ActionSpec) -> Result<Vec<Vec<u16>>> {
    if action.generators.len() != action.images.len() {
        return Err(Error::InvalidAction(
            "one image permutation required per generator".into(),
        ));
    }
    for img in &action.images {
        if img.len() != n.order() {
            return Err(Error::InvalidAction("image has wrong length".into()));
        }
        if img[0] != 0 {
            return Err(Error::InvalidAction("image does not fix the identity".into()));
        }
        let mut seen = vec![false; n.order()];
        for &y in img {
            if (y as usize) >= n.order() || seen[y as usize] {
                return Err(Error::InvalidAction("image is not a bijection".into()));
            }
            seen[y as usize] = true;
        }
        for a in 0..n.order() as u16 {
            for b in 0..n.order() as u16 {
                if img[n.mul(a, b) as usize] != n.mul(img[a as usize], img[b as usize]) {
                    return Err(Error::InvalidAction("image is not an automorphism".into()));
                }
            }
        }
    }
    let identity: Vec<u16> = (0..n.order() as u16).collect();
    let mut theta: Vec<Option<Vec<u16>>> = vec![None; h.order()];
    theta[0] = Some(identity);
    let mut queue: VecDeque<u16> = VecDeque::new();
    queue.push_back(0);
    let mut visited = vec![false; h.order()];
    visited[0] = true;
    while let Some(x) = queue.pop_front() {
        for (gi, &g) in action.generators.iter().enumerate() {
            let y = h.mul(x, g);
            let tx = theta[x as usize].as_ref().unwrap();
            let tg = &action.images[gi];
            // theta(x*g) = theta(x) o theta(g)
            let composed: Vec<u16> = (0..n.order()).map(|e| tx[tg[e] as usize]).collect();
            match &theta[y as usize] {
                Some(existing) => {
                    if *existing != composed {
                        return Err(Error::InvalidAction(
                            "images do not extend to a homomorphism".into(),
                        ));
                    }
                }
                None => {
                    theta[y as usize] = Some(composed);
                    visited[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    if visited.iter().any(|v| !v) {
        return Err(Error::InvalidAction(
            "listed generators do not generate the acting group".into(),
        ));
    }
    Ok(theta.into_iter().map(|t| t.unwrap()).collect())
}

/// Enumerates isomorphisms `a -> b` by backtracking on images of a
/// generating sequence, calling `visit` with each complete map until it
/// returns `true`. Returns whether a visit was accepted.
pub(crate) fn for_each_isomorphism<F>(
    a: &CayleyGroup,
    b: &CayleyGroup,
    budget: u64,
    visit: &mut F,
) -> Result<bool>
where
    F: FnMut(&[u16]) -> bool,
{
    if a.order() != b.order() {
        return Ok(false);
    }
    let n = a.order();
    let gens = a.small_generating_sequence();
    if gens.is_empty() {
        // trivial group
        return Ok(visit(&[0]));
    }
    // invariant signature per element: (order, centralizer size)
    let sig = |g: &CayleyGroup, x: u16| {
        let c = (0..g.order() as u16).filter(|&y| g.commutes(x, y)).count();
        (g.element_order(x), c)
    };
    let gen_sigs: Vec<(usize, usize)> = gens.iter().map(|&x| sig(a, x)).collect();
    let mut candidates: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for gs in &gen_sigs {
        candidates.push(
            (0..n as u16)
                .filter(|&y| sig(b, y) == *gs)
                .collect::<Vec<u16>>(),
        );
    }
    let mut images = vec![0u16; gens.len()];
    let mut nodes = 0u64;

    fn try_map(
        a: &CayleyGroup,
        b: &CayleyGroup,
        gens: &[u16],
        images: &[u16],
    ) -> Option<(Vec<u16>, usize)> {
        let n = a.order();
        let mut phi = vec![UNSET; n];
        let mut used = vec![false; n];
        phi[0] = 0;
        used[0] = true;
        let mut work: Vec<u16> = vec![0];
        let mut count = 1usize;
        while let Some(x) = work.pop() {
            for (i, &g) in gens.iter().enumerate() {
                let y = a.mul(x, g);
                let img = b.mul(phi[x as usize], images[i]);
                if phi[y as usize] == UNSET {
                    if used[img as usize] {
                        return None; // not injective
                    }
                    phi[y as usize] = img;
                    used[img as usize] = true;
                    count += 1;
                    work.push(y);
                } else if phi[y as usize] != img {
                    return None; // not a homomorphism
                }
            }
        }
        Some((phi, count))
    }

    fn rec<F>(
        a: &CayleyGroup,
        b: &CayleyGroup,
        gens: &[u16],
        candidates: &[Vec<u16>],
        images: &mut [u16],
        depth: usize,
        nodes: &mut u64,
        budget: u64,
        visit: &mut F,
    ) -> Result<bool>
    where
        F: FnMut(&[u16]) -> bool,
    {
        for &cand in &candidates[depth] {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::SearchBudgetExceeded);
            }
            images[depth] = cand;
            match try_map(a, b, &gens[..=depth], &images[..=depth]) {
                None => continue,
                Some((phi, count)) => {
                    if depth + 1 == gens.len() {
                        if count == a.order() && visit(&phi) {
                            return Ok(true);
                        }
                    } else if rec(a, b, gens, candidates, images, depth + 1, nodes, budget, visit)?
                    {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    rec(a, b, &gens, &candidates, &mut images, 0, &mut nodes, budget, visit)
}

/// Cycle notation for a permutation, `e` for the identity.
pub fn cycle_notation(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ORDER_CAP;
    use std::collections::HashSet;

    fn perm_spec(degree: usize, gens: &[&[u16]]) -> PermGenSpec {
        PermGenSpec {
            degree,
            generators: gens.iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub(crate) fn s3() -> CayleyGroup {
        CayleyGroup::build_from_permutations(&perm_spec(3, &[&[1, 2, 0], &[1, 0, 2]]), 64).unwrap()
    }

    pub(crate) fn s4() -> CayleyGroup {
        CayleyGroup::build_from_permutations(&perm_spec(4, &[&[1, 2, 3, 0], &[1, 0, 2, 3]]), 64)
            .unwrap()
    }

    fn d8() -> CayleyGroup {
        // r = (0 1 2 3), s = (0 1)(2 3)... use the reflection (1 3)
        CayleyGroup::build_from_permutations(&perm_spec(4, &[&[1, 2, 3, 0], &[0, 3, 2, 1]]), 64)
            .unwrap()
    }

    /// Independent closure oracle: set-based fixpoint under pairwise
    /// products, no BFS, no tables.
    fn closure_oracle(degree: usize, gens: &[Vec<u16>]) -> usize {
        let mut set: HashSet<Vec<u16>> = HashSet::new();
        set.insert((0..degree as u16).collect());
        for g in gens {
            set.insert(g.clone());
        }
        loop {
            let snapshot: Vec<Vec<u16>> = set.iter().cloned().collect();
            let before = set.len();
            for p in &snapshot {
                for q in &snapshot {
                    let r: Vec<u16> = (0..degree).map(|x| p[q[x] as usize]).collect();
                    set.insert(r);
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn closure_s3_has_order_6() {
        assert_eq!(s3().order(), 6);
    }

    #[test]
    fn closure_trivial_group() {
        let g = CayleyGroup::build_from_permutations(&perm_spec(1, &[&[0]]), 4).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_c5_c4_matches_oracle() {
        // (0 1 2 3 4) and (1 2 4 3)
        let gens: Vec<Vec<u16>> = vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]];
        assert_eq!(closure_oracle(5, &gens), 20);
        let g = CayleyGroup::build_from_permutations(
            &PermGenSpec { degree: 5, generators: gens },
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn closure_respects_cap() {
        let err = CayleyGroup::build_from_permutations(
            &perm_spec(4, &[&[1, 2, 3, 0], &[1, 0, 2, 3]]),
            10,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded { .. }));
    }

    #[test]
    fn rejects_non_bijective_generator() {
        let err =
            CayleyGroup::build_from_permutations(&perm_spec(3, &[&[0, 0, 1]]), 10).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation(_)));
    }

    #[test]
    fn element_orders() {
        let g = s3();
        assert_eq!(g.element_order(0), 1);
        let transposition = (0..6).find(|&x| x != 0 && g.mul(x, x) == 0).unwrap();
        assert_eq!(g.element_order(transposition), 2);
        for x in 0..g.order() as u16 {
            assert_eq!(g.order() % g.element_order(x), 0, "Lagrange");
        }
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        assert_eq!(g.generated_subgroup([]).order(), 1);
        let t = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
        let r = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        assert_eq!(g.generated_subgroup([t, r]).order(), 6);

        let d = d8();
        let rot = (1..8).find(|&x| d.element_order(x) == 4).unwrap();
        assert_eq!(d.generated_subgroup([rot]).order(), 4);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let mut sizes: Vec<usize> = s3().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let mut sizes4: Vec<usize> = s4().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes4.sort_unstable();
        assert_eq!(sizes4, vec![1, 3, 6, 6, 8]);

        let c6 = crate::families::cyclic(6, 64).unwrap();
        assert!(c6.conjugacy_classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let g = s3();
        let (q, proj) = g.quotient_group(&SubgroupSet::trivial(6)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(g.isomorphism_search(&q, 1_000_000).unwrap().is_some());
        for a in 0..6u16 {
            for b in 0..6u16 {
                assert_eq!(proj[g.mul(a, b) as usize], q.mul(proj[a as usize], proj[b as usize]));
            }
        }
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let t = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
        let sub = g.generated_subgroup([t]);
        assert!(matches!(g.quotient_group(&sub), Err(Error::NotNormal)));
    }

    #[test]
    fn direct_product_basics() {
        let c1 = crate::families::cyclic(1, 8).unwrap();
        let g = s3();
        let p = CayleyGroup::direct_product(&c1, &g, 64).unwrap();
        assert_eq!(p.order(), 6);
        let c2 = crate::families::cyclic(2, 8).unwrap();
        let c3 = crate::families::cyclic(3, 8).unwrap();
        let c6 = CayleyGroup::direct_product(&c2, &c3, 64).unwrap();
        assert!((0..6).any(|x| c6.element_order(x) == 6), "C2 x C3 is cyclic");
        assert!(matches!(
            CayleyGroup::direct_product(&g, &g, 10),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn semidirect_trivial_action_equals_direct_product() {
        let c3 = crate::families::cyclic(3, 8).unwrap();
        let d = d8();
        let action = ActionSpec::trivial(&d, &c3);
        let sd = CayleyGroup::semidirect_product(&c3, &d, &action, 64).unwrap();
        let dp = CayleyGroup::direct_product(&c3, &d, 64).unwrap();
        assert_eq!(sd.table(), dp.table());
    }

    #[test]
    fn semidirect_c7_c3_is_frobenius_of_order_21() {
        let c7 = crate::families::cyclic(7, 8).unwrap();
        let c3 = crate::families::cyclic(3, 8).unwrap();
        // x -> x^2 has order 3 mod 7
        let img: Vec<u16> = (0..7).map(|x| (x * 2 % 7) as u16).collect();
        let action = ActionSpec { generators: vec![1], images: vec![img] };
        let g = CayleyGroup::semidirect_product(&c7, &c3, &action, 64).unwrap();
        assert_eq!(g.order(), 21);
        // fixed-point-free: no non-identity pair commutes across the factors
        let zcount = (0..21u16)
            .filter(|&z| (0..21u16).all(|x| g.commutes(z, x)))
            .count();
        assert_eq!(zcount, 1, "trivial center");
    }

    #[test]
    fn semidirect_c5_c4_has_trivial_center() {
        let c5 = crate::families::cyclic(5, 8).unwrap();
        let c4 = crate::families::cyclic(4, 8).unwrap();
        let img: Vec<u16> = (0..5).map(|x| (x * 2 % 5) as u16).collect();
        let action = ActionSpec { generators: vec![1], images: vec![img] };
        let g = CayleyGroup::semidirect_product(&c5, &c4, &action, 64).unwrap();
        assert_eq!(g.order(), 20);
        let zcount = (0..20u16)
            .filter(|&z| (0..20u16).all(|x| g.commutes(z, x)))
            .count();
        assert_eq!(zcount, 1);
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let c4 = crate::families::cyclic(4, 8).unwrap();
        let c2 = crate::families::cyclic(2, 8).unwrap();
        // swap of 1 and 2 fixes 0 but is not an automorphism of C4
        let action = ActionSpec { generators: vec![1], images: vec![vec![0, 2, 1, 3]] };
        assert!(matches!(
            CayleyGroup::semidirect_product(&c4, &c2, &action, 64),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn isomorphism_of_group_with_itself() {
        let g = s4();
        let phi = g.isomorphism_search(&g, 1_000_000).unwrap().unwrap();
        for x in 0..24u16 {
            for y in 0..24u16 {
                assert_eq!(phi[g.mul(x, y) as usize], g.mul(phi[x as usize], phi[y as usize]));
            }
        }
    }

    #[test]
    fn d8_q8_not_isomorphic() {
        let d = d8();
        let q = crate::families::generalized_quaternion(2, 64).unwrap();
        assert!(d.isomorphism_search(&q, 1_000_000).unwrap().is_none());
    }

    #[test]
    fn budget_exhaustion_is_not_a_negative_verdict() {
        // isomorphic groups, zero search budget: the caller must be able to
        // tell "ran out" apart from "not isomorphic"
        let a = crate::families::elementary_abelian(2, 4, 64).unwrap();
        let b = crate::families::elementary_abelian(2, 4, 64).unwrap();
        assert!(matches!(
            a.isomorphism_search(&b, 0),
            Err(Error::SearchBudgetExceeded)
        ));
        assert!(a.isomorphism_search(&b, 1 << 22).unwrap().is_some());
    }

    #[test]
    fn subgroup_as_group_roundtrip() {
        let g = s4();
        let (h, embed) = g.subgroup_as_group(&SubgroupSet::full(24));
        assert_eq!(h.order(), 24);
        assert_eq!(h.table(), g.table());
        assert_eq!(embed, (0..24u16).collect::<Vec<_>>());

        let d = d8();
        let z = crate::analysis::center(&d);
        let (zg, _) = d.subgroup_as_group(&z);
        assert_eq!(zg.order(), 2);
    }

    #[test]
    fn from_table_validates() {
        // row 1 repeats the value 1: not a Latin square
        assert!(CayleyGroup::from_table(2, vec![0, 1, 1, 1], None, None).is_err());
        // valid C3 table
        let good = CayleyGroup::from_table(3, vec![0, 1, 2, 1, 2, 0, 2, 0, 1], None, None).unwrap();
        assert_eq!(good.element_order(1), 3);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]
        #[test]
        fn closure_yields_latin_associative_tables(
            seed in proptest::collection::vec(0usize..120, 1..3),
            degree in 3usize..6,
        ) {
            // derive generators deterministically from the seed
            let mut gens: Vec<Vec<u16>> = Vec::new();
            for s in &seed {
                let mut p: Vec<u16> = (0..degree as u16).collect();
                let mut k = *s;
                for i in (1..degree).rev() {
                    let j = k % (i + 1);
                    k /= i + 1;
                    p.swap(i, j);
                }
                gens.push(p);
            }
            let spec = PermGenSpec { degree, generators: gens };
            let g = CayleyGroup::build_from_permutations(&spec, 1024).unwrap();
            let n = g.order();
            // Latin square + identity invariants are enforced by construction;
            // re-check independently here.
            for a in 0..n as u16 {
                let row: HashSet<u16> = (0..n as u16).map(|b| g.mul(a, b)).collect();
                proptest::prop_assert_eq!(row.len(), n);
                proptest::prop_assert_eq!(g.mul(a, g.inv(a)), 0);
            }
            for x in 0..n as u16 {
                proptest::prop_assert_eq!(n % g.element_order(x), 0);
            }
        }
    }
}
