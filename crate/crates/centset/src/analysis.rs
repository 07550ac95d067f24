//! Centralizer-centric computations and predicates: Cent(G), Z(G), G',
//! CG/CA tests, series, Sylow subgroups, the normal-subgroup lattice,
//! omega(G), alpha(G), minimality predicates and the abelian-normal
//! cyclic-quotient identity |A| = |G'| |A n Z(G)|.

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::error::Error;
use crate::group::{CayleyGroup, ElementId, SubgroupSet};
use crate::{Config, Result};

/// Exact reduced fraction (no floating point anywhere in the library).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Rational {
        assert!(den != 0);
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let g = gcd(num.max(1), den);
        Rational { num: num / g, den: den / g }
    }

    /// `self > 1/2`
    pub fn exceeds_half(&self) -> bool {
        2 * self.num > self.den
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The deduplicated set Cent(G) = { C(x) | x in G }.
#[derive(Debug, Clone)]
pub struct CentralizerFamily {
    /// Distinct centralizers, sorted by (order, mask).
    pub distinct: Vec<SubgroupSet>,
    /// For each distinct centralizer, the least x with C(x) equal to it.
    pub witness_for: Vec<ElementId>,
    pub count: usize,
}

/// Solutions of x^2 = 1 (including the identity) and their density.
#[derive(Debug, Clone, Copy)]
pub struct InvolutionStats {
    pub i_count: usize,
    pub alpha: Rational,
}

/// Exact-or-best-known clique number of the non-commuting graph.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OmegaResult {
    pub value: usize,
    pub exact: bool,
}

/// Verdict of the CG test `|Cent(G)| = |G'| + 2`.
#[derive(Debug, Clone, Copy)]
pub struct CgVerdict {
    pub is_cg: bool,
    pub cent_count: usize,
    pub derived_order: usize,
}

pub fn center(g: &CayleyGroup) -> SubgroupSet {
    let n = g.order() as u16;
    SubgroupSet::from_members(
        g.order(),
        (0..n).filter(|&z| (0..n).all(|x| g.commutes(z, x))),
    )
}

pub fn centralizer(g: &CayleyGroup, x: ElementId) -> SubgroupSet {
    let n = g.order() as u16;
    SubgroupSet::from_members(g.order(), (0..n).filter(|&c| g.commutes(c, x)))
}

/// Deduplicated centralizer family, deterministically ordered.
pub fn centralizer_family(g: &CayleyGroup) -> CentralizerFamily {
    let mut seen: std::collections::HashMap<SubgroupSet, ElementId> =
        std::collections::HashMap::new();
    for x in 0..g.order() as u16 {
        let c = centralizer(g, x);
        seen.entry(c).or_insert(x);
    }
    let mut pairs: Vec<(SubgroupSet, ElementId)> = seen.into_iter().collect();
    pairs.sort_by(|(a, _), (b, _)| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.mask_key().cmp(b.mask_key()))
    });
    let count = pairs.len();
    let (distinct, witness_for) = pairs.into_iter().unzip();
    CentralizerFamily { distinct, witness_for, count }
}

/// Subgroup generated by all commutators (generated closure, not just the
/// commutator set).
pub fn commutator_subgroup(g: &CayleyGroup) -> SubgroupSet {
    derived_of_set(g, &SubgroupSet::full(g.order()))
}

/// Derived subgroup of a subset, computed inside the parent group.
fn derived_of_set(g: &CayleyGroup, s: &SubgroupSet) -> SubgroupSet {
    let members: Vec<ElementId> = s.iter().collect();
    let mut comms = SubgroupSet::empty(g.order());
    for &a in &members {
        for &b in &members {
            comms.insert(g.commutator(a, b));
        }
    }
    g.generated_subgroup(comms.iter())
}

/// G >= G' >= G'' >= ... until stabilization.
pub fn derived_series(g: &CayleyGroup) -> Vec<SubgroupSet> {
    let mut series = vec![SubgroupSet::full(g.order())];
    loop {
        let next = derived_of_set(g, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// G >= [G, G] >= [G, [G, G]] >= ... until stabilization.
pub fn lower_central_series(g: &CayleyGroup) -> Vec<SubgroupSet> {
    let mut series = vec![SubgroupSet::full(g.order())];
    loop {
        let prev = series.last().unwrap();
        let mut comms = SubgroupSet::empty(g.order());
        for a in 0..g.order() as u16 {
            for x in prev.iter() {
                comms.insert(g.commutator(a, x));
            }
        }
        let next = g.generated_subgroup(comms.iter());
        if next.order() == prev.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_abelian(g: &CayleyGroup) -> bool {
    let n = g.order() as u16;
    (0..n).all(|a| (a..n).all(|b| g.commutes(a, b)))
}

pub fn is_perfect(g: &CayleyGroup) -> bool {
    commutator_subgroup(g).order() == g.order()
}

pub fn is_solvable(g: &CayleyGroup) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

pub fn is_nilpotent(g: &CayleyGroup) -> bool {
    lower_central_series(g).last().unwrap().order() == 1
}

/// Nilpotency of a subgroup, computed inside the parent.
pub(crate) fn set_is_nilpotent(g: &CayleyGroup, s: &SubgroupSet) -> bool {
    let mut prev = s.clone();
    loop {
        let mut comms = SubgroupSet::empty(g.order());
        for a in s.iter() {
            for x in prev.iter() {
                comms.insert(g.commutator(a, x));
            }
        }
        let next = g.generated_subgroup(comms.iter());
        if next.order() == prev.order() {
            return next.order() == 1;
        }
        prev = next;
    }
}

pub(crate) fn set_is_abelian(g: &CayleyGroup, s: &SubgroupSet) -> bool {
    let members: Vec<ElementId> = s.iter().collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i..].iter().all(|&b| g.commutes(a, b)))
}

pub(crate) fn set_is_cyclic(g: &CayleyGroup, s: &SubgroupSet) -> bool {
    s.iter().any(|x| g.element_order(x) == s.order())
}

pub(crate) fn set_is_elementary_abelian(g: &CayleyGroup, s: &SubgroupSet) -> bool {
    if !set_is_abelian(g, s) {
        return false;
    }
    if s.order() == 1 {
        return true;
    }
    let p = s.iter().find(|&x| x != 0).map(|x| g.element_order(x)).unwrap();
    crate::families::is_prime(p as u64) && s.iter().all(|x| x == 0 || g.element_order(x) == p)
}

/// `|Cent(G)| = |G'| + 2`, by exact integer comparison.
pub fn is_cg(g: &CayleyGroup) -> CgVerdict {
    let cent_count = centralizer_family(g).count;
    let derived_order = commutator_subgroup(g).order();
    CgVerdict { is_cg: cent_count == derived_order + 2, cent_count, derived_order }
}

/// CA-group test: every proper centralizer C(x), x outside Z(G), is abelian.
pub fn is_ca(g: &CayleyGroup) -> bool {
    let fam = centralizer_family(g);
    fam.distinct
        .iter()
        .filter(|c| c.order() < g.order())
        .all(|c| set_is_abelian(g, c))
}

pub fn involution_stats(g: &CayleyGroup) -> InvolutionStats {
    let i_count = (0..g.order() as u16).filter(|&x| g.mul(x, x) == 0).count();
    InvolutionStats { i_count, alpha: Rational::new(i_count as u64, g.order() as u64) }
}

/// Maximum size of a set of pairwise non-commuting elements: the clique
/// number of the non-commuting graph. Commuting is invariant on cosets of
/// Z(G), so the search runs on non-central cosets. Exceeding the budget (or
/// |G/Z| > 256) yields the best-known value with `exact = false`.
pub fn omega(g: &CayleyGroup, budget: u64) -> OmegaResult {
    if is_abelian(g) {
        return OmegaResult { value: 1, exact: true };
    }
    let z = center(g);
    let mut coset_rep: Vec<ElementId> = Vec::new();
    let mut assigned = vec![false; g.order()];
    for x in 0..g.order() as u16 {
        if assigned[x as usize] {
            continue;
        }
        for zz in z.iter() {
            assigned[g.mul(x, zz) as usize] = true;
        }
        coset_rep.push(x);
    }
    let reps: Vec<ElementId> = coset_rep.into_iter().filter(|&r| !z.contains(r)).collect();
    if reps.len() > 256 {
        return OmegaResult { value: greedy_noncommuting(g, &reps), exact: false };
    }
    let result = clique::max_clique(
        reps.len(),
        |i, j| !g.commutes(reps[i], reps[j]),
        budget,
    );
    OmegaResult { value: result.size.max(1), exact: result.exact }
}

fn greedy_noncommuting(g: &CayleyGroup, reps: &[ElementId]) -> usize {
    let mut chosen: Vec<ElementId> = Vec::new();
    for &r in reps {
        if chosen.iter().all(|&c| !g.commutes(c, r)) {
            chosen.push(r);
        }
    }
    chosen.len().max(1)
}

/// All normal subgroups, as the join-closure of the normal closures of
/// single elements. Deterministic sorted output; errors out past `budget`
/// subgroups.
pub fn normal_subgroups(g: &CayleyGroup, budget: usize) -> Result<Vec<SubgroupSet>> {
    let classes = g.conjugacy_classes();
    let mut atoms: Vec<SubgroupSet> = Vec::new();
    for class in &classes {
        let ncl = g.generated_subgroup(class.iter().copied());
        if !atoms.contains(&ncl) {
            atoms.push(ncl);
        }
    }
    join_closure(g, &atoms, budget)
}

/// All subgroups, as the join-closure of the cyclic subgroups.
pub fn all_subgroups(g: &CayleyGroup, budget: usize) -> Result<Vec<SubgroupSet>> {
    let mut atoms: Vec<SubgroupSet> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for x in 0..g.order() as u16 {
        let cyc = g.generated_subgroup([x]);
        if seen.insert(cyc.clone()) {
            atoms.push(cyc);
        }
    }
    join_closure(g, &atoms, budget)
}

fn join_closure(g: &CayleyGroup, atoms: &[SubgroupSet], budget: usize) -> Result<Vec<SubgroupSet>> {
    let mut found: std::collections::HashSet<SubgroupSet> = std::collections::HashSet::new();
    let mut work: Vec<SubgroupSet> = Vec::new();
    let trivial = SubgroupSet::trivial(g.order());
    found.insert(trivial.clone());
    work.push(trivial);
    for a in atoms {
        if found.insert(a.clone()) {
            work.push(a.clone());
        }
    }
    while let Some(s) = work.pop() {
        for a in atoms {
            if a.is_subset_of(&s) {
                continue;
            }
            let join = g.generated_subgroup(s.union(a).iter());
            if found.insert(join.clone()) {
                if found.len() > budget {
                    return Err(Error::LatticeBudgetExceeded);
                }
                work.push(join);
            }
        }
    }
    let mut out: Vec<SubgroupSet> = found.into_iter().collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.mask_key().cmp(b.mask_key()))
    });
    Ok(out)
}

/// Least abelian normal subgroup of prime index, if any.
pub fn abelian_normal_prime_index(g: &CayleyGroup) -> Result<Option<SubgroupSet>> {
    let n = g.order();
    for s in normal_subgroups(g, 100_000)? {
        if s.order() < n
            && crate::families::is_prime((n / s.order()) as u64)
            && n % s.order() == 0
            && set_is_abelian(g, &s)
        {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn normalizer(g: &CayleyGroup, s: &SubgroupSet) -> SubgroupSet {
    let members: Vec<ElementId> = s.iter().collect();
    SubgroupSet::from_members(
        g.order(),
        (0..g.order() as u16).filter(|&x| members.iter().all(|&m| s.contains(g.conj(x, m)))),
    )
}

/// One Sylow p-subgroup, grown by extending with p-elements of the
/// normalizer until the full p-part is reached.
pub fn sylow_subgroup(g: &CayleyGroup, p: u64) -> Result<SubgroupSet> {
    if !crate::families::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = g.order() as u64;
    if n % p != 0 {
        return Err(Error::BadParams(format!("{p} does not divide the group order {n}")));
    }
    let mut p_part = 1u64;
    let mut t = n;
    while t % p == 0 {
        p_part *= p;
        t /= p;
    }
    let is_p_power = |k: usize| -> bool {
        let mut k = k as u64;
        while k % p == 0 {
            k /= p;
        }
        k == 1
    };
    // a p-element exists (Cauchy): power any element of order divisible by p
    let seed = (1..g.order() as u16)
        .find_map(|x| {
            let o = g.element_order(x) as u64;
            if o % p == 0 {
                Some(g.pow(x, o / p))
            } else {
                None
            }
        })
        .expect("p divides |G|, so an element of order p exists");
    let mut sylow = g.generated_subgroup([seed]);
    while (sylow.order() as u64) < p_part {
        let norm = normalizer(g, &sylow);
        let next = norm
            .iter()
            .find(|&y| !sylow.contains(y) && is_p_power(g.element_order(y)))
            .expect("normalizer of a non-maximal p-subgroup contains a new p-element");
        let mut seeds: Vec<ElementId> = sylow.iter().collect();
        seeds.push(next);
        sylow = g.generated_subgroup(seeds);
    }
    Ok(sylow)
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// One Sylow subgroup per prime divisor is checked (they are all conjugate).
pub fn all_sylow_abelian(g: &CayleyGroup) -> Result<bool> {
    for p in prime_factors(g.order() as u64) {
        if !set_is_abelian(g, &sylow_subgroup(g, p)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-abelian with every proper subgroup abelian; equivalently, every
/// non-commuting pair generates the whole group.
pub fn is_minimal_nonabelian(g: &CayleyGroup) -> bool {
    if is_abelian(g) {
        return false;
    }
    let n = g.order() as u16;
    for a in 1..n {
        for b in (a + 1)..n {
            if !g.commutes(a, b) && g.generated_subgroup([a, b]).order() < g.order() {
                return false;
            }
        }
    }
    true
}

/// Non-nilpotent with every proper subgroup nilpotent. It suffices to check
/// 2-generated proper subgroups: a non-nilpotent subgroup contains a
/// 2-generated minimal non-nilpotent (Schmidt) subgroup.
pub fn is_minimal_nonnilpotent(g: &CayleyGroup) -> bool {
    if is_nilpotent(g) {
        return false;
    }
    let n = g.order() as u16;
    let mut checked: std::collections::HashSet<SubgroupSet> = std::collections::HashSet::new();
    for a in 1..n {
        for b in (a + 1)..n {
            let s = g.generated_subgroup([a, b]);
            if s.order() == g.order() || !checked.insert(s.clone()) {
                continue;
            }
            if !set_is_nilpotent(g, &s) {
                return false;
            }
        }
    }
    true
}

/// Existence of a cyclic normal subgroup with cyclic quotient.
pub fn is_metacyclic(g: &CayleyGroup) -> Result<bool> {
    let n = g.order();
    for s in normal_subgroups(g, 100_000)? {
        if !set_is_cyclic(g, &s) {
            continue;
        }
        let index = n / s.order();
        // quotient cyclic iff some coset has full order in G/N
        let quotient_cyclic = (0..n as u16).any(|x| {
            let mut k = 1usize;
            let mut y = x;
            while !s.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            k == index
        });
        if quotient_cyclic {
            return Ok(true);
        }
    }
    Ok(false)
}

/// For every abelian normal A with G/A cyclic, checks
/// `|A| = |G'| * |A n Z(G)|` exactly.
pub fn isaacs_identity_check(g: &CayleyGroup) -> Result<Vec<(SubgroupSet, bool)>> {
    let derived = commutator_subgroup(g);
    let z = center(g);
    let n = g.order();
    let mut out = Vec::new();
    for a in normal_subgroups(g, 100_000)? {
        if !set_is_abelian(g, &a) {
            continue;
        }
        let index = n / a.order();
        let quotient_cyclic = (0..n as u16).any(|x| {
            let mut k = 1usize;
            let mut y = x;
            while !a.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            k == index
        });
        if !quotient_cyclic {
            continue;
        }
        let holds = a.order() == derived.order() * a.intersect(&z).order();
        out.push((a, holds));
    }
    Ok(out)
}

/// `N_G(H) = H` for every non-abelian subgroup H (needs the full lattice).
pub fn self_normalizing_nonabelian(g: &CayleyGroup, lattice_cap: usize) -> Result<bool> {
    if g.order() > lattice_cap {
        return Err(Error::OrderCapExceeded { required: g.order(), cap: lattice_cap });
    }
    for h in all_subgroups(g, 100_000)? {
        if !set_is_abelian(g, &h) && normalizer(g, &h) != h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Aggregated report over one group.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub order: usize,
    pub z_order: usize,
    pub derived_order: usize,
    pub cent_count: usize,
    #[serde(rename = "isCG")]
    pub is_cg: bool,
    #[serde(rename = "isCA")]
    pub is_ca: bool,
    pub is_perfect: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_abelian: bool,
    pub alpha: Rational,
    /// None when |G/Z| exceeds the clique-search domain or the budget ran
    /// out before an exact answer.
    pub omega: Option<OmegaResult>,
    pub flags: AnalysisFlags,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisFlags {
    pub minimal_non_abelian: bool,
    pub minimal_non_nilpotent: bool,
    pub metacyclic: bool,
    pub all_sylow_abelian: bool,
    pub has_abelian_normal_prime_index: bool,
    /// |G' n Z(G)| = 1
    pub derived_meets_center_trivially: bool,
}

pub fn analyze(g: &CayleyGroup, config: &Config) -> Result<AnalysisReport> {
    let z = center(g);
    let derived = commutator_subgroup(g);
    let fam = centralizer_family(g);
    let stats = involution_stats(g);
    let omega_result = omega(g, config.search_budget);
    let omega_field = if omega_result.exact { Some(omega_result) } else { None };
    let cent_count = fam.count;
    let derived_order = derived.order();
    Ok(AnalysisReport {
        order: g.order(),
        z_order: z.order(),
        derived_order,
        cent_count,
        is_cg: cent_count == derived_order + 2,
        is_ca: is_ca(g),
        is_perfect: derived_order == g.order(),
        is_nilpotent: is_nilpotent(g),
        is_solvable: is_solvable(g),
        is_abelian: is_abelian(g),
        alpha: stats.alpha,
        omega: omega_field,
        flags: AnalysisFlags {
            minimal_non_abelian: is_minimal_nonabelian(g),
            minimal_non_nilpotent: is_minimal_nonnilpotent(g),
            metacyclic: is_metacyclic(g)?,
            all_sylow_abelian: all_sylow_abelian(g)?,
            has_abelian_normal_prime_index: abelian_normal_prime_index(g)?.is_some(),
            derived_meets_center_trivially: derived.intersect(&z).order() == 1,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::DEFAULT_ORDER_CAP as CAP;

    fn s3() -> CayleyGroup {
        symmetric(3, CAP).unwrap()
    }
    fn s4() -> CayleyGroup {
        symmetric(4, CAP).unwrap()
    }
    fn d8() -> CayleyGroup {
        dihedral(4, CAP).unwrap()
    }
    fn q8() -> CayleyGroup {
        generalized_quaternion(2, CAP).unwrap()
    }

    #[test]
    fn centers() {
        let c6 = cyclic(6, CAP).unwrap();
        assert_eq!(center(&c6).order(), 6);
        assert_eq!(center(&d8()).order(), 2);
        assert_eq!(center(&s4()).order(), 1);
    }

    #[test]
    fn centralizers() {
        let g = s3();
        assert_eq!(centralizer(&g, 0).order(), 6);
        let t = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(centralizer(&g, t).order(), 2);
        let q = q8();
        let z = center(&q);
        for x in 0..8u16 {
            if !z.contains(x) {
                assert_eq!(centralizer(&q, x).order(), 4);
            }
        }
    }

    #[test]
    fn centralizer_family_counts() {
        assert_eq!(centralizer_family(&s3()).count, 5);
        assert_eq!(centralizer_family(&s4()).count, 14);
        assert_eq!(centralizer_family(&alternating(5, CAP).unwrap()).count, 22);
        // the family includes the full group exactly once, witnessed by 0
        let fam = centralizer_family(&s3());
        let full: Vec<_> = fam.distinct.iter().filter(|c| c.order() == 6).collect();
        assert_eq!(full.len(), 1);
    }

    #[test]
    fn commutator_subgroups() {
        assert_eq!(commutator_subgroup(&cyclic(12, CAP).unwrap()).order(), 1);
        let a4 = alternating(4, CAP).unwrap();
        assert_eq!(commutator_subgroup(&s4()).order(), 12);
        let (derived_group, _) = s4().subgroup_as_group(&commutator_subgroup(&s4()));
        assert!(derived_group.isomorphism_search(&a4, 1 << 22).unwrap().is_some());
        // GL(2,q)' = SL(2,q) for q = 3, 4
        for (p, k) in [(3u64, 1u64), (2, 2)] {
            let f = crate::gf::build_field(p, k).unwrap();
            let gl = crate::gf::gl2(&f, CAP).unwrap();
            let sl = crate::gf::sl2(&f, CAP).unwrap();
            let d = commutator_subgroup(&gl);
            assert_eq!(d.order(), sl.order());
            let (dg, _) = gl.subgroup_as_group(&d);
            assert!(dg.isomorphism_search(&sl, 1 << 23).unwrap().is_some());
        }
    }

    #[test]
    fn series_predicates() {
        assert!(is_solvable(&s4()));
        assert!(!is_nilpotent(&s4()));
        assert!(is_nilpotent(&d8()));
        assert_eq!(lower_central_series(&d8()).len(), 3, "class 2");
        let a5 = alternating(5, CAP).unwrap();
        assert!(is_perfect(&a5));
        assert!(!is_solvable(&a5));
    }

    #[test]
    fn cg_verdicts() {
        let v = is_cg(&s3());
        assert!(v.is_cg);
        assert_eq!((v.cent_count, v.derived_order), (5, 3));
        assert!(!is_cg(&alternating(5, CAP).unwrap()).is_cg);
        let f3 = crate::gf::build_field(3, 1).unwrap();
        let gl3 = crate::gf::gl2(&f3, CAP).unwrap();
        let v3 = is_cg(&gl3);
        assert!(!v3.is_cg);
        assert_eq!((v3.cent_count, v3.derived_order), (14, 24));
    }

    #[test]
    fn ca_verdicts() {
        assert!(is_ca(&s3()));
        assert!(!is_ca(&s4()), "S4 is CG but not CA");
        assert!(is_ca(&q8()));
    }

    #[test]
    fn ca_partition_property() {
        // for CA-groups, distinct proper centralizers intersect in Z(G)
        for g in [s3(), d8(), q8(), u6n(2, CAP).unwrap(), heisenberg(3, CAP).unwrap()] {
            assert!(is_ca(&g));
            let z = center(&g);
            let fam = centralizer_family(&g);
            let proper: Vec<_> =
                fam.distinct.iter().filter(|c| c.order() < g.order()).collect();
            for (i, a) in proper.iter().enumerate() {
                for b in &proper[i + 1..] {
                    assert_eq!(a.intersect(b), z);
                }
            }
        }
    }

    #[test]
    fn involution_counts() {
        let c2 = cyclic(2, CAP).unwrap();
        assert_eq!(involution_stats(&c2).alpha, Rational::new(1, 1));
        assert_eq!(involution_stats(&s3()).alpha, Rational::new(4, 6));
        let d10 = dihedral(5, CAP).unwrap();
        assert_eq!(involution_stats(&d10).alpha, Rational::new(6, 10));
        assert!(involution_stats(&d10).alpha.exceeds_half());
    }

    #[test]
    fn omega_values() {
        // brute-force-confirmed clique numbers of the non-commuting graph
        assert_eq!(omega(&s3(), 1 << 20).value, 4);
        assert_eq!(omega(&d8(), 1 << 20).value, 3);
        assert_eq!(omega(&q8(), 1 << 20).value, 3);
        assert_eq!(omega(&alternating(4, CAP).unwrap(), 1 << 20).value, 5);
        assert_eq!(omega(&s4(), 1 << 22).value, 10);
        assert_eq!(omega(&cyclic(5, CAP).unwrap(), 1 << 20).value, 1);
        // metacyclic p-group formula omega = (|G'|/p)(1+p)
        let m33 = modular_p(3, 3, CAP).unwrap();
        assert_eq!(omega(&m33, 1 << 22).value, 4);
        let m43 = modular_p(3, 4, CAP).unwrap();
        assert_eq!(omega(&m43, 1 << 22).value, 4);
    }

    #[test]
    fn omega_brute_force_cross_check() {
        // independent oracle: exhaustive subset scan over coset reps
        fn brute_omega(g: &CayleyGroup) -> usize {
            let z = center(&g.clone());
            let reps: Vec<u16> = {
                let mut assigned = vec![false; g.order()];
                let mut reps = Vec::new();
                for x in 0..g.order() as u16 {
                    if assigned[x as usize] {
                        continue;
                    }
                    for zz in z.iter() {
                        assigned[g.mul(x, zz) as usize] = true;
                    }
                    if !z.contains(x) {
                        reps.push(x);
                    }
                }
                reps
            };
            let m = reps.len();
            let mut best = 1usize;
            for mask in 1u32..(1u32 << m) {
                let verts: Vec<u16> =
                    (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| reps[i]).collect();
                if verts
                    .iter()
                    .all(|&a| verts.iter().all(|&b| a == b || !g.commutes(a, b)))
                {
                    best = best.max(verts.len());
                }
            }
            best
        }
        for g in [s3(), d8(), q8(), dihedral(6, CAP).unwrap(), u6n(2, CAP).unwrap()] {
            assert_eq!(omega(&g, 1 << 22).value, brute_omega(&g));
        }
    }

    #[test]
    fn normal_subgroup_lattices() {
        let subs = normal_subgroups(&s4(), 100_000).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24], "{{1, V4, A4, S4}}");
        assert_eq!(normal_subgroups(&q8(), 100_000).unwrap().len(), 6);
        let a5 = alternating(5, CAP).unwrap();
        assert_eq!(normal_subgroups(&a5, 100_000).unwrap().len(), 2);
    }

    #[test]
    fn abelian_normal_prime_index_cases() {
        let d12 = dihedral(6, CAP).unwrap();
        let n = abelian_normal_prime_index(&d12).unwrap().unwrap();
        assert_eq!(n.order(), 6, "rotation subgroup");
        let q = q8();
        assert_eq!(abelian_normal_prime_index(&q).unwrap().unwrap().order(), 4);
        let a5 = alternating(5, CAP).unwrap();
        assert!(abelian_normal_prime_index(&a5).unwrap().is_none());
    }

    #[test]
    fn sylow_subgroups() {
        let g = s4();
        assert_eq!(sylow_subgroup(&g, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        let a4 = alternating(4, CAP).unwrap();
        assert_eq!(sylow_subgroup(&a4, 3).unwrap().order(), 3);
        assert!(all_sylow_abelian(&s3()).unwrap());
        assert!(!all_sylow_abelian(&s4()).unwrap());
        // p-part exactness on a few catalog groups
        for g in [s4(), dihedral(6, CAP).unwrap(), u6n(4, CAP).unwrap()] {
            for p in prime_factors(g.order() as u64) {
                let s = sylow_subgroup(&g, p).unwrap();
                let mut pp = 1usize;
                let mut t = g.order();
                while t % p as usize == 0 {
                    pp *= p as usize;
                    t /= p as usize;
                }
                assert_eq!(s.order(), pp);
            }
        }
    }

    #[test]
    fn minimality_predicates() {
        assert!(is_minimal_nonabelian(&q8()));
        assert!(is_minimal_nonabelian(&s3()));
        assert!(!is_minimal_nonabelian(&s4()));
        assert!(is_minimal_nonnilpotent(&s3()));
        assert!(is_minimal_nonnilpotent(&alternating(4, CAP).unwrap()));
        assert!(!is_minimal_nonnilpotent(&s4()), "S3 <= S4 is non-nilpotent");
        let f3 = crate::gf::build_field(3, 1).unwrap();
        assert!(is_minimal_nonnilpotent(&crate::gf::sl2(&f3, CAP).unwrap()));
    }

    #[test]
    fn minimal_nonnilpotent_full_lattice_cross_check() {
        // the 2-generated scan must agree with a full-lattice scan (<= 100)
        for g in [
            s3(),
            s4(),
            d8(),
            alternating(4, CAP).unwrap(),
            dihedral(5, CAP).unwrap(),
            u6n(3, CAP).unwrap(),
            frobenius_metacyclic(7, 3, CAP).unwrap(),
        ] {
            let by_pairs = is_minimal_nonnilpotent(&g);
            let lattice = all_subgroups(&g, 100_000).unwrap();
            let by_lattice = !is_nilpotent(&g)
                && lattice
                    .iter()
                    .filter(|h| h.order() < g.order())
                    .all(|h| set_is_nilpotent(&g, h));
            assert_eq!(by_pairs, by_lattice);
        }
    }

    #[test]
    fn metacyclic_cases() {
        assert!(is_metacyclic(&modular_p(3, 3, CAP).unwrap()).unwrap());
        assert!(is_metacyclic(&q8()).unwrap());
        assert!(!is_metacyclic(&elementary_abelian(2, 3, CAP).unwrap()).unwrap());
    }

    #[test]
    fn isaacs_identity() {
        // groups with at least one abelian normal A, G/A cyclic
        for g in [d8(), s3(), q8(), cyclic(12, CAP).unwrap(), u6n(3, CAP).unwrap()] {
            let checks = isaacs_identity_check(&g).unwrap();
            assert!(!checks.is_empty());
            assert!(checks.iter().all(|(_, ok)| *ok));
        }
        // S4 has no abelian normal subgroup with cyclic quotient: vacuous
        assert!(isaacs_identity_check(&s4()).unwrap().is_empty());
        // spot check D8 with A = <r>: |A| = 4 = |G'| * |A n Z| = 2 * 2
        let d = d8();
        let rot = (1..8).find(|&x| d.element_order(x) == 4).unwrap();
        let a = d.generated_subgroup([rot]);
        let z = center(&d);
        assert_eq!(a.order(), commutator_subgroup(&d).order() * a.intersect(&z).order());
    }

    #[test]
    fn self_normalizing_cases() {
        assert!(self_normalizing_nonabelian(&s3(), 200).unwrap());
        assert!(self_normalizing_nonabelian(&alternating(4, CAP).unwrap(), 200).unwrap());
        assert!(self_normalizing_nonabelian(&d8(), 200).unwrap());
        // A4 <| S4 is non-abelian with N(A4) = S4
        assert!(!self_normalizing_nonabelian(&s4(), 200).unwrap());
        let big = cyclic(300, 2048).unwrap();
        assert!(matches!(
            self_normalizing_nonabelian(&big, 200),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn analyze_reports() {
        let cfg = Config::default();
        let r = analyze(&s3(), &cfg).unwrap();
        assert_eq!(
            (r.order, r.z_order, r.derived_order, r.cent_count),
            (6, 1, 3, 5)
        );
        assert!(r.is_cg && r.is_ca && r.is_solvable && !r.is_nilpotent);
        assert_eq!(r.alpha, Rational::new(2, 3));
        assert_eq!(r.omega.unwrap().value, 4);

        let rq = analyze(&q8(), &cfg).unwrap();
        assert_eq!((rq.cent_count, rq.derived_order), (4, 2));
        assert!(rq.is_cg && rq.flags.minimal_non_abelian && rq.flags.metacyclic);

        let ra = analyze(&alternating(5, CAP).unwrap(), &cfg).unwrap();
        assert!(ra.is_perfect && !ra.is_cg);

        // JSON field names are part of the external interface
        let js = serde_json::to_value(&r).unwrap();
        for key in [
            "order", "zOrder", "derivedOrder", "centCount", "isCG", "isCA", "isPerfect",
            "isNilpotent", "isSolvable", "isAbelian", "alpha", "omega", "flags",
        ] {
            assert!(js.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(js["alpha"]["num"], 2);
        assert_eq!(js["alpha"]["den"], 3);
        for key in [
            "minimalNonAbelian",
            "minimalNonNilpotent",
            "metacyclic",
            "allSylowAbelian",
            "hasAbelianNormalPrimeIndex",
            "derivedMeetsCenterTrivially",
        ] {
            assert!(js["flags"].get(key).is_some(), "missing flag {key}");
        }
    }
}
