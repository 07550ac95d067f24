//! Abstract Frobenius structure detection: kernel, complement, minimality.
//!
//! The kernel is found by the standard characterization: a proper nontrivial
//! normal Hall subgroup K with C(k) <= K for every non-identity k in K.
//! Complements are located best-effort (their absence never changes the
//! Frobenius verdict), and any returned decomposition re-verifies all of its
//! invariants exactly.

use serde::Serialize;

use crate::analysis::{
    all_subgroups, center, normal_subgroups, set_is_abelian, set_is_cyclic,
    set_is_elementary_abelian,
};
use crate::error::Error;
use crate::group::{CayleyGroup, ElementId, SubgroupSet};
use crate::{Config, Result};

/// Kernel, optional complement, and structural flags.
#[derive(Debug, Clone)]
pub struct FrobeniusDecomposition {
    pub kernel: SubgroupSet,
    pub complement: Option<SubgroupSet>,
    pub kernel_abelian: bool,
    pub kernel_cyclic: bool,
    pub kernel_elementary_abelian: bool,
    pub complement_abelian: bool,
    pub complement_cyclic: bool,
    pub complement_prime_order: bool,
    /// None when the order exceeds the lattice cap.
    pub minimal: Option<bool>,
}

#[derive(Serialize)]
struct OrderObj {
    order: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FlagsObj {
    kernel_abelian: bool,
    kernel_cyclic: bool,
    kernel_elementary_abelian: bool,
    complement_abelian: bool,
    complement_cyclic: bool,
    complement_prime_order: bool,
}

impl FrobeniusDecomposition {
    /// The documented decomposition JSON:
    /// `{"kernel":{"order":..},"complement":{"order":..}|null,"flags":{..},"minimal":..}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kernel": OrderObj { order: self.kernel.order() },
            "complement": self.complement.as_ref().map(|h| OrderObj { order: h.order() }),
            "flags": FlagsObj {
                kernel_abelian: self.kernel_abelian,
                kernel_cyclic: self.kernel_cyclic,
                kernel_elementary_abelian: self.kernel_elementary_abelian,
                complement_abelian: self.complement_abelian,
                complement_cyclic: self.complement_cyclic,
                complement_prime_order: self.complement_prime_order,
            },
            "minimal": self.minimal,
        })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Centralizer-containment test for a kernel candidate.
fn kernel_criterion(g: &CayleyGroup, n: &SubgroupSet) -> bool {
    let order = g.order();
    if n.order() <= 1 || n.order() >= order || gcd(n.order(), order / n.order()) != 1 {
        return false;
    }
    for k in n.iter() {
        if k == 0 {
            continue;
        }
        for x in 0..order as u16 {
            if g.commutes(x, k) && !n.contains(x) {
                return false;
            }
        }
    }
    true
}

/// The Frobenius kernel, when one exists: the least proper nontrivial normal
/// Hall subgroup whose element centralizers stay inside it.
pub fn frobenius_kernel(g: &CayleyGroup) -> Result<Option<SubgroupSet>> {
    let mut candidates: Vec<SubgroupSet> = Vec::new();
    for n in normal_subgroups(g, 100_000)? {
        if kernel_criterion(g, &n) {
            candidates.push(n);
        }
    }
    // candidates are sorted by (order, mask); they must form a chain
    for pair in candidates.windows(2) {
        assert!(
            pair[0].is_subset_of(&pair[1]),
            "kernel candidates are not nested; anomalous group"
        );
    }
    Ok(candidates.into_iter().next())
}

pub fn is_frobenius(g: &CayleyGroup) -> Result<bool> {
    Ok(frobenius_kernel(g)?.is_some())
}

fn fixed_point_free(g: &CayleyGroup, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    h.iter().filter(|&x| x != 0).all(|x| {
        k.iter()
            .filter(|&y| y != 0)
            .all(|y| g.conj(x, y) != y)
    })
}

fn complement_ok(g: &CayleyGroup, k: &SubgroupSet, h: &SubgroupSet, target: usize) -> bool {
    h.order() == target && h.intersect(k).order() == 1 && fixed_point_free(g, h, k)
}

/// Locates a complement for a verified kernel: first among subgroups
/// generated by at most two elements of order coprime to |K|, then by a full
/// lattice scan when the order is within the lattice cap.
pub fn find_complement(
    g: &CayleyGroup,
    kernel: &SubgroupSet,
    lattice_cap: usize,
) -> Result<SubgroupSet> {
    let target = g.order() / kernel.order();
    let coprime: Vec<ElementId> = (0..g.order() as u16)
        .filter(|&x| gcd(g.element_order(x), kernel.order()) == 1)
        .collect();
    for &x in &coprime {
        let s = g.generated_subgroup([x]);
        if complement_ok(g, kernel, &s, target) {
            return Ok(s);
        }
    }
    for (i, &x) in coprime.iter().enumerate() {
        for &y in &coprime[i + 1..] {
            let s = g.generated_subgroup([x, y]);
            if complement_ok(g, kernel, &s, target) {
                return Ok(s);
            }
        }
    }
    if g.order() <= lattice_cap {
        for s in all_subgroups(g, 100_000)? {
            if complement_ok(g, kernel, &s, target) {
                return Ok(s);
            }
        }
    }
    Err(Error::ComplementNotFound)
}

/// Whether no proper subgroup is Frobenius. `None` when the order exceeds
/// the lattice cap (the structural necessary condition is reported by the
/// decomposition flags instead).
pub fn is_minimal_frobenius(g: &CayleyGroup, lattice_cap: usize) -> Result<Option<bool>> {
    if !is_frobenius(g)? {
        return Ok(Some(false));
    }
    if g.order() > lattice_cap {
        return Ok(None);
    }
    for h in all_subgroups(g, 100_000)? {
        if h.order() <= 1 || h.order() >= g.order() || set_is_abelian(g, &h) {
            continue; // Frobenius groups are non-abelian
        }
        let (sub, _) = g.subgroup_as_group(&h);
        if is_frobenius(&sub)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Full decomposition with verified invariants, or `None` if not Frobenius.
pub fn decompose(g: &CayleyGroup, config: &Config) -> Result<Option<FrobeniusDecomposition>> {
    let Some(kernel) = frobenius_kernel(g)? else {
        return Ok(None);
    };
    // re-verify the decomposition invariants
    assert!(g.is_subgroup(&kernel) && g.is_normal(&kernel));
    assert!(kernel.order() > 1 && kernel.order() < g.order());
    assert_eq!(gcd(kernel.order(), g.order() / kernel.order()), 1, "Hall");
    assert!(kernel_criterion(g, &kernel));
    let complement = match find_complement(g, &kernel, config.lattice_cap) {
        Ok(h) => {
            assert!(g.is_subgroup(&h));
            assert_eq!(h.order(), g.order() / kernel.order());
            assert_eq!(h.intersect(&kernel).order(), 1);
            assert!(fixed_point_free(g, &h, &kernel));
            Some(h)
        }
        Err(Error::ComplementNotFound) => None,
        Err(e) => return Err(e),
    };
    let minimal = is_minimal_frobenius(g, config.lattice_cap)?;
    Ok(Some(FrobeniusDecomposition {
        kernel_abelian: set_is_abelian(g, &kernel),
        kernel_cyclic: set_is_cyclic(g, &kernel),
        kernel_elementary_abelian: set_is_elementary_abelian(g, &kernel),
        complement_abelian: complement.as_ref().is_some_and(|h| set_is_abelian(g, h)),
        complement_cyclic: complement.as_ref().is_some_and(|h| set_is_cyclic(g, h)),
        complement_prime_order: complement
            .as_ref()
            .is_some_and(|h| crate::families::is_prime(h.order() as u64)),
        kernel,
        complement,
        minimal,
    }))
}

/// Frobenius shape of the central quotient Q = G/Z(G), with the kernel and
/// complement lifted back to subgroups of G.
#[derive(Debug, Clone)]
pub struct QuotientShape {
    pub quotient_order: usize,
    pub kernel_bar_order: usize,
    pub complement_bar_order: Option<usize>,
    pub lifted_kernel: SubgroupSet,
    pub lifted_complement: Option<SubgroupSet>,
    pub kernel_bar_abelian: bool,
    pub kernel_bar_cyclic: bool,
    pub complement_bar_abelian: Option<bool>,
    pub complement_bar_cyclic: Option<bool>,
    pub lifted_kernel_abelian: bool,
    pub lifted_kernel_cyclic: bool,
    pub lifted_complement_abelian: Option<bool>,
    pub lifted_complement_cyclic: Option<bool>,
    pub quotient_minimal_frobenius: Option<bool>,
}

/// `None` when G/Z(G) is not Frobenius.
pub fn frobenius_quotient_shape(g: &CayleyGroup, config: &Config) -> Result<Option<QuotientShape>> {
    let z = center(g);
    let (q, proj) = g.quotient_group(&z)?;
    let Some(kbar) = frobenius_kernel(&q)? else {
        return Ok(None);
    };
    let hbar = match find_complement(&q, &kbar, config.lattice_cap) {
        Ok(h) => Some(h),
        Err(Error::ComplementNotFound) => None,
        Err(e) => return Err(e),
    };
    let lift = |bar: &SubgroupSet| -> SubgroupSet {
        SubgroupSet::from_members(
            g.order(),
            (0..g.order() as u16).filter(|&x| bar.contains(proj[x as usize])),
        )
    };
    let lifted_kernel = lift(&kbar);
    let lifted_complement = hbar.as_ref().map(&lift);
    Ok(Some(QuotientShape {
        quotient_order: q.order(),
        kernel_bar_order: kbar.order(),
        complement_bar_order: hbar.as_ref().map(|h| h.order()),
        kernel_bar_abelian: set_is_abelian(&q, &kbar),
        kernel_bar_cyclic: set_is_cyclic(&q, &kbar),
        complement_bar_abelian: hbar.as_ref().map(|h| set_is_abelian(&q, h)),
        complement_bar_cyclic: hbar.as_ref().map(|h| set_is_cyclic(&q, h)),
        lifted_kernel_abelian: set_is_abelian(g, &lifted_kernel),
        lifted_kernel_cyclic: set_is_cyclic(g, &lifted_kernel),
        lifted_complement_abelian: lifted_complement.as_ref().map(|h| set_is_abelian(g, h)),
        lifted_complement_cyclic: lifted_complement.as_ref().map(|h| set_is_cyclic(g, h)),
        quotient_minimal_frobenius: is_minimal_frobenius(&q, config.lattice_cap)?,
        lifted_kernel,
        lifted_complement,
    }))
}
