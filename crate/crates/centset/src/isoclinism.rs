//! Commutator pairings and isoclinism testing.
//!
//! Two groups are isoclinic when there are isomorphisms `phi` between their
//! central quotients and `psi` between their derived subgroups that commute
//! with the commutator pairings `(aZ, bZ) -> [a, b]`. The search backtracks
//! over quotient isomorphisms `phi` only: `psi` is forced on pairing values,
//! which generate the derived subgroup, so it never has to be searched
//! independently.

use serde::Serialize;

use crate::analysis::{center, commutator_subgroup};
use crate::group::{for_each_isomorphism, CayleyGroup, ElementId, SubgroupSet};
use crate::Result;

const UNSET: u16 = u16::MAX;

/// The commutator pairing of a group: `(aZ, bZ) -> [a, b]`, with values
/// indexed in the derived subgroup re-indexed as a standalone group.
#[derive(Debug, Clone)]
pub struct CommutatorPairing {
    pub quotient: CayleyGroup,
    pub derived_group: CayleyGroup,
    pub derived_set: SubgroupSet,
    /// `pairing[i * q + j]` = derived-group id of `[rep_i, rep_j]`.
    pairing: Vec<u16>,
}

impl CommutatorPairing {
    #[inline]
    pub fn value(&self, i: ElementId, j: ElementId) -> ElementId {
        self.pairing[i as usize * self.quotient.order() + j as usize]
    }
}

/// Builds the pairing on canonical (least-member) coset representatives and
/// re-verifies well-definedness with a second representative choice.
pub fn commutator_pairing(g: &CayleyGroup) -> Result<CommutatorPairing> {
    let z = center(g);
    let (quotient, proj) = g.quotient_group(&z)?;
    let q = quotient.order();
    let mut rep_min = vec![UNSET; q];
    let mut rep_max = vec![0u16; q];
    for x in 0..g.order() as u16 {
        let c = proj[x as usize] as usize;
        if rep_min[c] == UNSET {
            rep_min[c] = x;
        }
        rep_max[c] = x;
    }
    let derived_set = commutator_subgroup(g);
    let (derived_group, embed) = g.subgroup_as_group(&derived_set);
    let mut back = vec![UNSET; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        back[x as usize] = i as u16;
    }
    let mut pairing = vec![0u16; q * q];
    for i in 0..q {
        for j in 0..q {
            let c = g.commutator(rep_min[i], rep_min[j]);
            debug_assert!(derived_set.contains(c));
            // value independent of representative choice: [az, bw] = [a, b]
            assert_eq!(c, g.commutator(rep_max[i], rep_max[j]), "pairing is well-defined");
            pairing[i * q + j] = back[c as usize];
        }
    }
    let cp = CommutatorPairing { quotient, derived_group, derived_set, pairing };
    for i in 0..q as u16 {
        debug_assert_eq!(cp.value(i, i), 0);
        for j in 0..q as u16 {
            debug_assert_eq!(cp.value(i, j), cp.derived_group.inv(cp.value(j, i)));
        }
    }
    Ok(cp)
}

/// The isoclinism pair: `phi` on central quotients, `psi` on derived
/// subgroups, compatible with the pairings (re-verified on every pair
/// before being returned).
#[derive(Debug, Clone, Serialize)]
pub struct IsoclinismCertificate {
    pub phi: Vec<u16>,
    pub psi: Vec<u16>,
    pub verified: bool,
}

/// Why a negative verdict was reached without (or after) searching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotIsoclinicReason {
    QuotientOrder(usize, usize),
    DerivedOrder(usize, usize),
    QuotientInvariants,
    DerivedInvariants,
    SearchExhausted,
}

impl std::fmt::Display for NotIsoclinicReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotIsoclinicReason::QuotientOrder(a, b) => {
                write!(f, "pre-prune: |G/Z| {a} != {b}")
            }
            NotIsoclinicReason::DerivedOrder(a, b) => write!(f, "pre-prune: |G'| {a} != {b}"),
            NotIsoclinicReason::QuotientInvariants => {
                write!(f, "pre-prune: central quotients are not isomorphic (invariants differ)")
            }
            NotIsoclinicReason::DerivedInvariants => {
                write!(f, "pre-prune: derived subgroups are not isomorphic (invariants differ)")
            }
            NotIsoclinicReason::SearchExhausted => {
                write!(f, "exhaustive search found no compatible pair (phi, psi)")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum IsoclinismVerdict {
    Isoclinic(IsoclinismCertificate),
    NotIsoclinic(NotIsoclinicReason),
}

impl IsoclinismVerdict {
    pub fn is_isoclinic(&self) -> bool {
        matches!(self, IsoclinismVerdict::Isoclinic(_))
    }
}

/// Forces `psi` from `phi` on pairing values and extends it multiplicatively
/// over the derived subgroup; returns the full `psi` when it extends to an
/// isomorphism compatible with both pairings.
fn force_psi(pa: &CommutatorPairing, pb: &CommutatorPairing, phi: &[u16]) -> Option<Vec<u16>> {
    let da = &pa.derived_group;
    let db = &pb.derived_group;
    let d = da.order();
    let q = pa.quotient.order();
    let mut psi = vec![UNSET; d];
    let mut used = vec![false; d];
    let mut seeds: Vec<u16> = Vec::new();
    for i in 0..q as u16 {
        for j in 0..q as u16 {
            let va = pa.value(i, j);
            let vb = pb.value(phi[i as usize], phi[j as usize]);
            if psi[va as usize] == UNSET {
                if used[vb as usize] {
                    return None;
                }
                psi[va as usize] = vb;
                used[vb as usize] = true;
                seeds.push(va);
            } else if psi[va as usize] != vb {
                return None;
            }
        }
    }
    // pairing values generate the derived subgroup; extend over products
    let mut work: Vec<u16> = seeds.clone();
    while let Some(x) = work.pop() {
        for &s in &seeds {
            let y = da.mul(x, s);
            let img = db.mul(psi[x as usize], psi[s as usize]);
            if psi[y as usize] == UNSET {
                if used[img as usize] {
                    return None;
                }
                psi[y as usize] = img;
                used[img as usize] = true;
                work.push(y);
            } else if psi[y as usize] != img {
                return None;
            }
        }
    }
    if psi.iter().any(|&v| v == UNSET) {
        return None;
    }
    // full verification: psi is an isomorphism ...
    for x in 0..d as u16 {
        for y in 0..d as u16 {
            if psi[da.mul(x, y) as usize] != db.mul(psi[x as usize], psi[y as usize]) {
                return None;
            }
        }
    }
    // ... and the compatibility square commutes on every quotient pair
    for i in 0..q as u16 {
        for j in 0..q as u16 {
            if psi[pa.value(i, j) as usize] != pb.value(phi[i as usize], phi[j as usize]) {
                return None;
            }
        }
    }
    Some(psi)
}

/// Isoclinism test. Pre-prunes on |G/Z|, |G'| and their element-order
/// histograms; then backtracks over quotient isomorphisms with `psi` forced.
/// Budget exhaustion is an error, distinct from a negative verdict.
pub fn are_isoclinic(a: &CayleyGroup, b: &CayleyGroup, budget: u64) -> Result<IsoclinismVerdict> {
    let pa = commutator_pairing(a)?;
    let pb = commutator_pairing(b)?;
    let (qa, qb) = (pa.quotient.order(), pb.quotient.order());
    if qa != qb {
        return Ok(IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::QuotientOrder(qa, qb)));
    }
    let (da, db) = (pa.derived_group.order(), pb.derived_group.order());
    if da != db {
        return Ok(IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::DerivedOrder(da, db)));
    }
    if pa.quotient.order_histogram() != pb.quotient.order_histogram() {
        return Ok(IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::QuotientInvariants));
    }
    if pa.derived_group.order_histogram() != pb.derived_group.order_histogram() {
        return Ok(IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::DerivedInvariants));
    }
    let mut certificate = None;
    for_each_isomorphism(&pa.quotient, &pb.quotient, budget, &mut |phi| {
        if let Some(psi) = force_psi(&pa, &pb, phi) {
            certificate = Some(IsoclinismCertificate {
                phi: phi.to_vec(),
                psi,
                verified: true,
            });
            true
        } else {
            false
        }
    })?;
    Ok(match certificate {
        Some(c) => IsoclinismVerdict::Isoclinic(c),
        None => IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::SearchExhausted),
    })
}

/// Whether G is isoclinic to its derived subgroup. When G/Z(G) is perfect
/// this also asserts G'Z(G) = G; otherwise it falls back to the direct test.
pub fn isoclinic_to_derived(g: &CayleyGroup, budget: u64) -> Result<bool> {
    let z = center(g);
    let (quotient, _) = g.quotient_group(&z)?;
    let derived = commutator_subgroup(g);
    if commutator_subgroup(&quotient).order() == quotient.order() {
        // G/Z perfect forces G'Z(G) = G
        let mut seeds: Vec<ElementId> = derived.iter().collect();
        seeds.extend(z.iter());
        assert_eq!(
            g.generated_subgroup(seeds).order(),
            g.order(),
            "G'Z(G) = G when G/Z(G) is perfect"
        );
    }
    let (derived_grp, _) = g.subgroup_as_group(&derived);
    Ok(are_isoclinic(g, &derived_grp, budget)?.is_isoclinic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::DEFAULT_ORDER_CAP as CAP;

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn pairing_shapes() {
        let s3 = symmetric(3, CAP).unwrap();
        let p = commutator_pairing(&s3).unwrap();
        assert_eq!(p.quotient.order(), 6);
        assert_eq!(p.derived_group.order(), 3);

        let d8 = dihedral(4, CAP).unwrap();
        let p = commutator_pairing(&d8).unwrap();
        assert_eq!(p.quotient.order(), 4);
        assert_eq!(p.derived_group.order(), 2);
        // pairing onto G' is antisymmetric with trivial diagonal
        for i in 0..4u16 {
            assert_eq!(p.value(i, i), 0);
            for j in 0..4u16 {
                assert_eq!(p.value(i, j), p.derived_group.inv(p.value(j, i)));
            }
        }

        let c6 = cyclic(6, CAP).unwrap();
        let p = commutator_pairing(&c6).unwrap();
        assert_eq!(p.quotient.order(), 1);
        assert_eq!(p.derived_group.order(), 1);
    }

    #[test]
    fn group_is_isoclinic_to_itself() {
        for g in [symmetric(4, CAP).unwrap(), dihedral(4, CAP).unwrap()] {
            assert!(are_isoclinic(&g, &g, BUDGET).unwrap().is_isoclinic());
        }
    }

    #[test]
    fn heisenberg_vs_s3_prunes_on_quotient_order() {
        let h = heisenberg(3, CAP).unwrap();
        let s3 = symmetric(3, CAP).unwrap();
        match are_isoclinic(&h, &s3, BUDGET).unwrap() {
            IsoclinismVerdict::NotIsoclinic(NotIsoclinicReason::QuotientOrder(9, 6)) => {}
            v => panic!("expected quotient-order prune, got {v:?}"),
        }
    }

    #[test]
    fn d8_and_q8_are_isoclinic() {
        let d8 = dihedral(4, CAP).unwrap();
        let q8 = generalized_quaternion(2, CAP).unwrap();
        let verdict = are_isoclinic(&d8, &q8, BUDGET).unwrap();
        let IsoclinismVerdict::Isoclinic(cert) = verdict else {
            panic!("D8 and Q8 are isoclinic");
        };
        assert!(cert.verified);
        assert_eq!(cert.phi.len(), 4);
        assert_eq!(cert.psi.len(), 2);
    }

    #[test]
    fn symmetry_on_catalog_pairs() {
        let pairs = [
            (dihedral(4, CAP).unwrap(), generalized_quaternion(2, CAP).unwrap()),
            (symmetric(3, CAP).unwrap(), u6n(2, CAP).unwrap()),
            (dihedral(4, CAP).unwrap(), symmetric(3, CAP).unwrap()),
            (heisenberg(3, CAP).unwrap(), modular_p(3, 3, CAP).unwrap()),
        ];
        for (a, b) in pairs {
            let ab = are_isoclinic(&a, &b, BUDGET).unwrap().is_isoclinic();
            let ba = are_isoclinic(&b, &a, BUDGET).unwrap().is_isoclinic();
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn cent_count_matches_on_isoclinic_pairs() {
        // |Cent| is an isoclinism invariant; checked empirically on pairs
        use crate::analysis::centralizer_family;
        let pairs = [
            (dihedral(4, CAP).unwrap(), generalized_quaternion(2, CAP).unwrap()),
            (symmetric(3, CAP).unwrap(), u6n(2, CAP).unwrap()),
            (heisenberg(3, CAP).unwrap(), modular_p(3, 3, CAP).unwrap()),
        ];
        for (a, b) in pairs {
            if are_isoclinic(&a, &b, BUDGET).unwrap().is_isoclinic() {
                assert_eq!(centralizer_family(&a).count, centralizer_family(&b).count);
            }
        }
    }

    #[test]
    fn isoclinic_to_derived_cases() {
        let a5 = alternating(5, CAP).unwrap();
        assert!(isoclinic_to_derived(&a5, BUDGET).unwrap(), "perfect group");
        let s4 = symmetric(4, CAP).unwrap();
        assert!(!isoclinic_to_derived(&s4, BUDGET).unwrap(), "|S4/Z| = 24 vs |A4/Z| = 12");
    }

    #[test]
    fn certificate_json_shape() {
        let d8 = dihedral(4, CAP).unwrap();
        let q8 = generalized_quaternion(2, CAP).unwrap();
        if let IsoclinismVerdict::Isoclinic(cert) = are_isoclinic(&d8, &q8, BUDGET).unwrap() {
            let js = serde_json::to_value(&cert).unwrap();
            assert!(js["phi"].is_array() && js["psi"].is_array());
            assert_eq!(js["verified"], true);
        } else {
            panic!();
        }
    }
}
