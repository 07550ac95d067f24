//! The group catalog backing quantified claims and the `scan` command:
//! family constructors plus direct/semidirect products up to order 200,
//! deduplicated by isomorphism invariants.
//!
//! The catalog is a documented sample of small groups, not an exhaustive
//! isomorphism-class census. Entries are deterministic: same build, same
//! names, same order.

use std::sync::OnceLock;

use crate::analysis;
use crate::families::*;
use crate::group::{ActionSpec, CayleyGroup};

pub const CATALOG_MAX_ORDER: usize = 200;
const CAP: usize = crate::DEFAULT_ORDER_CAP;

#[derive(Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: CayleyGroup,
}

/// Isomorphism-invariant fingerprint used for dedup: order, element-order
/// histogram, class-size multiset, |Z|, |G'| and |Cent|.
fn fingerprint(g: &CayleyGroup) -> (usize, Vec<(usize, usize)>, Vec<usize>, usize, usize, usize) {
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    (
        g.order(),
        g.order_histogram(),
        class_sizes,
        analysis::center(g).order(),
        analysis::commutator_subgroup(g).order(),
        analysis::centralizer_family(g).count,
    )
}

/// Action of the cyclic group's generator on C_n by x -> g0 * x.
fn cyclic_power_action(n: u64, g0: u64) -> ActionSpec {
    let img: Vec<u16> = (0..n).map(|x| (x * g0 % n) as u16).collect();
    ActionSpec { generators: vec![1], images: vec![img] }
}

/// Inversion action of C2 on an abelian group.
fn inversion_action(n: &CayleyGroup) -> ActionSpec {
    let img: Vec<u16> = (0..n.order() as u16).map(|x| n.inv(x)).collect();
    ActionSpec { generators: vec![1], images: vec![img] }
}

fn raw_entries() -> Vec<(String, CayleyGroup)> {
    let mut out: Vec<(String, CayleyGroup)> = Vec::new();
    let mut push = |name: String, g: CayleyGroup| out.push((name, g));

    // abelian layer first, so familiar abelian names survive dedup
    for n in (1..=16).chain([18, 20, 21, 24, 25, 27]) {
        push(format!("C{n}"), cyclic(n, CAP).expect("cyclic"));
    }
    for (p, k) in [(2u64, 2u64), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)] {
        push(format!("C{p}^{k}"), elementary_abelian(p, k, CAP).expect("elementary"));
    }
    for (a, b) in [(2u64, 4u64), (2, 8), (3, 9), (4, 4), (2, 6), (2, 12)] {
        let ga = cyclic(a, CAP).unwrap();
        let gb = cyclic(b, CAP).unwrap();
        push(format!("C{a}xC{b}"), CayleyGroup::direct_product(&ga, &gb, CAP).expect("product"));
    }

    // permutation families
    for n in 3..=5 {
        push(format!("S{n}"), symmetric(n, CAP).expect("symmetric"));
    }
    for n in 4..=5 {
        push(format!("A{n}"), alternating(n, CAP).expect("alternating"));
    }

    // presented families
    for n in 3..=12 {
        push(format!("D{}", 2 * n), dihedral(n, CAP).expect("dihedral"));
    }
    for (m, n) in [(13u64, 2u64), (15, 2), (16, 2), (25, 2), (27, 2), (49, 2)] {
        push(format!("D{}", m * n), generalized_dihedral(m, n, CAP).expect("gd"));
    }
    for (m, n) in [(5u64, 4u64), (3, 4), (4, 4), (6, 4), (3, 6), (5, 6), (7, 4), (9, 4), (7, 6)] {
        push(format!("D({m},{n})"), generalized_dihedral(m, n, CAP).expect("gd"));
    }
    for m in 2..=8 {
        push(format!("Q{}", 4 * m), generalized_quaternion(m, CAP).expect("quaternion"));
    }
    for n in 3..=6 {
        push(format!("SD{}", 1u64 << n), semidihedral(n, CAP).expect("semidihedral"));
    }
    for (p, n) in [(2u64, 3u64), (3, 3), (3, 4), (2, 4), (2, 5), (5, 3)] {
        push(format!("Mod_{n}({p})"), modular_p(p, n, CAP).expect("modular"));
    }
    for n in 1..=8 {
        push(format!("U{}", 6 * n), u6n(n, CAP).expect("u6n"));
    }
    for p in [3u64, 5] {
        push(format!("Heis({p})"), heisenberg(p, CAP).expect("heisenberg"));
    }
    for (p, q) in [(3u64, 2u64), (5, 2), (7, 2), (7, 3), (11, 2), (11, 5), (13, 3), (19, 3), (31, 5)] {
        push(format!("C{p}:C{q}"), frobenius_metacyclic(p, q, CAP).expect("metacyclic"));
    }

    // semidirect extras (kernel, acting cyclic group, x -> x^g)
    for (n, m, g0) in [
        (5u64, 4u64, 2u64), // F20, the full affine group of GF(5)
        (7, 6, 3),          // full affine group of GF(7)
        (9, 3, 4),
        (13, 4, 5),
        (9, 6, 2),
        (11, 10, 2),
    ] {
        let kn = cyclic(n, CAP).unwrap();
        let h = cyclic(m, CAP).unwrap();
        push(
            format!("C{n}:C{m}"),
            CayleyGroup::semidirect_product(&kn, &h, &cyclic_power_action(n, g0), CAP)
                .expect("catalog semidirect"),
        );
    }
    for (p, k) in [(3u64, 2u64), (5, 2)] {
        let e = elementary_abelian(p, k, CAP).unwrap();
        let c2 = cyclic(2, CAP).unwrap();
        push(
            format!("C{p}^{k}:C2"),
            CayleyGroup::semidirect_product(&e, &c2, &inversion_action(&e), CAP).expect("gd-ea"),
        );
    }

    // matrix families
    for (p, k, q) in [(2u64, 1u64, 2u64), (3, 1, 3)] {
        let f = crate::gf::build_field(p, k).expect("field");
        push(format!("GL(2,{q})"), crate::gf::gl2(&f, CAP).expect("gl2"));
    }
    for (p, k, q) in [(2u64, 1u64, 2u64), (3, 1, 3), (2, 2, 4), (5, 1, 5)] {
        let f = crate::gf::build_field(p, k).expect("field");
        push(format!("SL(2,{q})"), crate::gf::sl2(&f, CAP).expect("sl2"));
    }
    for (p, k, q) in [(3u64, 1u64, 3u64), (2, 2, 4), (5, 1, 5)] {
        let f = crate::gf::build_field(p, k).expect("field");
        push(format!("PGL(2,{q})"), crate::gf::pgl2(&f, CAP).expect("pgl2"));
    }
    for (p, k, q) in [(3u64, 1u64, 3u64), (5, 1, 5), (7, 1, 7)] {
        let f = crate::gf::build_field(p, k).expect("field");
        push(format!("PSL(2,{q})"), crate::gf::psl2(&f, CAP).expect("psl2"));
    }

    // direct products: small abelian x non-abelian base
    let abelian_factors: Vec<(String, CayleyGroup)> = vec![
        ("C2".into(), cyclic(2, CAP).unwrap()),
        ("C3".into(), cyclic(3, CAP).unwrap()),
        ("C4".into(), cyclic(4, CAP).unwrap()),
        ("C5".into(), cyclic(5, CAP).unwrap()),
        ("C6".into(), cyclic(6, CAP).unwrap()),
        ("C2^2".into(), elementary_abelian(2, 2, CAP).unwrap()),
    ];
    let bases: Vec<(String, CayleyGroup)> = vec![
        ("S3".into(), symmetric(3, CAP).unwrap()),
        ("D8".into(), dihedral(4, CAP).unwrap()),
        ("Q8".into(), generalized_quaternion(2, CAP).unwrap()),
        ("D10".into(), dihedral(5, CAP).unwrap()),
        ("Q12".into(), generalized_quaternion(3, CAP).unwrap()),
        ("D12".into(), dihedral(6, CAP).unwrap()),
        ("A4".into(), alternating(4, CAP).unwrap()),
        ("D14".into(), dihedral(7, CAP).unwrap()),
        ("D16".into(), dihedral(8, CAP).unwrap()),
        ("SD16".into(), semidihedral(4, CAP).unwrap()),
        ("Q16".into(), generalized_quaternion(4, CAP).unwrap()),
        ("Mod_4(2)".into(), modular_p(2, 4, CAP).unwrap()),
        ("D18".into(), dihedral(9, CAP).unwrap()),
        ("D20".into(), dihedral(10, CAP).unwrap()),
        ("C7:C3".into(), frobenius_metacyclic(7, 3, CAP).unwrap()),
        ("S4".into(), symmetric(4, CAP).unwrap()),
        ("SL(2,3)".into(), {
            let f = crate::gf::build_field(3, 1).unwrap();
            crate::gf::sl2(&f, CAP).unwrap()
        }),
        ("Heis(3)".into(), heisenberg(3, CAP).unwrap()),
        ("Mod_3(3)".into(), modular_p(3, 3, CAP).unwrap()),
        ("U18".into(), u6n(3, CAP).unwrap()),
        ("F20".into(), {
            let c5 = cyclic(5, CAP).unwrap();
            let c4 = cyclic(4, CAP).unwrap();
            CayleyGroup::semidirect_product(&c5, &c4, &cyclic_power_action(5, 2), CAP).unwrap()
        }),
        ("A5".into(), alternating(5, CAP).unwrap()),
        ("D30".into(), generalized_dihedral(15, 2, CAP).unwrap()),
    ];
    for (an, a) in &abelian_factors {
        for (bn, b) in &bases {
            if a.order() * b.order() <= CATALOG_MAX_ORDER {
                push(
                    format!("{an}x{bn}"),
                    CayleyGroup::direct_product(a, b, CAP).expect("product"),
                );
            }
        }
    }

    out
}

/// The deduplicated catalog, built once, sorted by (order, name).
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut seen = std::collections::HashSet::new();
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (name, group) in raw_entries() {
            if group.order() > CATALOG_MAX_ORDER {
                continue;
            }
            if seen.insert(fingerprint(&group)) {
                entries.push(CatalogEntry { name, group });
            }
        }
        entries.sort_by(|a, b| a.group.order().cmp(&b.group.order()).then(a.name.cmp(&b.name)));
        entries
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_size_and_names() {
        let cat = catalog();
        assert!(cat.len() >= 120, "got {}", cat.len());
        assert!(cat.len() <= 250, "got {}", cat.len());
        for name in ["S3", "D8", "Q8", "A4", "D12", "S4", "A5", "SL(2,3)", "Heis(3)", "PSL(2,7)"] {
            assert!(cat.iter().any(|e| e.name == name), "missing {name}");
        }
        // dedup: exactly one group of order 6 that is non-abelian, named S3
        let order6: Vec<_> = cat
            .iter()
            .filter(|e| e.group.order() == 6 && !crate::analysis::is_abelian(&e.group))
            .collect();
        assert_eq!(order6.len(), 1);
        assert_eq!(order6[0].name, "S3");
    }

    #[test]
    fn catalog_is_sorted_and_capped() {
        let cat = catalog();
        for pair in cat.windows(2) {
            assert!(
                (pair[0].group.order(), pair[0].name.as_str())
                    < (pair[1].group.order(), pair[1].name.as_str())
            );
        }
        assert!(cat.iter().all(|e| e.group.order() <= CATALOG_MAX_ORDER));
    }
}
