//! Constructors for the named group families.
//!
//! Each family is realized as a concrete normal-form table ((i, j) exponent
//! pairs with an explicit multiplication rule) rather than by generic coset
//! enumeration; the defining relations are re-verified on the generators
//! after construction. The multiplication rule for each family is stated
//! inline next to its constructor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::{CayleyGroup, PermGenSpec, Provenance};
use crate::Result;

/// Family identifier used by [`FamilySpec`] and the group file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    Cyclic,
    ElementaryAbelian,
    Dihedral,
    GeneralizedDihedral,
    GeneralizedQuaternion,
    Semidihedral,
    ModularP,
    U6n,
    Symmetric,
    Alternating,
    Heisenberg,
    FrobeniusMetacyclic,
    Gl2,
    Sl2,
    Pgl2,
    Psl2,
}

impl FamilyName {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Cyclic => "cyclic",
            FamilyName::ElementaryAbelian => "elementary_abelian",
            FamilyName::Dihedral => "dihedral",
            FamilyName::GeneralizedDihedral => "generalized_dihedral",
            FamilyName::GeneralizedQuaternion => "generalized_quaternion",
            FamilyName::Semidihedral => "semidihedral",
            FamilyName::ModularP => "modular_p",
            FamilyName::U6n => "u6n",
            FamilyName::Symmetric => "symmetric",
            FamilyName::Alternating => "alternating",
            FamilyName::Heisenberg => "heisenberg",
            FamilyName::FrobeniusMetacyclic => "frobenius_metacyclic",
            FamilyName::Gl2 => "gl2",
            FamilyName::Sl2 => "sl2",
            FamilyName::Pgl2 => "pgl2",
            FamilyName::Psl2 => "psl2",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyName> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::BadParams(format!("unknown family name '{s}'")))
    }
}

/// A family name plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: BTreeMap<String, u64>,
}

impl FamilySpec {
    pub fn new(name: FamilyName, params: &[(&str, u64)]) -> FamilySpec {
        FamilySpec {
            name,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    fn get(&self, key: &str) -> Result<u64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::BadParams(format!("family '{}' needs parameter '{key}'", self.name.as_str())))
    }

    /// Builds the group this spec names.
    pub fn build(&self, cap: usize) -> Result<CayleyGroup> {
        let mut g = match self.name {
            FamilyName::Cyclic => cyclic(self.get("n")?, cap)?,
            FamilyName::ElementaryAbelian => elementary_abelian(self.get("p")?, self.get("k")?, cap)?,
            FamilyName::Dihedral => dihedral(self.get("n")?, cap)?,
            FamilyName::GeneralizedDihedral => generalized_dihedral(self.get("m")?, self.get("n")?, cap)?,
            FamilyName::GeneralizedQuaternion => generalized_quaternion(self.get("m")?, cap)?,
            FamilyName::Semidihedral => semidihedral(self.get("n")?, cap)?,
            FamilyName::ModularP => modular_p(self.get("p")?, self.get("n")?, cap)?,
            FamilyName::U6n => u6n(self.get("n")?, cap)?,
            FamilyName::Symmetric => symmetric(self.get("n")?, cap)?,
            FamilyName::Alternating => alternating(self.get("n")?, cap)?,
            FamilyName::Heisenberg => heisenberg(self.get("p")?, cap)?,
            FamilyName::FrobeniusMetacyclic => frobenius_metacyclic(self.get("p")?, self.get("q")?, cap)?,
            FamilyName::Gl2 => {
                let f = crate::gf::build_field(self.get("p")?, self.get("k")?)?;
                crate::gf::gl2(&f, cap)?
            }
            FamilyName::Sl2 => {
                let f = crate::gf::build_field(self.get("p")?, self.get("k")?)?;
                crate::gf::sl2(&f, cap)?
            }
            FamilyName::Pgl2 => {
                let f = crate::gf::build_field(self.get("p")?, self.get("k")?)?;
                crate::gf::pgl2(&f, cap)?
            }
            FamilyName::Psl2 => {
                let f = crate::gf::build_field(self.get("p")?, self.get("k")?)?;
                crate::gf::psl2(&f, cap)?
            }
        };
        g.set_provenance(Provenance::Family(self.clone()));
        Ok(g)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_cap(order: u64, cap: usize) -> Result<usize> {
    let order = usize::try_from(order).map_err(|_| Error::OrderCapExceeded {
        required: usize::MAX,
        cap,
    })?;
    if order > cap {
        return Err(Error::OrderCapExceeded { required: order, cap });
    }
    Ok(order)
}

fn pow_label(sym: &str, e: u64) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn two_gen_label(a: &str, i: u64, b: &str, j: u64) -> String {
    let s = [pow_label(a, i), pow_label(b, j)]
        .iter()
        .filter(|s| !s.is_empty())
        .cloned()
        .collect::<Vec<_>>()
        .join(" ");
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Cyclic group `C_n`: `i * j = (i + j) mod n`.
pub fn cyclic(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 1 {
        return Err(Error::BadParams("cyclic group needs n >= 1".into()));
    }
    let order = check_cap(n, cap)?;
    let elems: Vec<u64> = (0..n).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |a, b| (a + b) % n,
        |&e| pow_label("g", e).is_empty().then(|| "e".to_string()).unwrap_or_else(|| pow_label("g", e)),
        Some(Provenance::Family(FamilySpec::new(FamilyName::Cyclic, &[("n", n)]))),
        cap,
    )?;
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

/// Elementary abelian group `(C_p)^k`: componentwise addition mod p.
pub fn elementary_abelian(p: u64, k: u64, cap: usize) -> Result<CayleyGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 {
        return Err(Error::BadParams("elementary_abelian needs k >= 1".into()));
    }
    let order = p.checked_pow(k as u32).ok_or(Error::BadParams("p^k overflows".into()))?;
    check_cap(order, cap)?;
    let mut elems: Vec<Vec<u16>> = Vec::with_capacity(order as usize);
    for v in 0..order {
        let mut digits = Vec::with_capacity(k as usize);
        let mut t = v;
        for _ in 0..k {
            digits.push((t % p) as u16);
            t /= p;
        }
        elems.push(digits);
    }
    let p16 = p as u16;
    CayleyGroup::from_elements(
        elems,
        |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % p16).collect(),
        |e| {
            format!(
                "({})",
                e.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            )
        },
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::ElementaryAbelian,
            &[("p", p), ("k", k)],
        ))),
        cap,
    )
}

/// Generalized dihedral group `D(m, n) = <a, b | a^m = b^n = 1,
/// b a b^-1 = a^-1>` with `m >= 3`, `n >= 2` even, of order `m n`.
/// Normal form `a^i b^j`; rule: `(a^i b^j)(a^k b^l) = a^(i +- k) b^(j+l)`
/// with the sign given by the parity of `j`.
pub fn generalized_dihedral(m: u64, n: u64, cap: usize) -> Result<CayleyGroup> {
    if m < 3 || n < 2 || n % 2 != 0 {
        return Err(Error::BadParams(format!(
            "generalized_dihedral needs m >= 3 and even n >= 2, got (m={m}, n={n})"
        )));
    }
    check_cap(m * n, cap)?;
    let elems: Vec<(u64, u64)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(i, j), &(k, l)| {
            let ik = if j % 2 == 0 { (i + k) % m } else { (i + m - k % m) % m };
            (ik, (j + l) % n)
        },
        |&(i, j)| two_gen_label("a", i, "b", j),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::GeneralizedDihedral,
            &[("m", m), ("n", n)],
        ))),
        cap,
    )?;
    // relations on generators: a = (1,0) at index n, b = (0,1) at index 1
    let a = n as u16;
    let b = 1u16;
    assert_eq!(g.pow(a, m), 0);
    assert_eq!(g.pow(b, n), 0);
    assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a));
    Ok(g)
}

/// Dihedral group `D_2n = D(n, 2)`, `n >= 3`.
pub fn dihedral(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 3 {
        return Err(Error::BadParams("dihedral needs n >= 3".into()));
    }
    let mut g = generalized_dihedral(n, 2, cap)?;
    g.set_provenance(Provenance::Family(FamilySpec::new(FamilyName::Dihedral, &[("n", n)])));
    Ok(g)
}

/// Generalized quaternion group `Q_4m = <a, b | a^2m = 1, b^2 = a^m,
/// b a b^-1 = a^-1>`, `m >= 2`. Normal form `a^i b^j` (`j` in {0, 1});
/// rule: `(i, j)(k, l) = (i +- k + m*[j + l = 2] mod 2m, (j + l) mod 2)`.
pub fn generalized_quaternion(m: u64, cap: usize) -> Result<CayleyGroup> {
    if m < 2 {
        return Err(Error::BadParams("generalized_quaternion needs m >= 2".into()));
    }
    check_cap(4 * m, cap)?;
    let mm = 2 * m;
    let elems: Vec<(u64, u64)> = (0..mm).flat_map(|i| (0..2).map(move |j| (i, j))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(i, j), &(k, l)| {
            let mut ik = if j == 0 { (i + k) % mm } else { (i + mm - k % mm) % mm };
            if j + l == 2 {
                ik = (ik + m) % mm;
            }
            (ik, (j + l) % 2)
        },
        |&(i, j)| two_gen_label("a", i, "b", j),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::GeneralizedQuaternion,
            &[("m", m)],
        ))),
        cap,
    )?;
    let a = 2u16;
    let b = 1u16;
    assert_eq!(g.pow(a, 2 * m), 0);
    assert_eq!(g.mul(b, b), g.pow(a, m));
    assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a));
    Ok(g)
}

/// Semidihedral (quasidihedral) group `SD_2^n = <x, y | x^(2^(n-1)) = y^2
/// = 1, y x y^-1 = x^(2^(n-2) - 1)>`, `n >= 3`, of order `2^n`.
///
/// At n = 3 the twist exponent is 1 and the presentation collapses to the
/// abelian group C4 x C2; the family is proper semidihedral from n = 4 on.
pub fn semidihedral(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 3 || n > 15 {
        return Err(Error::BadParams("semidihedral needs 3 <= n <= 15".into()));
    }
    let m = 1u64 << (n - 1);
    let t = (1u64 << (n - 2)) - 1;
    check_cap(1 << n, cap)?;
    let elems: Vec<(u64, u64)> = (0..m).flat_map(|i| (0..2).map(move |j| (i, j))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(i, j), &(k, l)| {
            let tw = if j == 0 { k } else { k * t % m };
            ((i + tw) % m, (j + l) % 2)
        },
        |&(i, j)| two_gen_label("x", i, "y", j),
        Some(Provenance::Family(FamilySpec::new(FamilyName::Semidihedral, &[("n", n)]))),
        cap,
    )?;
    let x = 2u16;
    let y = 1u16;
    assert_eq!(g.pow(x, m), 0);
    assert_eq!(g.mul(y, y), 0);
    assert_eq!(g.mul(g.mul(y, x), g.inv(y)), g.pow(x, t));
    Ok(g)
}

/// Modular p-group `Mod_n(p) = <x, y | x^(p^(n-1)) = y^p = 1,
/// y x y^-1 = x^(1 + p^(n-2))>`, `n >= 3`, of order `p^n`.
/// (p, n) = (2, 3) is accepted; it coincides with D8.
pub fn modular_p(p: u64, n: u64, cap: usize) -> Result<CayleyGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 3 {
        return Err(Error::BadParams("modular_p needs n >= 3".into()));
    }
    let order = p.checked_pow(n as u32).ok_or(Error::BadParams("p^n overflows".into()))?;
    check_cap(order, cap)?;
    let m = p.pow((n - 1) as u32);
    let t = 1 + p.pow((n - 2) as u32);
    let tpow: Vec<u64> = {
        let mut v = vec![1u64];
        for _ in 1..p {
            v.push(v.last().unwrap() * t % m);
        }
        v
    };
    let elems: Vec<(u64, u64)> = (0..m).flat_map(|i| (0..p).map(move |j| (i, j))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(i, j), &(k, l)| ((i + k * tpow[j as usize]) % m, (j + l) % p),
        |&(i, j)| two_gen_label("x", i, "y", j),
        Some(Provenance::Family(FamilySpec::new(FamilyName::ModularP, &[("p", p), ("n", n)]))),
        cap,
    )?;
    let x = p as u16;
    let y = 1u16;
    assert_eq!(g.pow(x, m), 0);
    assert_eq!(g.pow(y, p), 0);
    assert_eq!(g.mul(g.mul(y, x), g.inv(y)), g.pow(x, t));
    Ok(g)
}

/// `U_6n = <x, y | x^2n = y^3 = 1, x^-1 y x = y^-1>`, of order `6n`.
/// Normal form `x^j y^i`; rule: `y^i x^k = x^k y^(i * (-1)^k)`.
pub fn u6n(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 1 {
        return Err(Error::BadParams("u6n needs n >= 1".into()));
    }
    check_cap(6 * n, cap)?;
    let xo = 2 * n;
    let elems: Vec<(u64, u64)> = (0..xo).flat_map(|j| (0..3).map(move |i| (j, i))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(j, i), &(k, l)| {
            let ii = if k % 2 == 0 { i } else { (3 - i) % 3 };
            ((j + k) % xo, (ii + l) % 3)
        },
        |&(j, i)| two_gen_label("x", j, "y", i),
        Some(Provenance::Family(FamilySpec::new(FamilyName::U6n, &[("n", n)]))),
        cap,
    )?;
    let x = 3u16;
    let y = 1u16;
    assert_eq!(g.pow(x, 2 * n), 0);
    assert_eq!(g.pow(y, 3), 0);
    assert_eq!(g.mul(g.mul(g.inv(x), y), x), g.inv(y));
    Ok(g)
}

/// Symmetric group `S_n` as a permutation closure.
pub fn symmetric(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 1 {
        return Err(Error::BadParams("symmetric needs n >= 1".into()));
    }
    let degree = n as usize;
    let mut generators: Vec<Vec<u16>> = Vec::new();
    if degree >= 2 {
        let mut cycle: Vec<u16> = (1..degree as u16).collect();
        cycle.push(0);
        generators.push(cycle);
        let mut swap: Vec<u16> = (0..degree as u16).collect();
        swap.swap(0, 1);
        generators.push(swap);
    } else {
        generators.push(vec![0]);
    }
    let mut g = CayleyGroup::build_from_permutations(&PermGenSpec { degree, generators }, cap)?;
    g.set_provenance(Provenance::Family(FamilySpec::new(FamilyName::Symmetric, &[("n", n)])));
    Ok(g)
}

/// Alternating group `A_n` as a permutation closure (consecutive 3-cycles).
pub fn alternating(n: u64, cap: usize) -> Result<CayleyGroup> {
    if n < 1 {
        return Err(Error::BadParams("alternating needs n >= 1".into()));
    }
    let degree = n as usize;
    let mut generators: Vec<Vec<u16>> = Vec::new();
    if degree >= 3 {
        for i in 0..degree - 2 {
            let mut p: Vec<u16> = (0..degree as u16).collect();
            let (a, b, c) = (i, i + 1, i + 2);
            p[a] = b as u16;
            p[b] = c as u16;
            p[c] = a as u16;
            generators.push(p);
        }
    } else {
        generators.push((0..degree.max(1) as u16).collect());
    }
    let mut g = CayleyGroup::build_from_permutations(&PermGenSpec { degree: degree.max(1), generators }, cap)?;
    g.set_provenance(Provenance::Family(FamilySpec::new(FamilyName::Alternating, &[("n", n)])));
    Ok(g)
}

/// Extraspecial group of order `p^3` and exponent `p` (`p` an odd prime):
/// upper unitriangular 3x3 matrices over GF(p), elements `(a, b, c)` with
/// `(a, b, c)(d, e, f) = (a + d, b + e, c + f + a e)`.
pub fn heisenberg(p: u64, cap: usize) -> Result<CayleyGroup> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadParams("heisenberg needs an odd prime p".into()));
    }
    check_cap(p * p * p, cap)?;
    let elems: Vec<(u64, u64, u64)> = (0..p)
        .flat_map(|a| (0..p).flat_map(move |b| (0..p).map(move |c| (a, b, c))))
        .collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(a, b, c), &(d, e, f)| ((a + d) % p, (b + e) % p, (c + f + a * e) % p),
        |&(a, b, c)| format!("({a},{b},{c})"),
        Some(Provenance::Family(FamilySpec::new(FamilyName::Heisenberg, &[("p", p)]))),
        cap,
    )?;
    for x in 0..g.order() as u16 {
        assert!(g.element_order(x) as u64 <= p, "exponent p");
    }
    Ok(g)
}

/// Frobenius metacyclic group `C_p x| C_q` for primes `q | p - 1`, with the
/// faithful action `x -> x^g` where `g` is the least residue of
/// multiplicative order `q` mod `p` (different choices give conjugate
/// actions, hence isomorphic groups).
pub fn frobenius_metacyclic(p: u64, q: u64, cap: usize) -> Result<CayleyGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if (p - 1) % q != 0 {
        return Err(Error::BadParams(format!("frobenius_metacyclic needs q | p - 1, got p={p}, q={q}")));
    }
    check_cap(p * q, cap)?;
    let mut g0 = 0;
    for cand in 2..p {
        let mut o = 1u64;
        let mut t = cand;
        while t != 1 {
            t = t * cand % p;
            o += 1;
        }
        if o == q {
            g0 = cand;
            break;
        }
    }
    assert!(g0 != 0, "a residue of order q exists since q | p - 1");
    let gpow: Vec<u64> = {
        let mut v = vec![1u64];
        for _ in 1..q {
            v.push(v.last().unwrap() * g0 % p);
        }
        v
    };
    let elems: Vec<(u64, u64)> = (0..p).flat_map(|i| (0..q).map(move |j| (i, j))).collect();
    let g = CayleyGroup::from_elements(
        elems,
        |&(i, j), &(k, l)| ((i + k * gpow[j as usize]) % p, (j + l) % q),
        |&(i, j)| two_gen_label("a", i, "b", j),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::FrobeniusMetacyclic,
            &[("p", p), ("q", q)],
        ))),
        cap,
    )?;
    let a = q as u16;
    let b = 1u16;
    assert_eq!(g.pow(a, p), 0);
    assert_eq!(g.pow(b, q), 0);
    assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.pow(a, g0));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis;
    use crate::DEFAULT_ORDER_CAP as CAP;

    #[test]
    fn cyclic_basics() {
        assert_eq!(cyclic(1, CAP).unwrap().order(), 1);
        let c6 = cyclic(6, CAP).unwrap();
        assert_eq!(c6.element_order(1), 6);
        let klein = elementary_abelian(2, 2, CAP).unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!((1..4).filter(|&x| klein.element_order(x) == 2).count(), 3);
    }

    #[test]
    fn generalized_dihedral_rejects_bad_params() {
        assert!(matches!(generalized_dihedral(5, 3, CAP), Err(Error::BadParams(_))));
        assert!(matches!(generalized_dihedral(2, 2, CAP), Err(Error::BadParams(_))));
    }

    #[test]
    fn generalized_dihedral_cases() {
        let d32 = generalized_dihedral(3, 2, CAP).unwrap();
        let s3 = symmetric(3, CAP).unwrap();
        assert!(d32.isomorphism_search(&s3, 1 << 20).unwrap().is_some());

        let d42 = generalized_dihedral(4, 2, CAP).unwrap();
        assert_eq!(analysis::center(&d42).order(), 2);

        let d54 = generalized_dihedral(5, 4, CAP).unwrap();
        assert_eq!(d54.order(), 20);
    }

    #[test]
    fn generalized_dihedral_center_matches_cited_fact() {
        // Z(D(m,n)) = <a^(m/2), b^2> for even m, <b^2> for odd m
        for (m, n) in [(4u64, 2u64), (6, 2), (4, 4), (5, 4), (3, 4), (3, 6)] {
            let g = generalized_dihedral(m, n, CAP).unwrap();
            let a = n as u16;
            let b = 1u16;
            let mut seeds = vec![g.pow(b, 2)];
            if m % 2 == 0 {
                seeds.push(g.pow(a, m / 2));
            }
            let expected = g.generated_subgroup(seeds);
            assert_eq!(analysis::center(&g), expected, "D({m},{n})");
        }
    }

    #[test]
    fn quaternion_structure() {
        let q8 = generalized_quaternion(2, CAP).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!((1..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        // Q_4m / Z = D_2m (Klein group at m = 2)
        for m in 2u64..=6 {
            let q = generalized_quaternion(m, CAP).unwrap();
            let z = analysis::center(&q);
            assert_eq!(z.order(), 2);
            let (quot, _) = q.quotient_group(&z).unwrap();
            let target = if m == 2 {
                elementary_abelian(2, 2, CAP).unwrap()
            } else {
                dihedral(m, CAP).unwrap()
            };
            assert!(quot.isomorphism_search(&target, 1 << 22).unwrap().is_some(), "m={m}");
        }
    }

    #[test]
    fn semidihedral_structure() {
        let sd16 = semidihedral(4, CAP).unwrap();
        assert_eq!(sd16.order(), 16);
        assert_eq!(analysis::commutator_subgroup(&sd16).order(), 4);
        // n = 3 collapses to C4 x C2 (twist exponent 1)
        let sd8 = semidihedral(3, CAP).unwrap();
        assert_eq!(sd8.order(), 8);
        assert!(analysis::is_abelian(&sd8));
    }

    #[test]
    fn modular_structure() {
        let m33 = modular_p(3, 3, CAP).unwrap();
        assert_eq!(m33.order(), 27);
        assert_eq!(m33.element_order(3), 9, "x has order p^(n-1)");
        let m32 = modular_p(2, 3, CAP).unwrap();
        let d8 = dihedral(4, CAP).unwrap();
        assert!(m32.isomorphism_search(&d8, 1 << 20).unwrap().is_some(), "Mod_3(2) = D8");
    }

    #[test]
    fn u6n_structure() {
        let u6 = u6n(1, CAP).unwrap();
        let s3 = symmetric(3, CAP).unwrap();
        assert!(u6.isomorphism_search(&s3, 1 << 20).unwrap().is_some());
        for n in 1u64..=5 {
            let g = u6n(n, CAP).unwrap();
            assert_eq!(g.order() as u64, 6 * n);
            let z = analysis::center(&g);
            let (quot, _) = g.quotient_group(&z).unwrap();
            assert!(quot.isomorphism_search(&s3, 1 << 20).unwrap().is_some(), "U_{}/Z = S3", 6 * n);
        }
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(4, CAP).unwrap().order(), 24);
        assert_eq!(alternating(4, CAP).unwrap().order(), 12);
        assert_eq!(alternating(5, CAP).unwrap().order(), 60);
        assert!(matches!(symmetric(7, CAP), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn heisenberg_structure() {
        let h = heisenberg(3, CAP).unwrap();
        assert_eq!(h.order(), 27);
        let z = analysis::center(&h);
        assert_eq!(z.order(), 3);
        assert_eq!(analysis::commutator_subgroup(&h).order(), 3);
        let (quot, _) = h.quotient_group(&z).unwrap();
        let c3c3 = elementary_abelian(3, 2, CAP).unwrap();
        assert!(quot.isomorphism_search(&c3c3, 1 << 20).unwrap().is_some());
        assert!(matches!(heisenberg(2, CAP), Err(Error::BadParams(_))));
    }

    #[test]
    fn frobenius_metacyclic_structure() {
        let f = frobenius_metacyclic(3, 2, CAP).unwrap();
        let s3 = symmetric(3, CAP).unwrap();
        assert!(f.isomorphism_search(&s3, 1 << 20).unwrap().is_some());

        let d10 = frobenius_metacyclic(5, 2, CAP).unwrap();
        assert!(d10.isomorphism_search(&dihedral(5, CAP).unwrap(), 1 << 20).unwrap().is_some());

        assert_eq!(frobenius_metacyclic(7, 3, CAP).unwrap().order(), 21);
        assert!(matches!(frobenius_metacyclic(7, 5, CAP), Err(Error::BadParams(_))));
    }

    #[test]
    fn family_spec_roundtrip() {
        let spec = FamilySpec::new(FamilyName::Dihedral, &[("n", 8)]);
        let g = spec.build(CAP).unwrap();
        assert_eq!(g.order(), 16);
        let js = serde_json::to_string(&spec).unwrap();
        assert!(js.contains("\"dihedral\""));
        let back: FamilySpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back, spec);
    }
}
