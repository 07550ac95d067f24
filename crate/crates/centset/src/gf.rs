//! GF(q) arithmetic for small prime powers and the groups GL(2,q),
//! SL(2,q), PGL(2,q), PSL(2,q) as Cayley tables.
//!
//! Field elements are encoded as integers `0..q` whose base-p digits are the
//! polynomial coefficients (little-endian). The extension polynomial is the
//! lexicographically smallest monic irreducible of the requested degree, so
//! all tables are deterministic.

use crate::error::Error;
use crate::families::{is_prime, FamilyName, FamilySpec};
use crate::group::{CayleyGroup, Provenance};
use crate::Result;

/// A concrete GF(p^k), with full add/mul tables and exp/log tables.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    /// Coefficients of the degree-k extension polynomial, little-endian,
    /// monic (empty when k = 1).
    pub poly: Vec<u64>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// exp[i] = g^i for a fixed generator g of the multiplicative group
    /// (index taken mod q-1).
    pub exp: Vec<u16>,
    /// log[x] = i with exp[i] = x, for x != 0.
    pub log: Vec<u16>,
}

impl FieldSpec {
    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }
}

fn digits(v: u64, p: u64, k: u32) -> Vec<u64> {
    let mut d = Vec::with_capacity(k as usize);
    let mut t = v;
    for _ in 0..k {
        d.push(t % p);
        t /= p;
    }
    d
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    r
}

/// Remainder of `a` modulo the monic polynomial `m`, little-endian.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    loop {
        while a.last() == Some(&0) {
            a.pop();
        }
        if a.len() <= dm {
            break;
        }
        let c = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        for (i, &x) in m.iter().enumerate() {
            let t = (c * x) % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
    }
    a.resize(dm, 0);
    a
}

fn poly_divides(den: &[u64], num: &[u64], p: u64) -> bool {
    poly_rem(num, den, p).iter().all(|&x| x == 0)
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for v in 0..count {
            let mut cand = digits(v, p, d as u32);
            cand.push(1);
            if poly_divides(&cand, poly, p) {
                return false;
            }
        }
    }
    true
}

/// Deterministic GF(p^k): the lexicographically smallest monic irreducible
/// polynomial of degree k over GF(p) is chosen (coefficients compared from
/// the leading end down).
pub fn build_field(p: u64, k: u64) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedDegree(k as u32));
    }
    let q = p.pow(k as u32);
    if q > 81 {
        return Err(Error::UnsupportedDegree(k as u32));
    }
    let k = k as u32;
    let poly: Vec<u64> = if k == 1 {
        Vec::new()
    } else {
        let mut found = None;
        for v in 0..q {
            // v's base-p digits, most significant first, are (a_{k-1}..a_0)
            let mut coeffs = digits(v, p, k);
            coeffs.reverse();
            coeffs.push(1);
            if is_irreducible(&coeffs, p) {
                found = Some(coeffs);
                break;
            }
        }
        found.expect("an irreducible polynomial of each degree exists over GF(p)")
    };

    let qs = q as usize;
    let mut add = vec![0u16; qs * qs];
    let mut mul = vec![0u16; qs * qs];
    for a in 0..q {
        let da = digits(a, p, k);
        for b in 0..q {
            let db = digits(b, p, k);
            let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[(a * q + b) as usize] = undigits(&sum, p) as u16;
            let prod = if k == 1 {
                vec![da[0] * db[0] % p]
            } else {
                poly_rem(&poly_mul(&da, &db, p), &poly, p)
            };
            mul[(a * q + b) as usize] = undigits(&prod, p) as u16;
        }
    }
    let mut neg = vec![0u16; qs];
    let mut inv = vec![0u16; qs];
    for a in 0..qs {
        for b in 0..qs {
            if add[a * qs + b] == 0 {
                neg[a] = b as u16;
            }
            if a != 0 && mul[a * qs + b] == 1 {
                inv[a] = b as u16;
            }
        }
    }
    // least multiplicative generator and exp/log tables
    let mut exp = vec![0u16; qs];
    let mut log = vec![0u16; qs];
    let mut generator = 0u64;
    for g in 1..q {
        let mut order = 1u64;
        let mut t = g;
        while t != 1 {
            t = mul[(t * q + g) as usize] as u64;
            order += 1;
        }
        if order == q - 1 {
            generator = g;
            break;
        }
    }
    assert!(generator != 0 || q == 2, "multiplicative group is cyclic");
    if q == 2 {
        generator = 1;
    }
    let mut acc = 1u64;
    for i in 0..qs {
        exp[i] = acc as u16;
        if i < qs - 1 {
            log[acc as usize] = i as u16;
        }
        acc = mul[(acc * q + generator) as usize] as u64;
    }
    let f = FieldSpec { p, k, q, poly, add, mul, neg, inv, exp, log };

    // field axioms, exhaustive (q <= 81)
    for a in 0..q as u16 {
        for b in 0..q as u16 {
            debug_assert_eq!(f.mul(a, b), f.mul(b, a));
            for c in 0..q as u16 {
                assert_eq!(
                    f.mul(a, f.add(b, c)),
                    f.add(f.mul(a, b), f.mul(a, c)),
                    "distributivity"
                );
            }
        }
    }
    for x in 1..q as u16 {
        assert_eq!(f.exp[f.log[x as usize] as usize], x, "exp/log inverse");
    }
    Ok(f)
}

/// Row-major 2x2 matrix over a [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: u16,
    pub b: u16,
    pub c: u16,
    pub d: u16,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn det(&self, f: &FieldSpec) -> u16 {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn mul(&self, o: &Mat2, f: &FieldSpec) -> Mat2 {
        Mat2 {
            a: f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            b: f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            c: f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            d: f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        }
    }

    pub fn scale(&self, s: u16, f: &FieldSpec) -> Mat2 {
        Mat2 {
            a: f.mul(s, self.a),
            b: f.mul(s, self.b),
            c: f.mul(s, self.c),
            d: f.mul(s, self.d),
        }
    }

    /// Scalar-normalized representative: the multiple whose first nonzero
    /// entry in scan order (a, b, c, d) is 1.
    pub fn projective_canonical(&self, f: &FieldSpec) -> Mat2 {
        let lead = [self.a, self.b, self.c, self.d]
            .into_iter()
            .find(|&x| x != 0)
            .expect("matrix is nonzero");
        self.scale(f.inv(lead), f)
    }

    fn label(&self) -> String {
        format!("[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

fn all_invertible(f: &FieldSpec) -> Vec<Mat2> {
    let q = f.q as u16;
    let mut out = vec![Mat2::IDENTITY];
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat2 { a, b, c, d };
                    if m != Mat2::IDENTITY && m.det(f) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// GL(2, q): all invertible 2x2 matrices, identity first then lexicographic.
pub fn gl2(f: &FieldSpec, cap: usize) -> Result<CayleyGroup> {
    let q = f.q;
    let order = ((q * q - 1) * (q * q - q)) as usize;
    if order > cap {
        return Err(Error::OrderCapExceeded { required: order, cap });
    }
    let elems = all_invertible(f);
    assert_eq!(elems.len(), order);
    CayleyGroup::from_elements(
        elems,
        |x, y| x.mul(y, f),
        |m| m.label(),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::Gl2,
            &[("p", f.p), ("k", f.k as u64)],
        ))),
        cap,
    )
}

/// SL(2, q): determinant-1 matrices, of order q(q-1)(q+1).
pub fn sl2(f: &FieldSpec, cap: usize) -> Result<CayleyGroup> {
    let q = f.q;
    let order = (q * (q - 1) * (q + 1)) as usize;
    if order > cap {
        return Err(Error::OrderCapExceeded { required: order, cap });
    }
    let elems: Vec<Mat2> = all_invertible(f).into_iter().filter(|m| m.det(f) == 1).collect();
    assert_eq!(elems.len(), order);
    CayleyGroup::from_elements(
        elems,
        |x, y| x.mul(y, f),
        |m| m.label(),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::Sl2,
            &[("p", f.p), ("k", f.k as u64)],
        ))),
        cap,
    )
}

/// PGL(2, q): GL(2, q) modulo scalars, canonical representative normalized
/// so its first nonzero entry is 1.
pub fn pgl2(f: &FieldSpec, cap: usize) -> Result<CayleyGroup> {
    let q = f.q;
    let order = (q * (q - 1) * (q + 1)) as usize;
    if order > cap {
        return Err(Error::OrderCapExceeded { required: order, cap });
    }
    let mut canon: Vec<Mat2> = all_invertible(f)
        .into_iter()
        .map(|m| m.projective_canonical(f))
        .collect();
    canon.sort_unstable();
    canon.dedup();
    assert_eq!(canon.len(), order);
    let pos = canon.iter().position(|&m| m == Mat2::IDENTITY).unwrap();
    canon.swap(0, pos);
    canon[1..].sort_unstable();
    CayleyGroup::from_elements(
        canon,
        |x, y| x.mul(y, f).projective_canonical(f),
        |m| m.label(),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::Pgl2,
            &[("p", f.p), ("k", f.k as u64)],
        ))),
        cap,
    )
}

/// PSL(2, q): SL(2, q) modulo {+-I} for odd q; for even q this equals the
/// image of SL in PGL, which is all of PGL(2, q).
pub fn psl2(f: &FieldSpec, cap: usize) -> Result<CayleyGroup> {
    if f.p == 2 {
        let mut g = pgl2(f, cap)?;
        g.set_provenance(Provenance::Family(FamilySpec::new(
            FamilyName::Psl2,
            &[("p", f.p), ("k", f.k as u64)],
        )));
        return Ok(g);
    }
    let q = f.q;
    let order = (q * (q - 1) * (q + 1) / 2) as usize;
    if order > cap {
        return Err(Error::OrderCapExceeded { required: order, cap });
    }
    let minus_one = f.neg(1);
    let canon = |m: &Mat2| -> Mat2 { (*m).min(m.scale(minus_one, f)) };
    let mut elems: Vec<Mat2> = all_invertible(f)
        .into_iter()
        .filter(|m| m.det(f) == 1)
        .map(|m| canon(&m))
        .collect();
    elems.sort_unstable();
    elems.dedup();
    assert_eq!(elems.len(), order);
    let id = canon(&Mat2::IDENTITY);
    let pos = elems.iter().position(|&m| m == id).unwrap();
    elems.swap(0, pos);
    elems[1..].sort_unstable();
    CayleyGroup::from_elements(
        elems,
        |x, y| canon(&x.mul(y, f)),
        |m| m.label(),
        Some(Provenance::Family(FamilySpec::new(
            FamilyName::Psl2,
            &[("p", f.p), ("k", f.k as u64)],
        ))),
        cap,
    )
}
