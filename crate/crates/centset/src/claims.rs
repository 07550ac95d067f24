//! Registry binding each cataloged group-theory statement to a constructive
//! check, with Confirmed/Refuted/Error/Skipped status.
//!
//! Claims never assume the statements are right: Refuted is a first-class
//! outcome that records both the expected and the computed value (the
//! registry exists precisely to find out). Quantified claims run over the
//! group catalog (families + products up to order 200) and list violators
//! in the detail field.

use std::time::Instant;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::analysis::{
    self, abelian_normal_prime_index, all_sylow_abelian, center, centralizer, centralizer_family,
    commutator_subgroup, involution_stats, is_abelian, is_cg, is_minimal_nonabelian,
    is_minimal_nonnilpotent, is_perfect, is_solvable, omega, prime_factors,
    self_normalizing_nonabelian, set_is_abelian, sylow_subgroup,
};
use crate::catalog::{catalog, CatalogEntry};
use crate::families::{self, is_prime};
use crate::frobenius::{decompose, frobenius_quotient_shape};
use crate::gf;
use crate::group::CayleyGroup;
use crate::isoclinism::isoclinic_to_derived;
use crate::{Config, Result};

/// Typed expected/computed value of a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimValue {
    Bool(bool),
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl std::fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimValue::Bool(b) => write!(f, "{b}"),
            ClaimValue::Int(i) => write!(f, "{i}"),
            ClaimValue::Ints(v) => {
                let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", items.join(" "))
            }
            ClaimValue::Text(t) => write!(f, "{t}"),
        }
    }
}

impl Serialize for ClaimValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClaimValue::Bool(b) => s.serialize_bool(*b),
            ClaimValue::Int(i) => s.serialize_i64(*i),
            ClaimValue::Ints(v) => v.serialize(s),
            ClaimValue::Text(t) => s.serialize_str(t),
        }
    }
}

/// What a claim runner produced.
pub enum ClaimComputed {
    Value(ClaimValue, String),
    Skipped(String),
}

type Runner = Box<dyn Fn(&Config) -> Result<ClaimComputed> + Send + Sync>;

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// The statement being machine-checked, in formula form.
    pub anchor: &'static str,
    /// Which groups the check builds.
    pub builders: &'static str,
    pub expected: ClaimValue,
    runner: Runner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimStatus {
    Confirmed,
    Refuted,
    Error,
    Skipped,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Confirmed => "Confirmed",
            ClaimStatus::Refuted => "Refuted",
            ClaimStatus::Error => "Error",
            ClaimStatus::Skipped => "Skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub builders: String,
    pub expected: ClaimValue,
    pub computed: Option<ClaimValue>,
    pub detail: String,
    pub status: ClaimStatus,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone)]
pub struct ClaimsReport {
    pub outcomes: Vec<ClaimOutcome>,
}

impl ClaimsReport {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for o in &self.outcomes {
            match o.status {
                ClaimStatus::Confirmed => c.0 += 1,
                ClaimStatus::Refuted => c.1 += 1,
                ClaimStatus::Error => c.2 += 1,
                ClaimStatus::Skipped => c.3 += 1,
            }
        }
        c
    }

    /// 0 = no Refuted/Error, 2 = some Refuted, 1 = some Error.
    pub fn exit_code(&self) -> i32 {
        let (_, refuted, error, _) = self.counts();
        if error > 0 {
            1
        } else if refuted > 0 {
            2
        } else {
            0
        }
    }
}

/// `*`-wildcard matcher for claim id filters.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn rec(p: &[u8], t: &[u8]) -> bool {
        match p.first() {
            None => t.is_empty(),
            Some(b'*') => rec(&p[1..], t) || (!t.is_empty() && rec(p, &t[1..])),
            Some(&c) => t.first() == Some(&c) && rec(&p[1..], &t[1..]),
        }
    }
    rec(pattern.as_bytes(), text.as_bytes())
}

/// Registry entries matching the optional id filter, in id order.
pub fn list_claims(filter: Option<&str>) -> Vec<Claim> {
    let mut claims: Vec<Claim> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| glob_match(f, c.id)))
        .collect();
    claims.sort_by_key(|c| c.id);
    claims
}

/// Runs the matching claims (optionally in parallel); one claim's panic or
/// error never aborts the run.
pub fn run_claims(filter: Option<&str>, jobs: usize, config: &Config) -> ClaimsReport {
    let claims = list_claims(filter);
    let run_one = |c: &Claim| -> ClaimOutcome {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.runner)(config)));
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (computed, detail, status) = match result {
            Ok(Ok(ClaimComputed::Value(v, detail))) => {
                let status = if v == c.expected {
                    ClaimStatus::Confirmed
                } else {
                    ClaimStatus::Refuted
                };
                (Some(v), detail, status)
            }
            Ok(Ok(ClaimComputed::Skipped(reason))) => (None, reason, ClaimStatus::Skipped),
            Ok(Err(e)) => (None, format!("error: {e}"), ClaimStatus::Error),
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| panic.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "panic".into());
                (None, format!("panicked: {msg}"), ClaimStatus::Error)
            }
        };
        ClaimOutcome {
            id: c.id.into(),
            description: c.description.into(),
            anchor: c.anchor.into(),
            builders: c.builders.into(),
            expected: c.expected.clone(),
            computed,
            detail,
            status,
            runtime_ms,
        }
    };
    let mut outcomes: Vec<ClaimOutcome> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            claims.par_iter().map(run_one).collect()
        })
    } else {
        claims.iter().map(run_one).collect()
    };
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    ClaimsReport { outcomes }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<ReportFormat> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(crate::Error::BadParams(format!(
                "unknown format '{other}' (expected text, json or csv)"
            ))),
        }
    }
}

/// Renders a report. Rows are sorted by id; output is byte-stable for a
/// fixed library version. Runtimes are rendered as 0 unless
/// `include_timings` is set, so consecutive runs compare byte-identical.
pub fn render_report(report: &ClaimsReport, format: ReportFormat, include_timings: bool) -> String {
    let ms = |o: &ClaimOutcome| if include_timings { o.runtime_ms } else { 0 };
    match format {
        ReportFormat::Csv => {
            let mut out = String::from("id,anchor,expected,computed,status,runtimeMs\n");
            for o in &report.outcomes {
                let computed = o.computed.as_ref().map(|v| v.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    csv_field(&o.id),
                    csv_field(&o.anchor),
                    csv_field(&o.expected.to_string()),
                    csv_field(&computed),
                    o.status.as_str(),
                    ms(o)
                ));
            }
            out
        }
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                id: &'a str,
                description: &'a str,
                anchor: &'a str,
                builders: &'a str,
                expected: &'a ClaimValue,
                computed: &'a Option<ClaimValue>,
                detail: &'a str,
                status: &'a str,
                #[serde(rename = "runtimeMs")]
                runtime_ms: u64,
            }
            struct Doc<'a>(&'a ClaimsReport, bool);
            impl Serialize for Doc<'_> {
                fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                    let (confirmed, refuted, error, skipped) = self.0.counts();
                    let mut map = s.serialize_map(Some(2))?;
                    let rows: Vec<Row> = self
                        .0
                        .outcomes
                        .iter()
                        .map(|o| Row {
                            id: &o.id,
                            description: &o.description,
                            anchor: &o.anchor,
                            builders: &o.builders,
                            expected: &o.expected,
                            computed: &o.computed,
                            detail: &o.detail,
                            status: o.status.as_str(),
                            runtime_ms: if self.1 { o.runtime_ms } else { 0 },
                        })
                        .collect();
                    map.serialize_entry("claims", &rows)?;
                    map.serialize_entry(
                        "summary",
                        &serde_json::json!({
                            "confirmed": confirmed,
                            "refuted": refuted,
                            "error": error,
                            "skipped": skipped,
                            "exitCode": self.0.exit_code(),
                        }),
                    )?;
                    map.end()
                }
            }
            serde_json::to_string_pretty(&Doc(report, include_timings)).expect("serializable")
        }
        ReportFormat::Text => {
            let idw = report.outcomes.iter().map(|o| o.id.len()).max().unwrap_or(2).max(2);
            let mut out = String::new();
            for o in &report.outcomes {
                let computed = o
                    .computed
                    .as_ref()
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into());
                out.push_str(&format!(
                    "{:idw$}  {:9}  expected {}  computed {}  [{} ms]\n",
                    o.id,
                    o.status.as_str(),
                    o.expected,
                    computed,
                    ms(o),
                ));
                if o.status != ClaimStatus::Confirmed && !o.detail.is_empty() {
                    out.push_str(&format!("{:idw$}  `- {}\n", "", o.detail));
                }
            }
            let (confirmed, refuted, error, skipped) = report.counts();
            out.push_str(&format!(
                "{} claims: {confirmed} confirmed, {refuted} refuted, {error} error, {skipped} skipped\n",
                report.outcomes.len()
            ));
            out
        }
    }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

fn claim(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    builders: &'static str,
    expected: ClaimValue,
    runner: impl Fn(&Config) -> Result<ClaimComputed> + Send + Sync + 'static,
) -> Claim {
    Claim { id, description, anchor, builders, expected, runner: Box::new(runner) }
}

/// Quantified helper: runs `check` over the catalog; `Ok(None)` means the
/// hypothesis does not apply. Computes Bool(no violations), with instance
/// count and violator names in the detail.
fn over_catalog(
    check: impl Fn(&CatalogEntry, &Config) -> Result<Option<bool>>,
    config: &Config,
) -> Result<ClaimComputed> {
    let mut instances = 0usize;
    let mut violators: Vec<String> = Vec::new();
    for entry in catalog() {
        if let Some(holds) = check(entry, config)? {
            instances += 1;
            if !holds {
                violators.push(entry.name.clone());
            }
        }
    }
    if instances == 0 {
        return Ok(ClaimComputed::Skipped("no applicable catalog instances".into()));
    }
    let detail = if violators.is_empty() {
        format!("{instances} instances")
    } else {
        format!("{instances} instances; violated by {}", violators.join(", "))
    };
    Ok(ClaimComputed::Value(ClaimValue::Bool(violators.is_empty()), detail))
}

fn value(v: ClaimValue, detail: impl Into<String>) -> Result<ClaimComputed> {
    Ok(ClaimComputed::Value(v, detail.into()))
}

fn quotient_mod_center(g: &CayleyGroup) -> Result<CayleyGroup> {
    let z = center(g);
    Ok(g.quotient_group(&z)?.0)
}

/// Prime factorization with multiplicity, ascending.
fn factor_multiset(mut n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2usize;
    while d * d <= n {
        while n % d == 0 {
            out.push(d as u64);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

fn is_cp_times_cp(q: &CayleyGroup, p: u64) -> bool {
    q.order() as u64 == p * p
        && is_abelian(q)
        && (1..q.order() as u16).all(|x| q.element_order(x) as u64 == p)
}

fn is_elementary_abelian_group(q: &CayleyGroup) -> bool {
    if !is_abelian(q) {
        return false;
    }
    if q.order() == 1 {
        return true;
    }
    let p = q.element_order(1);
    is_prime(p as u64) && (1..q.order() as u16).all(|x| q.element_order(x) == p)
}

fn field(p: u64, k: u64) -> Result<gf::FieldSpec> {
    gf::build_field(p, k)
}

fn derived_center_trivial(g: &CayleyGroup) -> bool {
    commutator_subgroup(g).intersect(&center(g)).order() == 1
}

pub fn registry() -> Vec<Claim> {
    let mut claims: Vec<Claim> = Vec::new();

    claims.push(claim(
        "EX111",
        "Generalized dihedral groups D(m,n), n even, satisfy |Cent| = |G'|+2",
        "|Cent(D(m,n))| = |D(m,n)'| + 2 for n even",
        "family:generalized_dihedral (3,2) (4,2) (5,4) (6,2) (3,4) (6,4) (3,6) (9,4)",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            let mut notes = Vec::new();
            for (m, n) in [(3, 2), (4, 2), (5, 4), (6, 2), (3, 4), (6, 4), (3, 6), (9, 4)] {
                let g = families::generalized_dihedral(m, n, cfg.order_cap)?;
                let v = is_cg(&g);
                all &= v.is_cg;
                notes.push(format!("D({m},{n}): {}={}+2 {}", v.cent_count, v.derived_order, v.is_cg));
            }
            value(ClaimValue::Bool(all), notes.join("; "))
        },
    ));

    claims.push(claim(
        "EX1",
        "Dihedral groups D_2n are CG-groups",
        "|Cent(D_2n)| = |D_2n'| + 2 for n = 3..12",
        "family:dihedral n=3..12",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            for n in 3..=12 {
                all &= is_cg(&families::dihedral(n, cfg.order_cap)?).is_cg;
            }
            value(ClaimValue::Bool(all), "n = 3..12")
        },
    ));

    claims.push(claim(
        "EX2",
        "Groups with non-abelian central quotient C_n x| C_p are CG (U_6n instances, G/Z = S3)",
        "G/Z(G) = C_n x| C_p non-abelian => |Cent(G)| = |G'| + 2",
        "family:u6n n=1..5 (quotient checked isomorphic to S3)",
        ClaimValue::Bool(true),
        |cfg| {
            let s3 = families::symmetric(3, cfg.order_cap)?;
            let mut all = true;
            for n in 1..=5 {
                let g = families::u6n(n, cfg.order_cap)?;
                let q = quotient_mod_center(&g)?;
                all &= q.isomorphism_search(&s3, cfg.search_budget)?.is_some();
                all &= is_cg(&g).is_cg;
            }
            value(ClaimValue::Bool(all), "U_6n, n = 1..5")
        },
    ));

    claims.push(claim(
        "EX12-cg",
        "Generalized quaternion groups Q_4m are CG-groups",
        "|Cent(Q_4m)| = |Q_4m'| + 2 for m = 2..8",
        "family:generalized_quaternion m=2..8",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            for m in 2..=8 {
                all &= is_cg(&families::generalized_quaternion(m, cfg.order_cap)?).is_cg;
            }
            value(ClaimValue::Bool(all), "m = 2..8")
        },
    ));

    claims.push(claim(
        "EX12-quotient",
        "Q_4m has central quotient D_2m (the Klein group at m = 2)",
        "Q_4m / Z(Q_4m) isomorphic to D_2m for m = 2..6",
        "family:generalized_quaternion m=2..6 vs dihedral",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            for m in 2..=6 {
                let q = families::generalized_quaternion(m, cfg.order_cap)?;
                let quot = quotient_mod_center(&q)?;
                let target = if m == 2 {
                    families::elementary_abelian(2, 2, cfg.order_cap)?
                } else {
                    families::dihedral(m, cfg.order_cap)?
                };
                all &= quot.isomorphism_search(&target, cfg.search_budget)?.is_some();
            }
            value(ClaimValue::Bool(all), "m = 2..6")
        },
    ));

    claims.push(claim(
        "EX3",
        "Groups of order 2^n*m (m > 1 odd) with alpha(G) > 1/2 are CG",
        "alpha(G) = |{x : x^2 = 1}| / |G| > 1/2 and odd part > 1 => CG",
        "catalog<=200 filtered by the hypothesis",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let n = e.group.order();
                    let mut odd = n;
                    while odd % 2 == 0 {
                        odd /= 2;
                    }
                    if odd <= 1 || !involution_stats(&e.group).alpha.exceeds_half() {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "EX5",
        "Semidihedral groups SD16 and SD32 are CG-groups",
        "|Cent(SD_2^n)| = |SD_2^n'| + 2 for n = 4, 5",
        "family:semidihedral n=4,5",
        ClaimValue::Bool(true),
        |cfg| {
            let mut notes = Vec::new();
            let mut all = true;
            for n in [4, 5] {
                let v = is_cg(&families::semidihedral(n, cfg.order_cap)?);
                all &= v.is_cg;
                notes.push(format!("SD{}: {}={}+2", 1 << n, v.cent_count, v.derived_order));
            }
            value(ClaimValue::Bool(all), notes.join("; "))
        },
    ));

    claims.push(claim(
        "EX6",
        "Modular p-groups Mod_n(p) are CG-groups",
        "|Cent(Mod_n(p))| = |Mod_n(p)'| + 2 for (p,n) in {(3,3),(3,4),(2,4)}",
        "family:modular_p (3,3) (3,4) (2,4)",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            for (p, n) in [(3, 3), (3, 4), (2, 4)] {
                all &= is_cg(&families::modular_p(p, n, cfg.order_cap)?).is_cg;
            }
            value(ClaimValue::Bool(all), "(p,n) = (3,3), (3,4), (2,4)")
        },
    ));

    claims.push(claim(
        "EX7",
        "The groups U_6n are CG-groups",
        "|Cent(U_6n)| = |U_6n'| + 2 for n = 1..8",
        "family:u6n n=1..8",
        ClaimValue::Bool(true),
        |cfg| {
            let mut all = true;
            for n in 1..=8 {
                all &= is_cg(&families::u6n(n, cfg.order_cap)?).is_cg;
            }
            value(ClaimValue::Bool(all), "n = 1..8")
        },
    ));

    claims.push(claim(
        "EX9-count",
        "GL(2,q) has exactly q^2+q+2 distinct element centralizers for q > 2",
        "|Cent(GL(2,q))| = q^2 + q + 2 for q = 3, 4, 5",
        "family:gl2 q=3,4,5",
        ClaimValue::Ints(vec![14, 22, 32]),
        |cfg| {
            let mut counts = Vec::new();
            for (p, k) in [(3, 1), (2, 2), (5, 1)] {
                let g = gf::gl2(&field(p, k)?, cfg.order_cap)?;
                counts.push(centralizer_family(&g).count as i64);
            }
            value(ClaimValue::Ints(counts), "q = 3, 4, 5")
        },
    ));

    claims.push(claim(
        "EX9-cg",
        "GL(2,q) is a CG-group exactly when q = 2",
        "CG(GL(2,q)) iff q = 2, checked for q = 2, 3, 4, 5",
        "family:gl2 q=2..5",
        ClaimValue::Bool(true),
        |cfg| {
            let mut ok = is_cg(&gf::gl2(&field(2, 1)?, cfg.order_cap)?).is_cg;
            for (p, k) in [(3, 1), (2, 2), (5, 1)] {
                ok &= !is_cg(&gf::gl2(&field(p, k)?, cfg.order_cap)?).is_cg;
            }
            value(ClaimValue::Bool(ok), "CG at q=2 only")
        },
    ));

    claims.push(claim(
        "EX22-q2",
        "SL(2,2) is a CG-group",
        "|Cent(SL(2,2))| = |SL(2,2)'| + 2",
        "family:sl2 q=2",
        ClaimValue::Bool(true),
        |cfg| value(ClaimValue::Bool(is_cg(&gf::sl2(&field(2, 1)?, cfg.order_cap)?).is_cg), ""),
    ));

    claims.push(claim(
        "EX22-q3",
        "SL(2,3) centralizer count: the claimed CG status predicts 10 (= |Q8|+2); \
         exhaustive enumeration decides",
        "claimed: |Cent(SL(2,3))| = |SL(2,3)'| + 2 = 10",
        "family:sl2 q=3",
        ClaimValue::Int(10),
        |cfg| {
            let g = gf::sl2(&field(3, 1)?, cfg.order_cap)?;
            let v = is_cg(&g);
            value(
                ClaimValue::Int(v.cent_count as i64),
                format!(
                    "enumerated |Cent| = {}, |G'| = {}, CG = {}",
                    v.cent_count, v.derived_order, v.is_cg
                ),
            )
        },
    ));

    claims.push(claim(
        "EX22-q4",
        "SL(2,4) is perfect, hence not a CG-group",
        "SL(2,4)' = SL(2,4) and |Cent| != |SL(2,4)| + 2",
        "family:sl2 q=4",
        ClaimValue::Bool(true),
        |cfg| {
            let g = gf::sl2(&field(2, 2)?, cfg.order_cap)?;
            value(ClaimValue::Bool(is_perfect(&g) && !is_cg(&g).is_cg), "")
        },
    ));

    claims.push(claim(
        "EX22-q5",
        "SL(2,5) is perfect, hence not a CG-group",
        "SL(2,5)' = SL(2,5) and |Cent| != |SL(2,5)| + 2",
        "family:sl2 q=5",
        ClaimValue::Bool(true),
        |cfg| {
            let g = gf::sl2(&field(5, 1)?, cfg.order_cap)?;
            value(ClaimValue::Bool(is_perfect(&g) && !is_cg(&g).is_cg), "")
        },
    ));

    for (id, p, k, q, expected) in [
        ("EX25-q2", 2u64, 1u64, 2u64, 5i64),
        ("EX25-q3", 3, 1, 3, 14),
        ("EX25-q4", 2, 2, 4, 22),
        ("EX25-q5", 5, 1, 5, 57),
        ("EX25-q7", 7, 1, 7, 107),
    ] {
        claims.push(Claim {
            id,
            description: "Centralizer count of PGL(2,q)",
            anchor: "|Cent(PGL(2,q))| = 5, 14, 22 for q = 2, 3, 4; 2q^2+q+2 for odd q > 3",
            builders: "family:pgl2",
            expected: ClaimValue::Int(expected),
            runner: Box::new(move |cfg: &Config| {
                let g = gf::pgl2(&field(p, k)?, cfg.order_cap)?;
                value(
                    ClaimValue::Int(centralizer_family(&g).count as i64),
                    format!("q = {q}, |PGL(2,{q})| = {}", g.order()),
                )
            }),
        });
    }

    claims.push(claim(
        "EX227",
        "PGL(2,q) is a CG-group exactly when q = 2 or 3",
        "CG(PGL(2,q)) iff q in {2, 3}, checked for q = 2, 3, 4, 5",
        "family:pgl2 q=2..5",
        ClaimValue::Bool(true),
        |cfg| {
            let mut ok = true;
            for (p, k, expect_cg) in [(2, 1, true), (3, 1, true), (2, 2, false), (5, 1, false)] {
                let g = gf::pgl2(&field(p, k)?, cfg.order_cap)?;
                ok &= is_cg(&g).is_cg == expect_cg;
            }
            value(ClaimValue::Bool(ok), "CG at q = 2, 3 only")
        },
    ));

    claims.push(claim(
        "EX2223",
        "S5 is not a CG-group: 57 centralizers versus |S5'| + 2 = 62",
        "(|Cent(S5)|, |S5'|) = (57, 60)",
        "family:symmetric n=5",
        ClaimValue::Ints(vec![57, 60]),
        |cfg| {
            let g = families::symmetric(5, cfg.order_cap)?;
            let v = is_cg(&g);
            value(
                ClaimValue::Ints(vec![v.cent_count as i64, v.derived_order as i64]),
                format!("CG = {}", v.is_cg),
            )
        },
    ));

    claims.push(claim(
        "EX228",
        "PSL(2,q) is a CG-group exactly when q = 2 or 3",
        "CG(PSL(2,q)) iff q in {2, 3}, checked for q = 2, 3, 4, 5",
        "family:psl2 q=2..5",
        ClaimValue::Bool(true),
        |cfg| {
            let mut ok = true;
            for (p, k, expect_cg) in [(2, 1, true), (3, 1, true), (2, 2, false), (5, 1, false)] {
                let g = gf::psl2(&field(p, k)?, cfg.order_cap)?;
                ok &= is_cg(&g).is_cg == expect_cg;
            }
            value(ClaimValue::Bool(ok), "CG at q = 2, 3 only")
        },
    ));

    claims.push(claim(
        "CG20",
        "When G' meets Z(G) trivially, G is CG exactly when G/Z(G) is CG",
        "|G' n Z(G)| = 1 => (CG(G) iff CG(G/Z(G)))",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !derived_center_trivial(&e.group) {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    Ok(Some(is_cg(&e.group).is_cg == is_cg(&q).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG22",
        "With all Sylow subgroups abelian, G is CG exactly when G/Z(G) is CG",
        "all Sylow subgroups abelian => (CG(G) iff CG(G/Z(G)))",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !all_sylow_abelian(&e.group)? {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    Ok(Some(is_cg(&e.group).is_cg == is_cg(&q).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "rem144",
        "If |G/Z(G)| is a product of three primes, every proper centralizer is abelian",
        "|G/Z(G)| = pqr (primes, with multiplicity) => G is a CA-group",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let q = e.group.order() / center(&e.group).order();
                    if factor_multiset(q).len() != 3 {
                        return Ok(None);
                    }
                    Ok(Some(analysis::is_ca(&e.group)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "rem1",
        "In a CA-group, distinct proper centralizers intersect exactly in the center",
        "CA(G) => C(x) n C(y) = Z(G) for distinct proper centralizers",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !analysis::is_ca(&e.group) || is_abelian(&e.group) {
                        return Ok(None);
                    }
                    let z = center(&e.group);
                    let fam = centralizer_family(&e.group);
                    let proper: Vec<_> = fam
                        .distinct
                        .iter()
                        .filter(|c| c.order() < e.group.order())
                        .collect();
                    let ok = proper.iter().enumerate().all(|(i, a)| {
                        proper[i + 1..].iter().all(|b| a.intersect(b) == z)
                    });
                    Ok(Some(ok))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG118",
        "If G/Z(G) is perfect then G'Z(G) = G and G is isoclinic to G'",
        "G/Z(G) perfect => G isoclinic to G'",
        "A5, C2 x A5, SL(2,5)",
        ClaimValue::Bool(true),
        |cfg| {
            let a5 = families::alternating(5, cfg.order_cap)?;
            let c2 = families::cyclic(2, cfg.order_cap)?;
            let c2a5 = CayleyGroup::direct_product(&c2, &a5, cfg.order_cap)?;
            let sl25 = gf::sl2(&field(5, 1)?, cfg.order_cap)?;
            let mut ok = true;
            for g in [&a5, &c2a5, &sl25] {
                let q = quotient_mod_center(g)?;
                ok &= is_perfect(&q);
                ok &= isoclinic_to_derived(g, cfg.search_budget)?;
            }
            value(ClaimValue::Bool(ok), "quotients are perfect; certificates verified")
        },
    ));

    claims.push(claim(
        "CG111",
        "Groups with perfect central quotient are never CG",
        "G/Z(G) perfect, |G/Z(G)| > 1 => not CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let q = quotient_mod_center(&e.group)?;
                    if q.order() == 1 || !is_perfect(&q) {
                        return Ok(None);
                    }
                    Ok(Some(!is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG10",
        "With |G'| equal to the smallest prime divisor p, CG holds iff G/Z = C_p x C_p",
        "|G'| = p = min prime divisor of |G| => (CG(G) iff G/Z(G) = C_p x C_p)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let n = e.group.order();
                    if n == 1 {
                        return Ok(None);
                    }
                    let p = *factor_multiset(n).first().unwrap();
                    if commutator_subgroup(&e.group).order() as u64 != p {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    Ok(Some(is_cg(&e.group).is_cg == is_cp_times_cp(&q, p)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG191",
        "Non-abelian metacyclic p-groups (p odd) have omega(G) = (|G'|/p)(1+p)",
        "omega(Mod_n(p)) = (|G'|/p)(1+p) for (p,n) = (3,3), (3,4), (5,3)",
        "family:modular_p (3,3) (3,4) (5,3)",
        ClaimValue::Ints(vec![4, 4, 6]),
        |cfg| {
            let mut omegas = Vec::new();
            let mut notes = Vec::new();
            for (p, n) in [(3u64, 3u64), (3, 4), (5, 3)] {
                let g = families::modular_p(p, n, cfg.order_cap)?;
                let w = omega(&g, cfg.search_budget);
                if !w.exact {
                    return Ok(ClaimComputed::Skipped("omega search budget exhausted".into()));
                }
                let dp = commutator_subgroup(&g).order() as u64;
                notes.push(format!("Mod_{n}({p}): omega={} formula={}", w.value, (dp / p) * (1 + p)));
                omegas.push(w.value as i64);
            }
            value(ClaimValue::Ints(omegas), notes.join("; "))
        },
    ));

    claims.push(claim(
        "CG7-a",
        "Non-abelian groups with an abelian normal subgroup of prime index are CG",
        "abelian normal N <| G, [G:N] prime, G non-abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if is_abelian(&e.group) || abelian_normal_prime_index(&e.group)?.is_none() {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG7-b",
        "Under the same hypothesis, an abelian central quotient is elementary abelian",
        "abelian normal prime-index subgroup and G/Z abelian => G/Z elementary abelian",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if is_abelian(&e.group) || abelian_normal_prime_index(&e.group)?.is_none() {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    if !is_abelian(&q) {
                        return Ok(None);
                    }
                    Ok(Some(is_elementary_abelian_group(&q)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG7-c",
        "Under the same hypothesis, a non-abelian central quotient is CG; for |G/Z| = p^r \
         the centralizer count is p^(r-1) + 2",
        "G/Z non-abelian => CG(G/Z); |G/Z| = p^r => |Cent(G)| = p^(r-1)+2",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if is_abelian(&e.group) || abelian_normal_prime_index(&e.group)?.is_none() {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    if is_abelian(&q) {
                        return Ok(None);
                    }
                    let mut ok = is_cg(&q).is_cg;
                    let factors = factor_multiset(q.order());
                    if factors.windows(2).all(|w| w[0] == w[1]) {
                        let p = factors[0];
                        let r = factors.len() as u32;
                        let expected = p.pow(r - 1) + 2;
                        ok &= centralizer_family(&e.group).count as u64 == expected;
                    }
                    Ok(Some(ok))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG6-a",
        "Minimal non-abelian groups are CG; p-groups have |Cent| = p+2, the rest have \
         |Cent(G)| = |Cent(G/Z)| = |Q|+2 for the normal Sylow subgroup Q (the 'primitive' \
         terminology for that case is not independently checkable)",
        "G minimal non-abelian => CG(G); p-group: |Cent| = p+2; else |Cent(G)| = |Cent(G/Z)| = |Q|+2",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !is_minimal_nonabelian(&e.group) {
                        return Ok(None);
                    }
                    let g = &e.group;
                    let mut ok = is_cg(g).is_cg;
                    let factors = prime_factors(g.order() as u64);
                    let cent = centralizer_family(g).count as u64;
                    if factors.len() == 1 {
                        ok &= cent == factors[0] + 2;
                    } else {
                        // the normal Sylow subgroup
                        let mut q_order = None;
                        for &p in &factors {
                            let s = sylow_subgroup(g, p)?;
                            if g.is_normal(&s) {
                                q_order = Some(s.order() as u64);
                            }
                        }
                        let q_order = q_order.expect("a minimal non-abelian non-p-group has a normal Sylow subgroup");
                        let quot = quotient_mod_center(g)?;
                        ok &= cent == q_order + 2;
                        ok &= centralizer_family(&quot).count as u64 == cent;
                    }
                    Ok(Some(ok))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG6-b",
        "Minimal non-abelian p-groups have central quotient C_p x C_p; otherwise G/Z is CG",
        "G minimal non-abelian p-group => G/Z = C_p x C_p; else CG(G/Z)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !is_minimal_nonabelian(&e.group) {
                        return Ok(None);
                    }
                    let factors = prime_factors(e.group.order() as u64);
                    let q = quotient_mod_center(&e.group)?;
                    let ok = if factors.len() == 1 {
                        is_cp_times_cp(&q, factors[0])
                    } else {
                        is_cg(&q).is_cg
                    };
                    Ok(Some(ok))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG1-a",
        "Minimal Frobenius groups are CG",
        "G Frobenius with no proper Frobenius subgroup => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(d) = decompose(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if d.minimal != Some(true) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG1-b",
        "Frobenius groups with cyclic kernel are CG",
        "G Frobenius, K cyclic => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(d) = decompose(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if !d.kernel_cyclic {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG1-c",
        "For Frobenius groups with abelian complement, CG holds iff G' is abelian",
        "G Frobenius, H abelian => (CG(G) iff G' abelian)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(d) = decompose(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if d.complement.is_none() || !d.complement_abelian {
                        return Ok(None);
                    }
                    let derived = commutator_subgroup(&e.group);
                    Ok(Some(is_cg(&e.group).is_cg == set_is_abelian(&e.group, &derived)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG3",
        "With every non-identity centralizer abelian, CG holds iff G is Frobenius with \
         abelian kernel and cyclic complement",
        "C(x) abelian for all x != 1 => (CG(G) iff Frobenius with abelian K, cyclic H)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let g = &e.group;
                    if is_abelian(g) {
                        return Ok(None);
                    }
                    let all_abelian = (1..g.order() as u16)
                        .all(|x| set_is_abelian(g, &centralizer(g, x)));
                    if !all_abelian {
                        return Ok(None);
                    }
                    let frob = decompose(g, cfg)?
                        .map(|d| d.kernel_abelian && d.complement_cyclic)
                        .unwrap_or(false);
                    Ok(Some(is_cg(g).is_cg == frob))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG4",
        "Non-abelian groups of order pqr (primes with multiplicity) are CG",
        "|G| = pqr, G non-abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if is_abelian(&e.group) || factor_multiset(e.group.order()).len() != 3 {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG5",
        "Non-abelian groups of order p^4 are CG",
        "|G| = p^4, G non-abelian => CG(G)",
        "catalog<=200 (p = 2, 3 occur)",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let f = factor_multiset(e.group.order());
                    if is_abelian(&e.group) || f.len() != 4 || f.windows(2).any(|w| w[0] != w[1]) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "isaacs",
        "For abelian normal A with G/A cyclic, |A| = |G'| |A n Z(G)|",
        "A <| G abelian, G/A cyclic => |A| = |G'| * |A n Z(G)|",
        "catalog<=200, every qualifying (G, A) pair",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let checks = analysis::isaacs_identity_check(&e.group)?;
                    if checks.is_empty() {
                        return Ok(None);
                    }
                    Ok(Some(checks.iter().all(|(_, ok)| *ok)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG17",
        "If G/Z = K/Z x| H/Z is Frobenius with K and H abelian, then G is CG",
        "G/Z Frobenius with abelian lifted kernel and complement => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if !(shape.lifted_kernel_abelian
                        && shape.lifted_complement_abelian == Some(true))
                    {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG17cor",
        "If G/Z is Frobenius with abelian lifted complement and G' is abelian, then G is CG",
        "G/Z Frobenius, H-lift abelian, G' abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if shape.lifted_complement_abelian != Some(true) {
                        return Ok(None);
                    }
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG24",
        "If G/Z is a minimal Frobenius group and G' is abelian, then G is CG",
        "G/Z minimal Frobenius, G' abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if shape.quotient_minimal_frobenius != Some(true) {
                        return Ok(None);
                    }
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG31",
        "If G/Z is Frobenius with cyclic kernel, then G is CG",
        "G/Z Frobenius with cyclic kernel => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if !shape.kernel_bar_cyclic {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG18",
        "If G/Z is Frobenius with abelian lifted kernel and complement, G' meets Z trivially",
        "G/Z Frobenius, K- and H-lifts abelian => |G' n Z(G)| = 1",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if !(shape.lifted_kernel_abelian
                        && shape.lifted_complement_abelian == Some(true))
                    {
                        return Ok(None);
                    }
                    Ok(Some(derived_center_trivial(&e.group)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG181",
        "If G/Z is Frobenius with cyclic kernel, G' meets Z trivially",
        "G/Z Frobenius with cyclic kernel => |G' n Z(G)| = 1",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if !shape.kernel_bar_cyclic {
                        return Ok(None);
                    }
                    Ok(Some(derived_center_trivial(&e.group)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CGcor18",
        "If G/Z is Frobenius with abelian lifted complement and G' abelian, G' meets Z trivially",
        "G/Z Frobenius, H-lift abelian, G' abelian => |G' n Z(G)| = 1",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, cfg| {
                    let Some(shape) = frobenius_quotient_shape(&e.group, cfg)? else {
                        return Ok(None);
                    };
                    if shape.lifted_complement_abelian != Some(true) {
                        return Ok(None);
                    }
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    Ok(Some(derived_center_trivial(&e.group)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG112",
        "If |G'| is prime and G' meets Z(G) trivially, then G is CG",
        "|G'| = p prime, |G' n Z(G)| = 1 => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let derived = commutator_subgroup(&e.group);
                    if !is_prime(derived.order() as u64) || !derived_center_trivial(&e.group) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG11",
        "Groups with |G/Z| = pqr (p < q < r) or p^2 q (p < q) are claimed CG; \
         the q = 3 sub-case assumes an abelian kernel lift, which SL(2,3) violates",
        "|G/Z(G)| = pqr (p<q<r) or p^2 q (p<q) => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let q = e.group.order() / center(&e.group).order();
                    let f = factor_multiset(q);
                    let applies = match f.as_slice() {
                        [a, b, c] => (a < b && b < c) || (a == b && b < c),
                        _ => false,
                    };
                    if !applies {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG14",
        "Groups with |G/Z| = pqr (p < q < r) or pq^2 (p < q) have G' meeting Z trivially",
        "|G/Z(G)| = pqr (p<q<r) or pq^2 (p<q) => |G' n Z(G)| = 1",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let q = e.group.order() / center(&e.group).order();
                    let f = factor_multiset(q);
                    let applies = match f.as_slice() {
                        [a, b, c] => (a < b && b < c) || (a < b && b == c),
                        _ => false,
                    };
                    if !applies {
                        return Ok(None);
                    }
                    Ok(Some(derived_center_trivial(&e.group)))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG15",
        "For |G/Z| = p^3, CG holds iff G has an abelian normal subgroup of prime index",
        "|G/Z(G)| = p^3 => (CG(G) iff abelian normal prime-index subgroup exists)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let q = e.group.order() / center(&e.group).order();
                    let f = factor_multiset(q);
                    if f.len() != 3 || f.windows(2).any(|w| w[0] != w[1]) {
                        return Ok(None);
                    }
                    let has = abelian_normal_prime_index(&e.group)?.is_some();
                    Ok(Some(is_cg(&e.group).is_cg == has))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG9",
        "Solvable non-abelian groups whose non-abelian subgroups are all self-normalizing are CG",
        "G solvable non-abelian, N_G(H) = H for all non-abelian H <= G => CG(G)",
        "catalog<=100 (full subgroup lattice per group)",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let g = &e.group;
                    if g.order() > 100 || is_abelian(g) || !is_solvable(g) {
                        return Ok(None);
                    }
                    if !self_normalizing_nonabelian(g, 100)? {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(g).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG12",
        "For G with central quotient S4, CG holds iff G' is isomorphic to A4",
        "G/Z(G) = S4 => (CG(G) iff G' = A4), on S4 and C2 x S4",
        "S4, C2 x S4",
        ClaimValue::Bool(true),
        |cfg| {
            let s4 = families::symmetric(4, cfg.order_cap)?;
            let a4 = families::alternating(4, cfg.order_cap)?;
            let c2 = families::cyclic(2, cfg.order_cap)?;
            let c2s4 = CayleyGroup::direct_product(&c2, &s4, cfg.order_cap)?;
            let mut ok = true;
            for g in [&s4, &c2s4] {
                let q = quotient_mod_center(g)?;
                ok &= q.isomorphism_search(&s4, cfg.search_budget)?.is_some();
                let (derived_grp, _) = g.subgroup_as_group(&commutator_subgroup(g));
                let derived_is_a4 =
                    derived_grp.isomorphism_search(&a4, cfg.search_budget)?.is_some();
                ok &= is_cg(g).is_cg == derived_is_a4;
                ok &= is_cg(g).is_cg; // both instances sit on the positive side
            }
            value(ClaimValue::Bool(ok), "both directions hold on S4 and C2 x S4")
        },
    ));

    claims.push(claim(
        "CG19-a",
        "Minimal non-nilpotent groups with abelian derived subgroup are CG",
        "G minimal non-nilpotent, G' abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !is_minimal_nonnilpotent(&e.group) {
                        return Ok(None);
                    }
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG19-b",
        "Minimal non-nilpotent groups have CG central quotient",
        "G minimal non-nilpotent => CG(G/Z(G))",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    if !is_minimal_nonnilpotent(&e.group) {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    Ok(Some(is_cg(&q).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG203",
        "If G/Z is minimal non-nilpotent and G' is abelian, then G is CG",
        "G/Z minimal non-nilpotent, G' abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    if !is_minimal_nonnilpotent(&q) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CG23",
        "If G/Z is minimal non-abelian but not a p-group and G' is abelian, then G is CG",
        "G/Z minimal non-abelian, not a p-group, G' abelian => CG(G)",
        "catalog<=200",
        ClaimValue::Bool(true),
        |cfg| {
            over_catalog(
                |e, _| {
                    let derived = commutator_subgroup(&e.group);
                    if !set_is_abelian(&e.group, &derived) {
                        return Ok(None);
                    }
                    let q = quotient_mod_center(&e.group)?;
                    if prime_factors(q.order() as u64).len() < 2 || !is_minimal_nonabelian(&q) {
                        return Ok(None);
                    }
                    Ok(Some(is_cg(&e.group).is_cg))
                },
                cfg,
            )
        },
    ));

    claims.push(claim(
        "CONJ-counterexample",
        "Counterexample to 'equal |Cent| and |G'| imply isoclinism': the non-abelian group \
         of order 27 and exponent 3 matches S3 on both counts but is not isoclinic to it \
         (central quotients have orders 9 and 6)",
        "|Cent(G)| = |Cent(S3)| = 5, |G'| = |S3'| = 3, G not isoclinic to S3",
        "family:heisenberg p=3 vs family:symmetric n=3",
        ClaimValue::Ints(vec![5, 5, 3, 3, 0]),
        |cfg| {
            let h = families::heisenberg(3, cfg.order_cap)?;
            let s3 = families::symmetric(3, cfg.order_cap)?;
            let vh = is_cg(&h);
            let vs = is_cg(&s3);
            let verdict = crate::isoclinism::are_isoclinic(&h, &s3, cfg.search_budget)?;
            let (isoclinic, why) = match &verdict {
                crate::isoclinism::IsoclinismVerdict::Isoclinic(_) => (1i64, "isoclinic".to_string()),
                crate::isoclinism::IsoclinismVerdict::NotIsoclinic(r) => (0, r.to_string()),
            };
            value(
                ClaimValue::Ints(vec![
                    vh.cent_count as i64,
                    vs.cent_count as i64,
                    vh.derived_order as i64,
                    vs.derived_order as i64,
                    isoclinic,
                ]),
                format!("values are [|Cent(G)|, |Cent(S3)|, |G'|, |S3'|, isoclinic]; {why}"),
            )
        },
    ));

    claims
}
