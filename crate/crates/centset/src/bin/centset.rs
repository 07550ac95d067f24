//! Command-line front door: build groups, analyze centralizer structure,
//! run the claims registry, scan the catalog, test isoclinism.
//!
//! Exit codes: 0 = ok (no refuted claims), 2 = some claim refuted,
//! 1 = error.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use centset::analysis;
use centset::catalog::catalog;
use centset::claims::{self, ReportFormat};
use centset::families::{FamilyName, FamilySpec};
use centset::frobenius;
use centset::group::{CayleyGroup, PermGenSpec};
use centset::io;
use centset::isoclinism::{self, IsoclinismVerdict};
use centset::{Config, Error};

#[derive(Parser)]
#[command(
    name = "centset",
    version,
    about = "Finite-group computations over dense Cayley tables"
)]
struct Cli {
    /// Cap on constructed group orders (CENTSET_ORDER_CAP also applies)
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Node budget for backtracking searches
    #[arg(long, global = true)]
    search_budget: Option<u64>,
    /// Order cap for full-subgroup-lattice computations
    #[arg(long, global = true)]
    lattice_cap: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group and emit a centset-group-v1 file
    Build {
        #[command(subcommand)]
        source: BuildSource,
    },
    /// Print the analysis report of a group file
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the distinct element centralizers of a group file
    Cent {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List or run the claims registry
    Claims {
        #[command(subcommand)]
        action: ClaimsAction,
    },
    /// Scan the catalog for groups matching a predicate
    Scan {
        #[arg(long)]
        max_order: usize,
        /// one of: cg, not-cg, frobenius
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Isoclinism verdict for two group files
    Isoclinic {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Frobenius decomposition of a group file
    Frobenius { file: PathBuf },
}

#[derive(Subcommand)]
enum BuildSource {
    /// Build a named family, e.g. `build family dihedral n=8`
    Family {
        name: String,
        /// key=value parameters
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// output form: table or family
        #[arg(long = "as", default_value = "table")]
        form: String,
    },
    /// Build the closure of permutation generators,
    /// e.g. `build perm --degree 4 --gens "(0 1 2 3),(0 1)"`
    Perm {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// output form: table or perm
        #[arg(long = "as", default_value = "table")]
        form: String,
    },
    /// Re-validate an existing group file and emit its canonical table form
    File {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ClaimsAction {
    /// List registry entries (optionally filtered by an id glob)
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run claims; exits 0 (all confirmed/skipped), 2 (refuted), 1 (error)
    Run {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include measured runtimes (off by default so reports are
        /// byte-identical across runs)
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_params(items: &[String]) -> Result<BTreeMap<String, u64>, Error> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::BadParams(format!("expected key=value, got '{item}'")))?;
        let value: u64 = v
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("parameter '{k}' needs an integer, got '{v}'")))?;
        map.insert(k.trim().to_string(), value);
    }
    Ok(map)
}

/// Parses `"(0 1 2 3),(0 1)(2 3)"`: generators separated by top-level
/// commas, each a product of cycles.
fn parse_generators(degree: usize, text: &str) -> Result<Vec<Vec<u16>>, Error> {
    let mut gens = Vec::new();
    for gen_text in text.split(',') {
        let gen_text = gen_text.trim();
        if gen_text.is_empty() {
            continue;
        }
        let mut perm: Vec<u16> = (0..degree as u16).collect();
        let mut rest = gen_text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in '{gen_text}'")))?;
            let close = rest[open..]
                .find(')')
                .map(|i| open + i)
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in '{gen_text}'")))?;
            let cycle: Vec<usize> = rest[open + 1..close]
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point '{t}' in '{gen_text}'"))
                    })
                })
                .collect::<Result<_, _>>()?;
            for &p in &cycle {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
            }
            for w in cycle.windows(2) {
                perm[w[0]] = w[1] as u16;
            }
            if cycle.len() > 1 {
                perm[*cycle.last().unwrap()] = cycle[0] as u16;
            }
            rest = &rest[close + 1..];
        }
        gens.push(perm);
    }
    if gens.is_empty() {
        return Err(Error::InvalidPermutation("no generators given".into()));
    }
    Ok(gens)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn render_analysis_text(name: &str, r: &analysis::AnalysisReport) -> String {
    let omega = match &r.omega {
        Some(w) => format!("{} (exact)", w.value),
        None => "- (outside search domain or budget)".to_string(),
    };
    format!(
        "group        {name}\n\
         order        {}\n\
         |Z(G)|       {}\n\
         |G'|         {}\n\
         |Cent(G)|    {}\n\
         CG           {}\n\
         CA           {}\n\
         perfect      {}\n\
         nilpotent    {}\n\
         solvable     {}\n\
         abelian      {}\n\
         alpha        {}\n\
         omega        {omega}\n\
         flags        minimalNonAbelian={} minimalNonNilpotent={} metacyclic={}\n\
         \x20            allSylowAbelian={} hasAbelianNormalPrimeIndex={} derivedMeetsCenterTrivially={}",
        r.order,
        r.z_order,
        r.derived_order,
        r.cent_count,
        r.is_cg,
        r.is_ca,
        r.is_perfect,
        r.is_nilpotent,
        r.is_solvable,
        r.is_abelian,
        r.alpha,
        r.flags.minimal_non_abelian,
        r.flags.minimal_non_nilpotent,
        r.flags.metacyclic,
        r.flags.all_sylow_abelian,
        r.flags.has_abelian_normal_prime_index,
        r.flags.derived_meets_center_trivially,
    )
}

fn run(cli: Cli) -> Result<i32, Error> {
    let mut config = Config::from_env();
    if let Some(c) = cli.order_cap {
        config.order_cap = c;
    }
    if let Some(b) = cli.search_budget {
        config.search_budget = b;
    }
    if let Some(l) = cli.lattice_cap {
        config.lattice_cap = l;
    }

    match cli.cmd {
        Cmd::Build { source } => {
            match source {
                BuildSource::Family { name, params, out, form } => {
                    let spec = FamilySpec {
                        name: FamilyName::parse(&name)?,
                        params: parse_params(&params)?,
                    };
                    let group = spec.build(config.order_cap)?;
                    let text = match form.as_str() {
                        "table" => io::to_table_json(&group),
                        "family" => io::to_family_json(&group)?,
                        other => return Err(Error::BadParams(format!("unknown output form '{other}'"))),
                    };
                    emit(&text, out.as_ref())?;
                }
                BuildSource::Perm { degree, gens, out, form } => {
                    let spec = PermGenSpec { degree, generators: parse_generators(degree, &gens)? };
                    let group = CayleyGroup::build_from_permutations(&spec, config.order_cap)?;
                    let text = match form.as_str() {
                        "table" => io::to_table_json(&group),
                        "perm" => io::to_permutation_json(&spec),
                        other => return Err(Error::BadParams(format!("unknown output form '{other}'"))),
                    };
                    emit(&text, out.as_ref())?;
                }
                BuildSource::File { path, out } => {
                    let group = io::load_path(&path, &config)?;
                    emit(&io::to_table_json(&group), out.as_ref())?;
                }
            }
            Ok(0)
        }
        Cmd::Analyze { file, json } => {
            let group = io::load_path(&file, &config)?;
            let report = analysis::analyze(&group, &config)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{}", render_analysis_text(&file.display().to_string(), &report));
            }
            Ok(0)
        }
        Cmd::Cent { file, json } => {
            let group = io::load_path(&file, &config)?;
            let fam = analysis::centralizer_family(&group);
            if json {
                let rows: Vec<serde_json::Value> = fam
                    .distinct
                    .iter()
                    .zip(&fam.witness_for)
                    .map(|(c, &w)| {
                        serde_json::json!({
                            "order": c.order(),
                            "witness": w,
                            "witnessLabel": group.label(w),
                            "members": c.iter().collect::<Vec<u16>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "count": fam.count,
                        "centralizers": rows,
                    }))?
                );
            } else {
                println!("|Cent(G)| = {}", fam.count);
                for (c, &w) in fam.distinct.iter().zip(&fam.witness_for) {
                    println!("  order {:4}  witness {} = C({})", c.order(), w, group.label(w));
                }
            }
            Ok(0)
        }
        Cmd::Claims { action } => match action {
            ClaimsAction::List { filter } => {
                for c in claims::list_claims(filter.as_deref()) {
                    println!("{}  {}", c.id, c.description);
                }
                Ok(0)
            }
            ClaimsAction::Run { filter, format, jobs, timings, out } => {
                let fmt = ReportFormat::parse(&format)?;
                let report = claims::run_claims(filter.as_deref(), jobs.max(1), &config);
                let text = claims::render_report(&report, fmt, timings);
                match out {
                    Some(path) => std::fs::write(path, &text)?,
                    None => print!("{text}"),
                }
                Ok(report.exit_code())
            }
        },
        Cmd::Scan { max_order, predicate, format } => {
            let mut rows: Vec<(String, usize, usize, usize, usize)> = Vec::new();
            for entry in catalog() {
                if entry.group.order() > max_order {
                    continue;
                }
                let keep = match predicate.as_str() {
                    "cg" => analysis::is_cg(&entry.group).is_cg,
                    "not-cg" => !analysis::is_cg(&entry.group).is_cg,
                    "frobenius" => frobenius::is_frobenius(&entry.group)?,
                    other => {
                        return Err(Error::BadParams(format!(
                            "unknown predicate '{other}' (expected cg, not-cg or frobenius)"
                        )))
                    }
                };
                if keep {
                    let v = analysis::is_cg(&entry.group);
                    rows.push((
                        entry.name.clone(),
                        entry.group.order(),
                        analysis::center(&entry.group).order(),
                        v.derived_order,
                        v.cent_count,
                    ));
                }
            }
            match format.as_str() {
                "text" => {
                    println!("{:<14} {:>6} {:>6} {:>6} {:>7}", "name", "order", "|Z|", "|G'|", "|Cent|");
                    for (name, order, z, d, c) in &rows {
                        println!("{name:<14} {order:>6} {z:>6} {d:>6} {c:>7}");
                    }
                    println!("{} groups", rows.len());
                }
                "csv" => {
                    println!("name,order,zOrder,derivedOrder,centCount");
                    for (name, order, z, d, c) in &rows {
                        let quoted = if name.contains(',') { format!("\"{name}\"") } else { name.clone() };
                        println!("{quoted},{order},{z},{d},{c}");
                    }
                }
                "json" => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(name, order, z, d, c)| {
                            serde_json::json!({
                                "name": name, "order": order, "zOrder": z,
                                "derivedOrder": d, "centCount": c,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items)?);
                }
                other => return Err(Error::BadParams(format!("unknown format '{other}'"))),
            }
            Ok(0)
        }
        Cmd::Isoclinic { file_a, file_b, json } => {
            let a = io::load_path(&file_a, &config)?;
            let b = io::load_path(&file_b, &config)?;
            let verdict = isoclinism::are_isoclinic(&a, &b, config.search_budget)?;
            match (&verdict, json) {
                (IsoclinismVerdict::Isoclinic(cert), false) => {
                    println!("ISOCLINIC (certificate verified: phi on {} cosets, psi on {} elements)",
                        cert.phi.len(), cert.psi.len());
                }
                (IsoclinismVerdict::NotIsoclinic(reason), false) => {
                    println!("NOT isoclinic ({reason})");
                }
                (_, true) => {
                    let value = match &verdict {
                        IsoclinismVerdict::Isoclinic(cert) => serde_json::json!({
                            "isoclinic": true,
                            "certificate": cert,
                        }),
                        IsoclinismVerdict::NotIsoclinic(reason) => serde_json::json!({
                            "isoclinic": false,
                            "reason": reason.to_string(),
                        }),
                    };
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
            }
            Ok(0)
        }
        Cmd::Frobenius { file } => {
            let group = io::load_path(&file, &config)?;
            match frobenius::decompose(&group, &config)? {
                Some(d) => println!("{}", serde_json::to_string_pretty(&d.to_json())?),
                None => println!("not Frobenius"),
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
