//! Command-line front end: build groups and monoids, reproduce the summary
//! statistics and the Cartan/decomposition tables, export DOT/JSON/CSV, and
//! run the structural property suites.

mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use bihecke::blocks::{blocks_json, cutting_poset};
use bihecke::coxeter::{CoxeterGroup, Descriptor, ElementId};
use bihecke::fmonoid::{bihecke, borel, green, BorelAnchor, TransformationMonoid};
use bihecke::reptheory::{
    bihecke_cartan_pipeline, borel_cartan_pipeline, cartan_borel, decomposition_matrix,
    dim_simple, table1_row, table_order,
};
use bihecke::verify::run_standard_suite;

#[derive(Parser)]
#[command(name = "bihecke", version, about = "Finite Coxeter groups, their biHecke monoids, and exact representation theory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format (not every command supports every format).
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Cap on enumerated elements (groups and monoid closures).
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_elements: u128,
    /// Allow the slow computations (the A3-sized monoid q-Cartan).
    #[arg(long, global = true)]
    slow: bool,
    /// Modular linear algebra (three fixed 62-bit primes, cross-checked).
    #[arg(long, global = true)]
    modular: bool,
    /// Worker threads for monoid closures (results are identical for any N).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Monoid cache directory (also via BIHECKE_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Csv,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MonoidKind {
    /// The full biHecke monoid M(W).
    Bihecke,
    /// The Borel submonoid fixing the identity.
    M1,
    /// The Borel submonoid fixing w0.
    Mw0,
}

impl MonoidKind {
    fn label(self) -> &'static str {
        match self {
            MonoidKind::Bihecke => "bihecke",
            MonoidKind::M1 => "m1",
            MonoidKind::Mw0 => "mw0",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a Coxeter group and print its element table summary.
    Group { descriptor: String },
    /// Close a monoid and print its census; uses the cache when configured.
    Monoid {
        descriptor: String,
        #[arg(long, value_enum, default_value_t = MonoidKind::Bihecke)]
        kind: MonoidKind,
        /// Stream the closure, keeping only fingerprints (prints the size only).
        #[arg(long)]
        count_only: bool,
    },
    /// Blocks and cutting points of one element (or of every element).
    Blocks {
        descriptor: String,
        /// Element label (one-line word in type A, reduced word otherwise).
        element: Option<String>,
    },
    /// The cutting poset of the group.
    CuttingPoset { descriptor: String },
    /// Dimensions of the simple modules of the biHecke monoid.
    Simples { descriptor: String },
    /// Counting Cartan matrix (q = 1) of a Borel submonoid.
    Cartan {
        descriptor: String,
        #[arg(long, value_enum, default_value_t = MonoidKind::Mw0)]
        monoid: MonoidKind,
    },
    /// Graded (q-)Cartan matrix of a Borel submonoid or of the full monoid.
    Qcartan {
        descriptor: String,
        #[arg(long, value_enum, default_value_t = MonoidKind::Mw0)]
        monoid: MonoidKind,
    },
    /// Decomposition matrix of the biHecke monoid over its w0-Borel.
    Decomposition { descriptor: String },
    /// Summary statistics rows: |W|, |Mw0|, |M|, simple dims, their sum.
    Table1 { descriptors: Vec<String> },
    /// Run the structural property suites for a group; nonzero exit on failure.
    Check { descriptor: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // the closure commits per level after sorting, so any thread count
        // produces identical artifacts
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn build_group(cli: &Cli, s: &str) -> Result<CoxeterGroup> {
    let d = Descriptor::parse(s)?;
    Ok(CoxeterGroup::build_capped(&d, cli.max_elements)?)
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os("BIHECKE_CACHE_DIR").map(PathBuf::from))
}

/// Build (or load from cache) the requested monoid.
fn build_monoid(cli: &Cli, g: &CoxeterGroup, kind: MonoidKind) -> Result<TransformationMonoid> {
    let descriptor = g.descriptor().label();
    let path = cache_dir(cli).map(|d| cache::cache_path(&d, &descriptor, kind.label()));
    if let Some(p) = &path {
        if p.exists() {
            let (labels, elements) = cache::load(p, &descriptor, g.order())?;
            let gen_fns: Vec<bihecke::fmonoid::WFunction> = match kind {
                MonoidKind::Bihecke => (0..g.rank())
                    .map(|i| bihecke::fmonoid::pi(g, i))
                    .chain((0..g.rank()).map(|i| bihecke::fmonoid::opi(g, i)))
                    .collect(),
                MonoidKind::M1 => g.all().map(|w| bihecke::fmonoid::e_w(g, w)).collect(),
                MonoidKind::Mw0 => g.all().map(|w| bihecke::fmonoid::e_tilde(g, w)).collect(),
            };
            return Ok(TransformationMonoid::from_elements(labels, gen_fns, elements)?);
        }
    }
    let m = match kind {
        MonoidKind::Bihecke => bihecke(g, cli.max_elements)?,
        MonoidKind::M1 => borel(g, BorelAnchor::Identity, cli.max_elements)?,
        MonoidKind::Mw0 => borel(g, BorelAnchor::W0, cli.max_elements)?,
    };
    if let Some(p) = &path {
        cache::save(p, &descriptor, g.order(), &m)?;
    }
    Ok(m)
}

fn element_by_label(g: &CoxeterGroup, s: &str) -> Result<ElementId> {
    g.all()
        .find(|&w| g.label(w) == s)
        .ok_or_else(|| anyhow!("no element labeled {s} in {}", g.descriptor().label()))
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Group { descriptor } => {
            let g = build_group(cli, descriptor)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&g.dump_json())?),
                _ => {
                    println!(
                        "group {}: order {}, rank {}, points {}",
                        g.descriptor().label(),
                        g.order(),
                        g.rank(),
                        g.point_count()
                    );
                    println!(
                        "longest element {} of length {}",
                        g.label(g.w0()),
                        g.length(g.w0())
                    );
                }
            }
            Ok(())
        }
        Cmd::Monoid { descriptor, kind, count_only } => {
            let g = build_group(cli, descriptor)?;
            if *count_only {
                let gens: Vec<_> = match kind {
                    MonoidKind::Bihecke => (0..g.rank())
                        .map(|i| bihecke::fmonoid::pi(&g, i))
                        .chain((0..g.rank()).map(|i| bihecke::fmonoid::opi(&g, i)))
                        .collect(),
                    MonoidKind::M1 => g.all().map(|w| bihecke::fmonoid::e_w(&g, w)).collect(),
                    MonoidKind::Mw0 => g.all().map(|w| bihecke::fmonoid::e_tilde(&g, w)).collect(),
                };
                let n = TransformationMonoid::closure_count_only(&gens, cli.max_elements)?;
                println!("monoid {}({}): {} elements (count-only)", kind.label(), descriptor, n);
                return Ok(());
            }
            let m = build_monoid(cli, &g, *kind)?;
            let gs = green(&m);
            let idem = m.idempotents().len();
            let regular = gs.regular.iter().filter(|&&r| r).count();
            match cli.format {
                Format::Json => {
                    let census: Vec<_> = gs
                        .eggbox_census()
                        .into_iter()
                        .map(|(s, r, l)| serde_json::json!({"size": s, "r_classes": r, "l_classes": l}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "descriptor": g.descriptor().label(),
                            "kind": kind.label(),
                            "elements": m.len(),
                            "generators": m.gen_count(),
                            "idempotents": idem,
                            "j_classes": gs.n_j,
                            "regular_j_classes": regular,
                            "j_class_census": census,
                        }))?
                    );
                }
                _ => {
                    println!(
                        "monoid {}({}): {} elements, {} generators, {} idempotents",
                        kind.label(),
                        descriptor,
                        m.len(),
                        m.gen_count(),
                        idem
                    );
                    println!("J-classes: {} ({} regular)", gs.n_j, regular);
                }
            }
            Ok(())
        }
        Cmd::Blocks { descriptor, element } => {
            let g = build_group(cli, descriptor)?;
            let which: Vec<ElementId> = match element {
                Some(s) => vec![element_by_label(&g, s)?],
                None => table_order(&g),
            };
            match cli.format {
                Format::Json => {
                    let items: Vec<_> = which.iter().map(|&w| blocks_json(&g, w)).collect();
                    println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(items))?);
                }
                _ => {
                    for &w in &which {
                        let bs = bihecke::blocks::all_blocks(&g, w);
                        println!("element {} ({} blocks):", g.label(w), bs.len());
                        for b in bs {
                            println!(
                                "  K={} J={} cutting point {}{}{}",
                                b.k.display(),
                                b.j.display(),
                                g.label(b.cutting_point),
                                if b.reduced { " reduced" } else { "" },
                                if b.trivial { " trivial" } else { "" },
                            );
                        }
                    }
                }
            }
            Ok(())
        }
        Cmd::CuttingPoset { descriptor } => {
            let g = build_group(cli, descriptor)?;
            let cp = cutting_poset(&g);
            match cli.format {
                Format::Dot => print!("{}", cp.poset.to_dot(&format!("cutting poset {}", g.descriptor().label()), None)),
                Format::Json => {
                    let covers: Vec<_> = cp
                        .poset
                        .cover_edges()
                        .map(|(x, y)| {
                            serde_json::json!([cp.poset.label(x), cp.poset.label(y)])
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "descriptor": g.descriptor().label(),
                            "elements": g.order(),
                            "covers": covers,
                        }))?
                    );
                }
                _ => {
                    println!("cutting poset of {} ({} elements)", g.descriptor().label(), g.order());
                    let mut edges: Vec<(String, String)> = cp
                        .poset
                        .cover_edges()
                        .map(|(x, y)| (cp.poset.label(x).to_string(), cp.poset.label(y).to_string()))
                        .collect();
                    edges.sort();
                    for (a, b) in edges {
                        println!("  {a} < {b}");
                    }
                }
            }
            Ok(())
        }
        Cmd::Simples { descriptor } => {
            let g = build_group(cli, descriptor)?;
            let cp = cutting_poset(&g);
            let order = table_order(&g);
            let dims: Vec<(String, usize)> =
                order.iter().map(|&w| (g.label(w), dim_simple(&g, &cp, w))).collect();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "descriptor": g.descriptor().label(),
                        "dims": dims.iter().map(|(l, d)| serde_json::json!([l, d])).collect::<Vec<_>>(),
                    }))?
                ),
                Format::Csv => {
                    println!("# simple-module dimensions of M({})", g.descriptor().label());
                    println!("label,dim");
                    for (l, d) in &dims {
                        println!("{l},{d}");
                    }
                }
                _ => {
                    for (l, d) in &dims {
                        println!("{l} {d}");
                    }
                    let mut mult = std::collections::BTreeMap::new();
                    for (_, d) in &dims {
                        *mult.entry(*d).or_insert(0usize) += 1;
                    }
                    let parts: Vec<String> =
                        mult.iter().map(|(d, m)| format!("{d}^{m}")).collect();
                    println!(
                        "multiset {} sum {}",
                        parts.join(" "),
                        dims.iter().map(|(_, d)| d).sum::<usize>()
                    );
                }
            }
            Ok(())
        }
        Cmd::Cartan { descriptor, monoid } => {
            let g = build_group(cli, descriptor)?;
            let (anchor, kind) = match monoid {
                MonoidKind::M1 => (BorelAnchor::Identity, MonoidKind::M1),
                MonoidKind::Mw0 => (BorelAnchor::W0, MonoidKind::Mw0),
                MonoidKind::Bihecke => bail!("counting Cartan is available for the Borel submonoids; use qcartan for the full monoid"),
            };
            let b = build_monoid(cli, &g, kind)?;
            let c = cartan_borel(&g, &b, anchor)?;
            let header = format!(
                "Cartan matrix (q=1) of {}({}); rows = lfix, cols = rfix; {}",
                kind.label(),
                g.descriptor().label(),
                render::order_note(&g)
            );
            render::print_integer_matrix(cli_format(cli), &g, &header, &c, None);
            Ok(())
        }
        Cmd::Qcartan { descriptor, monoid } => {
            let g = build_group(cli, descriptor)?;
            match monoid {
                MonoidKind::Bihecke => {
                    let m = build_monoid(cli, &g, MonoidKind::Bihecke)?;
                    if m.len() > 100 && !cli.slow {
                        bail!(
                            "monoid has {} elements; pass --slow (and preferably --modular) to compute its q-Cartan",
                            m.len()
                        );
                    }
                    let cap = if cli.modular { 2000 } else { 600 };
                    let cp = cutting_poset(&g);
                    if m.len() > 100 {
                        // progress goes to the error stream; stdout stays machine-parseable
                        eprintln!(
                            "computing the q-Cartan matrix of a {}-element monoid algebra ({})...",
                            m.len(),
                            if cli.modular { "modular, three primes" } else { "exact rationals" }
                        );
                    }
                    let c = bihecke_cartan_pipeline(&g, &cp, &m, cli.modular, cap)?;
                    let dims: Vec<i64> =
                        g.all().map(|w| dim_simple(&g, &cp, w) as i64).collect();
                    let header = format!(
                        "q-Cartan matrix of the biHecke monoid M({}); rows = projectives, cols = simples; {}",
                        g.descriptor().label(),
                        render::order_note(&g)
                    );
                    render::print_qpoly_matrix(cli_format(cli), &g, &header, &c, Some(&dims));
                }
                kind => {
                    let b = build_monoid(cli, &g, *kind)?;
                    let c = borel_cartan_pipeline(&g, &b, if cli.slow { 2000 } else { 600 })?;
                    let header = format!(
                        "q-Cartan matrix of {}({}); rows = projectives, cols = simples; {}",
                        kind.label(),
                        g.descriptor().label(),
                        render::order_note(&g)
                    );
                    render::print_qpoly_matrix(cli_format(cli), &g, &header, &c, None);
                }
            }
            Ok(())
        }
        Cmd::Decomposition { descriptor } => {
            let g = build_group(cli, descriptor)?;
            let cp = cutting_poset(&g);
            let d = decomposition_matrix(&g, &cp);
            let header = format!(
                "decomposition matrix of M({0}) over mw0({0}); rows = M-simples, cols = Borel simples; {1}",
                g.descriptor().label(),
                render::order_note(&g)
            );
            let dims: Vec<i64> = g.all().map(|w| dim_simple(&g, &cp, w) as i64).collect();
            render::print_integer_matrix(cli_format(cli), &g, &header, &d, Some(&dims));
            Ok(())
        }
        Cmd::Table1 { descriptors } => {
            if descriptors.is_empty() {
                bail!("table1 needs at least one group descriptor");
            }
            for s in descriptors {
                let g = build_group(cli, s)?;
                let row = table1_row(&g, cli.max_elements)?;
                match cli.format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "descriptor": row.label,
                            "group_order": row.group_order,
                            "borel_order": row.borel_order,
                            "monoid_order": row.monoid_order,
                            "simple_dims": row.dim_multiset,
                            "dim_sum": row.dim_sum,
                        })
                    ),
                    _ => println!("{}", row.render()),
                }
            }
            Ok(())
        }
        Cmd::Check { descriptor } => {
            let g = build_group(cli, descriptor)?;
            let results = run_standard_suite(&g, cli.max_elements);
            let mut failed = 0;
            for r in &results {
                if r.ok {
                    println!("PASS {}", r.name);
                } else {
                    println!("FAIL {} — {}", r.name, r.detail);
                    failed += 1;
                }
            }
            println!("{} checks, {} failed", results.len(), failed);
            if failed > 0 {
                bail!("{failed} checks failed");
            }
            Ok(())
        }
    }
}

fn cli_format(cli: &Cli) -> render::MatrixFormat {
    match cli.format {
        Format::Csv => render::MatrixFormat::Csv,
        Format::Json => render::MatrixFormat::Json,
        _ => render::MatrixFormat::Human,
    }
}
