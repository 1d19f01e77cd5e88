use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dyck_syzygy::enumerate::default_kac_bound;
use dyck_syzygy::render::render_svg;
use dyck_syzygy::{
    betti_json, enumerate_kac_patterns, enumerate_syzygy_patterns, general_ideal_terms, homology_classes_with,
    BettiTable, HilbertCalculator, Partition, PatternFamily, CACHE_ENV,
};
use serde_json::json;

mod checks;

use checks::Suite;

pub(crate) const REFERENCE_BETTI_32: &str = include_str!("../tests/golden/betti_3_2.txt");

#[derive(Parser, Debug)]
#[command(name = "dyck-syzygy", version, about = "Dyck patterns, Kac-module composition factors and Betti tables of GL-invariant ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Hilbert-series cache file.
    #[arg(long, global = true, env = CACHE_ENV, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Compute everything from scratch without reading or writing a cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,

    /// Report timing and cache use on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Syzygy patterns `𝒜(λ;n)`.
    Syzygy,
    /// Composition-factor patterns `𝒦(λ;n)`.
    Kac,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Composition factors of the Kac module `K_λ`.
    Kac {
        lambda: Partition,
        #[arg(long)]
        n: usize,
        /// Largest Dyck size to enumerate (default n²).
        #[arg(long)]
        size_bound: Option<u32>,
    },
    /// Homology classes of the BGG complex of `I_λ`, strand by strand.
    Syzygy {
        lambda: Partition,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Only the strand with this bullet size.
        #[arg(long)]
        b: Option<u32>,
    },
    /// Betti table of `I_λ`.
    Betti {
        lambda: Partition,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Draw patterns as SVG, one file each.
    Render {
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Family::Syzygy)]
        family: Family,
        /// Only patterns with this bullet size.
        #[arg(long)]
        b: Option<u32>,
        /// Only the pattern with this label.
        #[arg(long)]
        label: Option<Partition>,
        /// Largest Dyck size for the Kac family (default n²).
        #[arg(long)]
        size_bound: Option<u32>,
        /// Output directory.
        #[arg(long, short, default_value = ".")]
        out: PathBuf,
    },
    /// Run the oracle suites and print a TAP report.
    Check {
        /// Run every suite.
        #[arg(long)]
        all: bool,
        #[arg(value_enum)]
        suites: Vec<Suite>,
    },
    /// Inclusion-exclusion terms for the ideal `I_λ1 + … + I_λk`.
    General {
        #[arg(required = true)]
        lambdas: Vec<Partition>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn check_dims(m: u32, n: u32) -> Result<()> {
    if n > m {
        bail!("--n {n} exceeds --m {m}; the matrices are m × n with m ≥ n");
    }
    Ok(())
}

fn default_cache_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("dyck-syzygy").join("series.jsonl"))
}

fn calculator(cli: &Cli) -> Result<HilbertCalculator> {
    if cli.no_cache {
        return Ok(HilbertCalculator::new());
    }
    match cli.cache.clone().or_else(default_cache_path) {
        Some(path) => {
            let calc = HilbertCalculator::with_cache(&path)?;
            if cli.verbose > 0 {
                eprintln!("cache {}: {} series loaded", path.display(), calc.memo_len());
            }
            Ok(calc)
        }
        None => Ok(HilbertCalculator::new()),
    }
}

fn configure_threads(jobs: Option<usize>) -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Some(k) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .context("configuring the thread pool")?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    Ok(())
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    configure_threads(cli.jobs)?;
    let started = std::time::Instant::now();
    if cli.format == Format::Svg && !matches!(cli.command, Command::Render { .. }) {
        bail!("--format svg is only available for render");
    }
    let ok = match &cli.command {
        Command::Kac { lambda, n, size_bound } => {
            let bound = size_bound.unwrap_or_else(|| default_kac_bound(*n));
            let family = enumerate_kac_patterns(lambda, *n, bound)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "lambda": lambda,
                    "n": n,
                    "size_bound": bound,
                    "family": family,
                }))?,
                _ => print_kac(&family),
            }
            true
        }
        Command::Syzygy { lambda, m, n, b } => {
            check_dims(*m, *n)?;
            let calc = calculator(cli)?;
            let mut result = homology_classes_with(&calc, lambda, *m, *n)?;
            if let Some(b) = b {
                result = result.restrict(*b);
            }
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&result)?)?,
                _ => {
                    println!("H(I_{lambda}) for m = {m}, n = {n}");
                    for (b, members) in &result.strands {
                        println!("strand b={b} (homological degree {}):", lambda.size() + b);
                        for mem in members {
                            println!("  {}  d={}  {}", mem.label, mem.d, mem.pattern);
                            println!("    HS = {}", mem.series);
                        }
                    }
                }
            }
            true
        }
        Command::Betti { lambda, m, n } => {
            check_dims(*m, *n)?;
            let calc = calculator(cli)?;
            let result = homology_classes_with(&calc, lambda, *m, *n)?;
            let table = BettiTable::from_homology(&result);
            match cli.format {
                Format::Json => print_json(&betti_json(&result, &table))?,
                _ => print!("{}", table.to_text()),
            }
            true
        }
        Command::Render {
            lambda,
            n,
            family,
            b,
            label,
            size_bound,
            out,
        } => {
            let family = match family {
                Family::Syzygy => enumerate_syzygy_patterns(lambda, *n)?,
                Family::Kac => enumerate_kac_patterns(lambda, *n, size_bound.unwrap_or_else(|| default_kac_bound(*n)))?,
            };
            let written = render_family(&family, *b, label.as_ref(), out)?;
            match cli.format {
                Format::Json => print_json(&json!(written))?,
                _ => {
                    for path in &written {
                        println!("{}", path.display());
                    }
                }
            }
            true
        }
        Command::Check { all, suites } => {
            let suites: Vec<Suite> = if *all || suites.is_empty() {
                Suite::value_variants().to_vec()
            } else {
                suites.clone()
            };
            let outcomes: Vec<checks::Outcome> = suites.into_iter().flat_map(checks::run).collect();
            let passed = outcomes.iter().all(|o| o.ok);
            match cli.format {
                Format::Json => print_json(&json!(outcomes
                    .iter()
                    .map(|o| json!({"name": o.name, "ok": o.ok, "detail": o.detail}))
                    .collect::<Vec<_>>()))?,
                _ => print_tap(&outcomes),
            }
            passed
        }
        Command::General { lambdas } => {
            let terms = general_ideal_terms(lambdas)?;
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&terms)?)?,
                _ => {
                    for t in &terms {
                        let subset: Vec<String> = t.subset.iter().map(usize::to_string).collect();
                        let sign = if t.sign > 0 { '+' } else { '-' };
                        println!("{sign} {}  {{{}}}", t.union, subset.join(","));
                    }
                }
            }
            true
        }
    };
    if cli.verbose > 0 {
        eprintln!("done in {:.3?}", started.elapsed());
    }
    Ok(ok)
}

fn print_kac(family: &PatternFamily) {
    println!(
        "K_{} for n = {}: {} composition factors",
        family.base,
        family.n,
        family.len()
    );
    for mem in &family.members {
        println!("  {}  d={}  {}", mem.label, mem.d, mem.pattern);
    }
    for (label, k) in family.repeated_labels() {
        println!("  note: label {label} occurs {k} times");
    }
}

fn print_tap(outcomes: &[checks::Outcome]) {
    println!("TAP version 13");
    println!("1..{}", outcomes.len());
    for (i, o) in outcomes.iter().enumerate() {
        let status = if o.ok { "ok" } else { "not ok" };
        println!("{status} {} - {}", i + 1, o.name);
        if !o.ok && !o.detail.is_empty() {
            for line in o.detail.lines() {
                println!("  # {line}");
            }
        }
    }
    let failed = outcomes.iter().filter(|o| !o.ok).count();
    println!("# pass {}", outcomes.len() - failed);
    println!("# fail {failed}");
}

fn render_family(family: &PatternFamily, b: Option<u32>, label: Option<&Partition>, out: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let members: Vec<_> = family
        .members
        .iter()
        .filter(|m| b.is_none_or(|b| m.b == b))
        .filter(|m| label.is_none_or(|l| &m.label == l))
        .collect();
    // the initial search region, columns 1..=λ₁+2n and rows 1..=n; render_svg
    // widens it for members that reach further
    let cols = family.base.part(1) + 2 * family.n as u32;
    let rows = family.n as u32;
    let stem = family.base.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("-");
    let stem = if stem.is_empty() { "empty".to_string() } else { stem };
    let mut written = Vec::new();
    for (i, m) in members.iter().enumerate() {
        let name = format!("{stem}_{:02}_b{}.svg", i + 1, m.b);
        let path = out.join(name);
        std::fs::write(&path, render_svg(&family.base, &m.pattern, cols, rows))
            .with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}
