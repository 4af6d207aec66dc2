use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use blocklab::blocks::{block_partition, k0_sigma, render_blocks};
use blocklab::bounds::{class_count_checks, bound_verdict};
use blocklab::chartab::render_table;
use blocklab::cyclicdefect::local_global_report;
use blocklab::harness::{parse_module, parse_spec, render_report, sweep, table_for, GroupSpec, SweepOptions, TableCache};
use blocklab::{Construct, Error};

#[derive(Parser)]
#[command(name = "blocklab", version, about = "Character tables, principal blocks and k0,sigma bounds")]
struct Cli {
    /// Character-table cache directory (defaults to $BLOCKLAB_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group.
    Table { spec: String },
    /// Print the p-blocks with defects and sigma orbits.
    Blocks {
        spec: String,
        #[arg(short)]
        p: u64,
    },
    /// Bound and equality conditions for (G, p).
    Verify {
        spec: String,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exceptional characters and local-global counts for a cyclic Sylow subgroup.
    CyclicDefect {
        spec: String,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Orbit counts of a matrix action on F_p^n.
    Orbits {
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the bound check over a corpus directory of *.grp files.
    Sweep {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Resource(_) => 3,
        Error::Consistency(_) => 2,
        _ => 1,
    }
}

/// A spec file path, or a constructor expression such as `Alt(5)`.
fn load_spec(arg: &str) -> Result<GroupSpec, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        return parse_spec(&std::fs::read_to_string(path)?);
    }
    let c = Construct::parse(arg)?;
    c.validate()?;
    parse_spec(&format!("name {}\nconstruct {c}", arg.replace(char::is_whitespace, "")))
}

fn open_cache(dir: Option<PathBuf>) -> Result<Option<TableCache>, Error> {
    match dir {
        Some(d) => TableCache::open(d).map(Some),
        None => TableCache::from_env(),
    }
}

fn flush_warnings(cache: Option<&TableCache>) {
    if let Some(c) = cache {
        for w in c.take_warnings() {
            eprintln!("warning: {w}");
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn run(cli: Cli) -> Result<u8, Error> {
    let cache = open_cache(cli.cache)?;
    let table_of = |spec: &GroupSpec| {
        let g = spec.build()?;
        let t = table_for(spec, &g, cache.as_ref());
        flush_warnings(cache.as_ref());
        t
    };
    match cli.command {
        Command::Table { spec } => {
            let spec = load_spec(&spec)?;
            print!("{}", render_table(&table_of(&spec)?, &spec.name));
            Ok(0)
        }
        Command::Blocks { spec, p } => {
            let spec = load_spec(&spec)?;
            let t = table_of(&spec)?;
            let b = block_partition(&t, p)?;
            print!("{}", render_blocks(&t, &b)?);
            let k = k0_sigma(&t, p)?;
            println!("k0s(B0) = {}{}", k.count, if k.degenerate { " (p does not divide |G|)" } else { "" });
            Ok(0)
        }
        Command::Verify { spec, p, json } => {
            let spec = load_spec(&spec)?;
            let r = bound_verdict(&spec.name, &table_of(&spec)?, p)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                println!("{}", render_report(&r));
            }
            Ok(if r.consistent && r.inequality_holds { 0 } else { 2 })
        }
        Command::CyclicDefect { spec, p, json } => {
            let spec = load_spec(&spec)?;
            let r = local_global_report(&table_of(&spec)?, p, 0)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                println!(
                    "{} p={} |P|={} e={} block {}={} k0s {}={} ex {} nex {}",
                    spec.name,
                    p,
                    r.sylow_order,
                    r.inertial_index,
                    r.global.block_size,
                    r.local.block_size,
                    r.global.k0_sigma,
                    r.local.k0_sigma,
                    r.global.ex,
                    r.global.nex
                );
                for (k, chi) in &r.labels {
                    println!("  label {k} -> X.{chi}");
                }
                println!("{}", if r.consistent { "consistent" } else { "INCONSISTENT" });
            }
            Ok(if r.consistent { 0 } else { 2 })
        }
        Command::Orbits { module, json } => {
            let m = parse_module(&std::fs::read_to_string(&module)?)?;
            let orbits = m.orbit_count()?;
            let h = m.linear_group()?.order();
            let (g, v) = m.affine_group()?;
            let s = class_count_checks(&g, &v, m.p);
            let lower = u128::from(orbits) * h >= u128::from(m.vector_count()?);
            if json {
                let value = serde_json::json!({
                    "p": m.p,
                    "dim": m.dim,
                    "orbits": orbits,
                    "nonzero_orbits": orbits - 1,
                    "acting_order": h.to_string(),
                    "orbit_lower_bound": lower,
                    "affine": s.as_ref().ok(),
                });
                println!("{}", to_json(&value));
            } else {
                println!("p={} dim={} |H|={} orbits={} nonzero={}", m.p, m.dim, h, orbits, orbits - 1);
                println!("n(H,V)*|H| >= |V|: {lower}");
                match &s {
                    Ok(r) => println!(
                        "affine group order {}: k(G)={} k(G/V)={} n(G,V)={} k(G)+1>=k(G/V)+n(G,V) {} rank bound {:?}",
                        r.group_order, r.class_count, r.quotient_class_count, r.orbits_on_v, r.class_count_inequality, r.rank_two_bound
                    ),
                    Err(e) => println!("affine checks skipped: {e}"),
                }
            }
            let holds = lower && s.as_ref().map_or(true, |r| r.holds());
            Ok(if holds { 0 } else { 2 })
        }
        Command::Sweep {
            corpus,
            max_order,
            prime,
            jobs,
            json,
        } => {
            let options = SweepOptions { max_order, prime, jobs };
            let result = sweep(&corpus, &options, cache.as_ref())?;
            flush_warnings(cache.as_ref());
            if json {
                print!("{}", result.to_json());
            } else {
                print!("{}", result.to_text());
            }
            if let Some(c) = &cache {
                let s = c.stats();
                eprintln!("cache: {} hits, {} misses, {} corrupt", s.hits, s.misses, s.corrupt);
            }
            Ok(result.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
