//! Regenerates the catalog files under `crates/core/data` by search.
//!
//! Each subcommand prints a JSON array (one record per line) on stdout.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use hadamard::constructions::{od_from_circulants, search_good, search_skew_od, search_williamson};
use hadamard::diffsets::search_orbit_sds;
use hadamard::seqfam::{search_turyn, search_turyn_type, SequenceCatalog};

#[derive(Parser)]
#[command(about = "Search for catalog records")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
    /// Candidate budget per search.
    #[arg(long, default_value_t = u64::MAX, global = true)]
    budget: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Turyn sequences of the given lengths and Turyn-type sequences of the given lengths.
    Sequences {
        #[arg(long, value_delimiter = ',')]
        turyn: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        turyn_type: Vec<usize>,
    },
    /// Williamson matrices of the given odd orders.
    Williamson {
        #[arg(value_delimiter = ',')]
        orders: Vec<usize>,
    },
    /// Good matrices of the given odd orders.
    Good {
        #[arg(value_delimiter = ',')]
        orders: Vec<usize>,
    },
    /// Orbit-union SDS over cyclic groups.
    Sds {
        #[arg(long)]
        skew: bool,
        #[arg(value_delimiter = ',')]
        orders: Vec<u32>,
    },
    /// OD(4; 1, 1, 2) by exhaustive search and OD(4t; 1, 1, 4t - 2) from circulants.
    Designs {
        #[arg(value_delimiter = ',')]
        t: Vec<usize>,
    },
}

fn emit(records: Vec<String>) {
    println!("[\n  {}\n]", records.join(",\n  "));
}

fn note(what: impl std::fmt::Display, start: Instant) {
    eprintln!("{what} ({:.1?})", start.elapsed());
}

fn main() -> Result<()> {
    let args = Args::parse();
    let budget = args.budget;
    let mut out = Vec::new();
    match args.cmd {
        Cmd::Sequences { turyn, turyn_type } => {
            let mut cat = SequenceCatalog::default();
            for l in turyn {
                let start = Instant::now();
                match search_turyn(l, budget)? {
                    Some(f) => cat.add(f)?,
                    None => eprintln!("no Turyn sequences of length {l}"),
                }
                note(format!("turyn {l}"), start);
            }
            for n in turyn_type {
                let start = Instant::now();
                match search_turyn_type(n, budget)? {
                    Some(f) => cat.add(f)?,
                    None => eprintln!("no Turyn-type sequences of length {n}"),
                }
                note(format!("turyn-type {n}"), start);
            }
            print!("{}", cat.to_json());
            return Ok(());
        }
        Cmd::Williamson { orders } => {
            for n in orders {
                let start = Instant::now();
                let q = search_williamson(n, budget)?.with_context(|| format!("no Williamson quad of order {n}"))?;
                out.push(serde_json::to_string(&q)?);
                note(format!("williamson {n}"), start);
            }
        }
        Cmd::Good { orders } => {
            for n in orders {
                let start = Instant::now();
                let q = search_good(n, budget)?.with_context(|| format!("no good matrices of order {n}"))?;
                out.push(serde_json::to_string(&q)?);
                note(format!("good {n}"), start);
            }
        }
        Cmd::Sds { skew, orders } => {
            for n in orders {
                let start = Instant::now();
                match search_orbit_sds(n, skew, budget)? {
                    Some(rec) => out.push(serde_json::to_string(&rec)?),
                    None => eprintln!("no orbit SDS for n = {n}"),
                }
                note(format!("sds {n}"), start);
            }
        }
        Cmd::Designs { t } => {
            let start = Instant::now();
            let Some(d) = search_skew_od(4, &[1, 1, 2], budget)? else {
                bail!("no OD(4; 1, 1, 2) found");
            };
            out.push(serde_json::to_string(&d)?);
            note("OD(4; 1, 1, 2)", start);
            for t in t {
                let start = Instant::now();
                let d = od_from_circulants(t)?;
                out.push(serde_json::to_string(&d)?);
                note(d.name(), start);
            }
        }
    }
    emit(out);
    Ok(())
}
